//! Generated monomial tables for the symmetry-determining functions and the
//! per-class reduced constraint systems.
//!
//! Every entry is a single monomial `c * prod_i f^(i)^fp[i] * prod_j g^(j)^gp[j]`
//! where `f^(i)` is the i-th derivative of the stiffness profile and `g^(j)` the
//! j-th derivative of the auxiliary map, with exact rational coefficients produced
//! by symbolic elimination.  Do not edit by hand; the companion fixtures file pins
//! exact values at integer jets.

/// One monomial of a determining function or constraint defect.
#[derive(Clone, Copy, Debug)]
pub struct HTerm {
    /// rational coefficient, exactly representable as a quotient of small integers
    pub c: f64,
    /// exponents of (f, f', f'', f''', f'''', f''''')
    pub fp: [i8; 6],
    /// exponents of (g, g', g'', g''', g'''', g''''', g'''''')
    pub gp: [i8; 7],
}

/// first determining function (time-dilation branch) (12 terms)
pub const H11: &[HTerm] = &[
    HTerm { c: -6.0, fp: [-2, 3, 0, 0, 0, 0], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 10.0, fp: [-1, 1, 1, 0, 0, 0], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 6.0, fp: [-1, 2, 0, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -6.0, fp: [-1, 2, 0, 0, 0, 0], gp: [1, -2, 1, 0, 0, 0, 0] },
    HTerm { c: -4.0, fp: [0, 0, 0, 1, 0, 0], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: -8.0, fp: [0, 0, 1, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 8.0, fp: [0, 0, 1, 0, 0, 0], gp: [1, -2, 1, 0, 0, 0, 0] },
    HTerm { c: 30.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -2, 2, 0, 0, 0, 0] },
    HTerm { c: -20.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -1, 0, 1, 0, 0, 0] },
    HTerm { c: -60.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -4, 3, 0, 0, 0, 0] },
    HTerm { c: 60.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -3, 1, 1, 0, 0, 0] },
    HTerm { c: -10.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -2, 0, 0, 1, 0, 0] },
];

/// second determining function (time-dilation branch) (8 terms)
pub const H12: &[HTerm] = &[
    HTerm { c: -6.0, fp: [-2, 3, 0, 0, 0, 0], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 10.0, fp: [-1, 1, 1, 0, 0, 0], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: -6.0, fp: [-1, 2, 0, 0, 0, 0], gp: [0, -2, 1, 0, 0, 0, 0] },
    HTerm { c: -4.0, fp: [0, 0, 0, 1, 0, 0], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 8.0, fp: [0, 0, 1, 0, 0, 0], gp: [0, -2, 1, 0, 0, 0, 0] },
    HTerm { c: -60.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -4, 3, 0, 0, 0, 0] },
    HTerm { c: 60.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -3, 1, 1, 0, 0, 0] },
    HTerm { c: -10.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -2, 0, 0, 1, 0, 0] },
];

/// first determining function (space-translation branch) (56 terms)
pub const H21: &[HTerm] = &[
    HTerm { c: -12.0, fp: [-4, 5, 0, 0, 0, 0], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 34.0, fp: [-3, 3, 1, 0, 0, 0], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 12.0, fp: [-3, 4, 0, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -12.0, fp: [-3, 4, 0, 0, 0, 0], gp: [1, -2, 1, 0, 0, 0, 0] },
    HTerm { c: -21.0, fp: [-2, 1, 2, 0, 0, 0], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: -12.0, fp: [-2, 2, 0, 1, 0, 0], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: -28.0, fp: [-2, 2, 1, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 28.0, fp: [-2, 2, 1, 0, 0, 0], gp: [1, -2, 1, 0, 0, 0, 0] },
    HTerm { c: 6.0, fp: [-2, 3, 0, 0, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: -12.0, fp: [-2, 3, 0, 0, 0, 0], gp: [1, -3, 2, 0, 0, 0, 0] },
    HTerm { c: 6.0, fp: [-2, 3, 0, 0, 0, 0], gp: [1, -2, 0, 1, 0, 0, 0] },
    HTerm { c: 9.0, fp: [-1, 0, 1, 1, 0, 0], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 10.0, fp: [-1, 0, 2, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -10.0, fp: [-1, 0, 2, 0, 0, 0], gp: [1, -2, 1, 0, 0, 0, 0] },
    HTerm { c: 3.0, fp: [-1, 1, 0, 0, 1, 0], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 10.0, fp: [-1, 1, 0, 1, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -10.0, fp: [-1, 1, 0, 1, 0, 0], gp: [1, -2, 1, 0, 0, 0, 0] },
    HTerm { c: -11.0, fp: [-1, 1, 1, 0, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: 22.0, fp: [-1, 1, 1, 0, 0, 0], gp: [1, -3, 2, 0, 0, 0, 0] },
    HTerm { c: -11.0, fp: [-1, 1, 1, 0, 0, 0], gp: [1, -2, 0, 1, 0, 0, 0] },
    HTerm { c: 6.0, fp: [-1, 2, 0, 0, 0, 0], gp: [0, -2, 2, 0, 0, 0, 0] },
    HTerm { c: -4.0, fp: [-1, 2, 0, 0, 0, 0], gp: [0, -1, 0, 1, 0, 0, 0] },
    HTerm { c: -12.0, fp: [-1, 2, 0, 0, 0, 0], gp: [1, -4, 3, 0, 0, 0, 0] },
    HTerm { c: 12.0, fp: [-1, 2, 0, 0, 0, 0], gp: [1, -3, 1, 1, 0, 0, 0] },
    HTerm { c: -2.0, fp: [-1, 2, 0, 0, 0, 0], gp: [1, -2, 0, 0, 1, 0, 0] },
    HTerm { c: -1.0, fp: [0, 0, 0, 0, 0, 1], gp: [1, -1, 0, 0, 0, 0, 0] },
    HTerm { c: -4.0, fp: [0, 0, 0, 0, 1, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 4.0, fp: [0, 0, 0, 0, 1, 0], gp: [1, -2, 1, 0, 0, 0, 0] },
    HTerm { c: 6.0, fp: [0, 0, 0, 1, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: -12.0, fp: [0, 0, 0, 1, 0, 0], gp: [1, -3, 2, 0, 0, 0, 0] },
    HTerm { c: 6.0, fp: [0, 0, 0, 1, 0, 0], gp: [1, -2, 0, 1, 0, 0, 0] },
    HTerm { c: -3.0, fp: [0, 0, 1, 0, 0, 0], gp: [0, -2, 2, 0, 0, 0, 0] },
    HTerm { c: 2.0, fp: [0, 0, 1, 0, 0, 0], gp: [0, -1, 0, 1, 0, 0, 0] },
    HTerm { c: 6.0, fp: [0, 0, 1, 0, 0, 0], gp: [1, -4, 3, 0, 0, 0, 0] },
    HTerm { c: -6.0, fp: [0, 0, 1, 0, 0, 0], gp: [1, -3, 1, 1, 0, 0, 0] },
    HTerm { c: 1.0, fp: [0, 0, 1, 0, 0, 0], gp: [1, -2, 0, 0, 1, 0, 0] },
    HTerm { c: -60.0, fp: [0, 1, 0, 0, 0, 0], gp: [0, -3, 3, 0, 0, 0, 0] },
    HTerm { c: 70.0, fp: [0, 1, 0, 0, 0, 0], gp: [0, -2, 1, 1, 0, 0, 0] },
    HTerm { c: -15.0, fp: [0, 1, 0, 0, 0, 0], gp: [0, -1, 0, 0, 1, 0, 0] },
    HTerm { c: 120.0, fp: [0, 1, 0, 0, 0, 0], gp: [1, -5, 4, 0, 0, 0, 0] },
    HTerm { c: -180.0, fp: [0, 1, 0, 0, 0, 0], gp: [1, -4, 2, 1, 0, 0, 0] },
    HTerm { c: 30.0, fp: [0, 1, 0, 0, 0, 0], gp: [1, -3, 0, 2, 0, 0, 0] },
    HTerm { c: 40.0, fp: [0, 1, 0, 0, 0, 0], gp: [1, -3, 1, 0, 1, 0, 0] },
    HTerm { c: -5.0, fp: [0, 1, 0, 0, 0, 0], gp: [1, -2, 0, 0, 0, 1, 0] },
    HTerm { c: 180.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -4, 4, 0, 0, 0, 0] },
    HTerm { c: -300.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -3, 2, 1, 0, 0, 0] },
    HTerm { c: 60.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -2, 0, 2, 0, 0, 0] },
    HTerm { c: 75.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -2, 1, 0, 1, 0, 0] },
    HTerm { c: -12.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -1, 0, 0, 0, 1, 0] },
    HTerm { c: -360.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -6, 5, 0, 0, 0, 0] },
    HTerm { c: 720.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -5, 3, 1, 0, 0, 0] },
    HTerm { c: -270.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -4, 1, 2, 0, 0, 0] },
    HTerm { c: -180.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -4, 2, 0, 1, 0, 0] },
    HTerm { c: 60.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -3, 0, 1, 1, 0, 0] },
    HTerm { c: 30.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -3, 1, 0, 0, 1, 0] },
    HTerm { c: -3.0, fp: [1, 0, 0, 0, 0, 0], gp: [1, -2, 0, 0, 0, 0, 1] },
];

/// second determining function (space-translation branch) (36 terms)
pub const H22: &[HTerm] = &[
    HTerm { c: -12.0, fp: [-4, 5, 0, 0, 0, 0], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 34.0, fp: [-3, 3, 1, 0, 0, 0], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: -12.0, fp: [-3, 4, 0, 0, 0, 0], gp: [0, -2, 1, 0, 0, 0, 0] },
    HTerm { c: -21.0, fp: [-2, 1, 2, 0, 0, 0], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: -12.0, fp: [-2, 2, 0, 1, 0, 0], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 28.0, fp: [-2, 2, 1, 0, 0, 0], gp: [0, -2, 1, 0, 0, 0, 0] },
    HTerm { c: -12.0, fp: [-2, 3, 0, 0, 0, 0], gp: [0, -3, 2, 0, 0, 0, 0] },
    HTerm { c: 6.0, fp: [-2, 3, 0, 0, 0, 0], gp: [0, -2, 0, 1, 0, 0, 0] },
    HTerm { c: 9.0, fp: [-1, 0, 1, 1, 0, 0], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: -10.0, fp: [-1, 0, 2, 0, 0, 0], gp: [0, -2, 1, 0, 0, 0, 0] },
    HTerm { c: 3.0, fp: [-1, 1, 0, 0, 1, 0], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: -10.0, fp: [-1, 1, 0, 1, 0, 0], gp: [0, -2, 1, 0, 0, 0, 0] },
    HTerm { c: 22.0, fp: [-1, 1, 1, 0, 0, 0], gp: [0, -3, 2, 0, 0, 0, 0] },
    HTerm { c: -11.0, fp: [-1, 1, 1, 0, 0, 0], gp: [0, -2, 0, 1, 0, 0, 0] },
    HTerm { c: -12.0, fp: [-1, 2, 0, 0, 0, 0], gp: [0, -4, 3, 0, 0, 0, 0] },
    HTerm { c: 12.0, fp: [-1, 2, 0, 0, 0, 0], gp: [0, -3, 1, 1, 0, 0, 0] },
    HTerm { c: -2.0, fp: [-1, 2, 0, 0, 0, 0], gp: [0, -2, 0, 0, 1, 0, 0] },
    HTerm { c: -1.0, fp: [0, 0, 0, 0, 0, 1], gp: [0, -1, 0, 0, 0, 0, 0] },
    HTerm { c: 4.0, fp: [0, 0, 0, 0, 1, 0], gp: [0, -2, 1, 0, 0, 0, 0] },
    HTerm { c: -12.0, fp: [0, 0, 0, 1, 0, 0], gp: [0, -3, 2, 0, 0, 0, 0] },
    HTerm { c: 6.0, fp: [0, 0, 0, 1, 0, 0], gp: [0, -2, 0, 1, 0, 0, 0] },
    HTerm { c: 6.0, fp: [0, 0, 1, 0, 0, 0], gp: [0, -4, 3, 0, 0, 0, 0] },
    HTerm { c: -6.0, fp: [0, 0, 1, 0, 0, 0], gp: [0, -3, 1, 1, 0, 0, 0] },
    HTerm { c: 1.0, fp: [0, 0, 1, 0, 0, 0], gp: [0, -2, 0, 0, 1, 0, 0] },
    HTerm { c: 120.0, fp: [0, 1, 0, 0, 0, 0], gp: [0, -5, 4, 0, 0, 0, 0] },
    HTerm { c: -180.0, fp: [0, 1, 0, 0, 0, 0], gp: [0, -4, 2, 1, 0, 0, 0] },
    HTerm { c: 30.0, fp: [0, 1, 0, 0, 0, 0], gp: [0, -3, 0, 2, 0, 0, 0] },
    HTerm { c: 40.0, fp: [0, 1, 0, 0, 0, 0], gp: [0, -3, 1, 0, 1, 0, 0] },
    HTerm { c: -5.0, fp: [0, 1, 0, 0, 0, 0], gp: [0, -2, 0, 0, 0, 1, 0] },
    HTerm { c: -360.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -6, 5, 0, 0, 0, 0] },
    HTerm { c: 720.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -5, 3, 1, 0, 0, 0] },
    HTerm { c: -270.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -4, 1, 2, 0, 0, 0] },
    HTerm { c: -180.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -4, 2, 0, 1, 0, 0] },
    HTerm { c: 60.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -3, 0, 1, 1, 0, 0] },
    HTerm { c: 30.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -3, 1, 0, 0, 1, 0] },
    HTerm { c: -3.0, fp: [1, 0, 0, 0, 0, 0], gp: [0, -2, 0, 0, 0, 0, 1] },
];

/// maximal-class g-constraint defect: g''' - rhs (4 terms)
pub const CLASS1_G3: &[HTerm] = &[
    HTerm { c: -3.0 / 10.0, fp: [-2, 2, 0, 0, 0, 0], gp: [0, 1, 0, 0, 0, 0, 0] },
    HTerm { c: 2.0 / 5.0, fp: [-1, 0, 1, 0, 0, 0], gp: [0, 1, 0, 0, 0, 0, 0] },
    HTerm { c: -3.0 / 2.0, fp: [0, 0, 0, 0, 0, 0], gp: [0, -1, 2, 0, 0, 0, 0] },
    HTerm { c: 1.0, fp: [0, 0, 0, 0, 0, 0], gp: [0, 0, 0, 1, 0, 0, 0] },
];

/// maximal-class f-constraint defect: f'''' - rhs (5 terms)
pub const CLASS1_F4: &[HTerm] = &[
    HTerm { c: -9.0 / 10.0, fp: [-3, 4, 0, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 12.0 / 5.0, fp: [-2, 2, 1, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -11.0 / 10.0, fp: [-1, 0, 2, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -1.0, fp: [-1, 1, 0, 1, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 1.0, fp: [0, 0, 0, 0, 1, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
];

/// scaling-class g-constraint defect: g'''' - rhs (12 terms)
pub const CLASS2_G4: &[HTerm] = &[
    HTerm { c: 3.0 / 5.0, fp: [-3, 3, 0, 0, 0, 0], gp: [0, 1, 0, 0, 0, 0, 0] },
    HTerm { c: -1.0, fp: [-2, 1, 1, 0, 0, 0], gp: [0, 1, 0, 0, 0, 0, 0] },
    HTerm { c: -3.0 / 5.0, fp: [-2, 2, 0, 0, 0, 0], gp: [-1, 2, 0, 0, 0, 0, 0] },
    HTerm { c: 3.0 / 5.0, fp: [-2, 2, 0, 0, 0, 0], gp: [0, 0, 1, 0, 0, 0, 0] },
    HTerm { c: 2.0 / 5.0, fp: [-1, 0, 0, 1, 0, 0], gp: [0, 1, 0, 0, 0, 0, 0] },
    HTerm { c: 4.0 / 5.0, fp: [-1, 0, 1, 0, 0, 0], gp: [-1, 2, 0, 0, 0, 0, 0] },
    HTerm { c: -4.0 / 5.0, fp: [-1, 0, 1, 0, 0, 0], gp: [0, 0, 1, 0, 0, 0, 0] },
    HTerm { c: -3.0, fp: [0, 0, 0, 0, 0, 0], gp: [-1, 0, 2, 0, 0, 0, 0] },
    HTerm { c: 2.0, fp: [0, 0, 0, 0, 0, 0], gp: [-1, 1, 0, 1, 0, 0, 0] },
    HTerm { c: 6.0, fp: [0, 0, 0, 0, 0, 0], gp: [0, -2, 3, 0, 0, 0, 0] },
    HTerm { c: -6.0, fp: [0, 0, 0, 0, 0, 0], gp: [0, -1, 1, 1, 0, 0, 0] },
    HTerm { c: 1.0, fp: [0, 0, 0, 0, 0, 0], gp: [0, 0, 0, 0, 1, 0, 0] },
];

/// scaling-class f-constraint defect: f''''' - rhs (17 terms)
pub const CLASS2_F5: &[HTerm] = &[
    HTerm { c: 18.0 / 5.0, fp: [-4, 5, 0, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -54.0 / 5.0, fp: [-3, 3, 1, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -18.0 / 5.0, fp: [-3, 4, 0, 0, 0, 0], gp: [-1, 1, 0, 0, 0, 0, 0] },
    HTerm { c: 18.0 / 5.0, fp: [-3, 4, 0, 0, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: 7.0, fp: [-2, 1, 2, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 22.0 / 5.0, fp: [-2, 2, 0, 1, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 48.0 / 5.0, fp: [-2, 2, 1, 0, 0, 0], gp: [-1, 1, 0, 0, 0, 0, 0] },
    HTerm { c: -48.0 / 5.0, fp: [-2, 2, 1, 0, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: -16.0 / 5.0, fp: [-1, 0, 1, 1, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -22.0 / 5.0, fp: [-1, 0, 2, 0, 0, 0], gp: [-1, 1, 0, 0, 0, 0, 0] },
    HTerm { c: 22.0 / 5.0, fp: [-1, 0, 2, 0, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: -2.0, fp: [-1, 1, 0, 0, 1, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -4.0, fp: [-1, 1, 0, 1, 0, 0], gp: [-1, 1, 0, 0, 0, 0, 0] },
    HTerm { c: 4.0, fp: [-1, 1, 0, 1, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: 1.0, fp: [0, 0, 0, 0, 0, 1], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 4.0, fp: [0, 0, 0, 0, 1, 0], gp: [-1, 1, 0, 0, 0, 0, 0] },
    HTerm { c: -4.0, fp: [0, 0, 0, 0, 1, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
];

/// translation-class g-constraint defect: g'''' - rhs (8 terms)
pub const CLASS3_G4: &[HTerm] = &[
    HTerm { c: 3.0 / 5.0, fp: [-3, 3, 0, 0, 0, 0], gp: [0, 1, 0, 0, 0, 0, 0] },
    HTerm { c: -1.0, fp: [-2, 1, 1, 0, 0, 0], gp: [0, 1, 0, 0, 0, 0, 0] },
    HTerm { c: 3.0 / 5.0, fp: [-2, 2, 0, 0, 0, 0], gp: [0, 0, 1, 0, 0, 0, 0] },
    HTerm { c: 2.0 / 5.0, fp: [-1, 0, 0, 1, 0, 0], gp: [0, 1, 0, 0, 0, 0, 0] },
    HTerm { c: -4.0 / 5.0, fp: [-1, 0, 1, 0, 0, 0], gp: [0, 0, 1, 0, 0, 0, 0] },
    HTerm { c: 6.0, fp: [0, 0, 0, 0, 0, 0], gp: [0, -2, 3, 0, 0, 0, 0] },
    HTerm { c: -6.0, fp: [0, 0, 0, 0, 0, 0], gp: [0, -1, 1, 1, 0, 0, 0] },
    HTerm { c: 1.0, fp: [0, 0, 0, 0, 0, 0], gp: [0, 0, 0, 0, 1, 0, 0] },
];

/// translation-class f-constraint defect: f''''' - rhs (12 terms)
pub const CLASS3_F5: &[HTerm] = &[
    HTerm { c: 18.0 / 5.0, fp: [-4, 5, 0, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -54.0 / 5.0, fp: [-3, 3, 1, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 18.0 / 5.0, fp: [-3, 4, 0, 0, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: 7.0, fp: [-2, 1, 2, 0, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 22.0 / 5.0, fp: [-2, 2, 0, 1, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -48.0 / 5.0, fp: [-2, 2, 1, 0, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: -16.0 / 5.0, fp: [-1, 0, 1, 1, 0, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 22.0 / 5.0, fp: [-1, 0, 2, 0, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: -2.0, fp: [-1, 1, 0, 0, 1, 0], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: 4.0, fp: [-1, 1, 0, 1, 0, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
    HTerm { c: 1.0, fp: [0, 0, 0, 0, 0, 1], gp: [0, 0, 0, 0, 0, 0, 0] },
    HTerm { c: -4.0, fp: [0, 0, 0, 0, 1, 0], gp: [0, -1, 1, 0, 0, 0, 0] },
];
