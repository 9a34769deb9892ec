//! Point-symmetry generators and their Lie brackets.
//!
//! Every symmetry of the beam equation lies in the closed family
//! `τ(t)∂t + ξ(x)∂x + β(x)·u∂u` with `τ` affine in `t`.  The four basis
//! generators are
//!
//! - `X1 = ∂t` (time translation),
//! - `X2 = u∂u` (amplitude scaling),
//! - `X3 = 4t∂t + (2g/g')∂x − (f'g/(fg') + 3gg''/g'²)u∂u`,
//! - `X4 = (2/g')∂x − (f'/(fg') + 3g''/g'²)u∂u`,
//!
//! where `X3` and `X4` are genuine symmetries only in the appropriate
//! classes, but are well-defined vector fields for any profile, and the
//! structural relations `[X1,X3] = 4X1`, `[X3,X4] = −2X4` hold identically
//! (note `X3 = 4t∂t + g·X4_space`).  Brackets are computed from jets of the
//! coefficient functions, so no finite differencing enters.

use crate::beam::{BeamProfile, GFunction};
use crate::error::Result;
use crate::jet::Jet;
use std::fmt;
use std::rc::Rc;

/// Identity tags for the basis generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryGenerator {
    X1,
    X2,
    X3,
    X4,
}

impl fmt::Display for SymmetryGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymmetryGenerator::X1 => "X1",
            SymmetryGenerator::X2 => "X2",
            SymmetryGenerator::X3 => "X3",
            SymmetryGenerator::X4 => "X4",
        };
        f.write_str(s)
    }
}

type CoeffFn = Rc<dyn Fn(f64) -> Result<Jet>>;

/// A vector field of the closed family `τ(t)∂t + ξ(x)∂x + β(x)u∂u`, with
/// each coefficient answering jet queries for exact bracket computation.
#[derive(Clone)]
pub struct VectorField {
    tau: CoeffFn,
    xi: CoeffFn,
    beta: CoeffFn,
}

impl VectorField {
    pub fn new(tau: CoeffFn, xi: CoeffFn, beta: CoeffFn) -> Self {
        VectorField { tau, xi, beta }
    }

    /// Constant-coefficient field `c_t ∂t + c_x ∂x + c_u u∂u`.
    pub fn constant(ct: f64, cx: f64, cu: f64) -> Self {
        VectorField {
            tau: Rc::new(move |_| Ok(Jet::constant(ct))),
            xi: Rc::new(move |_| Ok(Jet::constant(cx))),
            beta: Rc::new(move |_| Ok(Jet::constant(cu))),
        }
    }

    pub fn tau_jet(&self, t: f64) -> Result<Jet> {
        (self.tau)(t)
    }

    pub fn xi_jet(&self, x: f64) -> Result<Jet> {
        (self.xi)(x)
    }

    pub fn beta_jet(&self, x: f64) -> Result<Jet> {
        (self.beta)(x)
    }

    /// Components `(τ, ξ, ηu)` at a point (the `u`-component is `β(x)·u`).
    pub fn components(&self, t: f64, x: f64, u: f64) -> Result<[f64; 3]> {
        Ok([
            self.tau_jet(t)?.value(),
            self.xi_jet(x)?.value(),
            self.beta_jet(x)?.value() * u,
        ])
    }
}

/// Computes `[A, B] = A(B) − B(A)` at a point.  Within the closed family the
/// bracket has components
/// `(τ_A τ_B' − τ_B τ_A',  ξ_A ξ_B' − ξ_B ξ_A',  (ξ_A β_B' − ξ_B β_A')u)`.
pub fn lie_bracket(a: &VectorField, b: &VectorField, t: f64, x: f64, u: f64) -> Result<[f64; 3]> {
    let ta = a.tau_jet(t)?;
    let tb = b.tau_jet(t)?;
    let xa = a.xi_jet(x)?;
    let xb = b.xi_jet(x)?;
    let ba = a.beta_jet(x)?;
    let bb = b.beta_jet(x)?;
    Ok([
        ta.value() * tb.deriv(1) - tb.value() * ta.deriv(1),
        xa.value() * xb.deriv(1) - xb.value() * xa.deriv(1),
        (xa.value() * bb.deriv(1) - xb.value() * ba.deriv(1)) * u,
    ])
}

/// A beam profile with its auxiliary coordinate and an optional shift of
/// `g`, ready to materialize generators.
pub struct SymmetryFrame {
    profile: BeamProfile,
    g: GFunction,
    kappa: f64,
}

impl SymmetryFrame {
    pub fn new(profile: &BeamProfile) -> Result<Self> {
        Self::with_shift(profile, 0.0)
    }

    /// Uses `g̃ = g + κ` in the coefficients of `X3` (relevant for the
    /// scaling class, whose distinguished origin is `g̃ = 0`).
    pub fn with_shift(profile: &BeamProfile, kappa: f64) -> Result<Self> {
        Ok(SymmetryFrame {
            profile: profile.clone(),
            g: profile.g()?,
            kappa,
        })
    }

    pub fn g(&self) -> &GFunction {
        &self.g
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Jet of `2/g'` and of `−(f'/(fg') + 3g''/g'²)` at `x`: the space and
    /// amplitude coefficients of `X4`.
    fn x4_coeffs(&self, x: f64) -> Result<(Jet, Jet)> {
        let fj = self.profile.f_jet(x)?;
        let gp = self.profile.g_prime_jet(x)?;
        let gpp = gp.derivative();
        let xi = Jet::constant(2.0) / gp;
        let beta = -(fj.derivative() / (fj * gp) + 3.0 * gpp / (gp * gp));
        Ok((xi, beta))
    }

    /// Jet of the shifted coordinate `g̃ = g + κ` at `x`.
    fn g_shifted(&self, x: f64) -> Result<Jet> {
        Ok(self.g.jet(x)? + self.kappa)
    }

    /// Materializes a generator as a bracket-ready vector field.
    pub fn vector_field(&self, gen: SymmetryGenerator) -> VectorField {
        match gen {
            SymmetryGenerator::X1 => VectorField::constant(1.0, 0.0, 0.0),
            SymmetryGenerator::X2 => VectorField::constant(0.0, 0.0, 1.0),
            SymmetryGenerator::X3 => {
                let frame = self.clone_parts();
                let frame2 = self.clone_parts();
                VectorField::new(
                    Rc::new(|t| Ok(Jet::variable(t) * 4.0)),
                    Rc::new(move |x| {
                        let (xi4, _) = frame.x4_coeffs(x)?;
                        Ok(frame.g_shifted(x)? * xi4)
                    }),
                    Rc::new(move |x| {
                        let (_, beta4) = frame2.x4_coeffs(x)?;
                        Ok(frame2.g_shifted(x)? * beta4)
                    }),
                )
            }
            SymmetryGenerator::X4 => {
                let frame = self.clone_parts();
                let frame2 = self.clone_parts();
                VectorField::new(
                    Rc::new(|_| Ok(Jet::constant(0.0))),
                    Rc::new(move |x| Ok(frame.x4_coeffs(x)?.0)),
                    Rc::new(move |x| Ok(frame2.x4_coeffs(x)?.1)),
                )
            }
        }
    }

    fn clone_parts(&self) -> SymmetryFrame {
        SymmetryFrame {
            profile: self.profile.clone(),
            g: self.g.clone(),
            kappa: self.kappa,
        }
    }

    /// Components `(τ, ξ, ηu)` of a generator at a point.
    pub fn generator_at(
        &self,
        gen: SymmetryGenerator,
        t: f64,
        x: f64,
        u: f64,
    ) -> Result<[f64; 3]> {
        self.vector_field(gen).components(t, x, u)
    }
}

/// One-off component query; builds the auxiliary coordinate internally, so
/// repeated callers should hold a [`SymmetryFrame`] instead.
pub fn generator_at(
    gen: SymmetryGenerator,
    profile: &BeamProfile,
    t: f64,
    x: f64,
    u: f64,
) -> Result<[f64; 3]> {
    SymmetryFrame::new(profile)?.generator_at(gen, t, x, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn uniform_frame() -> SymmetryFrame {
        let p = BeamProfile::new("uniform", "1", "1", 0.0, 3.0).unwrap();
        SymmetryFrame::new(&p).unwrap()
    }

    #[test]
    fn uniform_x4_is_plain_translation() {
        let f = uniform_frame();
        let c = f.generator_at(SymmetryGenerator::X4, 0.7, 1.9, 4.0).unwrap();
        assert_abs_diff_eq!(c[0], 0.0, epsilon = 1e-14);
        assert_relative_eq!(c[1], 2.0, max_relative = 1e-12);
        assert_abs_diff_eq!(c[2], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn uniform_x3_components() {
        // g = x on [0, 3], so 2g/g' = 2x
        let f = uniform_frame();
        let c = f.generator_at(SymmetryGenerator::X3, 1.0, 2.0, 5.0).unwrap();
        assert_relative_eq!(c[0], 4.0, max_relative = 1e-14);
        assert_relative_eq!(c[1], 4.0, max_relative = 1e-12);
        assert_abs_diff_eq!(c[2], 0.0, epsilon = 1e-11);
    }

    #[test]
    fn log_coordinate_x4_matches_hand_substitution() {
        // f = 1, m = x^-4 on [1,2]: g = ln x, X4 = 2x ∂x + 3u ∂u
        let p = BeamProfile::new("log", "1", "x^-4", 1.0, 2.0).unwrap();
        let f = SymmetryFrame::new(&p).unwrap();
        for &(x, u) in &[(1.2, 0.5), (1.7, -2.0)] {
            let c = f.generator_at(SymmetryGenerator::X4, 0.0, x, u).unwrap();
            assert_abs_diff_eq!(c[0], 0.0, epsilon = 1e-14);
            assert_relative_eq!(c[1], 2.0 * x, max_relative = 1e-11);
            assert_relative_eq!(c[2], 3.0 * u, max_relative = 1e-10);
        }
    }

    fn assert_bracket_eq(
        frame: &SymmetryFrame,
        a: SymmetryGenerator,
        b: SymmetryGenerator,
        scale: f64,
        target: Option<SymmetryGenerator>,
        t: f64,
        x: f64,
        u: f64,
    ) {
        let va = frame.vector_field(a);
        let vb = frame.vector_field(b);
        let got = lie_bracket(&va, &vb, t, x, u).unwrap();
        let want = match target {
            Some(g) => {
                let c = frame.generator_at(g, t, x, u).unwrap();
                [scale * c[0], scale * c[1], scale * c[2]]
            }
            None => [0.0; 3],
        };
        for k in 0..3 {
            assert_abs_diff_eq!(got[k], want[k], epsilon = 1e-10);
        }
    }

    #[test]
    fn commutator_table_is_structural() {
        // holds for any profile, not only the symmetric classes
        for (f_src, m_src, a, b) in [
            ("1", "1", 0.0, 3.0),
            ("x", "x", 1.0, 2.0),
            ("exp(x)", "1+x^2", 0.2, 1.4),
        ] {
            let p = BeamProfile::new("any", f_src, m_src, a, b).unwrap();
            let frame = SymmetryFrame::new(&p).unwrap();
            let pts = [(0.3, 0.25, 1.0), (1.1, 0.55, -2.0)];
            for &(t, frac, u) in &pts {
                let x = a + (b - a) * frac;
                use SymmetryGenerator::*;
                assert_bracket_eq(&frame, X1, X3, 4.0, Some(X1), t, x, u);
                assert_bracket_eq(&frame, X3, X4, -2.0, Some(X4), t, x, u);
                assert_bracket_eq(&frame, X1, X2, 0.0, None, t, x, u);
                assert_bracket_eq(&frame, X1, X4, 0.0, None, t, x, u);
                assert_bracket_eq(&frame, X2, X3, 0.0, None, t, x, u);
                assert_bracket_eq(&frame, X2, X4, 0.0, None, t, x, u);
            }
        }
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let frame = uniform_frame();
        let v3 = frame.vector_field(SymmetryGenerator::X3);
        let v4 = frame.vector_field(SymmetryGenerator::X4);
        let ab = lie_bracket(&v3, &v4, 0.6, 1.3, 2.0).unwrap();
        let ba = lie_bracket(&v4, &v3, 0.6, 1.3, 2.0).unwrap();
        for k in 0..3 {
            assert_abs_diff_eq!(ab[k], -ba[k], epsilon = 1e-12);
        }
    }
}
