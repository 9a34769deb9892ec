//! Iso-spectral beam families in the style of Gottlieb: power-law rigidity
//! `f = K(Ax+B)^m` paired with the density that makes the beam fully
//! symmetric, plus the analytic route from a rigidity profile to its
//! straightening coordinate `g`.
//!
//! Only four exponents admit such a pairing — `m ∈ {0, 3/2, 5/2, 4}`, the
//! roots of `m(4m³ − 32m² + 79m − 60)` — and for each the coordinate `g`
//! is a Möbius function of `Ax+B` (of `√(Ax+B)` for the two fractional
//! exponents).  [`make_gottlieb`] emits these beams as closed-form
//! profiles.
//!
//! The general route works for any rigidity: `g` must satisfy
//! `{g, x} = 3f'²/(10f²) − 2f''/(5f)` (a Schwarzian condition), and every
//! solution is a ratio of independent solutions of the linear oscillator
//! `y'' + q y = 0` with `q` half the right-hand side.
//! [`solve_normal_ode`] integrates that oscillator and
//! [`g_from_solutions`] forms the ratio; the Möbius constants of the
//! closed form are exactly the basis freedom of the oscillator.

use crate::error::{Error, Result};
use crate::expr::{eval_jet, BinOp, ExprAst};
use crate::jet::Jet;
use crate::numeric::chebyshev_lobatto;
use crate::ode::solve_path;
use crate::beam::BeamProfile;
use std::fmt;

/// Exact ratio of two machine integers, kept reduced with a positive
/// denominator.  Only as much arithmetic as exponent bookkeeping needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        let s = if den < 0 { -1 } else { 1 };
        let d = gcd(num, den).max(1);
        Rational {
            num: s * num / d,
            den: s * den / d,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational { num: n, den: 1 }
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, o: Rational) -> Rational {
        Rational::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
}

impl std::ops::Sub for Rational {
    type Output = Rational;
    fn sub(self, o: Rational) -> Rational {
        Rational::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
}

impl std::ops::Mul for Rational {
    type Output = Rational;
    fn mul(self, o: Rational) -> Rational {
        Rational::new(self.num * o.num, self.den * o.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The exponent constraint `m(4m³ − 32m² + 79m − 60)`, evaluated exactly.
pub fn exponent_polynomial(m: Rational) -> Rational {
    let horner = ((Rational::from(4) * m - 32.into()) * m + 79.into()) * m - 60.into();
    m * horner
}

/// The admissible power-law exponents: the exact roots of
/// [`exponent_polynomial`], in increasing order.
pub fn exponent_roots() -> [Rational; 4] {
    [
        Rational::from(0),
        Rational::new(3, 2),
        Rational::new(5, 2),
        Rational::from(4),
    ]
}

/// Parameters of a generalized Gottlieb beam: rigidity `f = K(Ax+B)^m`
/// with `m` an admissible exponent, and the Möbius constants `(L, M, P, Q)`
/// selecting one straightening coordinate out of the family
/// `g = (L + Mσ)/(P + Qσ)`, where `σ = Ax+B` for `m ∈ {0, 4}` and
/// `σ = √(Ax+B)` for `m ∈ {3/2, 5/2}`.
#[derive(Clone, Copy, Debug)]
pub struct GottliebParams {
    /// Rigidity scale `K > 0`.
    pub k: f64,
    /// Affine slope `A ≠ 0`.
    pub a: f64,
    /// Affine offset `B`; `Ax + B` must stay positive on the interval.
    pub b: f64,
    /// Power-law exponent, one of `{0, 3/2, 5/2, 4}`.
    pub exponent: Rational,
    /// Möbius constants `(L, M, P, Q)` with `LQ − MP ≠ 0` and
    /// `P + Qσ` nonvanishing on the interval.
    pub mobius: [f64; 4],
    /// Beam interval.
    pub interval: (f64, f64),
}

impl GottliebParams {
    /// True for the two exponents whose Möbius argument is `√(Ax+B)`.
    fn sqrt_branch(&self) -> bool {
        self.exponent.den() == 2
    }

    /// `σ(x)`: the Möbius argument at `x`.
    fn sigma(&self, x: f64) -> f64 {
        let s = self.a * x + self.b;
        if self.sqrt_branch() {
            s.sqrt()
        } else {
            s
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.k > 0.0) {
            return Err(Error::Parameter(format!(
                "rigidity scale K must be positive, got {}",
                self.k
            )));
        }
        if self.a == 0.0 {
            return Err(Error::Parameter("affine slope A must be nonzero".into()));
        }
        if !exponent_roots().contains(&self.exponent) {
            return Err(Error::Parameter(format!(
                "exponent m = {} is not one of 0, 3/2, 5/2, 4",
                self.exponent
            )));
        }
        let [l, m, p, q] = self.mobius;
        if l * q - m * p == 0.0 {
            return Err(Error::Parameter(
                "Moebius constants must satisfy LQ - MP != 0".into(),
            ));
        }
        let (x0, x1) = self.interval;
        if !(x0.is_finite() && x1.is_finite()) || x0 >= x1 {
            return Err(Error::Parameter(format!(
                "interval must satisfy a < b, got [{x0}, {x1}]"
            )));
        }
        // Ax + B is affine, so positivity at the endpoints is positivity
        // everywhere; likewise P + Qσ is monotone in x, so a sign change
        // or zero can only be bracketed by the endpoints.
        for x in [x0, x1] {
            let s = self.a * x + self.b;
            if !(s > 0.0) {
                return Err(Error::Positivity {
                    quantity: "Ax + B",
                    value: s,
                    x,
                });
            }
        }
        let d0 = p + q * self.sigma(x0);
        let d1 = p + q * self.sigma(x1);
        if d0 == 0.0 || d1 == 0.0 || (d0 < 0.0) != (d1 < 0.0) {
            return Err(Error::Parameter(format!(
                "Moebius denominator P + Q sigma vanishes on [{x0}, {x1}]"
            )));
        }
        Ok(())
    }

    /// Closed-form rigidity `K(Ax+B)^m` as an expression tree.
    pub fn f_expr(&self) -> ExprAst {
        let s = affine(self.a, self.b);
        let k = ExprAst::num(self.k);
        match (self.exponent.num(), self.exponent.den()) {
            (0, _) => k,
            (4, _) => mul(k, powi(s, 4)),
            (3, 2) => mul(k, mul(s.clone(), sqrt(s))),
            (5, 2) => mul(k, mul(powi(s.clone(), 2), sqrt(s))),
            _ => unreachable!("validated exponent"),
        }
    }

    /// Closed-form straightening coordinate `(L + Mσ)/(P + Qσ)`,
    /// sign-normalized so that `g' > 0` on the interval.
    pub fn g_expr(&self) -> ExprAst {
        let [mut l, mut m, p, q] = self.mobius;
        // g' carries the sign of A(MP − LQ) on both branches.
        if self.a * (m * p - l * q) < 0.0 {
            l = -l;
            m = -m;
        }
        let sig = if self.sqrt_branch() {
            sqrt(affine(self.a, self.b))
        } else {
            affine(self.a, self.b)
        };
        div(
            add(ExprAst::num(l), mul(ExprAst::num(m), sig.clone())),
            add(ExprAst::num(p), mul(ExprAst::num(q), sig)),
        )
    }

    /// Closed-form density `f g'⁴` as an expression tree:
    /// `A⁴(MP−LQ)⁴ K (Ax+B)^m / (P + Q(Ax+B))⁸` on the integer branch and
    /// `A⁴(MP−LQ)⁴/16 · K (Ax+B)^{m−2} / (P + Q√(Ax+B))⁸` on the other.
    pub fn density_expr(&self) -> ExprAst {
        let [l, m, p, q] = self.mobius;
        let s = affine(self.a, self.b);
        let core = self.k * self.a.powi(4) * (m * p - l * q).powi(4);
        if self.sqrt_branch() {
            let den = add(ExprAst::num(p), mul(ExprAst::num(q), sqrt(s.clone())));
            let s_pow = match self.exponent.num() {
                // m − 2 = −1/2
                3 => div(ExprAst::num(1.0), sqrt(s)),
                // m − 2 = 1/2
                5 => sqrt(s),
                _ => unreachable!("validated exponent"),
            };
            div(mul(ExprAst::num(core / 16.0), s_pow), powi(den, 8))
        } else {
            let den = add(ExprAst::num(p), mul(ExprAst::num(q), s.clone()));
            let s_pow = match self.exponent.num() {
                0 => ExprAst::num(1.0),
                4 => powi(s, 4),
                _ => unreachable!("validated exponent"),
            };
            div(mul(ExprAst::num(core), s_pow), powi(den, 8))
        }
    }
}

fn affine(a: f64, b: f64) -> ExprAst {
    add(mul(ExprAst::num(a), ExprAst::Var), ExprAst::num(b))
}

fn add(l: ExprAst, r: ExprAst) -> ExprAst {
    ExprAst::bin(BinOp::Add, l, r)
}

fn mul(l: ExprAst, r: ExprAst) -> ExprAst {
    ExprAst::bin(BinOp::Mul, l, r)
}

fn div(l: ExprAst, r: ExprAst) -> ExprAst {
    ExprAst::bin(BinOp::Div, l, r)
}

fn powi(base: ExprAst, n: i64) -> ExprAst {
    ExprAst::bin(BinOp::Pow, base, ExprAst::num(n as f64))
}

fn sqrt(a: ExprAst) -> ExprAst {
    ExprAst::fun(crate::expr::FunKind::Sqrt, a)
}

/// Builds the closed-form beam for the given parameters.  The emitted
/// profile carries expression trees for both the rigidity and the density
/// `f g'⁴`, so it round-trips through beam-spec documents.
pub fn make_gottlieb(params: &GottliebParams) -> Result<BeamProfile> {
    params.validate()?;
    let name = format!("gottlieb-m-{}", params.exponent);
    BeamProfile::from_ast(
        &name,
        params.f_expr(),
        params.density_expr(),
        params.interval.0,
        params.interval.1,
    )
}

/// The Schwarzian derivative `g'''/g' − (3/2)(g''/g')²` read off a jet.
pub fn schwarzian(gj: &Jet) -> Result<f64> {
    let g1 = gj.deriv(1);
    if g1 == 0.0 {
        return Err(Error::Parameter(
            "Schwarzian derivative undefined where g' = 0".into(),
        ));
    }
    let r = gj.deriv(2) / g1;
    Ok(gj.deriv(3) / g1 - 1.5 * r * r)
}

/// Right-hand side of the straightening condition
/// `{g, x} = 3f'²/(10f²) − 2f''/(5f)`, read off the rigidity jet.
pub fn schwarzian_target(fj: &Jet) -> f64 {
    let r = fj.deriv(1) / fj.value();
    0.3 * r * r - 0.4 * fj.deriv(2) / fj.value()
}

/// The linear oscillator `y'' + q y = 0` with
/// `q = (3f'²/f² − 4f''/f)/20`, integrated over an interval for two
/// independent solutions, Wronskian-normalized to `y1 y2' − y2 y1' = 1`.
#[derive(Clone, Debug)]
pub struct NormalFormODE {
    f: ExprAst,
    interval: (f64, f64),
    init: [[f64; 2]; 2],
    xs: Vec<f64>,
    states: Vec<[f64; 4]>,
    drift: f64,
}

/// Number of stored grid nodes for an integrated oscillator.
const ODE_GRID: usize = 65;

/// Local integration tolerance.
const ODE_TOL: f64 = 1e-12;

/// Integrates the oscillator attached to the rigidity `f` with initial
/// conditions `init = [[y1, y1'], [y2, y2']]` at the left endpoint.  The
/// conditions must be independent; the second solution is rescaled so the
/// Wronskian is exactly one at the start.
pub fn solve_normal_ode(
    f: &ExprAst,
    interval: (f64, f64),
    init: [[f64; 2]; 2],
) -> Result<NormalFormODE> {
    let (x0, x1) = interval;
    if !(x0.is_finite() && x1.is_finite()) || x0 >= x1 {
        return Err(Error::Parameter(format!(
            "interval must satisfy a < b, got [{x0}, {x1}]"
        )));
    }
    let w0 = init[0][0] * init[1][1] - init[1][0] * init[0][1];
    let scale = init
        .iter()
        .flatten()
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    if w0.abs() <= 1e-12 * scale * scale {
        return Err(Error::Parameter(
            "initial conditions are linearly dependent".into(),
        ));
    }
    let init = [init[0], [init[1][0] / w0, init[1][1] / w0]];

    let xs = chebyshev_lobatto(ODE_GRID, x0, x1);
    let y0 = [init[0][0], init[0][1], init[1][0], init[1][1]];
    let path = solve_path(
        |x, y| {
            let q = potential_of(f, x)?;
            Ok(vec![y[1], -q * y[0], y[3], -q * y[2]])
        },
        x0,
        &y0,
        &xs[1..],
        ODE_TOL,
    )?;
    let mut states = Vec::with_capacity(xs.len());
    states.push(y0);
    for s in path {
        states.push([s[0], s[1], s[2], s[3]]);
    }
    let drift = states
        .iter()
        .map(|s| (s[0] * s[3] - s[2] * s[1] - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(NormalFormODE {
        f: f.clone(),
        interval,
        init,
        xs,
        states,
        drift,
    })
}

fn potential_of(f: &ExprAst, x: f64) -> Result<f64> {
    let fj = eval_jet(f, x)?;
    if !(fj.value() > 0.0) {
        return Err(Error::Positivity {
            quantity: "f",
            value: fj.value(),
            x,
        });
    }
    let r = fj.deriv(1) / fj.value();
    Ok((3.0 * r * r - 4.0 * fj.deriv(2) / fj.value()) / 20.0)
}

impl NormalFormODE {
    /// The oscillator potential at `x`.
    pub fn potential(&self, x: f64) -> Result<f64> {
        potential_of(&self.f, x)
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    /// Stored grid (Chebyshev–Lobatto nodes of the interval).
    pub fn grid(&self) -> &[f64] {
        &self.xs
    }

    /// `(y1, y1', y2, y2')` at each grid node.
    pub fn states(&self) -> &[[f64; 4]] {
        &self.states
    }

    /// Largest deviation of the Wronskian from one over the grid.
    pub fn wronskian_drift(&self) -> f64 {
        self.drift
    }

    /// `(y1, y1', y2, y2')` at an arbitrary interval point, re-integrated
    /// from the left endpoint.
    pub fn state_at(&self, x: f64) -> Result<[f64; 4]> {
        let (x0, x1) = self.interval;
        if x < x0 || x > x1 {
            return Err(Error::domain(x, "outside the oscillator interval"));
        }
        if x == x0 {
            return Ok([
                self.init[0][0],
                self.init[0][1],
                self.init[1][0],
                self.init[1][1],
            ]);
        }
        let y0 = [
            self.init[0][0],
            self.init[0][1],
            self.init[1][0],
            self.init[1][1],
        ];
        let f = &self.f;
        let out = solve_path(
            |t, y| {
                let q = potential_of(f, t)?;
                Ok(vec![y[1], -q * y[0], y[3], -q * y[2]])
            },
            x0,
            &y0,
            &[x],
            ODE_TOL,
        )?;
        let s = &out[0];
        Ok([s[0], s[1], s[2], s[3]])
    }

    /// Rebases the solution pair by a constant invertible matrix
    /// `(ỹ1, ỹ2) = (c00 y1 + c01 y2, c10 y1 + c11 y2)`, renormalizing the
    /// Wronskian.  Since the oscillator is linear this is exact on the
    /// stored samples — no re-integration.
    pub fn recombined(&self, c: [[f64; 2]; 2]) -> Result<NormalFormODE> {
        let det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
        if det.abs() <= 1e-12 {
            return Err(Error::Parameter(
                "basis-change matrix must be invertible".into(),
            ));
        }
        let map = |s: &[f64; 4]| {
            [
                c[0][0] * s[0] + c[0][1] * s[2],
                c[0][0] * s[1] + c[0][1] * s[3],
                (c[1][0] * s[0] + c[1][1] * s[2]) / det,
                (c[1][0] * s[1] + c[1][1] * s[3]) / det,
            ]
        };
        let i0 = [
            self.init[0][0],
            self.init[0][1],
            self.init[1][0],
            self.init[1][1],
        ];
        let ni = map(&i0);
        let states: Vec<[f64; 4]> = self.states.iter().map(map).collect();
        let drift = states
            .iter()
            .map(|s| (s[0] * s[3] - s[2] * s[1] - 1.0).abs())
            .fold(0.0, f64::max);
        Ok(NormalFormODE {
            f: self.f.clone(),
            interval: self.interval,
            init: [[ni[0], ni[1]], [ni[2], ni[3]]],
            xs: self.xs.clone(),
            states,
            drift,
        })
    }
}

/// Samples of a straightening coordinate recovered from an oscillator:
/// `g = y2/y1` with derivatives up to third order at each grid node.
#[derive(Clone, Debug)]
pub struct GSamples {
    pub xs: Vec<f64>,
    /// `[g, g', g'', g''']` at each node of `xs`.
    pub derivs: Vec<[f64; 4]>,
    /// Interval on which `y1` kept its sign; shorter than the oscillator
    /// interval when `y1` crosses zero.
    pub valid: (f64, f64),
}

impl GSamples {
    /// Packs the sampled derivatives at node `i` into a jet (higher slots
    /// zero), convenient for feeding [`schwarzian`].
    pub fn jet(&self, i: usize) -> Jet {
        let d = self.derivs[i];
        Jet::from_derivs(d[0], [d[1], d[2], d[3], 0.0, 0.0, 0.0])
    }
}

/// Forms `g = y2/y1` and its derivatives from an integrated oscillator.
///
/// Uses the pointwise Wronskian `W` and the oscillator relation
/// `y'' = −q y`, so `g' = W/y1²`, `g'' = −2W y1'/y1³` and
/// `g''' = 2W(q y1² + 3 y1'²)/y1⁴`.  If `y1` crosses zero inside the
/// interval the samples stop before the crossing and the reduced interval
/// is reported in `valid`.
pub fn g_from_solutions(ode: &NormalFormODE) -> Result<GSamples> {
    let states = ode.states();
    let grid = ode.grid();
    let lead = states[0][0];
    if lead == 0.0 {
        return Err(Error::Parameter(
            "y1 vanishes at the left endpoint; g = y2/y1 undefined there".into(),
        ));
    }
    let mut xs = Vec::new();
    let mut derivs = Vec::new();
    let mut end = ode.interval().1;
    for (i, s) in states.iter().enumerate() {
        let [y1, y1p, y2, y2p] = *s;
        if y1 == 0.0 || (y1 < 0.0) != (lead < 0.0) {
            end = if i > 0 { grid[i - 1] } else { grid[0] };
            break;
        }
        let w = y1 * y2p - y2 * y1p;
        let q = ode.potential(grid[i])?;
        let g = y2 / y1;
        let g1 = w / (y1 * y1);
        let g2 = -2.0 * w * y1p / (y1 * y1 * y1);
        let g3 = 2.0 * w * (q * y1 * y1 + 3.0 * y1p * y1p) / (y1 * y1 * y1 * y1);
        xs.push(grid[i]);
        derivs.push([g, g1, g2, g3]);
    }
    Ok(GSamples {
        xs,
        derivs,
        valid: (ode.interval().0, end),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{classify, residual_class1, ClassLabel};
    use crate::expr::parse_expr;
    use crate::numeric::chebyshev_interior;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exponent_roots_solve_the_quartic_exactly() {
        let roots = exponent_roots();
        assert_eq!(roots[0], Rational::from(0));
        assert_eq!(roots[1], Rational::new(3, 2));
        assert_eq!(roots[2], Rational::new(5, 2));
        assert_eq!(roots[3], Rational::from(4));
        for r in roots {
            assert!(exponent_polynomial(r).is_zero(), "m = {r}");
        }
        // Off-root values stay visibly nonzero: at m = 1 the cubic factor
        // evaluates to 4 - 32 + 79 - 60 = -9.
        assert_eq!(exponent_polynomial(Rational::from(1)), Rational::from(-9));
        assert_eq!(
            exponent_polynomial(Rational::new(1, 2)),
            Rational::from(-14)
        );
    }

    #[test]
    fn rationals_reduce_and_normalize_signs() {
        assert_eq!(Rational::new(6, 4), Rational::new(3, 2));
        assert_eq!(Rational::new(1, -2), Rational::new(-1, 2));
        assert_eq!(Rational::new(-6, -4), Rational::new(3, 2));
        assert_eq!(format!("{}", Rational::new(5, 2)), "5/2");
        assert_eq!(format!("{}", Rational::from(4)), "4");
    }

    #[test]
    fn quartic_exponent_with_trivial_moebius_is_affine() {
        // L=0, M=1, P=1, Q=0 makes g = Ax + B and the density K A^4 (Ax+B)^4.
        let prm = GottliebParams {
            k: 2.0,
            a: 1.5,
            b: 0.5,
            exponent: Rational::from(4),
            mobius: [0.0, 1.0, 1.0, 0.0],
            interval: (0.0, 1.0),
        };
        let beam = make_gottlieb(&prm).unwrap();
        for x in [0.1, 0.4, 0.9] {
            let s = 1.5 * x + 0.5;
            assert_relative_eq!(beam.f_at(x).unwrap(), 2.0 * s.powi(4), epsilon = 1e-13);
            assert_relative_eq!(
                beam.m_at(x).unwrap(),
                2.0 * 1.5f64.powi(4) * s.powi(4),
                epsilon = 1e-13
            );
            let gj = crate::expr::eval_jet(&prm.g_expr(), x).unwrap();
            assert_relative_eq!(gj.value(), s, epsilon = 1e-13);
        }
    }

    #[test]
    fn zero_exponent_gives_a_uniform_like_beam() {
        let prm = GottliebParams {
            k: 1.0,
            a: 0.7,
            b: 1.0,
            exponent: Rational::from(0),
            mobius: [0.0, 1.0, 1.0, 0.0],
            interval: (0.0, 1.0),
        };
        let beam = make_gottlieb(&prm).unwrap();
        for x in [0.2, 0.8] {
            assert_relative_eq!(beam.f_at(x).unwrap(), 1.0, epsilon = 1e-14);
            assert_relative_eq!(beam.m_at(x).unwrap(), 0.7f64.powi(4), epsilon = 1e-14);
        }
    }

    #[test]
    fn generic_three_halves_profile_has_the_maximal_class() {
        let prm = GottliebParams {
            k: 1.0,
            a: 1.0,
            b: 1.0,
            exponent: Rational::new(3, 2),
            mobius: [1.0, 1.0, 1.0, 2.0],
            interval: (0.0, 1.0),
        };
        let beam = make_gottlieb(&prm).unwrap();
        let cls = classify(&beam, 33, 1e-9).unwrap();
        assert_eq!(cls.label, ClassLabel::A33PlusA1);
        for h in cls.max_h {
            assert!(h < 1e-9, "H residual {h}");
        }
    }

    #[test]
    fn random_parameters_classify_maximal_for_every_exponent() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x60771eb);
        for exponent in exponent_roots() {
            let mut done = 0;
            while done < 3 {
                let prm = GottliebParams {
                    k: rng.gen_range(0.5..3.0),
                    a: rng.gen_range(0.3..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 },
                    b: rng.gen_range(0.5..3.0),
                    exponent,
                    mobius: [
                        rng.gen_range(-2.0..2.0),
                        rng.gen_range(-2.0..2.0),
                        rng.gen_range(-2.0..2.0),
                        rng.gen_range(-2.0..2.0),
                    ],
                    interval: (0.0, 1.0),
                };
                let Ok(beam) = make_gottlieb(&prm) else {
                    continue;
                };
                // reject near-degenerate draws the validator lets through
                let [l, m, p, q] = prm.mobius;
                if (l * q - m * p).abs() < 0.2 {
                    continue;
                }
                let cls = classify(&beam, 33, 1e-9).unwrap();
                assert_eq!(cls.label, ClassLabel::A33PlusA1, "params {prm:?}");
                done += 1;
            }
        }
    }

    #[test]
    fn schwarzian_kills_affine_and_moebius_maps() {
        let aff = parse_expr("2*x + 5").unwrap();
        let moe = parse_expr("(x + 1)/(x + 2)").unwrap();
        for x in [0.0, 0.7, 2.3] {
            let s = schwarzian(&crate::expr::eval_jet(&aff, x).unwrap()).unwrap();
            assert_abs_diff_eq!(s, 0.0, epsilon = 1e-14);
            let s = schwarzian(&crate::expr::eval_jet(&moe, x).unwrap()).unwrap();
            assert_abs_diff_eq!(s, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn schwarzian_of_log_matches_hand_value() {
        // {ln x, x} = 1/(2x²) = 0.125 at x = 2.
        let g = parse_expr("ln(x)").unwrap();
        let s = schwarzian(&crate::expr::eval_jet(&g, 2.0).unwrap()).unwrap();
        assert_relative_eq!(s, 0.125, epsilon = 1e-13);
    }

    #[test]
    fn schwarzian_requires_nonzero_slope() {
        let j = Jet::from_derivs(1.0, [0.0, 2.0, 1.0, 0.0, 0.0, 0.0]);
        assert!(matches!(schwarzian(&j), Err(Error::Parameter(_))));
    }

    #[test]
    fn zero_potential_oscillator_is_exact() {
        let f = parse_expr("1").unwrap();
        let ode =
            solve_normal_ode(&f, (0.0, 1.0), [[1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert!(ode.wronskian_drift() < 1e-12);
        for (i, &x) in ode.grid().iter().enumerate() {
            let s = ode.states()[i];
            assert_abs_diff_eq!(s[0], 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(s[2], x, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(ode.potential(0.5).unwrap(), 0.0);
    }

    #[test]
    fn power_law_oscillator_reproduces_quarter_powers() {
        // f = (x+1)^{3/2}: q = m(4-m)/20 s² = 3/(16 s²) with solutions
        // s^{1/4} and s^{3/4}.
        let f = parse_expr("(1 + x)*sqrt(1 + x)").unwrap();
        let init = [[1.0, 0.25], [1.0, 0.75]];
        let ode = solve_normal_ode(&f, (0.0, 1.0), init).unwrap();
        assert!(ode.wronskian_drift() < 1e-9, "drift {}", ode.wronskian_drift());
        for x in [0.0, 0.3, 0.994] {
            let q = ode.potential(x).unwrap();
            assert_relative_eq!(q, 3.0 / (16.0 * (1.0 + x).powi(2)), epsilon = 1e-12);
        }
        // Wronskian of the seeded pair is 1/2, so y2 is stored doubled.
        for (i, &x) in ode.grid().iter().enumerate() {
            let s = ode.states()[i];
            let sv = 1.0 + x;
            assert_relative_eq!(s[0], sv.powf(0.25), epsilon = 1e-9);
            assert_relative_eq!(s[2], 2.0 * sv.powf(0.75), epsilon = 1e-9);
        }
    }

    #[test]
    fn recovered_coordinate_satisfies_the_straightening_condition() {
        let f = parse_expr("(1 + x)^2*sqrt(1 + x)").unwrap();
        let ode = solve_normal_ode(&f, (0.0, 1.0), [[1.0, 0.0], [0.0, 1.0]]).unwrap();
        let gs = g_from_solutions(&ode).unwrap();
        assert_eq!(gs.valid, (0.0, 1.0));
        let mut checked = 0;
        for (i, &x) in gs.xs.iter().enumerate() {
            let fj = crate::expr::eval_jet(&f, x).unwrap();
            let s = schwarzian(&gs.jet(i)).unwrap();
            assert_abs_diff_eq!(s, schwarzian_target(&fj), epsilon = 1e-8);
            checked += 1;
        }
        assert!(checked >= 33);
    }

    #[test]
    fn closed_form_coordinate_matches_the_condition_too() {
        // Cross-validation of the two routes: the Möbius closed form
        // satisfies the same Schwarzian condition the oscillator route
        // enforces, for every admissible exponent.
        for (exponent, mobius) in [
            (Rational::from(0), [1.0, -1.0, 2.0, 1.0]),
            (Rational::new(3, 2), [1.0, 1.0, 1.0, 2.0]),
            (Rational::new(5, 2), [0.5, -1.0, 1.5, 1.0]),
            (Rational::from(4), [2.0, 1.0, 1.0, 1.0]),
        ] {
            let prm = GottliebParams {
                k: 1.3,
                a: 0.8,
                b: 1.1,
                exponent,
                mobius,
                interval: (0.0, 1.0),
            };
            prm.validate().unwrap();
            let fx = prm.f_expr();
            let gx = prm.g_expr();
            for x in chebyshev_interior(9, 0.0, 1.0) {
                let fj = crate::expr::eval_jet(&fx, x).unwrap();
                let gj = crate::expr::eval_jet(&gx, x).unwrap();
                assert!(gj.deriv(1) > 0.0, "g' normalized positive");
                let s = schwarzian(&gj).unwrap();
                assert_abs_diff_eq!(s, schwarzian_target(&fj), epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn basis_changes_leave_the_schwarzian_alone() {
        let f = parse_expr("(1 + x)*sqrt(1 + x)").unwrap();
        let ode = solve_normal_ode(&f, (0.0, 1.0), [[1.0, 0.0], [0.0, 1.0]]).unwrap();
        let other = ode.recombined([[2.0, 1.0], [3.0, 2.0]]).unwrap();
        let ga = g_from_solutions(&ode).unwrap();
        let gb = g_from_solutions(&other).unwrap();
        for i in 0..ga.xs.len().min(gb.xs.len()) {
            let sa = schwarzian(&ga.jet(i)).unwrap();
            let sb = schwarzian(&gb.jet(i)).unwrap();
            assert_abs_diff_eq!(sa, sb, epsilon = 1e-10);
        }
    }

    #[test]
    fn leading_solution_zero_crossing_shrinks_the_valid_interval() {
        // f = 1 makes y1 = 1 - 2x cross zero at x = 1/2.
        let f = parse_expr("1").unwrap();
        let ode = solve_normal_ode(&f, (0.0, 1.0), [[1.0, -2.0], [0.0, 1.0]]).unwrap();
        let gs = g_from_solutions(&ode).unwrap();
        assert!(gs.valid.1 < 0.55 && gs.valid.1 > 0.35, "valid {:?}", gs.valid);
        assert!(gs.xs.last().copied().unwrap() < 0.5);
    }

    #[test]
    fn only_the_four_roots_pass_the_rigidity_constraint() {
        // Scan m over a 1/4-step grid: the class-I rigidity defect of
        // (1+x)^m vanishes exactly on {0, 3/2, 5/2, 4}.
        let mut admitted = Vec::new();
        for quarters in 0..=16 {
            let m = quarters as f64 / 4.0;
            let src = format!("(1 + x)^{m}");
            let beam = BeamProfile::new("scan", &src, "1", 0.0, 1.0).unwrap();
            let g = beam.g().unwrap();
            let mut worst = 0.0f64;
            for x in chebyshev_interior(7, 0.0, 1.0) {
                let fj = beam.f_jet(x).unwrap();
                let gj = g.jet(x).unwrap();
                let (_, rf) = residual_class1(&fj, &gj).unwrap();
                worst = worst.max(rf.normalized().abs());
            }
            if worst < 1e-9 {
                admitted.push(quarters);
            }
        }
        assert_eq!(admitted, vec![0, 6, 10, 16]); // m = 0, 3/2, 5/2, 4
    }

    #[test]
    fn exponential_rigidity_fails_the_constraint() {
        // The separable exponential ansatz only works when it degenerates
        // to a power law; a genuine exponential leaves a visible defect.
        let beam = BeamProfile::new("expf", "exp(x)", "1", 0.0, 1.0).unwrap();
        let g = beam.g().unwrap();
        let fj = beam.f_jet(0.5).unwrap();
        let gj = g.jet(0.5).unwrap();
        let (_, rf) = residual_class1(&fj, &gj).unwrap();
        assert!(rf.normalized().abs() > 1e-3);
    }

    #[test]
    fn emitted_beams_round_trip_through_beam_spec() {
        let prm = GottliebParams {
            k: 1.0,
            a: 1.0,
            b: 1.0,
            exponent: Rational::new(3, 2),
            mobius: [1.0, 1.0, 1.0, 2.0],
            interval: (0.0, 1.0),
        };
        let beam = make_gottlieb(&prm).unwrap();
        let doc = beam.to_beam_spec();
        let back = crate::beam::load_beam_spec(&doc).unwrap();
        for x in [0.1, 0.5, 0.9] {
            assert_relative_eq!(
                back.f_at(x).unwrap(),
                beam.f_at(x).unwrap(),
                epsilon = 1e-12
            );
            assert_relative_eq!(
                back.m_at(x).unwrap(),
                beam.m_at(x).unwrap(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let base = GottliebParams {
            k: 1.0,
            a: 1.0,
            b: 1.0,
            exponent: Rational::from(4),
            mobius: [0.0, 1.0, 1.0, 0.0],
            interval: (0.0, 1.0),
        };
        let bad_exp = GottliebParams {
            exponent: Rational::from(1),
            ..base
        };
        assert!(matches!(make_gottlieb(&bad_exp), Err(Error::Parameter(_))));
        let degenerate = GottliebParams {
            mobius: [1.0, 1.0, 1.0, 1.0],
            ..base
        };
        assert!(matches!(make_gottlieb(&degenerate), Err(Error::Parameter(_))));
        let pole = GottliebParams {
            mobius: [0.0, 1.0, -1.5, 1.0],
            ..base
        };
        assert!(matches!(make_gottlieb(&pole), Err(Error::Parameter(_))));
        let flat = GottliebParams { a: 0.0, ..base };
        assert!(matches!(make_gottlieb(&flat), Err(Error::Parameter(_))));
        let negative_scale = GottliebParams { k: -1.0, ..base };
        assert!(matches!(
            make_gottlieb(&negative_scale),
            Err(Error::Parameter(_))
        ));
        let sign_change = GottliebParams {
            a: -3.0,
            b: 1.0,
            ..base
        };
        assert!(matches!(
            make_gottlieb(&sign_change),
            Err(Error::Positivity { .. })
        ));
        let dependent = solve_normal_ode(
            &parse_expr("1").unwrap(),
            (0.0, 1.0),
            [[1.0, 1.0], [2.0, 2.0]],
        );
        assert!(matches!(dependent, Err(Error::Parameter(_))));
    }
}
