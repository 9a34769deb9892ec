//! Beam profiles `(f, m)` on an interval, the auxiliary coordinate `g` with
//! `g' = (m/f)^{1/4}`, and the beam-spec file format.
//!
//! The coordinate `g` plays the role of arc length in which every extra
//! symmetry of `(f u_xx)_xx + m u_tt = 0` straightens out; all downstream
//! modules consume `g` through [`GFunction`], which tabulates the
//! antiderivative of `g'` once and answers point and jet queries.

use crate::error::{Error, Result};
use crate::expr::{eval_f64, eval_jet, parse_expr, ExprAst};
use crate::jet::Jet;
use crate::numeric::{chebyshev_lobatto, MonotoneCubic};
use crate::quad::integrate;
use serde::{Deserialize, Serialize};

/// Number of equispaced nodes probed for positivity at load time.
const POSITIVITY_PROBES: usize = 257;

/// A beam: flexural rigidity `f(x)`, lineal mass density `m(x)`, interval.
#[derive(Clone, Debug)]
pub struct BeamProfile {
    pub name: String,
    pub f: ExprAst,
    pub m: ExprAst,
    a: f64,
    b: f64,
}

/// Flat document shape of a beam-spec file (TOML).
#[derive(Serialize, Deserialize)]
struct BeamDoc {
    name: String,
    f: String,
    m: String,
    domain: [f64; 2],
}

impl BeamProfile {
    /// Builds a profile from expression source text and validates it.
    pub fn new(name: &str, f_src: &str, m_src: &str, a: f64, b: f64) -> Result<Self> {
        let f = parse_expr(f_src)?;
        let m = parse_expr(m_src)?;
        Self::from_ast(name, f, m, a, b)
    }

    /// Builds a profile from already-parsed expressions and validates it.
    pub fn from_ast(name: &str, f: ExprAst, m: ExprAst, a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a >= b {
            return Err(Error::BeamSpec(format!(
                "domain must be a finite interval with a < b, got [{a}, {b}]"
            )));
        }
        let profile = BeamProfile {
            name: name.to_string(),
            f,
            m,
            a,
            b,
        };
        profile.positivity_probe()?;
        Ok(profile)
    }

    fn positivity_probe(&self) -> Result<()> {
        for i in 0..POSITIVITY_PROBES {
            let x = self.a
                + (self.b - self.a) * i as f64 / (POSITIVITY_PROBES - 1) as f64;
            let fv = eval_f64(&self.f, x)?;
            if !(fv > 0.0) {
                return Err(Error::Positivity {
                    quantity: "flexural rigidity f",
                    value: fv,
                    x,
                });
            }
            let mv = eval_f64(&self.m, x)?;
            if !(mv > 0.0) {
                return Err(Error::Positivity {
                    quantity: "mass density m",
                    value: mv,
                    x,
                });
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn f_at(&self, x: f64) -> Result<f64> {
        eval_f64(&self.f, x)
    }

    pub fn m_at(&self, x: f64) -> Result<f64> {
        eval_f64(&self.m, x)
    }

    pub fn f_jet(&self, x: f64) -> Result<Jet> {
        eval_jet(&self.f, x)
    }

    pub fn m_jet(&self, x: f64) -> Result<Jet> {
        eval_jet(&self.m, x)
    }

    /// `g'(x) = (m(x)/f(x))^{1/4}`.
    pub fn g_prime(&self, x: f64) -> Result<f64> {
        let fv = self.f_at(x)?;
        let mv = self.m_at(x)?;
        let q = mv / fv;
        if !(q > 0.0) {
            return Err(Error::domain(
                x,
                format!("(m/f) = {q} is not positive, g' undefined"),
            ));
        }
        Ok(q.powf(0.25))
    }

    /// Order-6 jet of `g'` at `x`.
    pub fn g_prime_jet(&self, x: f64) -> Result<Jet> {
        let fj = self.f_jet(x)?;
        let mj = self.m_jet(x)?;
        let q = mj / fj;
        if !(q.value() > 0.0) {
            return Err(Error::domain(
                x,
                format!("(m/f) = {} is not positive, g' undefined", q.value()),
            ));
        }
        Ok(q.powf(0.25))
    }

    /// Tabulates the auxiliary coordinate for this profile.
    pub fn g(&self) -> Result<GFunction> {
        GFunction::new(self)
    }

    /// Canonical beam-spec serialization (stable field order).
    pub fn to_beam_spec(&self) -> String {
        let doc = BeamDoc {
            name: self.name.clone(),
            f: self.f.to_string(),
            m: self.m.to_string(),
            domain: [self.a, self.b],
        };
        toml::to_string(&doc).expect("beam-spec serialization cannot fail")
    }
}

/// Parses and validates a beam-spec document.
pub fn load_beam_spec(doc: &str) -> Result<BeamProfile> {
    let doc: BeamDoc =
        toml::from_str(doc).map_err(|e| Error::BeamSpec(format!("malformed beam spec: {e}")))?;
    BeamProfile::new(&doc.name, &doc.f, &doc.m, doc.domain[0], doc.domain[1])
}

/// Number of tabulation intervals for [`GFunction`] (129 nodes).
const G_INTERVALS: usize = 128;
/// Per-interval quadrature tolerance for the `g` table.
const G_TOL: f64 = 1e-13;

/// The strictly increasing coordinate `g` with `g' = (m/f)^{1/4}`, `g(a) = 0`.
#[derive(Clone, Debug)]
pub struct GFunction {
    f: ExprAst,
    m: ExprAst,
    a: f64,
    b: f64,
    nodes: Vec<f64>,
    gvals: Vec<f64>,
    /// seed for the inverse map `g ↦ x` (polished by Newton afterwards)
    inverse_seed: MonotoneCubic,
}

impl GFunction {
    pub fn new(profile: &BeamProfile) -> Result<Self> {
        Self::with_resolution(profile, G_INTERVALS, G_TOL)
    }

    /// Tabulation with explicit resolution, used by the quadrature-refinement
    /// self-check (halving the step must leave `g(b)` unchanged to ~1e-11).
    pub fn with_resolution(
        profile: &BeamProfile,
        intervals: usize,
        tol: f64,
    ) -> Result<Self> {
        let (a, b) = profile.domain();
        let nodes = chebyshev_lobatto(intervals, a, b);
        let mut gvals = Vec::with_capacity(nodes.len());
        gvals.push(0.0);
        for w in nodes.windows(2) {
            let piece = integrate(|x| profile.g_prime(x), w[0], w[1], tol)?;
            let last = *gvals.last().unwrap();
            gvals.push(last + piece);
        }
        if gvals.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Parameter(
                "tabulated g is not strictly increasing".into(),
            ));
        }
        let inverse_seed = MonotoneCubic::new(gvals.clone(), nodes.clone())?;
        Ok(GFunction {
            f: profile.f.clone(),
            m: profile.m.clone(),
            a,
            b,
            nodes,
            gvals,
            inverse_seed,
        })
    }

    fn g_prime_at(&self, x: f64) -> Result<f64> {
        let fv = eval_f64(&self.f, x)?;
        let mv = eval_f64(&self.m, x)?;
        let q = mv / fv;
        if !(q > 0.0) {
            return Err(Error::domain(
                x,
                format!("(m/f) = {q} is not positive, g' undefined"),
            ));
        }
        Ok(q.powf(0.25))
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    /// `g(b)`: the length of the image interval `[0, g(b)]`.
    pub fn total(&self) -> f64 {
        *self.gvals.last().unwrap()
    }

    /// `g(x)` by nearest-node tabulation plus a short quadrature tail.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if x < self.a - 1e-12 || x > self.b + 1e-12 {
            return Err(Error::domain(x, "outside the beam interval"));
        }
        let x = x.clamp(self.a, self.b);
        let i = match self
            .nodes
            .binary_search_by(|probe| probe.partial_cmp(&x).unwrap())
        {
            Ok(i) => return Ok(self.gvals[i]),
            Err(i) => i.saturating_sub(1).min(self.nodes.len() - 2),
        };
        let base = self.nodes[i];
        Ok(self.gvals[i] + integrate(|t| self.g_prime_at(t), base, x, G_TOL)?)
    }

    /// Order-6 jet of `g` at `x0`: value from the antiderivative table,
    /// derivative slots from the jet of `(m/f)^{1/4}` shifted up by one.
    pub fn jet(&self, x0: f64) -> Result<Jet> {
        let value = self.eval(x0)?;
        let fj = eval_jet(&self.f, x0)?;
        let mj = eval_jet(&self.m, x0)?;
        let q = mj / fj;
        if !(q.value() > 0.0) {
            return Err(Error::domain(
                x0,
                format!("(m/f) = {} is not positive, g' undefined", q.value()),
            ));
        }
        let gp = q.powf(0.25);
        let mut derivs = [0.0; 6];
        for (k, d) in derivs.iter_mut().enumerate() {
            *d = gp.deriv(k);
        }
        Ok(Jet::from_derivs(value, derivs))
    }

    /// Solves `g(x) = y` for `x ∈ [a, b]`, `y ∈ [0, g(b)]`.
    pub fn inverse(&self, y: f64) -> Result<f64> {
        let total = self.total();
        if y < -1e-12 * total.abs() || y > total * (1.0 + 1e-12) {
            return Err(Error::Parameter(format!(
                "inverse argument {y} outside [0, {total}]"
            )));
        }
        let mut x = self.inverse_seed.eval(y).clamp(self.a, self.b);
        // Newton polish on g(x) - y with analytic derivative g'
        for _ in 0..60 {
            let r = self.eval(x)? - y;
            let d = self.g_prime_at(x)?;
            let step = r / d;
            let next = (x - step).clamp(self.a, self.b);
            if (next - x).abs() <= 1e-15 * (1.0 + x.abs()) {
                return Ok(next);
            }
            x = next;
        }
        let r = self.eval(x)? - y;
        if r.abs() <= 1e-10 * (1.0 + total.abs()) {
            Ok(x)
        } else {
            Err(Error::NoConvergence(format!(
                "inverse of g stalled at x = {x} with residual {r}"
            )))
        }
    }
}

/// Convenience form of the jet query: tabulates `g` for one-off use.
pub fn g_jet(profile: &BeamProfile, x0: f64) -> Result<Jet> {
    profile.g()?.jet(x0)
}

/// A field `u(t, x)` that can report a spatial jet and a second time
/// derivative, as needed by the equation residual.
pub trait WaveField {
    /// Order-6 jet of `u(t, ·)` at `x0` (slots 0..4 are consumed).
    fn u_jet(&self, t: f64, x0: f64) -> Result<Jet>;
    /// `∂²u/∂t²` at `(t, x0)`.
    fn u_tt(&self, t: f64, x0: f64) -> Result<f64>;
}

/// Adapts a pair of closures to [`WaveField`].
pub struct FnField<J, T>
where
    J: Fn(f64, f64) -> Result<Jet>,
    T: Fn(f64, f64) -> Result<f64>,
{
    pub jet: J,
    pub tt: T,
}

impl<J, T> WaveField for FnField<J, T>
where
    J: Fn(f64, f64) -> Result<Jet>,
    T: Fn(f64, f64) -> Result<f64>,
{
    fn u_jet(&self, t: f64, x0: f64) -> Result<Jet> {
        (self.jet)(t, x0)
    }

    fn u_tt(&self, t: f64, x0: f64) -> Result<f64> {
        (self.tt)(t, x0)
    }
}

/// Evaluates `(f u_xx)_xx + m u_tt` at `(t, x0)` by jet arithmetic, expanded
/// as `f'' u_xx + 2 f' u_xxx + f u_xxxx + m u_tt`.
pub fn pde_residual<W: WaveField + ?Sized>(
    profile: &BeamProfile,
    u: &W,
    t: f64,
    x0: f64,
) -> Result<f64> {
    let fj = profile.f_jet(x0)?;
    let mv = profile.m_at(x0)?;
    let uj = u.u_jet(t, x0)?;
    let utt = u.u_tt(t, x0)?;
    Ok(fj.deriv(2) * uj.deriv(2)
        + 2.0 * fj.deriv(1) * uj.deriv(3)
        + fj.value() * uj.deriv(4)
        + mv * utt)
}
