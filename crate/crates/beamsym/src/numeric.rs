//! Sampling grids, safeguarded root finding, monotone interpolation, and
//! finite-difference derivative probes shared across the crate.

use crate::error::{Error, Result};

/// `n` interior Chebyshev points of `[a, b]` in ascending order.
///
/// These cluster near the ends without touching them, which keeps
/// denominators like `g` or `f` safely inside their domain when the
/// admissible region is the open interval.
pub fn chebyshev_interior(n: usize, a: f64, b: f64) -> Vec<f64> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (0..n)
        .map(|i| {
            let theta = std::f64::consts::PI * (2.0 * (n - 1 - i) as f64 + 1.0)
                / (2.0 * n as f64);
            mid + half * theta.cos()
        })
        .collect()
}

/// `n + 1` Chebyshev–Lobatto points of `[a, b]` (endpoints included),
/// ascending.
pub fn chebyshev_lobatto(n: usize, a: f64, b: f64) -> Vec<f64> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (0..=n)
        .map(|i| {
            let theta = std::f64::consts::PI * (n - i) as f64 / n as f64;
            let x = mid + half * theta.cos();
            if i == 0 {
                a
            } else if i == n {
                b
            } else {
                x
            }
        })
        .collect()
}

/// Root of `f` inside the bracket `[lo, hi]` where `f(lo)` and `f(hi)` have
/// opposite signs.  `f` returns `(value, derivative)`; Newton steps are used
/// whenever they stay inside the shrinking bracket, bisection otherwise.
pub fn bracket_newton<F: Fn(f64) -> (f64, f64)>(
    f: F,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let (fa, _) = f(a);
    let (fb, _) = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Parameter(format!(
            "root bracket [{lo}, {hi}] has no sign change"
        )));
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..max_iter {
        let (fx, dfx) = f(x);
        if fx == 0.0 || (b - a).abs() < tol {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
        } else {
            b = x;
        }
        let newton = x - fx / dfx;
        x = if dfx != 0.0 && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
    }
    let (fx, _) = f(x);
    if fx.abs() < tol || (b - a).abs() < tol.max(1e-14) {
        Ok(x)
    } else {
        Err(Error::NoConvergence(format!(
            "root search stalled at x = {x} with residual {fx}"
        )))
    }
}

/// Monotone piecewise-cubic interpolant with Fritsch–Carlson slopes.
///
/// Given strictly monotone data it produces a strictly monotone curve, so it
/// is safe for seeding inverse maps of increasing functions.
#[derive(Clone, Debug)]
pub struct MonotoneCubic {
    xs: Vec<f64>,
    ys: Vec<f64>,
    ds: Vec<f64>,
}

impl MonotoneCubic {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        let n = xs.len();
        if n < 2 || ys.len() != n {
            return Err(Error::Parameter(
                "monotone cubic needs at least two matching samples".into(),
            ));
        }
        if xs.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Parameter(
                "monotone cubic abscissae must be strictly increasing".into(),
            ));
        }
        // secant slopes
        let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
        let del: Vec<f64> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / h[i]).collect();
        let mut ds = vec![0.0; n];
        // interior slopes: weighted harmonic mean when secants share a sign
        for i in 1..n - 1 {
            if del[i - 1] * del[i] > 0.0 {
                let w1 = 2.0 * h[i] + h[i - 1];
                let w2 = h[i] + 2.0 * h[i - 1];
                ds[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
            }
        }
        // one-sided endpoint slopes, clamped to preserve monotonicity
        let end_slope = |h0: f64, h1: f64, d0: f64, d1: f64| -> f64 {
            let mut d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
            if d * d0 <= 0.0 {
                d = 0.0;
            } else if d0 * d1 < 0.0 && d.abs() > 3.0 * d0.abs() {
                d = 3.0 * d0;
            }
            d
        };
        ds[0] = if n == 2 {
            del[0]
        } else {
            end_slope(h[0], h[1], del[0], del[1])
        };
        ds[n - 1] = if n == 2 {
            del[0]
        } else {
            end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3])
        };
        Ok(MonotoneCubic { xs, ys, ds })
    }

    /// Interpolated value; arguments outside the data range are clamped to
    /// the boundary segments.
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let i = match self
            .xs
            .binary_search_by(|probe| probe.partial_cmp(&x).unwrap())
        {
            Ok(i) => return self.ys[i],
            Err(0) => 0,
            Err(i) if i >= n => n - 2,
            Err(i) => i - 1,
        };
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let (d0, d1) = (self.ds[i], self.ds[i + 1]);
        let t2 = t * t;
        let t3 = t2 * t;
        y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + h * d0 * (t3 - 2.0 * t2 + t)
            + y1 * (-2.0 * t3 + 3.0 * t2)
            + h * d1 * (t3 - t2)
    }
}

/// First derivative by central differences with one Richardson sweep
/// (leading error O(h⁴)).
pub fn fd1<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

/// Second derivative by central differences with one Richardson sweep.
pub fn fd2<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

/// Third derivative by central differences with one Richardson sweep.
pub fn fd3<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h))
        / (2.0 * h * h * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn interior_nodes_stay_inside_and_ascend() {
        let xs = chebyshev_interior(33, 1.0, 2.0);
        assert_eq!(xs.len(), 33);
        assert!(xs[0] > 1.0 && xs[32] < 2.0);
        assert!(xs.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn lobatto_nodes_hit_endpoints() {
        let xs = chebyshev_lobatto(128, -1.5, 0.5);
        assert_eq!(xs.len(), 129);
        assert_eq!(xs[0], -1.5);
        assert_eq!(xs[128], 0.5);
        assert!(xs.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn newton_finds_cube_root_of_two() {
        let r = bracket_newton(|x| (x * x * x - 2.0, 3.0 * x * x), 1.0, 2.0, 1e-14, 100)
            .unwrap();
        assert_relative_eq!(r, 2f64.powf(1.0 / 3.0), max_relative = 1e-14);
    }

    #[test]
    fn newton_rejects_unbracketed_root() {
        assert!(bracket_newton(|x| (x * x + 1.0, 2.0 * x), -1.0, 1.0, 1e-12, 50).is_err());
    }

    #[test]
    fn monotone_cubic_reproduces_monotone_data() {
        let xs: Vec<f64> = (0..20).map(|i| i as f64 / 19.0).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| (2.0 * x).sinh()).collect();
        let spline = MonotoneCubic::new(xs.clone(), ys.clone()).unwrap();
        for i in 0..xs.len() {
            assert_relative_eq!(spline.eval(xs[i]), ys[i], max_relative = 1e-14);
        }
        // strict monotonicity on a fine probe grid
        let probes: Vec<f64> = (0..=400).map(|i| i as f64 / 400.0).collect();
        let vals: Vec<f64> = probes.iter().map(|&x| spline.eval(x)).collect();
        assert!(vals.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn finite_differences_match_exp() {
        let e = std::f64::consts::E;
        assert_relative_eq!(fd1(|x| x.exp(), 1.0, 1e-3), e, max_relative = 1e-10);
        assert_relative_eq!(fd2(|x| x.exp(), 1.0, 1e-3), e, max_relative = 1e-8);
        assert_relative_eq!(fd3(|x| x.exp(), 1.0, 1e-2), e, max_relative = 1e-7);
    }
}
