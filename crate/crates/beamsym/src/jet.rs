//! Order-6 truncated-Taylor arithmetic (forward-mode AD in one variable).
//!
//! A [`Jet`] carries the value and the first six derivatives of a scalar
//! function of `x` at a point, stored internally as Taylor coefficients
//! `c[k] = f^(k)/k!`.  All arithmetic propagates derivatives exactly (to
//! roundoff) through the usual power-series recurrences; every output slot
//! `k` depends only on input slots `<= k`.
//!
//! The order is fixed at 6 because the highest derivatives the constraint
//! tables reference are `g^(6)` and `f^(5)`.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Highest derivative order carried by a [`Jet`].
pub const JET_ORDER: usize = 6;

const N: usize = JET_ORDER + 1;
const FACT: [f64; N] = [1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0];

/// Value plus derivatives of order 1..=6 of a scalar function at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    /// Taylor coefficients: `c[k] = (d^k f / dx^k) / k!`.
    c: [f64; N],
}

impl Jet {
    /// Jet of the constant function `v`.
    pub fn constant(v: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = v;
        Jet { c }
    }

    /// Jet of the identity function at `x0`: `(x0; 1, 0, 0, 0, 0, 0)`.
    pub fn variable(x0: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = x0;
        c[1] = 1.0;
        Jet { c }
    }

    /// Builds a jet from a value and derivatives of order 1..=6.
    pub fn from_derivs(value: f64, d: [f64; JET_ORDER]) -> Self {
        let mut c = [0.0; N];
        c[0] = value;
        for k in 1..N {
            c[k] = d[k - 1] / FACT[k];
        }
        Jet { c }
    }

    /// Builds a jet directly from Taylor coefficients.
    pub fn from_taylor(c: [f64; N]) -> Self {
        Jet { c }
    }

    /// Taylor coefficients `f^(k)/k!`.
    pub fn taylor(&self) -> [f64; N] {
        self.c
    }

    /// Function value (derivative of order 0).
    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// Derivative of order `k` (`k <= 6`; `k = 0` is the value).
    pub fn deriv(&self, k: usize) -> f64 {
        self.c[k] * FACT[k]
    }

    /// Derivatives of order 1..=6 as an array.
    pub fn derivs(&self) -> [f64; JET_ORDER] {
        let mut d = [0.0; JET_ORDER];
        for k in 1..N {
            d[k - 1] = self.deriv(k);
        }
        d
    }

    /// True if every coefficient is finite.
    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|v| v.is_finite())
    }

    /// Jet of the derivative function: slot `k` becomes derivative `k + 1`
    /// of the original.  The top slot is zero-filled, so each application
    /// loses one order of accuracy in the highest derivatives.
    pub fn derivative(&self) -> Jet {
        let mut c = [0.0; N];
        for k in 0..N - 1 {
            // d^k of f' = d^(k+1) of f
            c[k] = self.c[k + 1] * FACT[k + 1] / FACT[k];
        }
        Jet { c }
    }

    /// Reciprocal `1/self`; infinite coefficients when the value is zero.
    pub fn recip(self) -> Jet {
        let mut q = [0.0; N];
        q[0] = 1.0 / self.c[0];
        for k in 1..N {
            let mut acc = 0.0;
            for j in 0..k {
                acc += q[j] * self.c[k - j];
            }
            q[k] = -acc / self.c[0];
        }
        Jet { c: q }
    }

    /// Integer power by repeated multiplication (valid for any base value).
    pub fn powi(self, n: i32) -> Jet {
        if n < 0 {
            return self.recip().powi(-n);
        }
        let mut acc = Jet::constant(1.0);
        let mut base = self;
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Real power `self^r` via `exp(r ln self)`; requires a positive value.
    ///
    /// Integer `r` is routed through [`Jet::powi`] so that non-positive bases
    /// still work where the function itself is defined.
    pub fn powf(self, r: f64) -> Jet {
        if r == r.round() && r.abs() <= 64.0 {
            return self.powi(r as i32);
        }
        (self.ln() * r).exp()
    }

    /// Exponential.
    pub fn exp(self) -> Jet {
        let mut e = [0.0; N];
        e[0] = self.c[0].exp();
        for k in 1..N {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += (j as f64) * self.c[j] * e[k - j];
            }
            e[k] = acc / k as f64;
        }
        Jet { c: e }
    }

    /// Natural logarithm; NaN coefficients for non-positive values.
    pub fn ln(self) -> Jet {
        let mut l = [0.0; N];
        l[0] = self.c[0].ln();
        for k in 1..N {
            let mut acc = (k as f64) * self.c[k];
            for j in 1..k {
                acc -= (j as f64) * l[j] * self.c[k - j];
            }
            l[k] = acc / (k as f64 * self.c[0]);
        }
        Jet { c: l }
    }

    /// Square root by the direct recurrence; NaN for negative values.
    pub fn sqrt(self) -> Jet {
        let mut s = [0.0; N];
        s[0] = self.c[0].sqrt();
        for k in 1..N {
            let mut acc = self.c[k];
            for j in 1..k {
                acc -= s[j] * s[k - j];
            }
            s[k] = acc / (2.0 * s[0]);
        }
        Jet { c: s }
    }

    /// Sine and cosine together (they share one recurrence).
    pub fn sin_cos(self) -> (Jet, Jet) {
        let mut s = [0.0; N];
        let mut c = [0.0; N];
        s[0] = self.c[0].sin();
        c[0] = self.c[0].cos();
        for k in 1..N {
            let mut sa = 0.0;
            let mut ca = 0.0;
            for j in 1..=k {
                sa += (j as f64) * self.c[j] * c[k - j];
                ca += (j as f64) * self.c[j] * s[k - j];
            }
            s[k] = sa / k as f64;
            c[k] = -ca / k as f64;
        }
        (Jet { c: s }, Jet { c })
    }

    /// Sine.
    pub fn sin(self) -> Jet {
        self.sin_cos().0
    }

    /// Cosine.
    pub fn cos(self) -> Jet {
        self.sin_cos().1
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        let mut c = self.c;
        for k in 0..N {
            c[k] += rhs.c[k];
        }
        Jet { c }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        let mut c = self.c;
        for k in 0..N {
            c[k] -= rhs.c[k];
        }
        Jet { c }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let mut c = [0.0; N];
        for k in 0..N {
            let mut acc = 0.0;
            for j in 0..=k {
                acc += self.c[j] * rhs.c[k - j];
            }
            c[k] = acc;
        }
        Jet { c }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, rhs: Jet) -> Jet {
        let mut q = [0.0; N];
        for k in 0..N {
            let mut acc = self.c[k];
            for j in 0..k {
                acc -= q[j] * rhs.c[k - j];
            }
            q[k] = acc / rhs.c[0];
        }
        Jet { c: q }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        let mut c = self.c;
        for v in &mut c {
            *v = -*v;
        }
        Jet { c }
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, rhs: f64) -> Jet {
        let mut c = self.c;
        c[0] += rhs;
        Jet { c }
    }
}

impl Sub<f64> for Jet {
    type Output = Jet;
    fn sub(self, rhs: f64) -> Jet {
        let mut c = self.c;
        c[0] -= rhs;
        Jet { c }
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        let mut c = self.c;
        for v in &mut c {
            *v *= rhs;
        }
        Jet { c }
    }
}

impl Mul<Jet> for f64 {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        rhs * self
    }
}

impl Div<f64> for Jet {
    type Output = Jet;
    fn div(self, rhs: f64) -> Jet {
        self * (1.0 / rhs)
    }
}
