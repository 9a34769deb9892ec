//! Symmetric banded matrices, banded Cholesky, and shift-invert inverse
//! iteration for generalized eigenproblems with diagonal mass matrices.
//!
//! Bandwidth-2 matrices cover the fourth-order stencils used by the
//! spectral module; the implementation is generic in the bandwidth anyway
//! since the extra generality costs nothing.

use crate::error::{Error, Result};

/// Symmetric banded matrix storing the main diagonal and `bw` superdiagonals.
///
/// `bands[k][i]` holds entry `(i, i + k)`.
#[derive(Clone, Debug)]
pub struct SymmetricBanded {
    n: usize,
    bw: usize,
    bands: Vec<Vec<f64>>,
}

impl SymmetricBanded {
    pub fn zeros(n: usize, bw: usize) -> Self {
        let bands = (0..=bw).map(|k| vec![0.0; n.saturating_sub(k)]).collect();
        SymmetricBanded { n, bw, bands }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bandwidth(&self) -> usize {
        self.bw
    }

    /// Entry `(i, j)`; zero outside the band.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let k = hi - lo;
        if k > self.bw {
            0.0
        } else {
            self.bands[k][lo]
        }
    }

    /// Adds `v` to entry `(i, j)` (and by symmetry `(j, i)`).
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let k = hi - lo;
        assert!(k <= self.bw, "entry ({i}, {j}) outside bandwidth {}", self.bw);
        self.bands[k][lo] += v;
    }

    /// Sets entry `(i, j)` (and by symmetry `(j, i)`).
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let k = hi - lo;
        assert!(k <= self.bw, "entry ({i}, {j}) outside bandwidth {}", self.bw);
        self.bands[k][lo] = v;
    }

    /// Matrix–vector product.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let mut acc = self.bands[0][i] * x[i];
            for k in 1..=self.bw {
                if i + k < self.n {
                    acc += self.bands[k][i] * x[i + k];
                }
                if i >= k {
                    acc += self.bands[k][i - k] * x[i - k];
                }
            }
            y[i] = acc;
        }
        y
    }

    /// Banded Cholesky factorization `A = L Lᵀ`.
    ///
    /// Fails with a diagnostic if the matrix is not positive definite.
    pub fn cholesky(&self) -> Result<BandedCholesky> {
        let (n, bw) = (self.n, self.bw);
        // l[k][j] = L[j + k][j]
        let mut l: Vec<Vec<f64>> = (0..=bw)
            .map(|k| vec![0.0; n.saturating_sub(k)])
            .collect();
        for j in 0..n {
            let mut diag = self.bands[0][j];
            for k in 1..=bw.min(j) {
                diag -= l[k][j - k] * l[k][j - k];
            }
            if diag <= 0.0 {
                return Err(Error::Parameter(format!(
                    "matrix is not positive definite (pivot {diag} at row {j})"
                )));
            }
            let ljj = diag.sqrt();
            l[0][j] = ljj;
            for k in 1..=bw {
                let i = j + k;
                if i >= n {
                    break;
                }
                // A[i][j] is stored at bands[k][j]
                let mut v = self.bands[k][j];
                // sum over common history columns c with both L[i][c], L[j][c] in band
                let c_lo = i.saturating_sub(bw).max(j.saturating_sub(bw));
                for c in c_lo..j {
                    v -= l[i - c][c] * l[j - c][c];
                }
                l[k][j] = v / ljj;
            }
        }
        Ok(BandedCholesky { n, bw, l })
    }
}

/// Lower-triangular banded Cholesky factor.
pub struct BandedCholesky {
    n: usize,
    bw: usize,
    /// `l[k][j] = L[j + k][j]`
    l: Vec<Vec<f64>>,
}

impl BandedCholesky {
    /// Solves `L Lᵀ x = b`.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        assert_eq!(b.len(), self.n);
        let mut y = b.to_vec();
        // forward: L y = b
        for i in 0..self.n {
            let mut v = y[i];
            for k in 1..=self.bw.min(i) {
                v -= self.l[k][i - k] * y[i - k];
            }
            y[i] = v / self.l[0][i];
        }
        // backward: Lᵀ x = y
        for i in (0..self.n).rev() {
            let mut v = y[i];
            for k in 1..=self.bw {
                if i + k < self.n {
                    v -= self.l[k][i] * y[i + k];
                }
            }
            y[i] = v / self.l[0][i];
        }
        y
    }
}

/// One generalized eigenpair of `K φ = λ M φ`.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub lambda: f64,
    pub phi: Vec<f64>,
    /// `‖Kφ − λMφ‖₂ / (λ ‖Mφ‖₂)`
    pub residual: f64,
}

fn m_dot(m: &[f64], a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .zip(m)
        .map(|((&ai, &bi), &mi)| ai * bi * mi)
        .sum()
}

/// Computes the `n_modes` smallest eigenpairs of `K φ = λ M φ` (`M` diagonal
/// positive, `K` symmetric positive definite) by inverse iteration on the
/// Cholesky factor of `K`, deflating converged modes in the `M`-inner
/// product.  Deterministic: start vectors are fixed sine profiles.
pub fn smallest_eigenpairs(
    k: &SymmetricBanded,
    m_diag: &[f64],
    n_modes: usize,
    tol: f64,
    max_iter: usize,
) -> Result<Vec<EigenPair>> {
    let n = k.n();
    assert_eq!(m_diag.len(), n);
    if m_diag.iter().any(|&m| m <= 0.0) {
        return Err(Error::Parameter("mass matrix must be positive".into()));
    }
    let chol = k.cholesky()?;
    let mut pairs: Vec<EigenPair> = Vec::with_capacity(n_modes);

    for mode in 0..n_modes {
        // deterministic start resembling the target mode shape
        let mut v: Vec<f64> = (0..n)
            .map(|i| {
                let s = std::f64::consts::PI * (mode as f64 + 1.0) * (i as f64 + 1.0)
                    / (n as f64 + 1.0);
                s.sin()
            })
            .collect();
        let res_target = tol.max(1e-12);
        let mut lambda = 0.0;
        let mut best_res = f64::INFINITY;
        let mut stagnant = 0;
        let mut converged = false;
        for _ in 0..max_iter {
            // M-orthogonalize against converged modes (twice, for round-off)
            for _ in 0..2 {
                for p in pairs.iter() {
                    let c = m_dot(m_diag, &v, &p.phi);
                    for i in 0..n {
                        v[i] -= c * p.phi[i];
                    }
                }
            }
            let norm = m_dot(m_diag, &v, &v).sqrt();
            if norm < 1e-300 {
                return Err(Error::NoConvergence(format!(
                    "deflated start vector vanished for mode {mode}"
                )));
            }
            for vi in v.iter_mut() {
                *vi /= norm;
            }
            // w = K^{-1} M v̂.  Then K w = M v̂ exactly, so both the Rayleigh
            // quotient of w and its eigen-residual need no matrix product:
            //   λ = (wᵀ M v̂)/(wᵀ M w),   Kw − λMw = M v̂ − λ M w.
            let mv: Vec<f64> = v.iter().zip(m_diag).map(|(&vi, &mi)| vi * mi).collect();
            let w = chol.solve(&mv);
            let num = w.iter().zip(&mv).map(|(&a, &b)| a * b).sum::<f64>();
            let den = m_dot(m_diag, &w, &w);
            lambda = num / den;
            let mut res_num = 0.0;
            let mut res_den = 0.0;
            for i in 0..n {
                let r = m_diag[i] * (v[i] - lambda * w[i]);
                res_num += r * r;
                res_den += (lambda * m_diag[i] * w[i]).powi(2);
            }
            let res = (res_num / res_den.max(1e-300)).sqrt();
            v = w;
            if res <= res_target {
                converged = true;
                break;
            }
            // round-off floor: residual no longer improving
            if res >= 0.99 * best_res {
                stagnant += 1;
                if stagnant >= 8 {
                    converged = res < 1e-7;
                    break;
                }
            } else {
                stagnant = 0;
                best_res = res;
            }
        }
        if !converged {
            return Err(Error::NoConvergence(format!(
                "inverse iteration stalled on mode {mode} (λ ≈ {lambda})"
            )));
        }
        let norm = m_dot(m_diag, &v, &v).sqrt();
        for vi in v.iter_mut() {
            *vi /= norm;
        }
        let kv = k.matvec(&v);
        let mut res_num = 0.0;
        let mut res_den = 0.0;
        for i in 0..n {
            let r = kv[i] - lambda * m_diag[i] * v[i];
            res_num += r * r;
            res_den += (lambda * m_diag[i] * v[i]).powi(2);
        }
        let residual = (res_num / res_den.max(1e-300)).sqrt();
        pairs.push(EigenPair {
            lambda,
            phi: v,
            residual,
        });
    }
    pairs.sort_by(|a, b| a.lambda.partial_cmp(&b.lambda).unwrap());
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn second_difference(n: usize) -> SymmetricBanded {
        let mut a = SymmetricBanded::zeros(n, 1);
        for i in 0..n {
            a.set(i, i, 2.0);
            if i + 1 < n {
                a.set(i, i + 1, -1.0);
            }
        }
        a
    }

    #[test]
    fn cholesky_solve_round_trip() {
        let mut a = SymmetricBanded::zeros(6, 2);
        for i in 0..6 {
            a.set(i, i, 6.0 + i as f64);
            if i + 1 < 6 {
                a.set(i, i + 1, -2.5);
            }
            if i + 2 < 6 {
                a.set(i, i + 2, 0.75);
            }
        }
        let chol = a.cholesky().unwrap();
        let b: Vec<f64> = (0..6).map(|i| (i as f64 + 1.0).sin()).collect();
        let x = chol.solve(&b);
        let back = a.matvec(&x);
        for i in 0..6 {
            assert_relative_eq!(back[i], b[i], max_relative = 1e-12);
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let mut a = SymmetricBanded::zeros(3, 1);
        a.set(0, 0, 1.0);
        a.set(1, 1, -1.0);
        a.set(2, 2, 1.0);
        assert!(a.cholesky().is_err());
    }

    #[test]
    fn dirichlet_laplacian_eigenvalues() {
        let n = 40;
        let a = second_difference(n);
        let m = vec![1.0; n];
        let pairs = smallest_eigenpairs(&a, &m, 3, 1e-13, 400).unwrap();
        for (k, p) in pairs.iter().enumerate() {
            let exact = 4.0
                * (std::f64::consts::PI * (k as f64 + 1.0) / (2.0 * (n as f64 + 1.0)))
                    .sin()
                    .powi(2);
            assert_relative_eq!(p.lambda, exact, max_relative = 1e-10);
            assert!(p.residual < 1e-8, "residual {}", p.residual);
        }
    }

    #[test]
    fn generalized_problem_with_diagonal_mass() {
        // K = second difference, M = diag(1 + i/n): eigenvalues shift but
        // M-orthogonality and the Rayleigh residual must hold.
        let n = 30;
        let a = second_difference(n);
        let m: Vec<f64> = (0..n).map(|i| 1.0 + i as f64 / n as f64).collect();
        let pairs = smallest_eigenpairs(&a, &m, 4, 1e-13, 400).unwrap();
        assert!(pairs.windows(2).all(|w| w[0].lambda < w[1].lambda));
        for p in pairs.iter() {
            assert!(p.residual < 1e-8);
        }
        for i in 0..4 {
            for j in 0..i {
                let d = m_dot(&m, &pairs[i].phi, &pairs[j].phi);
                assert!(d.abs() < 1e-9, "modes {i},{j} not M-orthogonal: {d}");
            }
        }
    }

    #[test]
    fn iteration_is_deterministic() {
        let n = 25;
        let a = second_difference(n);
        let m = vec![1.0; n];
        let p1 = smallest_eigenpairs(&a, &m, 2, 1e-13, 400).unwrap();
        let p2 = smallest_eigenpairs(&a, &m, 2, 1e-13, 400).unwrap();
        for (a, b) in p1.iter().zip(&p2) {
            assert_eq!(a.lambda, b.lambda);
            assert_eq!(a.phi, b.phi);
        }
    }
}
