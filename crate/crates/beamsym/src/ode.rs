//! Adaptive explicit Runge–Kutta integration (Dormand–Prince 5(4)).
//!
//! Used for the normal-form second-order equation behind iso-spectral
//! construction and for trajectories of the reduced planar systems.  The
//! embedded fourth-order solution drives step-size control; the pair is
//! FSAL so each accepted step costs six right-hand-side evaluations.

use crate::error::{Error, Result};

const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
/// Fifth-order weights (identical to the last stage row: FSAL).
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
/// Embedded fourth-order weights.
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Integrates `y' = rhs(t, y)` from `t0` to every point of `ts` (which must
/// be strictly monotone, all on the same side of `t0`), returning the state
/// at each requested time.
pub fn solve_path<F>(
    rhs: F,
    t0: f64,
    y0: &[f64],
    ts: &[f64],
    tol: f64,
) -> Result<Vec<Vec<f64>>>
where
    F: Fn(f64, &[f64]) -> Result<Vec<f64>>,
{
    if ts.is_empty() {
        return Ok(Vec::new());
    }
    let forward = ts[ts.len() - 1] >= t0;
    let ordered = if forward {
        ts.windows(2).all(|w| w[1] > w[0]) && ts[0] >= t0
    } else {
        ts.windows(2).all(|w| w[1] < w[0]) && ts[0] <= t0
    };
    if !ordered {
        return Err(Error::Parameter(
            "output times must march strictly away from the initial time".into(),
        ));
    }

    let dim = y0.len();
    let mut t = t0;
    let mut y = y0.to_vec();
    let mut k0 = rhs(t, &y)?;
    let span = (ts[ts.len() - 1] - t0).abs().max(1e-12);
    let mut h = (if forward { 1.0 } else { -1.0 }) * (span / 100.0).min(0.1).max(1e-8);
    let mut out = Vec::with_capacity(ts.len());
    let mut steps = 0usize;

    for &target in ts {
        while (forward && t < target) || (!forward && t > target) {
            steps += 1;
            if steps > 2_000_000 {
                return Err(Error::NoConvergence(format!(
                    "step limit exceeded at t = {t}"
                )));
            }
            if (forward && t + h > target) || (!forward && t + h < target) {
                h = target - t;
            }
            // stages
            let mut ks: Vec<Vec<f64>> = Vec::with_capacity(7);
            ks.push(k0.clone());
            for s in 1..7 {
                let mut ys = y.clone();
                for (j, kj) in ks.iter().enumerate() {
                    let a = A[s][j];
                    if a != 0.0 {
                        for d in 0..dim {
                            ys[d] += h * a * kj[d];
                        }
                    }
                }
                ks.push(rhs(t + C[s] * h, &ys)?);
            }
            // fifth-order solution and embedded error
            let mut y5 = y.clone();
            let mut err = 0.0f64;
            for d in 0..dim {
                let mut dy5 = 0.0;
                let mut dy4 = 0.0;
                for s in 0..7 {
                    dy5 += B5[s] * ks[s][d];
                    dy4 += B4[s] * ks[s][d];
                }
                y5[d] += h * dy5;
                let scale = tol + tol * y[d].abs().max(y5[d].abs());
                err = err.max((h * (dy5 - dy4)).abs() / scale);
            }
            if err <= 1.0 {
                t += h;
                y = y5;
                k0 = ks[6].clone(); // FSAL
            }
            let factor = if err > 0.0 {
                (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
            } else {
                5.0
            };
            h *= factor;
            if h.abs() < 1e-15 * (1.0 + t.abs()) {
                return Err(Error::NoConvergence(format!(
                    "step size underflow at t = {t}"
                )));
            }
        }
        out.push(y.clone());
    }
    Ok(out)
}

/// Integrates to a single end time and returns the final state.
pub fn solve_to<F>(rhs: F, t0: f64, y0: &[f64], t1: f64, tol: f64) -> Result<Vec<f64>>
where
    F: Fn(f64, &[f64]) -> Result<Vec<f64>>,
{
    if t1 == t0 {
        return Ok(y0.to_vec());
    }
    Ok(solve_path(rhs, t0, y0, &[t1], tol)?.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exponential_growth() {
        let y = solve_to(|_, y| Ok(vec![y[0]]), 0.0, &[1.0], 1.0, 1e-12).unwrap();
        assert_relative_eq!(y[0], std::f64::consts::E, max_relative = 1e-11);
    }

    #[test]
    fn harmonic_oscillator_energy() {
        let ts: Vec<f64> = (1..=50).map(|i| 0.2 * i as f64).collect();
        let path = solve_path(
            |_, y| Ok(vec![y[1], -y[0]]),
            0.0,
            &[1.0, 0.0],
            &ts,
            1e-12,
        )
        .unwrap();
        for (i, y) in path.iter().enumerate() {
            let t = ts[i];
            assert_relative_eq!(y[0], t.cos(), epsilon = 1e-9);
            assert_relative_eq!(y[0] * y[0] + y[1] * y[1], 1.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn backward_integration() {
        let y = solve_to(|_, y| Ok(vec![y[0]]), 0.0, &[1.0], -1.0, 1e-12).unwrap();
        assert_relative_eq!(y[0], (-1f64).exp(), max_relative = 1e-11);
    }

    #[test]
    fn nonautonomous_rhs() {
        // y' = 2 t y  =>  y = exp(t^2)
        let y = solve_to(|t, y| Ok(vec![2.0 * t * y[0]]), 0.0, &[1.0], 1.5, 1e-12).unwrap();
        assert_relative_eq!(y[0], (2.25f64).exp(), max_relative = 1e-10);
    }

    #[test]
    fn rejects_unordered_outputs() {
        assert!(solve_path(|_, y| Ok(vec![y[0]]), 0.0, &[1.0], &[1.0, 0.5], 1e-10).is_err());
    }
}
