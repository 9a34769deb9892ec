//! Shared helpers for the integration suites.
//!
//! The rigidity-constraint integrator here deliberately restates the
//! fourth-order equation instead of calling into the crate, so that
//! trajectories fed back into the reduction stages come from an
//! independent source.

use beamsym::gottlieb::{GottliebParams, Rational};
use beamsym::ode::solve_path;
use rand::Rng;

/// Right-hand side of the admissible-rigidity equation solved for f'''':
/// f'''' = f'f'''/f + (11/10) f''²/f − (12/5) f'²f''/f² + (9/10) f'⁴/f³.
pub fn constraint_f4(f: f64, f1: f64, f2: f64, f3: f64) -> f64 {
    f1 * f3 / f + (11.0 / 10.0) * f2 * f2 / f - (12.0 / 5.0) * f1 * f1 * f2 / (f * f)
        + (9.0 / 10.0) * f1.powi(4) / f.powi(3)
}

/// Integrates the constraint from the state `(f, f', f'', f''')` at the
/// first grid point, returning `(f, f', f'', f''', f'''')` rows.
pub fn constraint_trajectory(ic: [f64; 4], xs: &[f64]) -> Vec<[f64; 5]> {
    let states = solve_path(
        |_, s| {
            Ok(vec![
                s[1],
                s[2],
                s[3],
                constraint_f4(s[0], s[1], s[2], s[3]),
            ])
        },
        xs[0],
        &ic,
        xs,
        1e-12,
    )
    .expect("constraint integration");
    states
        .iter()
        .map(|s| [s[0], s[1], s[2], s[3], constraint_f4(s[0], s[1], s[2], s[3])])
        .collect()
}

/// Initial state realizing prescribed stage-2 coordinates: `t = f`,
/// `y = f'`, `z = y'/y` and `ż` at the trajectory start.
pub fn constraint_seed(t0: f64, y0: f64, z0: f64, zd0: f64) -> [f64; 4] {
    [t0, y0, z0 * y0 * y0, y0.powi(3) * (zd0 + 2.0 * z0 * z0)]
}

/// Draws a valid family member with the given exponent: affine part
/// positive on (0, 1), Möbius part nondegenerate and pole-free.
pub fn random_gottlieb<R: Rng>(rng: &mut R, exponent: Rational) -> GottliebParams {
    loop {
        let params = GottliebParams {
            k: rng.gen_range(0.5..3.0),
            a: rng.gen_range(0.5..2.0),
            b: rng.gen_range(0.5..2.0),
            exponent,
            mobius: [
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            ],
            interval: (0.0, 1.0),
        };
        let [l, m, p, q] = params.mobius;
        if (m * p - l * q).abs() < 0.2 {
            continue;
        }
        if params.validate().is_ok() {
            return params;
        }
    }
}
