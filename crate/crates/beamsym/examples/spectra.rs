//! Clamped-clamped spectra: analytic uniform frequencies, the banded
//! finite-difference eigensolver, and an iso-spectrality verification.

use beamsym::gottlieb::{make_gottlieb, GottliebParams, Rational};
use beamsym::spectral::{
    assemble, clamped_beta, isospectral_check, solve_spectrum, uniform_frequencies,
    BoundaryCondition,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Roots of cos(beta) cosh(beta) = 1 and the uniform frequencies.
    println!("clamped-clamped characteristic roots:");
    for k in 1..=4 {
        println!("  beta_{k} = {:.12}", clamped_beta(k));
    }
    let uniform = uniform_frequencies(3, 1.0);
    println!("\nuniform beam, unit length: omega = {:.6}, {:.6}, {:.6}", uniform[0], uniform[1], uniform[2]);

    // A tapered family member: same spectrum as a (shorter) uniform beam.
    let params = GottliebParams {
        k: 1.0,
        a: 1.0,
        b: 1.0,
        exponent: Rational::from(4),
        mobius: [1.0, 2.0, 3.0, 1.0],
        interval: (0.0, 1.0),
    };
    let beam = make_gottlieb(&params)?;
    println!("\ntapered member (m = 4, Möbius (1,2,3,1)): f = {}", beam.f);

    let d = assemble(&beam, 1200, BoundaryCondition::ClampedClamped)?;
    let s = solve_spectrum(&d, 3)?;
    println!("finite-difference spectrum at N = 1200:");
    for (k, w) in s.omegas.iter().enumerate() {
        println!("  omega_{} = {w:.8}   (eigen-residual {:.1e})", k + 1, s.residuals[k]);
    }

    let report = isospectral_check(&beam, 3, 1200, 5e-3)?;
    println!(
        "\niso-spectral with a uniform beam of length {:.8}:",
        report.length
    );
    println!(
        "{:>5} {:>16} {:>16} {:>12} {:>8}",
        "mode", "numeric", "reference", "rel dev", "order"
    );
    for m in &report.modes {
        println!(
            "{:>5} {:>16.8} {:>16.8} {:>12.2e} {:>8.3}",
            m.index, m.omega_numeric, m.omega_reference, m.relative_deviation, m.observed_order
        );
    }
    println!(
        "verdict: {} (max deviation {:.2e})",
        if report.ok { "iso-spectral" } else { "NOT iso-spectral" },
        report.max_relative_deviation
    );
    Ok(())
}
