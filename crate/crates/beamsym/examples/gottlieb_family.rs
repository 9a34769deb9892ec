//! Generate members of the iso-spectral beam family.
//!
//! Power-law rigidities f = K (Ax+B)^m admit a full symmetry algebra for
//! exactly four exponents — the roots of m (4m^3 - 32m^2 + 79m - 60) = 0
//! — and each exponent carries a three-parameter Möbius family of
//! densities, every member equivalent to a uniform beam.

use beamsym::classifier::classify;
use beamsym::gottlieb::{exponent_polynomial, exponent_roots, make_gottlieb, GottliebParams, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("admissible exponents (exact rational arithmetic):");
    for r in exponent_roots() {
        println!("  m = {:<4}  polynomial value = {}", r.to_string(), exponent_polynomial(r));
    }
    // Nearby rationals do not work:
    for bad in [Rational::new(1, 2), Rational::from(1), Rational::from(3)] {
        println!("  m = {:<4}  polynomial value = {}  (excluded)", bad.to_string(), exponent_polynomial(bad));
    }

    println!("\nfamily members with Möbius (L, M, P, Q) = (1, 2, 3, 1) on [0, 1]:");
    println!(
        "{:>5}  {:<10}  {:>10}  {:>10}",
        "m", "class", "max |H|", "f(1)/f(0)"
    );
    for exponent in exponent_roots() {
        let params = GottliebParams {
            k: 1.0,
            a: 1.0,
            b: 1.0,
            exponent,
            mobius: [1.0, 2.0, 3.0, 1.0],
            interval: (0.0, 1.0),
        };
        let beam = make_gottlieb(&params)?;
        let cls = classify(&beam, 33, 1e-9)?;
        let ratio = beam.f_at(1.0)? / beam.f_at(0.0)?;
        let worst = cls.max_h.iter().fold(0.0f64, |a, &b| a.max(b));
        println!(
            "{:>5}  {:<10}  {:>10.2e}  {:>10.4}",
            exponent.to_string(),
            cls.label.as_str(),
            worst,
            ratio
        );
    }

    // The generated density for m = 3/2 involves sqrt(Ax+B); print one
    // member's closed form as stored in a beam-spec file.
    let params = GottliebParams {
        k: 2.0,
        a: 1.0,
        b: 1.0,
        exponent: Rational::new(3, 2),
        mobius: [0.0, 1.0, 1.0, 0.5],
        interval: (0.0, 1.0),
    };
    let beam = make_gottlieb(&params)?;
    println!("\nbeam-spec for m = 3/2, Möbius (0, 1, 1, 1/2):\n{}", beam.to_beam_spec());
    Ok(())
}
