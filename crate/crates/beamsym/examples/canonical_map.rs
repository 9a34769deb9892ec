//! Build the explicit point transformation taking a beam onto its class
//! representative, and probe whether the beam really lies on that orbit.
//!
//! Matching symmetry algebras are necessary but not sufficient: the
//! orbit probe pulls an exact canonical solution back through the map
//! and measures the residual of the original equation.  On-orbit beams
//! score near machine precision; impostors score order one.

use beamsym::beam::BeamProfile;
use beamsym::classifier::classify;
use beamsym::equivalence::{build_transform, ORBIT_TOL};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The wedge beam f = m = x maps onto (X U_XX)_XX + X U_TT = 0.
    let wedge = BeamProfile::new("wedge", "x", "x", 1.0, 2.0)?;
    let cls = classify(&wedge, 33, 1e-9)?;
    let tr = build_transform(&wedge, &cls, None)?;

    println!("beam: f = x, m = x on [1, 2]");
    println!("class: {}  (kappa = {})", cls.label, cls.kappa);
    println!("canonical form: {}", tr.canonical().equation());
    let c = tr.constants();
    println!("constants: c1 = {}, c2 = {}, c3 = {}", c.c1, c.c2, c.c3);

    // Where do points go?  X = 2 c2 (g + kappa); here g = x - 1, kappa = 1.
    println!("\n  (t, x)          ->  (T, X)");
    for x in [1.0, 1.25, 1.5, 2.0] {
        let (tt, xx) = tr.coords(0.3, x)?;
        println!("  (0.30, {x:.2})    ->  ({tt:.2}, {xx:.4})");
    }

    // Round trip through the map and back.
    let (tt, xx, uu) = tr.push_point(0.3, 1.7, 2.0)?;
    let (t, x, u) = tr.invert_point(tt, xx, uu)?;
    println!("\nround trip (0.3, 1.7, 2.0) -> ({tt:.4}, {xx:.4}, {uu:.4}) -> ({t:.4}, {x:.4}, {u:.4})");

    // Orbit membership: the wedge is genuinely equivalent to its
    // representative ...
    let probe = tr.orbit_check()?;
    println!(
        "\nwedge orbit probe: max residual {:.2e} over {} points (tol {ORBIT_TOL:.0e}) -> {}",
        probe.max_residual,
        probe.probed,
        if probe.ok { "on orbit" } else { "off orbit" }
    );

    // ... but f = m = x^2 only *matches the algebra* of the scaling
    // class.  No point transformation reaches the wedge from it, and the
    // probe says so.
    let impostor = BeamProfile::new("impostor", "x^2", "x^2", 1.0, 2.0)?;
    let cls2 = classify(&impostor, 33, 1e-9)?;
    let tr2 = build_transform(&impostor, &cls2, None)?;
    let probe2 = tr2.orbit_check()?;
    println!(
        "x^2 orbit probe:   max residual {:.2e} over {} points (tol {ORBIT_TOL:.0e}) -> {}",
        probe2.max_residual,
        probe2.probed,
        if probe2.ok { "on orbit" } else { "off orbit" }
    );
    Ok(())
}
