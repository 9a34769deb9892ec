//! Evaluate symmetry generators and push them through the canonical map.
//!
//! Every beam admits time translation X1 and amplitude scaling X2.  The
//! non-generic classes add more: the maximal class gains a dilation X3
//! and a translation X4 in the g coordinate.  Pushing each generator
//! through the equivalence map must land exactly on the corresponding
//! generator of the canonical equation — including the commutators.

use beamsym::beam::BeamProfile;
use beamsym::classifier::generators::{lie_bracket, SymmetryFrame, SymmetryGenerator};
use beamsym::classifier::classify;
use beamsym::equivalence::build_transform;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beam = BeamProfile::new("power-taper", "(1+x)^4", "(1+x)^4", 0.0, 1.0)?;
    let cls = classify(&beam, 33, 1e-9)?;
    let frame = SymmetryFrame::new(&beam)?;

    println!("beam: f = m = (1+x)^4, class {}", cls.label);
    println!("\ngenerator components (tau, xi, eta) at (t, x, u) = (0.3, 0.5, 2.0):");
    let gens = [
        SymmetryGenerator::X1,
        SymmetryGenerator::X2,
        SymmetryGenerator::X3,
        SymmetryGenerator::X4,
    ];
    for g in gens {
        let field = frame.vector_field(g);
        let [tau, xi, eta] = field.components(0.3, 0.5, 2.0)?;
        println!("  {g:?}: ({tau:>8.4}, {xi:>8.4}, {eta:>8.4})");
    }

    // Commutators close on the algebra: [X1, X3] = 4 X1, [X3, X4] = -2 X4.
    println!("\ncommutators at the same point:");
    let f1 = frame.vector_field(SymmetryGenerator::X1);
    let f3 = frame.vector_field(SymmetryGenerator::X3);
    let f4 = frame.vector_field(SymmetryGenerator::X4);
    let c13 = lie_bracket(&f1, &f3, 0.3, 0.5, 2.0)?;
    let x1 = f1.components(0.3, 0.5, 2.0)?;
    println!(
        "  [X1, X3] = ({:>8.4}, {:>8.4}, {:>8.4})   4 X1 = ({:>8.4}, {:>8.4}, {:>8.4})",
        c13[0], c13[1], c13[2], 4.0 * x1[0], 4.0 * x1[1], 4.0 * x1[2]
    );
    let c34 = lie_bracket(&f3, &f4, 0.3, 0.5, 2.0)?;
    let x4 = f4.components(0.3, 0.5, 2.0)?;
    println!(
        "  [X3, X4] = ({:>8.4}, {:>8.4}, {:>8.4})  -2 X4 = ({:>8.4}, {:>8.4}, {:>8.4})",
        c34[0], c34[1], c34[2], -2.0 * x4[0], -2.0 * x4[1], -2.0 * x4[2]
    );

    // Pushforward through the canonical map: X4 becomes a plain
    // translation 2 d/dX of the uniform equation.
    let tr = build_transform(&beam, &cls, None)?;
    println!("\npushforward through the map onto U_XXXX + U_TT = 0:");
    for g in gens {
        let [gt, gx, gu] = tr.pushforward_generator(&frame, g, 0.3, 0.5, 2.0)?;
        println!("  {g:?} -> ({gt:>8.4}, {gx:>8.4}, {gu:>8.4})");
    }
    println!("\n(X1 -> d/dT, X2 -> U d/dU, X3 -> 4T d/dT + 2X d/dX, X4 -> 2 d/dX)");
    Ok(())
}
