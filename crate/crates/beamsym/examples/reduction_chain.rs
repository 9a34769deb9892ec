//! Reduce the fourth-order rigidity constraint to a first-order relation.
//!
//! Rigidities of maximal-class beams satisfy a fourth-order nonlinear
//! ODE.  Three successive changes of variables — (t, y) = (f, f'), then
//! z = y'/y, then (u, v) = (tz, tz + t^2 z') — lower it to a single
//! first-order relation dv/du = F(u, v).  Power laws (Ax+B)^m collapse
//! to fixed points u = (m-1)/m, v = 0; every other solution traces a
//! genuine curve.

use beamsym::expr::parse_expr;
use beamsym::reduction::{reduce_stage1, reduce_stage2, reduce_stage3};

fn run(f_src: &str, interval: (f64, f64)) -> Result<(), Box<dyn std::error::Error>> {
    println!("f = {f_src} on [{}, {}]", interval.0, interval.1);
    let f = parse_expr(f_src)?;
    let st = reduce_stage1(&f, interval, 17)?;
    let st = reduce_stage2(st)?;
    let st = reduce_stage3(st)?;

    for s in 0..3 {
        println!(
            "  stage {}: derived residual {:.2e}   transcribed-variant gap {:.2e}",
            s + 1,
            st.residuals[s],
            st.printed_gap[s]
        );
    }
    match st.equilibrium {
        Some((u, v)) => println!("  -> equilibrium of the final relation at (u, v) = ({u:.12}, {v:.1e})"),
        None => {
            let first = st.stage3.first().unwrap();
            let last = st.stage3.last().unwrap();
            println!(
                "  -> curve from (u, v) = ({:.6}, {:.6}) to ({:.6}, {:.6})",
                first[0], first[1], last[0], last[1]
            );
        }
    }
    println!();
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Two admissible power laws: fixed points at u = (m-1)/m.
    run("(1+x)^(3/2)", (1.0, 2.0))?; // u = 1/3
    run("(1+x)^4", (1.0, 2.0))?; // u = 3/4

    // A power law outside the admissible set still solves the
    // fourth-order constraint's reduction stages trajectory-wise only if
    // it solves the constraint itself; (1+x)^2 does not, and stage 1
    // refuses it.
    let f = parse_expr("(1+x)^2")?;
    match reduce_stage1(&f, (1.0, 2.0), 17) {
        Ok(_) => println!("(1+x)^2 unexpectedly accepted"),
        Err(e) => println!("(1+x)^2 rejected as expected: {e}"),
    }
    Ok(())
}
