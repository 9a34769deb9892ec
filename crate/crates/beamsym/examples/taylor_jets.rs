//! Order-6 Taylor jets: evaluate an expression together with its first
//! six derivatives at a point, in one pass.

use beamsym::expr::{eval_jet, parse_expr};


fn main() -> Result<(), Box<dyn std::error::Error>> {
    // d/dx of x^2 exp(-x) by hand, for comparison
    let ast = parse_expr("x^2 * exp(-x)")?;
    let x = 0.7;
    let j = eval_jet(&ast, x)?;

    let e = (-x as f64).exp();
    let exact = [
        x * x * e,
        (2.0 * x - x * x) * e,
        (2.0 - 4.0 * x + x * x) * e,
        (-6.0 + 6.0 * x - x * x) * e,
        (12.0 - 8.0 * x + x * x) * e,
        (-20.0 + 10.0 * x - x * x) * e,
        (30.0 - 12.0 * x + x * x) * e,
    ];

    println!("f(x) = x^2 exp(-x) at x = {x}");
    println!("{:>5}  {:>22}  {:>22}  {:>9}", "order", "jet", "closed form", "abs diff");
    for k in 0..=6 {
        let d = j.deriv(k);
        println!(
            "{k:>5}  {d:>22.15e}  {:>22.15e}  {:>9.2e}",
            exact[k],
            (d - exact[k]).abs()
        );
    }

    // Jets compose: the same machinery differentiates g(x) = (m/f)^(1/4)
    // for a tapered beam without any symbolic work.
    let f = parse_expr("1 + x/2")?;
    let m = parse_expr("2 - x")?;
    let fj = eval_jet(&f, x)?;
    let mj = eval_jet(&m, x)?;
    let gp = (mj / fj).powf(0.25);
    println!("\ng'(x) = (m/f)^(1/4) for f = 1 + x/2, m = 2 - x:");
    println!("  g'({x})   = {:.15}", gp.value());
    println!("  g''({x})  = {:.15}", gp.deriv(1));
    println!("  g'''({x}) = {:.15}", gp.deriv(2));
    Ok(())
}
