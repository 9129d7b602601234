//! Tabulates the four objective functions and their optima.
//!
//!     cargo run --example objective_functions

use codynamic::substrate::{
    eval_objective_shared, eval_objective_test, ObjectiveKind, SINUSOID_OPTIMUM_COORD, SINUSOID_PEAK,
};

fn main() -> codynamic::Result<()> {
    println!("{:>6} {:>10} {:>10}", "x", "crisp", "smooth");
    for i in -6..=6 {
        let x = f64::from(i) * 0.5;
        println!(
            "{x:>6.2} {:>10.4} {:>10.4}",
            eval_objective_test(ObjectiveKind::CrispLinear, x)?,
            eval_objective_test(ObjectiveKind::SmoothUnimodalPair, x)?
        );
    }

    let ridge = ObjectiveKind::ridge(8.0)?;
    println!("\nridge n=8");
    for (x, y) in [(8.0, 8.0), (0.0, 8.0), (8.0, 0.0), (0.0, 0.0), (4.0, 2.0), (-1.0, 4.0)] {
        println!("  f({x}, {y}) = {}", eval_objective_shared(ridge, x, y)?);
    }

    let c = SINUSOID_OPTIMUM_COORD;
    println!("\nsinusoid");
    println!("  max f({c}, {c}) = {:.6} (tabulated {SINUSOID_PEAK})", eval_objective_shared(ObjectiveKind::Sinusoid, c, c)?);
    println!("  min f({}, {}) = {:.6}", -c, -c, eval_objective_shared(ObjectiveKind::Sinusoid, -c, -c)?);
    println!("  f(5, 5)   = {:.6}", eval_objective_shared(ObjectiveKind::Sinusoid, 5.0, 5.0)?);
    Ok(())
}
