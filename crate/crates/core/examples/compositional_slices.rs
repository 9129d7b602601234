//! Compositional coevolution on the shared sinusoid and ridge landscapes:
//! each population's landscape is the slice through the other's best member.
//!
//!     cargo run --example compositional_slices

use codynamic::evolution::run_trajectory;
use codynamic::landscape::{measure_generation, MeasureOptions};
use codynamic::{ExperimentConfig, ObjectiveName};

fn main() -> codynamic::Result<()> {
    for objective in [ObjectiveName::Sinusoid, ObjectiveName::Ridge] {
        for config in [ExperimentConfig::cooperative(objective), ExperimentConfig::competitive(objective)] {
            let kind = config.kind()?;
            let grid = config.grid()?;
            let mode = if config.interaction.is_cooperative() { "cooperative" } else { "competitive" };
            println!("{kind}, {mode}");
            println!("  {:>3} {:>9} {:>9} {:>8} {:>8}", "k", "y slice", "x slice", "dist_p1", "dist_p2");
            for s in run_trajectory(&config, 5)? {
                let (m1, m2) = measure_generation(&s, &grid, kind, MeasureOptions::default())?;
                println!(
                    "  {:>3} {:>9.4} {:>9.4} {:>8.4} {:>8.4}",
                    s.generation,
                    s.partner1.map_or(f64::NAN, |g| g.value()),
                    s.partner2.map_or(f64::NAN, |g| g.value()),
                    m1.dist,
                    m2.dist
                );
            }
        }
    }
    Ok(())
}
