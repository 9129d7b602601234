//! Subjective landscapes of the smooth number game at generations
//! 0, 3 and 6, under competition and cooperation.
//!
//!     cargo run --example codynamic_landscapes

use codynamic::evolution::run_trajectory;
use codynamic::landscape::{snapshot, make_grid};
use codynamic::{ExperimentConfig, ObjectiveName};

fn main() -> codynamic::Result<()> {
    for (name, config) in [
        ("competitive (P1 min, P2 max)", ExperimentConfig::competitive(ObjectiveName::Smooth)),
        ("cooperative (both max)", ExperimentConfig::cooperative(ObjectiveName::Smooth)),
    ] {
        let kind = config.kind()?;
        let states = run_trajectory(&config, 11)?;
        let grid = make_grid(-3.0, 3.0, 13)?;
        println!("{name}");
        for k in [0, 3, 6] {
            let s = snapshot(&states[k], &grid, kind)?;
            println!("  k = {k}");
            println!("  {:>6} {:>7} {:>7} {:>7}", "x", "f_obj", "sub_p1", "sub_p2");
            for j in 0..s.x.len() {
                println!("  {:>6.2} {:>7.3} {:>7.3} {:>7.3}", s.x[j], s.f_obj[j], s.f_sub_p1[j], s.f_sub_p2[j]);
            }
        }
        println!();
    }
    Ok(())
}
