//! Mean similarity measures over 100 runs for one substrate, under
//! cooperation and competition.
//!
//!     cargo run --release --example measure_series -- smooth

use codynamic::experiment::Measure;
use codynamic::{run_batch, ExperimentConfig, ObjectiveName, PopLabel};

fn main() -> codynamic::Result<()> {
    let objective = match std::env::args().nth(1).as_deref() {
        Some("crisp") => ObjectiveName::Crisp,
        Some("ridge") => ObjectiveName::Ridge,
        Some("sinusoid") => ObjectiveName::Sinusoid,
        _ => ObjectiveName::Smooth,
    };
    for (name, mut config) in [
        ("cooperative", ExperimentConfig::cooperative(objective)),
        ("competitive", ExperimentConfig::competitive(objective)),
    ] {
        config.experiment.workers = 4;
        let series = run_batch(&config)?.series;
        println!("{name} ({objective:?}, {} runs)", series.runs);
        println!("  k   measure  p1 mean [95% CI]                 p2 mean [95% CI]");
        for k in 0..series.generations {
            for m in Measure::ALL {
                let a = series.get(k, PopLabel::P1, m);
                let b = series.get(k, PopLabel::P2, m);
                println!(
                    "  {k:<3} {:<7}  {:.4} [{:.4}, {:.4}]   {:.4} [{:.4}, {:.4}]",
                    m.as_str(),
                    a.mean,
                    a.ci_lo,
                    a.ci_hi,
                    b.mean,
                    b.ci_lo,
                    b.ci_hi
                );
            }
        }
    }
    Ok(())
}
