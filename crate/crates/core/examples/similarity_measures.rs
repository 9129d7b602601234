//! The three landscape measures on small hand-made profiles, and the two
//! alternative normalisations.
//!
//!     cargo run --example similarity_measures

use codynamic::landscape::{bhatt, dist, kld, make_grid, BhattMode, DistScale, LandscapeProfile, ProfileKind};

fn main() -> codynamic::Result<()> {
    let grid = make_grid(0.0, 1.0, 4)?;
    let obj = LandscapeProfile::new(grid.clone(), vec![0.0, 0.3, 0.7, 1.0], ProfileKind::Objective)?;
    let subs = [
        ("identical", vec![0.0, 0.3, 0.7, 1.0]),
        ("contracted at the peak", vec![0.0, 0.0, 0.1, 1.0]),
        ("inverted", vec![1.0, 0.7, 0.3, 0.0]),
        ("flat mid-level", vec![0.5; 4]),
    ];
    println!("{:<24} {:>8} {:>8} {:>8} {:>8} {:>9}", "subjective", "dist", "dist*", "kld", "bhatt", "bhatt(v)");
    for (name, values) in subs {
        let sub = LandscapeProfile::new(grid.clone(), values, ProfileKind::Subjective)?;
        println!(
            "{name:<24} {:>8.4} {:>8.4} {:>8.4} {:>8.4} {:>9.4}",
            dist(&obj, &sub, DistScale::RangeSqrtJ)?,
            dist(&obj, &sub, DistScale::Range)?,
            kld(&obj, &sub)?,
            bhatt(&obj, &sub, BhattMode::Hellinger)?,
            bhatt(&obj, &sub, BhattMode::Verbatim)?,
        );
    }
    println!("\ndist* uses the plain range as normaliser; bhatt(v) is the product form without the inner root");
    Ok(())
}
