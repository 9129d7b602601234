//! Loads a TOML configuration and writes the measure series and a few
//! landscape snapshots as CSV.
//!
//!     cargo run --example config_file -- configs/sinusoid_cooperative.toml out/sinusoid

use std::path::PathBuf;

use codynamic::cli::{cmd_landscape, cmd_measures};
use codynamic::output::Format;
use codynamic::ExperimentConfig;

fn main() -> codynamic::Result<()> {
    let mut args = std::env::args().skip(1);
    let config = match args.next() {
        Some(path) => ExperimentConfig::load(&PathBuf::from(path))?,
        None => ExperimentConfig::default(),
    };
    let out = PathBuf::from(args.next().unwrap_or_else(|| "out/config_file".into()));
    std::fs::create_dir_all(&out).map_err(|source| codynamic::Error::Io { path: out.clone(), source })?;

    print!("{}", config.to_toml_string());
    for path in cmd_measures(&config, &out, Format::Csv)?
        .into_iter()
        .chain(cmd_landscape(&config, &[0, 3, 6], &out, Format::Csv)?)
    {
        println!("wrote {}", path.display());
    }
    Ok(())
}
