//! The `codyn` command line: `simulate`, `landscape` and `measures`.
//!
//! Values given as flags override the config file, which overrides the
//! built-in defaults. Without `--config` the defaults are used.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::config::ExperimentConfig;
use crate::error::{Error, Result};
use crate::evolution::run_trajectory;
use crate::experiment::{derive_seed, run_batch};
use crate::landscape::snapshot;
use crate::output::{measures_table, snapshot_stem, snapshot_table, trajectory_table, Format};

#[derive(Debug, Parser)]
#[command(name = "codyn", version, about = "Codynamic fitness landscapes of coevolutionary minimal substrates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one trajectory; write the best-member summary and per-generation landscapes.
    Simulate {
        #[command(flatten)]
        common: CommonArgs,
        /// Number of generations after the initial one.
        #[arg(long)]
        generations: Option<usize>,
        /// Only write the trajectory summary.
        #[arg(long)]
        no_snapshots: bool,
    },
    /// Run one trajectory and write landscape snapshots at chosen generations.
    Landscape {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated generations to snapshot.
        #[arg(long, value_delimiter = ',', default_value = "0,3,6")]
        generations: Vec<usize>,
    },
    /// Run a batch and write per-generation measure means with 95% intervals.
    Measures {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        runs: Option<usize>,
        #[arg(long)]
        generations: Option<usize>,
        /// Also write every run's landscapes under `runs/`.
        #[arg(long)]
        snapshots: bool,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// TOML configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Master seed; overrides `experiment.master_seed`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory, created if missing.
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

impl CommonArgs {
    fn load(&self) -> Result<ExperimentConfig> {
        let mut config = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        if let Some(seed) = self.seed {
            config.experiment.master_seed = seed;
        }
        if let Some(workers) = self.workers {
            config.experiment.workers = workers;
        }
        Ok(config)
    }

    fn out_dir(&self) -> Result<&Path> {
        std::fs::create_dir_all(&self.out)
            .map_err(|source| Error::Io { path: self.out.clone(), source })?;
        Ok(&self.out)
    }
}

/// Runs the trajectory that is run 0 of a batch with the same master seed.
pub fn cmd_simulate(
    config: &ExperimentConfig,
    out: &Path,
    format: Format,
    snapshots: bool,
) -> Result<Vec<PathBuf>> {
    config.validate()?;
    let states = run_trajectory(config, derive_seed(config.experiment.master_seed, 0))?;
    let mut written = vec![trajectory_table(&states)?.save(out, "trajectory", format)?];
    if snapshots {
        let kind = config.kind()?;
        let grid = config.grid()?;
        for s in &states {
            let table = snapshot_table(&snapshot(s, &grid, kind)?);
            written.push(table.save(out, &snapshot_stem(s.generation), format)?);
        }
    }
    Ok(written)
}

pub fn cmd_landscape(
    config: &ExperimentConfig,
    generations: &[usize],
    out: &Path,
    format: Format,
) -> Result<Vec<PathBuf>> {
    let last = *generations
        .iter()
        .max()
        .ok_or_else(|| Error::Config("no generations requested".into()))?;
    let mut config = config.clone();
    config.evolution.generations = last;
    config.validate()?;
    let kind = config.kind()?;
    let grid = config.grid()?;
    let states = run_trajectory(&config, derive_seed(config.experiment.master_seed, 0))?;
    let mut wanted = generations.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    wanted
        .into_iter()
        .map(|k| snapshot_table(&snapshot(&states[k], &grid, kind)?).save(out, &snapshot_stem(k), format))
        .collect()
}

pub fn cmd_measures(config: &ExperimentConfig, out: &Path, format: Format) -> Result<Vec<PathBuf>> {
    let batch = run_batch(config)?;
    let mut written = vec![measures_table(&batch.series).save(out, "measures", format)?];
    if config.experiment.snapshots {
        let dir = out.join("runs");
        std::fs::create_dir_all(&dir).map_err(|source| Error::Io { path: dir.clone(), source })?;
        for run in &batch.runs {
            for s in run.snapshots.iter().flatten() {
                let stem = format!("run{:03}_k{}", run.run, s.generation);
                written.push(snapshot_table(s).save(&dir, &stem, format)?);
            }
        }
    }
    Ok(written)
}

pub fn run(cli: Cli) -> Result<Vec<PathBuf>> {
    match cli.command {
        Command::Simulate { common, generations, no_snapshots } => {
            let mut config = common.load()?;
            if let Some(g) = generations {
                config.evolution.generations = g;
            }
            cmd_simulate(&config, common.out_dir()?, common.format, !no_snapshots)
        }
        Command::Landscape { common, generations } => {
            let config = common.load()?;
            cmd_landscape(&config, &generations, common.out_dir()?, common.format)
        }
        Command::Measures { common, runs, generations, snapshots } => {
            let mut config = common.load()?;
            if let Some(r) = runs {
                config.experiment.runs = r;
            }
            if let Some(g) = generations {
                config.evolution.generations = g;
            }
            config.experiment.snapshots |= snapshots;
            cmd_measures(&config, common.out_dir()?, common.format)
        }
    }
}
