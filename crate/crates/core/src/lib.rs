//! Coevolutionary minimal substrates and their codynamic fitness landscapes.
//!
//! Two populations coevolve on a one-dimensional real search space. Their
//! fitness is *subjective*: it comes from interaction with the other
//! population, either through a number game against sampled evaluators
//! (test-based substrates) or through a slice of a shared two-dimensional
//! landscape at the partner's best member (compositional substrates). The
//! crate reconstructs those subjective landscapes generation by generation
//! and compares them with the static objective landscape using a
//! normalised Euclidean distance, the Kullback–Leibler divergence and a
//! Bhattacharyya-type coefficient.
//!
//! * [`substrate`]: objective functions and subjective fitness rules
//! * [`evolution`]: the two-population algorithm
//! * [`landscape`]: profiles on a grid and similarity measures
//! * [`experiment`]: seeded batches, means and 95% confidence intervals
//! * [`config`], [`output`], [`cli`]: TOML config, CSV/JSON files, commands

pub mod cli;
pub mod config;
pub mod error;
pub mod evolution;
pub mod experiment;
pub mod landscape;
pub mod output;
pub mod substrate;

pub use config::{ExperimentConfig, ObjectiveName};
pub use error::{Error, Result};
pub use evolution::{Coevolution, CoevoState, EvoParams, PopLabel, Population};
pub use experiment::{ci95, run_batch, MeasureSeries};
pub use landscape::{Grid, LandscapeProfile, MeasureOptions, MeasureTriple};
pub use substrate::{Genotype, InteractionMode, ObjectiveKind, Task};
