use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("objective {got} is not {expected}")]
    WrongObjectiveKind {
        expected: &'static str,
        got: String,
    },

    #[error("genotype value {0} is not finite")]
    NonFinite(f64),

    #[error("evaluator sample is empty (disengaged evaluation)")]
    EmptySample,

    #[error("population is empty")]
    EmptyPopulation,

    #[error("genotype and fitness lists differ in length ({genotypes} vs {fitnesses})")]
    LengthMismatch { genotypes: usize, fitnesses: usize },

    #[error("sample size {mu} exceeds opponent population size {lambda}")]
    SampleTooLarge { mu: usize, lambda: usize },

    #[error("{0} population has no fitness values yet")]
    Unevaluated(&'static str),

    #[error("objective profile is flat; distance normaliser is zero")]
    FlatObjective,

    #[error("profiles are defined on different grids")]
    GridMismatch,

    #[error("cannot aggregate an empty sample")]
    EmptyAggregate,

    #[error("run {run} (seed {seed:#018x}) failed: {source}")]
    Run {
        run: usize,
        seed: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
