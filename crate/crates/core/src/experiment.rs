//! Batches of independent runs and their per-generation aggregation.
//!
//! Run `r` of a batch uses the seed [`derive_seed`]`(master_seed, r)`:
//!
//! ```text
//! z = master_seed + (r + 1) * 0x9E3779B97F4A7C15        (wrapping)
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9              (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB              (wrapping)
//! seed_r = z ^ (z >> 31)
//! ```
//!
//! i.e. the `(r + 1)`-th output of a SplitMix64 generator started at
//! `master_seed`. The trajectory stream is ChaCha8 seeded from `seed_r` via
//! `SeedableRng::seed_from_u64`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::config::ExperimentConfig;
use crate::error::{Error, Result};
use crate::evolution::PopLabel;
use crate::landscape::{measure_generation, snapshot, LandscapeSnapshot, MeasureTriple};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn derive_seed(master_seed: u64, run: u64) -> u64 {
    let mut z = master_seed.wrapping_add(run.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mean with a two-sided 95% Student-t confidence interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceInterval {
    pub mean: f64,
    pub lo: f64,
    pub hi: f64,
}

impl ConfidenceInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// `mean ± t(0.975, R-1) · s / √R`; a single sample gives a zero-width
/// interval.
///
/// Values are summed in sorted order, so the result does not depend on the
/// order of `samples`.
pub fn ci95(samples: &[f64]) -> Result<ConfidenceInterval> {
    if samples.is_empty() {
        return Err(Error::EmptyAggregate);
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mean = sorted.iter().sum::<f64>() / n;
    if sorted.len() == 1 {
        return Ok(ConfidenceInterval { mean, lo: mean, hi: mean });
    }
    let var = sorted.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    let t = StudentsT::new(0.0, 1.0, n - 1.0)
        .expect("degrees of freedom are positive")
        .inverse_cdf(0.975);
    let half = t * var.sqrt() / n.sqrt();
    Ok(ConfidenceInterval { mean, lo: mean - half, hi: mean + half })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Dist,
    Kld,
    Bhatt,
}

impl Measure {
    pub const ALL: [Measure; 3] = [Measure::Dist, Measure::Kld, Measure::Bhatt];

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::Dist => "dist",
            Measure::Kld => "kld",
            Measure::Bhatt => "bhatt",
        }
    }

    pub fn of(self, t: &MeasureTriple) -> f64 {
        match self {
            Measure::Dist => t.dist,
            Measure::Kld => t.kld,
            Measure::Bhatt => t.bhatt,
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Measures of both populations at every generation of one run.
pub type RunMeasures = Vec<(MeasureTriple, MeasureTriple)>;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub generation: usize,
    pub population: PopLabel,
    pub measure: Measure,
    pub mean: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

/// Per-generation, per-population, per-measure aggregates over `runs` runs.
/// Points are ordered by generation, then P1 before P2, then
/// dist, kld, bhatt.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureSeries {
    pub runs: usize,
    pub generations: usize,
    pub points: Vec<SeriesPoint>,
}

impl MeasureSeries {
    pub fn aggregate(per_run: &[RunMeasures]) -> Result<Self> {
        let first = per_run.first().ok_or(Error::EmptyAggregate)?;
        let generations = first.len();
        if per_run.iter().any(|r| r.len() != generations) {
            return Err(Error::Config("runs differ in number of generations".into()));
        }
        let mut points = Vec::with_capacity(generations * 6);
        let mut column = Vec::with_capacity(per_run.len());
        for k in 0..generations {
            for pop in [PopLabel::P1, PopLabel::P2] {
                for m in Measure::ALL {
                    column.clear();
                    column.extend(per_run.iter().map(|run| {
                        let (p1, p2) = &run[k];
                        m.of(if pop == PopLabel::P1 { p1 } else { p2 })
                    }));
                    let ci = ci95(&column)?;
                    points.push(SeriesPoint {
                        generation: k,
                        population: pop,
                        measure: m,
                        mean: ci.mean,
                        ci_lo: ci.lo,
                        ci_hi: ci.hi,
                    });
                }
            }
        }
        Ok(MeasureSeries { runs: per_run.len(), generations, points })
    }

    pub fn get(&self, generation: usize, population: PopLabel, measure: Measure) -> &SeriesPoint {
        let p = usize::from(population == PopLabel::P2);
        let m = Measure::ALL.iter().position(|&x| x == measure).expect("known measure");
        &self.points[generation * 6 + p * 3 + m]
    }

    pub fn mean(&self, generation: usize, population: PopLabel, measure: Measure) -> f64 {
        self.get(generation, population, measure).mean
    }
}

/// One run's measures and, optionally, its landscape snapshots.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub run: usize,
    pub seed: u64,
    pub measures: RunMeasures,
    pub snapshots: Option<Vec<LandscapeSnapshot>>,
}

pub fn run_single(config: &ExperimentConfig, run: usize, keep_snapshots: bool) -> Result<RunOutcome> {
    let seed = derive_seed(config.experiment.master_seed, run as u64);
    let wrap = |e: Error| Error::Run { run, seed, source: Box::new(e) };
    let kind = config.kind()?;
    let grid = config.grid()?;
    let options = config.measure_options();
    let states = config.coevolution()?.trajectory(seed).map_err(wrap)?;
    let measures = states
        .iter()
        .map(|s| measure_generation(s, &grid, kind, options))
        .collect::<Result<Vec<_>>>()
        .map_err(wrap)?;
    let snapshots = if keep_snapshots {
        Some(
            states
                .iter()
                .map(|s| snapshot(s, &grid, kind))
                .collect::<Result<Vec<_>>>()
                .map_err(wrap)?,
        )
    } else {
        None
    };
    Ok(RunOutcome { run, seed, measures, snapshots })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BatchResult {
    pub series: MeasureSeries,
    pub runs: Vec<RunOutcome>,
}

/// Runs `config.experiment.runs` trajectories, on up to
/// `config.experiment.workers` threads, and aggregates in run order.
pub fn run_batch(config: &ExperimentConfig) -> Result<BatchResult> {
    config.validate()?;
    let runs = config.experiment.runs;
    let keep = config.experiment.snapshots;
    let outcomes: Vec<Result<RunOutcome>> = if config.experiment.workers <= 1 {
        (0..runs).map(|r| run_single(config, r, keep)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.experiment.workers)
            .build()
            .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
        pool.install(|| {
            (0..runs)
                .into_par_iter()
                .map(|r| run_single(config, r, keep))
                .collect()
        })
    };
    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>>>()?;
    let per_run: Vec<RunMeasures> = outcomes.iter().map(|o| o.measures.clone()).collect();
    Ok(BatchResult { series: MeasureSeries::aggregate(&per_run)?, runs: outcomes })
}
