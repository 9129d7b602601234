//! Experiment configuration and its TOML file format.
//!
//! ```toml
//! [substrate]
//! objective = "smooth"      # crisp | smooth | ridge | sinusoid
//! ridge_n = 8.0
//!
//! [evolution]
//! population_size = 24
//! sample_size = 12
//! tournament_size = 2
//! mutation_prob = 0.5
//! mutation_sigma = 0.1
//! generations = 10
//! sample_draw = "without_replacement"   # or "with_replacement"
//! # init_p1 = [-3.0, 3.0]              # default depends on the objective
//! # init_p2 = [-3.0, 3.0]
//!
//! [interaction]
//! task_p1 = "minimize"
//! task_p2 = "maximize"
//!
//! [landscape]
//! # grid_lo = -3.0                     # default depends on the objective
//! # grid_hi = 3.0
//! grid_points = 301
//! dist_scale = "range_sqrt_j"           # or "range"
//! bhatt = "hellinger"                   # or "verbatim"
//!
//! [experiment]
//! runs = 100
//! master_seed = 0
//! workers = 1
//! snapshots = false
//! ```
//!
//! Every key is optional.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evolution::{Coevolution, EvoParams, Interval, SampleDraw};
use crate::landscape::{
    default_grid_bounds, make_grid, BhattMode, DistScale, Grid, MeasureOptions,
    DEFAULT_GRID_POINTS,
};
use crate::substrate::{InteractionMode, ObjectiveKind, Task, DEFAULT_RIDGE_N};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectiveName {
    Crisp,
    #[default]
    Smooth,
    Ridge,
    Sinusoid,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SubstrateSpec {
    pub objective: ObjectiveName,
    pub ridge_n: f64,
}

impl Default for SubstrateSpec {
    fn default() -> Self {
        SubstrateSpec { objective: ObjectiveName::Smooth, ridge_n: DEFAULT_RIDGE_N }
    }
}

impl SubstrateSpec {
    pub fn kind(&self) -> Result<ObjectiveKind> {
        Ok(match self.objective {
            ObjectiveName::Crisp => ObjectiveKind::CrispLinear,
            ObjectiveName::Smooth => ObjectiveKind::SmoothUnimodalPair,
            ObjectiveName::Ridge => ObjectiveKind::ridge(self.ridge_n)?,
            ObjectiveName::Sinusoid => ObjectiveKind::Sinusoid,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvolutionSection {
    pub population_size: usize,
    pub sample_size: usize,
    pub tournament_size: usize,
    pub mutation_prob: f64,
    pub mutation_sigma: f64,
    pub generations: usize,
    pub sample_draw: SampleDraw,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub init_p1: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub init_p2: Option<[f64; 2]>,
}

impl Default for EvolutionSection {
    fn default() -> Self {
        EvolutionSection {
            population_size: 24,
            sample_size: 12,
            tournament_size: 2,
            mutation_prob: 0.5,
            mutation_sigma: 0.1,
            generations: 10,
            sample_draw: SampleDraw::WithoutReplacement,
            init_p1: None,
            init_p2: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LandscapeSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_lo: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_hi: Option<f64>,
    pub grid_points: usize,
    pub dist_scale: DistScale,
    pub bhatt: BhattMode,
}

impl Default for LandscapeSection {
    fn default() -> Self {
        LandscapeSection {
            grid_lo: None,
            grid_hi: None,
            grid_points: DEFAULT_GRID_POINTS,
            dist_scale: DistScale::RangeSqrtJ,
            bhatt: BhattMode::Hellinger,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentSection {
    pub runs: usize,
    pub master_seed: u64,
    pub workers: usize,
    pub snapshots: bool,
}

impl Default for ExperimentSection {
    fn default() -> Self {
        ExperimentSection { runs: 100, master_seed: 0, workers: 1, snapshots: false }
    }
}

/// All parameters of a batch of coevolutionary runs.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub substrate: SubstrateSpec,
    pub evolution: EvolutionSection,
    pub interaction: InteractionMode,
    pub landscape: LandscapeSection,
    pub experiment: ExperimentSection,
}

fn interval(raw: Option<[f64; 2]>, default: Interval) -> Result<Interval> {
    match raw {
        Some([lo, hi]) => Interval::new(lo, hi),
        None => Ok(default),
    }
}

impl ExperimentConfig {
    pub fn new(objective: ObjectiveName, mode: InteractionMode) -> Self {
        ExperimentConfig {
            substrate: SubstrateSpec { objective, ..SubstrateSpec::default() },
            interaction: mode,
            ..ExperimentConfig::default()
        }
    }

    pub fn cooperative(objective: ObjectiveName) -> Self {
        Self::new(objective, InteractionMode::cooperative(Task::Maximize))
    }

    pub fn competitive(objective: ObjectiveName) -> Self {
        Self::new(objective, InteractionMode::competitive())
    }

    pub fn from_toml_str(text: &str) -> std::result::Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("configuration serialises to TOML")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        let config = Self::from_toml_str(&text)
            .map_err(|e| Error::Parse { path: path.to_path_buf(), message: e.to_string() })?;
        config.validate()?;
        Ok(config)
    }

    pub fn kind(&self) -> Result<ObjectiveKind> {
        self.substrate.kind()
    }

    pub fn evo_params(&self) -> Result<EvoParams> {
        let kind = self.kind()?;
        let default = EvoParams::default_interval(kind);
        let e = &self.evolution;
        let params = EvoParams {
            population_size: e.population_size,
            sample_size: e.sample_size,
            tournament_size: e.tournament_size,
            mutation_prob: e.mutation_prob,
            mutation_sigma: e.mutation_sigma,
            generations: e.generations,
            init_p1: interval(e.init_p1, default)?,
            init_p2: interval(e.init_p2, default)?,
            sample_draw: e.sample_draw,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn grid(&self) -> Result<Grid> {
        let (lo, hi) = default_grid_bounds(self.kind()?);
        make_grid(
            self.landscape.grid_lo.unwrap_or(lo),
            self.landscape.grid_hi.unwrap_or(hi),
            self.landscape.grid_points,
        )
    }

    pub fn measure_options(&self) -> MeasureOptions {
        MeasureOptions { dist_scale: self.landscape.dist_scale, bhatt: self.landscape.bhatt }
    }

    pub fn coevolution(&self) -> Result<Coevolution> {
        Coevolution::new(self.evo_params()?, self.kind()?, self.interaction)
    }

    pub fn validate(&self) -> Result<()> {
        self.coevolution()?;
        self.grid()?;
        if self.experiment.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        Ok(())
    }
}
