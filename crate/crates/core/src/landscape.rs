//! Landscape profiles over a fixed grid and the three similarity measures
//! between an objective and a subjective profile.
//!
//! For `kld` and `bhatt` both profiles are read as distributions over the
//! grid: each is shifted by its objective's global minimum, floored at
//! [`PROFILE_FLOOR`], and divided by its sum. One grid point is one bin.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evolution::{CoevoState, PopLabel};
use crate::substrate::{EvaluatorSample, ObjectiveKind, Task};

/// Lower bound applied to shifted profile values before normalisation.
pub const PROFILE_FLOOR: f64 = 1e-12;

/// Default number of grid points.
pub const DEFAULT_GRID_POINTS: usize = 301;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    points: Vec<f64>,
}

impl Grid {
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Config(format!(
                "grid needs at least 2 points, got {}",
                points.len()
            )));
        }
        if points.iter().any(|p| !p.is_finite()) || points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("grid points must be finite and strictly increasing".into()));
        }
        Ok(Grid { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Default grid for a substrate: `[-3, 3]`, or `[-n/4, 5n/4]` for the ridge.
    pub fn default_for(kind: ObjectiveKind) -> Grid {
        let (lo, hi) = default_grid_bounds(kind);
        make_grid(lo, hi, DEFAULT_GRID_POINTS).expect("default grid bounds are valid")
    }
}

pub fn default_grid_bounds(kind: ObjectiveKind) -> (f64, f64) {
    match kind {
        ObjectiveKind::Ridge { n } => (-0.25 * n, 1.25 * n),
        _ => (-3.0, 3.0),
    }
}

/// `count` equally spaced points from `lo` to `hi`, both included.
pub fn make_grid(lo: f64, hi: f64, count: usize) -> Result<Grid> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Config(format!("grid bounds [{lo}, {hi}] are invalid")));
    }
    if count < 2 {
        return Err(Error::Config(format!("grid needs at least 2 points, got {count}")));
    }
    let step = (hi - lo) / (count - 1) as f64;
    let mut points: Vec<f64> = (0..count).map(|i| lo + step * i as f64).collect();
    points[count - 1] = hi;
    Grid::from_points(points)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    Objective,
    Subjective,
}

/// Fitness values sampled on a grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LandscapeProfile {
    pub grid: Grid,
    pub values: Vec<f64>,
    pub kind: ProfileKind,
    pub population: Option<PopLabel>,
    pub generation: Option<usize>,
    /// Global minimum of the underlying objective; subtracted before the
    /// profile is read as a distribution.
    pub floor: f64,
}

impl LandscapeProfile {
    pub fn new(grid: Grid, values: Vec<f64>, kind: ProfileKind) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config("profile values must be finite".into()));
        }
        Ok(LandscapeProfile { grid, values, kind, population: None, generation: None, floor: 0.0 })
    }

    pub fn with_floor(mut self, floor: f64) -> Self {
        self.floor = floor;
        self
    }

    pub fn tagged(mut self, population: Option<PopLabel>, generation: Option<usize>) -> Self {
        self.population = population;
        self.generation = generation;
        self
    }

    /// The profile as a probability vector over grid points.
    pub fn normalized(&self) -> Vec<f64> {
        let shifted: Vec<f64> =
            self.values.iter().map(|v| (v - self.floor).max(PROFILE_FLOOR)).collect();
        let total: f64 = shifted.iter().sum();
        shifted.into_iter().map(|v| v / total).collect()
    }
}

/// Objective reference profile. Compositional substrates are sliced through
/// the partner coordinate of the global optimum that matches `task`.
pub fn objective_profile(kind: ObjectiveKind, grid: &Grid, task: Task) -> LandscapeProfile {
    let values = match (kind.as_test(), kind.as_shared()) {
        (Ok(f), _) => grid.points().iter().map(|&x| f.eval(x)).collect(),
        (_, Ok(f)) => {
            let y = f.optimum_partner(task);
            grid.points().iter().map(|&x| f.eval(x, y)).collect()
        }
        _ => unreachable!("objective kinds are test-based or compositional"),
    };
    LandscapeProfile {
        grid: grid.clone(),
        values,
        kind: ProfileKind::Objective,
        population: None,
        generation: None,
        floor: kind.global_min(),
    }
}

/// Mean of the per-sample number-game landscapes.
///
/// Each sample's objective values are sorted once so every grid point costs
/// a binary search; the result equals averaging
/// [`subjective_test`](crate::substrate::subjective_test) over the samples.
pub fn subjective_profile_test(
    grid: &Grid,
    samples: &[EvaluatorSample],
    kind: ObjectiveKind,
) -> Result<LandscapeProfile> {
    let f = kind.as_test()?;
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    let fx: Vec<f64> = grid.points().iter().map(|&x| f.eval(x)).collect();
    let mut sums = vec![0.0; grid.len()];
    let mut sorted = Vec::new();
    for sample in samples {
        if sample.is_empty() {
            return Err(Error::EmptySample);
        }
        sorted.clear();
        sorted.extend(sample.members.iter().map(|s| f.eval(s.value())));
        sorted.sort_by(f64::total_cmp);
        let mu = sample.len() as f64;
        for (sum, &v) in sums.iter_mut().zip(&fx) {
            let wins = sorted.partition_point(|&s| s < v);
            *sum += wins as f64 / mu;
        }
    }
    let n = samples.len() as f64;
    let values = sums.into_iter().map(|s| s / n).collect();
    Ok(LandscapeProfile {
        grid: grid.clone(),
        values,
        kind: ProfileKind::Subjective,
        population: None,
        generation: None,
        floor: kind.global_min(),
    })
}

/// The shared landscape along `y = partner_best`.
pub fn subjective_profile_comp(
    grid: &Grid,
    partner_best: f64,
    kind: ObjectiveKind,
) -> Result<LandscapeProfile> {
    let f = kind.as_shared()?;
    let values = grid.points().iter().map(|&x| f.eval(x, partner_best)).collect();
    Ok(LandscapeProfile {
        grid: grid.clone(),
        values,
        kind: ProfileKind::Subjective,
        population: None,
        generation: None,
        floor: kind.global_min(),
    })
}

/// Normaliser for the Euclidean distance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistScale {
    /// Objective range times `√J`; keeps `dist` in `[0, 1]`.
    #[default]
    RangeSqrtJ,
    /// Objective range only.
    Range,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BhattMode {
    /// `√(1 − Σ √(h_obj·h_sub))`: zero for identical distributions.
    #[default]
    Hellinger,
    /// `√(1 − Σ h_obj·h_sub)`.
    Verbatim,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureOptions {
    #[serde(default)]
    pub dist_scale: DistScale,
    #[serde(default)]
    pub bhatt: BhattMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureTriple {
    pub dist: f64,
    pub kld: f64,
    pub bhatt: f64,
}

impl MeasureTriple {
    pub const NAMES: [&'static str; 3] = ["dist", "kld", "bhatt"];

    pub fn values(&self) -> [f64; 3] {
        [self.dist, self.kld, self.bhatt]
    }
}

fn same_grid(a: &LandscapeProfile, b: &LandscapeProfile) -> Result<()> {
    if a.grid == b.grid && a.values.len() == b.values.len() {
        Ok(())
    } else {
        Err(Error::GridMismatch)
    }
}

/// Euclidean distance between the profiles over the normaliser chosen by
/// `scale`, computed from the range of `obj`.
pub fn dist(obj: &LandscapeProfile, sub: &LandscapeProfile, scale: DistScale) -> Result<f64> {
    same_grid(obj, sub)?;
    let (lo, hi) = obj
        .values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let range = hi - lo;
    if range <= 0.0 {
        return Err(Error::FlatObjective);
    }
    let max = match scale {
        DistScale::RangeSqrtJ => range * (obj.values.len() as f64).sqrt(),
        DistScale::Range => range,
    };
    let norm = obj
        .values
        .iter()
        .zip(&sub.values)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt();
    Ok(norm / max)
}

/// Kullback–Leibler divergence from `p` to `q`, in bits. Both must be
/// strictly positive probability vectors of equal length.
pub fn kld_of_distributions(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).map(|(&p, &q)| p * (p / q).log2()).sum()
}

pub fn bhatt_of_distributions(p: &[f64], q: &[f64], mode: BhattMode) -> f64 {
    let overlap: f64 = match mode {
        BhattMode::Hellinger => p.iter().zip(q).map(|(a, b)| (a * b).sqrt()).sum(),
        BhattMode::Verbatim => p.iter().zip(q).map(|(a, b)| a * b).sum(),
    };
    (1.0 - overlap).max(0.0).sqrt()
}

pub fn kld(obj: &LandscapeProfile, sub: &LandscapeProfile) -> Result<f64> {
    same_grid(obj, sub)?;
    Ok(kld_of_distributions(&obj.normalized(), &sub.normalized()))
}

pub fn bhatt(obj: &LandscapeProfile, sub: &LandscapeProfile, mode: BhattMode) -> Result<f64> {
    same_grid(obj, sub)?;
    Ok(bhatt_of_distributions(&obj.normalized(), &sub.normalized(), mode))
}

pub fn measure(
    obj: &LandscapeProfile,
    sub: &LandscapeProfile,
    options: MeasureOptions,
) -> Result<MeasureTriple> {
    Ok(MeasureTriple {
        dist: dist(obj, sub, options.dist_scale)?,
        kld: kld(obj, sub)?,
        bhatt: bhatt(obj, sub, options.bhatt)?,
    })
}

/// Subjective landscape of one population at the state's generation.
pub fn subjective_profile(
    state: &CoevoState,
    label: PopLabel,
    grid: &Grid,
    kind: ObjectiveKind,
) -> Result<LandscapeProfile> {
    let profile = if kind.is_test_based() {
        subjective_profile_test(grid, state.samples(label), kind)?
    } else {
        let partner = state
            .partner(label)
            .ok_or(Error::Unevaluated(label.as_str()))?;
        subjective_profile_comp(grid, partner.value(), kind)?
    };
    Ok(profile.tagged(Some(label), Some(state.generation)))
}

/// Measures of both populations' subjective landscapes against their own
/// task's objective reference.
pub fn measure_generation(
    state: &CoevoState,
    grid: &Grid,
    kind: ObjectiveKind,
    options: MeasureOptions,
) -> Result<(MeasureTriple, MeasureTriple)> {
    let one = |label: PopLabel| -> Result<MeasureTriple> {
        let obj = objective_profile(kind, grid, state.population(label).task);
        let sub = subjective_profile(state, label, grid, kind)?;
        measure(&obj, &sub, options)
    };
    Ok((one(PopLabel::P1)?, one(PopLabel::P2)?))
}

/// Everything needed to redraw the landscapes of one generation.
///
/// `f_obj` is the objective reference for P1's task; it coincides for both
/// populations on test-based substrates and under cooperation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LandscapeSnapshot {
    pub generation: usize,
    pub x: Vec<f64>,
    pub f_obj: Vec<f64>,
    pub f_sub_p1: Vec<f64>,
    pub f_sub_p2: Vec<f64>,
}

pub fn snapshot(state: &CoevoState, grid: &Grid, kind: ObjectiveKind) -> Result<LandscapeSnapshot> {
    Ok(LandscapeSnapshot {
        generation: state.generation,
        x: grid.points().to_vec(),
        f_obj: objective_profile(kind, grid, state.pop1.task).values,
        f_sub_p1: subjective_profile(state, PopLabel::P1, grid, kind)?.values,
        f_sub_p2: subjective_profile(state, PopLabel::P2, grid, kind)?.values,
    })
}
