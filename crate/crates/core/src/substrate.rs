//! Objective fitness functions of the minimal substrates and the two rules
//! that turn them into subjective fitness.
//!
//! Two families exist:
//!
//! * **test-based** substrates ([`TestObjective`]) define a one-dimensional
//!   objective `f_obj(x)`. Subjective fitness is the number game: the share of
//!   an evaluator sample that `x` strictly beats on objective fitness.
//! * **compositional** substrates ([`SharedObjective`]) define a shared
//!   two-dimensional landscape `f_obj(x, y)`. Subjective fitness of `x` is the
//!   slice `f_obj(x, b)` through the opponent's best member `b`.
//!
//! Nothing here draws random numbers; samples are always passed in.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Location of the sinusoid landscape's global extrema, `(±c, ±c)`.
pub const SINUSOID_OPTIMUM_COORD: f64 = 0.492_570_24;

/// Height of the sinusoid landscape's global maximum (and depth of its minimum).
pub const SINUSOID_PEAK: f64 = 0.561_083_489_758_3;

/// Default ridge size parameter.
pub const DEFAULT_RIDGE_N: f64 = 8.0;

/// A point of the one-dimensional, unbounded search space.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Genotype(f64);

impl Genotype {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Genotype(value))
        } else {
            Err(Error::NonFinite(value))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Adds `delta` without any clipping. The caller guarantees finiteness.
    #[inline]
    pub(crate) fn shifted(self, delta: f64) -> Self {
        Genotype(self.0 + delta)
    }
}

impl TryFrom<f64> for Genotype {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Genotype::new(value)
    }
}

impl From<Genotype> for f64 {
    fn from(g: Genotype) -> f64 {
        g.0
    }
}

impl fmt::Display for Genotype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// One-input objective functions used by the number game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestObjective {
    /// `x` on `[0, 1]`, `0.5` elsewhere.
    CrispLinear,
    /// `1/2 + x / (1 + x²)`: minimum 0 at -1, maximum 1 at 1.
    SmoothUnimodalPair,
}

impl TestObjective {
    #[inline]
    pub fn eval(self, x: f64) -> f64 {
        match self {
            TestObjective::CrispLinear => {
                if (0.0..=1.0).contains(&x) {
                    x
                } else {
                    0.5
                }
            }
            TestObjective::SmoothUnimodalPair => 0.5 + x / (1.0 + x * x),
        }
    }

    /// Global minimum of the objective over the real line.
    pub fn global_min(self) -> f64 {
        0.0
    }
}

/// Two-input shared objective landscapes used by compositional coevolution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SharedObjective {
    /// Single diagonal ridge on `[0, n]²`, flat at `n` outside.
    Ridge { n: f64 },
    /// `sin(x + y) / (1 + x² + y²)`.
    Sinusoid,
}

impl SharedObjective {
    #[inline]
    pub fn eval(self, x: f64, y: f64) -> f64 {
        match self {
            SharedObjective::Ridge { n } => {
                if (0.0..=n).contains(&x) && (0.0..=n).contains(&y) {
                    n + 2.0 * x.min(y) - x.max(y)
                } else {
                    n
                }
            }
            SharedObjective::Sinusoid => (x + y).sin() / (1.0 + x * x + y * y),
        }
    }

    pub fn global_min(self) -> f64 {
        match self {
            SharedObjective::Ridge { .. } => 0.0,
            SharedObjective::Sinusoid => -SINUSOID_PEAK,
        }
    }

    /// The `y` coordinate of the global optimum matching `task`.
    ///
    /// Ridge: maximum at `(n, n)`, the minimum used is `(n, 0)`.
    pub fn optimum_partner(self, task: Task) -> f64 {
        match (self, task) {
            (SharedObjective::Ridge { n }, Task::Maximize) => n,
            (SharedObjective::Ridge { .. }, Task::Minimize) => 0.0,
            (SharedObjective::Sinusoid, Task::Maximize) => SINUSOID_OPTIMUM_COORD,
            (SharedObjective::Sinusoid, Task::Minimize) => -SINUSOID_OPTIMUM_COORD,
        }
    }
}

/// Which objective function defines the substrate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ObjectiveKind {
    CrispLinear,
    SmoothUnimodalPair,
    Ridge { n: f64 },
    Sinusoid,
}

impl ObjectiveKind {
    pub fn ridge(n: f64) -> Result<Self> {
        if n.is_finite() && n > 0.0 {
            Ok(ObjectiveKind::Ridge { n })
        } else {
            Err(Error::Config(format!("ridge parameter n must be positive, got {n}")))
        }
    }

    pub fn is_test_based(self) -> bool {
        matches!(self, ObjectiveKind::CrispLinear | ObjectiveKind::SmoothUnimodalPair)
    }

    pub fn is_compositional(self) -> bool {
        !self.is_test_based()
    }

    pub fn as_test(self) -> Result<TestObjective> {
        match self {
            ObjectiveKind::CrispLinear => Ok(TestObjective::CrispLinear),
            ObjectiveKind::SmoothUnimodalPair => Ok(TestObjective::SmoothUnimodalPair),
            other => Err(Error::WrongObjectiveKind {
                expected: "test-based",
                got: other.to_string(),
            }),
        }
    }

    pub fn as_shared(self) -> Result<SharedObjective> {
        match self {
            ObjectiveKind::Ridge { n } => Ok(SharedObjective::Ridge { n }),
            ObjectiveKind::Sinusoid => Ok(SharedObjective::Sinusoid),
            other => Err(Error::WrongObjectiveKind {
                expected: "compositional",
                got: other.to_string(),
            }),
        }
    }

    /// Global minimum of the objective; the shift used to treat profiles as
    /// distributions.
    pub fn global_min(self) -> f64 {
        match self {
            ObjectiveKind::CrispLinear => TestObjective::CrispLinear.global_min(),
            ObjectiveKind::SmoothUnimodalPair => TestObjective::SmoothUnimodalPair.global_min(),
            ObjectiveKind::Ridge { n } => SharedObjective::Ridge { n }.global_min(),
            ObjectiveKind::Sinusoid => SharedObjective::Sinusoid.global_min(),
        }
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectiveKind::CrispLinear => f.write_str("crisp"),
            ObjectiveKind::SmoothUnimodalPair => f.write_str("smooth"),
            ObjectiveKind::Ridge { n } => write!(f, "ridge(n={n})"),
            ObjectiveKind::Sinusoid => f.write_str("sinusoid"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Maximize,
    Minimize,
}

impl Task {
    /// True when fitness `a` is strictly better than `b` under this task.
    #[inline]
    pub fn prefers(self, a: f64, b: f64) -> bool {
        match self {
            Task::Maximize => a > b,
            Task::Minimize => a < b,
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Task::Maximize => f.write_str("maximize"),
            Task::Minimize => f.write_str("minimize"),
        }
    }
}

/// Optimisation directions of the two populations. Cooperation is the case
/// of equal directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct InteractionMode {
    pub task_p1: Task,
    pub task_p2: Task,
}

impl InteractionMode {
    pub fn cooperative(task: Task) -> Self {
        InteractionMode { task_p1: task, task_p2: task }
    }

    /// P1 searches the minimum, P2 the maximum.
    pub fn competitive() -> Self {
        InteractionMode { task_p1: Task::Minimize, task_p2: Task::Maximize }
    }

    pub fn is_cooperative(self) -> bool {
        self.task_p1 == self.task_p2
    }
}

impl Default for InteractionMode {
    fn default() -> Self {
        InteractionMode::competitive()
    }
}

/// Opponent members used to score one fitness evaluation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvaluatorSample {
    pub members: Vec<Genotype>,
}

impl EvaluatorSample {
    pub fn new(members: Vec<Genotype>) -> Self {
        EvaluatorSample { members }
    }

    pub fn from_values(values: &[f64]) -> Result<Self> {
        values
            .iter()
            .map(|&v| Genotype::new(v))
            .collect::<Result<Vec<_>>>()
            .map(EvaluatorSample::new)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn eval_objective_test(kind: ObjectiveKind, x: f64) -> Result<f64> {
    Ok(kind.as_test()?.eval(x))
}

pub fn eval_objective_shared(kind: ObjectiveKind, x: f64, y: f64) -> Result<f64> {
    Ok(kind.as_shared()?.eval(x, y))
}

/// 1 if `x` strictly beats the evaluator on objective fitness, 0 otherwise.
pub fn score(x: f64, evaluator: f64, kind: ObjectiveKind) -> Result<u32> {
    let f = kind.as_test()?;
    Ok(u32::from(f.eval(x) > f.eval(evaluator)))
}

/// Number-game fitness: the mean score of `x` against the sample.
///
/// The result is always `k / μ` for an integer `k`.
pub fn subjective_test(x: f64, sample: &EvaluatorSample, kind: ObjectiveKind) -> Result<f64> {
    let f = kind.as_test()?;
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let fx = f.eval(x);
    let wins = sample
        .members
        .iter()
        .filter(|s| fx > f.eval(s.value()))
        .count();
    Ok(wins as f64 / sample.len() as f64)
}

/// Compositional fitness: the shared landscape sliced at the partner's best.
pub fn subjective_compositional(x: f64, partner_best: f64, kind: ObjectiveKind) -> Result<f64> {
    eval_objective_shared(kind, x, partner_best)
}

/// Index of the best fitness under `task`; the lowest index wins ties.
pub fn best_index(fitnesses: &[f64], task: Task) -> Result<usize> {
    let mut iter = fitnesses.iter().enumerate();
    let (mut best, mut best_fit) = match iter.next() {
        Some((i, &f)) => (i, f),
        None => return Err(Error::EmptyPopulation),
    };
    for (i, &f) in iter {
        if task.prefers(f, best_fit) {
            best = i;
            best_fit = f;
        }
    }
    Ok(best)
}

pub fn best_of(genotypes: &[Genotype], fitnesses: &[f64], task: Task) -> Result<Genotype> {
    if genotypes.len() != fitnesses.len() {
        return Err(Error::LengthMismatch {
            genotypes: genotypes.len(),
            fitnesses: fitnesses.len(),
        });
    }
    best_index(fitnesses, task).map(|i| genotypes[i])
}
