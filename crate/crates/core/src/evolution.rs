//! Two-population coevolutionary algorithm with shared synchronisation.
//!
//! Each generation both populations undergo tournament selection and Gaussian
//! mutation independently. The offspring of generation `k + 1` are then
//! evaluated against the opposing population as it stood, evaluated, at the
//! end of generation `k`. There is no recombination and no elitism.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;
use crate::error::{Error, Result};
use crate::substrate::{
    best_index, subjective_test, EvaluatorSample, Genotype, InteractionMode, ObjectiveKind,
    SharedObjective, Task,
};

/// Random stream owned by a single trajectory.
pub type TrajectoryRng = ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PopLabel {
    P1,
    P2,
}

impl PopLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            PopLabel::P1 => "p1",
            PopLabel::P2 => "p2",
        }
    }
}

/// Closed real interval used to seed a population.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        let iv = Interval { lo, hi };
        iv.validate()?;
        Ok(iv)
    }

    pub fn validate(&self) -> Result<()> {
        if self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "initialisation interval [{}, {}] is empty or not finite",
                self.lo, self.hi
            )))
        }
    }
}

/// How evaluator samples are drawn from the opposing population.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleDraw {
    #[default]
    WithoutReplacement,
    WithReplacement,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvoParams {
    pub population_size: usize,
    pub sample_size: usize,
    pub tournament_size: usize,
    pub mutation_prob: f64,
    pub mutation_sigma: f64,
    pub generations: usize,
    pub init_p1: Interval,
    pub init_p2: Interval,
    pub sample_draw: SampleDraw,
}

impl EvoParams {
    /// Population 24, sample 12, binary tournaments, mutation 0.5 / 0.1,
    /// ten generations, both populations seeded on `interval`.
    pub fn with_interval(interval: Interval) -> Self {
        EvoParams {
            population_size: 24,
            sample_size: 12,
            tournament_size: 2,
            mutation_prob: 0.5,
            mutation_sigma: 0.1,
            generations: 10,
            init_p1: interval,
            init_p2: interval,
            sample_draw: SampleDraw::WithoutReplacement,
        }
    }

    /// Seeding interval that spans every optimum of `kind`.
    pub fn default_interval(kind: ObjectiveKind) -> Interval {
        match kind {
            ObjectiveKind::Ridge { n } => Interval { lo: 0.0, hi: n },
            _ => Interval { lo: -3.0, hi: 3.0 },
        }
    }

    pub fn for_objective(kind: ObjectiveKind) -> Self {
        Self::with_interval(Self::default_interval(kind))
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Config(m));
        if self.population_size == 0 {
            return fail("population_size must be at least 1".into());
        }
        if self.sample_size == 0 || self.sample_size > self.population_size {
            return fail(format!(
                "sample_size must lie in 1..={}, got {}",
                self.population_size, self.sample_size
            ));
        }
        if self.tournament_size == 0 {
            return fail("tournament_size must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.mutation_prob) {
            return fail(format!("mutation_prob must lie in [0, 1], got {}", self.mutation_prob));
        }
        if !(self.mutation_sigma.is_finite() && self.mutation_sigma > 0.0) {
            return fail(format!("mutation_sigma must be positive, got {}", self.mutation_sigma));
        }
        self.init_p1.validate()?;
        self.init_p2.validate()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Population {
    pub label: PopLabel,
    pub task: Task,
    pub genotypes: Vec<Genotype>,
    /// Subjective fitness, `None` until the population has been evaluated.
    pub fitnesses: Option<Vec<f64>>,
}

impl Population {
    pub fn new(label: PopLabel, task: Task, genotypes: Vec<Genotype>) -> Self {
        Population { label, task, genotypes, fitnesses: None }
    }

    pub fn with_fitnesses(mut self, fitnesses: Vec<f64>) -> Result<Self> {
        if fitnesses.len() != self.genotypes.len() {
            return Err(Error::LengthMismatch {
                genotypes: self.genotypes.len(),
                fitnesses: fitnesses.len(),
            });
        }
        self.fitnesses = Some(fitnesses);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.genotypes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genotypes.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.genotypes.iter().map(|g| g.value())
    }

    pub fn fitnesses(&self) -> Result<&[f64]> {
        self.fitnesses
            .as_deref()
            .ok_or(Error::Unevaluated(self.label.as_str()))
    }

    /// Best member under the population's own task, with its fitness.
    pub fn best(&self) -> Result<(Genotype, f64)> {
        let fits = self.fitnesses()?;
        let i = best_index(fits, self.task)?;
        Ok((self.genotypes[i], fits[i]))
    }
}

/// Both populations at generation `k`, together with the evaluators that
/// produced their fitness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoevoState {
    pub generation: usize,
    pub pop1: Population,
    pub pop2: Population,
    /// Test-based only: the sample from P2 used for each member of P1.
    pub samples1: Vec<EvaluatorSample>,
    /// Test-based only: the sample from P1 used for each member of P2.
    pub samples2: Vec<EvaluatorSample>,
    /// Compositional only: the P2 genotype P1 was evaluated against.
    pub partner1: Option<Genotype>,
    /// Compositional only: the P1 genotype P2 was evaluated against.
    pub partner2: Option<Genotype>,
    pub best1: Genotype,
    pub best2: Genotype,
}

impl CoevoState {
    pub fn population(&self, label: PopLabel) -> &Population {
        match label {
            PopLabel::P1 => &self.pop1,
            PopLabel::P2 => &self.pop2,
        }
    }

    pub fn samples(&self, label: PopLabel) -> &[EvaluatorSample] {
        match label {
            PopLabel::P1 => &self.samples1,
            PopLabel::P2 => &self.samples2,
        }
    }

    pub fn partner(&self, label: PopLabel) -> Option<Genotype> {
        match label {
            PopLabel::P1 => self.partner1,
            PopLabel::P2 => self.partner2,
        }
    }

    fn assemble(
        generation: usize,
        pop1: Population,
        pop2: Population,
        samples: (Vec<EvaluatorSample>, Vec<EvaluatorSample>),
        partners: (Option<Genotype>, Option<Genotype>),
    ) -> Result<Self> {
        let best1 = pop1.best()?.0;
        let best2 = pop2.best()?.0;
        Ok(CoevoState {
            generation,
            pop1,
            pop2,
            samples1: samples.0,
            samples2: samples.1,
            partner1: partners.0,
            partner2: partners.1,
            best1,
            best2,
        })
    }
}

pub fn init_population<R: Rng + ?Sized>(
    params: &EvoParams,
    interval: Interval,
    label: PopLabel,
    task: Task,
    rng: &mut R,
) -> Result<Population> {
    interval.validate()?;
    let genotypes = (0..params.population_size)
        .map(|_| Genotype::new(rng.random_range(interval.lo..=interval.hi)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Population::new(label, task, genotypes))
}

fn draw_sample<R: Rng + ?Sized>(
    opponent: &Population,
    size: usize,
    draw: SampleDraw,
    rng: &mut R,
) -> EvaluatorSample {
    let members = match draw {
        SampleDraw::WithoutReplacement => index::sample(rng, opponent.len(), size)
            .into_iter()
            .map(|i| opponent.genotypes[i])
            .collect(),
        SampleDraw::WithReplacement => (0..size)
            .map(|_| opponent.genotypes[rng.random_range(0..opponent.len())])
            .collect(),
    };
    EvaluatorSample::new(members)
}

/// Number-game evaluation. Every individual gets its own fresh sample drawn
/// from `opponent_prev`; the samples are returned alongside.
pub fn evaluate_test<R: Rng + ?Sized>(
    pop: &Population,
    opponent_prev: &Population,
    params: &EvoParams,
    kind: ObjectiveKind,
    rng: &mut R,
) -> Result<(Population, Vec<EvaluatorSample>)> {
    kind.as_test()?;
    let mu = params.sample_size;
    if mu == 0 {
        return Err(Error::EmptySample);
    }
    if mu > opponent_prev.len() {
        return Err(Error::SampleTooLarge { mu, lambda: opponent_prev.len() });
    }
    let mut samples = Vec::with_capacity(pop.len());
    let mut fitnesses = Vec::with_capacity(pop.len());
    for g in &pop.genotypes {
        let sample = draw_sample(opponent_prev, mu, params.sample_draw, rng);
        fitnesses.push(subjective_test(g.value(), &sample, kind)?);
        samples.push(sample);
    }
    Ok((pop.clone().with_fitnesses(fitnesses)?, samples))
}

fn evaluate_against_partner(
    pop: &Population,
    partner: Genotype,
    shared: SharedObjective,
) -> Result<Population> {
    let fitnesses = pop.values().map(|x| shared.eval(x, partner.value())).collect();
    pop.clone().with_fitnesses(fitnesses)
}

/// Compositional evaluation: every individual is scored on the slice of the
/// shared landscape through the opponent's best member. Returns the
/// evaluated population and the partner used.
pub fn evaluate_compositional(
    pop: &Population,
    opponent_prev: &Population,
    kind: ObjectiveKind,
) -> Result<(Population, Genotype)> {
    let shared = kind.as_shared()?;
    let (partner, _) = opponent_prev.best()?;
    Ok((evaluate_against_partner(pop, partner, shared)?, partner))
}

/// `λ` independent tournaments with contestants drawn with replacement.
/// Ties go to the contestant drawn first.
pub fn tournament_select<R: Rng + ?Sized>(
    pop: &Population,
    tournament_size: usize,
    rng: &mut R,
) -> Result<Vec<Genotype>> {
    let fits = pop.fitnesses()?;
    let n = pop.len();
    if n == 0 {
        return Err(Error::EmptyPopulation);
    }
    let size = tournament_size.max(1);
    Ok((0..n)
        .map(|_| {
            let mut winner = rng.random_range(0..n);
            for _ in 1..size {
                let c = rng.random_range(0..n);
                if pop.task.prefers(fits[c], fits[winner]) {
                    winner = c;
                }
            }
            pop.genotypes[winner]
        })
        .collect())
}

/// Additive Gaussian mutation, applied to each gene with `mutation_prob`.
pub fn mutate<R: Rng + ?Sized>(
    genotypes: &[Genotype],
    params: &EvoParams,
    rng: &mut R,
) -> Result<Vec<Genotype>> {
    let normal = Normal::new(0.0, params.mutation_sigma)
        .map_err(|e| Error::Config(format!("mutation_sigma: {e}")))?;
    genotypes
        .iter()
        .map(|&g| {
            if rng.random_bool(params.mutation_prob) {
                let out = g.shifted(normal.sample(rng));
                Genotype::new(out.value())
            } else {
                Ok(g)
            }
        })
        .collect()
}

/// Fixed substrate and interaction, driving trajectories generation by
/// generation.
#[derive(Clone, Debug)]
pub struct Coevolution {
    pub params: EvoParams,
    pub kind: ObjectiveKind,
    pub mode: InteractionMode,
}

impl Coevolution {
    pub fn new(params: EvoParams, kind: ObjectiveKind, mode: InteractionMode) -> Result<Self> {
        params.validate()?;
        if let ObjectiveKind::Ridge { n } = kind {
            ObjectiveKind::ridge(n)?;
        }
        Ok(Coevolution { params, kind, mode })
    }

    /// Seeds both populations and evaluates each against the other's initial
    /// genotypes.
    ///
    /// Compositional populations have no fitness to rank at this point, so
    /// each side is scored against a uniformly drawn member of the other.
    pub fn initial_state<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<CoevoState> {
        let p = &self.params;
        let pop1 = init_population(p, p.init_p1, PopLabel::P1, self.mode.task_p1, rng)?;
        let pop2 = init_population(p, p.init_p2, PopLabel::P2, self.mode.task_p2, rng)?;
        if self.kind.is_test_based() {
            let (e1, s1) = evaluate_test(&pop1, &pop2, p, self.kind, rng)?;
            let (e2, s2) = evaluate_test(&pop2, &pop1, p, self.kind, rng)?;
            CoevoState::assemble(0, e1, e2, (s1, s2), (None, None))
        } else {
            let shared = self.kind.as_shared()?;
            let partner1 = pop2.genotypes[rng.random_range(0..pop2.len())];
            let partner2 = pop1.genotypes[rng.random_range(0..pop1.len())];
            let e1 = evaluate_against_partner(&pop1, partner1, shared)?;
            let e2 = evaluate_against_partner(&pop2, partner2, shared)?;
            CoevoState::assemble(
                0,
                e1,
                e2,
                (Vec::new(), Vec::new()),
                (Some(partner1), Some(partner2)),
            )
        }
    }

    /// One synchronised generation: select and mutate both populations, then
    /// evaluate each offspring population against the other side's previous
    /// evaluated population.
    pub fn step<R: Rng + ?Sized>(&self, state: &CoevoState, rng: &mut R) -> Result<CoevoState> {
        let p = &self.params;
        let offspring = |pop: &Population, rng: &mut R| -> Result<Population> {
            let selected = tournament_select(pop, p.tournament_size, rng)?;
            Ok(Population::new(pop.label, pop.task, mutate(&selected, p, rng)?))
        };
        let next1 = offspring(&state.pop1, rng)?;
        let next2 = offspring(&state.pop2, rng)?;
        let generation = state.generation + 1;
        if self.kind.is_test_based() {
            let (e1, s1) = evaluate_test(&next1, &state.pop2, p, self.kind, rng)?;
            let (e2, s2) = evaluate_test(&next2, &state.pop1, p, self.kind, rng)?;
            CoevoState::assemble(generation, e1, e2, (s1, s2), (None, None))
        } else {
            let (e1, b2) = evaluate_compositional(&next1, &state.pop2, self.kind)?;
            let (e2, b1) = evaluate_compositional(&next2, &state.pop1, self.kind)?;
            CoevoState::assemble(
                generation,
                e1,
                e2,
                (Vec::new(), Vec::new()),
                (Some(b2), Some(b1)),
            )
        }
    }

    /// States for `k = 0..=generations`.
    pub fn trajectory(&self, seed: u64) -> Result<Vec<CoevoState>> {
        let mut rng = TrajectoryRng::seed_from_u64(seed);
        let mut states = Vec::with_capacity(self.params.generations + 1);
        states.push(self.initial_state(&mut rng)?);
        for _ in 0..self.params.generations {
            let next = self.step(states.last().expect("non-empty"), &mut rng)?;
            states.push(next);
        }
        Ok(states)
    }
}

pub fn step_generation<R: Rng + ?Sized>(
    state: &CoevoState,
    params: &EvoParams,
    kind: ObjectiveKind,
    rng: &mut R,
) -> Result<CoevoState> {
    let mode = InteractionMode { task_p1: state.pop1.task, task_p2: state.pop2.task };
    Coevolution::new(params.clone(), kind, mode)?.step(state, rng)
}

pub fn run_trajectory(config: &ExperimentConfig, seed: u64) -> Result<Vec<CoevoState>> {
    config.coevolution()?.trajectory(seed)
}
