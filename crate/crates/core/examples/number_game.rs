//! One number-game realisation: a sample of 100 evaluators from a population
//! of 400 spread uniformly over the search space, compared with the
//! objective, and the same with a very large sample.
//!
//!     cargo run --example number_game

use codynamic::landscape::make_grid;
use codynamic::substrate::{eval_objective_test, subjective_test, EvaluatorSample, ObjectiveKind};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> codynamic::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let kind = ObjectiveKind::SmoothUnimodalPair;
    let population: Vec<f64> = (0..400).map(|_| rng.random_range(-3.0..3.0)).collect();
    let picked: Vec<f64> = population.choose_multiple(&mut rng, 100).copied().collect();
    let sample = EvaluatorSample::from_values(&picked)?;

    println!("{:>6} {:>8} {:>8}", "x", "f_obj", "f_sub");
    for &x in make_grid(-3.0, 3.0, 25)?.points() {
        println!("{x:>6.2} {:>8.4} {:>8.4}", eval_objective_test(kind, x)?, subjective_test(x, &sample, kind)?);
    }

    // With f_obj uniform on [0, 1] and a large sample, f_sub approaches f_obj.
    let crisp = ObjectiveKind::CrispLinear;
    let big: Vec<f64> = (0..10_000).map(|_| rng.random_range(0.0..1.0)).collect();
    let big = EvaluatorSample::from_values(&big)?;
    let sup = make_grid(0.0, 1.0, 101)?
        .points()
        .iter()
        .map(|&x| Ok((subjective_test(x, &big, crisp)? - eval_objective_test(crisp, x)?).abs()))
        .collect::<codynamic::Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    println!("\ncrisp objective, 10000 uniform evaluators: sup |f_sub - f_obj| = {sup:.4}");
    Ok(())
}
