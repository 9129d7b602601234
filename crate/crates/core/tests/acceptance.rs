//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run
//! with `cargo test -p codynamic --test acceptance -- --nocapture` to see
//! them.

use std::sync::OnceLock;

use codynamic::cli::cmd_measures;
use codynamic::evolution::{run_trajectory, PopLabel};
use codynamic::experiment::{run_batch, Measure, MeasureSeries};
use codynamic::landscape::{
    bhatt, dist, kld, make_grid, objective_profile, subjective_profile, BhattMode, DistScale, Grid,
    LandscapeProfile, ProfileKind,
};
use codynamic::output::{Format, MEASURES_HEADER, SNAPSHOT_HEADER};
use codynamic::substrate::{
    eval_objective_shared, eval_objective_test, subjective_test, EvaluatorSample, ObjectiveKind, Task,
};
use codynamic::{ExperimentConfig, ObjectiveName};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: &str, what: &str, ok: bool, detail: String) {
    println!("[{}] {id}: {what} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{id} failed: {what} ({detail})");
}

fn batch(objective: ObjectiveName, cooperative: bool) -> MeasureSeries {
    let mut c = if cooperative {
        ExperimentConfig::cooperative(objective)
    } else {
        ExperimentConfig::competitive(objective)
    };
    c.experiment.workers = 4;
    assert_eq!((c.experiment.runs, c.evolution.generations), (100, 10));
    run_batch(&c).expect("batch runs").series
}

fn smooth_coop() -> &'static MeasureSeries {
    static S: OnceLock<MeasureSeries> = OnceLock::new();
    S.get_or_init(|| batch(ObjectiveName::Smooth, true))
}

fn smooth_comp() -> &'static MeasureSeries {
    static S: OnceLock<MeasureSeries> = OnceLock::new();
    S.get_or_init(|| batch(ObjectiveName::Smooth, false))
}

fn dist_of(s: &MeasureSeries, k: usize, p: PopLabel) -> f64 {
    s.mean(k, p, Measure::Dist)
}

#[test]
fn c1_formula_anchor_values() {
    let crisp = ObjectiveKind::CrispLinear;
    let smooth = ObjectiveKind::SmoothUnimodalPair;
    let ridge = ObjectiveKind::Ridge { n: 8.0 };
    let sin = ObjectiveKind::Sinusoid;
    let t = |k, x| eval_objective_test(k, x).unwrap();
    let s = |k, x, y| eval_objective_shared(k, x, y).unwrap();
    let checks = [
        t(crisp, 1.0) == 1.0,
        t(crisp, 2.0) == 0.5,
        t(crisp, -0.5) == 0.5,
        t(smooth, -1.0) == 0.0,
        t(smooth, 1.0) == 1.0,
        s(ridge, 8.0, 8.0) == 16.0,
        s(ridge, 0.0, 8.0) == 0.0,
        s(ridge, 8.0, 0.0) == 0.0,
        s(ridge, -1.0, 4.0) == 8.0,
        s(ridge, 9.0, 3.0) == 8.0,
        (s(sin, 0.4925, 0.4925) - 0.5611).abs() <= 1e-3,
        (s(sin, -0.4925, -0.4925) + 0.5611).abs() <= 1e-3,
    ];
    let passed = checks.iter().filter(|&&c| c).count();
    report("C1", "objective functions reproduce anchor values", passed == checks.len(), format!("{passed}/{} anchors", checks.len()));
}

#[test]
fn c2_discretization() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut bad = 0;
    for i in 0..10_000 {
        let kind = if i % 2 == 0 { ObjectiveKind::CrispLinear } else { ObjectiveKind::SmoothUnimodalPair };
        let x = rng.random_range(-3.0..3.0);
        let members: Vec<f64> = (0..12).map(|_| rng.random_range(-3.0..3.0)).collect();
        let v = subjective_test(x, &EvaluatorSample::from_values(&members).unwrap(), kind).unwrap();
        let k = (v * 12.0).round();
        if v != k / 12.0 || !(0.0..=12.0).contains(&k) {
            bad += 1;
        }
    }
    report("C2", "subjective_test values are exactly k/12", bad == 0, format!("{bad} off-lattice of 10000"));
}

#[test]
fn c3_convergence_to_objective() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let members: Vec<f64> = (0..10_000).map(|_| rng.random_range(0.0..1.0)).collect();
    let sample = EvaluatorSample::from_values(&members).unwrap();
    let grid = make_grid(0.0, 1.0, 101).unwrap();
    let kind = ObjectiveKind::CrispLinear;
    let sup = grid
        .points()
        .iter()
        .map(|&x| (subjective_test(x, &sample, kind).unwrap() - eval_objective_test(kind, x).unwrap()).abs())
        .fold(0.0, f64::max);
    report("C3", "large uniform sample recovers the objective", sup <= 0.03, format!("sup error {sup:.5} <= 0.03"));
}

#[test]
fn c4_compositional_slice_property() {
    let mut checked = 0usize;
    let mut mismatches = 0usize;
    for objective in [ObjectiveName::Sinusoid, ObjectiveName::Ridge] {
        for cooperative in [true, false] {
            let c = if cooperative {
                ExperimentConfig::cooperative(objective)
            } else {
                ExperimentConfig::competitive(objective)
            };
            let kind = c.kind().unwrap();
            let grid = c.grid().unwrap();
            assert_eq!(grid.len(), 301);
            let states = run_trajectory(&c, 4).unwrap();
            assert_eq!(states.len(), 11);
            for (k, s) in states.iter().enumerate() {
                for label in [PopLabel::P1, PopLabel::P2] {
                    let partner = s.partner(label).unwrap().value();
                    if k > 0 {
                        let prev = &states[k - 1];
                        let opp = if label == PopLabel::P1 { &prev.pop2 } else { &prev.pop1 };
                        assert_eq!(partner, opp.best().unwrap().0.value());
                    }
                    let sub = subjective_profile(s, label, &grid, kind).unwrap();
                    for (x, v) in grid.points().iter().zip(&sub.values) {
                        checked += 1;
                        if v.to_bits() != eval_objective_shared(kind, *x, partner).unwrap().to_bits() {
                            mismatches += 1;
                        }
                    }
                }
            }
        }
    }
    report("C4", "compositional landscapes are exact slices", mismatches == 0, format!("{mismatches} mismatches of {checked} points"));
}

fn random_profile(rng: &mut ChaCha8Rng, grid: &Grid) -> LandscapeProfile {
    let values = (0..grid.len()).map(|_| rng.random_range(0.0..1.0)).collect();
    LandscapeProfile::new(grid.clone(), values, ProfileKind::Subjective).unwrap()
}

#[test]
fn c5_measure_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let grid = make_grid(-3.0, 3.0, 301).unwrap();
    let mut failures = Vec::new();

    for kind in [
        ObjectiveKind::CrispLinear,
        ObjectiveKind::SmoothUnimodalPair,
        ObjectiveKind::Ridge { n: 8.0 },
        ObjectiveKind::Sinusoid,
    ] {
        let g = Grid::default_for(kind);
        let o = objective_profile(kind, &g, Task::Maximize);
        if dist(&o, &o, DistScale::RangeSqrtJ).unwrap() != 0.0
            || kld(&o, &o).unwrap() != 0.0
            || bhatt(&o, &o, BhattMode::Hellinger).unwrap() > 1e-7
        {
            failures.push(format!("identity on {kind}"));
        }
    }

    let obj = objective_profile(ObjectiveKind::SmoothUnimodalPair, &grid, Task::Maximize);
    for _ in 0..1000 {
        let a = random_profile(&mut rng, &grid);
        let b = random_profile(&mut rng, &grid);
        let k = kld(&a, &b).unwrap();
        let h = bhatt(&a, &b, BhattMode::Hellinger).unwrap();
        let d = dist(&obj, &b, DistScale::RangeSqrtJ).unwrap();
        if k < 0.0 || !(0.0..=1.0).contains(&h) || !(0.0..=1.0).contains(&d) {
            failures.push(format!("range: kld {k}, bhatt {h}, dist {d}"));
        }
    }

    let a = random_profile(&mut rng, &grid);
    let b = random_profile(&mut rng, &grid);
    let (ab, ba) = (kld(&a, &b).unwrap(), kld(&b, &a).unwrap());
    if ab == ba {
        failures.push("kld symmetric on a generic pair".into());
    }

    let two = make_grid(0.0, 1.0, 2).unwrap();
    let p = |v: [f64; 2]| LandscapeProfile::new(two.clone(), v.to_vec(), ProfileKind::Objective).unwrap();
    let kld_oracle = 0.5 * (0.5f64 / 0.25).log2() + 0.5 * (0.5f64 / 0.75).log2();
    let bhatt_oracle = (1.0 - (0.5f64 * 0.25).sqrt() - (0.5f64 * 0.75).sqrt()).sqrt();
    let dist_oracle = 2f64.sqrt() / (1.0 * 2f64.sqrt());
    let hand = [
        (kld(&p([0.5, 0.5]), &p([0.25, 0.75])).unwrap(), kld_oracle),
        (bhatt(&p([0.5, 0.5]), &p([0.25, 0.75]), BhattMode::Hellinger).unwrap(), bhatt_oracle),
        (dist(&p([0.0, 1.0]), &p([1.0, 0.0]), DistScale::RangeSqrtJ).unwrap(), dist_oracle),
    ];
    for (got, want) in hand {
        if (got - want).abs() > 1e-12 {
            failures.push(format!("hand value {got} vs {want}"));
        }
    }
    report(
        "C5",
        "identity, Gibbs, ranges, kld asymmetry, hand values",
        failures.is_empty(),
        if failures.is_empty() { format!("kld(a,b)={ab:.5} kld(b,a)={ba:.5}") } else { failures.join("; ") },
    );
}

fn mean_gap(s: &MeasureSeries) -> f64 {
    (0..s.generations)
        .map(|k| (dist_of(s, k, PopLabel::P1) - dist_of(s, k, PopLabel::P2)).abs())
        .sum::<f64>()
        / s.generations as f64
}

#[test]
fn c6a_cooperating_populations_coincide() {
    let (coop, comp) = (mean_gap(smooth_coop()), mean_gap(smooth_comp()));
    report(
        "C6a",
        "cooperative P1/P2 dist gap < half the competitive gap",
        coop < 0.5 * comp,
        format!("coop gap {coop:.5}, comp gap {comp:.5}, threshold {:.5}", 0.5 * comp),
    );
}

#[test]
fn c6b_cooperation_is_farther_from_objective() {
    let (coop, comp) = (smooth_coop(), smooth_comp());
    let mut worst = f64::INFINITY;
    for k in 5..=10 {
        for p in [PopLabel::P1, PopLabel::P2] {
            worst = worst.min(dist_of(coop, k, p) - dist_of(comp, k, p));
        }
    }
    report(
        "C6b",
        "cooperative mean dist exceeds competitive for k in 5..=10, both populations",
        worst > 0.0,
        format!("smallest margin {worst:.5}"),
    );
}

#[test]
fn c7_plateau() {
    let mut detail = Vec::new();
    let mut ok = true;
    for (name, s) in [("coop", smooth_coop()), ("comp", smooth_comp())] {
        for p in [PopLabel::P1, PopLabel::P2] {
            let late = (dist_of(s, 10, p) - dist_of(s, 8, p)).abs();
            let early = (dist_of(s, 2, p) - dist_of(s, 0, p)).abs();
            ok &= late < early;
            detail.push(format!("{name}/{}: {late:.4} < {early:.4}", p.as_str()));
        }
    }
    report("C7", "dist stops changing late in the run", ok, detail.join(", "));
}

#[test]
fn c8_compositional_variance_contrast() {
    let mut ok = true;
    let mut detail = Vec::new();
    for (mode, smooth) in [("coop", smooth_coop()), ("comp", smooth_comp())] {
        let sin = batch(ObjectiveName::Sinusoid, mode == "coop");
        let width = |s: &MeasureSeries| {
            [PopLabel::P1, PopLabel::P2]
                .iter()
                .map(|&p| {
                    let q = s.get(5, p, Measure::Dist);
                    q.ci_hi - q.ci_lo
                })
                .sum::<f64>()
                / 2.0
        };
        let (ws, wt) = (width(&sin), width(smooth));
        ok &= ws > wt;
        detail.push(format!("{mode}: sinusoid {ws:.4} > smooth {wt:.4}"));
    }
    report("C8", "compositional CI at k=5 wider than test-based", ok, detail.join(", "));
}

#[test]
fn c9_determinism_and_schema() {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    let mut config = ExperimentConfig::default();
    config.experiment.workers = 4;
    let files: Vec<Vec<u8>> = dirs
        .iter()
        .map(|d| {
            let written = cmd_measures(&config, d.path(), Format::Csv).unwrap();
            std::fs::read(&written[0]).unwrap()
        })
        .collect();
    let text = String::from_utf8(files[0].clone()).unwrap();
    let mut lines = text.lines();
    let header_ok = lines.next() == Some(MEASURES_HEADER.join(",").as_str());
    let rows = lines.count();
    let identical = files[0] == files[1];
    assert_eq!(SNAPSHOT_HEADER.join(","), "x,f_obj,f_sub_p1,f_sub_p2");
    report(
        "C9",
        "byte-identical reruns, pinned header, 66 rows",
        identical && header_ok && rows == 66,
        format!("identical={identical}, header={header_ok}, rows={rows}"),
    );
}
