//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails.

use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use genvor::diagram::{
    build, build_multiplicative, build_semi_with, BuildOptions, DiagramKind, PlanarDiagram, SemiOptions,
};
use genvor::experiments::{
    estimate_cover_failure, grid_local_complexity, mix_seed, order_k_fit, prune_effectiveness, run_scaling,
    ExperimentRun, ScaleModel, ScalingSpec,
};
use genvor::geom::rational::rat_int;
use genvor::geom::{Rect, V2};
use genvor::models::{random_geometry, sample_instance, ModelConfig, WeightProfile};
use genvor::oracle::validate;

const SCHEDULE: [usize; 5] = [16, 32, 64, 128, 256];
const TRIALS: usize = 30;
const PROBES: usize = 10_000;
const SLOPE: (f64, f64) = (0.85, 1.15);

/// Written straight to the stderr handle so the lines show up even when the
/// harness captures output.
fn line(id: u32, pass: bool, text: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {id} {tag}: {text}");
}

/// Diagram-level checks shared by criteria 8 and 9.
#[derive(Default)]
struct Ledger {
    diagrams: AtomicUsize,
    mismatching: AtomicUsize,
    euler_bad: AtomicUsize,
}

impl Ledger {
    fn record(&self, mismatches: usize, euler_ok: bool) {
        self.diagrams.fetch_add(1, Ordering::Relaxed);
        if mismatches > 0 {
            self.mismatching.fetch_add(1, Ordering::Relaxed);
        }
        if !euler_ok {
            self.euler_bad.fetch_add(1, Ordering::Relaxed);
        }
    }

    fn check(&self, d: &PlanarDiagram, seed: u64, region: Option<Rect>) {
        let r = validate(d, d.sites(), PROBES, seed, region);
        self.record(r.mismatches.len(), d.euler_holds());
    }

    fn absorb(&self, run: &ExperimentRun) {
        for r in &run.records {
            self.record(r.mismatches.expect("validated"), r.euler_ok);
        }
    }
}

fn scaling(model: ScaleModel, seed: u64, compare_standard: bool) -> ExperimentRun {
    let mut spec = ScalingSpec::new(model, SCHEDULE.to_vec(), TRIALS, seed);
    spec.validate_probes = PROBES;
    spec.compare_standard = compare_standard;
    run_scaling(&spec).expect("scaling run")
}

fn slope_ok(s: f64) -> bool {
    (SLOPE.0..=SLOPE.1).contains(&s)
}

/// Relative change of mean/n between the two largest sizes.
fn ratio_drift(run: &ExperimentRun) -> f64 {
    let a = run.mean_per_site(128).unwrap();
    let b = run.mean_per_site(256).unwrap();
    (b - a).abs() / a
}

fn linearity(run: &ExperimentRun) -> (bool, String) {
    let drift = ratio_drift(run);
    let pass = slope_ok(run.slope) && drift < 0.5;
    let means: Vec<String> = run.summary.iter().map(|r| format!("{:.1}", r.mean)).collect();
    (pass, format!("slope {:.4}, mean/n drift {:.3}, means [{}]", run.slope, drift, means.join(", ")))
}

fn criterion_1() -> bool {
    let t = Instant::now();
    let mut runs = 0;
    let mut within = 0;
    let mut worst = f64::NEG_INFINITY;
    for k in 3..=10usize {
        for g in 0..20u64 {
            let geom = random_geometry(k, mix_seed(31, k as u64, g));
            let trial = estimate_cover_failure(&geom, 100_000, mix_seed(131, k as u64, g)).expect("generic geometry");
            runs += 1;
            if trial.within(3.0) {
                within += 1;
            }
            worst = worst.max((trial.p_hat - trial.bound_value) / trial.std_err.max(1e-300));
        }
    }
    let pass = within == runs;
    line(
        1,
        pass,
        &format!(
            "cover failure within bound + 3 s.e. in {within}/{runs} runs (largest excess {worst:.2} s.e.), {:.1}s",
            t.elapsed().as_secs_f64()
        ),
    );
    pass
}

fn criterion_2(ledger: &Ledger) -> bool {
    let t = Instant::now();
    let run = scaling(ScaleModel::Semi { geometry_seed: None }, 32, false);
    ledger.absorb(&run);
    let (pass, text) = linearity(&run);
    line(2, pass, &format!("semi: {text}, {:.1}s", t.elapsed().as_secs_f64()));
    pass
}

fn criterion_3(ledger: &Ledger) -> bool {
    let t = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, profile) in [
        ("all-ones", WeightProfile::AllOnes),
        ("interval", WeightProfile::Interval(rat_int(4))),
        ("geometric", WeightProfile::geometric()),
    ] {
        let ones = profile == WeightProfile::AllOnes;
        let run = scaling(ScaleModel::Multiplicative(profile), 33, ones);
        ledger.absorb(&run);
        let (ok, text) = linearity(&run);
        pass &= ok;
        parts.push(format!("{name}: {text}"));
        if ones {
            let off = run.records.iter().filter(|r| r.standard_total_in_u != Some(r.total_in_u)).count();
            pass &= off == 0;
            parts.push(format!("all-ones vs standard discrepancies {off}"));
        }
    }
    line(3, pass, &format!("multiplicative within U: {}; {:.1}s", parts.join("; "), t.elapsed().as_secs_f64()));
    pass
}

fn criterion_4(ledger: &Ledger) -> bool {
    let t = Instant::now();
    let run = scaling(
        ScaleModel::FiniteWeightSet { weights: vec![rat_int(1), rat_int(2), rat_int(4)], positions_seed: 404 },
        34,
        false,
    );
    ledger.absorb(&run);
    let pass = slope_ok(run.slope);
    line(4, pass, &format!("finite weight set {{1,2,4}}: slope {:.4}, {:.1}s", run.slope, t.elapsed().as_secs_f64()));
    pass
}

fn criterion_5(ledger: &Ledger) -> bool {
    let t = Instant::now();
    let mut means = Vec::new();
    for n in [64usize, 256, 1024] {
        let trials = 20;
        let mut acc = 0.0;
        for tr in 0..trials {
            let seed = mix_seed(35, n as u64, tr);
            let sites = sample_instance(&ModelConfig::uniform(n, WeightProfile::geometric(), seed)).unwrap();
            let d = build_multiplicative(&sites, None).unwrap();
            ledger.check(&d, seed, Some(Rect::unit()));
            acc += grid_local_complexity(&d, n).mean;
        }
        means.push((n, acc / trials as f64));
    }
    let lo = means.iter().map(|m| m.1).fold(f64::INFINITY, f64::min);
    let hi = means.iter().map(|m| m.1).fold(0.0, f64::max);
    let variation = (hi - lo) / lo;
    let pass = variation < 0.2;
    let shown: Vec<String> = means.iter().map(|(n, m)| format!("n={n}: {m:.3}")).collect();
    line(
        5,
        pass,
        &format!(
            "per-cell mean complexity [{}], variation {:.3}, {:.1}s",
            shown.join(", "),
            variation,
            t.elapsed().as_secs_f64()
        ),
    );
    pass
}

fn criterion_6() -> bool {
    let t = Instant::now();
    let mut violations = 0;
    let mut cells = 0;
    for i in 0..50u64 {
        let sites =
            sample_instance(&ModelConfig::uniform(200, WeightProfile::Interval(rat_int(4)), mix_seed(36, 200, i)))
                .unwrap();
        let r = prune_effectiveness(&sites, 1_000, mix_seed(136, 200, i));
        violations += r.violations;
        cells += r.cells.len();
    }
    let pass = violations == 0;
    line(
        6,
        pass,
        &format!(
            "{violations} pruned winners over 50 instances, {cells} cells, 1000 probes each, {:.1}s",
            t.elapsed().as_secs_f64()
        ),
    );
    pass
}

fn criterion_7(ledger: &Ledger) -> bool {
    let t = Instant::now();
    let seeds = AtomicUsize::new(0);
    let fit = order_k_fit(&[8, 12, 16], &[2, 3, 4], 10, 37, |d| {
        let s = seeds.fetch_add(1, Ordering::Relaxed) as u64;
        ledger.check(d, mix_seed(137, s, 0), None);
    })
    .unwrap();
    let pass = fit.within(2.0);
    line(
        7,
        pass,
        &format!(
            "order-k sequence totals: C = {:.4}, worst cell {:.3} C, {:.1}s",
            fit.c_fit,
            fit.worst,
            t.elapsed().as_secs_f64()
        ),
    );
    pass
}

/// Builds one random instance with both builders and compares labels at
/// probes away from either diagram's edges. Returns disagreements.
fn equivalence_case(i: u64, ledger: &Ledger) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(38, i, 0));
    let seed = rng.gen::<u64>();
    let (kind, n) = match i % 4 {
        0 => (DiagramKind::Standard, rng.gen_range(2..=32)),
        1 => (DiagramKind::Semi, rng.gen_range(2..=24)),
        2 => (DiagramKind::Multiplicative, rng.gen_range(2..=32)),
        _ => (DiagramKind::OrderKSequence(rng.gen_range(1..=3)), rng.gen_range(4..=12)),
    };
    let sites = match kind {
        DiagramKind::Semi => sample_instance(&ModelConfig::random_side(random_geometry(n, seed ^ 1), seed)).unwrap(),
        DiagramKind::Multiplicative => {
            sample_instance(&ModelConfig::uniform(n, WeightProfile::Interval(rat_int(3)), seed)).unwrap()
        }
        _ => sample_instance(&ModelConfig::uniform(n, WeightProfile::AllOnes, seed)).unwrap(),
    };
    let make = |opts: BuildOptions| match kind {
        DiagramKind::Semi => build_semi_with(&sites, SemiOptions::default(), &opts).unwrap(),
        _ => build(kind, &sites, &opts).unwrap(),
    };
    let slow = make(BuildOptions::reference());
    let fast = make(BuildOptions::default());
    ledger.check(&fast, seed, None);
    ledger.record(0, slow.euler_holds());

    let window = Rect::new(V2::new(-0.5, -0.5), V2::new(1.5, 1.5));
    let mut differ = 0;
    for _ in 0..2_000 {
        let x = V2::new(rng.gen_range(window.min.x..window.max.x), rng.gen_range(window.min.y..window.max.y));
        if slow.near_edge(x, 1e-7) || fast.near_edge(x, 1e-7) {
            continue;
        }
        if slow.label_at(x) != fast.label_at(x) {
            differ += 1;
        }
    }
    let count_off = (slow.complexity(Some(window)).total != fast.complexity(Some(window)).total) as usize;
    (differ, count_off)
}

fn criterion_8(ledger: &Ledger) -> bool {
    let t = Instant::now();
    let mut differ = 0;
    let mut count_off = 0;
    for i in 0..100 {
        let (d, c) = equivalence_case(i, ledger);
        differ += d;
        count_off += c;
    }
    let diagrams = ledger.diagrams.load(Ordering::Relaxed);
    let bad = ledger.mismatching.load(Ordering::Relaxed);
    let pass = bad == 0 && differ == 0 && count_off == 0;
    line(
        8,
        pass,
        &format!(
            "{diagrams} diagrams validated with {PROBES} probes, {bad} with mismatches; reference vs scalable on 100 instances: {differ} probe disagreements, {count_off} count differences, {:.1}s",
            t.elapsed().as_secs_f64()
        ),
    );
    pass
}

fn criterion_9(ledger: &Ledger) -> bool {
    let t = Instant::now();
    let mut spec = ScalingSpec::new(ScaleModel::Standard, SCHEDULE.to_vec(), TRIALS, 39);
    spec.validate_probes = 1_000;
    let run = run_scaling(&spec).unwrap();
    ledger.absorb(&run);
    let wrong_faces = run.records.iter().filter(|r| r.faces != r.n).count();
    let diagrams = ledger.diagrams.load(Ordering::Relaxed);
    let euler_bad = ledger.euler_bad.load(Ordering::Relaxed);
    let pass = wrong_faces == 0 && euler_bad == 0;
    line(
        9,
        pass,
        &format!(
            "standard face count != n in {wrong_faces}/{} trials; euler relation failed on {euler_bad}/{diagrams} subdivisions, {:.1}s",
            run.records.len(),
            t.elapsed().as_secs_f64()
        ),
    );
    pass
}

#[test]
fn acceptance_criteria() {
    let _ = writeln!(std::io::stderr(), "\nacceptance criteria");
    let ledger = Ledger::default();
    let failed = Mutex::new(Vec::new());
    let note = |id: u32, ok: bool| {
        if !ok {
            failed.lock().unwrap().push(id);
        }
    };
    note(1, criterion_1());
    note(2, criterion_2(&ledger));
    note(3, criterion_3(&ledger));
    note(4, criterion_4(&ledger));
    note(5, criterion_5(&ledger));
    note(6, criterion_6());
    note(7, criterion_7(&ledger));
    note(8, criterion_8(&ledger));
    note(9, criterion_9(&ledger));
    let failed = failed.into_inner().unwrap();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
