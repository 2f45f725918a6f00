//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use summability_lab::conditions::{
    beta_head_scan, beta_rest_scan, check_monotone, diagonal_dominance, hbvs_constant, hbvs_scan,
    rbvs_constant, rbvs_scan, Direction,
};
use summability_lab::experiments::{
    corollary43_table, doubling_range, exemplar, lemma8_check, lemma9_head_check,
    lemma9_rest_check, run_experiment, uniform_t_grid, ExperimentSetup, Theorem,
};
use summability_lab::fourier::{PeriodicFunction, TrigSeries};
use summability_lab::moduli::{
    canonical_mediate, check_condition_14, log_grid, MediateFunction, ModulusProfile,
};
use summability_lab::summability::{
    cesaro_matrix, norlund_matrix, riesz_matrix, sup_error, transform, transform_direct,
    SummabilityMatrix, WeightSequence,
};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn weighted_kernel_sum_inequality() -> Outcome {
    let m_list: Vec<usize> = (0..=512).collect();
    let t_grid = uniform_t_grid(2048);
    let mut worst: f64 = 0.0;
    for beta in [0.0, 0.5, 1.0, 2.0] {
        let r = lemma8_check(beta, &m_list, &t_grid).expect("lemma8");
        worst = worst.max(r.max_normalized);
    }
    outcome(
        worst <= 1.0 + 1e-9,
        format!("max normalized sum {worst:.6}"),
    )
}

fn beta_zero_coincidence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let len = rng.gen_range(1..=128);
        let row: Vec<f64> = (0..len).map(|_| rng.gen_range(0.01..1.0)).collect();
        let head = (hbvs_scan(&row).constant - beta_head_scan(&row, 0.0).constant).abs();
        let rest =
            (rbvs_scan(&row, len - 1).constant - beta_rest_scan(&row, 0.0, len - 1).constant).abs();
        worst = worst.max(head).max(rest);
    }
    outcome(worst <= 1e-14, format!("max difference {worst:e}"))
}

fn families(max_row: usize) -> Vec<SummabilityMatrix> {
    let len = max_row + 1;
    let weights = [
        WeightSequence::linear(len),
        WeightSequence::geometric(0.5, len).unwrap(),
        WeightSequence::geometric(1.5, len).unwrap(),
    ];
    let mut out = vec![cesaro_matrix(max_row)];
    for p in &weights {
        out.push(norlund_matrix(p, max_row).unwrap());
        out.push(riesz_matrix(p, max_row).unwrap());
    }
    out
}

fn telescoping_bounds() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in families(512) {
        if check_monotone(&a, Direction::NonDecreasing).holds_uniformly {
            checked += 1;
            let c = hbvs_constant(&a).unwrap().overall_constant;
            if c > 1.0 + 1e-12 {
                failures.push(format!("{} HBVS {c}", a.label()));
            }
        }
        if check_monotone(&a, Direction::NonIncreasing).holds_uniformly {
            checked += 1;
            let c = rbvs_constant(&a).unwrap().overall_constant;
            if c > 1.0 + 1e-12 {
                failures.push(format!("{} RBVS {c}", a.label()));
            }
        }
    }
    if failures.is_empty() {
        outcome(checked > 0, format!("{checked} monotone cases checked"))
    } else {
        outcome(false, failures.join("; "))
    }
}

fn diagonal_dominance_inequalities() -> Outcome {
    let mut rows = 0;
    let mut failures = Vec::new();
    for a in families(512) {
        for r in diagonal_dominance(&a, 0.0).unwrap() {
            rows += 1;
            if !(r.max_entry_ok && r.inverse_length_ok) {
                failures.push(format!("{} n={}", a.label(), r.n));
            }
        }
    }
    if failures.is_empty() {
        outcome(rows > 0, format!("{rows} rows with finite head constant"))
    } else {
        outcome(
            false,
            format!("{} failing rows, first {}", failures.len(), failures[0]),
        )
    }
}

fn transform_oracle() -> Outcome {
    let f = PeriodicFunction::new("cos", f64::cos);
    let mut series = TrigSeries::zeros(999);
    series.cosines[0] = 1.0;
    let a = cesaro_matrix(999);
    let mut worst: f64 = 0.0;
    for n in [9, 99, 999] {
        let e = sup_error(&a, &f, &series, n, 4096).unwrap();
        worst = worst.max((e - 1.0 / (n + 1) as f64).abs());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut agree: f64 = 0.0;
    for _ in 0..100 {
        let degree = rng.gen_range(1..=64);
        let s = TrigSeries::new(
            rng.gen_range(-1.0..1.0),
            (0..degree).map(|_| rng.gen_range(-1.0..1.0)).collect(),
            (0..degree).map(|_| rng.gen_range(-1.0..1.0)).collect(),
        )
        .unwrap();
        let row: Vec<Vec<f64>> = (0..degree)
            .map(|n| {
                let raw: Vec<f64> = (0..=n).map(|_| rng.gen_range(0.0..1.0)).collect();
                let total: f64 = raw.iter().sum();
                raw.iter().map(|v| v / total).collect()
            })
            .collect();
        let m = SummabilityMatrix::from_rows("random", row).unwrap();
        let n = rng.gen_range(0..degree);
        let x = rng.gen_range(-PI..PI);
        let d = (transform(&m, &s, n, x).unwrap() - transform_direct(&m, &s, n, x).unwrap()).abs();
        agree = agree.max(d);
    }
    outcome(
        worst <= 1e-6 && agree <= 1e-10,
        format!("sup error deviation {worst:e}, transform disagreement {agree:e}"),
    )
}

fn mediate_closed_forms() -> Outcome {
    let grid = log_grid(1e-3, PI, 200);
    let mut worst: f64 = 0.0;
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let h = MediateFunction::QuadratureBacked(ModulusProfile::power(alpha).unwrap());
        for &u in &grid {
            let exact = if alpha < 1.0 {
                (u.powf(alpha - 1.0) - PI.powf(alpha - 1.0)) / (1.0 - alpha)
            } else {
                (PI / u).ln()
            };
            if exact > 0.0 {
                worst = worst.max((h.eval(u).unwrap() - exact).abs() / exact);
            }
        }
    }
    let mut ratio_dev: f64 = 0.0;
    for alpha in [0.25, 0.5, 0.75] {
        let h = MediateFunction::leading_term(alpha).unwrap();
        let r = check_condition_14(&h, &grid).unwrap();
        for e in &r.entries {
            ratio_dev = ratio_dev.max((e.ratio - 1.0 / alpha).abs());
        }
    }
    outcome(
        worst <= 1e-6 && ratio_dev <= 1e-6,
        format!("max relative H error {worst:e}, ratio deviation {ratio_dev:e}"),
    )
}

fn rate_reproduction() -> Outcome {
    let n_list = doubling_range(16, 1024);
    let lip = exemplar("weierstrass-0.5", 1024).unwrap();
    let ones = WeightSequence::ones(1025);
    let table =
        corollary43_table(&ones, 0.5, 0.0, &lip.function, &lip.series, &n_list, 4096).unwrap();
    let slope = table.fitted_slope.unwrap_or(f64::NAN);
    let tri = exemplar("triangle", 1024).unwrap();
    let a = cesaro_matrix(1024);
    let scaled: Vec<f64> = n_list
        .iter()
        .filter(|&&n| n >= 64)
        .map(|&n| {
            let e = sup_error(&a, &tri.function, &tri.series, n, 4096).unwrap();
            e * (n + 1) as f64 / (PI * (n + 1) as f64).ln()
        })
        .collect();
    let hi = scaled.iter().copied().fold(f64::MIN, f64::max);
    let lo = scaled.iter().copied().fold(f64::MAX, f64::min);
    let spread = hi / lo;
    outcome(
        (-0.65..=-0.35).contains(&slope) && spread < 5.0,
        format!("Lip(1/2) slope {slope:.4}, triangle max/min {spread:.4}"),
    )
}

fn theorem_ratios() -> Outcome {
    let n_list = doubling_range(16, 1024);
    let ex = exemplar("weierstrass-0.5", 1024).unwrap();
    let omega = ModulusProfile::power(0.5).unwrap();
    let h = canonical_mediate(&omega);
    let linear = WeightSequence::linear(1025);
    let riesz = riesz_matrix(&linear, 1024).unwrap();
    let norlund = norlund_matrix(&linear, 1024).unwrap();
    let cases = [
        (Theorem::T10, &riesz),
        (Theorem::T12, &norlund),
        (Theorem::T13, &norlund),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (theorem, matrix) in cases {
        let setup = ExperimentSetup {
            theorem,
            matrix,
            function: &ex.function,
            series: &ex.series,
            omega: &omega,
            mediate: &h,
            beta: 0.0,
        };
        let report = run_experiment(&setup, &n_list, 4096).unwrap();
        let growth = report.ratio_growth(4);
        pass &= growth <= 2.0;
        parts.push(format!(
            "{} on {} growth {growth:.3}",
            theorem.id(),
            matrix.label()
        ));
    }
    outcome(pass, parts.join(", "))
}

fn kernel_bound_constants() -> Outcome {
    let n_list = doubling_range(16, 1024);
    let t_grid = uniform_t_grid(2048);
    let riesz = riesz_matrix(&WeightSequence::linear(1025), 1024).unwrap();
    let cesaro = cesaro_matrix(1024);
    let mut pass = true;
    let mut parts = Vec::new();
    for a in [&cesaro, &riesz] {
        let head = lemma9_head_check(a, 0.0, &n_list, &t_grid).unwrap();
        let rest = lemma9_rest_check(a, 0.0, &n_list, &t_grid).unwrap();
        for r in [head, rest] {
            pass &= r.doubling_ok;
            let last = r.per_index.last().map(|p| p.1).unwrap_or(f64::NAN);
            parts.push(format!(
                "{} {} doubling {} (constant at n=1024 {last:.3})",
                a.label(),
                r.bound,
                if r.doubling_ok { "ok" } else { "FAILS" }
            ));
        }
    }
    outcome(pass, parts.join(", "))
}

fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_summalab"))
            .args([
                "theorem",
                "--id",
                "T10",
                "--matrix",
                "cesaro",
                "--alpha",
                "0.5",
                "--n",
                "16..256x2",
            ])
            .args(["--format", "csv", "--output"])
            .arg(&path)
            .status()
            .expect("spawn summalab");
        (status.success(), std::fs::read(&path).unwrap_or_default())
    };
    let (ok1, first) = run("a.csv");
    let (ok2, second) = run("b.csv");
    let text = String::from_utf8_lossy(&first);
    let mut lines = text.lines();
    let header_ok = lines.next() == Some("n,sup_error,bound,ratio");
    let ns: Vec<&str> = lines.map(|l| l.split(',').next().unwrap_or("")).collect();
    let rows_ok = ns == ["16", "32", "64", "128", "256"]
        && text.lines().skip(1).all(|l| l.split(',').count() == 4);
    outcome(
        ok1 && ok2 && first == second && header_ok && rows_ok,
        format!(
            "identical {}, header {}, rows {}",
            first == second,
            header_ok,
            rows_ok
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("kernel sum inequality", weighted_kernel_sum_inequality),
        ("beta = 0 coincidence", beta_zero_coincidence),
        ("telescoping bounds", telescoping_bounds),
        (
            "diagonal dominance inequalities",
            diagonal_dominance_inequalities,
        ),
        ("closed-form transform oracle", transform_oracle),
        ("mediate-function closed forms", mediate_closed_forms),
        ("rate reproduction", rate_reproduction),
        ("theorem ratio boundedness", theorem_ratios),
        ("kernel bound constants", kernel_bound_constants),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name} [{:.1}s]: {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
