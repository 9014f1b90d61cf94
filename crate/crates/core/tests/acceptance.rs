//! Acceptance suite. Each criterion prints one `PASS`/`FAIL` line; every
//! comparison is exact equality of polynomials or rationals (tolerance 0).

mod common;

use std::time::{Duration, Instant};

use common::random_int_matrix;
use pascal_det::cli::run_command;
use pascal_det::closedform::{verify_theorem, TheoremCase};
use pascal_det::detengine::{det_bareiss, det_cofactor, det_condensation, Engine};
use pascal_det::exactalg::{rat, ratio, MPoly, Var};
use pascal_det::factorid::{
    multiplicity_at_factor, proof_grid, proof_steps, required_multiplicity, skew_symmetry_check, Check, Parity, RowStep,
};
use pascal_det::hyper::{hyper_suite, DEFAULT_SEED};
use pascal_det::luwitness::{build_witness, check_lu, Expected, LuTheorem};
use pascal_det::matrix::RingMatrix;
use pascal_det::recmatrix::{entry_thm3_closed, genfun_check, genfun_matched, pascal_table, AMode, PascalFamily};
use pascal_det::report::Report;
use pascal_det::series2d::{series_coeff, series_from_ratfunc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Outcome of one criterion: pass flag and a one-line detail.
type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> (i32, Vec<Report>) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["pascal-det"];
    full.extend_from_slice(args);
    let code = run_command(full, &mut out, &mut err);
    let reports = String::from_utf8(out)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect();
    (code, reports)
}

/// `verify` through the CLI: exit 0, one report per n, every lhs == rhs.
fn verify_cli(args: &[&str], n_max: usize) -> Outcome {
    let (code, rs) = cli(args);
    let ns: Vec<usize> = rs.iter().map(|r| r.n).collect();
    let exact = rs.iter().all(|r| r.passed() && r.lhs == r.rhs);
    let ok = code == 0 && exact && ns == (1..=n_max).collect::<Vec<_>>();
    let failed: Vec<String> = rs
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}:n={}", r.case, r.n))
        .collect();
    (ok, format!("{} cases, failures {failed:?}", rs.len()))
}

fn within(start: Instant, budget: Duration, o: Outcome) -> Outcome {
    let t = start.elapsed();
    (o.0 && t < budget, format!("{} in {:.2?} (budget {:?})", o.1, t, budget))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    within(
        start,
        Duration::from_secs(60),
        verify_cli(&["verify", "--theorem", "1", "--n-max", "8"], 8),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    within(
        start,
        Duration::from_secs(300),
        verify_cli(&["verify", "--theorem", "2", "--n-max", "6"], 6),
    )
}

fn criterion_3() -> Outcome {
    let (ok, detail) = verify_cli(&["verify", "--theorem", "3", "--n-max", "6"], 6);
    let (_, rs) = cli(&["verify", "--theorem", "3", "--n-max", "2"]);
    let shape = rs[1].rhs == "x^4 + 4*x^3 + 6*x^2 + 4*x + 1";
    (ok && shape, detail)
}

fn criterion_4() -> Outcome {
    let t4 = verify_cli(&["verify", "--theorem", "4", "--n-max", "8"], 8);
    let t5 = verify_cli(&["verify", "--theorem", "5", "--n-max", "8"], 8);
    let (_, rs) = cli(&["verify", "--theorem", "4", "--n-max", "8"]);
    let powers = rs.iter().all(|r| r.rhs == (1u64 << (r.n * (r.n - 1) / 2)).to_string());
    (t4.0 && t5.0 && powers, format!("T4 {}; T5 {}", t4.1, t5.1))
}

fn criterion_5() -> Outcome {
    let pre = verify_cli(&["verify", "--theorem", "6", "--n-max", "3"], 3);
    let grid: Vec<(u64, u64)> = [0, 1, 3, 5, 8]
        .iter()
        .flat_map(|&x| [0, 2, 4, 7, 8].map(|y| (x, y)))
        .collect();
    let cases: Vec<TheoremCase> = grid
        .iter()
        .flat_map(|&(x, y)| (1..=5).map(move |n| TheoremCase::T6Factorial { n, x, y }))
        .collect();
    let reports: Vec<Report> = cases.par_iter().map(|c| verify_theorem(c, Engine::Bareiss)).collect();
    let fact = reports.iter().all(|r| r.passed() && r.lhs == r.rhs);
    (
        pre.0 && fact && grid.len() >= 25,
        format!(
            "prefactored {}; factorial {} cases on {} points",
            pre.1,
            reports.len(),
            grid.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let plan = [
        (LuTheorem::T1, 6),
        (LuTheorem::T4, 8),
        (LuTheorem::T5, 6),
        (LuTheorem::T2, 4),
    ];
    let jobs: Vec<(LuTheorem, usize)> = plan.iter().flat_map(|&(t, m)| (1..=m).map(move |n| (t, n))).collect();
    let bad: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(t, n)| {
            let w = build_witness(t, n);
            let full_l = matches!(w.expected, Expected::FullL(_)) == (t == LuTheorem::T1);
            let c = check_lu(&w);
            (!(c.passed() && full_l)).then(|| format!("{}:n={n}", t.label()))
        })
        .collect();
    (bad.is_empty(), format!("{} witnesses, failures {bad:?}", jobs.len()))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let rs = hyper_suite(100, DEFAULT_SEED);
    let per_identity = [
        "chu_vandermonde",
        "gauss_terminating",
        "transform_32",
        "contiguous_32",
        "contiguous_43",
    ]
    .iter()
    .all(|c| rs.iter().filter(|r| r.case == *c).count() == 100);
    let exact = rs.iter().all(|r| r.passed() && r.lhs == r.rhs);
    within(
        start,
        Duration::from_secs(10),
        (
            per_identity && exact,
            format!("{} instances, seed {DEFAULT_SEED}", rs.len()),
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        let grid = proof_grid(n);
        // S3 has 2n-2a-2 relations per a, S4 one fewer
        let s3 = grid
            .iter()
            .filter(|c| matches!(c, Check::Rows { step: RowStep::S3, .. }))
            .count();
        let s4 = grid
            .iter()
            .filter(|c| matches!(c, Check::Rows { step: RowStep::S4, .. }))
            .count();
        let want_s3: usize = (0..n).map(|a| 2 * n - 2 * a - 2).sum();
        let want_s4: usize = (0..n).map(|a| (2 * n - 2 * a).saturating_sub(3)).sum();
        if (s3, s4) != (want_s3, want_s4) {
            bad.push(format!("n={n} grid"));
        }
        let rs = proof_steps(n);
        total += rs.len();
        bad.extend(rs.iter().filter(|r| !r.passed()).map(|r| format!("{}:n={n}", r.case)));
        for a in 0..n {
            for p in [Parity::Even, Parity::Odd] {
                if multiplicity_at_factor(n, a, p).is_some_and(|k| k < required_multiplicity(n, a)) {
                    bad.push(format!("multiplicity n={n} a={a} {p:?}"));
                }
            }
        }
        let k = 2 * n * n - n;
        let degree = rs.iter().find(|r| r.case == "S5_degree").unwrap();
        if degree.lhs != format!("deg_X={k},deg_Y={k}") {
            bad.push(format!("degree n={n}"));
        }
    }
    (bad.is_empty(), format!("{total} step checks, failures {bad:?}"))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bad = Vec::new();
    for k in 0..200 {
        let dim = rng.gen_range(1..=8);
        let mut m = random_int_matrix(&mut rng, dim, -9, 9);
        if k % 2 == 0 {
            for i in 1..dim.saturating_sub(1) {
                for j in 1..dim - 1 {
                    m[(i, j)] = MPoly::zero();
                }
            }
        }
        if det_condensation(&m).unwrap() != det_bareiss(&m).unwrap() {
            bad.push(format!("random condensation #{k}"));
        }
    }
    for k in 0..300 {
        let dim = rng.gen_range(1..=6);
        let m = random_int_matrix(&mut rng, dim, -9, 9);
        if det_cofactor(&m).unwrap() != det_bareiss(&m).unwrap() {
            bad.push(format!("random cofactor #{k}"));
        }
    }
    let mut theorem: Vec<TheoremCase> = Vec::new();
    for n in 1..=6 {
        theorem.push(TheoremCase::T1 { n });
        theorem.push(TheoremCase::T4 { n, a: AMode::Symbolic });
        theorem.push(TheoremCase::T5 { n, a: AMode::Symbolic });
    }
    for n in 1..=3 {
        theorem.push(TheoremCase::T2 { n });
        theorem.push(TheoremCase::T3 { n });
        theorem.push(TheoremCase::T6Prefactored { n });
        theorem.push(TheoremCase::T6Factorial { n, x: 2, y: 5 });
    }
    bad.extend(
        theorem
            .par_iter()
            .filter_map(|c| {
                let m = c.matrix();
                let b = det_bareiss(&m).unwrap();
                let same = det_condensation(&m).unwrap() == b && det_cofactor(&m).unwrap() == b;
                (!same).then(|| format!("{c}:n={}", c.n()))
            })
            .collect::<Vec<_>>(),
    );
    (
        bad.is_empty(),
        format!("500 random and {} theorem matrices, failures {bad:?}", theorem.len()),
    )
}

fn criterion_10() -> Outcome {
    let fams = [PascalFamily::T1, PascalFamily::T2, PascalFamily::T3];
    let matched: Vec<usize> = fams.par_iter().map(|&f| genfun_matched(f, 10)).collect();
    let ok = matched.iter().all(|&k| k == 121) && fams.iter().all(|&f| genfun_check(f, 10));
    (ok, format!("matched coefficients {matched:?} of 121"))
}

fn criterion_11() -> Outcome {
    let mut bad = Vec::new();
    for fam in [PascalFamily::T2, PascalFamily::T3] {
        let t = pascal_table(fam, 9);
        if !t.is_skew_symmetric() {
            bad.push(format!("{fam:?} skew"));
        }
    }
    for n in 1..=4 {
        for (x, y) in [(0, 0), (2, 1), (5, 3), (8, 8), (1, 7)] {
            if !skew_symmetry_check(n, x, y) {
                bad.push(format!("T6 factorial skew n={n} ({x},{y})"));
            }
        }
    }
    let t3 = pascal_table(PascalFamily::T3, 9);
    let closed = RingMatrix::from_fn(9, 9, entry_thm3_closed);
    if t3 != closed {
        bad.push("closed T3 entries".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let u = MPoly::var(Var::U);
    for k in 0..200 {
        let deg = rng.gen_range(0..=8u32);
        let big_n = rng.gen_range(deg..=8);
        let p = (0..=deg).fold(MPoly::zero(), |acc, e| {
            &acc + &u.pow(e).scale(&rat(rng.gen_range(-9..=9)))
        });
        let q = ratio(
            rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 },
            rng.gen_range(1..=5),
        );
        let s = series_from_ratfunc(&p, &(&MPoly::one() - &u.scale(&q)), big_n as usize).unwrap();
        let lhs = series_coeff(&s, big_n as usize, 0).unwrap();
        let rhs = &q.pow(big_n) * &p.eval(&[(Var::U, q.recip())]).unwrap();
        if lhs != MPoly::constant(rhs) {
            bad.push(format!("coefficient fact #{k}"));
        }
    }
    (bad.is_empty(), format!("failures {bad:?}"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("theorem 1, n <= 8", criterion_1),
        ("theorem 2, n <= 6", criterion_2),
        ("theorem 3, n <= 6", criterion_3),
        ("theorems 4 and 5, n <= 8", criterion_4),
        ("theorem 6 prefactored and factorial", criterion_5),
        ("LU witnesses", criterion_6),
        ("hypergeometric suite", criterion_7),
        ("identification of factors, n <= 3", criterion_8),
        ("engine cross-validation", criterion_9),
        ("generating functions, order 10", criterion_10),
        ("property floors", criterion_11),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = f();
        let tag = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {tag}: {name} ({detail}) [{:.2?}]",
            k + 1,
            start.elapsed()
        );
        if !ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
