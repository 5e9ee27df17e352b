//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use common::*;
use legmon::braid::{builtin_script, torus_word, verify_loop, Builtin};
use legmon::explorer::{
    faithfulness_sweep, reduced_words, separate, xi_pluecker_report, DEFAULT_MAX_SYLLABLES,
    DEFAULT_POINTS, DEFAULT_PROBE_BUDGET, DEFAULT_SWEEP_SEED, XI_SEED,
};
use legmon::moduli::{flags_from_point, validate_bott_samelson};
use legmon::monodromy::check_exchange;
use legmon::{
    act_word, act_xi, pluecker, random_point, validate_point, Family, Field, GroupWord,
    PlueckerIndex,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn loop_certification() -> Outcome {
    let cases = [
        (Builtin::Sigma1, 2, None, torus_word(3, 9)),
        (Builtin::Xi1, 1, None, torus_word(4, 8)),
        (Builtin::Xi2, 1, None, torus_word(4, 8)),
        (Builtin::Xi3, 1, None, torus_word(4, 8)),
        (Builtin::DeltaPower, 2, Some(3), torus_word(3, 9)),
    ];
    for (name, s, k, base) in cases {
        let script = builtin_script(name, s, k).map_err(|e| e.to_string())?;
        ensure(script.base == base, || {
            format!("{name}: unexpected base {}", script.base)
        })?;
        let report = verify_loop(&script).map_err(|e| format!("{name}: {e}"))?;
        let last = report.trace.last().unwrap();
        ensure(
            report.is_loop && last.to_string() == base.to_string(),
            || format!("{name}: ends at {last}"),
        )?;
    }
    Ok("Σ1, Ξ1, Ξ2, Ξ3, δ² close with every move legal".into())
}

const IDENTITIES: [(&str, [usize; 3], [usize; 3]); 7] = [
    ("A", [1, 4, 7], [2, 5, 8]),
    ("A2", [1, 4, 7], [3, 6, 9]),
    ("A A A", [1, 4, 7], [1, 4, 7]),
    ("S1", [3, 6, 9], [3, 6, 9]),
    ("S1", [1, 4, 7], [2, 5, 8]),
    ("B", [1, 4, 7], [3, 6, 9]),
    ("B B", [1, 4, 7], [1, 4, 7]),
];

fn pullback_identities() -> Outcome {
    let mut points = Vec::new();
    for seed in 0..100 {
        points.push(random_point(Family::T36, fp(), seed).map_err(|e| e.to_string())?);
    }
    for seed in 0..5 {
        points.push(random_point(Family::T36, Field::Q, seed).map_err(|e| e.to_string())?);
    }
    for (word, i, j) in IDENTITIES {
        let w: GroupWord = word.parse().unwrap();
        let pi = PlueckerIndex::new(Family::T36, &i).unwrap();
        let pj = PlueckerIndex::new(Family::T36, &j).unwrap();
        for (n, p) in points.iter().enumerate() {
            let image = act_word(p, &w).map_err(|e| format!("{word} at point {n}: {e}"))?;
            let lhs = pluecker(&image, &pi).unwrap();
            let rhs = pluecker(p, &pj).unwrap();
            ensure(lhs == rhs, || {
                format!("{pi} after {word} != {pj} at point {n}")
            })?;
        }
    }
    Ok("7 identities on 100 points over F_p and 5 over Q".into())
}

fn xi_structure() -> Outcome {
    for i in 1..=3u8 {
        for seed in 0..100 {
            let p = random_point(Family::T44, fp(), seed).map_err(|e| e.to_string())?;
            let q = act_xi(&p, i).map_err(|e| format!("Ξ{i} seed {seed}: {e}"))?;
            let check = check_exchange(&p, &q, i as usize).unwrap();
            ensure(check.all_ok(), || format!("Ξ{i} seed {seed}: {check:?}"))?;
            ensure(validate_point(&q).is_valid(), || {
                format!("Ξ{i} seed {seed}: output invalid")
            })?;
        }
    }
    Ok("Ξ1, Ξ2, Ξ3 on 100 points each: memberships, Λ² normalization, valid outputs".into())
}

fn faithfulness() -> Outcome {
    let r = faithfulness_sweep(
        DEFAULT_MAX_SYLLABLES,
        DEFAULT_PROBE_BUDGET,
        DEFAULT_POINTS,
        DEFAULT_SWEEP_SEED,
        fp(),
    )
    .map_err(|e| e.to_string())?;
    let expected = reduced_words(DEFAULT_MAX_SYLLABLES).len() - 1;
    ensure(r.words == expected, || {
        format!("swept {} words, expected {expected}", r.words)
    })?;
    ensure(r.complete(), || {
        let left: Vec<String> = r.unseparated.iter().map(|w| w.to_string()).collect();
        format!("unseparated: {}", left.join("; "))
    })?;
    for w in &r.witnesses {
        ensure(w.verified_over_q(), || {
            format!("{} not confirmed over Q", w.word)
        })?;
        ensure(w.replay().map_err(|e| e.to_string())?, || {
            format!("{} does not replay", w.word)
        })?;
    }
    Ok(format!(
        "{}/{} words separated, all confirmed over Q",
        r.separated, r.words
    ))
}

fn kalman_loop() -> Outcome {
    let a: GroupWord = "A".parse().unwrap();
    let w = separate(&a, 0, 8, DEFAULT_SWEEP_SEED, fp())
        .map_err(|e| e.to_string())?
        .ok_or("no witness within 8 samples")?;
    ensure(w.probe.is_empty(), || format!("probe {}", w.probe))?;
    let p258 = pluecker(
        &w.point,
        &PlueckerIndex::new(Family::T36, &[2, 5, 8]).unwrap(),
    )
    .unwrap();
    ensure(w.lhs == p258, || "lhs is not P258".into())?;
    Ok(format!("P258 = {} != P147 = {}", w.lhs, w.rhs))
}

fn bott_samelson() -> Outcome {
    let word = Family::T36.braid();
    for seed in 0..1000 {
        let p = random_point(Family::T36, fp(), seed).map_err(|e| e.to_string())?;
        let flags = flags_from_point(&p).map_err(|e| format!("seed {seed}: {e}"))?;
        let ok = validate_bott_samelson(&flags, &word).map_err(|e| e.to_string())?;
        ensure(ok, || format!("seed {seed} fails"))?;
    }
    Ok("1000 seeds".into())
}

fn run_prop<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Check,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Outcome {
    run_prop("field axioms", 10_000, triple(), |(a, b, c)| {
        field_axioms(&a, &b, &c)
    })?;
    run_prop("determinant vs Leibniz", 300, any_small_matrix(), |m| {
        determinant_matches_leibniz(&m)
    })?;
    run_prop(
        "determinant alternating/multilinear",
        300,
        (
            small_matrix(Field::Q, 4),
            prop::collection::vec(-4i64..5, 4),
            -5i64..6,
            0usize..4,
            0usize..4,
        ),
        |(m, x, l, a, b)| determinant_alternating_multilinear(&m, &x, l, a, b),
    )?;
    run_prop(
        "intersect",
        300,
        (
            int_vectors(4, 4),
            int_vectors(4, 4),
            prop_oneof![Just(Field::Q), Just(Field::Fp { p: 5 })],
        ),
        |(xs, ys, f)| intersect_laws(&xs, &ys, f),
    )?;
    run_prop(
        "wedge_normalize",
        300,
        (
            prop::collection::vec(-5i64..6, 4),
            prop::collection::vec(-5i64..6, 4),
            -5i64..6,
            -5i64..6,
        ),
        |(v1, v2, s, t)| wedge_normalize_exact(&v1, &v2, s, t),
    )?;
    for n in 0..=10 {
        let got = reduced_words(n).len();
        let want = brute_force_reduced(n);
        ensure(got == want, || {
            format!("reduced_words({n}) has {got}, oracle {want}")
        })?;
    }
    run_prop("shift by N", 64, (any::<u64>(), -20i64..20), |(s, j)| {
        point_shift_by_n(s, j)
    })?;
    run_prop(
        "Σ1 window equivariance",
        64,
        any::<u64>(),
        sigma1_window_equivariance,
    )?;
    run_prop(
        "Ξ window equivariance",
        64,
        (any::<u64>(), 1u8..4),
        |(s, i)| xi_window_equivariance(s, i),
    )?;
    Ok("field, determinant, intersect, wedge, reduced words, shift, equivariance".into())
}

fn xi_report() -> Outcome {
    let r = xi_pluecker_report(DEFAULT_POINTS, 0, fp()).map_err(|e| e.to_string())?;
    let expected: Vec<String> = XI_SEED
        .iter()
        .map(|i| PlueckerIndex::new(Family::T44, i).unwrap().to_string())
        .collect();
    let got: Vec<String> = r
        .braid_comparison
        .iter()
        .map(|c| c.pluecker.clone())
        .collect();
    ensure(got == expected, || format!("table covers {got:?}"))?;
    ensure(r.step_check_failures == 0, || {
        format!("{} audited steps failed", r.step_check_failures)
    })?;
    println!("    Ξ1Ξ2Ξ1 vs Ξ2Ξ1Ξ2 on {} points:", r.n_points);
    for c in &r.braid_comparison {
        println!(
            "      {}  {:>2}/{}  {}",
            c.pluecker, c.equal_points, c.total, c.verdict
        );
    }
    Ok(format!(
        "{} points, {} audited steps",
        r.n_points, r.steps_checked
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "loop certification",
            Duration::from_secs(1),
            loop_certification,
        ),
        (
            "pullback identities",
            Duration::from_secs(10),
            pullback_identities,
        ),
        (
            "Ξ structural postconditions",
            Duration::from_secs(30),
            xi_structure,
        ),
        ("faithfulness sweep", Duration::from_secs(300), faithfulness),
        ("δ² loop nontriviality", Duration::from_secs(1), kalman_loop),
        (
            "Bott–Samelson round trip",
            Duration::from_secs(10),
            bott_samelson,
        ),
        ("property suites", Duration::from_secs(60), property_suites),
        ("Ξ Plücker report", Duration::from_secs(60), xi_report),
    ];
    let mut failures = 0;
    for (n, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if elapsed <= *limit => "PASS",
            _ => "FAIL",
        };
        let detail = match outcome {
            Ok(msg) if elapsed <= *limit => msg,
            Ok(msg) => format!("{msg}; too slow (limit {limit:?})"),
            Err(msg) => msg,
        };
        if verdict == "FAIL" {
            failures += 1;
        }
        println!(
            "criterion {} {name}: {verdict} ({:.2?}) {detail}",
            n + 1,
            elapsed
        );
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
