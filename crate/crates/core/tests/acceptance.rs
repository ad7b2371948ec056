//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};

use bicolored::arith::decimal_render;
use bicolored::asymptotic::{tail_ratio, verify_h};
use bicolored::bounds::{ao_bounds, growth_ratio, ratio_table, theorem_bound};
use bicolored::enumeration::{count_exact, count_naive, free_fraction, free_fraction_lower_bound, orbit_census};
use bicolored::verify::{run_suite, Suite, VerifyConfig};
use bicolored::{Limits, QSqrt2};

/// Reference ratios, rows p = 3, 6, …, 48 and columns k = 0..=4, as printed (six places,
/// trailing zeros dropped).
const REFERENCE: [[&str; 5]; 16] = [
    ["0.67853", "0.448352", "0.281421", "0.164794", "0.089167"],
    ["0.236554", "0.278629", "0.321008", "0.355492", "0.37623"],
    ["0.401765", "0.581412", "0.769003", "0.943255", "1.089729"],
    ["0.737444", "0.964918", "1.174011", "1.352241", "1.495579"],
    ["1.13395", "1.332052", "1.495158", "1.62365", "1.721639"],
    ["1.488057", "1.620956", "1.722684", "1.798768", "1.854731"],
    ["1.731173", "1.805571", "1.860243", "1.899968", "1.928601"],
    ["1.869913", "1.907043", "1.933771", "1.95291", "1.966564"],
    ["1.940359", "1.957629", "1.969938", "1.978691", "1.984905"],
    ["1.973633", "1.981317", "1.98677", "1.990635", "1.993373"],
    ["1.98864", "1.99196", "1.994311", "1.995976", "1.997154"],
    ["1.995199", "1.996604", "1.997598", "1.998301", "1.998799"],
    ["1.998002", "1.998587", "1.999001", "1.999293", "1.9995"],
    ["1.999179", "1.999419", "1.999589", "1.99971", "1.999795"],
    ["1.999666", "1.999764", "1.999833", "1.999882", "1.999917"],
    ["1.999866", "1.999905", "1.999933", "1.999952", "1.999966"],
];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// A fixed-point decimal string as an integer count of 10^-6 units.
fn micro_units(s: &str) -> i64 {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let frac = format!("{frac:0<6}");
    assert!(frac.len() == 6, "more than six places in {s}");
    int.parse::<i64>().unwrap() * 1_000_000 + frac.parse::<i64>().unwrap()
}

fn golden_table(l: &Limits) -> Outcome {
    let ps: Vec<usize> = (3..=48).step_by(3).collect();
    let ks: Vec<usize> = (0..=4).collect();
    let table = match ratio_table(&ps, &ks, 6, l) {
        Ok(t) => t,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mut off = Vec::new();
    for (i, &p) in ps.iter().enumerate() {
        for &k in &ks {
            let got = &table.cell(p, k).unwrap().decimal;
            let want = REFERENCE[i][k];
            if (micro_units(got) - micro_units(want)).abs() > 1 {
                off.push(format!("(p={p},k={k}) {got} vs {want}"));
            }
        }
    }
    outcome(
        off.is_empty(),
        format!("{}/80 entries within 1e-6; mismatches: {off:?}", 80 - off.len()),
    )
}

fn oracle_equivalence(l: &Limits) -> Outcome {
    let mut bad = Vec::new();
    let mut naive_cases = 0;
    for p in 0..=6 {
        for q in 0..=6 {
            naive_cases += 1;
            if count_exact(p, q, l).ok() != count_naive(p, q, l).ok() {
                bad.push(format!("naive ({p},{q})"));
            }
        }
    }
    let mut census_cases = 0;
    for p in 0..=16usize {
        for q in 0..=16usize {
            if p * q > 16 {
                continue;
            }
            census_cases += 1;
            let census = orbit_census(p, q, l).map(|c| c.orbit_count);
            if count_exact(p, q, l).ok() != census.ok() {
                bad.push(format!("census ({p},{q})"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{naive_cases} naive pairs, {census_cases} census pairs; disagreements: {bad:?}"),
    )
}

fn bound_chain(l: &Limits) -> Outcome {
    let mut sandwich_fail = Vec::new();
    let mut theorem_fail = Vec::new();
    for p in 1..=20 {
        for q in 1..=20 {
            let Ok(count) = count_exact(p, q, l) else {
                theorem_fail.push((p, q));
                continue;
            };
            let c = BigRational::from_integer(count.clone().into());
            let (lo, hi) = ao_bounds(p, q, l).unwrap();
            if !(lo <= c && c <= hi) {
                sandwich_fail.push((p, q));
            }
            let tb = theorem_bound(p, q).unwrap();
            if QSqrt2::from(c) > tb {
                theorem_fail.push((p, q));
            }
        }
    }
    let first: Vec<_> = sandwich_fail.iter().take(5).collect();
    let all_p_lt_q = sandwich_fail.iter().all(|&(p, q)| p < q);
    outcome(
        sandwich_fail.is_empty() && theorem_fail.is_empty(),
        format!(
            "binomial sandwich fails at {}/400 pairs (first {first:?}; all with p < q: {all_p_lt_q}); \
             count <= character bound fails at {}/400 pairs",
            sandwich_fail.len(),
            theorem_fail.len()
        ),
    )
}

fn suite_properties(suite: Suite, names: &[&str], cfg: &VerifyConfig) -> Vec<(String, bool, u64)> {
    run_suite(suite, cfg)
        .into_iter()
        .filter(|r| names.contains(&r.name))
        .map(|r| (format!("{}/{}", r.suite, r.name), r.passed, r.cases))
        .collect()
}

fn summarize(results: Vec<(String, bool, u64)>, expected: usize) -> Outcome {
    let failed: Vec<&str> = results.iter().filter(|r| !r.1).map(|r| r.0.as_str()).collect();
    let cases: u64 = results.iter().map(|r| r.2).sum();
    outcome(
        failed.is_empty() && results.len() == expected,
        format!("{} properties, {cases} cases; failed: {failed:?}", results.len()),
    )
}

fn cycle_form_suites(cfg: &VerifyConfig) -> Outcome {
    let mut r = suite_properties(
        Suite::CycleForm,
        &[
            "radical",
            "decomposition_classes",
            "cycle_bound_gap",
            "harmonic_cycle_gap",
            "prime_cycle_bracket",
        ],
        cfg,
    );
    r.extend(suite_properties(Suite::Asymptotics, &["rising_factorial_am_gm"], cfg));
    summarize(r, 6)
}

fn character_suite(cfg: &VerifyConfig) -> Outcome {
    let r = suite_properties(
        Suite::Characters,
        &[
            "identity_value",
            "disjoint_multiplicativity",
            "conjugation_invariance",
            "cyclicity",
            "averaging_formula",
            "twisted_product_oracle",
            "stirling_rising_identity",
        ],
        cfg,
    );
    summarize(r, 7)
}

fn asymptotics() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (k, h) in [(0, 12), (1, 10), (2, 7), (3, 1)] {
        let scan = verify_h(k, 64, 512);
        let holds = scan.holds_from(h);
        ok &= holds;
        notes.push(format!("H_{k}={h}: {holds} (least {})", scan.minimal_cutoff()));
    }
    let ratios: Vec<f64> = (5..=60).map(|h| tail_ratio(h, 0)).collect();
    let decreasing = ratios.windows(2).all(|w| w[1] < w[0]);
    ok &= decreasing;
    notes.push(format!(
        "tail ratio decreasing over h=5..60: {decreasing} ({:.6} -> {:.6})",
        ratios[0],
        ratios[ratios.len() - 1]
    ));
    outcome(ok, notes.join("; "))
}

fn free_orbits(l: &Limits) -> Outcome {
    let mut bad = Vec::new();
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let mut expect = vec![((2, 2), r(1, 2)), ((1, 1), r(1, 1))];
    expect.extend((3..=6).map(|p| ((p, 1), r(0, 1))));
    for ((p, q), want) in expect {
        if free_fraction(p, q, l).ok() != Some(want.clone()) {
            bad.push(format!("f({p},{q}) != {want}"));
        }
    }
    for p in 0..=16usize {
        for q in 0..=16usize {
            if p * q > 16 {
                continue;
            }
            match (free_fraction(p, q, l), free_fraction_lower_bound(p, q, l)) {
                (Ok(f), Ok(lower)) if f >= lower => {}
                _ => bad.push(format!("lower bound ({p},{q})")),
            }
        }
    }
    let mut prev: Option<BigRational> = None;
    let mut last = BigRational::zero();
    for p in [10, 14, 18, 22, 26] {
        let g: BigRational = match growth_ratio(p, 0, l) {
            Ok(g) => g,
            Err(e) => {
                bad.push(format!("growth p={p}: {e}"));
                continue;
            }
        };
        if g < BigRational::one() || prev.as_ref().is_some_and(|prev| g >= *prev) {
            bad.push(format!("growth trend at p={p}"));
        }
        prev = Some(g.clone());
        last = g;
    }
    if last >= r(11, 10) {
        bad.push("growth ratio at p=26 not below 1.1".into());
    }
    let shown = decimal_render(&QSqrt2::rational(last), 6);
    outcome(
        bad.is_empty(),
        format!("growth ratio at p=26 is {shown}; failures: {bad:?}"),
    )
}

fn main() -> ExitCode {
    let limits = Limits::default();
    let cfg = VerifyConfig::new(0);
    type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(u32, &str, u64, Check)> = vec![
        (1, "golden ratio table", 60, Box::new(|| golden_table(&limits))),
        (2, "oracle equivalence", 120, Box::new(|| oracle_equivalence(&limits))),
        (3, "bound chain", 60, Box::new(|| bound_chain(&limits))),
        (4, "cycle-form and rising-factorial properties", 600, Box::new(|| cycle_form_suites(&cfg))),
        (5, "character suite", 600, Box::new(|| character_suite(&cfg))),
        (6, "asymptotic cutoffs", 30, Box::new(asymptotics)),
        (7, "free orbits and growth", 600, Box::new(|| free_orbits(&limits))),
    ];
    let mut failures = 0;
    for (n, name, budget, check) in criteria {
        let start = Instant::now();
        let out = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let passed = out.passed && in_time;
        if !passed {
            failures += 1;
        }
        println!(
            "{} criterion {n} ({name}): {} [{:.2}s, budget {budget}s]",
            if passed { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    if failures == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criterion(s) failed");
        ExitCode::FAILURE
    }
}
