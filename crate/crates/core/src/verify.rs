//! Property suites that re-check the library against independent oracles.
//!
//! Each property runs a fixed, exhaustive or seeded-random set of cases and reports
//! one [`PropertyResult`]. Stirling numbers are read from the [`StirlingTable`] in the
//! [`VerifyConfig`], so a corrupted table shows up as failures.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{factorial, pow2, rising_factorial, HalfInteger, QSqrt2, StirlingTable};
use crate::asymptotic::{self, a_term};
use crate::bounds::{self, ao_bounds, theorem_bound_via_characters, theorem_bound_with};
use crate::cycle_form::{
    bound_1a_gap, bound_5_gap, cycle_form, cycle_form_bilinear, cycle_form_via_decomposition,
    prime_cycle_bracket, GroupAlgebraElement,
};
use crate::dirichlet::{twisted_product_with, ClassFunctionTable, CyclicCharacter};
use crate::enumeration::{count_exact, count_naive, free_fraction_lower_bound, orbit_census};
use crate::error::Error;
use crate::limits::Limits;
use crate::perm::{make_cycle, partitions, CycleType, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Characters,
    CycleForm,
    Bounds,
    Asymptotics,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Characters,
        Suite::CycleForm,
        Suite::Bounds,
        Suite::Asymptotics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Characters => "characters",
            Suite::CycleForm => "cycleform",
            Suite::Bounds => "bounds",
            Suite::Asymptotics => "asymptotics",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub detail: String,
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}/{}: {}", self.suite, self.name, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub limits: Limits,
    pub stirling: StirlingTable,
}

impl VerifyConfig {
    pub fn new(seed: u64) -> Self {
        VerifyConfig {
            seed,
            limits: Limits::default(),
            stirling: StirlingTable::new(32),
        }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig::new(0)
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<PropertyResult> {
    match suite {
        Suite::Characters => characters(cfg),
        Suite::CycleForm => cycleform(cfg),
        Suite::Bounds => bounds_suite(cfg),
        Suite::Asymptotics => asymptotics(),
    }
}

pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> Vec<PropertyResult> {
    suites.iter().flat_map(|&s| run_suite(s, cfg)).collect()
}

/// Counts cases and keeps the first counterexample.
struct Tally {
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn merge(&mut self, cases: u64, failure: Option<String>) {
        self.cases += cases;
        if self.failure.is_none() {
            self.failure = failure;
        }
    }

    fn finish(self, suite: Suite, name: &'static str) -> PropertyResult {
        let passed = self.failure.is_none();
        let detail = match self.failure {
            None => "ok".to_string(),
            Some(f) => format!("counterexample {f}"),
        };
        PropertyResult {
            suite,
            name,
            passed,
            cases: self.cases,
            detail,
        }
    }
}

fn q(s: &str) -> QSqrt2 {
    s.parse().expect("literal parses")
}

fn fixed_bases() -> Vec<QSqrt2> {
    ["2", "1/2", "sqrt2", "-1", "1+1*sqrt2"].into_iter().map(q).collect()
}

fn random_base(rng: &mut ChaCha8Rng) -> QSqrt2 {
    loop {
        let a = BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into());
        let b = BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into());
        let z = QSqrt2::new(a, b);
        if !z.is_zero() {
            return z;
        }
    }
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).expect("shuffle is a permutation")
}

fn types_up_to(n: usize) -> impl Iterator<Item = CycleType> {
    (1..=n).flat_map(partitions)
}

// ---- characters ----

fn characters(cfg: &VerifyConfig) -> Vec<PropertyResult> {
    let s = Suite::Characters;
    let bases = fixed_bases();
    let mut out = Vec::new();

    let mut t = Tally::new();
    for p in 0..=6 {
        for z in &bases {
            let chi = CyclicCharacter::new(p, z.clone()).expect("nonzero base");
            let v = chi.eval(&Permutation::identity(p)).expect("same degree");
            t.check(v.is_one(), || format!("p={p} z={z}: chi(1)={v}"));
        }
    }
    out.push(t.finish(s, "identity_value"));

    let mut t = Tally::new();
    for p in 1..=6 {
        let perms: Vec<Permutation> = Permutation::all(p).collect();
        let chis: Vec<CyclicCharacter> = bases
            .iter()
            .map(|z| CyclicCharacter::new(p, z.clone()).expect("nonzero base"))
            .collect();
        for a in &perms {
            for b in &perms {
                if !a.is_disjoint(b).expect("same degree") {
                    continue;
                }
                let ab = a.compose(b).expect("same degree");
                for chi in &chis {
                    let lhs = chi.eval(&ab).expect("same degree");
                    let rhs = chi.eval(a).expect("same degree") * chi.eval(b).expect("same degree");
                    t.check(lhs == rhs, || format!("{a} * {b} with z={}", chi.base()));
                }
            }
        }
    }
    out.push(t.finish(s, "disjoint_multiplicativity"));

    let mut t = Tally::new();
    for p in 1..=6 {
        let perms: Vec<Permutation> = Permutation::all(p).collect();
        let chis: Vec<CyclicCharacter> = bases
            .iter()
            .map(|z| CyclicCharacter::new(p, z.clone()).expect("nonzero base"))
            .collect();
        // χ is evaluated once per cycle type and base; the cases then compare lookups.
        let mut values: HashMap<CycleType, Vec<QSqrt2>> = HashMap::new();
        for ty in partitions(p) {
            let v = chis.iter().map(|c| c.eval_type(&ty).expect("same degree")).collect();
            values.insert(ty, v);
        }
        let bad: Vec<(u64, Option<String>)> = perms
            .par_iter()
            .map(|sigma| {
                let own = &values[&sigma.cycle_type()];
                let mut cases = 0;
                let mut failure = None;
                for pi in &perms {
                    let conj = &values[&sigma.conjugate_by(pi).expect("same degree").cycle_type()];
                    for ((chi, v), w) in chis.iter().zip(own).zip(conj) {
                        cases += 1;
                        if failure.is_none() && v != w {
                            failure = Some(format!("sigma={sigma} pi={pi} z={}", chi.base()));
                        }
                    }
                }
                (cases, failure)
            })
            .collect();
        for (cases, failure) in bad {
            t.merge(cases, failure);
        }
    }
    out.push(t.finish(s, "conjugation_invariance"));

    let mut t = Tally::new();
    let mut rng = cfg.rng(1);
    let c123 = Permutation::parse_cycles(5, "(1 2 3)").expect("valid");
    for _ in 0..5 {
        let z = random_base(&mut rng);
        let chi = CyclicCharacter::new(5, z.clone()).expect("nonzero base");
        for other in ["(3 5)", "(4 5)"] {
            let b = Permutation::parse_cycles(5, other).expect("valid");
            let lhs = chi.eval(&c123.compose(&b).expect("same degree")).expect("same degree");
            let rhs = chi.eval(&c123).expect("same degree") * chi.eval(&b).expect("same degree");
            t.check(lhs == rhs, || format!("(1 2 3){other} with z={z}"));
        }
    }
    out.push(t.finish(s, "overlapping_cycle_products"));

    let mut t = Tally::new();
    for p in 0..=6 {
        for z in &bases {
            let chi = CyclicCharacter::new(p, z.clone()).expect("nonzero base");
            t.check(chi.to_table().is_cyclic(), || format!("p={p} z={z}"));
        }
    }
    let non_cyclic = ClassFunctionTable::new(vec![q("1"), q("2"), q("5")]).expect("z_1 = 1");
    t.check(!non_cyclic.is_cyclic(), || "(1, 2, 5) accepted as cyclic".into());
    out.push(t.finish(s, "cyclicity"));

    let mut t = Tally::new();
    for p in 1..=7 {
        let perms: Vec<Permutation> = Permutation::all(p).collect();
        for z in ["2", "1/2", "sqrt2", "-1"].map(q) {
            let chi = CyclicCharacter::new(p, z.clone()).expect("nonzero base");
            let sum = perms
                .iter()
                .fold(QSqrt2::zero(), |acc, s| acc + chi.eval(s).expect("same degree"));
            let literal = sum.div_rational(&BigRational::from_integer(factorial(p as u64).into()));
            let formula = chi.average();
            t.check(literal.as_ref() == Ok(&formula), || format!("p={p} z={z}: {formula}"));
        }
    }
    out.push(t.finish(s, "averaging_formula"));

    let mut t = Tally::new();
    let cycle_counts: Vec<Vec<usize>> = (0..=5)
        .map(|n| Permutation::all(n).map(|s| s.cycle_type().total_cycles()).collect())
        .collect();
    for p in 1..=5 {
        for qq in 1..=5 {
            let pairs = [
                (q("1/2"), pow2(&HalfInteger::halves(qq as i64))),
                (q("sqrt2"), q("-1")),
                (q("2"), q("1/3")),
            ];
            for (z, zp) in pairs {
                let fast = twisted_product_with(&cfg.stirling, p, &z, qq, &zp);
                let literal = twisted_by_permutations(&cycle_counts[p], &cycle_counts[qq], &z, &zp);
                t.check(fast.as_ref() == Ok(&literal), || {
                    format!("p={p} q={qq} z={z} z'={zp}: {fast:?} vs {literal}")
                });
            }
        }
    }
    out.push(t.finish(s, "twisted_product_oracle"));

    let mut t = Tally::new();
    for p in 1..=6 {
        for qq in 1..=6 {
            let v = twisted_product_with(&cfg.stirling, p, &QSqrt2::one(), qq, &QSqrt2::one());
            t.check(v.as_ref().is_ok_and(QSqrt2::is_one), || format!("p={p} q={qq}: {v:?}"));
        }
    }
    out.push(t.finish(s, "twisted_product_trivial"));

    let mut t = Tally::new();
    let points = [(1, 1), (2, 1), (1, 2), (-3, 1), (7, 5)]
        .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)));
    for n in 0..=30usize.min(cfg.stirling.max_n()) {
        for x in &points {
            let mut power = BigRational::one();
            let mut sum = BigRational::zero();
            for k in 0..=n {
                sum += BigRational::from_integer(cfg.stirling.get(n, k).into()) * &power;
                power *= x;
            }
            let rising = rising_factorial(x, n as u64);
            t.check(sum == rising, || format!("n={n} x={x}"));
        }
    }
    out.push(t.finish(s, "stirling_rising_identity"));

    out
}

/// `(1/p!q!) Σ_{α,β} z^{−c(α)c(β)} z′^{−c(α)}` summed over explicit permutations.
fn twisted_by_permutations(cp: &[usize], cq: &[usize], z: &QSqrt2, zp: &QSqrt2) -> QSqrt2 {
    let zi = z.inv().expect("nonzero base");
    let zpi = zp.inv().expect("nonzero base");
    let mut total = QSqrt2::zero();
    for &a in cp {
        let za = zpi.pow_u(a as u64);
        for &b in cq {
            total = total + zi.pow_u((a * b) as u64) * &za;
        }
    }
    let n = BigRational::from_integer(BigInt::from(cp.len() * cq.len()));
    total.div_rational(&n).expect("nonempty groups")
}

// ---- cycle form ----

fn cycleform(cfg: &VerifyConfig) -> Vec<PropertyResult> {
    let s = Suite::CycleForm;
    let mut out = Vec::new();

    let mut t = Tally::new();
    for a in types_up_to(6) {
        for b in types_up_to(6) {
            t.check(cycle_form(&a, &b) == cycle_form(&b, &a), || format!("{a} vs {b}"));
        }
    }
    out.push(t.finish(s, "symmetry"));

    let mut t = Tally::new();
    let mut rng = cfg.rng(2);
    for _ in 0..300 {
        let p = rng.gen_range(2..=10);
        let qq = rng.gen_range(1..=10);
        let mut points: Vec<usize> = (1..=p).collect();
        points.shuffle(&mut rng);
        let split = rng.gen_range(1..p);
        let alpha = permute_subset(&mut rng, p, &points[..split]);
        let alpha2 = permute_subset(&mut rng, p, &points[split..]);
        let beta = random_perm(&mut rng, qq);
        let x = GroupAlgebraElement::one_minus(&alpha)
            .mul(&GroupAlgebraElement::one_minus(&alpha2))
            .expect("same degree");
        let v = cycle_form_bilinear(&x, &GroupAlgebraElement::monomial(beta.clone(), 1));
        t.check(v == 0, || format!("alpha={alpha} alpha'={alpha2} beta={beta}: {v}"));
    }
    out.push(t.finish(s, "radical"));

    let mut t = Tally::new();
    for a in types_up_to(9) {
        for b in types_up_to(9) {
            let lhs = cycle_form_via_decomposition(&a, &b);
            t.check(lhs == cycle_form(&a, &b) as i64, || format!("{a} vs {b}"));
        }
    }
    out.push(t.finish(s, "decomposition_classes"));

    let mut t = Tally::new();
    let mut rng = cfg.rng(3);
    for _ in 0..500 {
        let a = random_perm(&mut rng, 6);
        let b = random_perm(&mut rng, 6).cycle_type();
        let lhs = cycle_form_via_decomposition(&a, &b);
        t.check(lhs == cycle_form(&a, &b) as i64, || format!("{a} vs {b}"));
    }
    out.push(t.finish(s, "decomposition_random"));

    let mut t = Tally::new();
    for len in [2usize, 3, 5, 7] {
        for p in len..=8 {
            let gamma = make_cycle(p, len).expect("len <= p");
            for b in types_up_to(8) {
                let v = prime_cycle_bracket(len, p, &b).expect("len <= p");
                t.check(v == cycle_form(&gamma, &b) as i64, || format!("len={len} p={p} beta={b}"));
            }
        }
    }
    out.push(t.finish(s, "prime_cycle_bracket"));

    let mut t = Tally::new();
    for len in 1..=7 {
        for b in types_up_to(9) {
            let gap = bound_1a_gap(len, 7, &b).expect("len <= 7");
            t.check(!gap.is_negative(), || format!("len={len} beta={b}: {gap}"));
        }
    }
    out.push(t.finish(s, "cycle_bound_gap"));

    let mut t = Tally::new();
    for a in types_up_to(12) {
        let gap = bound_5_gap(&a);
        t.check(!gap.is_negative(), || format!("{a}: {gap}"));
    }
    out.push(t.finish(s, "harmonic_cycle_gap"));

    out
}

fn permute_subset(rng: &mut ChaCha8Rng, n: usize, support: &[usize]) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    let mut shuffled = support.to_vec();
    shuffled.shuffle(rng);
    for (&from, &to) in support.iter().zip(&shuffled) {
        images[from - 1] = to;
    }
    Permutation::from_images(&images).expect("bijection on support")
}

// ---- bounds ----

fn bounds_suite(cfg: &VerifyConfig) -> Vec<PropertyResult> {
    let s = Suite::Bounds;
    let l = &cfg.limits;
    let mut out = Vec::new();

    let mut t = Tally::new();
    for p in 1..=8 {
        for qq in 1..=8 {
            let fast = theorem_bound_with(&cfg.stirling, p, qq);
            let via = theorem_bound_via_characters(p, qq);
            t.check(fast.is_ok() && fast == via, || format!("({p},{qq}): {fast:?} vs {via:?}"));
        }
    }
    out.push(t.finish(s, "theorem_bound_two_routes"));

    let grid: Vec<(usize, usize)> = (1..=20).flat_map(|p| (1..=20).map(move |q| (p, q))).collect();
    let counts: Vec<Result<BigUint, Error>> = grid.par_iter().map(|&(p, q)| count_exact(p, q, l)).collect();

    let mut t = Tally::new();
    for (&(p, qq), c) in grid.iter().zip(&counts) {
        let tb = theorem_bound_with(&cfg.stirling, p, qq);
        let ok = match (c, &tb) {
            (Ok(c), Ok(tb)) => QSqrt2::from(BigInt::from(c.clone())) <= *tb,
            _ => false,
        };
        t.check(ok, || format!("({p},{qq}): count {c:?} bound {tb:?}"));
    }
    out.push(t.finish(s, "count_below_theorem_bound"));

    // The binomial sandwich only holds with the larger side first.
    let mut t = Tally::new();
    for (&(p, qq), c) in grid.iter().zip(&counts) {
        if p < qq {
            continue;
        }
        let ok = match (c, ao_bounds(p, qq, l)) {
            (Ok(c), Ok((lo, hi))) => {
                let c = BigRational::from_integer(c.clone().into());
                lo <= c && c <= hi
            }
            _ => false,
        };
        t.check(ok, || format!("({p},{qq})"));
    }
    out.push(t.finish(s, "binomial_sandwich_p_ge_q"));

    let mut t = Tally::new();
    for p in 0..=12 {
        for qq in 0..p {
            let a = count_exact(p, qq, l);
            let b = count_exact(qq, p, l);
            t.check(a.is_ok() && a == b, || format!("({p},{qq})"));
        }
    }
    out.push(t.finish(s, "count_symmetry"));

    let mut t = Tally::new();
    for p in 0..=5 {
        for qq in 0..=5 {
            let a = count_exact(p, qq, l);
            let b = count_naive(p, qq, l);
            t.check(a.is_ok() && a == b, || format!("({p},{qq})"));
        }
    }
    out.push(t.finish(s, "naive_oracle"));

    let mut census_ok = Tally::new();
    let mut free_ok = Tally::new();
    for p in 0..=16usize {
        for qq in 0..=16usize {
            if p * qq > 16 {
                continue;
            }
            let census = orbit_census(p, qq, l);
            let exact = count_exact(p, qq, l);
            let ok = match (&census, &exact) {
                (Ok(c), Ok(e)) => {
                    let total: u128 = c.orbit_sizes.iter().map(|(size, n)| size * *n as u128).sum();
                    c.orbit_count == *e && total == 1u128 << (p * qq)
                }
                _ => false,
            };
            census_ok.check(ok, || format!("({p},{qq})"));
            if let (Ok(c), Ok(lower)) = (&census, free_fraction_lower_bound(p, qq, l)) {
                let f = BigRational::new(c.free_element_count.clone().into(), c.total.clone().into());
                free_ok.check(f >= lower, || format!("({p},{qq}): f={f} lower={lower}"));
            }
        }
    }
    out.push(census_ok.finish(s, "census_oracle"));
    out.push(free_ok.finish(s, "free_fraction_lower_bound"));

    let mut t = Tally::new();
    for k in 0..=4 {
        let mut prev: Option<BigRational> = None;
        for p in 4..=20 {
            let r = bounds::leading_term_ratio(p, k);
            let ok = r >= BigRational::one() && prev.as_ref().is_none_or(|prev| r < *prev);
            t.check(ok, || format!("p={p} k={k}"));
            prev = Some(r);
        }
    }
    out.push(t.finish(s, "leading_term_ratio"));

    let mut t = Tally::new();
    let ps: Vec<usize> = (3..=48).step_by(3).collect();
    let ks: Vec<usize> = (0..=4).collect();
    match bounds::ratio_table(&ps, &ks, 6, l) {
        Ok(table) => {
            let two = QSqrt2::from(2);
            for &k in &ks {
                let col: Vec<&QSqrt2> = ps
                    .iter()
                    .filter(|&&p| p >= 9)
                    .map(|&p| &table.cell(p, k).expect("in grid").exact)
                    .collect();
                for w in col.windows(2) {
                    t.check(w[0] < w[1] && *w[1] < two, || format!("k={k}: {} then {}", w[0], w[1]));
                }
            }
        }
        Err(e) => t.check(false, || e.to_string()),
    }
    out.push(t.finish(s, "ratio_table_rises_toward_two"));

    let mut t = Tally::new();
    let mut prev: Option<BigRational> = None;
    let last = BigRational::new(11.into(), 10.into());
    for p in [10, 14, 18, 22, 26] {
        match bounds::growth_ratio(p, 0, l) {
            Ok(g) => {
                let ok = g >= BigRational::one()
                    && prev.as_ref().is_none_or(|prev| g < *prev)
                    && (p != 26 || g < last);
                t.check(ok, || format!("p={p}"));
                prev = Some(g);
            }
            Err(e) => t.check(false, || format!("p={p}: {e}")),
        }
    }
    out.push(t.finish(s, "growth_ratio_trend"));

    out
}

// ---- asymptotics ----

/// `(k, H_k)` pairs the scan must confirm.
pub const STATED_CUTOFFS: [(u64, u64); 5] = [(0, 12), (1, 10), (2, 7), (3, 1), (4, 1)];

fn asymptotics() -> Vec<PropertyResult> {
    let s = Suite::Asymptotics;
    let mut out = Vec::new();

    let mut t = Tally::new();
    for (k, h) in STATED_CUTOFFS {
        let scan = asymptotic::verify_h(k, 64, 512);
        t.check(scan.holds_from(h), || {
            let bad: Vec<u64> = scan.failures().filter(|r| r.h >= h).map(|r| r.h).collect();
            format!("k={k} H={h}: fails at h={bad:?}")
        });
    }
    out.push(t.finish(s, "cutoffs"));

    let mut t = Tally::new();
    let scan = asymptotic::verify_h(0, 11, 512);
    t.check(scan.failures().any(|r| r.h >= 1), || "no h < 12 flagged for k=0".into());
    out.push(t.finish(s, "cutoff_needed"));

    let mut t = Tally::new();
    for k in 0..=4 {
        for h in 1..=60 {
            let a = a_term(h as i64, h + 1, k).log2_value;
            let b = asymptotic::first_term_closed_form(h, k);
            t.check(((a - b) / b).abs() < 1e-9, || format!("h={h} k={k}: {a} vs {b}"));
        }
    }
    out.push(t.finish(s, "first_term_closed_form"));

    let mut t = Tally::new();
    for h in 5..60 {
        let (a, b) = (asymptotic::tail_ratio(h, 0), asymptotic::tail_ratio(h + 1, 0));
        t.check(b < a, || format!("h={h}: {a} then {b}"));
    }
    out.push(t.finish(s, "tail_ratio_decreasing"));

    let mut t = Tally::new();
    for p in 0..=8u64 {
        for h in -2..=10i64 {
            let zero = h < 0 || h as u64 >= p || p == 1;
            let v = a_term(h, p, 1);
            t.check(v.is_zero() == zero, || format!("h={h} p={p}"));
        }
    }
    out.push(t.finish(s, "zero_terms"));

    let mut t = Tally::new();
    for a in 1..=20i64 {
        for b in 1..=20u64 {
            let x = BigRational::from_integer(a.into());
            let lhs = rising_factorial(&x, b);
            let mean = BigRational::new((2 * a + b as i64 - 1).into(), 2.into());
            let rhs = num_traits::pow(mean, b as usize);
            t.check(lhs <= rhs, || format!("a={a} b={b}"));
        }
    }
    out.push(t.finish(s, "rising_factorial_am_gm"));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn cycleform_suite_passes() {
        let r = run_suite(Suite::CycleForm, &VerifyConfig::default());
        assert!(r.iter().all(|p| p.passed), "{r:#?}");
    }

    #[test]
    fn asymptotics_suite_passes() {
        let r = run_suite(Suite::Asymptotics, &VerifyConfig::default());
        assert!(r.iter().all(|p| p.passed), "{r:#?}");
    }

    #[test]
    fn corrupted_stirling_table_is_caught() {
        let mut cfg = VerifyConfig::default();
        cfg.stirling.set(5, 2, 49u32.into());
        let r = run_suite(Suite::Characters, &cfg);
        let failed: Vec<&str> = r.iter().filter(|p| !p.passed).map(|p| p.name).collect();
        assert!(failed.contains(&"stirling_rising_identity"), "{failed:?}");
        assert!(failed.contains(&"twisted_product_oracle"), "{failed:?}");
    }

    #[test]
    fn same_seed_is_deterministic() {
        let a = run_suite(Suite::CycleForm, &VerifyConfig::new(7));
        let b = run_suite(Suite::CycleForm, &VerifyConfig::new(7));
        assert_eq!(a, b);
    }
}
