//! Exact counts of unlabelled bicolored graphs and the free-orbit census.
//!
//! `|B_u(p,q)|` is the number of orbits of `Σ_p × Σ_q` on subsets of the
//! `p × q` grid. By Burnside it equals `(1/p!q!) Σ_{α,β} 2^{⟨α,β⟩}`; since the
//! summand is a class function in both slots, the production path sums over
//! pairs of partitions weighted by class sizes.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::factorial;
use crate::cycle_form::{cycle_form, cycle_form_weights};
use crate::error::{Error, Result};
use crate::limits::{Limits, HARD_MAX_PQ};
use crate::perm::{partition_number, partitions, Permutation};

fn check_degree(p: usize, q: usize, cap: usize, what: &'static str) -> Result<()> {
    let m = p.max(q);
    if m > cap {
        return Err(Error::CapExceeded {
            what,
            value: m as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (quot, rem) = num.div_rem(den);
    assert!(rem.is_zero(), "orbit count is not an integer");
    quot
}

/// `|B_u(p,q)|` by the class-sum over partition pairs.
pub fn count_exact(p: usize, q: usize, limits: &Limits) -> Result<BigUint> {
    check_degree(p, q, limits.max_degree, "max(p, q)")?;
    if p == 0 || q == 0 {
        return Ok(BigUint::one());
    }
    let pairs = partition_number(p) * partition_number(q);
    if pairs > limits.max_class_pairs {
        return Err(Error::CapExceeded {
            what: "partition pairs",
            value: pairs,
            cap: limits.max_class_pairs,
        });
    }

    let betas: Vec<(Vec<(usize, usize)>, BigUint)> = partitions(q)
        .map(|t| (t.iter().collect(), t.class_size()))
        .collect();
    let max_exp = p * q;

    let total: BigUint = partitions(p)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|alpha| {
            let weights = cycle_form_weights(alpha, q);
            // Group the β-classes by exponent before shifting.
            let mut by_exp = vec![BigUint::zero(); max_exp + 1];
            for (counts, size) in &betas {
                let e: u64 = counts.iter().map(|&(s, c)| weights[s - 1] * c as u64).sum();
                by_exp[e as usize] += size;
            }
            let inner = by_exp
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(BigUint::zero(), |acc, (e, c)| acc + (c << e));
            alpha.class_size() * inner
        })
        .sum();

    Ok(exact_div(total, &(factorial(p as u64) * factorial(q as u64))))
}

/// `|B_u(p,q)|` by the literal double sum over `Σ_p × Σ_q`.
pub fn count_naive(p: usize, q: usize, limits: &Limits) -> Result<BigUint> {
    check_degree(p, q, limits.max_naive_degree, "max(p, q) for the naive sum")?;
    let alphas: Vec<_> = Permutation::all(p).map(|a| a.cycle_type()).collect();
    let betas: Vec<_> = Permutation::all(q).map(|b| b.cycle_type()).collect();
    let mut by_exp = vec![0u64; p * q + 1];
    for a in &alphas {
        for b in &betas {
            by_exp[cycle_form(a, b) as usize] += 1;
        }
    }
    let total = by_exp
        .into_iter()
        .enumerate()
        .fold(BigUint::zero(), |acc, (e, c)| acc + (BigUint::from(c) << e));
    Ok(exact_div(total, &(factorial(p as u64) * factorial(q as u64))))
}

/// Orbit statistics of `Σ_p × Σ_q` acting on subsets of the `p × q` grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCensus {
    pub p: usize,
    pub q: usize,
    pub orbit_count: BigUint,
    /// Elements whose stabilizer is trivial, i.e. that lie in orbits of size `p!q!`.
    pub free_element_count: BigUint,
    /// `2^{pq}`.
    pub total: BigUint,
    /// Orbit size ↦ number of orbits of that size.
    pub orbit_sizes: BTreeMap<u128, u64>,
}

impl OrbitCensus {
    pub fn free_orbit_count(&self) -> u64 {
        let group = group_order(self.p, self.q);
        self.orbit_sizes.get(&group).copied().unwrap_or(0)
    }
}

fn group_order(p: usize, q: usize) -> u128 {
    let f = |n: usize| (1..=n as u128).product::<u128>();
    f(p) * f(q)
}

/// A permutation of the `pq` bit positions, applied a byte at a time.
pub(crate) struct BitAction {
    tables: Vec<[u32; 256]>,
}

impl BitAction {
    pub(crate) fn new(dest: &[usize]) -> Self {
        let tables = dest
            .chunks(8)
            .map(|chunk| {
                let mut t = [0u32; 256];
                for (byte, slot) in t.iter_mut().enumerate() {
                    *slot = chunk
                        .iter()
                        .enumerate()
                        .filter(|(bit, _)| byte >> bit & 1 == 1)
                        .fold(0, |acc, (_, &d)| acc | 1 << d);
                }
                t
            })
            .collect();
        BitAction { tables }
    }

    #[inline]
    pub(crate) fn apply(&self, x: u32) -> u32 {
        self.tables
            .iter()
            .enumerate()
            .fold(0, |acc, (i, t)| acc | t[(x >> (8 * i) & 0xff) as usize])
    }
}

/// Bit-position map of `(π, σ) ∈ Σ_p × Σ_q` on the row-major grid: cell `(i, j)` goes to `(π(i), σ(j))`.
pub(crate) fn grid_action(rows: &Permutation, cols: &Permutation) -> Vec<usize> {
    let (p, q) = (rows.degree(), cols.degree());
    let mut dest = vec![0; p * q];
    for i in 0..p {
        for j in 0..q {
            dest[i * q + j] = rows.images0()[i] * q + cols.images0()[j];
        }
    }
    dest
}

fn generators(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return Vec::new();
    }
    let swap = Permutation::parse_cycles(n, "(1 2)").unwrap();
    let cycle = crate::perm::make_cycle(n, n).unwrap();
    if n == 2 {
        vec![swap]
    } else {
        vec![swap, cycle]
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let gp = parent[parent[x as usize] as usize];
        parent[x as usize] = gp;
        x = gp;
    }
    x
}

/// Exact orbit census by merging each subset with its images under group generators.
pub fn orbit_census(p: usize, q: usize, limits: &Limits) -> Result<OrbitCensus> {
    let pq = p * q;
    let cap = limits.max_pq.min(HARD_MAX_PQ);
    if pq > cap {
        return Err(Error::CapExceeded {
            what: "p*q for the orbit census",
            value: pq as u128,
            cap: cap as u128,
        });
    }
    let n_elems: u64 = 1 << pq;
    let mut actions = Vec::new();
    for g in generators(p) {
        actions.push(BitAction::new(&grid_action(&g, &Permutation::identity(q))));
    }
    for g in generators(q) {
        actions.push(BitAction::new(&grid_action(&Permutation::identity(p), &g)));
    }

    let mut parent: Vec<u32> = (0..n_elems as u32).collect();
    let mut size = vec![1u32; n_elems as usize];
    for x in 0..n_elems as u32 {
        for act in &actions {
            let y = act.apply(x);
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                let (big, small) = if size[rx as usize] >= size[ry as usize] { (rx, ry) } else { (ry, rx) };
                parent[small as usize] = big;
                size[big as usize] += size[small as usize];
            }
        }
    }

    let group = group_order(p, q);
    let mut orbit_sizes = BTreeMap::new();
    let mut orbits = 0u64;
    let mut free = 0u64;
    for x in 0..n_elems as u32 {
        if parent[x as usize] == x {
            let s = size[x as usize] as u128;
            orbits += 1;
            *orbit_sizes.entry(s).or_insert(0) += 1;
            if s == group {
                free += s as u64;
            }
        }
    }
    Ok(OrbitCensus {
        p,
        q,
        orbit_count: orbits.into(),
        free_element_count: free.into(),
        total: BigUint::one() << pq,
        orbit_sizes,
    })
}

/// `f(p,q)`: the fraction of subsets lying in free orbits.
pub fn free_fraction(p: usize, q: usize, limits: &Limits) -> Result<BigRational> {
    let c = orbit_census(p, q, limits)?;
    Ok(BigRational::new(c.free_element_count.into(), c.total.into()))
}

/// `max(0, 2 − p!q!·|B_u(p,q)|/2^{pq})`, a lower bound for `f(p,q)`.
pub fn free_fraction_lower_bound(p: usize, q: usize, limits: &Limits) -> Result<BigRational> {
    let raw = free_fraction_lower_bound_raw(p, q, limits)?;
    Ok(raw.max(BigRational::zero()))
}

/// The unclamped value `2 − p!q!·|B_u(p,q)|/2^{pq}`.
pub fn free_fraction_lower_bound_raw(p: usize, q: usize, limits: &Limits) -> Result<BigRational> {
    let count = count_exact(p, q, limits)?;
    let num = factorial(p as u64) * factorial(q as u64) * count;
    let ratio = BigRational::new(num.into(), (BigUint::one() << (p * q)).into());
    Ok(BigRational::from_integer(2.into()) - ratio)
}
