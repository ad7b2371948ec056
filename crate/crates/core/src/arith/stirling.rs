use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

type Row = Arc<Vec<BigUint>>;

// Rows 0..len of the signless Stirling numbers of the first kind, grown on demand.
static CACHE: OnceLock<RwLock<Vec<Row>>> = OnceLock::new();

fn cache() -> &'static RwLock<Vec<Row>> {
    CACHE.get_or_init(|| RwLock::new(vec![Arc::new(vec![BigUint::one()])]))
}

/// Row `n` of `c(n, k)` for `k = 0..=n`, from the shared memo table.
pub fn stirling_row(n: usize) -> Row {
    if let Some(row) = cache().read().unwrap().get(n) {
        return row.clone();
    }
    let mut rows = cache().write().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let prev = rows[m - 1].clone();
        rows.push(Arc::new(next_row(&prev, m)));
    }
    rows[n].clone()
}

/// `c(n, k) = c(n−1, k−1) + (n−1)·c(n−1, k)`.
fn next_row(prev: &[BigUint], n: usize) -> Vec<BigUint> {
    (0..=n)
        .map(|k| {
            let left = if k == 0 { BigUint::zero() } else { prev[k - 1].clone() };
            let right = prev.get(k).map_or_else(BigUint::zero, |c| c * (n - 1));
            left + right
        })
        .collect()
}

/// Signless Stirling number of the first kind: permutations of `n` points with exactly `k` cycles.
pub fn stirling_first(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    stirling_row(n)[k].clone()
}

/// An owned, editable table of `c(n, k)` for `n ≤ max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(max: usize) -> Self {
        StirlingTable {
            rows: (0..=max).map(|n| stirling_row(n).as_ref().clone()).collect(),
        }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    /// Overwrites one entry. Used to run the verification suites against a corrupted table.
    pub fn set(&mut self, n: usize, k: usize, value: BigUint) {
        self.rows[n][k] = value;
    }
}
