/// Resource caps for the exact computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `p` or `q` accepted by the class-sum count and the bounds.
    pub max_degree: usize,
    /// Largest `p(p)·p(q)` (pairs of partitions) the class-sum count may visit.
    pub max_class_pairs: u128,
    /// Largest `p·q` for the subset census; the census visits `2^{pq}` subsets.
    pub max_pq: usize,
    /// Largest `p` or `q` for the literal sum over `Σ_p × Σ_q`.
    pub max_naive_degree: usize,
}

/// The census stores subsets as `u32` bit masks.
pub const HARD_MAX_PQ: usize = 31;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 64,
            max_class_pairs: 50_000_000,
            max_pq: 20,
            max_naive_degree: 7,
        }
    }
}
