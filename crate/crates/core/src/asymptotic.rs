//! Log-domain evaluation of the dominating sequence `a_{h,p}` behind the
//! asymptotic growth bound, and the scan for its cutoff `H_k`.
//!
//! For `0 ≤ h < p`,
//! `a_{h,p} = C(p,h)·((p−1)/2·2^{(p+k)/2})^{p−h}·(2^h)^{rising p+k} / 2^{p(p+k)}`,
//! and `a_{h,p} = 0` otherwise. Magnitudes reach `2^{±10^5}`, so everything is
//! carried as `log₂`.

use std::f64::consts::LN_2;

/// Relative tolerance used when deciding that one term dominates another.
pub const REL_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticTerm {
    pub h: i64,
    pub p: u64,
    pub k: u64,
    /// `log₂ a_{h,p}`; `-∞` for a zero term.
    pub log2_value: f64,
}

impl AsymptoticTerm {
    pub fn is_zero(&self) -> bool {
        self.log2_value == f64::NEG_INFINITY
    }

    pub fn value(&self) -> f64 {
        self.log2_value.exp2()
    }
}

/// `log₂ (2^h)^{rising m} = h·m + Σ_{i<m} log₂(1 + i·2^{-h})`.
fn log2_rising_pow2(h: u64, m: u64) -> f64 {
    let scale = (-(h as f64)).exp2();
    let tail: f64 = (0..m).map(|i| (i as f64 * scale).ln_1p()).sum();
    (h * m) as f64 + tail / LN_2
}

fn log2_binomial(n: u64, k: u64) -> f64 {
    let k = k.min(n - k);
    (0..k)
        .map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln())
        .sum::<f64>()
        / LN_2
}

pub fn a_term(h: i64, p: u64, k: u64) -> AsymptoticTerm {
    let zero = AsymptoticTerm {
        h,
        p,
        k,
        log2_value: f64::NEG_INFINITY,
    };
    if h < 0 || h as u64 >= p || p == 1 {
        // p = 1 forces h = 0 and a vanishing factor (p−1)/2.
        return zero;
    }
    let hu = h as u64;
    let m = p + k;
    let log2_base = ((p - 1) as f64 / 2.0).log2() + m as f64 / 2.0;
    let log2_value = log2_binomial(p, hu) + (p - hu) as f64 * log2_base + log2_rising_pow2(hu, m)
        - (p * m) as f64;
    AsymptoticTerm {
        h,
        p,
        k,
        log2_value,
    }
}

/// `log₂ a_{h,h+1}` from the closed form `(h+1)h/2 · 2^{(h+1+k)(−h−1/2)} · (2^h)^{rising h+1+k}`.
pub fn first_term_closed_form(h: u64, k: u64) -> f64 {
    let m = h + 1 + k;
    (((h + 1) * h) as f64 / 2.0).log2() + m as f64 * (-(h as f64) - 0.5) + log2_rising_pow2(h, m)
}

/// `a_{h+1,h+2} / a_{h,h+1}`.
pub fn tail_ratio(h: u64, k: u64) -> f64 {
    tail_ratio_log2(h, k).exp2()
}

pub fn tail_ratio_log2(h: u64, k: u64) -> f64 {
    let next = a_term(h as i64 + 1, h + 2, k).log2_value;
    let cur = a_term(h as i64, h + 1, k).log2_value;
    next - cur
}

/// Where the maximum of `a_{h,1}, …, a_{h,p_max}` sits for one `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct HRow {
    pub h: u64,
    pub argmax_p: u64,
    pub max_log2: f64,
    /// `log₂ a_{h,h+1}`.
    pub first_log2: f64,
    /// `first_log2` minus the largest `log₂ a_{h,p}` over `p ≠ h+1`.
    pub margin_log2: f64,
    /// The first nonzero term dominates every other term, within [`REL_TOL`].
    pub attained_at_first: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HScan {
    pub k: u64,
    pub h_max: u64,
    pub p_max: u64,
    pub rows: Vec<HRow>,
}

impl HScan {
    /// True iff every scanned `h ≥ cutoff` has its maximum at `p = h+1`.
    pub fn holds_from(&self, cutoff: u64) -> bool {
        self.rows
            .iter()
            .filter(|r| r.h >= cutoff)
            .all(|r| r.attained_at_first)
    }

    /// The least cutoff that works over the scanned range.
    pub fn minimal_cutoff(&self) -> u64 {
        self.rows
            .iter()
            .rev()
            .find(|r| !r.attained_at_first)
            .map_or(0, |r| r.h + 1)
    }

    pub fn failures(&self) -> impl Iterator<Item = &HRow> {
        self.rows.iter().filter(|r| !r.attained_at_first)
    }
}

/// Scans `h = 0..=h_max`, `p = 1..=p_max` for the position of the largest `a_{h,p}`.
pub fn verify_h(k: u64, h_max: u64, p_max: u64) -> HScan {
    let slack = (1.0 + REL_TOL).log2();
    let rows = (0..=h_max)
        .map(|h| {
            let first = h + 1;
            let mut best = (0u64, f64::NEG_INFINITY);
            let mut others = f64::NEG_INFINITY;
            for p in 1..=p_max {
                let v = a_term(h as i64, p, k).log2_value;
                if v > best.1 {
                    best = (p, v);
                }
                if p != first {
                    others = others.max(v);
                }
            }
            let first_log2 = if first <= p_max {
                a_term(h as i64, first, k).log2_value
            } else {
                f64::NEG_INFINITY
            };
            let margin_log2 = first_log2 - others;
            HRow {
                h,
                argmax_p: best.0,
                max_log2: best.1,
                first_log2,
                margin_log2,
                attained_at_first: first_log2.is_finite() && margin_log2 >= -slack,
            }
        })
        .collect();
    HScan {
        k,
        h_max,
        p_max,
        rows,
    }
}
