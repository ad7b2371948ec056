//! Upper and lower bounds for `|B_u(p,q)|` and the comparison table.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{
    binomial, decimal_render, factorial, pow2, stirling_row, HalfInteger, QSqrt2, StirlingTable,
};
use crate::dirichlet::twisted_product;
use crate::enumeration::count_exact;
use crate::error::{Error, Result};
use crate::limits::Limits;

fn require_positive(p: usize, q: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument(format!(
            "bounds need p, q >= 1 (got p={p}, q={q})"
        )));
    }
    Ok(())
}

/// `2^{pq/2}·((χ_{1/2}, χ_{2^{q/2}}))`, an upper bound for `|B_u(p,q)|`.
///
/// Expanded, this is `(1/p!q!) Σ_{k,ℓ} c(p,k) c(q,ℓ) √2^{2kℓ + (p−k)q}`. The parity
/// of the exponent depends only on `k`, so each `k` contributes a single integer
/// to either the rational part or the `√2` part.
pub fn theorem_bound(p: usize, q: usize) -> Result<QSqrt2> {
    require_positive(p, q)?;
    Ok(theorem_bound_from_rows(&stirling_row(p), &stirling_row(q)))
}

/// [`theorem_bound`] with Stirling numbers taken from `table`.
pub fn theorem_bound_with(table: &StirlingTable, p: usize, q: usize) -> Result<QSqrt2> {
    require_positive(p, q)?;
    if p.max(q) > table.max_n() {
        return Err(Error::CapExceeded {
            what: "Stirling table size",
            value: p.max(q) as u128,
            cap: table.max_n() as u128,
        });
    }
    Ok(theorem_bound_from_rows(table.row(p), table.row(q)))
}

fn theorem_bound_from_rows(row_p: &[BigUint], row_q: &[BigUint]) -> QSqrt2 {
    let (p, q) = (row_p.len() - 1, row_q.len() - 1);
    let mut rational = BigUint::zero();
    let mut irrational = BigUint::zero();
    for (k, c_pk) in row_p.iter().enumerate().skip(1) {
        let inner = (1..=q).fold(BigUint::zero(), |acc, l| acc + (&row_q[l] << (k * l)));
        let half_exp = (p - k) * q;
        let term = (c_pk * inner) << (half_exp / 2);
        if half_exp % 2 == 0 {
            rational += term;
        } else {
            irrational += term;
        }
    }
    let denom = BigInt::from(factorial(p as u64) * factorial(q as u64));
    QSqrt2::new(
        BigRational::new(rational.into(), denom.clone()),
        BigRational::new(irrational.into(), denom),
    )
}

/// [`theorem_bound`] through the general twisted product of characters.
pub fn theorem_bound_via_characters(p: usize, q: usize) -> Result<QSqrt2> {
    require_positive(p, q)?;
    let half = QSqrt2::ratio(1, 2);
    let z_prime = pow2(&HalfInteger::halves(q as i64));
    let tp = twisted_product(p, &half, q, &z_prime)?;
    Ok(pow2(&HalfInteger::halves((p * q) as i64)) * tp)
}

/// `(lower, upper) = (C(p+2^q−1, p)/q!, 2·C(p+2^q−1, p)/q!)`.
pub fn ao_bounds(p: usize, q: usize, limits: &Limits) -> Result<(BigRational, BigRational)> {
    require_positive(p, q)?;
    if q > limits.max_degree {
        return Err(Error::CapExceeded {
            what: "q for 2^q",
            value: q as u128,
            cap: limits.max_degree as u128,
        });
    }
    let n = BigUint::from(p) + (BigUint::one() << q) - 1u32;
    let lower = BigRational::new(binomial(&n, p as u64).into(), factorial(q as u64).into());
    let upper = &lower * BigRational::from_integer(2.into());
    Ok((lower, upper))
}

/// Both bounds for one `(p, q)`, and the exact count when it is within limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub p: usize,
    pub q: usize,
    pub theorem_bound: QSqrt2,
    pub ao_lower: BigRational,
    pub ao_upper: BigRational,
    pub exact: Option<BigUint>,
}

impl BoundReport {
    pub fn new(p: usize, q: usize, limits: &Limits) -> Result<Self> {
        let theorem_bound = theorem_bound(p, q)?;
        let (ao_lower, ao_upper) = ao_bounds(p, q, limits)?;
        let exact = match count_exact(p, q, limits) {
            Ok(c) => Some(c),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(BoundReport {
            p,
            q,
            theorem_bound,
            ao_lower,
            ao_upper,
            exact,
        })
    }

    pub fn ao_sandwich_holds(&self) -> Option<bool> {
        let c = BigRational::from_integer(self.exact.clone()?.into());
        Some(self.ao_lower <= c && c <= self.ao_upper)
    }

    pub fn theorem_bound_holds(&self) -> Option<bool> {
        let c = QSqrt2::from(BigInt::from(self.exact.clone()?));
        Some(c <= self.theorem_bound)
    }
}

/// `AO_upper(p, p+k) / theorem_bound(p, p+k)`: how much the character bound improves on
/// the binomial upper bound. Tends to 2 along each fixed `k`.
pub fn bound_ratio(p: usize, k: usize, limits: &Limits) -> Result<QSqrt2> {
    let q = p + k;
    let (_, upper) = ao_bounds(p, q, limits)?;
    let tb = theorem_bound(p, q)?;
    Ok(QSqrt2::from(upper) * tb.inv()?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioCell {
    pub p: usize,
    pub k: usize,
    pub exact: QSqrt2,
    pub decimal: String,
}

/// The grid of [`bound_ratio`] values, rows indexed by `p`, columns by `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioTable {
    pub p_values: Vec<usize>,
    pub k_values: Vec<usize>,
    pub places: u32,
    pub rows: Vec<Vec<RatioCell>>,
}

impl RatioTable {
    pub fn cell(&self, p: usize, k: usize) -> Option<&RatioCell> {
        let i = self.p_values.iter().position(|&x| x == p)?;
        let j = self.k_values.iter().position(|&x| x == k)?;
        Some(&self.rows[i][j])
    }
}

pub fn ratio_table(
    p_values: &[usize],
    k_values: &[usize],
    places: u32,
    limits: &Limits,
) -> Result<RatioTable> {
    let cells: Vec<(usize, usize)> = p_values
        .iter()
        .flat_map(|&p| k_values.iter().map(move |&k| (p, k)))
        .collect();
    let computed: Vec<RatioCell> = cells
        .par_iter()
        .map(|&(p, k)| {
            let exact = bound_ratio(p, k, limits)?;
            let decimal = decimal_render(&exact, places);
            Ok(RatioCell { p, k, exact, decimal })
        })
        .collect::<Result<_>>()?;
    let rows = computed
        .chunks(k_values.len().max(1))
        .map(<[RatioCell]>::to_vec)
        .collect();
    Ok(RatioTable {
        p_values: p_values.to_vec(),
        k_values: k_values.to_vec(),
        places,
        rows: if k_values.is_empty() { vec![Vec::new(); p_values.len()] } else { rows },
    })
}

/// `|B_u(p,p+k)|·p!(p+k)!/2^{p(p+k)}`.
pub fn growth_ratio(p: usize, k: usize, limits: &Limits) -> Result<BigRational> {
    let q = p + k;
    let count = count_exact(p, q, limits)?;
    let num = count * factorial(p as u64) * factorial(q as u64);
    Ok(BigRational::new(num.into(), (BigUint::one() << (p * q)).into()))
}

/// `(2^p)^{rising p+k} / (2^p)^{p+k}`, which tends to 1 as `p` grows.
pub fn leading_term_ratio(p: usize, k: usize) -> BigRational {
    let base = BigUint::one() << p;
    let m = p + k;
    let num = (0..m).fold(BigUint::one(), |acc, i| acc * (&base + i));
    BigRational::new(num.into(), (BigUint::one() << (p * m)).into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QSqrt2 {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn theorem_bound_examples() {
        assert_eq!(theorem_bound(1, 1).unwrap(), q("2"));
        assert_eq!(theorem_bound(2, 2).unwrap(), q("8"));
        assert!(theorem_bound(0, 2).is_err());
    }

    #[test]
    fn theorem_bound_two_routes_agree() {
        for p in 1..=7 {
            for qq in 1..=7 {
                assert_eq!(
                    theorem_bound(p, qq).unwrap(),
                    theorem_bound_via_characters(p, qq).unwrap(),
                    "({p},{qq})"
                );
            }
        }
    }

    #[test]
    fn ao_examples() {
        let l = Limits::default();
        assert_eq!(ao_bounds(2, 2, &l).unwrap(), (rat(5, 1), rat(10, 1)));
        assert_eq!(ao_bounds(1, 1, &l).unwrap(), (rat(2, 1), rat(4, 1)));
        let (lo, hi) = ao_bounds(3, 3, &l).unwrap();
        let c = rat(36, 1);
        assert!(lo <= c && c <= hi);
        assert!(ao_bounds(1, 65, &l).is_err());
    }

    #[test]
    fn report_flags() {
        let r = BoundReport::new(2, 2, &Limits::default()).unwrap();
        assert_eq!(r.exact, Some(7u32.into()));
        assert_eq!(r.ao_sandwich_holds(), Some(true));
        assert_eq!(r.theorem_bound_holds(), Some(true));
        // The binomial upper bound undercounts when p < q.
        let r = BoundReport::new(1, 3, &Limits::default()).unwrap();
        assert_eq!(r.ao_upper, rat(8, 3));
        assert_eq!(r.ao_sandwich_holds(), Some(false));
    }

    #[test]
    fn ratio_table_cells() {
        let t = ratio_table(&[3, 12], &[0, 2], 6, &Limits::default()).unwrap();
        assert_eq!(t.cell(3, 0).unwrap().decimal, "0.678530");
        assert_eq!(t.cell(12, 2).unwrap().decimal, "1.174011");
        assert_eq!(t.rows.len(), 2);
        assert!(t.cell(6, 0).is_none());
    }

    #[test]
    fn growth_ratio_small() {
        let l = Limits::default();
        assert_eq!(growth_ratio(2, 0, &l).unwrap(), rat(7, 4));
        assert_eq!(growth_ratio(1, 0, &l).unwrap(), rat(1, 1));
    }

    #[test]
    fn leading_term_ratio_decreases_to_one() {
        for k in 0..=4 {
            let mut prev: Option<BigRational> = None;
            for p in 4..=20 {
                let r = leading_term_ratio(p, k);
                assert!(r >= BigRational::one());
                if let Some(prev) = prev {
                    assert!(r < prev, "p={p} k={k}");
                }
                prev = Some(r);
            }
        }
    }
}
