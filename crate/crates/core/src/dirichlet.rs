//! Cyclic Dirichlet characters on symmetric groups.
//!
//! A Dirichlet character on `Σ_p` is a class function with `χ(1) = 1` that is
//! multiplicative on disjoint permutations. It is *cyclic* when its value on
//! an `i`-cycle is `z^{i−1}` for `z` its value on a transposition; such a
//! character evaluates to `z^{p − c(σ)}`. Bases live in `Q(√2)^×`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, rising_factorial, QSqrt2, StirlingTable};
use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation};

/// The cyclic character `χ_z` on `Σ_p`, parametrized by its base `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCharacter {
    degree: usize,
    base: QSqrt2,
}

impl CyclicCharacter {
    pub fn new(degree: usize, base: QSqrt2) -> Result<Self> {
        if base.is_zero() {
            return Err(Error::InvalidArgument(
                "a cyclic character needs a nonzero base".into(),
            ));
        }
        Ok(CyclicCharacter { degree, base })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &QSqrt2 {
        &self.base
    }

    /// `χ(σ) = z^{p − c(σ)}`.
    pub fn eval(&self, sigma: &Permutation) -> Result<QSqrt2> {
        self.eval_type(&sigma.cycle_type())
    }

    pub fn eval_type(&self, t: &CycleType) -> Result<QSqrt2> {
        if t.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: t.degree(),
            });
        }
        Ok(self.base.pow_u((self.degree - t.total_cycles()) as u64))
    }

    /// Average value over `Σ_p`, as `z^p · (z^{-1})^{rising p} / p!`. Degree 0 averages to 1.
    pub fn average(&self) -> QSqrt2 {
        let p = self.degree as u64;
        if p == 0 {
            return QSqrt2::one();
        }
        let inv = self.base.inv().expect("base is nonzero");
        let numer = self.base.pow_u(p) * rising_factorial(&inv, p);
        numer
            .div_rational(&BigRational::from_integer(factorial(p).into()))
            .expect("p! is nonzero")
    }

    /// Values on `1, 2, …, p`-cycles.
    pub fn to_table(&self) -> ClassFunctionTable {
        ClassFunctionTable {
            values: (0..self.degree)
                .map(|i| self.base.pow_u(i as u64))
                .collect(),
        }
    }
}

/// Free function form of [`CyclicCharacter::eval`].
pub fn char_eval(chi: &CyclicCharacter, sigma: &Permutation) -> Result<QSqrt2> {
    chi.eval(sigma)
}

/// Free function form of [`CyclicCharacter::average`].
pub fn avg_char(chi: &CyclicCharacter) -> QSqrt2 {
    chi.average()
}

/// A Dirichlet character on `Σ_p` given by its values `z_1, …, z_p` on `i`-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunctionTable {
    values: Vec<QSqrt2>,
}

impl ClassFunctionTable {
    /// `values[i-1]` is the value on an `i`-cycle; the first entry must be 1.
    pub fn new(values: Vec<QSqrt2>) -> Result<Self> {
        if let Some(z1) = values.first() {
            if !z1.is_one() {
                return Err(Error::InvalidArgument(format!(
                    "value on a 1-cycle must be 1, got {z1}"
                )));
            }
        }
        Ok(ClassFunctionTable { values })
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[QSqrt2] {
        &self.values
    }

    /// `Π_r z_r^{c_r(σ)}`, the unique multiplicative extension.
    pub fn eval(&self, sigma: &Permutation) -> Result<QSqrt2> {
        if sigma.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: sigma.degree(),
            });
        }
        Ok(sigma
            .cycle_type()
            .iter()
            .fold(QSqrt2::one(), |acc, (r, c)| {
                acc * self.values[r - 1].pow_u(c as u64)
            }))
    }

    /// True iff `z_i = z_2^{i−1}` for every `2 ≤ i ≤ p`.
    pub fn is_cyclic(&self) -> bool {
        let Some(z2) = self.values.get(1) else {
            return true;
        };
        let mut expected = z2.clone();
        for zi in &self.values[2..] {
            expected = &expected * z2;
            if *zi != expected {
                return false;
            }
        }
        true
    }
}

pub fn verify_cyclic(t: &ClassFunctionTable) -> bool {
    t.is_cyclic()
}

/// The twisted product `((χ_z, χ_{z′}))` of cyclic characters on `Σ_p` and `Σ_q`:
///
/// `(1/p!q!) Σ_{k=1}^{p} Σ_{ℓ=1}^{q} c(p,k) c(q,ℓ) z^{−kℓ} z′^{−k}`.
pub fn twisted_product(p: usize, z: &QSqrt2, q: usize, z_prime: &QSqrt2) -> Result<QSqrt2> {
    let table = StirlingTable::new(p.max(q));
    twisted_product_with(&table, p, z, q, z_prime)
}

/// [`twisted_product`] reading Stirling numbers from an explicit table.
pub fn twisted_product_with(
    table: &StirlingTable,
    p: usize,
    z: &QSqrt2,
    q: usize,
    z_prime: &QSqrt2,
) -> Result<QSqrt2> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument(
            "twisted product needs p, q >= 1".into(),
        ));
    }
    let w = z.inv()?;
    let w_prime = z_prime.inv()?;
    let as_rat = |c: BigUint| BigRational::from_integer(BigInt::from(c));

    let mut total = QSqrt2::zero();
    let mut w_k = QSqrt2::one();
    let mut w_prime_k = QSqrt2::one();
    for k in 1..=p {
        w_k = &w_k * &w;
        w_prime_k = &w_prime_k * &w_prime;
        // Σ_ℓ c(q,ℓ) (w^k)^ℓ
        let mut inner = QSqrt2::zero();
        let mut w_kl = QSqrt2::one();
        for l in 1..=q {
            w_kl = &w_kl * &w_k;
            let c = table.get(q, l);
            if !c.is_zero() {
                inner = inner + w_kl.scale(&as_rat(c));
            }
        }
        let c = table.get(p, k);
        if !c.is_zero() {
            total = total + (&inner * &w_prime_k).scale(&as_rat(c));
        }
    }
    let denom = as_rat(factorial(p as u64) * factorial(q as u64));
    total.div_rational(&denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QSqrt2 {
        s.parse().unwrap()
    }

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn eval_examples() {
        let z = q("3/2+1*sqrt2");
        let chi3 = CyclicCharacter::new(3, z.clone()).unwrap();
        assert_eq!(chi3.eval(&Permutation::identity(3)).unwrap(), QSqrt2::one());
        assert_eq!(chi3.eval(&perm(3, "(1 2 3)")).unwrap(), z.pow_u(2));

        let chi5 = CyclicCharacter::new(5, z.clone()).unwrap();
        let v = chi5.eval(&perm(5, "(1 2)(3 4)")).unwrap();
        assert_eq!(v, z.pow_u(2));
        let a = chi5.eval(&perm(5, "(1 2)")).unwrap();
        let b = chi5.eval(&perm(5, "(3 4)")).unwrap();
        assert_eq!(v, a * b);

        assert!(chi5.eval(&perm(4, "(1 2)")).is_err());
        assert!(CyclicCharacter::new(3, QSqrt2::zero()).is_err());
    }

    #[test]
    fn cyclicity_check() {
        let z = q("2-1*sqrt2");
        let t = CyclicCharacter::new(4, z).unwrap().to_table();
        assert!(verify_cyclic(&t));
        let bad = ClassFunctionTable::new(vec![q("1"), q("2"), q("5")]).unwrap();
        assert!(!verify_cyclic(&bad));
        assert!(verify_cyclic(&ClassFunctionTable::new(vec![q("1")]).unwrap()));
        assert!(ClassFunctionTable::new(vec![q("2")]).is_err());
    }

    #[test]
    fn general_table_agrees_with_cyclic_eval() {
        let chi = CyclicCharacter::new(5, q("-1/3+2*sqrt2")).unwrap();
        let t = chi.to_table();
        for s in Permutation::all(5) {
            assert_eq!(t.eval(&s).unwrap(), chi.eval(&s).unwrap());
        }
    }

    #[test]
    fn average_examples() {
        let z = q("5/3+1/2*sqrt2");
        let chi2 = CyclicCharacter::new(2, z.clone()).unwrap();
        // Σ_2 = {id, (1 2)}: (1 + z)/2
        assert_eq!(chi2.average(), (QSqrt2::one() + z.clone()).scale(&BigRational::new(1.into(), 2.into())));
        assert_eq!(CyclicCharacter::new(1, z.clone()).unwrap().average(), QSqrt2::one());
        assert_eq!(CyclicCharacter::new(3, QSqrt2::one()).unwrap().average(), QSqrt2::one());
        assert_eq!(CyclicCharacter::new(0, z).unwrap().average(), QSqrt2::one());
    }

    #[test]
    fn average_matches_literal_mean() {
        for base in ["2", "1/2", "sqrt2", "-1"] {
            for p in 1..=6 {
                let chi = CyclicCharacter::new(p, q(base)).unwrap();
                let sum = Permutation::all(p)
                    .map(|s| chi.eval(&s).unwrap())
                    .fold(QSqrt2::zero(), |a, b| a + b);
                let literal = sum
                    .div_rational(&BigRational::from_integer(factorial(p as u64).into()))
                    .unwrap();
                assert_eq!(chi.average(), literal, "p={p} z={base}");
            }
        }
    }

    #[test]
    fn twisted_product_examples() {
        assert_eq!(twisted_product(2, &q("1/2"), 2, &q("2")).unwrap(), q("2"));
        assert_eq!(
            twisted_product(1, &q("1/2"), 1, &QSqrt2::sqrt2()).unwrap(),
            QSqrt2::sqrt2()
        );
        assert_eq!(twisted_product(1, &q("1"), 1, &q("1")).unwrap(), q("1"));
        assert!(twisted_product(0, &q("1"), 1, &q("1")).is_err());
        assert!(twisted_product(1, &q("0"), 1, &q("1")).is_err());
    }

    #[test]
    fn twisted_product_of_trivial_characters_is_one() {
        for p in 1..=6 {
            for qq in 1..=6 {
                assert_eq!(twisted_product(p, &q("1"), qq, &q("1")).unwrap(), QSqrt2::one());
            }
        }
    }
}
