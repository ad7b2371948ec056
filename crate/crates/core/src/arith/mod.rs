//! Exact arithmetic: big integers and rationals, `Q(√2)`, half-integer powers
//! of two, Stirling numbers of the first kind, rising factorials, binomials and
//! decimal rendering.

mod decimal;
mod qsqrt2;
mod stirling;

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use decimal::decimal_render;
pub use qsqrt2::QSqrt2;
pub use stirling::{stirling_first, stirling_row, StirlingTable};

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::zero();
    }
    // The running product after i steps is C(n-k+i, i), so every division is exact.
    let base = n - BigUint::from(k);
    (1..=k).fold(BigUint::one(), |acc, i| acc * (&base + i) / i)
}

/// `x (x+1) ⋯ (x+n−1)`; the empty product is one.
pub fn rising_factorial<T>(x: &T, n: u64) -> T
where
    T: Clone + One + From<BigInt>,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let mut acc = T::one();
    for i in 0..n {
        let shift = T::from(BigInt::from(i));
        let factor = x + &shift;
        acc = &acc * &factor;
    }
    acc
}

/// An element of `½ℤ`, stored as twice its value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HalfInteger {
    twice: BigInt,
}

impl HalfInteger {
    pub fn from_twice(twice: impl Into<BigInt>) -> Self {
        HalfInteger {
            twice: twice.into(),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        HalfInteger {
            twice: n.into() * 2,
        }
    }

    /// `num / 2`.
    pub fn halves(num: impl Into<BigInt>) -> Self {
        Self::from_twice(num)
    }

    pub fn twice(&self) -> &BigInt {
        &self.twice
    }
}

impl Add for &HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: &HalfInteger) -> HalfInteger {
        HalfInteger::from_twice(&self.twice + &rhs.twice)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if (&self.twice % 2u32).is_zero() {
            write!(f, "{}", &self.twice / 2u32)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// `2^k` for any integer `k`, as an exact rational.
pub fn pow2_rational(k: i64) -> BigRational {
    let p = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `2^e` exactly: `2^⌊e⌋` when `e` is an integer, otherwise `2^⌊e⌋·√2`.
pub fn pow2(e: &HalfInteger) -> QSqrt2 {
    let twice = e
        .twice
        .to_i64()
        .expect("exponent of 2 does not fit in 64 bits");
    let floor = twice.div_euclid(2);
    if twice.rem_euclid(2) == 0 {
        QSqrt2::rational(pow2_rational(floor))
    } else {
        QSqrt2::new(BigRational::zero(), pow2_rational(floor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&rat(5, 7), 0), BigRational::one());
        assert_eq!(rising_factorial(&rat(3, 1), 4), rat(360, 1));
        assert_eq!(
            rising_factorial(&QSqrt2::sqrt2(), 2),
            QSqrt2::from_integers(2, 1)
        );
    }

    #[test]
    fn pow2_examples() {
        assert_eq!(pow2(&HalfInteger::from_integer(3)), QSqrt2::from_integers(8, 0));
        assert_eq!(pow2(&HalfInteger::halves(1)), QSqrt2::sqrt2());
        assert_eq!(
            pow2(&HalfInteger::halves(-1)),
            QSqrt2::new(BigRational::zero(), rat(1, 2))
        );
        assert_eq!(pow2(&HalfInteger::from_integer(-2)), QSqrt2::ratio(1, 4));
        assert_eq!(HalfInteger::halves(-3).to_string(), "-3/2");
        assert_eq!(HalfInteger::halves(8).to_string(), "4");
    }

    #[test]
    fn binomial_examples() {
        let b = |n: u64, k| binomial(&BigUint::from(n), k);
        assert_eq!(b(5, 2), 10u32.into());
        assert_eq!(b(9, 0), 1u32.into());
        assert_eq!(b(18, 3), 816u32.into());
        assert_eq!(b(3, 5), 0u32.into());
        assert_eq!(b(0, 0), 1u32.into());
        // against Pascal's rule
        for n in 1..30u64 {
            for k in 1..=n {
                assert_eq!(b(n, k), b(n - 1, k - 1) + b(n - 1, k));
            }
        }
    }

    #[test]
    fn am_gm_rising_factorial_bound() {
        // a^(rising b) <= (a + (b-1)/2)^b
        for a in 1..=20i64 {
            for b in 1..=20u64 {
                let lhs = rising_factorial(&rat(a, 1), b);
                let mean = rat(2 * a + b as i64 - 1, 2);
                let rhs = num_traits::pow(mean, b as usize);
                assert!(lhs <= rhs, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn stirling_generating_identity() {
        // Σ_k c(n,k) x^k = x^(rising n)
        let points = [rat(1, 1), rat(2, 1), rat(1, 2), rat(-3, 1), rat(7, 5)];
        for n in 0..=30u64 {
            let row = stirling_row(n as usize);
            for x in &points {
                let mut lhs = BigRational::zero();
                let mut xp = BigRational::one();
                for c in row.iter() {
                    lhs += BigRational::from_integer(BigInt::from(c.clone())) * &xp;
                    xp *= x;
                }
                assert_eq!(lhs, rising_factorial(x, n), "n={n} x={x}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn pow2_is_additive(e in -300i64..300, f in -300i64..300) {
            let (e, f) = (HalfInteger::halves(e), HalfInteger::halves(f));
            prop_assert_eq!(pow2(&e) * pow2(&f), pow2(&(&e + &f)));
        }
    }
}
