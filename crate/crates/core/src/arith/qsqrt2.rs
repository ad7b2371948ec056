use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact element `a + b·√2` of the field `Q(√2)`.
///
/// The pair `(a, b)` is unique for a given value because `√2` is irrational,
/// so equality and hashing are componentwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSqrt2 {
    a: BigRational,
    b: BigRational,
}

impl QSqrt2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn from_integers(a: i64, b: i64) -> Self {
        QSqrt2::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn rational(a: BigRational) -> Self {
        QSqrt2::new(a, BigRational::zero())
    }

    /// `num/den` as a rational element. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        QSqrt2::rational(BigRational::new(num.into(), den.into()))
    }

    pub fn sqrt2() -> Self {
        QSqrt2::from_integers(0, 1)
    }

    /// Rational part `a`.
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of `√2`.
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b·√2`.
    pub fn conj(&self) -> Self {
        QSqrt2::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 2b²`; zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    /// Exact sign of `a + b√2`, decided by comparing `a²` with `2b²`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            // Opposite signs: the term with the larger square wins.
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = BigRational::from_integer(2.into()) * &self.b * &self.b;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => unreachable!("sqrt2 is irrational"),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        Ok(QSqrt2::new(&self.a / &n, -(&self.b / &n)))
    }

    pub fn checked_div(&self, rhs: &QSqrt2) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QSqrt2::new(&self.a * r, &self.b * r)
    }

    pub fn div_rational(&self, r: &BigRational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::NotInvertible("0".into()));
        }
        Ok(QSqrt2::new(&self.a / r, &self.b / r))
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QSqrt2::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents need an invertible base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow_u(e as u64))
        } else {
            Ok(self.inv()?.pow_u(e.unsigned_abs()))
        }
    }

    /// Lossy conversion for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * std::f64::consts::SQRT_2
    }
}

impl From<BigInt> for QSqrt2 {
    fn from(n: BigInt) -> Self {
        QSqrt2::rational(BigRational::from_integer(n))
    }
}

impl From<BigRational> for QSqrt2 {
    fn from(r: BigRational) -> Self {
        QSqrt2::rational(r)
    }
}

impl From<i64> for QSqrt2 {
    fn from(n: i64) -> Self {
        QSqrt2::from_integers(n, 0)
    }
}

impl Zero for QSqrt2 {
    fn zero() -> Self {
        QSqrt2::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt2 {
    fn one() -> Self {
        QSqrt2::new(BigRational::one(), BigRational::zero())
    }
}

impl<'a> Add<&'a QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        let two = BigRational::from_integer(2.into());
        QSqrt2::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr<QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: &QSqrt2) -> QSqrt2 { (&self).$m(rhs) }
        }
        impl<'a> $tr<QSqrt2> for &'a QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

/// Panics on division by zero, like the integer types; use [`QSqrt2::checked_div`] otherwise.
impl Div<QSqrt2> for QSqrt2 {
    type Output = QSqrt2;
    fn div(self, rhs: QSqrt2) -> QSqrt2 {
        self.checked_div(&rhs).expect("division by zero in Q(sqrt2)")
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl fmt::Display for QSqrt2 {
    /// Always `a+b*sqrt2` (or `a-b*sqrt2`), both parts present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}*sqrt2", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}*sqrt2", self.a, self.b)
        }
    }
}

impl fmt::Debug for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for QSqrt2 {
    type Err = Error;

    /// Accepts sums of rational terms and `√2` terms: `3`, `-1/2`, `sqrt2`,
    /// `1/2*sqrt2`, `1+2*sqrt2`, `1/3-5/7*sqrt2`.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty Q(sqrt2) literal".into()));
        }
        let bytes = text.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'*' | b'/') {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);

        let mut out = QSqrt2::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            let value = if let Some(coef) = body.strip_suffix("sqrt2") {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let c = if coef.is_empty() {
                    BigRational::one()
                } else {
                    parse_rational(coef)?
                };
                QSqrt2::new(BigRational::zero(), c)
            } else {
                QSqrt2::rational(parse_rational(body)?)
            };
            out = out + if neg { -value } else { value };
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> QSqrt2 {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q("3"), QSqrt2::from_integers(3, 0));
        assert_eq!(q("sqrt2"), QSqrt2::sqrt2());
        assert_eq!(q("-1/2*sqrt2"), QSqrt2::new(BigRational::zero(), BigRational::new((-1).into(), 2.into())));
        assert_eq!(q("1/3 - 5/7*sqrt2").to_string(), "1/3-5/7*sqrt2");
        assert_eq!(q("2+0*sqrt2").to_string(), "2+0*sqrt2");
        assert!("1/0".parse::<QSqrt2>().is_err());
        assert!("".parse::<QSqrt2>().is_err());
        assert!("x".parse::<QSqrt2>().is_err());
    }

    #[test]
    fn sign_is_exact() {
        assert!(q("3-2*sqrt2").is_positive()); // 3 > 2.828
        assert!(q("-3+2*sqrt2").is_negative());
        // 1393² = 2·985² − 1, about −3.6e-4.
        assert!(q("1393-985*sqrt2").is_negative());
        assert!(q("-1393+985*sqrt2").is_positive());
        assert!(q("1-1*sqrt2").is_negative());
        assert_eq!(QSqrt2::zero().signum(), Ordering::Equal);
        assert!(q("7/5") < QSqrt2::sqrt2());
        assert!(q("3/2") > QSqrt2::sqrt2());
    }

    #[test]
    fn inverse_and_division() {
        let x = q("1+1*sqrt2");
        assert_eq!(x.inv().unwrap(), q("-1+1*sqrt2"));
        assert!(QSqrt2::zero().inv().is_err());
        assert_eq!(q("1/2").pow(-3).unwrap(), q("8"));
        assert_eq!(QSqrt2::sqrt2().pow(-1).unwrap(), q("1/2*sqrt2"));
        assert_eq!(QSqrt2::sqrt2().pow_u(5), q("4*sqrt2"));
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    fn element() -> impl Strategy<Value = QSqrt2> {
        (small_rational(), small_rational()).prop_map(|(a, b)| QSqrt2::new(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(x in element(), y in element(), z in element()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            let n = &x * &x.conj();
            prop_assert!(n.is_rational());
            prop_assert_eq!(n.a(), &x.norm());
        }

        #[test]
        fn order_matches_float(x in element(), y in element()) {
            let (fx, fy) = (x.to_f64(), y.to_f64());
            if (fx - fy).abs() > 1e-9 {
                prop_assert_eq!(x.cmp(&y), fx.partial_cmp(&fy).unwrap());
            }
        }

        #[test]
        fn display_round_trip(x in element()) {
            prop_assert_eq!(x.to_string().parse::<QSqrt2>().unwrap(), x);
        }
    }
}
