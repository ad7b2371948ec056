use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::QSqrt2;

const GUARD_DIGITS: u32 = 40;

/// Fixed-point decimal expansion of `a + b√2` with `places` digits after the point.
///
/// The nearest multiple of `10^-places` is found from a guard-digit estimate of
/// `√2` and then confirmed with exact sign tests, so the result is correctly
/// rounded. Exact ties (possible only for rational values) round half to even.
pub fn decimal_render(x: &QSqrt2, places: u32) -> String {
    let scale = BigRational::from_integer(BigInt::from(10u32).pow(places));
    let y = x.scale(&scale);

    let guard = places + GUARD_DIGITS;
    let ten_g = BigInt::from(10u32).pow(guard);
    let two_ten_2g = BigUint::from(2u32) * BigUint::from(10u32).pow(2 * guard);
    let sqrt2_approx = BigRational::new(BigInt::from(two_ten_2g.sqrt()), ten_g);
    let approx = y.a() + y.b() * sqrt2_approx;
    let half = BigRational::new(1.into(), 2.into());
    let mut n: BigInt = (approx + &half).floor().to_integer();

    let offset = |n: &BigInt, delta: &BigRational| -> Ordering {
        let shifted = QSqrt2::rational(BigRational::from_integer(n.clone()) + delta);
        (&y - &shifted).signum()
    };
    let neg_half = -half.clone();
    while offset(&n, &half) == Ordering::Greater {
        n += 1;
    }
    while offset(&n, &neg_half) == Ordering::Less {
        n -= 1;
    }
    if offset(&n, &half) == Ordering::Equal && n.is_odd() {
        n += 1;
    } else if offset(&n, &neg_half) == Ordering::Equal && n.is_odd() {
        n -= 1;
    }

    format_fixed(&n, places)
}

fn format_fixed(n: &BigInt, places: u32) -> String {
    let digits = n.abs().to_string();
    let places = places as usize;
    let sign = if n.is_negative() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{digits}");
    }
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = padded.split_at(padded.len() - places);
    if n.is_zero() {
        return format!("{int}.{frac}");
    }
    format!("{sign}{int}.{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(s: &str, places: u32) -> String {
        decimal_render(&s.parse().unwrap(), places)
    }

    #[test]
    fn examples() {
        assert_eq!(render("7", 6), "7.000000");
        assert_eq!(render("sqrt2", 6), "1.414214");
        assert_eq!(render("1/3", 4), "0.3333");
    }

    #[test]
    fn sqrt2_long_expansion() {
        // 1.41421356237309504880168872420969807856967187537694807...
        assert_eq!(
            render("sqrt2", 50),
            "1.41421356237309504880168872420969807856967187537695"
        );
        assert_eq!(render("-sqrt2", 3), "-1.414");
        assert_eq!(render("1-1*sqrt2", 5), "-0.41421");
    }

    #[test]
    fn half_even_on_exact_ties() {
        assert_eq!(render("1/8", 2), "0.12");
        assert_eq!(render("3/8", 2), "0.38");
        assert_eq!(render("-1/8", 2), "-0.12");
        assert_eq!(render("5/2", 0), "2");
        assert_eq!(render("7/2", 0), "4");
    }

    #[test]
    fn small_magnitudes() {
        assert_eq!(render("1/1000000", 3), "0.000");
        assert_eq!(render("-1/1000000", 3), "0.000");
        assert_eq!(render("1393-985*sqrt2", 6), "-0.000359");
        assert_eq!(render("-1393+985*sqrt2", 6), "0.000359");
    }
}
