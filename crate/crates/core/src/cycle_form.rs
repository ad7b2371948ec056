//! The cycle form `⟨α, β⟩ = Σ_{r,s} gcd(r,s)·c_r(α)·c_s(β)` and its extension
//! to integer group algebras, with evaluators for its structural identities.

use std::borrow::Cow;
use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::perm::{make_cycle, CycleType, Permutation};

/// Anything that has a cycle type. The cycle form only depends on types.
pub trait CycleData {
    fn cycle_data(&self) -> Cow<'_, CycleType>;
}

impl CycleData for CycleType {
    fn cycle_data(&self) -> Cow<'_, CycleType> {
        Cow::Borrowed(self)
    }
}

impl CycleData for Permutation {
    fn cycle_data(&self) -> Cow<'_, CycleType> {
        Cow::Owned(self.cycle_type())
    }
}

pub fn cycle_form<A: CycleData + ?Sized, B: CycleData + ?Sized>(alpha: &A, beta: &B) -> u64 {
    let (a, b) = (alpha.cycle_data(), beta.cycle_data());
    let mut total = 0u64;
    for (r, cr) in a.iter() {
        for (s, cs) in b.iter() {
            total += (r.gcd(&s) * cr * cs) as u64;
        }
    }
    total
}

/// For a fixed `α`, the weights `v_s = Σ_r gcd(r,s)·c_r(α)` for `s = 1..=q`, so that
/// `⟨α, β⟩ = Σ_s v_s·c_s(β)` for every `β ∈ Σ_q`.
pub fn cycle_form_weights(alpha: &CycleType, q: usize) -> Vec<u64> {
    (1..=q)
        .map(|s| {
            alpha
                .iter()
                .map(|(r, cr)| (r.gcd(&s) * cr) as u64)
                .sum()
        })
        .collect()
}

/// A finite integer combination of permutations of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, i64>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff · σ`.
    pub fn monomial(sigma: Permutation, coeff: i64) -> Self {
        let mut x = GroupAlgebraElement::zero(sigma.degree());
        x.add_term(sigma, coeff);
        x
    }

    /// The unit `1 = id` of `ℤ[Σ_n]`, scaled.
    pub fn identity(degree: usize, coeff: i64) -> Self {
        Self::monomial(Permutation::identity(degree), coeff)
    }

    /// `1 − σ`.
    pub fn one_minus(sigma: &Permutation) -> Self {
        let mut x = Self::identity(sigma.degree(), 1);
        x.add_term(sigma.clone(), -1);
        x
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, sigma: Permutation, coeff: i64) {
        assert_eq!(sigma.degree(), self.degree, "mixed degrees in a group algebra element");
        let c = self.terms.entry(sigma.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&sigma);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = GroupAlgebraElement::zero(self.degree);
        if k != 0 {
            for (p, c) in self.terms() {
                out.add_term(p.clone(), c * k);
            }
        }
        out
    }

    /// Convolution product; `σ·σ′` is composition with `σ′` applied first.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.compose(b)?, ca * cb);
            }
        }
        Ok(out)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }
}

/// The cycle form extended bilinearly to `ℤ[Σ_p] ⊗ ℤ[Σ_q]`.
pub fn cycle_form_bilinear(x: &GroupAlgebraElement, y: &GroupAlgebraElement) -> i64 {
    let mut total = 0i64;
    for (a, ca) in x.terms() {
        let ta = a.cycle_type();
        for (b, cb) in y.terms() {
            total += ca * cb * cycle_form(&ta, b) as i64;
        }
    }
    total
}

/// Right-hand side of the decomposition identity
/// `⟨α,β⟩ = Σ_j c_j(α)⟨γ_j,β⟩ + (1 − c(α))·p·c(β)`, with `γ_j = (1 2 … j)` in `Σ_p`.
pub fn cycle_form_via_decomposition<A: CycleData + ?Sized>(alpha: &A, beta: &CycleType) -> i64 {
    let a = alpha.cycle_data();
    let p = a.degree();
    let mut total = 0i64;
    for (j, cj) in a.iter() {
        let gamma = make_cycle(p, j).expect("j <= p for a cycle of alpha");
        total += cj as i64 * cycle_form(&gamma, beta) as i64;
    }
    let c_alpha = a.total_cycles() as i64;
    total + (1 - c_alpha) * (p * beta.total_cycles()) as i64
}

/// `⟨γ_ℓ, β⟩` for a prime `ℓ`, by `⟨1,β⟩ − (ℓ−1)·Σ_{ℓ∤s} c_s(β)`.
pub fn prime_cycle_bracket(len: usize, p: usize, beta: &CycleType) -> Result<i64> {
    if len == 0 || len > p {
        return Err(Error::InvalidArgument(format!(
            "cycle length {len} must lie in 1..={p}"
        )));
    }
    let coprime: usize = beta.iter().filter(|(s, _)| s % len != 0).map(|(_, c)| c).sum();
    Ok((p * beta.total_cycles()) as i64 - ((len - 1) * coprime) as i64)
}

/// `⟨1 − γ_ℓ, β⟩ − (ℓ−1)(c(β) − q/ℓ)` where `1` and `γ_ℓ` live in `Σ_p`. Never negative.
pub fn bound_1a_gap(len: usize, p: usize, beta: &CycleType) -> Result<BigRational> {
    let gamma = make_cycle(p, len)?;
    let x = GroupAlgebraElement::one_minus(&gamma);
    let y = GroupAlgebraElement::monomial(beta.representative(), 1);
    let lhs = BigRational::from_integer(cycle_form_bilinear(&x, &y).into());
    let q = beta.degree() as i64;
    let l = len as i64;
    let rhs = BigRational::new(((l - 1) * (beta.total_cycles() as i64 * l - q)).into(), l.into());
    Ok(lhs - rhs)
}

/// `Σ_j c_j(α)/j − (c(α) − p)/2`. Never negative.
pub fn bound_5_gap(alpha: &CycleType) -> BigRational {
    let p = alpha.degree() as i64;
    let sum = alpha.iter().fold(BigRational::from_integer(0.into()), |acc, (j, cj)| {
        acc + BigRational::new((cj as i64).into(), (j as i64).into())
    });
    sum - BigRational::new((alpha.total_cycles() as i64 - p).into(), 2.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::partitions;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn ty(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn form_examples() {
        for (p, q) in [(1, 1), (3, 4), (5, 2)] {
            assert_eq!(
                cycle_form(&Permutation::identity(p), &Permutation::identity(q)),
                (p * q) as u64
            );
        }
        assert_eq!(cycle_form(&Permutation::identity(3), &perm(3, "(1 2)")), 6);
        assert_eq!(cycle_form(&perm(4, "(1 2)(3 4)"), &perm(3, "(1 2 3)")), 2);
    }

    #[test]
    fn weights_reproduce_the_form() {
        for a in partitions(7) {
            let w = cycle_form_weights(&a, 6);
            for b in partitions(6) {
                let via: u64 = b.iter().map(|(s, c)| w[s - 1] * c as u64).sum();
                assert_eq!(via, cycle_form(&a, &b));
            }
        }
    }

    #[test]
    fn bilinear_examples() {
        let a = perm(5, "(1 2)");
        let a2 = perm(5, "(3 4 5)");
        let x = GroupAlgebraElement::one_minus(&a)
            .mul(&GroupAlgebraElement::one_minus(&a2))
            .unwrap();
        for beta in Permutation::all(4) {
            assert_eq!(cycle_form_bilinear(&x, &GroupAlgebraElement::monomial(beta, 1)), 0);
        }
        let two = GroupAlgebraElement::identity(2, 2);
        let three = GroupAlgebraElement::identity(2, 3);
        assert_eq!(cycle_form_bilinear(&two, &three), 24);
        let d = GroupAlgebraElement::one_minus(&perm(2, "(1 2)"));
        assert_eq!(cycle_form_bilinear(&d, &GroupAlgebraElement::identity(2, 1)), 2);
    }

    #[test]
    fn algebra_bookkeeping() {
        let s = perm(3, "(1 2)");
        let x = GroupAlgebraElement::monomial(s.clone(), 2);
        assert!(x.sub(&x).unwrap().is_zero());
        assert!(x.scale(0).is_zero());
        // (1 2)^2 = 1
        let sq = GroupAlgebraElement::monomial(s.clone(), 1)
            .mul(&GroupAlgebraElement::monomial(s, 1))
            .unwrap();
        assert_eq!(sq, GroupAlgebraElement::identity(3, 1));
        assert!(x.add(&GroupAlgebraElement::identity(4, 1)).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let p = 4;
        for b in partitions(5) {
            assert_eq!(
                cycle_form_via_decomposition(&Permutation::identity(p), &b),
                (p * b.total_cycles()) as i64
            );
        }
        let alpha = perm(3, "(1 2 3)");
        assert_eq!(cycle_form(&alpha, &ty("2")), 1);
        assert_eq!(cycle_form_via_decomposition(&alpha, &ty("2")), 1);
    }

    #[test]
    fn bound_1a_examples() {
        for q in 1..=7 {
            for b in partitions(q) {
                assert_eq!(bound_1a_gap(1, 4, &b).unwrap(), rat(0, 1));
            }
            assert_eq!(bound_1a_gap(2, 5, &CycleType::identity(q)).unwrap(), rat(q as i64, 2));
        }
        // β a single 6-cycle, ℓ = 3: ⟨1−γ_3,β⟩ = 3·1 − (0·1 + gcd(3,6)) = 0; rhs = 2(1 − 2) = −2
        assert_eq!(bound_1a_gap(3, 3, &ty("6")).unwrap(), rat(2, 1));
        assert!(bound_1a_gap(4, 3, &ty("2")).is_err());
    }

    #[test]
    fn bound_5_examples() {
        for p in 1..=9 {
            assert_eq!(bound_5_gap(&CycleType::identity(p)), rat(p as i64, 1));
            let single = CycleType::from_counts(p, &[(p, 1)]).unwrap();
            let expect = rat(1, p as i64) - rat(1 - p as i64, 2);
            assert_eq!(bound_5_gap(&single), expect);
        }
        assert_eq!(bound_5_gap(&ty("1")), rat(1, 1));
    }

    #[test]
    fn prime_bracket_matches_form() {
        for l in [2, 3, 5, 7] {
            for q in 1..=8 {
                for b in partitions(q) {
                    let direct = cycle_form(&make_cycle(7, l).unwrap(), &b) as i64;
                    assert_eq!(prime_cycle_bracket(l, 7, &b).unwrap(), direct);
                }
            }
        }
    }
}
