//! Permutations of `{1, …, n}`, cycle types and symmetric-group conjugacy classes.
//!
//! Points are 1-based in every public signature and in cycle notation; the
//! internal image table is 0-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A bijection of `{1, …, n}`. Degree 0 is allowed and is the identity of `Σ_0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation of degree `n` from disjoint 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (i, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > n || used[pt - 1] {
                    return Err(Error::InvalidArgument(format!(
                        "cycle {cycle:?} is out of range or overlaps another cycle in degree {n}"
                    )));
                }
                used[pt - 1] = true;
                images[pt - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"` or `"()"` in the given degree.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub(crate) fn images0(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Function composition `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degrees(self, other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    /// `π σ π⁻¹` where `self = σ`.
    pub fn conjugate_by(&self, pi: &Permutation) -> Result<Permutation> {
        pi.compose(self)?.compose(&pi.inverse())
    }

    /// True iff no point is moved by both permutations.
    pub fn is_disjoint(&self, other: &Permutation) -> Result<bool> {
        check_degrees(self, other)?;
        Ok(self
            .images
            .iter()
            .zip(&other.images)
            .enumerate()
            .all(|(i, (&a, &b))| a == i || b == i))
    }

    /// The disjoint cycles, singletons included, each starting at its least point (1-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.images.len();
        let mut counts = vec![0usize; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            counts[len - 1] += 1;
        }
        CycleType { counts }
    }

    /// Every permutation of degree `n`, in lexicographic order of image lists.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..n).collect()),
        }
    }
}

fn check_degrees(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    /// Cycle notation without singletons; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let pts: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in S_{}", self.degree())
    }
}

/// Lexicographic enumeration of `Σ_n`.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        if n > 1 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { images: current })
    }
}

/// The cycle type of a permutation of degree `n`: `c_r` for `r = 1..=n`, singletons included.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    // counts[r - 1] = c_r
    counts: Vec<usize>,
}

impl CycleType {
    pub fn identity(n: usize) -> Self {
        let mut counts = vec![0; n];
        if n > 0 {
            counts[0] = n;
        }
        CycleType { counts }
    }

    /// Builds the type from a list of cycle lengths (a partition of `n`).
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let n: usize = parts.iter().sum();
        let mut counts = vec![0; n];
        for &r in parts {
            if r == 0 {
                return Err(Error::InvalidArgument("cycle length 0".into()));
            }
            counts[r - 1] += 1;
        }
        Ok(CycleType { counts })
    }

    /// Builds the type of degree `n` from `(r, c_r)` pairs; `Σ r·c_r` must equal `n`.
    pub fn from_counts(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut counts = vec![0; n];
        let mut total = 0;
        for &(r, c) in pairs {
            if r == 0 || r > n {
                return Err(Error::InvalidArgument(format!(
                    "cycle length {r} out of range for degree {n}"
                )));
            }
            counts[r - 1] += c;
            total += r * c;
        }
        if total != n {
            return Err(Error::InvalidArgument(format!(
                "cycle lengths sum to {total}, expected {n}"
            )));
        }
        Ok(CycleType { counts })
    }

    pub fn degree(&self) -> usize {
        self.counts.len()
    }

    /// `c_r`, zero outside `1..=n`.
    pub fn count(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.counts.get(r - 1).copied().unwrap_or(0)
    }

    /// Nonzero `(r, c_r)` pairs in increasing `r`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i + 1, c))
    }

    /// `c(σ)`: the number of cycles, singletons included.
    pub fn total_cycles(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Cycle lengths in non-increasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total_cycles());
        for (r, c) in self.iter().collect::<Vec<_>>().into_iter().rev() {
            out.extend(std::iter::repeat_n(r, c));
        }
        out
    }

    /// `z_λ = Π r^{c_r} c_r!`, the centralizer order.
    pub fn centralizer_order(&self) -> BigUint {
        self.iter().fold(BigUint::one(), |acc, (r, c)| {
            acc * BigUint::from(r).pow(c as u32) * factorial(c as u64)
        })
    }

    /// Number of permutations of `Σ_n` with this cycle type, `n!/z_λ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.degree() as u64) / self.centralizer_order()
    }

    /// A representative permutation: consecutive cycles on `1..=n`, longest first.
    pub fn representative(&self) -> Permutation {
        let n = self.degree();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for r in self.parts() {
            for i in 0..r {
                images[start + i] = start + (i + 1) % r;
            }
            start += r;
        }
        Permutation { images }
    }
}

impl fmt::Display for CycleType {
    /// `{1:1, 2:2}` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.iter().map(|(r, c)| format!("{r}:{c}")).collect();
        write!(f, "{{{}}}", entries.join(", "))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in S_{}", self.degree())
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Accepts a list of cycle lengths separated by `+`, `,` or spaces, e.g. `3+2+1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(|c: char| c == '+' || c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad cycle length {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::from_parts(&parts)
    }
}

/// The `ℓ`-cycle `(1 2 … ℓ)` in `Σ_n`, fixing `ℓ+1, …, n`.
pub fn make_cycle(n: usize, len: usize) -> Result<Permutation> {
    if len == 0 || len > n {
        return Err(Error::InvalidArgument(format!(
            "cycle length {len} must lie in 1..={n}"
        )));
    }
    let mut images: Vec<usize> = (0..n).collect();
    for (i, img) in images.iter_mut().enumerate().take(len) {
        *img = (i + 1) % len;
    }
    Ok(Permutation { images })
}

/// Every partition of `n` exactly once, in reverse-lexicographic order.
pub fn partitions(n: usize) -> Partitions {
    Partitions {
        n,
        current: if n == 0 { Some(Vec::new()) } else { Some(vec![n]) },
    }
}

pub struct Partitions {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        let parts = self.current.take()?;
        let item = if self.n == 0 {
            CycleType { counts: Vec::new() }
        } else {
            let mut counts = vec![0; self.n];
            for &r in &parts {
                counts[r - 1] += 1;
            }
            CycleType { counts }
        };

        if let Some(i) = parts.iter().rposition(|&r| r > 1) {
            let mut next = parts[..=i].to_vec();
            let ones = parts.len() - i - 1;
            let cap = next[i] - 1;
            next[i] = cap;
            let mut rem = ones + 1;
            while rem > 0 {
                let x = rem.min(cap);
                next.push(x);
                rem -= x;
            }
            self.current = Some(next);
        }
        Some(item)
    }
}

/// The partition number `p(n)`, by the standard "parts of size at most k" recurrence.
pub fn partition_number(n: usize) -> u128 {
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}
