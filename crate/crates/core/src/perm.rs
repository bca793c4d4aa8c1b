//! The symmetric group on `x1, ..., xn` and its action on monomials.
//!
//! Convention: `g * x_i = x_{g(i)}`, so the exponent of `x_{g(i)}` in
//! `g * m` is the exponent of `x_i` in `m`. Composition `g.compose(h)` is
//! `g ∘ h`, which applies `h` first.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::Coefficient;
use crate::error::{check_dims, Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// Largest `n` for which the full group may be enumerated.
pub const MAX_ENUMERATED_DEGREE: usize = 8;

/// Largest `n` for which `n!` fits in a `u128`.
pub const MAX_FACTORIAL_ARG: usize = 34;

pub fn factorial(n: usize) -> u128 {
    assert!(n <= MAX_FACTORIAL_ARG, "{n}! overflows u128");
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    checked_binomial(n, k).expect("binomial overflows u128")
}

/// `None` when an intermediate product overflows `u128`.
pub fn checked_binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    (0..k as u128).try_fold(1u128, |acc, i| Some(acc.checked_mul(n as u128 - i)? / (i + 1)))
}

/// A bijection of `{1, ..., n}`, stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From one-based images, `images[i] = g(i + 1)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero_based = images
            .iter()
            .map(|&v| v.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidPermutation("images are 1-indexed".into()))?;
        Self::from_zero_based(zero_based)
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty image list".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection of 1..={n}",
                    images.iter().map(|v| v + 1).collect::<Vec<_>>()
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping zero-based positions `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut g = Permutation::identity(n);
        g.images.swap(i, j);
        g
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of zero-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ h`: apply `h`, then `self`.
    pub fn compose(&self, h: &Permutation) -> Permutation {
        assert_eq!(self.n(), h.n(), "composing permutations of different degree");
        Permutation {
            images: h.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles of length at least two, one-based, each starting at its
    /// smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn apply(&self, m: &Monomial) -> Result<Monomial> {
        check_dims(self.n(), m.n())?;
        Ok(self.apply_unchecked(m))
    }

    pub(crate) fn apply_unchecked(&self, m: &Monomial) -> Monomial {
        let mut exps = vec![0; self.n()];
        for (i, &e) in m.exps().iter().enumerate() {
            exps[self.images[i]] = e;
        }
        Monomial::from_vec_unchecked(exps)
    }

    pub fn apply_poly<C: Coefficient>(&self, u: &Polynomial<C>) -> Result<Polynomial<C>> {
        check_dims(self.n(), u.n())?;
        Ok(u.map_monomials(|m| self.apply_unchecked(m)))
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Wire form `{"images": [2,1,3]}`, one-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationJson {
    pub images: Vec<usize>,
}

impl From<&Permutation> for PermutationJson {
    fn from(g: &Permutation) -> Self {
        PermutationJson {
            images: g.images_one_based(),
        }
    }
}

impl TryFrom<PermutationJson> for Permutation {
    type Error = Error;

    fn try_from(wire: PermutationJson) -> Result<Self> {
        Permutation::from_images(&wire.images)
    }
}

/// Every element of `Sym(n)`, for `n <= MAX_ENUMERATED_DEGREE`.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 || n > MAX_ENUMERATED_DEGREE {
        return Err(Error::Capacity(format!(
            "enumerating Sym({n}) is limited to 1..={MAX_ENUMERATED_DEGREE}"
        )));
    }
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation {
        images: current.clone(),
    }];
    while next_permutation(&mut current, |a, b| a < b) {
        out.push(Permutation {
            images: current.clone(),
        });
    }
    Ok(out)
}

/// Advances `a` to the next arrangement in the order where `before(x, y)`
/// ranks `x` ahead of `y`; returns false after the last one.
fn next_permutation<T: Copy>(a: &mut [T], before: impl Fn(&T, &T) -> bool) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && !before(&a[i - 1], &a[i]) {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while !before(&a[i - 1], &a[j]) {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Order of the Young subgroup fixing `m`: the product of factorials of the
/// exponent multiplicities.
pub fn stabilizer_order(m: &Monomial) -> u128 {
    multiplicities(m).values().map(|&k| factorial(k)).product()
}

fn multiplicities(m: &Monomial) -> HashMap<u32, usize> {
    let mut counts = HashMap::new();
    for &e in m.exps() {
        *counts.entry(e).or_insert(0) += 1;
    }
    counts
}

/// Transpositions of consecutive positions within each equal-exponent class.
pub fn stabilizer_generators(m: &Monomial) -> Vec<Permutation> {
    let mut last_seen: HashMap<u32, usize> = HashMap::new();
    let mut gens = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if let Some(prev) = last_seen.insert(e, i) {
            gens.push(Permutation::transposition(m.n(), prev, i));
        }
    }
    gens
}

/// All distinct images `g * m`, lex-descending.
///
/// Built from the distinct arrangements of the exponent vector, so the cost
/// is the orbit size rather than `n!`.
pub fn orbit(m: &Monomial) -> Vec<Monomial> {
    let mut exps = m.exps().to_vec();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![Monomial::from_vec_unchecked(exps.clone())];
    while next_permutation(&mut exps, |a, b| a > b) {
        out.push(Monomial::from_vec_unchecked(exps.clone()));
    }
    out
}

pub fn orbit_size(m: &Monomial) -> u128 {
    factorial(m.n()) / stabilizer_order(m)
}

/// The lexicographically least `g` (by images) with `g * from = to`.
///
/// Equal exponents are matched in ascending position order, which is the
/// stable-sort pairing.
pub fn canonical_mover(from: &Monomial, to: &Monomial) -> Result<Permutation> {
    check_dims(from.n(), to.n())?;
    let n = from.n();
    let mut buckets: HashMap<u32, std::collections::VecDeque<usize>> = HashMap::new();
    for (j, &e) in to.exps().iter().enumerate() {
        buckets.entry(e).or_default().push_back(j);
    }
    let mut images = Vec::with_capacity(n);
    for &e in from.exps() {
        let j = buckets
            .get_mut(&e)
            .and_then(|q| q.pop_front())
            .ok_or_else(|| Error::Precondition(format!("{to} is not in the orbit of {from}")))?;
        images.push(j);
    }
    Ok(Permutation { images })
}

/// One representative per coset of the stabilizer of `base`.
///
/// `reps[k] * base == images[k]`, with `images` the lex-descending orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    pub base: Monomial,
    pub reps: Vec<Permutation>,
    pub images: Vec<Monomial>,
}

impl Transversal {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

pub fn transversal(m: &Monomial) -> Transversal {
    let images = orbit(m);
    let reps = images
        .iter()
        .map(|image| canonical_mover(m, image).expect("image lies in the orbit"))
        .collect();
    Transversal {
        base: m.clone(),
        reps,
        images,
    }
}
