//! Reduced forms of monomials.
//!
//! `reduce` rank-compresses an exponent vector: every exponent becomes the
//! number of distinct exponent values strictly below it. Reduced monomials
//! are exactly the images `g * e'_I`.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ordering::{approx, canonical};
use crate::perm::{canonical_mover, Permutation};
use crate::structure::{e_prime, IndexSet};

pub fn reduce(m: &Monomial) -> Monomial {
    let mut distinct = m.exps().to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let exps = m
        .exps()
        .iter()
        .map(|e| distinct.binary_search(e).expect("value present") as u32)
        .collect();
    Monomial::from_vec_unchecked(exps)
}

pub fn is_reduced(m: &Monomial) -> bool {
    reduce(m) == *m
}

/// Element-wise `reduce` of a set of pairwise `≈` monomials.
pub fn reduce_set(set: &[Monomial]) -> Result<Vec<Monomial>> {
    if let Some(first) = set.first() {
        if let Some(bad) = set.iter().find(|x| !approx(first, x)) {
            return Err(Error::Precondition(format!(
                "{first} and {bad} are not in the same orbit"
            )));
        }
    }
    let mut out: Vec<Monomial> = set.iter().map(reduce).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    Ok(out)
}

/// Witness `(g, I)` with `g * e'_I` equal to a reduced monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedClassification {
    pub g: Permutation,
    pub index_set: IndexSet,
}

/// Reads `I` off the descent positions of the sorted exponents; `g` is the
/// stable sorting permutation.
pub fn classify_reduced(m: &Monomial) -> Result<ReducedClassification> {
    if !is_reduced(m) {
        return Err(Error::Precondition(format!("{m} is not in reduced form")));
    }
    let sorted = canonical(m).into_monomial();
    let n = m.n();
    let exps = sorted.exps();
    let mut members: Vec<usize> = (1..n).filter(|&i| exps[i - 1] > exps[i]).collect();
    members.push(n);
    let index_set = IndexSet::new(n, members)?;
    let g = canonical_mover(&sorted, m)?;
    debug_assert_eq!(g.apply_unchecked(&e_prime(&index_set)), *m);
    Ok(ReducedClassification { g, index_set })
}
