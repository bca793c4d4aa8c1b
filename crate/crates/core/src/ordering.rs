//! The orbit-maximal preorder on monomials and the leading set `Glm`.
//!
//! `a ≽ b` compares the lex-greatest elements of the two orbits, which are
//! the exponent vectors sorted non-increasingly. `a ≈ b` exactly when the
//! exponent multisets agree.

use std::cmp::Ordering;

use crate::coeff::Coefficient;
use crate::error::{check_dims, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// The lex-greatest element of an orbit; exponents are non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitClass {
    canonical: Monomial,
}

impl OrbitClass {
    pub fn monomial(&self) -> &Monomial {
        &self.canonical
    }

    pub fn into_monomial(self) -> Monomial {
        self.canonical
    }
}

pub fn canonical(m: &Monomial) -> OrbitClass {
    let mut exps = m.exps().to_vec();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    OrbitClass {
        canonical: Monomial::from_vec_unchecked(exps),
    }
}

/// `Greater` means `a ≻ b`, `Equal` means `a ≈ b`.
pub fn succ_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_dims(a.n(), b.n())?;
    Ok(canonical(a).cmp(&canonical(b)))
}

pub fn approx(a: &Monomial, b: &Monomial) -> bool {
    a.n() == b.n() && canonical(a) == canonical(b)
}

/// `M(u)`, lex-descending.
pub fn support<C: Coefficient>(u: &Polynomial<C>) -> Vec<Monomial> {
    u.monomials().cloned().collect()
}

/// The `≽`-maximal monomials of `u`, lex-descending. Empty for `u = 0`.
pub fn glm<C: Coefficient>(u: &Polynomial<C>) -> Vec<Monomial> {
    glm_with_class(u).map(|(_, set)| set).unwrap_or_default()
}

/// `Glm(u)` together with its orbit class, or `None` for zero.
pub fn glm_with_class<C: Coefficient>(u: &Polynomial<C>) -> Option<(OrbitClass, Vec<Monomial>)> {
    let mut best: Option<OrbitClass> = None;
    let mut members: Vec<Monomial> = Vec::new();
    for m in u.monomials() {
        let class = canonical(m);
        match best.as_ref().map(|b| class.cmp(b)) {
            Some(Ordering::Less) => {}
            Some(Ordering::Equal) => members.push(m.clone()),
            None | Some(Ordering::Greater) => {
                best = Some(class);
                members.clear();
                members.push(m.clone());
            }
        }
    }
    best.map(|class| (class, members))
}
