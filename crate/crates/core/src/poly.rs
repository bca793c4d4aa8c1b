use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::coeff::Coefficient;
use crate::error::{check_dims, Error, Result};
use crate::monomial::Monomial;

/// A polynomial in `x1, ..., xn` with coefficients in `C`.
///
/// Terms are kept in a lex-ordered map with no zero coefficients, so the
/// lex-leading monomial is the last key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C = BigInt> {
    n: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "a polynomial ring needs at least one variable");
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Polynomial::zero(m.n());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    /// Builds a polynomial from possibly repeated terms, combining like terms.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            check_dims(n, m.n())?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lex-descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// The lex-greatest monomial with nonzero coefficient.
    pub fn lmlex(&self) -> Result<&Monomial> {
        self.terms
            .last_key_value()
            .map(|(m, _)| m)
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &C)> {
        self.terms.last_key_value().ok_or(Error::ZeroPolynomial)
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Splits into graded pieces keyed by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u64, Polynomial<C>> {
        let mut pieces: BTreeMap<u64, Polynomial<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            pieces
                .entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.n))
                .terms
                .insert(m.clone(), c.clone());
        }
        pieces
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        debug_assert_eq!(m.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &C, other: &Polynomial<C>) -> Result<()> {
        check_dims(self.n, other.n)?;
        if c.is_zero() {
            return Ok(());
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), c.clone() * a.clone());
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial<C>) -> Result<Polynomial<C>> {
        let mut out = self.clone();
        out.add_scaled(&C::one(), other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial<C>) -> Result<Polynomial<C>> {
        let mut out = self.clone();
        out.add_scaled(&-C::one(), other)?;
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial<C>) -> Result<Polynomial<C>> {
        check_dims(self.n, other.n)?;
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial<C>> {
        check_dims(self.n, m.n())?;
        Ok(Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.mul(m), c.clone()))
                .collect(),
        })
    }

    pub fn scale(&self, c: &C) -> Polynomial<C> {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), c.clone() * a.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Polynomial<C> {
        self.scale(&-C::one())
    }

    pub fn pow(&self, exp: u32) -> Polynomial<C> {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Rebuilds the polynomial with every monomial passed through `f`.
    ///
    /// `f` must be injective on the support, which holds for the group action.
    pub(crate) fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Polynomial<C> {
        let terms: BTreeMap<_, _> = self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect();
        debug_assert_eq!(terms.len(), self.terms.len());
        Polynomial { n: self.n, terms }
    }
}

/// The `i`-th elementary symmetric polynomial in `n` variables.
pub fn elementary_symmetric<C: Coefficient>(n: usize, i: usize) -> Result<Polynomial<C>> {
    if n == 0 || i == 0 || i > n {
        return Err(Error::InvalidArgument(format!(
            "elementary symmetric index {i} outside 1..={n}"
        )));
    }
    let mut p = Polynomial::zero(n);
    // Walk all 0/1 vectors with exactly i ones.
    let mut chosen: Vec<usize> = (0..i).collect();
    loop {
        let mut exps = vec![0u32; n];
        for &c in &chosen {
            exps[c] = 1;
        }
        p.add_term(Monomial::from_vec_unchecked(exps), C::one());

        let mut k = i;
        while k > 0 && chosen[k - 1] == n - i + (k - 1) {
            k -= 1;
        }
        if k == 0 {
            break;
        }
        chosen[k - 1] += 1;
        for j in k..i {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
    Ok(p)
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_polynomial(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

/// Wire form `{"n": 3, "terms": [{"coeff": "3", "exps": [2,1,0]}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl<C: Coefficient> From<&Polynomial<C>> for PolynomialJson {
    fn from(p: &Polynomial<C>) -> Self {
        PolynomialJson {
            n: p.n,
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    coeff: c.to_decimal(),
                    exps: m.exps().to_vec(),
                })
                .collect(),
        }
    }
}

impl<C: Coefficient> TryFrom<PolynomialJson> for Polynomial<C> {
    type Error = Error;

    fn try_from(wire: PolynomialJson) -> Result<Self> {
        let n = wire.n;
        let terms = wire
            .terms
            .into_iter()
            .map(|t| {
                let c = C::from_decimal(&t.coeff)
                    .ok_or_else(|| Error::Json(format!("bad coefficient {:?}", t.coeff)))?;
                check_dims(n, t.exps.len())?;
                Ok((Monomial::new(t.exps)?, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(n, terms)
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolynomialJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: PolynomialJson = serde_json::from_str(text)?;
        wire.try_into()
    }
}
