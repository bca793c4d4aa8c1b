use std::cmp::Ordering;
use std::fmt;

use crate::error::{check_dims, Error, Result};

/// An x-monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
///
/// The derived `Ord` is the lexicographic order read from `x1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::InvalidArgument(
                "a monomial needs at least one variable".into(),
            ));
        }
        Ok(Monomial { exps })
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        assert!(n > 0, "a monomial needs at least one variable");
        Monomial { exps: vec![0; n] }
    }

    /// `x_{index+1}` in `n` variables.
    pub fn variable(n: usize, index: usize) -> Self {
        let mut m = Monomial::one(n);
        m.exps[index] = 1;
        m
    }

    pub(crate) fn from_vec_unchecked(exps: Vec<u32>) -> Self {
        debug_assert!(!exps.is_empty());
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.n() != other.n() {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { exps })
    }
}

/// Lexicographic comparison from `x1` onwards.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_dims(a.n(), b.n())?;
    Ok(a.exps.cmp(&b.exps))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec()).unwrap()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&m(&[2, 0]), &m(&[1, 1])), Ok(Ordering::Greater));
        assert_eq!(lex_compare(&m(&[1, 1]), &m(&[1, 1])), Ok(Ordering::Equal));
        assert_eq!(lex_compare(&m(&[0, 3, 0]), &m(&[1, 0, 0])), Ok(Ordering::Less));
    }

    #[test]
    fn lex_dimension_error() {
        assert_eq!(
            lex_compare(&m(&[1, 0]), &m(&[1, 0, 0])),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn empty_rejected() {
        assert!(Monomial::new(vec![]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(m(&[2, 1, 0]).to_string(), "x1^2*x2");
        assert_eq!(m(&[0, 0]).to_string(), "1");
        assert_eq!(m(&[0, 0, 1]).to_string(), "x3");
    }

    #[test]
    fn division() {
        assert_eq!(m(&[2, 1]).div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[2, 0]).div(&m(&[1, 1])), None);
    }
}
