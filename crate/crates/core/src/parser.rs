//! Text forms of polynomials, monomials and permutations.
//!
//! ```text
//! poly := ['+'|'-'] term (('+'|'-') term)*
//! term := [integer] ('*'? var)*
//! var  := 'x' index ('^' exponent)?
//! ```
//!
//! Whitespace may appear between tokens.

use crate::coeff::Coefficient;
use crate::error::{Error, ParseDiagnostic, Result};
use crate::monomial::Monomial;
use crate::perm::Permutation;
use crate::poly::Polynomial;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    /// A run of ASCII digits at the current position (no whitespace skip).
    fn digits(&mut self) -> Option<(usize, &'a str)> {
        let start = self.pos;
        let len = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.text[start..start + len]))
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn error(&self, expected: &str) -> Error {
        self.error_at(self.pos, expected)
    }

    fn error_at(&self, offset: usize, expected: &str) -> Error {
        let found: String = self.text[offset..].chars().take(12).collect();
        Error::Parse(ParseDiagnostic {
            offset,
            expected: expected.to_string(),
            found: if found.is_empty() {
                "end of input".to_string()
            } else {
                format!("{found:?}")
            },
        })
    }
}

pub fn parse_polynomial<C: Coefficient>(text: &str, n: usize) -> Result<Polynomial<C>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut cur = Cursor::new(text);
    let mut out = Polynomial::zero(n);
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (m, c) = parse_term::<C>(&mut cur, n)?;
        out.add_term(m, if negative { -c } else { c });
        if cur.at_end() {
            return Ok(out);
        }
        negative = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            false
        } else {
            return Err(cur.error("'+', '-', '*' or a variable"));
        };
    }
}

fn parse_term<C: Coefficient>(cur: &mut Cursor<'_>, n: usize) -> Result<(Monomial, C)> {
    cur.skip_ws();
    let integer = cur.digits();
    let coeff = match integer {
        Some((_, digits)) => C::from_decimal(digits).expect("ascii digits parse"),
        None => C::one(),
    };
    let mut has_content = integer.is_some();
    let mut exps = vec![0u32; n];
    loop {
        cur.skip_ws();
        let star_at = cur.pos;
        let starred = cur.eat('*');
        if starred && !has_content {
            return Err(cur.error_at(star_at, "an integer or a variable"));
        }
        cur.skip_ws();
        if cur.peek() != Some('x') {
            if starred || !has_content {
                return Err(cur.error("a variable like x1"));
            }
            break;
        }
        cur.pos += 1;
        let (index_at, index) = cur
            .digits()
            .ok_or_else(|| cur.error("a variable index"))?;
        let index: usize = index
            .parse()
            .map_err(|_| cur.error_at(index_at, "a variable index that fits in usize"))?;
        if index == 0 || index > n {
            return Err(Error::VariableOutOfRange { index, n });
        }
        let mut power = 1u32;
        if cur.eat('^') {
            cur.skip_ws();
            let (at, digits) = cur.digits().ok_or_else(|| cur.error("an exponent"))?;
            power = digits
                .parse()
                .map_err(|_| cur.error_at(at, "an exponent that fits in 32 bits"))?;
        }
        exps[index - 1] = exps[index - 1]
            .checked_add(power)
            .ok_or_else(|| cur.error("an exponent that fits in 32 bits"))?;
        has_content = true;
    }
    Ok((Monomial::from_vec_unchecked(exps), coeff))
}

/// A single monomial with coefficient one, e.g. `x2^2*x3^3` or `1`.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let p: Polynomial<num_bigint::BigInt> = parse_polynomial(text, n)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if c == &num_bigint::BigInt::from(1) => Ok(m.clone()),
        _ => Err(Error::InvalidArgument(format!(
            "{text:?} is not a single monomial with coefficient 1"
        ))),
    }
}

/// Canonical text: lex-descending terms, `^1` and unit coefficients elided.
pub fn render_polynomial<C: Coefficient>(u: &Polynomial<C>) -> String {
    let mut out = String::new();
    for (m, c) in u.terms() {
        let negative = c.is_negative();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&magnitude.to_decimal());
        } else if magnitude.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&format!("{}*{m}", magnitude.to_decimal()));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Disjoint cycle notation such as `(1 2)(3 4)`; entries may be separated
/// by spaces or commas and written `3` or `x3`. Empty input is the identity.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut cur = Cursor::new(text);
    let mut images: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    while !cur.at_end() {
        if !cur.eat('(') {
            return Err(cur.error("'('"));
        }
        let mut cycle = Vec::new();
        loop {
            if cur.eat(')') {
                break;
            }
            if !cycle.is_empty() {
                cur.eat(',');
            }
            cur.skip_ws();
            if cur.peek() == Some('x') {
                cur.pos += 1;
            }
            let (at, digits) = cur.digits().ok_or_else(|| cur.error("a point or ')'"))?;
            let point: usize = digits
                .parse()
                .map_err(|_| cur.error_at(at, "a point that fits in usize"))?;
            if point == 0 || point > n {
                return Err(Error::InvalidPermutation(format!(
                    "point {point} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut used[point - 1], true) {
                return Err(Error::InvalidPermutation(format!(
                    "cycles overlap at point {point}"
                )));
            }
            cycle.push(point - 1);
        }
        for (i, &p) in cycle.iter().enumerate() {
            images[p] = cycle[(i + 1) % cycle.len()];
        }
    }
    Permutation::from_zero_based(images)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec()).unwrap()
    }

    fn parse(text: &str, n: usize) -> Result<Polynomial> {
        parse_polynomial(text, n)
    }

    #[test]
    fn parse_examples() {
        let u = parse("3*x1^2*x2 - x3", 3).unwrap();
        assert_eq!(u.len(), 2);
        assert_eq!(u.coeff(&m(&[2, 1, 0])), Some(&BigInt::from(3)));
        assert_eq!(u.coeff(&m(&[0, 0, 1])), Some(&BigInt::from(-1)));

        let u = parse("x1 + x1", 2).unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(u.coeff(&m(&[1, 0])), Some(&BigInt::from(2)));

        assert_eq!(parse("x4", 3), Err(Error::VariableOutOfRange { index: 4, n: 3 }));
        assert_eq!(parse("x0", 3), Err(Error::VariableOutOfRange { index: 0, n: 3 }));
    }

    #[test]
    fn parse_variants() {
        assert_eq!(parse("0", 2).unwrap(), Polynomial::zero(2));
        assert_eq!(parse(" - 5 ", 2).unwrap(), Polynomial::constant(2, BigInt::from(-5)));
        assert_eq!(parse("x1^0", 2).unwrap(), Polynomial::one(2));
        assert_eq!(parse("x1x2*x1", 2).unwrap(), parse("x1^2*x2", 2).unwrap());
        assert_eq!(parse("2 x1", 2).unwrap(), parse("2*x1", 2).unwrap());
        assert_eq!(parse("1*x1", 2).unwrap(), parse("x1", 2).unwrap());
        assert_eq!(parse("x1 - x1", 2).unwrap(), Polynomial::zero(2));
        let big = parse("123456789012345678901234567890*x1", 1).unwrap();
        assert_eq!(
            big.coeff(&m(&[1])).unwrap().to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn parse_diagnostics() {
        for (text, offset) in [("", 0), ("x1 +", 4), ("3*", 2), ("2 3", 2), ("x", 1), ("x1^", 3), ("x1 ++ x2", 4), ("*x1", 0)] {
            match parse(text, 2) {
                Err(Error::Parse(d)) => assert_eq!(d.offset, offset, "{text:?}: {d}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(matches!(parse("x1^99999999999", 2), Err(Error::Parse(_))));
    }

    #[test]
    fn render_examples() {
        assert_eq!(render_polynomial(&parse("x1+x2", 2).unwrap()), "x1 + x2");
        assert_eq!(render_polynomial(&parse("-x3 + 3*x2*x1^2", 3).unwrap()), "3*x1^2*x2 - x3");
        assert_eq!(render_polynomial(&parse("-1 - x2", 2).unwrap()), "-x2 - 1");
        assert_eq!(render_polynomial(&Polynomial::<BigInt>::zero(2)), "0");
    }

    #[test]
    fn monomial_parsing() {
        assert_eq!(parse_monomial("x2^2*x3^3", 3).unwrap(), m(&[0, 2, 3]));
        assert_eq!(parse_monomial("1", 3).unwrap(), m(&[0, 0, 0]));
        assert!(parse_monomial("2*x1", 3).is_err());
        assert!(parse_monomial("x1 + x2", 3).is_err());
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(parse_permutation("(1 3)", 3).unwrap().images_one_based(), vec![3, 2, 1]);
        assert_eq!(
            parse_permutation("(1 2)(3 4)", 4).unwrap().images_one_based(),
            vec![2, 1, 4, 3]
        );
        assert_eq!(parse_permutation("(x1, x3)", 3).unwrap().images_one_based(), vec![3, 2, 1]);
        assert!(parse_permutation("", 3).unwrap().is_identity());
        assert!(parse_permutation("()", 3).unwrap().is_identity());
        assert!(matches!(parse_permutation("(1 2)(2 3)", 3), Err(Error::InvalidPermutation(_))));
        assert!(matches!(parse_permutation("(1 4)", 3), Err(Error::InvalidPermutation(_))));
        assert!(matches!(parse_permutation("(1 2", 3), Err(Error::Parse(_))));
        let g = parse_permutation("(1 2 3)", 4).unwrap();
        assert_eq!(parse_permutation(&g.to_string(), 4).unwrap(), g);
    }
}
