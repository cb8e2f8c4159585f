//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Variables are `x0`…`x9` by index or a name from the ambient variable
//! list. Multiplication must be written out.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{Field, Rational, UPolynomial};
use crate::weights::Weight;
use crate::wpoly::{default_names, WPolynomial};

type Sparse = BTreeMap<Vec<u32>, Rational>;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn constant(&self, q: Rational) -> Sparse {
        let mut s = Sparse::new();
        if !q.is_zero() {
            s.insert(vec![0; self.names.len()], q);
        }
        s
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = add(acc, t, false);
                }
                Some('-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = add(acc, t, true);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.bump();
            let rhs = self.unary()?;
            acc = mul(&acc, &rhs);
        }
        match self.peek() {
            Some(c) if c.is_alphanumeric() || c == '(' => {
                self.err("implicit multiplication is not allowed; write `*`")
            }
            _ => Ok(acc),
        }
    }

    fn unary(&mut self) -> Result<Sparse> {
        if self.peek() == Some('-') {
            self.bump();
            let inner = self.unary()?;
            return Ok(inner.into_iter().map(|(e, c)| (e, -c)).collect());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let k = self.integer()?;
            let k: u32 = match k.try_into() {
                Ok(k) => k,
                Err(_) => return self.err("exponent too large"),
            };
            let one = self.constant(Rational::one());
            return Ok((0..k).fold(one, |acc, _| mul(&acc, &base)));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut q = Rational::from_integer(num);
                if self.peek() == Some('/') {
                    self.bump();
                    self.skip_ws();
                    let den = self.integer()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    q /= Rational::from_integer(den);
                }
                Ok(self.constant(q))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.src[self.pos..].starts_with(|c: char| c.is_alphanumeric() || c == '_') {
                    self.bump();
                }
                let ident = &self.src[start..self.pos];
                let index = self.resolve(ident)?;
                let mut e = vec![0; self.names.len()];
                e[index] = 1;
                Ok(Sparse::from([(e, Rational::one())]))
            }
            Some(c) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }

    fn resolve(&self, ident: &str) -> Result<usize> {
        if let Some(i) = self.names.iter().position(|n| n == ident) {
            return Ok(i);
        }
        if let Some(rest) = ident.strip_prefix('x') {
            if rest.len() == 1 {
                if let Ok(i) = rest.parse::<usize>() {
                    if i < self.names.len() {
                        return Ok(i);
                    }
                }
            }
        }
        Err(Error::UnknownVariable(ident.to_string()))
    }
}

fn add(mut a: Sparse, b: Sparse, negate: bool) -> Sparse {
    for (e, c) in b {
        let c = if negate { -c } else { c };
        let entry = a.entry(e.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            a.remove(&e);
        }
    }
    a
}

fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
            out = add(out, Sparse::from([(e, c1 * c2)]), false);
        }
    }
    out
}

fn parse_sparse(text: &str, names: &[String]) -> Result<Sparse> {
    let mut p = Parser { src: text, pos: 0, names };
    let s = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(s)
}

/// Parses with the default variable names for the weight's length.
pub fn parse_polynomial(text: &str, weight: &Weight, field: Field) -> Result<WPolynomial> {
    parse_polynomial_with_names(text, weight, field, &default_names(weight.len()))
}

pub fn parse_polynomial_with_names(
    text: &str,
    weight: &Weight,
    field: Field,
    names: &[String],
) -> Result<WPolynomial> {
    if names.len() != weight.len() {
        return Err(Error::ArityMismatch { expected: weight.len(), got: names.len() });
    }
    let sparse = parse_sparse(text, names)?;
    let terms = sparse
        .into_iter()
        .map(|(e, q)| field.from_rational(&q).map(|c| (e, c)))
        .collect::<Result<Vec<_>>>()?;
    WPolynomial::from_terms(weight.clone(), field, terms)
}

/// Parses a univariate polynomial in `var` over the rationals.
pub fn parse_univariate(text: &str, var: &str) -> Result<UPolynomial> {
    let sparse = parse_sparse(text, &[var.to_string()])?;
    let degree = sparse.keys().map(|e| e[0] as usize).max().unwrap_or(0);
    let mut coeffs = vec![Field::Rational.zero(); degree + 1];
    for (e, q) in sparse {
        coeffs[e[0] as usize] = crate::exactmath::Scalar::Rational(q);
    }
    UPolynomial::new(Field::Rational, coeffs)
}
