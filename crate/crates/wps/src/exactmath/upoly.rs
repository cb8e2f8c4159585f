use std::fmt;

use crate::error::{Error, Result};

use super::scalar::{Field, Scalar};

/// Dense univariate polynomial, constant term first.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPolynomial {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UPolynomial {
    pub fn new(field: Field, coeffs: Vec<Scalar>) -> Result<Self> {
        for c in &coeffs {
            field.ensure_same(c.field())?;
        }
        Ok(Self::from_trusted(field, coeffs))
    }

    pub(crate) fn from_trusted(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UPolynomial { field, coeffs }
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        Self::from_trusted(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Self {
        UPolynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::from_trusted(field, vec![field.one()])
    }

    /// The monomial `c * λ^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::from_trusted(field, coeffs)
    }

    /// `∏ (λ - r)` over the given roots, with repetition.
    pub fn from_roots(field: Field, roots: &[Scalar]) -> Self {
        roots.iter().fold(Self::one(field), |acc, r| {
            acc.mul(&Self::from_trusted(field, vec![-r, field.one()]))
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `λ^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Self::from_trusted(self.field, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        Self::from_trusted(self.field, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_trusted(self.field, out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_trusted(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead_inv = divisor.leading()?.inv()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = &rem[idx] - &(&c * b);
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Some((
            Self::from_trusted(self.field, quot),
            Self::from_trusted(self.field, rem),
        ))
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading().and_then(Scalar::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul_u64(k as u64))
            .collect();
        Self::from_trusted(self.field, coeffs)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(other.field)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic product of the distinct irreducible factors.
    ///
    /// `f / gcd(f, f')` keeps every factor whose multiplicity is prime to
    /// the characteristic; the rest lives in the gcd. When `f' = 0` over
    /// `F_p`, `f(x) = h(x^p) = h(x)^p` since coefficients are their own
    /// `p`-th powers.
    pub fn radical(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Self::one(self.field));
        }
        let df = self.derivative();
        if df.is_zero() {
            let p = self.field.modulus().expect("only F_p has nonconstant f with f' = 0") as usize;
            let root: Vec<Scalar> = self.coeffs.iter().step_by(p).cloned().collect();
            return Self::from_trusted(self.field, root).radical();
        }
        let g = self.gcd(&df)?;
        let (w, _) = self.div_rem(&g).expect("gcd is nonzero");
        let rg = g.radical()?;
        let common = w.gcd(&rg)?;
        let (extra, _) = rg.div_rem(&common).expect("gcd is nonzero");
        Ok(w.mul(&extra).monic())
    }

    /// Number of distinct roots in the algebraic closure, `deg rad(g)`.
    /// With `exclude_zero` the root `λ = 0` is not counted.
    pub fn distinct_root_count(&self, exclude_zero: bool) -> Result<usize> {
        let mut count = self.radical()?.degree().unwrap_or(0);
        if exclude_zero && self.coeffs[0].is_zero() {
            count -= 1;
        }
        Ok(count)
    }

    /// No repeated root in the algebraic closure.
    pub fn is_squarefree(&self) -> Result<bool> {
        Ok(self.radical()?.degree() == self.degree())
    }

    /// Renders with the given variable name, ascending powers.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{abs}*{power}"));
            }
        }
        out
    }
}

impl fmt::Display for UPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn q(c: &[i64]) -> UPolynomial {
        UPolynomial::from_i64s(Q, c)
    }

    #[test]
    fn gcd_examples() {
        // λ²−1 and λ−1
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 1])).unwrap(), q(&[-1, 1]));
        assert_eq!(q(&[0, 0, 0, 1]).gcd(&q(&[0, 0, 1])).unwrap(), q(&[0, 0, 1]));
        // remainder of λ²+1 by λ+2 is 5
        assert_eq!(q(&[1, 0, 1]).gcd(&q(&[2, 1])).unwrap(), q(&[1]));
        assert_eq!(q(&[]).gcd(&q(&[])).unwrap(), q(&[]));
    }

    #[test]
    fn gcd_is_monic() {
        assert_eq!(q(&[-2, 2]).gcd(&q(&[0, 3, -3])).unwrap(), q(&[-1, 1]));
    }

    #[test]
    fn gcd_rejects_mixed_fields() {
        let a = UPolynomial::from_i64s(Field::Prime(5), &[1, 1]);
        assert!(matches!(q(&[1, 1]).gcd(&a), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn distinct_roots_examples() {
        let g = q(&[0, 0, -1, 1]); // λ²(λ−1)
        assert_eq!(g.distinct_root_count(false).unwrap(), 2);
        assert_eq!(g.distinct_root_count(true).unwrap(), 1);
        assert_eq!(q(&[1, 0, 0, 0, 1]).distinct_root_count(false).unwrap(), 4);
        assert_eq!(q(&[]).distinct_root_count(false), Err(Error::ZeroPolynomial));
        assert_eq!(q(&[7]).distinct_root_count(true).unwrap(), 0);
    }

    #[test]
    fn division_reconstructs() {
        let a = q(&[3, -1, 4, 1, -5, 9]);
        let b = q(&[2, 6, -5]);
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn display_ascending() {
        assert_eq!(q(&[1, 0, 0, 0, 0, 0, -1]).to_string(), "1 - t^6");
        assert_eq!(q(&[0, -2, 1]).display_with("λ"), "-2*λ + λ^2");
        assert_eq!(q(&[]).to_string(), "0");
    }

    #[test]
    fn inseparable_multiplicities() {
        let f2 = Field::prime(2).unwrap();
        // λ^2 (λ + 1): the square has zero derivative in characteristic 2
        let g = UPolynomial::from_i64s(f2, &[0, 0, 1, 1]);
        assert_eq!(g.radical().unwrap(), UPolynomial::from_i64s(f2, &[0, 1, 1]));
        assert_eq!(g.distinct_root_count(false).unwrap(), 2);
        assert!(!g.is_squarefree().unwrap());
        // λ^5 - 2 = (λ - 2)^5 over F_5
        let f5 = Field::prime(5).unwrap();
        let h = UPolynomial::from_i64s(f5, &[-2, 0, 0, 0, 0, 1]);
        assert_eq!(h.distinct_root_count(false).unwrap(), 1);
    }
}
