use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::prime::{inv_mod, is_prime, mul_mod, pow_mod};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `F_p`, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime(PrimeFieldElem::new(n.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// Image of a rational in this field. Fails over `F_p` when `p` divides
    /// the denominator.
    pub fn from_rational(self, q: &Rational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let big_p = BigInt::from(p);
                let reduce = |n: &BigInt| -> u64 {
                    let r = ((n % &big_p) + &big_p) % &big_p;
                    r.to_u64().expect("residue fits in u64")
                };
                let den = reduce(q.denom());
                if den == 0 {
                    return Err(Error::Unsupported(format!(
                        "{p} divides the denominator of {q}"
                    )));
                }
                let num = reduce(q.numer());
                let inv = inv_mod(den, p).expect("nonzero residue is invertible");
                Ok(Scalar::Prime(PrimeFieldElem::new(mul_mod(num, inv, p), p)))
            }
        }
    }

    /// All elements of a prime field in residue order. Empty over the rationals.
    pub fn elements(self) -> Vec<Scalar> {
        match self {
            Field::Rational => Vec::new(),
            Field::Prime(p) => (0..p).map(|r| Scalar::Prime(PrimeFieldElem::new(r, p))).collect(),
        }
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }

    pub(crate) fn ensure_same(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Residue modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElem {
    pub(crate) fn new(residue: u64, modulus: u64) -> Self {
        debug_assert!(residue < modulus);
        PrimeFieldElem { residue, modulus }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// A field element over one of the supported fields.
///
/// Arithmetic operators panic when the operands belong to different fields;
/// public entry points check fields up front and report
/// [`Error::FieldMismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Prime(PrimeFieldElem),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime(e) => Field::Prime(e.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime(e) => e.residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime(e) => e.residue == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) if q.is_zero() => None,
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Prime(e) => inv_mod(e.residue, e.modulus)
                .map(|r| Scalar::Prime(PrimeFieldElem::new(r, e.modulus))),
        }
    }

    /// Exact division; `None` when dividing by zero.
    pub fn div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, exp: u64) -> Scalar {
        match self {
            Scalar::Rational(q) => {
                let mut acc = Rational::one();
                let mut base = q.clone();
                let mut e = exp;
                while e > 0 {
                    if e & 1 == 1 {
                        acc *= &base;
                    }
                    base = &base * &base;
                    e >>= 1;
                }
                Scalar::Rational(acc)
            }
            Scalar::Prime(x) => Scalar::Prime(PrimeFieldElem::new(
                pow_mod(x.residue, exp, x.modulus),
                x.modulus,
            )),
        }
    }

    /// Multiplies by a machine integer, reducing in the field.
    pub fn mul_u64(&self, k: u64) -> Scalar {
        let f = self.field();
        let k = match f {
            Field::Rational => Scalar::Rational(Rational::from_integer(BigInt::from(k))),
            Field::Prime(p) => Scalar::Prime(PrimeFieldElem::new(k % p, p)),
        };
        self * &k
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Prime(_) => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Prime(e) => Some(e.residue),
        }
    }

    /// Integer value if this is a rational with denominator one.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(q) if q.is_integer() => Some(q.numer().clone()),
            _ => None,
        }
    }

    pub(crate) fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }

    /// Ordering key used for canonical representatives over `F_p`.
    pub(crate) fn sort_key(&self) -> u64 {
        self.residue().unwrap_or(0)
    }
}

fn binop(
    a: &Scalar,
    b: &Scalar,
    q: impl FnOnce(&Rational, &Rational) -> Rational,
    m: impl FnOnce(u64, u64, u64) -> u64,
) -> Scalar {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(q(x, y)),
        (Scalar::Prime(x), Scalar::Prime(y)) if x.modulus == y.modulus => {
            Scalar::Prime(PrimeFieldElem::new(m(x.residue, y.residue, x.modulus), x.modulus))
        }
        _ => panic!("field mismatch: {} vs {}", a.field(), b.field()),
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x + y, |x, y, p| {
            ((x as u128 + y as u128) % p as u128) as u64
        })
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x - y, |x, y, p| {
            ((x as u128 + p as u128 - y as u128) % p as u128) as u64
        })
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x * y, mul_mod)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime(e) => Scalar::Prime(PrimeFieldElem::new(
                (e.modulus - e.residue) % e.modulus,
                e.modulus,
            )),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Prime(e) => write!(f, "{}", e.residue),
        }
    }
}
