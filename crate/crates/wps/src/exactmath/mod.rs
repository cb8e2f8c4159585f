//! Exact scalars (rationals and prime fields) and dense univariate
//! polynomials over them.

mod prime;
mod scalar;
mod upoly;

pub use prime::is_prime;
pub use scalar::{Field, PrimeFieldElem, Rational, Scalar};
pub use upoly::UPolynomial;

/// Monic gcd of two univariate polynomials over the same field.
pub fn upoly_gcd(a: &UPolynomial, b: &UPolynomial) -> crate::Result<UPolynomial> {
    a.gcd(b)
}

/// Distinct roots of `g` in the algebraic closure, optionally ignoring `0`.
pub fn distinct_root_count(g: &UPolynomial, exclude_zero: bool) -> crate::Result<usize> {
    g.distinct_root_count(exclude_zero)
}
