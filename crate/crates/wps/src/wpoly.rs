//! Polynomials in `k_a[x_0, …, x_n]`: sparse maps from exponent vectors to
//! nonzero coefficients, tagged with the weight that grades them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar, UPolynomial};
use crate::weights::Weight;

/// Exponent vector, one entry per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable `x_i` among `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn weighted_degree(&self, a: &Weight) -> u64 {
        self.0.iter().zip(a.entries()).map(|(&e, &w)| e as u64 * w).sum()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self >= other`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// `self / other`, assuming divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Default variable names for `n` variables: `x`, `x y`, `x y z`, `w x y z`,
/// and `x0 … x{n-1}` beyond that.
pub fn default_names(n: usize) -> Vec<String> {
    let letters: &[&str] = match n {
        1 => &["x"],
        2 => &["x", "y"],
        3 => &["x", "y", "z"],
        4 => &["w", "x", "y", "z"],
        _ => return (0..n).map(|i| format!("x{i}")).collect(),
    };
    letters.iter().map(|s| s.to_string()).collect()
}

/// A polynomial over an exact field, graded by its weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WPolynomial {
    weight: Weight,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl WPolynomial {
    pub fn zero(weight: Weight, field: Field) -> Self {
        WPolynomial { weight, field, terms: BTreeMap::new() }
    }

    pub fn constant(weight: Weight, c: Scalar) -> Self {
        let n = weight.len();
        Self::monomial(weight, Monomial::one(n), c)
    }

    pub fn monomial(weight: Weight, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.0.len(), weight.len(), "monomial arity");
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        WPolynomial { weight, field, terms }
    }

    /// `x_i`.
    pub fn var(weight: Weight, field: Field, i: usize) -> Self {
        let n = weight.len();
        Self::monomial(weight, Monomial::var(n, i), field.one())
    }

    /// Builds from `(exponents, coefficient)` pairs, combining like terms.
    pub fn from_terms(
        weight: Weight,
        field: Field,
        terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(weight, field);
        for (e, c) in terms {
            if e.len() != p.weight.len() {
                return Err(Error::ArityMismatch { expected: p.weight.len(), got: e.len() });
            }
            field.ensure_same(c.field())?;
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    /// Integer-coefficient shorthand used heavily in tests and examples.
    pub fn from_int_terms(weight: Weight, field: Field, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            weight,
            field,
            terms.iter().map(|(e, c)| (e.to_vec(), field.from_i64(*c))),
        )
        .expect("well-shaped integer terms")
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.weight.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    /// Terms in canonical order: weighted degree first, then exponents
    /// lexicographically, both descending.
    pub fn terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(m1, _), (m2, _)| self.term_order(m2, m1));
        v
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    fn term_order(&self, m1: &Monomial, m2: &Monomial) -> Ordering {
        m1.weighted_degree(&self.weight)
            .cmp(&m2.weighted_degree(&self.weight))
            .then_with(|| m1.cmp(m2))
    }

    /// Same polynomial read under a different weight of the same length.
    pub fn with_weight(&self, weight: Weight) -> Result<Self> {
        if weight.len() != self.weight.len() {
            return Err(Error::ArityMismatch { expected: self.weight.len(), got: weight.len() });
        }
        Ok(WPolynomial { weight, field: self.field, terms: self.terms.clone() })
    }

    fn ensure_compatible(&self, other: &Self) -> Result<()> {
        self.field.ensure_same(other.field)?;
        if self.weight != other.weight {
            return Err(Error::Mismatch(format!(
                "weights {} and {} differ",
                self.weight, other.weight
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        WPolynomial {
            weight: self.weight.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        let mut out = Self::zero(self.weight.clone(), self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let one = Self::constant(self.weight.clone(), self.field.one());
        (0..k).fold(one, |acc, _| acc.mul(self).expect("same ring"))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.weight.clone(), self.field);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// Largest weighted degree of any term; constants have degree 0.
    pub fn weighted_degree(&self) -> Result<u64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(&self.weight))
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// The common weighted degree when every term agrees, `None` otherwise.
    pub fn is_weighted_homogeneous(&self) -> Result<Option<u64>> {
        let mut degrees = self.terms.keys().map(|m| m.weighted_degree(&self.weight));
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        Ok(degrees.all(|d| d == first).then_some(first))
    }

    pub(crate) fn homogeneous_degree(&self) -> Result<u64> {
        self.is_weighted_homogeneous()?.ok_or(Error::NotHomogeneous)
    }

    /// Splits into weighted-homogeneous parts keyed by degree.
    pub fn graded_decompose(&self) -> Result<BTreeMap<u64, WPolynomial>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut parts: BTreeMap<u64, WPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.weighted_degree(&self.weight))
                .or_insert_with(|| Self::zero(self.weight.clone(), self.field))
                .add_term(m.clone(), c.clone());
        }
        Ok(parts)
    }

    /// Formal partial derivative in `x_i`.
    pub fn partial(&self, i: usize) -> Result<Self> {
        if i >= self.nvars() {
            return Err(Error::IndexOutOfRange { index: i, len: self.nvars() });
        }
        let mut out = Self::zero(self.weight.clone(), self.field);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] -= 1;
            out.add_term(dm, c.mul_u64(e as u64));
        }
        Ok(out)
    }

    /// Value at an affine-cone point.
    pub fn evaluate(&self, coords: &[Scalar]) -> Result<Scalar> {
        if coords.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), got: coords.len() });
        }
        for c in coords {
            self.field.ensure_same(c.field())?;
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in coords.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// The substitution `x_i ↦ y_i^{a_i}`, landing in the straight ring.
    pub fn power_substitute(&self) -> Result<Self> {
        self.homogeneous_degree()?;
        let a = self.weight.entries();
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.0.iter().zip(a).map(|(&e, &w)| e * w as u32).collect();
            (e, c.clone())
        });
        Self::from_terms(Weight::straight(self.nvars()), self.field, terms)
    }

    /// For three variables: set `x_i = 0`, `x_{i+1} = 1`, `x_{i+2} = λ`
    /// (indices mod 3) and read off the univariate polynomial in `λ`.
    pub fn restrict_to_edge(&self, i: usize) -> Result<UPolynomial> {
        if self.nvars() != 3 {
            return Err(Error::ArityMismatch { expected: 3, got: self.nvars() });
        }
        if i >= 3 {
            return Err(Error::IndexOutOfRange { index: i, len: 3 });
        }
        let lam = (i + 2) % 3;
        let mut coeffs: Vec<Scalar> = Vec::new();
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                continue;
            }
            let k = m.0[lam] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, self.field.zero());
            }
            coeffs[k] = &coeffs[k] + c;
        }
        UPolynomial::new(self.field, coeffs)
    }

    /// Reduction of a rational polynomial into `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        let target = Field::prime(p)?;
        let mut out = Self::zero(self.weight.clone(), target);
        for (m, c) in &self.terms {
            let q = c.as_rational().ok_or(Error::FieldMismatch {
                left: self.field.to_string(),
                right: Field::Rational.to_string(),
            })?;
            out.add_term(m.clone(), target.from_rational(q)?);
        }
        Ok(out)
    }

    /// Rewrites exponents through `f`, keeping coefficients. Terms that
    /// collide are combined.
    pub(crate) fn map_monomials(&self, weight: Weight, f: impl Fn(&Monomial) -> Monomial) -> Self {
        let mut out = Self::zero(weight, self.field);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Renders with explicit variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.display_with(names));
            } else {
                out.push_str(&format!("{abs}*{}", m.display_with(names)));
            }
        }
        out
    }
}

impl fmt::Display for WPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&default_names(self.nvars())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn w(e: &[u64]) -> Weight {
        Weight::new(e.to_vec()).unwrap()
    }

    fn fermat_like() -> WPolynomial {
        // x^5 + y^3 + z^2 in weight (12,20,30)
        WPolynomial::from_int_terms(w(&[12, 20, 30]), Q, &[(&[5, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 2], 1)])
    }

    fn example_121() -> WPolynomial {
        // x^4 + y^4 + z^2 + xyz in weight (1,1,2)
        WPolynomial::from_int_terms(
            w(&[1, 1, 2]),
            Q,
            &[(&[4, 0, 0], 1), (&[0, 4, 0], 1), (&[0, 0, 2], 1), (&[1, 1, 1], 1)],
        )
    }

    #[test]
    fn degrees() {
        let f = WPolynomial::from_int_terms(w(&[1, 2]), Q, &[(&[2, 0], 1), (&[0, 2], 1)]);
        assert_eq!(f.weighted_degree().unwrap(), 4);
        assert_eq!(fermat_like().weighted_degree().unwrap(), 60);
        assert_eq!(WPolynomial::constant(w(&[1, 2]), Q.from_i64(7)).weighted_degree().unwrap(), 0);
        assert_eq!(WPolynomial::zero(w(&[1, 2]), Q).weighted_degree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(fermat_like().is_weighted_homogeneous().unwrap(), Some(60));
        // w^4 + y in weight (1,3,3,4), variables (w,x,y,z)
        let g = WPolynomial::from_int_terms(w(&[1, 3, 3, 4]), Q, &[(&[4, 0, 0, 0], 1), (&[0, 0, 1, 0], 1)]);
        assert_eq!(g.is_weighted_homogeneous().unwrap(), None);
        let single = WPolynomial::from_int_terms(w(&[1, 3, 3, 4]), Q, &[(&[1, 1, 0, 2], 5)]);
        assert_eq!(single.is_weighted_homogeneous().unwrap(), Some(12));
    }

    #[test]
    fn decomposition_into_three_parts() {
        let f = WPolynomial::from_int_terms(w(&[1, 2]), Q, &[(&[2, 0], 1), (&[0, 2], 1), (&[1, 0], 1)]);
        let parts = f.graded_decompose().unwrap();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(parts[&1].to_string(), "x");
        assert_eq!(parts[&2].to_string(), "x^2");
        assert_eq!(parts[&4].to_string(), "y^2");
        let lin = WPolynomial::from_int_terms(w(&[1, 1]), Q, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(lin.graded_decompose().unwrap().len(), 1);
    }

    #[test]
    fn partials() {
        assert_eq!(fermat_like().partial(0).unwrap().to_string(), "5*x^4");
        assert_eq!(example_121().partial(2).unwrap().to_string(), "x*y + 2*z");
        let c = WPolynomial::constant(w(&[1, 1]), Q.from_i64(3));
        assert!(c.partial(0).unwrap().is_zero());
        assert!(c.partial(2).is_err());
    }

    #[test]
    fn partial_reduces_mod_p() {
        let f = WPolynomial::from_int_terms(w(&[1, 1]), Q, &[(&[5, 0], 1), (&[1, 1], 3)]);
        // 5x^4 vanishes mod 5
        let d = f.reduce_mod(5).unwrap().partial(0).unwrap();
        assert_eq!(d.to_string(), "3*y");
    }

    #[test]
    fn evaluation() {
        let f = fermat_like();
        assert!(f.evaluate(&[Q.zero(), Q.zero(), Q.zero()]).unwrap().is_zero());
        assert!(f.evaluate(&[Q.one(), Q.zero(), Q.zero()]).unwrap().is_one());
        assert!(f.evaluate(&[Q.one()]).is_err());
        let f7 = Field::Prime(7);
        assert!(matches!(
            f.evaluate(&[f7.one(), f7.one(), f7.one()]),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn power_substitution() {
        assert_eq!(example_121().power_substitute().unwrap().to_string(), "x^4 + x*y*z^2 + y^4 + z^4");
        assert_eq!(fermat_like().power_substitute().unwrap().to_string(), "x^60 + y^60 + z^60");
        let straight = WPolynomial::from_int_terms(w(&[1, 1, 1]), Q, &[(&[1, 1, 0], 2), (&[0, 0, 2], 1)]);
        assert_eq!(straight.power_substitute().unwrap(), straight);
        let bad = WPolynomial::from_int_terms(w(&[1, 2]), Q, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(bad.power_substitute(), Err(Error::NotHomogeneous));
    }

    #[test]
    fn edge_restrictions() {
        let cover = example_121().power_substitute().unwrap();
        let expected = UPolynomial::from_i64s(Q, &[1, 0, 0, 0, 1]);
        assert_eq!(cover.restrict_to_edge(2).unwrap(), expected);
        assert_eq!(cover.restrict_to_edge(0).unwrap(), expected);
        let xy = WPolynomial::from_int_terms(w(&[1, 1, 1]), Q, &[(&[1, 1, 0], 1)]);
        assert!(xy.restrict_to_edge(0).unwrap().is_zero());
    }

    #[test]
    fn display_signs_and_rationals() {
        let f = WPolynomial::from_terms(
            w(&[1, 1]),
            Q,
            vec![
                (vec![1, 1], Scalar::Rational(crate::Rational::new(2.into(), 3.into()))),
                (vec![0, 0], Q.from_i64(-1)),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "2/3*x*y - 1");
    }
}
