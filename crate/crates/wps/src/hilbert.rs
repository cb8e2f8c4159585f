//! Hilbert series `N(t) / ∏(1 − t^{a_i})`, Riemann–Roch ℓ-sequences and
//! numerator recovery.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{Field, UPolynomial};

/// A rational generating function with integer numerator.
///
/// Denominator weights are kept as a plain list: one weight, or none, is
/// allowed here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<i128>,
    denominator: Vec<u64>,
}

fn overflow() -> Error {
    Error::TooLarge("series coefficient exceeds 128 bits".into())
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl HilbertSeries {
    /// `numerator[k]` is the coefficient of `t^k`.
    pub fn new(numerator: Vec<i128>, denominator: Vec<u64>) -> Result<Self> {
        if denominator.contains(&0) {
            return Err(Error::InvalidWeight("denominator weights must be positive".into()));
        }
        Ok(HilbertSeries { numerator: trim(numerator), denominator })
    }

    /// Accepts a rational polynomial whose coefficients are integers.
    pub fn from_polynomial(numerator: &UPolynomial, denominator: Vec<u64>) -> Result<Self> {
        let coeffs = numerator
            .coeffs()
            .iter()
            .map(|c| {
                c.as_integer()
                    .and_then(|n| n.to_i128())
                    .ok_or_else(|| Error::Unsupported(format!("numerator coefficient {c} is not a small integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs, denominator)
    }

    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn numerator_polynomial(&self) -> UPolynomial {
        to_upoly(&self.numerator)
    }

    pub fn denominator(&self) -> &[u64] {
        &self.denominator
    }

    /// Coefficients `c_0 … c_n` of the power series.
    pub fn expand(&self, n: usize) -> Result<Vec<i128>> {
        let mut c = vec![0i128; n + 1];
        for (k, &v) in self.numerator.iter().enumerate().take(n + 1) {
            c[k] = v;
        }
        // dividing by (1 − t^a) is a prefix sum with stride a
        for &a in &self.denominator {
            let a = a as usize;
            for k in a..=n {
                c[k] = c[k].checked_add(c[k - a]).ok_or_else(overflow)?;
            }
        }
        Ok(c)
    }
}

fn to_upoly(coeffs: &[i128]) -> UPolynomial {
    let q = Field::Rational;
    let scalars = coeffs
        .iter()
        .map(|&c| crate::exactmath::Scalar::Rational(crate::Rational::from_integer(c.into())))
        .collect();
    UPolynomial::new(q, scalars).expect("rational coefficients")
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator_polynomial().display_with("t");
        if self.numerator.iter().filter(|&&c| c != 0).count() > 1 {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if self.denominator.is_empty() {
            return Ok(());
        }
        write!(f, " / ")?;
        for &a in &self.denominator {
            if a == 1 {
                write!(f, "(1-t)")?;
            } else {
                write!(f, "(1-t^{a})")?;
            }
        }
        Ok(())
    }
}

/// Multiplies a truncated series by `∏(1 − t^{a_i})`, keeping degrees `0..len`.
fn times_denominator(seq: &[i128], a: &[u64]) -> Result<Vec<i128>> {
    let mut c = seq.to_vec();
    for &w in a {
        let w = w as usize;
        for k in (w..c.len()).rev() {
            c[k] = c[k].checked_sub(c[k - w]).ok_or_else(overflow)?;
        }
    }
    Ok(c)
}

/// Recovers `N(t) = P(t) ∏(1 − t^{a_i})` from the coefficients of `P`.
///
/// The product is computed through degree `max_degree + Σa`; everything past
/// the last nonzero coefficient must vanish there, and that coefficient must
/// sit at or below `max_degree`.
pub fn numerator_from_sequence<F>(seq: F, a: &[u64], max_degree: u64) -> Result<UPolynomial>
where
    F: Fn(u64) -> Result<i128>,
{
    let horizon = max_degree + a.iter().sum::<u64>();
    let values = (0..=horizon).map(&seq).collect::<Result<Vec<_>>>()?;
    let n = trim(times_denominator(&values, a)?);
    if n.len() as u64 > max_degree + 1 {
        return Err(Error::NumeratorNotPolynomial(max_degree));
    }
    Ok(to_upoly(&n))
}

/// Numerator `∏_j (1 − t^{d_j})`.
pub fn complete_intersection_series(a: &[u64], relation_degrees: &[u64]) -> Result<HilbertSeries> {
    let mut num = vec![1i128];
    for &d in relation_degrees {
        if d == 0 {
            return Err(Error::InvalidWeight("relation degrees must be positive".into()));
        }
        let d = d as usize;
        let mut next = vec![0i128; num.len() + d];
        for (k, &c) in num.iter().enumerate() {
            next[k] += c;
            next[k + d] -= c;
        }
        num = next;
    }
    HilbertSeries::new(num, a.to_vec())
}

/// `ℓ(nD)` for a divisor `D` of degree `divisor_degree` on a genus-`g` curve.
///
/// Riemann–Roch fixes `ℓ(nD) = n·deg D + 1 − g` once `n·deg D > 2g − 2`;
/// below that the values depend on the curve and must be supplied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllSequence {
    genus: u64,
    divisor_degree: u64,
    overrides: BTreeMap<u64, u64>,
}

impl EllSequence {
    pub fn new(genus: u64, divisor_degree: u64, overrides: BTreeMap<u64, u64>) -> Result<Self> {
        if divisor_degree == 0 {
            return Err(Error::InvalidWeight("divisor degree must be positive".into()));
        }
        let e = EllSequence { genus, divisor_degree, overrides };
        if let Some(&n) = e.overrides.keys().find(|&&n| !e.is_ambiguous(n)) {
            return Err(Error::InvalidOverride(n));
        }
        Ok(e)
    }

    /// `ℓ(nD) = n` for a point on an elliptic curve (and 1 at n = 0).
    pub fn elliptic() -> Self {
        EllSequence { genus: 1, divisor_degree: 1, overrides: BTreeMap::new() }
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn divisor_degree(&self) -> u64 {
        self.divisor_degree
    }

    pub fn overrides(&self) -> &BTreeMap<u64, u64> {
        &self.overrides
    }

    fn is_ambiguous(&self, n: u64) -> bool {
        n >= 1 && (n * self.divisor_degree) as i128 <= 2 * self.genus as i128 - 2
    }

    pub fn ell(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return Ok(1);
        }
        if self.is_ambiguous(n) {
            return self.overrides.get(&n).copied().ok_or(Error::AmbiguousLowDegree(n));
        }
        Ok(n * self.divisor_degree + 1 - self.genus)
    }

    /// The sequence `n ↦ ℓ(n·kD)`.
    pub fn scaled(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidWeight("scale must be positive".into()));
        }
        let overrides = self
            .overrides
            .iter()
            .filter(|(&n, _)| n % k == 0)
            .map(|(&n, &v)| (n / k, v))
            .collect();
        EllSequence::new(self.genus, self.divisor_degree * k, overrides)
    }

    pub fn series_provider(&self) -> impl Fn(u64) -> Result<i128> + '_ {
        move |n| self.ell(n).map(i128::from)
    }
}

/// One degree of the generator walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscoveryRow {
    pub degree: u64,
    pub ell: u64,
    /// Monomials of this degree in the generators found so far.
    pub products: u64,
    pub new_generators: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discovery {
    pub rows: Vec<DiscoveryRow>,
    /// Generator degrees, with multiplicity, in increasing order.
    pub weights: Vec<u64>,
    /// Degree of the first relation and how many independent ones appear there.
    pub first_relation: Option<(u64, u64)>,
}

/// Walks degrees `1..=max_degree`, adding `ℓ(n) − products` generators in
/// degree `n` until the products outnumber `ℓ(n)`.
pub fn generator_discovery(e: &EllSequence, max_degree: u64) -> Result<Discovery> {
    let mut weights = Vec::new();
    let mut rows = Vec::new();
    for n in 1..=max_degree {
        let ell = e.ell(n)?;
        let free = HilbertSeries::new(vec![1], weights.clone())?;
        let products = free.expand(n as usize)?[n as usize] as u64;
        if products > ell {
            rows.push(DiscoveryRow { degree: n, ell, products, new_generators: 0 });
            return Ok(Discovery { rows, weights, first_relation: Some((n, products - ell)) });
        }
        let new = ell - products;
        weights.extend(std::iter::repeat_n(n, new as usize));
        rows.push(DiscoveryRow { degree: n, ell, products, new_generators: new });
    }
    Ok(Discovery { rows, weights, first_relation: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingRow {
    pub k: u64,
    pub weights: Vec<u64>,
    pub numerator: String,
    /// Degrees `d_j` with numerator `∏(1 − t^{d_j})`, if it has that shape.
    pub relation_degrees: Option<Vec<u64>>,
}

fn complete_intersection_degrees(numerator: &[i128]) -> Option<Vec<u64>> {
    // peel off the lowest nonconstant term as a factor 1 − t^d
    let mut rest = trim(numerator.to_vec());
    let mut degrees = Vec::new();
    loop {
        if rest == [1] {
            return Some(degrees);
        }
        if rest.first() != Some(&1) {
            return None;
        }
        let d = rest.iter().skip(1).position(|&c| c != 0)? + 1;
        if rest[d] >= 0 {
            return None;
        }
        // exact division by 1 − t^d: q_k = r_k + q_{k−d}
        let mut q = vec![0i128; rest.len()];
        for k in 0..rest.len() {
            q[k] = rest[k] + if k >= d { q[k - d] } else { 0 };
        }
        let q = trim(q);
        if q.len() + d != rest.len() {
            return None;
        }
        degrees.push(d as u64);
        rest = q;
    }
}

/// For each `(k, weights)` recovers the numerator of `Σ ℓ(nkD) t^n` over the
/// given generator weights.
pub fn embedding_report(e: &EllSequence, rows: &[(u64, Vec<u64>)]) -> Result<Vec<EmbeddingRow>> {
    rows.iter()
        .map(|(k, weights)| {
            let scaled = e.scaled(*k)?;
            let max_degree = 2 * weights.iter().sum::<u64>() + 2 * e.genus + 2;
            let num = numerator_from_sequence(scaled.series_provider(), weights, max_degree)?;
            let coeffs = HilbertSeries::from_polynomial(&num, weights.clone())?;
            Ok(EmbeddingRow {
                k: *k,
                weights: weights.clone(),
                numerator: num.display_with("t"),
                relation_degrees: complete_intersection_degrees(coeffs.numerator()),
            })
        })
        .collect()
}

/// Table rows for `k = 1..=k_max` with weights taken from [`generator_discovery`].
pub fn discovered_table(e: &EllSequence, k_max: u64) -> Result<Vec<EmbeddingRow>> {
    let rows = (1..=k_max)
        .map(|k| {
            let d = generator_discovery(&e.scaled(k)?, 4 * (e.genus + 1) + 8)?;
            Ok((k, d.weights))
        })
        .collect::<Result<Vec<_>>>()?;
    embedding_report(e, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_univariate;

    fn series(num: &str, den: &[u64]) -> HilbertSeries {
        HilbertSeries::from_polynomial(&parse_univariate(num, "t").unwrap(), den.to_vec()).unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(series("1-t^6", &[1, 2, 3]).expand(6).unwrap(), vec![1, 1, 2, 3, 4, 5, 6]);
        assert_eq!(series("1", &[1]).expand(4).unwrap(), vec![1; 5]);
        assert_eq!(series("1-t+t^4", &[1, 1]).expand(6).unwrap(), vec![1, 1, 1, 1, 2, 3, 4]);
        assert_eq!(series("1+t", &[]).expand(3).unwrap(), vec![1, 1, 0, 0]);
    }

    #[test]
    fn display() {
        assert_eq!(series("1-t^6", &[1, 2, 3]).to_string(), "(1 - t^6) / (1-t)(1-t^2)(1-t^3)");
        assert_eq!(series("1", &[1, 1]).to_string(), "1 / (1-t)(1-t)");
    }

    #[test]
    fn ell_values() {
        let e = EllSequence::elliptic();
        let v: Vec<u64> = (0..6).map(|n| e.ell(n).unwrap()).collect();
        assert_eq!(v, vec![1, 1, 2, 3, 4, 5]);

        let quartic = EllSequence::new(3, 1, BTreeMap::from([(1, 1), (2, 1), (3, 1), (4, 2)])).unwrap();
        let v: Vec<u64> = (0..7).map(|n| quartic.ell(n).unwrap()).collect();
        assert_eq!(v, vec![1, 1, 1, 1, 2, 3, 4]);

        let rational = EllSequence::new(0, 1, BTreeMap::new()).unwrap();
        let v: Vec<u64> = (0..4).map(|n| rational.ell(n).unwrap()).collect();
        assert_eq!(v, vec![1, 2, 3, 4]);

        let bare = EllSequence::new(3, 1, BTreeMap::new()).unwrap();
        assert_eq!(bare.ell(2), Err(Error::AmbiguousLowDegree(2)));
        assert_eq!(bare.ell(5).unwrap(), 3);
        assert_eq!(
            EllSequence::new(3, 1, BTreeMap::from([(5, 3)])),
            Err(Error::InvalidOverride(5))
        );
    }

    #[test]
    fn numerators() {
        let e = EllSequence::elliptic();
        let n = numerator_from_sequence(e.series_provider(), &[1, 2, 3], 10).unwrap();
        assert_eq!(n.to_string(), "1 - t^6");
        let e2 = e.scaled(2).unwrap();
        let n = numerator_from_sequence(e2.series_provider(), &[1, 1, 2], 10).unwrap();
        assert_eq!(n.to_string(), "1 - t^4");
        let e4 = e.scaled(4).unwrap();
        let n = numerator_from_sequence(e4.series_provider(), &[1, 1, 1, 1], 10).unwrap();
        assert_eq!(n.to_string(), "1 - 2*t^2 + t^4");
    }

    #[test]
    fn nonterminating_numerator() {
        // 1/(1-t)^2 over a single (1-t) leaves 1/(1-t)
        let s = series("1", &[1, 1]);
        let seq = |n: u64| Ok(s.expand(n as usize)?[n as usize]);
        assert_eq!(numerator_from_sequence(seq, &[1], 8), Err(Error::NumeratorNotPolynomial(8)));
    }

    #[test]
    fn complete_intersections() {
        assert_eq!(complete_intersection_series(&[1, 2, 3], &[6]).unwrap().numerator(), &[1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(complete_intersection_series(&[1, 1], &[]).unwrap().numerator(), &[1]);
        assert_eq!(complete_intersection_series(&[1, 1, 1, 1], &[2, 2]).unwrap().numerator(), &[1, 0, -2, 0, 1]);
    }

    #[test]
    fn discovery_walk() {
        let d = generator_discovery(&EllSequence::elliptic(), 10).unwrap();
        assert_eq!(d.weights, vec![1, 2, 3]);
        assert_eq!(d.first_relation, Some((6, 1)));
        let d4 = generator_discovery(&EllSequence::elliptic().scaled(4).unwrap(), 10).unwrap();
        assert_eq!(d4.weights, vec![1, 1, 1, 1]);
        assert_eq!(d4.first_relation, Some((2, 2)));
    }

    #[test]
    fn elliptic_table() {
        let rows = discovered_table(&EllSequence::elliptic(), 5).unwrap();
        let got: Vec<_> = rows
            .iter()
            .map(|r| (r.k, r.weights.clone(), r.numerator.clone(), r.relation_degrees.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (1, vec![1, 2, 3], "1 - t^6".to_string(), Some(vec![6])),
                (2, vec![1, 1, 2], "1 - t^4".to_string(), Some(vec![4])),
                (3, vec![1, 1, 1], "1 - t^3".to_string(), Some(vec![3])),
                (4, vec![1, 1, 1, 1], "1 - 2*t^2 + t^4".to_string(), Some(vec![2, 2])),
                (5, vec![1; 5], "1 - 5*t^2 + 5*t^3 - t^5".to_string(), None),
            ]
        );
    }

    #[test]
    fn quartic_numerator() {
        let quartic = EllSequence::new(3, 1, BTreeMap::from([(1, 1), (2, 1), (3, 1), (4, 2)])).unwrap();
        let n = numerator_from_sequence(quartic.series_provider(), &[1, 4, 5, 6, 7], 25).unwrap();
        let expected = "1 - t^10 - t^11 - 2*t^12 - t^13 - t^14 + t^16 + 2*t^17 + 2*t^18 + 2*t^19 + t^20 - t^23 - t^24 - t^25";
        assert_eq!(n.to_string(), expected);
        let small = numerator_from_sequence(quartic.series_provider(), &[1, 1], 10).unwrap();
        assert_eq!(small.to_string(), "1 - t + t^4");
    }
}
