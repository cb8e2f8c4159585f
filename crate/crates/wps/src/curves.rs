//! Plane curves `C_f ⊂ P(a_0, a_1, a_2)` and their degree–genus bookkeeping.
//!
//! The genus comes from comparing `C_f` with its straight cover
//! `C̄ = V(f(y_0^{a_0}, y_1^{a_1}, y_2^{a_2})) ⊂ P^2` under the quotient by
//! `μ_{a_0} × μ_{a_1} × μ_{a_2}`, using
//! `2ḡ − 2 = a_0a_1a_2 (2g − 2) + b` with a closed form for `b`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Scalar;
use crate::weights::{is_well_formed, Weight};
use crate::wpoly::{Monomial, WPolynomial};

/// A weighted-homogeneous polynomial in three variables and its degree.
///
/// `f` is meant to have no repeated factors; that is not checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    poly: WPolynomial,
    degree: u64,
}

impl PlaneCurve {
    pub fn new(poly: WPolynomial) -> Result<Self> {
        if poly.nvars() != 3 {
            return Err(Error::ArityMismatch { expected: 3, got: poly.nvars() });
        }
        let degree = poly.homogeneous_degree()?;
        if degree == 0 {
            return Err(Error::InvalidDegreeWeight {
                d: 0,
                weight: poly.weight().to_string(),
                reason: "constant polynomial".into(),
            });
        }
        Ok(PlaneCurve { poly, degree })
    }

    pub fn poly(&self) -> &WPolynomial {
        &self.poly
    }

    pub fn weight(&self) -> &Weight {
        self.poly.weight()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }
}

/// A failed condition of the sufficiently-general test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum Clause {
    /// `a_i | d` but there is no `x_i^{d/a_i}` term.
    PureTerm { index: usize },
    /// `a_i ∤ d` but there is no `x_j x_i^m` term with `m = (d − a_j)/a_i`.
    MixedTerm { index: usize },
    DegreeAtLeastTwo,
    DegreeAtLeastWeight { index: usize },
    /// `a_i ∤ d` and no `j ≠ i` has `a_i | d − a_j`.
    CompatibleIndex { index: usize },
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::PureTerm { index } => write!(f, "missing pure power of x{index}"),
            Clause::MixedTerm { index } => write!(f, "missing x_j*x{index}^m term"),
            Clause::DegreeAtLeastTwo => write!(f, "degree below 2"),
            Clause::DegreeAtLeastWeight { index } => write!(f, "degree below weight of x{index}"),
            Clause::CompatibleIndex { index } => {
                write!(f, "no j with a{index} dividing d - a_j")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generality {
    pub general: bool,
    pub violations: Vec<Clause>,
}

/// `j ≠ i` with `a_j ≤ d` and `a_i | d − a_j`, smallest first.
fn compatible_indices(d: u64, a: &[u64], i: usize) -> impl Iterator<Item = usize> + '_ {
    (0..3).filter(move |&j| j != i && a[j] <= d && (d - a[j]).is_multiple_of(a[i]))
}

fn numeric_violations(d: u64, a: &[u64]) -> Vec<Clause> {
    let mut v = Vec::new();
    if d < 2 {
        v.push(Clause::DegreeAtLeastTwo);
    }
    for i in 0..3 {
        if d < a[i] {
            v.push(Clause::DegreeAtLeastWeight { index: i });
        }
    }
    for i in 0..3 {
        if !d.is_multiple_of(a[i]) && compatible_indices(d, a, i).next().is_none() {
            v.push(Clause::CompatibleIndex { index: i });
        }
    }
    v
}

fn ensure_curve_weight(a: &Weight) -> Result<()> {
    if a.len() != 3 {
        return Err(Error::ArityMismatch { expected: 3, got: a.len() });
    }
    if !is_well_formed(a) {
        return Err(Error::NotWellFormed(a.to_string()));
    }
    Ok(())
}

/// Checks the term-presence conditions and the numeric constraints on
/// `(d, a)`, listing every failed clause.
pub fn sufficiently_general(c: &PlaneCurve) -> Result<Generality> {
    let a = c.weight();
    ensure_curve_weight(a)?;
    let a = a.entries();
    let d = c.degree;
    let mut violations = numeric_violations(d, a);
    for i in 0..3 {
        if d.is_multiple_of(a[i]) {
            let mut e = vec![0; 3];
            e[i] = (d / a[i]) as u32;
            if !c.poly.contains(&Monomial(e)) {
                violations.push(Clause::PureTerm { index: i });
            }
        } else {
            let present = compatible_indices(d, a, i).any(|j| {
                let mut e = vec![0; 3];
                e[j] = 1;
                e[i] = ((d - a[j]) / a[i]) as u32;
                c.poly.contains(&Monomial(e))
            });
            if !present {
                violations.push(Clause::MixedTerm { index: i });
            }
        }
    }
    violations.sort_by_key(clause_rank);
    Ok(Generality { general: violations.is_empty(), violations })
}

fn clause_rank(c: &Clause) -> (u8, usize) {
    match *c {
        Clause::PureTerm { index } => (0, index),
        Clause::MixedTerm { index } => (0, index),
        Clause::DegreeAtLeastTwo => (1, 0),
        Clause::DegreeAtLeastWeight { index } => (2, index),
        Clause::CompatibleIndex { index } => (3, index),
    }
}

fn require_general(c: &PlaneCurve) -> Result<()> {
    let g = sufficiently_general(c)?;
    if g.general {
        Ok(())
    } else {
        let msg: Vec<String> = g.violations.iter().map(|v| v.to_string()).collect();
        Err(Error::NotSufficientlyGeneral(msg.join("; ")))
    }
}

/// Whether each coordinate vertex `p_i` lies on the curve: exactly when
/// `a_i ∤ d`. The rule is cross-checked against evaluating `f` at `p_i`.
pub fn vertex_membership(c: &PlaneCurve) -> Result<[bool; 3]> {
    require_general(c)?;
    let a = c.weight().entries();
    let field = c.poly.field();
    let mut out = [false; 3];
    for i in 0..3 {
        let rule = !c.degree.is_multiple_of(a[i]);
        let mut coords = vec![field.zero(); 3];
        coords[i] = field.one();
        let on_curve = c.poly.evaluate(&coords)?.is_zero();
        if rule != on_curve {
            return Err(Error::Mismatch(format!(
                "vertex {i}: divisibility says {rule}, evaluation says {on_curve}"
            )));
        }
        out[i] = rule;
    }
    Ok(out)
}

/// True iff all three partial derivatives vanish at the cone point.
pub fn is_singular_at(c: &PlaneCurve, coords: &[Scalar]) -> Result<bool> {
    if coords.iter().all(Scalar::is_zero) {
        return Err(Error::NotAConePoint);
    }
    for i in 0..3 {
        if !c.poly.partial(i)?.evaluate(coords)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The curve `V(π_#(f)) ⊂ P^2`, of the same degree.
pub fn straight_cover(c: &PlaneCurve) -> Result<PlaneCurve> {
    PlaneCurve::new(c.poly.power_substitute()?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCheck {
    pub i: usize,
    pub restriction: String,
    pub squarefree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeReport {
    pub all_squarefree: bool,
    pub edges: Vec<EdgeCheck>,
}

/// Squarefreeness of the three edge restrictions of the straight cover.
pub fn edge_squarefree_check(c: &PlaneCurve) -> Result<EdgeReport> {
    require_general(c)?;
    let cover = c.poly.power_substitute()?;
    let mut edges = Vec::with_capacity(3);
    for i in 0..3 {
        let g = cover.restrict_to_edge(i)?;
        if g.is_zero() {
            return Err(Error::DegenerateEdge(i));
        }
        edges.push(EdgeCheck {
            i,
            restriction: g.display_with("λ"),
            squarefree: g.is_squarefree()?,
        });
    }
    Ok(EdgeReport { all_squarefree: edges.iter().all(|e| e.squarefree), edges })
}

fn validate_degree_weight(d: u64, a: &Weight) -> Result<()> {
    let fail = |reason: String| Error::InvalidDegreeWeight { d, weight: a.to_string(), reason };
    if a.len() != 3 {
        return Err(fail("a plane curve needs three weights".into()));
    }
    if !is_well_formed(a) {
        return Err(fail("weight is not well-formed".into()));
    }
    let v = numeric_violations(d, a.entries());
    if let Some(first) = v.first() {
        return Err(fail(first.to_string()));
    }
    Ok(())
}

/// `b(π) = (d−1) Σ (a_i − 1) + Σ_i { a_i − 1 if a_i | d, a_0a_1a_2 − 1 otherwise }`.
pub fn branching_index(d: u64, a: &Weight) -> Result<u64> {
    validate_degree_weight(d, a)?;
    let e = a.entries();
    let prod = a.product();
    let base: u64 = (d - 1) * e.iter().map(|x| x - 1).sum::<u64>();
    let vertex: u64 = e
        .iter()
        .map(|&x| if d.is_multiple_of(x) { x - 1 } else { prod - 1 })
        .sum();
    Ok(base + vertex)
}

/// `(d − 1)(d − 2)/2`.
pub fn straight_genus(d: u64) -> u64 {
    (d - 1) * (d - 2) / 2
}

/// `g = ((d−1)(d−2)/2 − b/2 − 1 + a_0a_1a_2) / (a_0a_1a_2)`, rejecting values
/// that are not non-negative integers instead of rounding.
pub fn genus(d: u64, a: &Weight) -> Result<u64> {
    let b = branching_index(d, a)? as i128;
    let prod = a.product() as i128;
    let d = d as i128;
    // 2·prod·g = (d−1)(d−2) − b − 2 + 2·prod
    let numer = (d - 1) * (d - 2) - b - 2 + 2 * prod;
    let denom = 2 * prod;
    if numer < 0 || numer % denom != 0 {
        let g = numer.gcd(&denom);
        return Err(Error::NonIntegerGenus {
            d: d as u64,
            weight: a.to_string(),
            value: format!("{}/{}", numer / g, denom / g),
        });
    }
    Ok((numer / denom) as u64)
}

/// `2·g_cover − 2 = deg·(2·g_base − 2) + b`.
pub fn riemann_hurwitz_check(g_cover: i64, g_base: i64, deg: i64, b: i64) -> bool {
    2 * g_cover - 2 == deg * (2 * g_base - 2) + b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCensus {
    pub i: usize,
    /// Distinct nonzero roots of the cover's restriction to edge `i`.
    pub count: usize,
    /// `d` if `a_i | d`, else `d − 1`.
    pub predicted: u64,
    pub squarefree: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchCensus {
    pub edges: Vec<EdgeCensus>,
    pub vertices: [bool; 3],
    pub d: u64,
    pub weights: Weight,
}

impl BranchCensus {
    pub fn all_agree(&self) -> bool {
        self.edges.iter().all(|e| e.agrees)
    }
}

/// Root counts on each edge of the straight cover next to the closed-form
/// prediction `|G_i|`. Disagreements and non-squarefree edges are reported,
/// not corrected.
pub fn branch_census(c: &PlaneCurve) -> Result<BranchCensus> {
    let vertices = vertex_membership(c)?;
    let cover = c.poly.power_substitute()?;
    let a = c.weight().entries();
    let d = c.degree;
    let mut edges = Vec::with_capacity(3);
    for i in 0..3 {
        let g = cover.restrict_to_edge(i)?;
        if g.is_zero() {
            return Err(Error::DegenerateEdge(i));
        }
        let count = g.distinct_root_count(true)?;
        let predicted = if d.is_multiple_of(a[i]) { d } else { d - 1 };
        edges.push(EdgeCensus {
            i,
            count,
            predicted,
            squarefree: g.is_squarefree()?,
            agrees: count as u64 == predicted,
        });
    }
    Ok(BranchCensus { edges, vertices, d, weights: c.weight().clone() })
}

/// One `(d, a)` pair of a sweep with its genus or the reason it has none.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepPoint {
    pub d: u64,
    pub weights: Weight,
    pub branching_index: u64,
    pub genus: Option<u64>,
    pub error: Option<String>,
    /// Riemann–Hurwitz against the straight cover; false when there is no genus.
    pub hurwitz: bool,
}

/// All well-formed ordered `a` with entries `≤ max_entry` (pairwise coprime when
/// asked) and `d ≤ max_degree` passing the numeric curve constraints, sorted
/// by weights then degree.
pub fn genus_sweep(max_entry: u64, max_degree: u64, pairwise_coprime: bool) -> Vec<SweepPoint> {
    use rayon::prelude::*;
    let mut pairs = Vec::new();
    for a0 in 1..=max_entry {
        for a1 in 1..=max_entry {
            for a2 in 1..=max_entry {
                let w = Weight::new(vec![a0, a1, a2]).expect("positive");
                let coprime = a0.gcd(&a1) == 1 && a0.gcd(&a2) == 1 && a1.gcd(&a2) == 1;
                if !is_well_formed(&w) || (pairwise_coprime && !coprime) {
                    continue;
                }
                for d in 1..=max_degree {
                    if numeric_violations(d, w.entries()).is_empty() {
                        pairs.push((w.clone(), d));
                    }
                }
            }
        }
    }
    pairs
        .into_par_iter()
        .map(|(w, d)| {
            let b = branching_index(d, &w).expect("constraints checked");
            let (genus, error) = match genus(d, &w) {
                Ok(g) => (Some(g), None),
                Err(e) => (None, Some(e.to_string())),
            };
            let hurwitz = genus.is_some_and(|g| {
                riemann_hurwitz_check(straight_genus(d) as i64, g as i64, w.product() as i64, b as i64)
            });
            SweepPoint { d, weights: w, branching_index: b, genus, error, hurwitz }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Field;
    use crate::parse::parse_polynomial;

    fn w(e: &[u64]) -> Weight {
        Weight::new(e.to_vec()).unwrap()
    }

    fn curve(f: &str, a: &[u64]) -> PlaneCurve {
        PlaneCurve::new(parse_polynomial(f, &w(a), Field::Rational).unwrap()).unwrap()
    }

    #[test]
    fn generality_examples() {
        assert!(sufficiently_general(&curve("x^4+y^4+z^2+x*y*z", &[1, 1, 2])).unwrap().general);
        let conic = sufficiently_general(&curve("x^2+y^2", &[1, 1, 1])).unwrap();
        assert_eq!(conic.violations, vec![Clause::PureTerm { index: 2 }]);
        let septic = sufficiently_general(&curve("x^7+x*y^3+y^2*z", &[1, 2, 3])).unwrap();
        assert_eq!(septic.violations, vec![Clause::MixedTerm { index: 2 }]);
        assert!(sufficiently_general(&curve("x^7+y^2*z+x*z^2", &[1, 2, 3])).unwrap().general);
        assert!(matches!(
            sufficiently_general(&curve("x^2+y", &[1, 2, 2])),
            Err(Error::NotWellFormed(_))
        ));
    }

    #[test]
    fn numeric_clauses_reported() {
        // degree 1 in P^2: below two
        let g = sufficiently_general(&curve("x+y+z", &[1, 1, 1])).unwrap();
        assert_eq!(g.violations, vec![Clause::DegreeAtLeastTwo]);
        // degree 2 in P(1,1,3): z cannot appear at all
        let g = sufficiently_general(&curve("x^2+y^2", &[1, 1, 3])).unwrap();
        assert!(g.violations.contains(&Clause::DegreeAtLeastWeight { index: 2 }));
        assert!(g.violations.contains(&Clause::CompatibleIndex { index: 2 }));
    }

    #[test]
    fn vertices() {
        assert_eq!(vertex_membership(&curve("x^6+y^3+z^2", &[1, 2, 3])).unwrap(), [false; 3]);
        assert_eq!(vertex_membership(&curve("x^7+y^2*z+x*z^2", &[1, 2, 3])).unwrap(), [false, true, true]);
        assert_eq!(vertex_membership(&curve("x^4+y^4+z^2+x*y*z", &[1, 1, 2])).unwrap(), [false; 3]);
        assert!(matches!(
            vertex_membership(&curve("x^2+y^2", &[1, 1, 1])),
            Err(Error::NotSufficientlyGeneral(_))
        ));
    }

    #[test]
    fn singular_points() {
        let q = Field::Rational;
        let sphere = curve("x^2+y^2+z^2", &[1, 1, 1]);
        assert!(!is_singular_at(&sphere, &[q.one(), q.zero(), q.zero()]).unwrap());
        let double_line = curve("x^2", &[1, 1, 1]);
        assert!(is_singular_at(&double_line, &[q.zero(), q.one(), q.zero()]).unwrap());
        assert_eq!(is_singular_at(&sphere, &[q.zero(), q.zero(), q.zero()]), Err(Error::NotAConePoint));
        // vertices on a sufficiently general curve are smooth points
        let c7 = curve("x^7+y^2*z+x*z^2", &[1, 2, 3]);
        assert!(!is_singular_at(&c7, &[q.zero(), q.one(), q.zero()]).unwrap());
        assert!(!is_singular_at(&c7, &[q.zero(), q.zero(), q.one()]).unwrap());
    }

    #[test]
    fn covers() {
        let c = straight_cover(&curve("x^4+y^4+z^2+x*y*z", &[1, 1, 2])).unwrap();
        assert_eq!(c.poly().to_string(), "x^4 + x*y*z^2 + y^4 + z^4");
        assert_eq!(c.degree(), 4);
        let s = curve("x^3+y^3+z^3", &[1, 1, 1]);
        assert_eq!(straight_cover(&s).unwrap(), s);
        let big = straight_cover(&curve("x^5+y^3+z^2", &[12, 20, 30])).unwrap();
        assert_eq!(big.poly().to_string(), "x^60 + y^60 + z^60");
    }

    #[test]
    fn edges() {
        let r = edge_squarefree_check(&curve("x^4+y^4+z^2+x*y*z", &[1, 1, 2])).unwrap();
        assert!(r.all_squarefree);
        assert_eq!(r.edges[2].restriction, "1 + λ^4");
        let fermat60 = curve("x^60+y^60+z^60", &[1, 1, 1]);
        assert!(edge_squarefree_check(&fermat60).unwrap().all_squarefree);
        // the septic's cover restricts to λ^3 on edge 0
        let c7 = edge_squarefree_check(&curve("x^7+y^2*z+x*z^2", &[1, 2, 3])).unwrap();
        assert!(!c7.edges[0].squarefree);
        assert!(!c7.all_squarefree);
    }

    #[test]
    fn branching_and_genus() {
        assert_eq!(branching_index(6, &w(&[1, 2, 3])).unwrap(), 18);
        assert_eq!(branching_index(4, &w(&[1, 1, 2])).unwrap(), 4);
        assert_eq!(branching_index(9, &w(&[1, 1, 1])).unwrap(), 0);
        assert_eq!(genus(6, &w(&[1, 2, 3])).unwrap(), 1);
        assert_eq!(genus(4, &w(&[1, 1, 2])).unwrap(), 1);
        assert_eq!(genus(7, &w(&[1, 2, 3])).unwrap(), 1);
        assert_eq!(genus(3, &w(&[1, 1, 1])).unwrap(), 1);
        assert!(matches!(
            genus(3, &w(&[1, 1, 2])),
            Err(Error::NonIntegerGenus { ref value, .. }) if value == "1/4"
        ));
        assert!(matches!(genus(1, &w(&[1, 1, 1])), Err(Error::InvalidDegreeWeight { .. })));
        assert!(matches!(genus(6, &w(&[2, 2, 3])), Err(Error::InvalidDegreeWeight { .. })));
    }

    #[test]
    fn sweep_is_sorted_and_constrained() {
        let s = genus_sweep(3, 8, true);
        assert!(s.windows(2).all(|w| (w[0].weights.entries(), w[0].d) < (w[1].weights.entries(), w[1].d)));
        let p2: Vec<u64> = s.iter().filter(|p| p.weights.is_straight()).map(|p| p.d).collect();
        assert_eq!(p2, (2..=8).collect::<Vec<_>>());
        assert!(s.iter().filter(|p| p.weights.is_straight()).all(|p| p.hurwitz));
        let first_bad = s.iter().find(|p| p.genus.is_none()).unwrap();
        assert_eq!((first_bad.d, first_bad.weights.to_string()), (3, "(1,1,2)".to_string()));
    }

    #[test]
    fn hurwitz() {
        assert!(riemann_hurwitz_check(10, 1, 6, 18));
        assert!(riemann_hurwitz_check(4, 4, 1, 0));
        assert!(riemann_hurwitz_check(3, 1, 2, 4));
        assert!(!riemann_hurwitz_check(3, 1, 2, -4));
    }

    #[test]
    fn census() {
        let r = branch_census(&curve("x^4+y^4+z^2+x*y*z", &[1, 1, 2])).unwrap();
        assert!(r.edges.iter().all(|e| e.count == 4 && e.predicted == 4));
        assert!(r.all_agree());

        let r = branch_census(&curve("x^7+y^2*z+x*z^2", &[1, 2, 3])).unwrap();
        assert_eq!(r.vertices, [false, true, true]);
        let counts: Vec<_> = r.edges.iter().map(|e| (e.count, e.predicted)).collect();
        assert_eq!(counts, vec![(0, 7), (6, 6), (0, 6)]);
        assert!(!r.all_agree());

        assert!(matches!(
            branch_census(&curve("x^2+y^2", &[1, 1, 1])),
            Err(Error::NotSufficientlyGeneral(_))
        ));
    }
}
