//! Truncations `R^(d)` of weighted polynomial rings and what they do to
//! principal ideals.
//!
//! Gradings follow the convention that an element of degree `d·i` in `R`
//! has degree `i` in `R^(d)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weights::{
    apply_step, is_well_formed, well_form_with, Case, IdealNote, PlannedStep, WellFormPolicy,
    WellFormTrace, Weight,
};
use crate::wpoly::{default_names, Monomial, WPolynomial};

/// All monomials of weighted degree exactly `d`, lexicographically
/// descending (so `x_0^2, x_0x_1, x_1^2, x_2` for weight `(1,1,2)`, `d = 2`).
pub fn graded_piece_basis(a: &Weight, d: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; a.len()];
    fill(a.entries(), 0, d, &mut current, &mut out);
    out
}

fn fill(a: &[u64], i: usize, remaining: u64, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i + 1 == a.len() {
        if remaining.is_multiple_of(a[i]) {
            current[i] = (remaining / a[i]) as u32;
            out.push(Monomial(current.clone()));
        }
        return;
    }
    for e in (0..=remaining / a[i]).rev() {
        current[i] = e as u32;
        fill(a, i + 1, remaining - e * a[i], current, out);
    }
    current[i] = 0;
}

/// `d · lcm(a) · (n + 1)`.
pub fn default_degree_bound(a: &Weight, d: u64) -> u64 {
    d * a.lcm() * a.len() as u64
}

/// Minimal generators of the monoid of exponent vectors whose weighted
/// degree is a multiple of `d`, among those of degree at most
/// `degree_bound`.
///
/// A monomial is kept iff it is not a product of two non-unit members of the
/// monoid. Completeness is only claimed up to the bound. Output is ordered by
/// weighted degree, then lexicographically descending.
pub fn veronese_generators(a: &Weight, d: u64, degree_bound: u64) -> Result<Vec<Monomial>> {
    if d == 0 {
        return Err(Error::BadCase("truncation degree must be positive".into()));
    }
    let minimum = d * a.entries().iter().max().copied().unwrap_or(1);
    if degree_bound < minimum {
        return Err(Error::BoundTooSmall { bound: degree_bound, minimum });
    }
    let mut gens: Vec<Monomial> = Vec::new();
    for k in 1..=degree_bound / d {
        for m in graded_piece_basis(a, k * d) {
            if !gens.iter().any(|g| m.divisible_by(g)) {
                gens.push(m);
            }
        }
    }
    Ok(gens)
}

/// Degrees of `gens` in the regraded ring `R^(d)`.
pub fn generator_weights(a: &Weight, d: u64, gens: &[Monomial]) -> Vec<u64> {
    gens.iter().map(|g| g.weighted_degree(a) / d).collect()
}

/// Weight of the truncated ring after one well-forming move.
pub fn regrade(a: &Weight, d: u64, case: Case, spared_index: Option<usize>) -> Result<Weight> {
    apply_step(a, PlannedStep { case, divisor: d, spared_index })
}

/// Image of the principal ideal `(f)` under one move.
///
/// Case I leaves `f` alone and only regrades it. Case II makes the spared
/// variable's `d`-th power the new generator; when every term's spared
/// exponent is already a multiple of `d`, `f` is rewritten directly,
/// otherwise `f^d` is (its exponents always are).
pub fn transform_principal_ideal(
    f: &WPolynomial,
    d: u64,
    case: Case,
    spared_index: Option<usize>,
) -> Result<(WPolynomial, IdealNote)> {
    let a = f.weight();
    f.homogeneous_degree()?;
    let new_weight = regrade(a, d, case, spared_index)?;
    match (case, spared_index) {
        (Case::I, _) => Ok((f.with_weight(new_weight)?, IdealNote::UnchangedRegraded)),
        (Case::II, Some(j)) => {
            let d32 = d as u32;
            let divisible = f.monomials().all(|m| m.0[j] % d32 == 0);
            let (source, note) = if divisible {
                (f.clone(), IdealNote::ReExpressed)
            } else {
                (f.pow(d32), IdealNote::PowerRaised)
            };
            let out = source.map_monomials(new_weight, |m| {
                let mut e = m.clone();
                e.0[j] /= d32;
                e
            });
            Ok((out, note))
        }
        (Case::II, None) => Err(Error::BadCase("case II needs a spared index".into())),
    }
}

/// A graded ring presented as a weighted polynomial ring modulo relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    pub weight: Weight,
    /// Each generator written as a monomial in the original variables.
    pub generator_names: Vec<String>,
    pub relations: Vec<WPolynomial>,
    pub relation_degrees: Vec<u64>,
}

impl GradedPresentation {
    pub fn principal(f: &WPolynomial) -> Result<Self> {
        let degree = f.homogeneous_degree()?;
        Ok(GradedPresentation {
            weight: f.weight().clone(),
            generator_names: default_names(f.nvars()),
            relations: vec![f.clone()],
            relation_degrees: vec![degree],
        })
    }
}

impl Serialize for GradedPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            weight: &'a Weight,
            generators: &'a [String],
            relations: Vec<String>,
            relation_degrees: &'a [u64],
        }
        Repr {
            weight: &self.weight,
            generators: &self.generator_names,
            relations: self.relations.iter().map(|r| r.to_string()).collect(),
            relation_degrees: &self.relation_degrees,
        }
        .serialize(s)
    }
}

/// Well-forms the ambient weight of `f` with the default policy, carrying
/// `(f)` along every step.
pub fn straighten_chain(f: &WPolynomial) -> Result<(GradedPresentation, WellFormTrace)> {
    straighten_chain_with(f, &WellFormPolicy::WholeGcd)
}

pub fn straighten_chain_with(
    f: &WPolynomial,
    policy: &WellFormPolicy,
) -> Result<(GradedPresentation, WellFormTrace)> {
    let degree = f.homogeneous_degree()?;
    let (_, mut trace) = well_form_with(f.weight(), policy)?;
    let names = default_names(f.nvars());
    let mut generators: Vec<Monomial> = (0..f.nvars()).map(|i| Monomial::var(f.nvars(), i)).collect();
    let mut relation = f.clone();
    let mut relation_degree = degree;
    for step in &mut trace.steps {
        let (next, note) = transform_principal_ideal(&relation, step.divisor, step.case, step.spared_index)?;
        if let (Case::II, Some(j)) = (step.case, step.spared_index) {
            generators[j] = Monomial(generators[j].0.iter().map(|e| e * step.divisor as u32).collect());
        }
        relation_degree = next.homogeneous_degree()?;
        relation = next;
        step.ideal_note = note;
    }
    debug_assert!(is_well_formed(relation.weight()));
    Ok((
        GradedPresentation {
            weight: relation.weight().clone(),
            generator_names: generators.iter().map(|g| g.display_with(&names)).collect(),
            relations: vec![relation],
            relation_degrees: vec![relation_degree],
        },
        trace,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Field;
    use crate::parse::parse_polynomial;

    fn w(e: &[u64]) -> Weight {
        Weight::new(e.to_vec()).unwrap()
    }

    fn mono_names(ms: &[Monomial], n: usize) -> Vec<String> {
        ms.iter().map(|m| m.display_with(&default_names(n))).collect()
    }

    #[test]
    fn graded_pieces() {
        assert_eq!(mono_names(&graded_piece_basis(&w(&[1, 1, 2]), 2), 3), ["x^2", "x*y", "y^2", "z"]);
        assert_eq!(graded_piece_basis(&w(&[1, 2, 3]), 0), vec![Monomial(vec![0, 0, 0])]);
        let six = mono_names(&graded_piece_basis(&w(&[1, 2, 3]), 6), 3);
        assert_eq!(six, ["x^6", "x^4*y", "x^3*z", "x^2*y^2", "x*y*z", "y^3", "z^2"]);
        assert!(graded_piece_basis(&w(&[2, 4]), 3).is_empty());
    }

    #[test]
    fn veronese_examples() {
        let g = veronese_generators(&w(&[1, 1]), 2, 4).unwrap();
        assert_eq!(mono_names(&g, 2), ["x^2", "x*y", "y^2"]);
        let a = w(&[6, 10, 15]);
        let g = veronese_generators(&a, 5, 75).unwrap();
        assert_eq!(mono_names(&g, 3), ["y", "z", "x^5"]);
        assert_eq!(generator_weights(&a, 5, &g), [2, 3, 6]);
        let g1 = veronese_generators(&w(&[3, 5, 7]), 1, 7).unwrap();
        assert_eq!(mono_names(&g1, 3), ["x", "y", "z"]);
    }

    #[test]
    fn veronese_bound_precondition() {
        assert_eq!(
            veronese_generators(&w(&[6, 10, 15]), 5, 30),
            Err(Error::BoundTooSmall { bound: 30, minimum: 75 })
        );
    }

    #[test]
    fn regrade_examples() {
        assert_eq!(regrade(&w(&[12, 20, 30]), 2, Case::I, None).unwrap(), w(&[6, 10, 15]));
        assert_eq!(regrade(&w(&[6, 10, 15]), 5, Case::II, Some(0)).unwrap(), w(&[6, 2, 3]));
        assert_eq!(regrade(&w(&[3, 1, 3]), 3, Case::II, Some(1)).unwrap(), w(&[1, 1, 1]));
        assert!(matches!(regrade(&w(&[6, 10, 15]), 2, Case::I, None), Err(Error::BadCase(_))));
        assert!(matches!(regrade(&w(&[6, 10, 15]), 3, Case::II, Some(0)), Err(Error::BadCase(_))));
    }

    #[test]
    fn ideal_transforms() {
        let f = parse_polynomial("x^5 + y^3 + z^2", &w(&[12, 20, 30]), Field::Rational).unwrap();
        let (g, note) = transform_principal_ideal(&f, 2, Case::I, None).unwrap();
        assert_eq!(note, IdealNote::UnchangedRegraded);
        assert_eq!(g.weight(), &w(&[6, 10, 15]));
        assert_eq!(g.is_weighted_homogeneous().unwrap(), Some(30));

        let (h, note) = transform_principal_ideal(&g, 5, Case::II, Some(0)).unwrap();
        assert_eq!(note, IdealNote::ReExpressed);
        assert_eq!(h.weight(), &w(&[6, 2, 3]));
        assert_eq!(h.to_string(), "x + y^3 + z^2");
        assert_eq!(h.is_weighted_homogeneous().unwrap(), Some(6));

        let x = parse_polynomial("x", &w(&[1, 2]), Field::Rational).unwrap();
        let (p, note) = transform_principal_ideal(&x, 2, Case::II, Some(0)).unwrap();
        assert_eq!(note, IdealNote::PowerRaised);
        // the new generator is x^2, so f^2 = x^2 is that generator
        assert_eq!(p.to_string(), "x");
        assert_eq!(p.weight(), &w(&[1, 1]));

        let bad = parse_polynomial("x + y", &w(&[1, 2]), Field::Rational).unwrap();
        assert_eq!(transform_principal_ideal(&bad, 2, Case::II, Some(0)), Err(Error::NotHomogeneous));
    }

    #[test]
    fn straighten_default_policy() {
        let f = parse_polynomial("x^5 + y^3 + z^2", &w(&[12, 20, 30]), Field::Rational).unwrap();
        let (pres, trace) = straighten_chain(&f).unwrap();
        assert_eq!(pres.weight, w(&[1, 1, 1]));
        assert_eq!(pres.relations[0].to_string(), "x + y + z");
        assert_eq!(pres.relation_degrees, [1]);
        assert_eq!(pres.generator_names, ["x^5", "y^3", "z^2"]);
        assert_eq!(trace.len(), 4);
    }

    #[test]
    fn straighten_noop_cases() {
        let f = parse_polynomial("x + y + z", &w(&[1, 1, 1]), Field::Rational).unwrap();
        let (pres, trace) = straighten_chain(&f).unwrap();
        assert!(trace.is_empty());
        assert_eq!(pres, GradedPresentation::principal(&f).unwrap());

        let g = parse_polynomial("x^4+y^4+z^2+x*y*z", &w(&[1, 1, 2]), Field::Rational).unwrap();
        let (pres, trace) = straighten_chain(&g).unwrap();
        assert!(trace.is_empty());
        assert_eq!(pres.relations[0], g);
    }
}
