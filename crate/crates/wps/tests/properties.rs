use proptest::prelude::*;

use wps::exactmath::upoly_gcd;
use wps::geometry::{eq_geometric, eq_rational, normalize};
use wps::hilbert::numerator_from_sequence;
use wps::parse::parse_polynomial;
use wps::truncation::graded_piece_basis;
use wps::weights::{apply_step, PlannedStep};
use wps::{is_well_formed, well_form, well_form_with, Field, HilbertSeries, Scalar, UPolynomial, WPoint, WPolynomial, WellFormPolicy, Weight};

const PRIMES: [u64; 5] = [2, 3, 5, 7, 13];

fn weight_strategy(max_len: usize, max_entry: u64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(1..=max_entry, 2..=max_len).prop_map(|v| Weight::new(v).unwrap())
}

/// A homogeneous polynomial of degree `d` with small integer coefficients.
fn homogeneous(a: &Weight, d: u64, field: Field, coeffs: &[i64]) -> WPolynomial {
    let terms = graded_piece_basis(a, d)
        .into_iter()
        .zip(coeffs.iter().cycle())
        .map(|(m, &c)| (m.0, field.from_i64(c)));
    WPolynomial::from_terms(a.clone(), field, terms).unwrap()
}

fn upoly(field: Field, coeffs: &[i64]) -> UPolynomial {
    UPolynomial::from_i64s(field, coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gcd_divides_both(
        pi in 0usize..5,
        f in prop::collection::vec(-6i64..6, 0..6),
        g in prop::collection::vec(-6i64..6, 0..6),
        h in prop::collection::vec(-6i64..6, 1..4),
        rational in any::<bool>(),
    ) {
        let field = if rational { Field::Rational } else { Field::prime(PRIMES[pi]).unwrap() };
        let (f, g, h) = (upoly(field, &f), upoly(field, &g), upoly(field, &h));
        let (fh, gh) = (f.mul(&h), g.mul(&h));
        let d = upoly_gcd(&fh, &gh).unwrap();
        if !d.is_zero() {
            prop_assert!(d.leading().unwrap().is_one());
            prop_assert!(fh.div_rem(&d).unwrap().1.is_zero());
            prop_assert!(gh.div_rem(&d).unwrap().1.is_zero());
            // the common factor h divides the gcd
            if !h.is_zero() && !(fh.is_zero() && gh.is_zero()) {
                prop_assert!(d.div_rem(&h).unwrap().1.is_zero());
            }
        }
    }

    #[test]
    fn distinct_roots_of_a_product_of_linears(
        roots in prop::collection::vec(-8i64..8, 1..7),
        pi in 0usize..5,
        rational in any::<bool>(),
    ) {
        let field = if rational { Field::Rational } else { Field::prime(PRIMES[pi]).unwrap() };
        let scalars: Vec<Scalar> = roots.iter().map(|&r| field.from_i64(r)).collect();
        let g = UPolynomial::from_roots(field, &scalars);
        let mut distinct: Vec<Scalar> = Vec::new();
        for s in &scalars {
            if !distinct.contains(s) {
                distinct.push(s.clone());
            }
        }
        prop_assert_eq!(g.distinct_root_count(false).unwrap(), distinct.len());
        let nonzero = distinct.iter().filter(|s| !s.is_zero()).count();
        prop_assert_eq!(g.distinct_root_count(true).unwrap(), nonzero);
        prop_assert_eq!(g.is_squarefree().unwrap(), distinct.len() == scalars.len());
    }

    #[test]
    fn radical_has_the_same_roots(
        roots in prop::collection::vec(0i64..5, 1..8),
        extra in prop::collection::vec(-4i64..4, 1..4),
    ) {
        // over F_5 every root is visible by evaluation
        let f5 = Field::prime(5).unwrap();
        let scalars: Vec<Scalar> = roots.iter().map(|&r| f5.from_i64(r)).collect();
        let g = UPolynomial::from_roots(f5, &scalars).mul(&upoly(f5, &extra));
        prop_assume!(!g.is_zero());
        let r = g.radical().unwrap();
        prop_assert!(g.div_rem(&r).unwrap().1.is_zero());
        for x in f5.elements() {
            prop_assert_eq!(g.eval(&x).is_zero(), r.eval(&x).is_zero());
        }
        prop_assert!(r.is_squarefree().unwrap());
    }

    #[test]
    fn scaling_law(
        a in weight_strategy(4, 4),
        d in 1u64..9,
        coeffs in prop::collection::vec(-5i64..5, 1..6),
        x in prop::collection::vec(0i64..13, 4),
        lambda in 1i64..13,
    ) {
        let field = Field::prime(13).unwrap();
        let f = homogeneous(&a, d, field, &coeffs);
        let x: Vec<Scalar> = x.iter().take(a.len()).map(|&v| field.from_i64(v)).collect();
        let lam = field.from_i64(lambda);
        let scaled: Vec<Scalar> = x.iter().zip(a.entries()).map(|(c, &w)| c * &lam.pow(w)).collect();
        let lhs = f.evaluate(&scaled).unwrap();
        let rhs = &lam.pow(d) * &f.evaluate(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_decompose_reassembles(
        a in weight_strategy(3, 4),
        degrees in prop::collection::vec(0u64..8, 1..4),
        coeffs in prop::collection::vec(-4i64..4, 1..5),
    ) {
        let q = Field::Rational;
        let mut f = WPolynomial::zero(a.clone(), q);
        for &d in &degrees {
            f = f.add(&homogeneous(&a, d, q, &coeffs)).unwrap();
        }
        prop_assume!(!f.is_zero());
        let pieces = f.graded_decompose().unwrap();
        let mut sum = WPolynomial::zero(a.clone(), q);
        for (d, p) in &pieces {
            prop_assert!(!p.is_zero());
            prop_assert_eq!(p.is_weighted_homogeneous().unwrap(), Some(*d));
            sum = sum.add(p).unwrap();
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn power_substitute_commutes_with_evaluation(
        a in weight_strategy(3, 4),
        d in 1u64..8,
        coeffs in prop::collection::vec(-4i64..4, 1..5),
        y in prop::collection::vec(0i64..7, 3),
    ) {
        let field = Field::prime(7).unwrap();
        let f = homogeneous(&a, d, field, &coeffs);
        prop_assume!(!f.is_zero());
        let g = f.power_substitute().unwrap();
        prop_assert!(g.weight().is_straight());
        prop_assert_eq!(g.weighted_degree().unwrap(), d);
        let y: Vec<Scalar> = y.iter().take(a.len()).map(|&v| field.from_i64(v)).collect();
        let x: Vec<Scalar> = y.iter().zip(a.entries()).map(|(c, &w)| c.pow(w)).collect();
        prop_assert_eq!(g.evaluate(&y).unwrap(), f.evaluate(&x).unwrap());
    }

    #[test]
    fn partials_commute_with_reduction(
        a in weight_strategy(3, 3),
        d in 1u64..7,
        coeffs in prop::collection::vec(-30i64..30, 1..6),
        pi in 0usize..5,
        i in 0usize..3,
    ) {
        let f = homogeneous(&a, d, Field::Rational, &coeffs);
        let i = i % a.len();
        let p = PRIMES[pi];
        let lhs = f.partial(i).unwrap().reduce_mod(p).unwrap();
        let rhs = f.reduce_mod(p).unwrap().partial(i).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_print_round_trip(
        a in weight_strategy(3, 3),
        d in 0u64..6,
        coeffs in prop::collection::vec(-9i64..9, 1..6),
        den in 1i64..5,
    ) {
        let q = Field::Rational;
        let f = homogeneous(&a, d, q, &coeffs).scale(&Scalar::Rational(wps::Rational::new(1.into(), den.into())));
        let back = parse_polynomial(&f.to_string(), &a, q).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn well_form_is_idempotent(a in weight_strategy(4, 40)) {
        let (b, trace) = well_form(&a);
        prop_assert!(is_well_formed(&b));
        let (c, again) = well_form(&b);
        prop_assert_eq!(&c, &b);
        prop_assert!(again.is_empty());
        let (p, _) = well_form_with(&a, &WellFormPolicy::PrimeSteps).unwrap();
        prop_assert_eq!(p, b);
        prop_assert_eq!(trace.is_empty(), is_well_formed(&a));
    }

    #[test]
    fn series_round_trip(
        num in prop::collection::vec(-5i128..5, 1..8),
        den in prop::collection::vec(1u64..5, 0..4),
    ) {
        let s = HilbertSeries::new(num, den.clone()).unwrap();
        prop_assume!(!s.numerator().is_empty());
        let max = s.numerator().len() as u64 + 2;
        let coeffs = s.expand((max + den.iter().sum::<u64>()) as usize).unwrap();
        let n = numerator_from_sequence(|k| Ok(coeffs[k as usize]), &den, max).unwrap();
        prop_assert_eq!(HilbertSeries::from_polynomial(&n, den).unwrap(), s);
    }

    #[test]
    fn scaled_points_are_equal(
        a in weight_strategy(3, 4),
        x in prop::collection::vec(0i64..7, 3),
        lambda in 1i64..7,
    ) {
        let field = Field::prime(7).unwrap();
        let x: Vec<i64> = x.into_iter().take(a.len()).collect();
        prop_assume!(x.iter().any(|&v| v != 0));
        let p = WPoint::from_i64s(a.clone(), field, &x).unwrap();
        let q = p.scale(&field.from_i64(lambda));
        prop_assert!(eq_geometric(&p, &q).unwrap());
        prop_assert!(eq_geometric(&q, &p).unwrap());
        prop_assert!(eq_rational(&p, &q).unwrap());
        let n = normalize(&q).point;
        prop_assert_eq!(&normalize(&n).point, &n);
        prop_assert_eq!(n, normalize(&p).point);
    }
}

#[test]
fn exhaustive_well_forming_up_to_sixty() {
    for a0 in 1..=60u64 {
        for a1 in 1..=60u64 {
            let w = Weight::new(vec![a0, a1]).unwrap();
            assert_eq!(well_form(&w).0, Weight::new(vec![1, 1]).unwrap(), "{w}");
            for a2 in 1..=60u64 {
                let w = Weight::new(vec![a0, a1, a2]).unwrap();
                let (b, trace) = well_form(&w);
                assert!(is_well_formed(&b), "{w} -> {b}");
                // replaying the logged moves lands on the same weight
                let mut cur = w.clone();
                for s in &trace.steps {
                    assert_eq!(cur, s.weights_before);
                    cur = apply_step(&cur, PlannedStep { case: s.case, divisor: s.divisor, spared_index: s.spared_index }).unwrap();
                    assert_eq!(cur, s.weights_after);
                }
                assert_eq!(cur, b);
            }
        }
    }
}

#[test]
fn coefficient_bridge() {
    for len in 2..=3usize {
        let mut idx = vec![1u64; len];
        loop {
            let a = Weight::new(idx.clone()).unwrap();
            let s = HilbertSeries::new(vec![1], idx.clone()).unwrap();
            let c = s.expand(30).unwrap();
            for n in 0..=30u64 {
                assert_eq!(graded_piece_basis(&a, n).len() as i128, c[n as usize], "{a} n={n}");
            }
            // odometer over entries 1..=6
            let mut k = 0;
            while k < len && idx[k] == 6 {
                idx[k] = 1;
                k += 1;
            }
            if k == len {
                break;
            }
            idx[k] += 1;
        }
    }
}
