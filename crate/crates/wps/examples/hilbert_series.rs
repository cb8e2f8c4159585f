// Hilbert series of rings of functions on curves.

use std::collections::BTreeMap;
use std::fmt::Write;

use wps::hilbert::{complete_intersection_series, discovered_table, generator_discovery, numerator_from_sequence};
use wps::parse::parse_univariate;
use wps::{EllSequence, HilbertSeries};

pub fn run() -> String {
    let mut out = String::new();

    let s = HilbertSeries::from_polynomial(&parse_univariate("1 - t^6", "t").unwrap(), vec![1, 2, 3]).unwrap();
    writeln!(out, "{s} = {:?}", s.expand(10).unwrap()).unwrap();

    let e = EllSequence::elliptic();
    let ell: Vec<u64> = (0..=10).map(|n| e.ell(n).unwrap()).collect();
    writeln!(out, "l(np) on an elliptic curve: {ell:?}").unwrap();
    let n = numerator_from_sequence(e.series_provider(), &[1, 2, 3], 12).unwrap();
    writeln!(out, "recovered numerator: {n}").unwrap();

    for row in generator_discovery(&e, 10).unwrap().rows {
        writeln!(out, "  degree {}: l={} products={} new={}", row.degree, row.ell, row.products, row.new_generators).unwrap();
    }

    for r in discovered_table(&e, 4).unwrap() {
        writeln!(out, "k={} {:?}: {} relations {:?}", r.k, r.weights, r.numerator, r.relation_degrees).unwrap();
    }

    let ci = complete_intersection_series(&[1, 1, 1, 1], &[2, 2]).unwrap();
    writeln!(out, "two quadrics in P^3: {ci}").unwrap();

    // genus 3: the low values depend on the point and must be given
    let bare = EllSequence::new(3, 1, BTreeMap::new()).unwrap();
    writeln!(out, "l(2p) on a quartic: {}", bare.ell(2).unwrap_err()).unwrap();
    let quartic = EllSequence::new(3, 1, BTreeMap::from([(1, 1), (2, 1), (3, 1), (4, 2)])).unwrap();
    let small = numerator_from_sequence(quartic.series_provider(), &[1, 1], 10).unwrap();
    let big = numerator_from_sequence(quartic.series_provider(), &[1, 4, 5, 6, 7], 25).unwrap();
    writeln!(out, "quartic over (1-t)^2: {small}").unwrap();
    writeln!(out, "quartic over (1,4,5,6,7): {big}").unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
