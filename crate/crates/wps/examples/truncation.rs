// Graded pieces and Veronese truncations.

use std::fmt::Write;

use wps::truncation::{default_degree_bound, generator_weights, graded_piece_basis, veronese_generators};
use wps::wpoly::default_names;
use wps::Weight;

fn show(a: &Weight, ms: &[wps::Monomial]) -> String {
    let names = default_names(a.len());
    ms.iter().map(|m| m.display_with(&names)).collect::<Vec<_>>().join(", ")
}

pub fn run() -> String {
    let mut out = String::new();

    // the monomials embedding P(1,1,2) in P^3
    let a: Weight = "1,1,2".parse().unwrap();
    writeln!(out, "basis {a} degree 2: {}", show(&a, &graded_piece_basis(&a, 2))).unwrap();
    for n in 0..=6 {
        write!(out, "{} ", graded_piece_basis(&a, n).len()).unwrap();
    }
    out.push('\n');

    for (w, d) in [("1,1", 2), ("1,1", 3), ("6,10,15", 5), ("1,2,3", 2)] {
        let a: Weight = w.parse().unwrap();
        let bound = default_degree_bound(&a, d);
        let gens = veronese_generators(&a, d, bound).unwrap();
        let gw = generator_weights(&a, d, &gens);
        writeln!(out, "R^({d}) of {a}: {} with weights {gw:?}", show(&a, &gens)).unwrap();
    }

    let a: Weight = "6,10,15".parse().unwrap();
    writeln!(out, "bound 30: {}", veronese_generators(&a, 5, 30).unwrap_err()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
