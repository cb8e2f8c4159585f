// `V(x^5 + y^3 + z^2) ⊂ P(12,20,30)` is the line `X + Y + Z = 0` in `P^2`.

use std::fmt::Write;

use wps::parse::parse_polynomial;
use wps::truncation::{straighten_chain, straighten_chain_with};
use wps::{Field, WellFormPolicy, Weight};

pub fn run() -> String {
    let mut out = String::new();
    let a: Weight = "12,20,30".parse().unwrap();
    let f = parse_polynomial("x^5 + y^3 + z^2", &a, Field::Rational).unwrap();
    writeln!(out, "f = {f}, degree {}", f.weighted_degree().unwrap()).unwrap();

    let script = WellFormPolicy::Scripted(
        ["I:2", "II:5@0", "II:2@2", "II:3@1"].iter().map(|s| s.parse().unwrap()).collect(),
    );
    let (pres, trace) = straighten_chain_with(&f, &script).unwrap();
    for s in &trace.steps {
        writeln!(out, "  {s}").unwrap();
    }
    writeln!(out, "weight {}", pres.weight).unwrap();
    writeln!(out, "generators X,Y,Z = {}", pres.generator_names.join(", ")).unwrap();
    writeln!(out, "relation {} of degree {}", pres.relations[0], pres.relation_degrees[0]).unwrap();

    let (other, _) = straighten_chain(&f).unwrap();
    writeln!(out, "default policy gives the same relation: {}", other.relations == pres.relations).unwrap();

    // odd z-exponents force f^2 before z^2 can become a generator
    let b: Weight = "2,2,3".parse().unwrap();
    let g = parse_polynomial("x^3*z + y^3*z + z^3", &b, Field::Rational).unwrap();
    let (p, t) = straighten_chain(&g).unwrap();
    writeln!(out, "{g} in P{b}: {} under {} [{}]", p.relations[0], p.weight, t.steps[0].ideal_note).unwrap();

    writeln!(out, "{}", serde_json::to_string(&pres).unwrap()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
