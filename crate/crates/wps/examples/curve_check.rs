// Sufficient generality, vertices, straight covers and edge censuses.

use std::fmt::Write;

use wps::curves::{branch_census, edge_squarefree_check, straight_cover, sufficiently_general, vertex_membership};
use wps::parse::parse_polynomial;
use wps::{Field, PlaneCurve, Weight};

fn curve(f: &str, a: &str) -> PlaneCurve {
    let a: Weight = a.parse().unwrap();
    PlaneCurve::new(parse_polynomial(f, &a, Field::Rational).unwrap()).unwrap()
}

pub fn run() -> String {
    let mut out = String::new();
    let cases = [
        ("x^4 + y^4 + z^2 + x*y*z", "1,1,2"),
        ("x^6 + y^3 + z^2", "1,2,3"),
        ("x^7 + y^2*z + x*z^2", "1,2,3"),
        ("x^7 + x*y^3 + y^2*z", "1,2,3"),
        ("x^2 + y^2", "1,1,1"),
    ];
    for (f, a) in cases {
        let c = curve(f, a);
        let g = sufficiently_general(&c).unwrap();
        writeln!(out, "{} in P({a}), degree {}", c.poly(), c.degree()).unwrap();
        if !g.general {
            let why: Vec<String> = g.violations.iter().map(|v| v.to_string()).collect();
            writeln!(out, "  not general: {}", why.join("; ")).unwrap();
            continue;
        }
        writeln!(out, "  vertices on curve: {:?}", vertex_membership(&c).unwrap()).unwrap();
        writeln!(out, "  cover: {}", straight_cover(&c).unwrap().poly()).unwrap();
        let edges = edge_squarefree_check(&c).unwrap();
        let census = branch_census(&c).unwrap();
        for (e, n) in edges.edges.iter().zip(&census.edges) {
            writeln!(
                out,
                "  edge {}: {}  squarefree={} roots={} predicted={}",
                e.i, e.restriction, e.squarefree, n.count, n.predicted
            )
            .unwrap();
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
