// Points of weighted projective space and the two equalities.

use std::fmt::Write;

use wps::geometry::{eq_geometric, eq_rational, normalize, patch_equivalent, patch_representative};
use wps::{Field, WPoint, Weight};

pub fn run() -> String {
    let mut out = String::new();
    let q = Field::Rational;

    let a: Weight = "1,1,2".parse().unwrap();
    let p = WPoint::parse("1:0:2", &a, q).unwrap();
    let r = WPoint::parse("3:0:18", &a, q).unwrap();
    writeln!(out, "{p} = {r} in P{a}: {}", eq_geometric(&p, &r).unwrap()).unwrap();
    writeln!(out, "normal form of {r}: {}", normalize(&r).point).unwrap();

    let f7 = Field::prime(7).unwrap();
    let a: Weight = "2,2".parse().unwrap();
    let (u, v) = (WPoint::parse("1:1", &a, f7).unwrap(), WPoint::parse("3:1", &a, f7).unwrap());
    writeln!(out, "P{a}(F_7): {u} vs {v} geometric={} rational={}", eq_geometric(&u, &v).unwrap(), eq_rational(&u, &v).unwrap()).unwrap();

    // equal over the closure but not over F_5
    let f5 = Field::prime(5).unwrap();
    let a: Weight = "1,1,2".parse().unwrap();
    let (u, v) = (WPoint::parse("0:0:1", &a, f5).unwrap(), WPoint::parse("0:0:2", &a, f5).unwrap());
    writeln!(out, "P{a}(F_5): {u} vs {v} geometric={} rational={}", eq_geometric(&u, &v).unwrap(), eq_rational(&u, &v).unwrap()).unwrap();

    // the patch z != 0 of P(1,1,2) is A^2 modulo ±1
    let f13 = Field::prime(13).unwrap();
    let a: Weight = "1,1,2".parse().unwrap();
    let x = WPoint::parse("1:1:4", &a, f13).unwrap();
    let rep = patch_representative(&x, 2).unwrap();
    let other = patch_representative(&x.scale(&f13.from_i64(7)), 2).unwrap();
    let show = |c: &[wps::Scalar]| c.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
    writeln!(
        out,
        "patch 2 of {x}: ({}) and ({}) equivalent={}",
        show(&rep),
        show(&other),
        patch_equivalent(&rep, &other, &a, 2).unwrap()
    )
    .unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
