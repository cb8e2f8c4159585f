// `μ_1 × μ_2 × μ_3` acting on `P^2(F_7)`, the finite shadow of the cover
// `P^2 → P(1,2,3)`.

use std::fmt::Write;

use wps::geometry::{cover_project, orbit, stabilizer_order};
use wps::oracle::verify_orbit_stabilizer;
use wps::{Field, WPoint, Weight};

pub fn run() -> String {
    let mut out = String::new();
    let f7 = Field::prime(7).unwrap();
    let a: Weight = "1,2,3".parse().unwrap();
    let straight = Weight::straight(3);
    for y in ["1:1:1", "1:0:1", "0:1:0", "0:0:1", "1:3:5"] {
        let y = WPoint::parse(y, &straight, f7).unwrap();
        let orb = orbit(&y, &a).unwrap();
        let shown: Vec<String> = orb.iter().map(|p| p.to_string()).collect();
        writeln!(
            out,
            "{y}: stabilizer {}, orbit {} -> {}  image {}",
            stabilizer_order(&y, &a).unwrap(),
            orb.len(),
            shown.join(" "),
            cover_project(&y, &a).unwrap()
        )
        .unwrap();
    }
    let r = verify_orbit_stabilizer(&a, 7).unwrap();
    writeln!(
        out,
        "scan: {} vectors, {} points, {} orbits, {} violations",
        r.vectors,
        r.points,
        r.orbits,
        r.violations.len()
    )
    .unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
