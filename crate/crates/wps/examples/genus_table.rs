// Degree–genus values, branching indices and the Riemann–Hurwitz identity.

use std::fmt::Write;

use wps::curves::{branching_index, genus, genus_sweep, riemann_hurwitz_check, straight_genus};
use wps::Weight;

pub fn run() -> String {
    let mut out = String::new();
    for (d, a) in [(6, "1,2,3"), (4, "1,1,2"), (3, "1,1,1"), (7, "1,2,3"), (4, "1,1,1"), (3, "1,1,2")] {
        let a: Weight = a.parse().unwrap();
        match genus(d, &a) {
            Ok(g) => {
                let b = branching_index(d, &a).unwrap();
                let rh = riemann_hurwitz_check(straight_genus(d) as i64, g as i64, a.product() as i64, b as i64);
                writeln!(out, "d={d} {a}: genus {g}, b={b}, cover genus {}, RH {rh}", straight_genus(d)).unwrap();
            }
            Err(e) => writeln!(out, "d={d} {a}: {e}").unwrap(),
        }
    }

    let p2: Vec<String> = (2..=10).map(|d| straight_genus(d).to_string()).collect();
    writeln!(out, "plane curves d=2..10: {}", p2.join(" ")).unwrap();

    let sweep = genus_sweep(5, 20, true);
    let integral = sweep.iter().filter(|p| p.genus.is_some()).count();
    writeln!(out, "sweep entries<=5 d<=20: {} points, {integral} integral", sweep.len()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
