// Well-forming `P(12,20,30)` three ways: the default policy, one prime at
// a time, and a scripted chain.

use std::fmt::Write;

use wps::weights::PlannedStep;
use wps::{is_well_formed, well_form, well_form_with, WellFormPolicy, Weight};

pub fn run() -> String {
    let mut out = String::new();
    let a: Weight = "12,20,30".parse().unwrap();
    writeln!(out, "{a} well-formed: {}", is_well_formed(&a)).unwrap();

    let (b, trace) = well_form(&a);
    writeln!(out, "default -> {b}").unwrap();
    for s in &trace.steps {
        writeln!(out, "  {s}").unwrap();
    }

    let (_, trace) = well_form_with(&a, &WellFormPolicy::PrimeSteps).unwrap();
    let chain: Vec<String> = trace.chain().iter().map(|w| w.to_string()).collect();
    writeln!(out, "prime steps: {}", chain.join(" -> ")).unwrap();

    let script: Vec<PlannedStep> = ["I:2", "II:5@0", "II:2@2", "II:3@1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let (_, trace) = well_form_with(&a, &WellFormPolicy::Scripted(script)).unwrap();
    let chain: Vec<String> = trace.chain().iter().map(|w| w.to_string()).collect();
    writeln!(out, "scripted: {}", chain.join(" -> ")).unwrap();

    // a bad move is refused, not repaired
    let bad = WellFormPolicy::Scripted(vec!["II:2@1".parse().unwrap()]);
    writeln!(out, "II:2@1 on {a}: {}", well_form_with(&a, &bad).unwrap_err()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
