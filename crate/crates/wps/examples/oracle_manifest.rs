// Runs the pinned oracle instances from `docs/oracle.manifest`.

use std::fmt::Write;

use wps::oracle::{parse_manifest, run_manifest};

pub fn run() -> String {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/docs/oracle.manifest");
    let text = std::fs::read_to_string(path).unwrap();
    let entries = parse_manifest(&text).unwrap();
    let mut out = String::new();
    for r in run_manifest(&entries) {
        let status = if r.passed { "PASS" } else { "FAIL" };
        write!(out, "line {:>2} {:<16} {:<12} p={:<3} {status}", r.line, r.verify, r.weights.to_string(), r.p).unwrap();
        if let Some(e) = r.error {
            write!(out, " ({})", e.code).unwrap();
        }
        out.push('\n');
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
