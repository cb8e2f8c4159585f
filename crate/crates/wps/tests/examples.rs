//! Every example runs and prints what it claims.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }
    };
}

example!(wellform);
example!(straighten);
example!(truncation);
example!(curve_check);
example!(genus_table);
example!(hilbert_series);
example!(points);
example!(orbit_stabilizer);
example!(oracle_manifest);

#[test]
fn wellform_chains() {
    let out = wellform::run();
    assert!(out.contains("default -> (1,1,1)"));
    assert!(out.contains("scripted: (6,10,15) -> (6,2,3) -> (3,1,3) -> (1,1,1)"));
    assert!(out.contains("not coprime"));
}

#[test]
fn straighten_reaches_the_line() {
    let out = straighten::run();
    assert!(out.contains("relation x + y + z of degree 1"));
    assert!(out.contains("generators X,Y,Z = x^5, y^3, z^2"));
    assert!(out.contains("[power-raised]"));
}

#[test]
fn truncation_generators() {
    let out = truncation::run();
    assert!(out.contains("basis (1,1,2) degree 2: x^2, x*y, y^2, z"));
    assert!(out.contains("R^(5) of (6,10,15): y, z, x^5 with weights [2, 3, 6]"));
    assert!(out.contains("R^(2) of (1,1): x^2, x*y, y^2"));
}

#[test]
fn curve_checks() {
    let out = curve_check::run();
    assert!(out.contains("cover: x^4 + x*y*z^2 + y^4 + z^4"));
    assert!(out.contains("vertices on curve: [false, true, true]"));
    assert!(out.contains("not general: missing x_j*x2^m term"));
}

#[test]
fn genus_values() {
    let out = genus_table::run();
    assert!(out.contains("d=6 (1,2,3): genus 1, b=18"));
    assert!(out.contains("d=7 (1,2,3): genus 1, b=28"));
    assert!(out.contains("plane curves d=2..10: 0 1 3 6 10 15 21 28 36"));
}

#[test]
fn hilbert_examples() {
    let out = hilbert_series::run();
    assert!(out.contains("recovered numerator: 1 - t^6"));
    assert!(out.contains("k=4 [1, 1, 1, 1]: 1 - 2*t^2 + t^4"));
    assert!(out.contains("quartic over (1-t)^2: 1 - t + t^4"));
    assert!(out.contains("- t^23 - t^24 - t^25"));
}

#[test]
fn point_equalities() {
    let out = points::run();
    assert!(out.contains("|1:0:2| = |3:0:18| in P(1,1,2): true"));
    assert!(out.contains("|0:0:1| vs |0:0:2| geometric=true rational=false"));
    assert!(out.contains("equivalent=true"));
}

#[test]
fn orbit_scan() {
    let out = orbit_stabilizer::run();
    assert!(out.contains("|1:0:1|: stabilizer 2, orbit 3"));
    assert!(out.contains("0 violations"));
}

#[test]
fn manifest_all_pass() {
    let out = oracle_manifest::run();
    assert_eq!(out.lines().count(), 16);
    assert!(!out.contains("FAIL"), "{out}");
}
