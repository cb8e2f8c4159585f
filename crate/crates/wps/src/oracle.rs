//! Exhaustive finite-field checks.
//!
//! Each verifier rebuilds its ground truth from definitions with plain
//! residue arithmetic and compares it with the library routine under test.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::curves::PlaneCurve;
use crate::error::{Error, Result};
use crate::exactmath::{is_prime, Field};
use crate::geometry::{self, WPoint};
use crate::truncation;
use crate::weights::Weight;
use crate::wpoly::Monomial;

/// Largest number of affine vectors a scan will visit.
pub const SCAN_LIMIT: u64 = 1_000_000;

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn vector_count(n: usize, p: u64) -> Result<u64> {
    let total = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(p)).unwrap_or(u64::MAX);
    if total > SCAN_LIMIT {
        return Err(Error::TooLarge(format!("{p}^{n} vectors exceed {SCAN_LIMIT}")));
    }
    Ok(total)
}

/// All nonzero vectors of `F_p^n` in lexicographic order.
fn nonzero_vectors(n: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let total = vector_count(n, p)?;
    Ok((1..total)
        .map(|mut k| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = k % p;
                k /= p;
            }
            v
        })
        .collect())
}

fn scale_vec(v: &[u64], a: &[u64], lambda: u64, p: u64) -> Vec<u64> {
    v.iter().zip(a).map(|(&x, &w)| x * pow(lambda, w, p) % p).collect()
}

fn orbit_min(v: &[u64], a: &[u64], p: u64) -> Vec<u64> {
    (1..p).map(|l| scale_vec(v, a, l, p)).min().expect("p >= 2")
}

fn to_point(v: &[u64], a: &Weight, p: u64) -> WPoint {
    WPoint::from_i64s(a.clone(), Field::Prime(p), &v.iter().map(|&x| x as i64).collect::<Vec<_>>())
        .expect("nonzero vector")
}

fn residues(pt: &WPoint) -> Vec<u64> {
    pt.coords().iter().map(|c| c.residue().expect("prime field point")).collect()
}

fn wps_representatives(a: &Weight, p: u64) -> Result<Vec<Vec<u64>>> {
    check_prime(p)?;
    let e = a.entries();
    Ok(nonzero_vectors(e.len(), p)?
        .into_iter()
        .filter(|v| orbit_min(v, e, p) == *v)
        .collect())
}

/// One point per `F_p^*`-orbit, each the lexicographically least vector of
/// its orbit, in increasing order.
pub fn enumerate_wps_points(a: &Weight, p: u64) -> Result<Vec<WPoint>> {
    Ok(wps_representatives(a, p)?.iter().map(|v| to_point(v, a, p)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairMismatch {
    pub left: WPoint,
    pub right: WPoint,
    pub library: bool,
    pub truth: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointEqualityReport {
    pub points: usize,
    pub pairs: usize,
    /// `eq_geometric` against equality over the closure.
    pub geometric_mismatches: Vec<PairMismatch>,
    /// `eq_rational` against equality of `F_p`-orbits.
    pub rational_mismatches: Vec<PairMismatch>,
}

impl PointEqualityReport {
    pub fn passed(&self) -> bool {
        self.geometric_mismatches.is_empty() && self.rational_mismatches.is_empty()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Some `λ ∈ F̄_p^*` has `v_i = λ^{a_i} u_i` for all `i`. Only `μ = λ^g` matters,
/// with `g` the gcd of the weights on the support, and `μ` lies in `F_p`
/// because the reduced weights are coprime.
fn closure_equal(u: &[u64], v: &[u64], a: &[u64], p: u64) -> bool {
    let support: Vec<usize> = (0..u.len()).filter(|&i| u[i] != 0).collect();
    if support != (0..v.len()).filter(|&i| v[i] != 0).collect::<Vec<_>>() {
        return false;
    }
    let g = support.iter().fold(0, |acc, &i| gcd(acc, a[i]));
    (1..p).any(|mu| support.iter().all(|&i| pow(mu, a[i] / g, p) * u[i] % p == v[i]))
}

/// Exhaustive comparison of both point equalities on all pairs of
/// `F_p`-points of `P(a)`.
pub fn verify_point_equality(a: &Weight, p: u64) -> Result<PointEqualityReport> {
    vector_count(a.len(), p)?;
    let reps = wps_representatives(a, p)?;
    let pts: Vec<WPoint> = reps.iter().map(|v| to_point(v, a, p)).collect();
    let e = a.entries();
    let mut report = PointEqualityReport {
        points: pts.len(),
        pairs: 0,
        geometric_mismatches: Vec::new(),
        rational_mismatches: Vec::new(),
    };
    for i in 0..pts.len() {
        for j in i..pts.len() {
            report.pairs += 1;
            let truth = closure_equal(&reps[i], &reps[j], e, p);
            let lib = geometry::eq_geometric(&pts[i], &pts[j])?;
            if lib != truth {
                report.geometric_mismatches.push(PairMismatch {
                    left: pts[i].clone(),
                    right: pts[j].clone(),
                    library: lib,
                    truth,
                });
            }
            let lib = geometry::eq_rational(&pts[i], &pts[j])?;
            if lib != (i == j) {
                report.rational_mismatches.push(PairMismatch {
                    left: pts[i].clone(),
                    right: pts[j].clone(),
                    library: lib,
                    truth: i == j,
                });
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitViolation {
    pub point: WPoint,
    pub orbit: usize,
    pub stabilizer: usize,
    pub library_orbit: usize,
    pub library_stabilizer: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStabilizerReport {
    pub group_order: u64,
    pub vectors: usize,
    pub points: usize,
    pub orbits: usize,
    pub violations: Vec<OrbitViolation>,
}

impl OrbitStabilizerReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn projective_normal(v: &[u64], p: u64) -> Vec<u64> {
    let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
    let inv = pow(lead, p - 2, p);
    v.iter().map(|&x| x * inv % p).collect()
}

/// Scans every nonzero vector of `F_p^{n+1}`: the action of
/// `μ_{a_0} × … × μ_{a_n}` on its straight point must satisfy
/// `|orbit|·|stabilizer| = ∏ a_i`, and both sizes must match the library.
pub fn verify_orbit_stabilizer(a: &Weight, p: u64) -> Result<OrbitStabilizerReport> {
    check_prime(p)?;
    let e = a.entries();
    for &w in e {
        if !(p - 1).is_multiple_of(w) {
            return Err(Error::PrimeUnsuitable { p, modulus: w });
        }
    }
    let roots: Vec<Vec<u64>> = e.iter().map(|&w| (1..p).filter(|&z| pow(z, w, p) == 1).collect()).collect();
    let mut group: Vec<Vec<u64>> = vec![vec![]];
    for r in &roots {
        group = group
            .into_iter()
            .flat_map(|g| r.iter().map(move |&z| [g.clone(), vec![z]].concat()))
            .collect();
    }
    let group_order = a.product();
    let straight = Weight::straight(e.len());
    let vectors = nonzero_vectors(e.len(), p)?;
    let mut points = BTreeSet::new();
    let mut orbits = BTreeSet::new();
    let mut violations = Vec::new();
    for v in &vectors {
        let y = projective_normal(v, p);
        let images: Vec<Vec<u64>> = group
            .iter()
            .map(|g| projective_normal(&v.iter().zip(g).map(|(x, z)| x * z % p).collect::<Vec<_>>(), p))
            .collect();
        let stab = images.iter().filter(|im| **im == y).count();
        let orbit: BTreeSet<Vec<u64>> = images.into_iter().collect();
        let pt = to_point(v, &straight, p);
        let lib_stab = geometry::stabilizer_order(&pt, a)?;
        let lib_orbit = geometry::orbit(&pt, a)?;
        let lib_set: BTreeSet<Vec<u64>> = lib_orbit.iter().map(residues).collect();
        if orbit.len() as u64 * stab as u64 != group_order || stab != lib_stab || lib_set != orbit {
            violations.push(OrbitViolation {
                point: to_point(&y, &straight, p),
                orbit: orbit.len(),
                stabilizer: stab,
                library_orbit: lib_orbit.len(),
                library_stabilizer: lib_stab,
            });
        }
        orbits.insert(orbit.into_iter().next().expect("orbit contains y"));
        points.insert(y);
    }
    Ok(OrbitStabilizerReport {
        group_order,
        vectors: vectors.len(),
        points: points.len(),
        orbits: orbits.len(),
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VeroneseReport {
    pub d: u64,
    pub cap: u64,
    pub generators: Vec<String>,
    pub monomials_checked: usize,
    /// Degree-`kd` monomials that are not products of generators.
    pub unfactored: Vec<String>,
    /// Generators that are products of other generators.
    pub redundant: Vec<String>,
    /// Generators whose degree is not a multiple of `d`.
    pub off_degree: Vec<String>,
    /// Degrees where the library basis size differs from the enumeration.
    pub basis_mismatches: Vec<u64>,
}

impl VeroneseReport {
    pub fn passed(&self) -> bool {
        self.unfactored.is_empty()
            && self.redundant.is_empty()
            && self.off_degree.is_empty()
            && self.basis_mismatches.is_empty()
    }
}

fn monomials_of_degree(a: &[u64], m: u64) -> Vec<Vec<u32>> {
    fn go(a: &[u64], m: u64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if a.len() == 1 {
            if m.is_multiple_of(a[0]) {
                prefix.push((m / a[0]) as u32);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for k in 0..=m / a[0] {
            prefix.push(k as u32);
            go(&a[1..], m - k * a[0], prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(a, m, &mut Vec::new(), &mut out);
    out
}

struct Factorizer<'a> {
    gens: &'a [Vec<u32>],
    memo: HashMap<Vec<u32>, bool>,
}

impl Factorizer<'_> {
    fn factors(&mut self, m: &[u32]) -> bool {
        if m.iter().all(|&e| e == 0) {
            return true;
        }
        if let Some(&r) = self.memo.get(m) {
            return r;
        }
        let gens = self.gens;
        let found = gens.iter().any(|g| {
            g.iter().zip(m).all(|(x, y)| x <= y) && {
                let rest: Vec<u32> = m.iter().zip(g).map(|(y, x)| y - x).collect();
                self.factors(&rest)
            }
        });
        self.memo.insert(m.to_vec(), found);
        found
    }
}

/// Every monomial of degree `kd ≤ cap` must factor into the library's
/// generators, which must themselves be minimal.
pub fn verify_veronese(a: &Weight, d: u64, cap: u64) -> Result<VeroneseReport> {
    if d == 0 {
        return Err(Error::InvalidWeight("truncation degree must be positive".into()));
    }
    let bound = cap.max(truncation::default_degree_bound(a, d));
    let gens = truncation::veronese_generators(a, d, bound)?;
    let e = a.entries();
    let raw: Vec<Vec<u32>> = gens.iter().map(|g| g.exponents().to_vec()).collect();
    let names = crate::wpoly::default_names(a.len());
    let show = |m: &[u32]| Monomial(m.to_vec()).display_with(&names);
    let mut f = Factorizer { gens: &raw, memo: HashMap::new() };
    let mut report = VeroneseReport {
        d,
        cap,
        generators: raw.iter().map(|g| show(g)).collect(),
        monomials_checked: 0,
        unfactored: Vec::new(),
        redundant: Vec::new(),
        off_degree: Vec::new(),
        basis_mismatches: Vec::new(),
    };
    for (k, g) in raw.iter().enumerate() {
        let deg: u64 = g.iter().zip(e).map(|(&x, &w)| x as u64 * w).sum();
        if !deg.is_multiple_of(d) {
            report.off_degree.push(show(g));
        }
        let mut proper = false;
        for (j, h) in raw.iter().enumerate() {
            if j != k && h.iter().zip(g).all(|(x, y)| x <= y) {
                let rest: Vec<u32> = g.iter().zip(h).map(|(y, x)| y - x).collect();
                if rest.iter().any(|&x| x > 0) && f.factors(&rest) {
                    proper = true;
                    break;
                }
            }
        }
        if proper {
            report.redundant.push(show(g));
        }
    }
    let mut m = d;
    while m <= cap {
        let mons = monomials_of_degree(e, m);
        if truncation::graded_piece_basis(a, m).len() != mons.len() {
            report.basis_mismatches.push(m);
        }
        for mon in &mons {
            report.monomials_checked += 1;
            if !f.factors(mon) {
                report.unfactored.push(show(mon));
            }
        }
        m += d;
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveScan {
    pub points: Vec<WPoint>,
    pub singular_points: Vec<WPoint>,
}

type ResidueTerms = Vec<(u64, Vec<u32>)>;

fn eval_residue(terms: &ResidueTerms, v: &[u64], p: u64) -> u64 {
    terms.iter().fold(0, |acc, (c, e)| {
        let t = e.iter().zip(v).fold(*c, |t, (&k, &x)| t * pow(x, k as u64, p) % p);
        (acc + t) % p
    })
}

fn partial_residue(terms: &ResidueTerms, i: usize, p: u64) -> ResidueTerms {
    terms
        .iter()
        .filter(|(_, e)| e[i] > 0)
        .map(|(c, e)| {
            let mut e = e.clone();
            let k = e[i] as u64;
            e[i] -= 1;
            (c * (k % p) % p, e)
        })
        .collect()
}

/// The `F_p`-points of `P(a)` on `C_f`, and those where every partial
/// derivative also vanishes. Rational coefficients are reduced mod `p`.
pub fn scan_curve_points(c: &PlaneCurve, p: u64) -> Result<CurveScan> {
    check_prime(p)?;
    let f = match c.poly().field() {
        Field::Rational => c.poly().reduce_mod(p)?,
        Field::Prime(q) if q == p => c.poly().clone(),
        other => return Err(Error::FieldMismatch { left: other.to_string(), right: Field::Prime(p).to_string() }),
    };
    let terms: ResidueTerms = f
        .terms()
        .into_iter()
        .map(|(m, s)| (s.residue().expect("prime field"), m.exponents().to_vec()))
        .collect();
    let partials: Vec<ResidueTerms> = (0..3).map(|i| partial_residue(&terms, i, p)).collect();
    let a = c.weight();
    let mut scan = CurveScan { points: Vec::new(), singular_points: Vec::new() };
    for v in wps_representatives(a, p)? {
        if eval_residue(&terms, &v, p) != 0 {
            continue;
        }
        let pt = to_point(&v, a, p);
        if partials.iter().all(|d| eval_residue(d, &v, p) == 0) {
            scan.singular_points.push(pt.clone());
        }
        scan.points.push(pt);
    }
    Ok(scan)
}

/// One line of an oracle manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifestEntry {
    pub line: usize,
    pub verify: String,
    pub weights: Weight,
    pub p: u64,
    pub d: Option<u64>,
    pub cap: Option<u64>,
    pub poly: Option<String>,
    /// Pinned point count for `curve_points`.
    pub expect: Option<usize>,
}

pub const VERIFIERS: [&str; 5] = ["enumerate", "point_equality", "orbit_stabilizer", "veronese", "curve_points"];

fn tokens(line: &str) -> std::result::Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    for ch in line.chars() {
        match ch {
            '"' => quoted = !quoted,
            c if c.is_whitespace() && !quoted => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if quoted {
        return Err("unterminated quote".into());
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

/// Parses `verify=<name> weights=<a> p=<prime> [d=<k>] [cap=<n>] [poly="<f>"] [expect=<n>]`
/// lines. Blank lines and `#` comments are skipped.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::Manifest { line, msg };
        let mut fields: HashMap<String, String> = HashMap::new();
        for tok in tokens(body).map_err(bad)? {
            let (k, v) = tok.split_once('=').ok_or_else(|| bad(format!("`{tok}` is not key=value")))?;
            if fields.insert(k.to_string(), v.to_string()).is_some() {
                return Err(bad(format!("duplicate key `{k}`")));
            }
        }
        let take = |fields: &mut HashMap<String, String>, k: &str| fields.remove(k);
        let num = |v: Option<String>, k: &str| -> Result<Option<u64>> {
            v.map(|s| s.parse::<u64>().map_err(|_| bad(format!("{k}=`{s}` is not a number"))))
                .transpose()
        };
        let verify = take(&mut fields, "verify").ok_or_else(|| bad("missing verify=".into()))?;
        if !VERIFIERS.contains(&verify.as_str()) {
            return Err(bad(format!("unknown verifier `{verify}`")));
        }
        let weights: Weight = take(&mut fields, "weights")
            .ok_or_else(|| bad("missing weights=".into()))?
            .parse()
            .map_err(|e: Error| bad(e.to_string()))?;
        let p = num(take(&mut fields, "p"), "p")?.ok_or_else(|| bad("missing p=".into()))?;
        let d = num(take(&mut fields, "d"), "d")?;
        let cap = num(take(&mut fields, "cap"), "cap")?;
        let poly = take(&mut fields, "poly");
        let expect = num(take(&mut fields, "expect"), "expect")?.map(|n| n as usize);
        if let Some(k) = fields.keys().min() {
            return Err(bad(format!("unknown key `{k}`")));
        }
        if verify == "veronese" && d.is_none() {
            return Err(bad("veronese needs d=".into()));
        }
        if verify == "curve_points" && poly.is_none() {
            return Err(bad("curve_points needs poly=".into()));
        }
        entries.push(ManifestEntry { line, verify, weights, p, d, cap, poly, expect });
    }
    Ok(entries)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryError {
    pub code: &'static str,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryResult {
    pub line: usize,
    pub verify: String,
    pub weights: Weight,
    pub p: u64,
    pub passed: bool,
    pub report: Option<Value>,
    pub error: Option<EntryError>,
}

fn json<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

fn run_entry(e: &ManifestEntry) -> Result<(bool, Value)> {
    let (a, p) = (&e.weights, e.p);
    Ok(match e.verify.as_str() {
        "enumerate" => {
            let pts = enumerate_wps_points(a, p)?;
            let again = enumerate_wps_points(a, p)?;
            let passed = pts == again && e.expect.is_none_or(|n| n == pts.len());
            (passed, serde_json::json!({ "count": pts.len(), "points": pts }))
        }
        "point_equality" => {
            let r = verify_point_equality(a, p)?;
            (r.passed(), json(&r))
        }
        "orbit_stabilizer" => {
            let r = verify_orbit_stabilizer(a, p)?;
            (r.passed(), json(&r))
        }
        "veronese" => {
            let d = e.d.expect("checked at parse");
            let cap = e.cap.unwrap_or_else(|| truncation::default_degree_bound(a, d));
            let r = verify_veronese(a, d, cap)?;
            (r.passed(), json(&r))
        }
        "curve_points" => {
            let text = e.poly.as_deref().expect("checked at parse");
            let f = crate::parse::parse_polynomial(text, a, Field::Rational)?;
            let r = scan_curve_points(&PlaneCurve::new(f)?, p)?;
            let passed = e.expect.is_none_or(|n| n == r.points.len());
            (
                passed,
                serde_json::json!({
                    "count": r.points.len(),
                    "singular_count": r.singular_points.len(),
                    "points": r.points,
                    "singular_points": r.singular_points,
                }),
            )
        }
        other => unreachable!("verifier {other} rejected at parse"),
    })
}

/// Runs entries in parallel; results keep manifest order.
pub fn run_manifest(entries: &[ManifestEntry]) -> Vec<EntryResult> {
    entries
        .par_iter()
        .map(|e| {
            let (passed, report, error) = match run_entry(e) {
                Ok((ok, r)) => (ok, Some(r), None),
                Err(err) => (false, None, Some(EntryError { code: err.code(), message: err.to_string() })),
            };
            EntryResult { line: e.line, verify: e.verify.clone(), weights: e.weights.clone(), p: e.p, passed, report, error }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn w(e: &[u64]) -> Weight {
        Weight::new(e.to_vec()).unwrap()
    }

    #[test]
    fn point_counts() {
        assert_eq!(enumerate_wps_points(&w(&[1, 1]), 2).unwrap().len(), 3);
        assert_eq!(enumerate_wps_points(&w(&[1, 1]), 5).unwrap().len(), 6);
        assert_eq!(enumerate_wps_points(&w(&[1, 1, 2]), 3).unwrap().len(), 14);
        assert_eq!(enumerate_wps_points(&w(&[1, 1, 2]), 5).unwrap().len(), 32);
        assert_eq!(enumerate_wps_points(&w(&[1, 2, 3]), 7).unwrap().len(), 60);
        assert_eq!(enumerate_wps_points(&w(&[1, 1]), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn representatives_are_orbit_minima() {
        let pts = enumerate_wps_points(&w(&[1, 1]), 5).unwrap();
        let first: Vec<u64> = residues(&pts[0]);
        assert_eq!(first, vec![0, 1]);
        assert_eq!(residues(&pts[1]), vec![1, 0]);
    }

    #[test]
    fn point_equality_instances() {
        for (a, p) in [(vec![1, 1, 2], 5), (vec![1, 2, 3], 7), (vec![1, 1], 3)] {
            let r = verify_point_equality(&w(&a), p).unwrap();
            assert!(r.passed(), "{a:?} over F_{p}: {r:?}");
        }
        assert!(matches!(verify_point_equality(&w(&[1, 1, 1, 1]), 37), Err(Error::TooLarge(_))));
    }

    #[test]
    fn closure_equality_uses_support_gcd() {
        // |0:0:1| = |0:0:2| in P(1,1,2) even though 2 is not a square mod 5
        assert!(closure_equal(&[0, 0, 1], &[0, 0, 2], &[1, 1, 2], 5));
        assert!(!closure_equal(&[1, 0, 1], &[1, 0, 2], &[1, 1, 2], 5));
    }

    #[test]
    fn orbit_stabilizer_instances() {
        let r = verify_orbit_stabilizer(&w(&[1, 2, 3]), 7).unwrap();
        assert!(r.passed());
        assert_eq!((r.group_order, r.vectors, r.points), (6, 342, 57));
        assert!(verify_orbit_stabilizer(&w(&[1, 1, 2]), 5).unwrap().passed());
        let trivial = verify_orbit_stabilizer(&w(&[1, 1, 1]), 5).unwrap();
        assert_eq!(trivial.orbits, trivial.points);
        assert_eq!(
            verify_orbit_stabilizer(&w(&[1, 2, 3]), 5),
            Err(Error::PrimeUnsuitable { p: 5, modulus: 3 })
        );
    }

    #[test]
    fn veronese_instances() {
        let r = verify_veronese(&w(&[1, 1]), 2, 12).unwrap();
        assert!(r.passed());
        assert_eq!(r.generators, vec!["x^2", "x*y", "y^2"]);
        assert!(verify_veronese(&w(&[6, 10, 15]), 5, 60).unwrap().passed());
        let one = verify_veronese(&w(&[1, 2, 3]), 1, 12).unwrap();
        assert!(one.passed());
        assert_eq!(one.generators, vec!["x", "y", "z"]);
    }

    #[test]
    fn curve_scans() {
        let curve = |f: &str, a: &[u64]| PlaneCurve::new(parse_polynomial(f, &w(a), Field::Rational).unwrap()).unwrap();
        let line = scan_curve_points(&curve("x", &[1, 1, 1]), 3).unwrap();
        assert_eq!((line.points.len(), line.singular_points.len()), (4, 0));
        let double = scan_curve_points(&curve("x^2", &[1, 1, 1]), 3).unwrap();
        assert_eq!(double.singular_points.len(), 4);
        let node = scan_curve_points(&curve("y^2*z - x^3 - x^2*z", &[1, 1, 1]), 5).unwrap();
        assert_eq!(node.points.len(), 5);
        assert_eq!(node.singular_points.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["|0:0:1|"]);
        let big = scan_curve_points(&curve("x^5+y^3+z^2", &[12, 20, 30]), 7).unwrap();
        assert_eq!((big.points.len(), big.singular_points.len()), (20, 0));
        assert_eq!(scan_curve_points(&curve("x^6+y^3+z^2", &[1, 2, 3]), 7).unwrap().points.len(), 4);
        assert_eq!(scan_curve_points(&curve("x^4+y^4+z^2+x*y*z", &[1, 1, 2]), 5).unwrap().points.len(), 8);
        assert_eq!(scan_curve_points(&curve("x^2+y^2+z^2", &[1, 1, 1]), 7).unwrap().points.len(), 8);
    }

    #[test]
    fn manifest_round() {
        let text = "# instances\n\
            verify=point_equality weights=1,1,2 p=5\n\
            \n\
            verify=veronese weights=6,10,15 p=7 d=5 cap=60\n\
            verify=curve_points weights=12,20,30 p=7 poly=\"x^5 + y^3 + z^2\" expect=20\n\
            verify=orbit_stabilizer weights=1,2,3 p=5\n";
        let entries = parse_manifest(text).unwrap();
        assert_eq!(entries.iter().map(|e| e.line).collect::<Vec<_>>(), vec![2, 4, 5, 6]);
        let results = run_manifest(&entries);
        assert_eq!(results.iter().map(|r| r.passed).collect::<Vec<_>>(), vec![true, true, true, false]);
        assert_eq!(results[3].error.as_ref().unwrap().code, "E_PRIME_UNSUITABLE");
    }

    #[test]
    fn manifest_errors() {
        assert!(matches!(parse_manifest("verify=nope weights=1,1 p=3"), Err(Error::Manifest { line: 1, .. })));
        assert!(matches!(parse_manifest("\nverify=enumerate p=3"), Err(Error::Manifest { line: 2, .. })));
        assert!(matches!(parse_manifest("verify=enumerate weights=1,1 p=3 x=1"), Err(Error::Manifest { .. })));
        assert!(matches!(parse_manifest("verify=veronese weights=1,1 p=3"), Err(Error::Manifest { .. })));
        assert!(matches!(parse_manifest("verify=enumerate weights=0,1 p=3"), Err(Error::Manifest { .. })));
    }
}
