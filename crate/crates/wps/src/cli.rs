//! The `wps` command line: argument grammar, dispatch and output.
//!
//! [`run`] never touches the process: it returns exit code and both output
//! streams, so the binary is a thin wrapper.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::builder::BoolishValueParser;
use clap::{ArgAction, Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::curves::{self, PlaneCurve};
use crate::error::{Error, Result};
use crate::exactmath::Field;
use crate::geometry::{self, WPoint};
use crate::hilbert::{self, EllSequence, HilbertSeries};
use crate::oracle;
use crate::parse::{parse_polynomial, parse_univariate};
use crate::truncation;
use crate::weights::{self, Case, PlannedStep, WellFormPolicy, Weight};
use crate::wpoly::WPolynomial;

#[derive(Parser, Debug)]
#[command(name = "wps", version, about = "Exact computations on weighted projective spaces")]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(
        long,
        global = true,
        env = "WPS_JSON",
        action = ArgAction::SetTrue,
        value_parser = BoolishValueParser::new()
    )]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduce a weight to a well-formed one, printing each step
    Wellform {
        weights: String,
        /// Divide by one prime at a time
        #[arg(long, conflicts_with = "steps")]
        prime_steps: bool,
        /// Comma-separated moves such as I:2,II:5@0 applied before the default policy
        #[arg(long)]
        steps: Option<String>,
    },
    /// Genus of a sufficiently general degree-d curve in P(a0,a1,a2)
    Genus {
        #[arg(long, required_unless_present = "sweep")]
        weights: Option<String>,
        #[arg(long, required_unless_present = "sweep")]
        degree: Option<u64>,
        /// Tabulate every admissible (d, a) in a range
        #[arg(long, conflicts_with_all = ["weights", "degree"])]
        sweep: bool,
        #[arg(long, default_value_t = 9)]
        max_entry: u64,
        #[arg(long, default_value_t = 60)]
        max_degree: u64,
        /// Include well-formed weights that are not pairwise coprime
        #[arg(long)]
        all_well_formed: bool,
    },
    /// Homogeneity, sufficient generality and vertex membership of a curve
    Check(CurveArgs),
    /// Straight cover of a curve with its edge restrictions
    Cover(CurveArgs),
    /// Generators of the d-th truncation, and the image of (f) if given
    Truncate {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        poly: Option<String>,
        /// Largest degree searched for generators
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Carry (f) through the well-forming chain
    Straighten {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        poly: String,
        #[arg(long, conflicts_with = "steps")]
        prime_steps: bool,
        #[arg(long)]
        steps: Option<String>,
    },
    /// Hilbert series tools
    Hilbert {
        #[command(subcommand)]
        action: HilbertCommand,
    },
    /// Compare two points of P(a)
    Eq {
        #[arg(long)]
        weights: String,
        /// `q` for the rationals or a prime p
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Brute-force verifiers
    Oracle {
        #[command(subcommand)]
        action: OracleCommand,
    },
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    #[arg(long)]
    pub weights: String,
    #[arg(long)]
    pub poly: String,
    /// `q` for the rationals or a prime p
    #[arg(long, default_value = "q")]
    pub field: String,
}

#[derive(Args, Debug)]
pub struct EllArgs {
    #[arg(long, default_value_t = 1)]
    pub genus: u64,
    #[arg(long, default_value_t = 1)]
    pub divisor_degree: u64,
    /// `n=value` for an l-value Riemann-Roch leaves open (repeatable)
    #[arg(long = "override")]
    pub overrides: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum HilbertCommand {
    /// Coefficients of N(t) / prod(1 - t^a_i)
    Expand {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        numerator: String,
        #[arg(short = 'N', default_value_t = 10)]
        n: usize,
    },
    /// Numerator of sum l(nkD) t^n over the given weights
    Numerator {
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long, default_value_t = 30)]
        max_degree: u64,
        #[command(flatten)]
        ell: EllArgs,
    },
    /// Generator weights and numerators of the rings R(C, kD)
    Table {
        #[arg(long, default_value_t = 4)]
        k_max: u64,
        #[command(flatten)]
        ell: EllArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Run every line of a manifest
    Run {
        #[arg(long)]
        manifest: std::path::PathBuf,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A successful command: text form, JSON form, and whether it still failed
/// a check (exit 1 with the given error code).
struct Report {
    text: String,
    json: Value,
    failure: Option<(&'static str, String)>,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, failure: None }
    }
}

fn envelope(command: Option<&str>, result: Option<Value>, error: Option<(&str, String)>) -> String {
    let mut v = json!({ "command": command, "ok": error.is_none() });
    if let Some(r) = result {
        v["result"] = r;
    }
    if let Some((code, message)) = error {
        v["error"] = json!({ "code": code, "message": message });
    }
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

/// Parses and runs one command line (`args[0]` is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: e.to_string(), stderr: String::new() };
            }
            let wants_json = args.iter().any(|a| a == "--json")
                || std::env::var("WPS_JSON").is_ok_and(|v| v == "1" || v == "true");
            let msg = e.to_string();
            return if wants_json {
                let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
                Outcome { code: 2, stdout: envelope(None, None, Some(("E_USAGE", first))), stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: msg }
            };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(&cli.command) {
        Ok(report) => {
            let code = if report.failure.is_some() { 1 } else { 0 };
            if cli.json {
                let stdout = envelope(Some(name), Some(report.json), report.failure);
                Outcome { code, stdout, stderr: String::new() }
            } else {
                let stderr = report.failure.map(|(c, m)| format!("{c}: {m}\n")).unwrap_or_default();
                Outcome { code, stdout: report.text, stderr }
            }
        }
        Err(e) => {
            let code = if e.is_usage() { 2 } else { 1 };
            if cli.json {
                Outcome { code, stdout: envelope(Some(name), None, Some((e.code(), e.to_string()))), stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: format!("{}: {e}\n", e.code()) }
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Wellform { .. } => "wellform",
        Command::Genus { .. } => "genus",
        Command::Check(_) => "check",
        Command::Cover(_) => "cover",
        Command::Truncate { .. } => "truncate",
        Command::Straighten { .. } => "straighten",
        Command::Hilbert { action: HilbertCommand::Expand { .. } } => "hilbert expand",
        Command::Hilbert { action: HilbertCommand::Numerator { .. } } => "hilbert numerator",
        Command::Hilbert { action: HilbertCommand::Table { .. } } => "hilbert table",
        Command::Eq { .. } => "eq",
        Command::Oracle { .. } => "oracle run",
    }
}

fn weight(text: &str) -> Result<Weight> {
    text.parse()
}

/// A positive-integer list of any length, for series denominators.
fn weight_list(text: &str) -> Result<Vec<u64>> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|s| match s.trim().parse::<u64>() {
            Ok(a) if a > 0 => Ok(a),
            _ => Err(Error::InvalidWeight(format!("`{text}` is not a list of positive integers"))),
        })
        .collect()
}

fn field(text: &str) -> Result<Field> {
    match text.trim() {
        "q" | "Q" => Ok(Field::Rational),
        t => {
            let p: u64 = t
                .parse()
                .map_err(|_| Error::Parse { pos: 0, msg: format!("field `{t}` is neither q nor a prime") })?;
            Field::prime(p)
        }
    }
}

fn policy(prime_steps: bool, steps: &Option<String>) -> Result<WellFormPolicy> {
    if let Some(s) = steps {
        let planned = s.split(',').map(str::parse::<PlannedStep>).collect::<Result<Vec<_>>>()?;
        return Ok(WellFormPolicy::Scripted(planned));
    }
    Ok(if prime_steps { WellFormPolicy::PrimeSteps } else { WellFormPolicy::WholeGcd })
}

fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Wellform { weights: w, prime_steps, steps } => wellform(&weight(w)?, &policy(*prime_steps, steps)?),
        Command::Genus { sweep: true, max_entry, max_degree, all_well_formed, .. } => {
            Ok(genus_sweep(*max_entry, *max_degree, !*all_well_formed))
        }
        Command::Genus { weights: w, degree, .. } => {
            let w = weight(w.as_deref().expect("required by clap"))?;
            genus(&w, degree.expect("required by clap"))
        }
        Command::Check(args) => check(&curve(args)?),
        Command::Cover(args) => cover(&curve(args)?),
        Command::Truncate { weights: w, d, poly, bound } => truncate(&weight(w)?, *d, poly.as_deref(), *bound),
        Command::Straighten { weights: w, poly, prime_steps, steps } => {
            let w = weight(w)?;
            let f = parse_polynomial(poly, &w, Field::Rational)?;
            straighten(&f, &policy(*prime_steps, steps)?)
        }
        Command::Hilbert { action } => hilbert_cmd(action),
        Command::Eq { weights: w, field: fld, left, right } => {
            let (w, fld) = (weight(w)?, field(fld)?);
            eq(&WPoint::parse(left, &w, fld)?, &WPoint::parse(right, &w, fld)?)
        }
        Command::Oracle { action: OracleCommand::Run { manifest } } => {
            let text = std::fs::read_to_string(manifest)
                .map_err(|e| Error::Manifest { line: 0, msg: format!("{}: {e}", manifest.display()) })?;
            oracle_run(&text)
        }
    }
}

fn curve(args: &CurveArgs) -> Result<PlaneCurve> {
    let w = weight(&args.weights)?;
    PlaneCurve::new(parse_polynomial(&args.poly, &w, field(&args.field)?)?)
}

fn wellform(a: &Weight, policy: &WellFormPolicy) -> Result<Report> {
    let (out, trace) = weights::well_form_with(a, policy)?;
    let mut text = format!("{out}\n");
    for (i, s) in trace.steps.iter().enumerate() {
        let _ = writeln!(text, "{}. {s}", i + 1);
    }
    let json = json!({
        "input": a,
        "well_formed_input": weights::is_well_formed(a),
        "result": out,
        "steps": trace.steps,
    });
    Ok(Report::ok(text, json))
}

fn genus(a: &Weight, d: u64) -> Result<Report> {
    let b = curves::branching_index(d, a)?;
    let g = curves::genus(d, a)?;
    let sg = curves::straight_genus(d);
    let hurwitz = curves::riemann_hurwitz_check(sg as i64, g as i64, a.product() as i64, b as i64);
    let json = json!({
        "d": d,
        "weights": a,
        "genus": g,
        "branching_index": b,
        "straight_genus": sg,
        "hurwitz": hurwitz,
    });
    Ok(Report::ok(format!("genus={g} b={b}\n"), json))
}

fn genus_sweep(max_entry: u64, max_degree: u64, coprime: bool) -> Report {
    let points = curves::genus_sweep(max_entry, max_degree, coprime);
    let mut text = String::new();
    for p in &points {
        match p.genus {
            Some(g) => {
                let _ = writeln!(text, "{} d={} genus={g} b={}", p.weights, p.d, p.branching_index);
            }
            None => {
                let _ = writeln!(text, "{} d={} b={} error: {}", p.weights, p.d, p.branching_index, p.error.as_deref().unwrap_or(""));
            }
        }
    }
    let integral = points.iter().filter(|p| p.genus.is_some()).count();
    let hurwitz = points.iter().filter(|p| p.hurwitz).count();
    let _ = writeln!(text, "points={} integral={integral} hurwitz={hurwitz}", points.len());
    let failure = (integral < points.len()).then(|| {
        ("E_GENUS_NONINT", format!("{} of {} points have no integral genus", points.len() - integral, points.len()))
    });
    let json = json!({
        "max_entry": max_entry,
        "max_degree": max_degree,
        "pairwise_coprime": coprime,
        "total": points.len(),
        "integral": integral,
        "hurwitz": hurwitz,
        "points": points,
    });
    Report { text, json, failure }
}

fn check(c: &PlaneCurve) -> Result<Report> {
    let g = curves::sufficiently_general(c)?;
    let vertices = if g.general { Some(curves::vertex_membership(c)?) } else { None };
    let mut text = format!("degree={}\ngeneral={}\n", c.degree(), if g.general { "yes" } else { "no" });
    for v in &g.violations {
        let _ = writeln!(text, "violation: {v}");
    }
    if let Some(vs) = vertices {
        let marks: Vec<String> = vs
            .iter()
            .enumerate()
            .map(|(i, &on)| format!("p{i}={}", if on { "on" } else { "off" }))
            .collect();
        let _ = writeln!(text, "vertices: {}", marks.join(" "));
    }
    let json = json!({
        "weights": c.weight(),
        "poly": c.poly().to_string(),
        "degree": c.degree(),
        "general": g.general,
        "violations": g.violations,
        "vertices": vertices,
    });
    Ok(Report::ok(text, json))
}

fn cover(c: &PlaneCurve) -> Result<Report> {
    let cov = curves::straight_cover(c)?;
    let mut text = format!("cover: {}\ndegree={}\n", cov.poly(), cov.degree());
    let general = curves::sufficiently_general(c)?.general;
    let (edges, census) = if general {
        let r = curves::edge_squarefree_check(c)?;
        let census = curves::branch_census(c)?;
        for (e, n) in r.edges.iter().zip(&census.edges) {
            let _ = writeln!(
                text,
                "edge {}: {} squarefree={} roots={} predicted={}",
                e.i,
                e.restriction,
                if e.squarefree { "yes" } else { "no" },
                n.count,
                n.predicted
            );
        }
        (Some(r), Some(census))
    } else {
        text.push_str("curve is not sufficiently general; edges skipped\n");
        (None, None)
    };
    let json = json!({
        "weights": c.weight(),
        "poly": c.poly().to_string(),
        "cover": cov.poly().to_string(),
        "degree": cov.degree(),
        "edges": edges,
        "census": census,
    });
    Ok(Report::ok(text, json))
}

/// The move `R → R^{(d)}` as a well-forming step, when it is one.
fn truncation_case(a: &Weight, d: u64) -> Option<(Case, Option<usize>)> {
    let e = a.entries();
    if d >= 2 && e.iter().all(|x| x % d == 0) {
        return Some((Case::I, None));
    }
    let off: Vec<usize> = (0..e.len()).filter(|&i| !e[i].is_multiple_of(d)).collect();
    match off.as_slice() {
        [j] if num_integer::gcd(d, e[*j]) == 1 => Some((Case::II, Some(*j))),
        _ => None,
    }
}

fn truncate(a: &Weight, d: u64, poly: Option<&str>, bound: Option<u64>) -> Result<Report> {
    if d == 0 {
        return Err(Error::InvalidWeight("truncation degree must be positive".into()));
    }
    let bound = bound.unwrap_or_else(|| truncation::default_degree_bound(a, d));
    let gens = truncation::veronese_generators(a, d, bound)?;
    let gw = truncation::generator_weights(a, d, &gens);
    let names = crate::wpoly::default_names(a.len());
    let shown: Vec<String> = gens.iter().map(|g| g.display_with(&names)).collect();
    let mut text = format!(
        "generators: {}\nweights: {}\n",
        shown.join(" "),
        gw.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
    );
    let mut json = json!({
        "weights": a,
        "d": d,
        "bound": bound,
        "generators": shown,
        "generator_weights": gw,
    });
    if let Some(src) = poly {
        let f = parse_polynomial(src, a, Field::Rational)?;
        let degree = f.homogeneous_degree()?;
        match truncation_case(a, d) {
            Some((case, spared)) => {
                let (g, note) = truncation::transform_principal_ideal(&f, d, case, spared)?;
                let gd = g.homogeneous_degree()?;
                let _ = writeln!(text, "relation: {g} (degree {gd}) [{note}]\nregraded: {}", g.weight());
                json["relation"] = json!({
                    "poly": g.to_string(),
                    "degree": gd,
                    "weight": g.weight(),
                    "note": note,
                });
            }
            None => {
                let inside = degree % d == 0;
                let _ = writeln!(text, "degree {degree} {} the truncation", if inside { "lies in" } else { "is outside" });
                json["in_truncation"] = json!(inside);
            }
        }
    }
    Ok(Report::ok(text, json))
}

fn straighten(f: &WPolynomial, policy: &WellFormPolicy) -> Result<Report> {
    let (pres, trace) = truncation::straighten_chain_with(f, policy)?;
    let mut text = format!("weight={}\ngenerators: {}\n", pres.weight, pres.generator_names.join(" "));
    for (r, d) in pres.relations.iter().zip(&pres.relation_degrees) {
        let _ = writeln!(text, "relation: {r} (degree {d})");
    }
    for (i, s) in trace.steps.iter().enumerate() {
        let _ = writeln!(text, "{}. {s}", i + 1);
    }
    let json = json!({ "presentation": pres, "steps": trace.steps });
    Ok(Report::ok(text, json))
}

fn ell_sequence(args: &EllArgs) -> Result<EllSequence> {
    let mut overrides = BTreeMap::new();
    for o in &args.overrides {
        let bad = || Error::Parse { pos: 0, msg: format!("override `{o}` is not n=value") };
        let (n, v) = o.split_once('=').ok_or_else(bad)?;
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        let v: u64 = v.trim().parse().map_err(|_| bad())?;
        overrides.insert(n, v);
    }
    EllSequence::new(args.genus, args.divisor_degree, overrides)
}

fn hilbert_cmd(action: &HilbertCommand) -> Result<Report> {
    match action {
        HilbertCommand::Expand { weights: w, numerator, n } => {
            let s = HilbertSeries::from_polynomial(&parse_univariate(numerator, "t")?, weight_list(w)?)?;
            let c = s.expand(*n)?;
            let text = c.iter().map(i128::to_string).collect::<Vec<_>>().join(" ") + "\n";
            let coeffs: Vec<String> = c.iter().map(i128::to_string).collect();
            Ok(Report::ok(text, json!({ "series": s.to_string(), "coefficients": coeffs })))
        }
        HilbertCommand::Numerator { weights: w, k, max_degree, ell } => {
            let a = weight_list(w)?;
            let e = ell_sequence(ell)?.scaled(*k)?;
            let num = hilbert::numerator_from_sequence(e.series_provider(), &a, *max_degree)?;
            let s = HilbertSeries::from_polynomial(&num, a.clone())?;
            Ok(Report::ok(
                format!("{}\n", num.display_with("t")),
                json!({ "weights": a, "numerator": num.display_with("t"), "series": s.to_string() }),
            ))
        }
        HilbertCommand::Table { k_max, ell } => {
            let rows = hilbert::discovered_table(&ell_sequence(ell)?, *k_max)?;
            let mut text = String::new();
            for r in &rows {
                let rel = match &r.relation_degrees {
                    Some(ds) => ds.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
                    None => "-".into(),
                };
                let w = r.weights.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
                let _ = writeln!(text, "k={} weights=({w}) numerator={} relations={rel}", r.k, r.numerator);
            }
            Ok(Report::ok(text, json!({ "rows": rows })))
        }
    }
}

fn eq(p: &WPoint, q: &WPoint) -> Result<Report> {
    let geometric = geometry::eq_geometric(p, q)?;
    let rational = match geometry::eq_rational(p, q) {
        Ok(b) => Some(b),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    let shown = rational.map_or("unknown".to_string(), |b| b.to_string());
    Ok(Report::ok(
        format!("geometric={geometric} rational={shown}\n"),
        json!({ "left": p, "right": q, "field": p.field().to_string(), "geometric": geometric, "rational": rational }),
    ))
}

fn oracle_run(manifest: &str) -> Result<Report> {
    let entries = oracle::parse_manifest(manifest)?;
    let results = oracle::run_manifest(&entries);
    let mut text = String::new();
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = write!(text, "line {} {} {} p={} {status}", r.line, r.verify, r.weights, r.p);
        if let Some(e) = &r.error {
            let _ = write!(text, " {}: {}", e.code, e.message);
        }
        text.push('\n');
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let failure = (failed > 0).then(|| ("E_ORACLE", format!("{failed} of {} entries failed", results.len())));
    Ok(Report { text, json: json!({ "entries": results }), failure })
}
