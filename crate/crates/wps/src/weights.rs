//! Weight vectors and the well-forming reduction.
//!
//! `P(a_0, …, a_n)` only depends on its weights up to two moves: dividing
//! every weight by a common factor (case I), and dividing every weight but
//! one by a factor coprime to the remaining one (case II). Repeating these
//! always ends at a well-formed weight, and [`well_form`] records each move
//! so the chain can be replayed or checked.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Positive-integer weights `(a_0, …, a_n)`, at least two of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<u64>);

impl Weight {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidWeight(format!(
                "need at least two entries, got {}",
                entries.len()
            )));
        }
        if let Some(i) = entries.iter().position(|&a| a == 0) {
            return Err(Error::InvalidWeight(format!("entry {i} is zero")));
        }
        Ok(Weight(entries))
    }

    /// `(1, …, 1)` with `n` entries.
    pub fn straight(n: usize) -> Self {
        Weight(vec![1; n])
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_straight(&self) -> bool {
        self.0.iter().all(|&a| a == 1)
    }

    pub fn product(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn lcm(&self) -> u64 {
        self.0.iter().fold(1, |acc, &a| acc.lcm(&a))
    }

    pub fn gcd(&self) -> u64 {
        gcd_all(self.0.iter().copied())
    }

    /// gcd of every entry except `skip`.
    pub fn complement_gcd(&self, skip: usize) -> u64 {
        gcd_all(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &a)| a),
        )
    }
}

fn gcd_all(it: impl Iterator<Item = u64>) -> u64 {
    it.fold(0, |acc, a| acc.gcd(&a))
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated positive integers, e.g. `12,20,30`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidWeight(format!("`{}` is not a positive integer", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Weight::new(entries)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// True iff every `n` of the `n + 1` weights are coprime.
pub fn is_well_formed(a: &Weight) -> bool {
    (0..a.len()).all(|i| a.complement_gcd(i) == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    /// Every weight divided by `d`.
    I,
    /// Every weight except the spared one divided by `d`, with `gcd(d, a_j) = 1`.
    II,
}

/// What a reduction step does to a principal ideal `(f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealNote {
    UnchangedRegraded,
    PowerRaised,
    ReExpressed,
}

impl fmt::Display for IdealNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealNote::UnchangedRegraded => "unchanged-regraded",
            IdealNote::PowerRaised => "power-raised",
            IdealNote::ReExpressed => "re-expressed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WellFormStep {
    pub case: Case,
    pub divisor: u64,
    pub spared_index: Option<usize>,
    pub weights_before: Weight,
    pub weights_after: Weight,
    pub ideal_note: IdealNote,
}

impl fmt::Display for WellFormStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.case, self.spared_index) {
            (Case::II, Some(j)) => write!(
                f,
                "case II d={} spare {}: {} -> {} [{}]",
                self.divisor, j, self.weights_before, self.weights_after, self.ideal_note
            ),
            _ => write!(
                f,
                "case I d={}: {} -> {} [{}]",
                self.divisor, self.weights_before, self.weights_after, self.ideal_note
            ),
        }
    }
}

/// Ordered log of reduction steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WellFormTrace {
    pub steps: Vec<WellFormStep>,
}

impl WellFormTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The weights visited after the starting one.
    pub fn chain(&self) -> Vec<Weight> {
        self.steps.iter().map(|s| s.weights_after.clone()).collect()
    }
}

/// A single requested move, used by [`WellFormPolicy::Scripted`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlannedStep {
    pub case: Case,
    pub divisor: u64,
    pub spared_index: Option<usize>,
}

impl FromStr for PlannedStep {
    type Err = Error;

    /// `I:<d>` or `II:<d>@<j>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("step `{s}` is not `I:<d>` or `II:<d>@<j>`"),
        };
        let (case, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        match case {
            "I" => Ok(PlannedStep {
                case: Case::I,
                divisor: rest.parse().map_err(|_| bad())?,
                spared_index: None,
            }),
            "II" => {
                let (d, j) = rest.split_once('@').ok_or_else(bad)?;
                Ok(PlannedStep {
                    case: Case::II,
                    divisor: d.parse().map_err(|_| bad())?,
                    spared_index: Some(j.parse().map_err(|_| bad())?),
                })
            }
            _ => Err(bad()),
        }
    }
}

/// How the next reduction step is chosen.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum WellFormPolicy {
    /// Case I with the full gcd, then case II scanning spared indices from 0
    /// upward and dividing by the full complement gcd.
    #[default]
    WholeGcd,
    /// Same scan, but every divisor is the smallest prime factor of the
    /// available gcd.
    PrimeSteps,
    /// Apply the given steps first (each validated), then finish with
    /// [`WellFormPolicy::WholeGcd`].
    Scripted(Vec<PlannedStep>),
}

/// Applies a single validated move.
pub fn apply_step(a: &Weight, step: PlannedStep) -> Result<Weight> {
    let d = step.divisor;
    if d < 2 {
        return Err(Error::BadCase(format!("divisor {d} must be at least 2")));
    }
    let e = a.entries();
    match (step.case, step.spared_index) {
        (Case::I, None) => {
            if e.iter().any(|x| x % d != 0) {
                return Err(Error::BadCase(format!("{d} does not divide every entry of {a}")));
            }
            Ok(Weight(e.iter().map(|x| x / d).collect()))
        }
        (Case::II, Some(j)) => {
            if j >= e.len() {
                return Err(Error::IndexOutOfRange { index: j, len: e.len() });
            }
            if e[j].gcd(&d) != 1 {
                return Err(Error::BadCase(format!("{d} is not coprime to spared entry {}", e[j])));
            }
            if e.iter().enumerate().any(|(i, x)| i != j && x % d != 0) {
                return Err(Error::BadCase(format!(
                    "{d} does not divide every entry of {a} other than index {j}"
                )));
            }
            Ok(Weight(
                e.iter()
                    .enumerate()
                    .map(|(i, &x)| if i == j { x } else { x / d })
                    .collect(),
            ))
        }
        _ => Err(Error::BadCase("case I takes no spared index, case II needs one".into())),
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..)
        .take_while(|p| p * p <= n)
        .find(|p| n.is_multiple_of(*p))
        .unwrap_or(n)
}

fn next_step(a: &Weight, prime_steps: bool) -> Option<PlannedStep> {
    let pick = |g: u64| if prime_steps { smallest_prime_factor(g) } else { g };
    let g = a.gcd();
    if g > 1 {
        return Some(PlannedStep { case: Case::I, divisor: pick(g), spared_index: None });
    }
    (0..a.len()).find_map(|j| {
        let g = a.complement_gcd(j);
        // gcd of everything is 1 here, so g is automatically coprime to a_j
        (g > 1).then(|| PlannedStep { case: Case::II, divisor: pick(g), spared_index: Some(j) })
    })
}

fn record(a: &Weight, step: PlannedStep) -> Result<WellFormStep> {
    let after = apply_step(a, step)?;
    Ok(WellFormStep {
        case: step.case,
        divisor: step.divisor,
        spared_index: step.spared_index,
        weights_before: a.clone(),
        weights_after: after,
        ideal_note: match step.case {
            Case::I => IdealNote::UnchangedRegraded,
            Case::II => IdealNote::PowerRaised,
        },
    })
}

/// Reduces `a` to a well-formed weight with the default policy.
pub fn well_form(a: &Weight) -> (Weight, WellFormTrace) {
    well_form_with(a, &WellFormPolicy::WholeGcd).expect("automatic policies never fail")
}

/// Reduces `a` to a well-formed weight. Only a scripted policy can fail,
/// when one of its steps violates its case preconditions.
pub fn well_form_with(a: &Weight, policy: &WellFormPolicy) -> Result<(Weight, WellFormTrace)> {
    let mut current = a.clone();
    let mut trace = WellFormTrace::default();
    let (script, prime_steps): (&[PlannedStep], bool) = match policy {
        WellFormPolicy::WholeGcd => (&[], false),
        WellFormPolicy::PrimeSteps => (&[], true),
        WellFormPolicy::Scripted(steps) => (steps, false),
    };
    for &step in script {
        let s = record(&current, step)?;
        current = s.weights_after.clone();
        trace.steps.push(s);
    }
    // each step strictly shrinks the product of the entries
    while let Some(step) = next_step(&current, prime_steps) {
        let s = record(&current, step)?;
        current = s.weights_after.clone();
        trace.steps.push(s);
    }
    debug_assert!(is_well_formed(&current));
    Ok((current, trace))
}
