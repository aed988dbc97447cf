//! Random and exhaustive checking of product theorems.
//!
//! Each registered check draws instances meeting its preconditions and runs
//! an exact decision procedure. Outcomes are `PASS`, `FAIL` (with a
//! serialized counterexample), `SKIP` (budget exhausted or deferred) and
//! `VACUOUS` (preconditions never met).

pub mod algebra;
mod corpus;
mod gen;
pub mod oracles;
mod theorems;

use std::fmt::Write as _;
use std::sync::OnceLock;

use hyperprod_core::invariant::Budget;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use corpus::{all_hypergraphs, simple_hypergraphs};
pub use theorems::factorization::{draw_prime_pair, same_factors};
pub use algebra::find_associativity_counterexample;
pub use gen::{generate, generate_with, trial_rng, trial_seed, GenParams, TrialRng};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("no instance satisfying the generator flags after {0} attempts")]
    GenerationTimeout(usize),
    #[error("empty generator range")]
    EmptyRange,
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Core(#[from] hyperprod_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
    Vacuous,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
            Outcome::Vacuous => "VACUOUS",
        })
    }
}

/// Result of one instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Trial {
    Pass,
    Fail(Value),
    Skip(String),
    Vacuous,
}

pub type RandomCheck = Box<dyn Fn(&mut TrialRng, &Budget) -> Trial + Send + Sync>;
pub type ExhaustiveCheck = Box<dyn Fn(&Budget) -> Vec<Trial> + Send + Sync>;

pub enum Procedure {
    /// One instance per trial, drawn from the trial's own generator.
    Random(RandomCheck),
    /// A fixed instance set; the trial count is ignored.
    Exhaustive(ExhaustiveCheck),
    /// Registered but not run; the note says why.
    Deferred(&'static str),
}

pub struct TheoremCheck {
    pub id: String,
    pub group: &'static str,
    pub statement: &'static str,
    pub procedure: Procedure,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub group: String,
    pub statement: String,
    pub outcome: Outcome,
    pub trials: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub vacuous: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Every registered check, in a fixed order.
pub fn registry() -> &'static [TheoremCheck] {
    static REGISTRY: OnceLock<Vec<TheoremCheck>> = OnceLock::new();
    REGISTRY.get_or_init(theorems::all)
}

pub fn groups() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for c in registry() {
        if !out.contains(&c.group) {
            out.push(c.group);
        }
    }
    out
}

fn summarize(check: &TheoremCheck, trials: Vec<Trial>, note: Option<String>) -> TheoremReport {
    let mut report = TheoremReport {
        id: check.id.clone(),
        group: check.group.to_string(),
        statement: check.statement.to_string(),
        outcome: Outcome::Vacuous,
        trials: trials.len(),
        pass: 0,
        fail: 0,
        skip: 0,
        vacuous: 0,
        counterexample: None,
        note,
    };
    for t in trials {
        match t {
            Trial::Pass => report.pass += 1,
            Trial::Fail(witness) => {
                report.fail += 1;
                report.counterexample.get_or_insert(witness);
            }
            Trial::Skip(reason) => {
                report.skip += 1;
                report.note.get_or_insert(reason);
            }
            Trial::Vacuous => report.vacuous += 1,
        }
    }
    report.outcome = if report.fail > 0 {
        Outcome::Fail
    } else if report.pass > 0 {
        Outcome::Pass
    } else if report.skip > report.vacuous {
        Outcome::Skip
    } else {
        Outcome::Vacuous
    };
    report
}

fn run_check(check: &TheoremCheck, trials: usize, seed: u64, budget: &Budget) -> TheoremReport {
    match &check.procedure {
        Procedure::Random(f) => {
            let results: Vec<Trial> = (0..trials as u64)
                .into_par_iter()
                .map(|i| f(&mut trial_rng(seed, &check.id, i), budget))
                .collect();
            summarize(check, results, None)
        }
        Procedure::Exhaustive(f) => summarize(check, f(budget), None),
        Procedure::Deferred(note) => {
            let mut r = summarize(check, Vec::new(), Some(note.to_string()));
            r.outcome = Outcome::Skip;
            r
        }
    }
}

/// Runs one registered check.
///
/// ```
/// use hyperprod::harness::{check_theorem, Outcome};
/// use hyperprod_core::invariant::Budget;
/// let r = check_theorem("chromatic-cartesian", 5, 7, &Budget::default()).unwrap();
/// assert_eq!(r.outcome, Outcome::Pass);
/// ```
pub fn check_theorem(id: &str, trials: usize, seed: u64, budget: &Budget) -> Result<TheoremReport, HarnessError> {
    let check = registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| HarnessError::UnknownTheorem(id.to_string()))?;
    Ok(run_check(check, trials, seed, budget))
}

/// Runs `all`, a group name, or a single check id.
pub fn run_suite(suite: &str, trials: usize, seed: u64, budget: &Budget) -> Result<Vec<TheoremReport>, HarnessError> {
    let selected: Vec<&TheoremCheck> = registry()
        .iter()
        .filter(|c| suite == "all" || c.group == suite || c.id == suite)
        .collect();
    if selected.is_empty() {
        return Err(HarnessError::UnknownSuite(suite.to_string()));
    }
    Ok(selected.into_iter().map(|c| run_check(c, trials, seed, budget)).collect())
}

/// Fixed-width summary table.
pub fn render_table(reports: &[TheoremReport]) -> String {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = String::new();
    let _ = writeln!(out, "{:<width$}  {:<7}  {:>7}  {:>7}  {:>7}  {:>7}", "id", "outcome", "pass", "fail", "skip", "vac");
    for r in reports {
        let _ = writeln!(
            out,
            "{:<width$}  {:<7}  {:>7}  {:>7}  {:>7}  {:>7}",
            r.id, r.outcome.to_string(), r.pass, r.fail, r.skip, r.vacuous
        );
    }
    let count = |o: Outcome| reports.iter().filter(|r| r.outcome == o).count();
    let _ = writeln!(
        out,
        "{} checks: {} pass, {} fail, {} skip, {} vacuous",
        reports.len(),
        count(Outcome::Pass),
        count(Outcome::Fail),
        count(Outcome::Skip),
        count(Outcome::Vacuous)
    );
    out
}
