mod cartesian;
pub(super) mod factorization;
mod hamilton;
mod products;
mod square;

use hyperprod_core::invariant::Budget;
use hyperprod_core::{Error, Hypergraph};
use serde_json::{json, Value};

use super::{generate_with, GenParams, Procedure, TheoremCheck, Trial, TrialRng};
use crate::json::hypergraph_value;

pub(super) fn all() -> Vec<TheoremCheck> {
    let mut checks = Vec::new();
    products::register(&mut checks);
    cartesian::register(&mut checks);
    square::register(&mut checks);
    hamilton::register(&mut checks);
    factorization::register(&mut checks);
    super::algebra::register(&mut checks);
    checks
}

pub(super) fn random(
    id: impl Into<String>,
    group: &'static str,
    statement: &'static str,
    check: impl Fn(&mut TrialRng, &Budget) -> Trial + Send + Sync + 'static,
) -> TheoremCheck {
    TheoremCheck { id: id.into(), group, statement, procedure: Procedure::Random(Box::new(check)) }
}

pub(super) fn exhaustive(
    id: impl Into<String>,
    group: &'static str,
    statement: &'static str,
    check: impl Fn(&Budget) -> Vec<Trial> + Send + Sync + 'static,
) -> TheoremCheck {
    TheoremCheck { id: id.into(), group, statement, procedure: Procedure::Exhaustive(Box::new(check)) }
}

/// Budget exhaustion of any kind.
pub(super) fn is_budget(e: &Error) -> bool {
    matches!(e, Error::SizeCapExceeded(_) | Error::EdgeBlowupCap { .. })
}

pub(super) fn error_trial(e: Error) -> Trial {
    if is_budget(&e) {
        Trial::Skip(e.to_string())
    } else {
        Trial::Fail(json!({ "error": e.to_string() }))
    }
}

/// Unwraps a core result inside a trial: budget errors skip the trial,
/// anything else fails it.
macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return $crate::harness::theorems::error_trial(e.into()),
        }
    };
}
pub(super) use attempt;

/// Draws up to `tries` instances and returns the first meeting `pred`.
pub(super) fn draw(
    rng: &mut TrialRng,
    params: &GenParams,
    tries: usize,
    pred: impl Fn(&Hypergraph<usize>) -> bool,
) -> Option<Hypergraph<usize>> {
    (0..tries).find_map(|_| generate_with(rng, params).ok().filter(|h| pred(h)))
}

pub(super) fn pair_witness(h1: &Hypergraph<usize>, h2: &Hypergraph<usize>, detail: Value) -> Value {
    json!({ "h1": hypergraph_value(h1), "h2": hypergraph_value(h2), "detail": detail })
}

pub(super) fn verdict(ok: bool, witness: impl FnOnce() -> Value) -> Trial {
    if ok {
        Trial::Pass
    } else {
        Trial::Fail(witness())
    }
}
