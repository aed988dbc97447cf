use hyperprod_core::factor::{factor_cartesian, factor_oracle, is_prime, OracleOptions, DEFAULT_PIPELINE_CAP};
use hyperprod_core::iso::is_isomorphic;
use hyperprod_core::product::{product_with, ProductKind, ProductOptions};
use hyperprod_core::Hypergraph;
use serde_json::json;

use super::{attempt, draw, pair_witness, random, verdict};
use crate::harness::{GenParams, TheoremCheck, Trial, TrialRng};

const GROUP: &str = "factorization";

/// Whether two factor lists agree as multisets of isomorphism classes.
pub fn same_factors(a: &[Hypergraph<usize>], b: &[Hypergraph<usize>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let hit = (0..b.len()).find(|&j| !used[j] && is_isomorphic(x, &b[j]));
        if let Some(j) = hit {
            used[j] = true;
        }
        hit.is_some()
    })
}

/// Two connected loop-free Cartesian primes with at most `max_product`
/// product vertices, certified by the oracle.
pub fn draw_prime_pair(rng: &mut TrialRng, max_product: usize) -> Option<(Hypergraph<usize>, Hypergraph<usize>)> {
    let options = OracleOptions::default();
    let prime = |h: &Hypergraph<usize>| is_prime(h, ProductKind::Cartesian, &options).unwrap_or(false);
    let first = GenParams::new(2..=max_product / 2, 1..=5, 2..=3).connected();
    let h1 = draw(rng, &first, 60, prime)?;
    let max2 = max_product / h1.vertex_count();
    let second = GenParams::new(2..=max2.max(2), 1..=5, 2..=3).connected();
    let h2 = draw(rng, &second, 60, prime)?;
    (h1.vertex_count() * h2.vertex_count() <= max_product).then_some((h1, h2))
}

fn round_trip() -> TheoremCheck {
    random(
        "pfd-round-trip",
        GROUP,
        "the pipeline recovers the prime factors of a product of two primes and agrees with the exhaustive oracle",
        |rng, _| {
            let Some((h1, h2)) = draw_prime_pair(rng, 9) else {
                return Trial::Vacuous;
            };
            let p = product_with(ProductKind::Cartesian, &h1, &h2, &ProductOptions::default()).expect("total").hypergraph;
            let pipeline = attempt!(factor_cartesian(&p, DEFAULT_PIPELINE_CAP));
            let oracle = attempt!(factor_oracle(&p, ProductKind::Cartesian, &OracleOptions::default()));
            let expected = [h1.clone(), h2.clone()];
            let ok = same_factors(&pipeline.factors, &expected)
                && same_factors(&oracle.factors, &pipeline.factors)
                && oracle.distinct_factorizations == 1
                && pipeline.reproduces(&p);
            verdict(ok, || {
                pair_witness(&h1, &h2, json!({ "pipeline": pipeline.factors.len(), "oracle": oracle.factors.len() }))
            })
        },
    )
}

fn unique(kind: ProductKind) -> TheoremCheck {
    let statement = match kind {
        ProductKind::Costrong => "a loop-free coconnected hypergraph has a unique costrong prime factorization",
        ProductKind::Square => "a connected hypergraph has a unique square prime factorization",
        _ => "a connected hypergraph has a unique Cartesian prime factorization",
    };
    random(format!("pfd-unique-{}", kind.tag()), GROUP, statement, move |rng, _| {
        let params = GenParams::new(2..=3, 1..=4, 1..=3);
        let fits = |h: &Hypergraph<usize>| match kind {
            ProductKind::Costrong => h.is_coconnected() && !h.has_loops(),
            ProductKind::Cartesian => h.is_connected() && !h.has_loops(),
            _ => h.is_connected(),
        };
        let (Some(h1), Some(h2)) = (draw(rng, &params, 200, fits), draw(rng, &params, 200, fits)) else {
            return Trial::Vacuous;
        };
        let p = attempt!(product_with(kind, &h1, &h2, &ProductOptions::default())).hypergraph;
        let oracle = attempt!(factor_oracle(&p, kind, &OracleOptions::default()));
        verdict(oracle.distinct_factorizations == 1, || {
            pair_witness(&h1, &h2, json!({ "distinct_factorizations": oracle.distinct_factorizations }))
        })
    })
}

fn lex_lengths() -> TheoremCheck {
    random(
        "lex-equal-length",
        GROUP,
        "all lexicographic prime factorizations of a hypergraph have the same length",
        |rng, _| {
            let params = GenParams::new(2..=3, 0..=3, 1..=3);
            let (Some(h1), Some(h2)) = (draw(rng, &params, 200, |_| true), draw(rng, &params, 200, |_| true)) else {
                return Trial::Vacuous;
            };
            let p = attempt!(product_with(ProductKind::Lex, &h1, &h2, &ProductOptions::default())).hypergraph;
            let oracle = attempt!(factor_oracle(&p, ProductKind::Lex, &OracleOptions::default()));
            let lengths = &oracle.factorization_lengths;
            verdict(lengths.windows(2).all(|w| w[0] == w[1]), || pair_witness(&h1, &h2, json!({ "lengths": lengths })))
        },
    )
}

pub(super) fn register(out: &mut Vec<TheoremCheck>) {
    out.push(round_trip());
    out.push(unique(ProductKind::Cartesian));
    out.push(unique(ProductKind::Square));
    out.push(unique(ProductKind::Costrong));
    out.push(lex_lengths());
}
