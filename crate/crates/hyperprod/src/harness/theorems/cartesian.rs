use hyperprod_core::factor::{covering_product, is_prime, CoveringPair, OracleOptions};
use hyperprod_core::invariant::{chromatic_index, chromatic_number, has_helly_property, is_conformal, strong_chromatic_number};
use hyperprod_core::iso::automorphism_count;
use hyperprod_core::product::{cartesian, ProductKind};
use hyperprod_core::Hypergraph;
use rand::Rng;
use serde_json::json;

use super::{attempt, draw, pair_witness, random, verdict};
use crate::harness::oracles::random_cover;
use crate::harness::{GenParams, TheoremCheck, Trial};

const GROUP: &str = "cartesian";

fn small() -> GenParams {
    GenParams::new(1..=4, 0..=4, 1..=3)
}

fn chromatic() -> TheoremCheck {
    random("chromatic-cartesian", GROUP, "chi and the strong chromatic number of a Cartesian product are the maxima over the factors", |rng, budget| {
        let params = small().loop_free();
        let (Some(h1), Some(h2)) = (draw(rng, &params, 200, |_| true), draw(rng, &params, 200, |_| true)) else {
            return Trial::Vacuous;
        };
        let p = cartesian(&h1, &h2).hypergraph;
        let chi = (attempt!(chromatic_number(&h1, budget)), attempt!(chromatic_number(&h2, budget)));
        let gamma = (attempt!(strong_chromatic_number(&h1, budget)), attempt!(strong_chromatic_number(&h2, budget)));
        let (pchi, pgamma) = (attempt!(chromatic_number(&p, budget)), attempt!(strong_chromatic_number(&p, budget)));
        verdict(pchi == chi.0.max(chi.1) && pgamma == gamma.0.max(gamma.1), || {
            pair_witness(&h1, &h2, json!({ "chi": [chi.0, chi.1, pchi], "gamma": [gamma.0, gamma.1, pgamma] }))
        })
    })
}

fn colored_hyperedge() -> TheoremCheck {
    random(
        "colored-hyperedge-cartesian",
        GROUP,
        "the colored hyperedge property passes from both factors to the Cartesian product",
        |rng, budget| {
            let params = small();
            let has = |h: &Hypergraph<usize>| chromatic_index(h, budget).is_ok_and(|c| c.colored_hyperedge_property);
            let (Some(h1), Some(h2)) = (draw(rng, &params, 50, has), draw(rng, &params, 50, has)) else {
                return Trial::Vacuous;
            };
            let p = cartesian(&h1, &h2).hypergraph;
            let index = attempt!(chromatic_index(&p, budget));
            verdict(index.colored_hyperedge_property, || {
                pair_witness(&h1, &h2, json!({ "q": index.q, "max_degree": index.max_degree }))
            })
        },
    )
}

fn conformal() -> TheoremCheck {
    random("conformal-cartesian", GROUP, "a Cartesian product is conformal iff both factors are", |rng, budget| {
        let params = small();
        let (Some(h1), Some(h2)) = (draw(rng, &params, 200, |_| true), draw(rng, &params, 200, |_| true)) else {
            return Trial::Vacuous;
        };
        let p = cartesian(&h1, &h2).hypergraph;
        let (a, b, c) = (attempt!(is_conformal(&h1, budget)), attempt!(is_conformal(&h2, budget)), attempt!(is_conformal(&p, budget)));
        verdict(c == (a && b), || pair_witness(&h1, &h2, json!({ "factors": [a, b], "product": c })))
    })
}

fn helly() -> TheoremCheck {
    random("helly-cartesian", GROUP, "a Cartesian product has the Helly property iff both factors do", |rng, budget| {
        let params = small();
        let (Some(h1), Some(h2)) = (draw(rng, &params, 200, |_| true), draw(rng, &params, 200, |_| true)) else {
            return Trial::Vacuous;
        };
        let p = cartesian(&h1, &h2).hypergraph;
        let (a, b, c) =
            (attempt!(has_helly_property(&h1, budget)), attempt!(has_helly_property(&h2, budget)), attempt!(has_helly_property(&p, budget)));
        verdict(c == (a && b), || pair_witness(&h1, &h2, json!({ "factors": [a, b], "product": c })))
    })
}

pub(super) fn covering_check(kind: ProductKind) -> TheoremCheck {
    random(
        format!("covering-{}", kind.tag()),
        if kind == ProductKind::Square { "square" } else { GROUP },
        "the product of a k1-fold and a k2-fold covering is a k1*k2-fold covering",
        move |rng, _| {
            let params = GenParams::new(1..=3, 1..=3, 1..=3);
            let (Some(b1), Some(b2)) = (draw(rng, &params, 200, |_| true), draw(rng, &params, 200, |_| true)) else {
                return Trial::Vacuous;
            };
            let (k1, k2) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
            let (c1, p1) = random_cover(&b1, k1, rng);
            let (c2, p2) = random_cover(&b2, k2, rng);
            let first = CoveringPair { cover: c1, base: b1.clone(), covering: p1 };
            let second = CoveringPair { cover: c2, base: b2.clone(), covering: p2 };
            let product = attempt!(covering_product(&first, &second, kind));
            let check = product.covering.verify(&product.cover, &product.base);
            verdict(check.is_ok() && product.covering.k == k1 * k2, || {
                pair_witness(&b1, &b2, json!({ "k1": k1, "k2": k2, "defect": format!("{check:?}") }))
            })
        },
    )
}

fn automorphisms() -> TheoremCheck {
    random(
        "aut-cartesian",
        GROUP,
        "the automorphism group of a product of connected primes has the order of that of their disjoint union",
        |rng, _| {
            let params = GenParams::new(2..=4, 1..=4, 2..=3).connected();
            let prime = |h: &Hypergraph<usize>| is_prime(h, ProductKind::Cartesian, &OracleOptions::default()).unwrap_or(false);
            let (Some(h1), Some(h2)) = (draw(rng, &params, 50, prime), draw(rng, &params, 50, prime)) else {
                return Trial::Vacuous;
            };
            let p = cartesian(&h1, &h2).hypergraph;
            let product = attempt!(automorphism_count(&p, 16));
            let union = attempt!(automorphism_count(&h1.disjoint_union(&h2), 16));
            verdict(product == union, || pair_witness(&h1, &h2, json!({ "product": product, "union": union })))
        },
    )
}

pub(super) fn register(out: &mut Vec<TheoremCheck>) {
    out.push(chromatic());
    out.push(colored_hyperedge());
    out.push(conformal());
    out.push(helly());
    out.push(covering_check(ProductKind::Cartesian));
    out.push(automorphisms());
}
