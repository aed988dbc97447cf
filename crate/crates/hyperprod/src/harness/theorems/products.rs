use hyperprod_core::invariant::Budget;
use hyperprod_core::product::{product_with, ProductKind, ProductOptions};
use hyperprod_core::Hypergraph;
use rand::Rng;
use serde_json::json;

use super::{attempt, draw, exhaustive, pair_witness, random, verdict};
use crate::harness::oracles::{distance_mismatch, two_section_commutes};
use crate::harness::{GenParams, TheoremCheck, Trial, TrialRng};

const GROUP: &str = "products";

use ProductKind::*;

fn factor_params(kind: ProductKind) -> GenParams {
    match kind {
        Categorial => GenParams::new(1..=3, 0..=3, 1..=3),
        _ => GenParams::new(1..=4, 0..=4, 1..=3),
    }
}

/// Two factors for `kind`; equal-rank uniform factors for `DirectR`.
pub(super) fn draw_pair(
    rng: &mut TrialRng,
    kind: ProductKind,
    tweak: impl Fn(GenParams) -> GenParams,
    pred: impl Fn(&Hypergraph<usize>) -> bool,
) -> Option<(Hypergraph<usize>, Hypergraph<usize>)> {
    let params = if kind == DirectR {
        let lo = if tweak(GenParams::default()).loop_free { 2 } else { 1 };
        let r = rng.gen_range(lo..=3);
        tweak(GenParams::new(r.max(2)..=4, 1..=3, r..=r))
    } else {
        tweak(factor_params(kind))
    };
    let h1 = draw(rng, &params, 200, &pred)?;
    let h2 = draw(rng, &params, 200, &pred)?;
    Some((h1, h2))
}

fn expected_rank(kind: ProductKind, (r1, s1): (usize, usize), (r2, s2): (usize, usize)) -> (usize, usize) {
    match kind {
        Cartesian | Normal | Strong | Lex | Costrong => (r1.max(r2), s1.min(s2)),
        DirectMin => (r1.min(r2), s1.min(s2)),
        DirectMax => (r1.max(r2), s1.max(s2)),
        DirectNr => ((r1 - 1) * (r2 - 1) + 1, (s1 - 1) * (s2 - 1) + 1),
        Square => (r1 * r2, s1 * s2),
        Categorial => (r1 * r2, s1.max(s2)),
        _ => (r1, s1),
    }
}

const RANK_KINDS: [ProductKind; 11] =
    [Cartesian, DirectR, DirectMin, DirectMax, DirectNr, Normal, Strong, Lex, Costrong, Square, Categorial];

fn rank_check(kind: ProductKind) -> TheoremCheck {
    random(format!("rank-{}", kind.tag()), GROUP, "rank and antirank of the product follow the factor formula", move |rng, _| {
        let Some((h1, h2)) = draw_pair(rng, kind, |p| GenParams { edges: 1..=4, ..p }, |_| true) else {
            return Trial::Vacuous;
        };
        let p = attempt!(product_with(kind, &h1, &h2, &ProductOptions::default()));
        let (a, b) = (attempt!(h1.rank_profile()), attempt!(h2.rank_profile()));
        let expected = expected_rank(kind, (a.rank, a.antirank), (b.rank, b.antirank));
        let actual = (p.hypergraph.rank().unwrap_or(0), p.hypergraph.antirank().unwrap_or(0));
        verdict(actual == expected, || pair_witness(&h1, &h2, json!({ "actual": actual, "expected": expected })))
    })
}

fn section_flags(kind: ProductKind) -> impl Fn(GenParams) -> GenParams {
    move |p: GenParams| {
        let p = p.loop_free();
        if matches!(kind, Square | Categorial) {
            p.no_isolated()
        } else {
            p
        }
    }
}

fn two_section_check(kind: ProductKind) -> TheoremCheck {
    random(
        format!("two-section-{}", kind.tag()),
        GROUP,
        "the 2-section of the product is the graph product of the 2-sections",
        move |rng, _| {
            let Some((h1, h2)) = draw_pair(rng, kind, section_flags(kind), |_| true) else {
                return Trial::Vacuous;
            };
            let ok = attempt!(two_section_commutes(kind, &h1, &h2, &ProductOptions::default()));
            verdict(ok, || pair_witness(&h1, &h2, json!("2-sections differ")))
        },
    )
}

fn k2() -> Hypergraph<usize> {
    Hypergraph::from_index_edges(2, &[&[0, 1]]).expect("valid")
}

fn e3() -> Hypergraph<usize> {
    Hypergraph::from_index_edges(3, &[&[0, 1, 2]]).expect("valid")
}

fn distance_flags(kind: ProductKind) -> impl Fn(GenParams) -> GenParams {
    move |p: GenParams| match kind {
        Strong => p.loop_free(),
        Square | Categorial => p.loop_free().no_isolated(),
        _ => p,
    }
}

fn distance_check(kind: ProductKind) -> TheoremCheck {
    random(format!("distance-{}", kind.tag()), GROUP, "product distances follow the distance formula", move |rng, _| {
        let Some((h1, h2)) = draw_pair(rng, kind, distance_flags(kind), |_| true) else {
            return Trial::Vacuous;
        };
        let h1 = if kind == Lex { h1.remove_loops() } else { h1 };
        match attempt!(distance_mismatch(kind, &h1, &h2, &ProductOptions::default())) {
            None => Trial::Pass,
            Some((u, v, actual, predicted)) => Trial::Fail(pair_witness(
                &h1,
                &h2,
                json!({ "from": u, "to": v, "actual": actual.to_string(), "predicted": predicted.to_string() }),
            )),
        }
    })
}

fn simple_check(kind: ProductKind) -> TheoremCheck {
    random(format!("simple-{}", kind.tag()), GROUP, "the product of simple factors is simple", move |rng, _| {
        let Some((h1, h2)) = draw_pair(rng, kind, |p| p.simple(), |_| true) else {
            return Trial::Vacuous;
        };
        let p = attempt!(product_with(kind, &h1, &h2, &ProductOptions::default()));
        verdict(p.hypergraph.is_simple(), || pair_witness(&h1, &h2, json!("product not simple")))
    })
}

#[derive(Clone, Copy)]
enum Link {
    /// Product connected iff both factors are.
    Iff,
    /// Product connected only if both factors are.
    OnlyIf,
    /// Product connected iff the first factor is (first factor has two or more vertices).
    First,
    /// Product coconnected iff both factors are.
    Co,
}

fn connectivity_check(kind: ProductKind, link: Link) -> TheoremCheck {
    let statement = match link {
        Link::Iff => "the product is connected iff both factors are",
        Link::OnlyIf => "a connected product has connected factors",
        Link::First => "the product is connected iff the first factor is",
        Link::Co => "the product is coconnected iff both factors are",
    };
    let id = match link {
        Link::Co => format!("coconnected-{}", kind.tag()),
        _ => format!("connected-{}", kind.tag()),
    };
    random(id, GROUP, statement, move |rng, _| {
        let flags = |p: GenParams| {
            let p = GenParams { edges: 0..=3, ..p };
            if matches!(kind, Square | Categorial) {
                p.no_isolated()
            } else {
                p
            }
        };
        let pred = |h: &Hypergraph<usize>| !matches!(link, Link::First) || h.vertex_count() >= 2;
        let Some((h1, h2)) = draw_pair(rng, kind, flags, pred) else {
            return Trial::Vacuous;
        };
        let p = attempt!(product_with(kind, &h1, &h2, &ProductOptions::default())).hypergraph;
        let ok = match link {
            Link::Iff => p.is_connected() == (h1.is_connected() && h2.is_connected()),
            Link::OnlyIf => !p.is_connected() || (h1.is_connected() && h2.is_connected()),
            Link::First => p.is_connected() == h1.is_connected(),
            Link::Co => p.is_coconnected() == (h1.is_coconnected() && h2.is_coconnected()),
        };
        verdict(ok, || {
            pair_witness(&h1, &h2, json!({ "product_connected": p.is_connected(), "product_coconnected": p.is_coconnected() }))
        })
    })
}

fn costrong_simple_uniform() -> TheoremCheck {
    random("simple-costrong-uniform", GROUP, "the costrong product of simple r-uniform factors is simple", |rng, _| {
        let r = rng.gen_range(2..=3);
        let params = GenParams::new(r..=4, 1..=3, r..=r).simple();
        let (Some(h1), Some(h2)) = (draw(rng, &params, 200, |_| true), draw(rng, &params, 200, |_| true)) else {
            return Trial::Vacuous;
        };
        let p = attempt!(product_with(Costrong, &h1, &h2, &ProductOptions::default()));
        verdict(p.hypergraph.is_simple(), || pair_witness(&h1, &h2, json!("product not simple")))
    })
}

fn negative_witness() -> TheoremCheck {
    exhaustive(
        "two-section-negative-witness",
        GROUP,
        "for K2 and a single 3-edge the 2-section of the max-rank and non-rank direct products differs from the direct graph product",
        |_: &Budget| {
            [DirectMax, DirectNr]
                .into_iter()
                .map(|kind| {
                    let same = attempt!(two_section_commutes(kind, &k2(), &e3(), &ProductOptions::default()));
                    verdict(!same, || pair_witness(&k2(), &e3(), json!({ "kind": kind.tag() })))
                })
                .collect()
        },
    )
}

fn uniform_direct_max() -> TheoremCheck {
    random(
        "two-section-uniform-direct-max",
        GROUP,
        "for r-uniform factors of equal rank the max-rank direct product commutes with the 2-section",
        |rng, _| {
            let r = rng.gen_range(2..=3);
            let params = GenParams::new(r..=4, 1..=3, r..=r);
            let (Some(h1), Some(h2)) = (draw(rng, &params, 200, |_| true), draw(rng, &params, 200, |_| true)) else {
                return Trial::Vacuous;
            };
            let ok = attempt!(two_section_commutes(DirectMax, &h1, &h2, &ProductOptions::default()));
            verdict(ok, || pair_witness(&h1, &h2, json!("2-sections differ")))
        },
    )
}

fn graph_direct_nr() -> TheoremCheck {
    random(
        "two-section-graph-direct-nr",
        GROUP,
        "on graphs the non-rank direct product commutes with the 2-section",
        |rng, _| {
            let params = GenParams::new(2..=4, 1..=4, 2..=2);
            let (Some(h1), Some(h2)) = (draw(rng, &params, 200, |_| true), draw(rng, &params, 200, |_| true)) else {
                return Trial::Vacuous;
            };
            let ok = attempt!(two_section_commutes(DirectNr, &h1, &h2, &ProductOptions::default()));
            verdict(ok, || pair_witness(&h1, &h2, json!("2-sections differ")))
        },
    )
}

fn disconnected_witness() -> TheoremCheck {
    exhaustive(
        "disconnected-direct-witness",
        GROUP,
        "K2 with itself is disconnected under the min-rank and non-rank direct products",
        |_: &Budget| {
            [DirectMin, DirectNr]
                .into_iter()
                .map(|kind| {
                    let p = attempt!(product_with(kind, &k2(), &k2(), &ProductOptions::default()));
                    verdict(!p.hypergraph.is_connected(), || pair_witness(&k2(), &k2(), json!({ "kind": kind.tag() })))
                })
                .collect()
        },
    )
}

pub(super) fn register(out: &mut Vec<TheoremCheck>) {
    out.extend(RANK_KINDS.iter().map(|&k| rank_check(k)));
    out.extend([Cartesian, DirectR, DirectMin, Normal, Strong, Lex, Square, Categorial].iter().map(|&k| two_section_check(k)));
    out.push(negative_witness());
    out.push(uniform_direct_max());
    out.push(graph_direct_nr());
    out.extend([Cartesian, DirectMin, DirectR, Normal, Strong, Lex, Square, Categorial].iter().map(|&k| distance_check(k)));
    out.extend([Cartesian, DirectMin, DirectMax, DirectNr, Normal, Strong, Lex, Square].iter().map(|&k| simple_check(k)));
    out.push(costrong_simple_uniform());
    for (kind, link) in [
        (Cartesian, Link::Iff),
        (Normal, Link::Iff),
        (Strong, Link::Iff),
        (Square, Link::Iff),
        (Categorial, Link::Iff),
        (DirectMin, Link::OnlyIf),
        (DirectMax, Link::OnlyIf),
        (DirectNr, Link::OnlyIf),
        (Lex, Link::First),
        (Costrong, Link::Co),
    ] {
        out.push(connectivity_check(kind, link));
    }
    out.push(disconnected_witness());
}
