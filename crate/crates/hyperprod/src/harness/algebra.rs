//! Exhaustive algebraic laws over the small-hypergraph corpus.

use hyperprod_core::invariant::Budget;
use hyperprod_core::iso::is_isomorphic;
use hyperprod_core::product::{product_with, reassociate, transpose, ProductKind, ProductOptions};
use hyperprod_core::{Error, Hypergraph, Result, Tagged};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::theorems::{error_trial, exhaustive, is_budget};
use super::{all_hypergraphs, TheoremCheck, Trial};
use crate::json::hypergraph_value;

use ProductKind::*;

const GROUP: &str = "algebra";

/// Edge-grid cap for categorial triples; beyond it a triple is skipped.
const TRIPLE_CATEGORIAL_CAP: usize = 8;

fn apply<A, B>(kind: ProductKind, a: &Hypergraph<A>, b: &Hypergraph<B>) -> Result<Hypergraph<(A, B)>>
where
    A: hyperprod_core::Vertex,
    B: hyperprod_core::Vertex,
{
    apply_with(kind, a, b, &ProductOptions::default())
}

fn apply_with<A, B>(kind: ProductKind, a: &Hypergraph<A>, b: &Hypergraph<B>, opts: &ProductOptions) -> Result<Hypergraph<(A, B)>>
where
    A: hyperprod_core::Vertex,
    B: hyperprod_core::Vertex,
{
    Ok(product_with(kind, a, b, opts)?.hypergraph)
}

fn uniform_rank(h: &Hypergraph<usize>) -> Option<usize> {
    h.rank().filter(|&r| Some(r) == h.antirank())
}

/// The corpus restricted to what `kind` accepts.
fn corpus_for(kind: ProductKind, max_n: usize) -> Vec<Hypergraph<usize>> {
    let all = all_hypergraphs(max_n);
    if kind == DirectR {
        all.into_iter().filter(|h| uniform_rank(h).is_some()).collect()
    } else {
        all
    }
}

fn compatible(kind: ProductKind, hs: &[&Hypergraph<usize>]) -> bool {
    kind != DirectR || hs.windows(2).all(|w| uniform_rank(w[0]) == uniform_rank(w[1]))
}

fn witness(hs: &[&Hypergraph<usize>]) -> Value {
    Value::Array(hs.iter().map(|h| hypergraph_value(*h)).collect())
}

fn outcome(result: Result<bool>, hs: &[&Hypergraph<usize>]) -> Trial {
    match result {
        Ok(true) => Trial::Pass,
        Ok(false) => Trial::Fail(witness(hs)),
        Err(e) => error_trial(e),
    }
}

fn associative(kind: ProductKind, a: &Hypergraph<usize>, b: &Hypergraph<usize>, c: &Hypergraph<usize>) -> Result<bool> {
    let opts = ProductOptions { categorial_cap: TRIPLE_CATEGORIAL_CAP };
    let left = reassociate(&apply_with(kind, &apply_with(kind, a, b, &opts)?, c, &opts)?);
    let right = apply_with(kind, a, &apply_with(kind, b, c, &opts)?, &opts)?;
    Ok(left == right)
}

/// Exhaustive search for `(A*B)*C != A*(B*C)` over all hypergraphs on at
/// most `bound` vertices; triples whose products exceed a size cap are
/// passed over.
pub fn find_associativity_counterexample(kind: ProductKind, bound: usize) -> Result<Option<[Hypergraph<usize>; 3]>> {
    if bound > 3 {
        return Err(Error::SizeCapExceeded(format!("associativity search limited to 3 vertices, got {bound}")));
    }
    if kind.is_directed() {
        return Err(Error::UnsupportedKind(kind.tag()));
    }
    let corpus = corpus_for(kind, bound);
    let found = corpus.par_iter().find_map_first(|a| {
        for b in &corpus {
            for c in &corpus {
                if !compatible(kind, &[a, b, c]) {
                    continue;
                }
                match associative(kind, a, b, c) {
                    Ok(false) => return Some(Ok([a.clone(), b.clone(), c.clone()])),
                    Err(e) if !is_budget(&e) => return Some(Err(e)),
                    _ => {}
                }
            }
        }
        None
    });
    found.transpose()
}

fn triples(kind: ProductKind, law: impl Fn(&Hypergraph<usize>, &Hypergraph<usize>, &Hypergraph<usize>) -> Result<bool> + Sync) -> Vec<Trial> {
    let corpus = corpus_for(kind, 3);
    corpus
        .par_iter()
        .flat_map_iter(|a| {
            let corpus = &corpus;
            let law = &law;
            corpus.iter().flat_map(move |b| {
                corpus
                    .iter()
                    .filter(move |c| compatible(kind, &[a, b, c]))
                    .map(move |c| outcome(law(a, b, c), &[a, b, c]))
            })
        })
        .collect()
}

fn pairs(kind: ProductKind, law: impl Fn(&Hypergraph<usize>, &Hypergraph<usize>) -> Result<bool> + Sync) -> Vec<Trial> {
    let corpus = corpus_for(kind, 3);
    corpus
        .par_iter()
        .flat_map_iter(|a| {
            let corpus = &corpus;
            let law = &law;
            corpus
                .iter()
                .filter(move |b| compatible(kind, &[a, b]))
                .map(move |b| outcome(law(a, b), &[a, b]))
        })
        .collect()
}

fn assoc(kind: ProductKind) -> TheoremCheck {
    exhaustive(format!("assoc-{}", kind.tag()), GROUP, "(A*B)*C equals A*(B*C) after re-bracketing", move |_: &Budget| {
        triples(kind, |a, b, c| associative(kind, a, b, c))
    })
}

fn comm(kind: ProductKind) -> TheoremCheck {
    exhaustive(format!("comm-{}", kind.tag()), GROUP, "A*B equals B*A after swapping coordinates", move |_: &Budget| {
        pairs(kind, |a, b| Ok(transpose(&apply(kind, a, b)?) == apply(kind, b, a)?))
    })
}

fn unit(kind: ProductKind) -> TheoremCheck {
    exhaustive(format!("unit-{}", kind.tag()), GROUP, "the one-vertex unit leaves every hypergraph unchanged on both sides", move |_: &Budget| {
        let u = Hypergraph::single_vertex(kind.unit() == Some(true));
        all_hypergraphs(3)
            .par_iter()
            .map(|a| {
                let law = || -> Result<bool> {
                    let right = apply(kind, a, &u)?.map_vertices(|(x, _)| *x)?;
                    let left = apply(kind, &u, a)?.map_vertices(|(_, y)| *y)?;
                    Ok(&right == a && &left == a)
                };
                outcome(law(), &[a])
            })
            .collect()
    })
}

fn no_unit(kind: ProductKind) -> TheoremCheck {
    exhaustive(
        format!("no-unit-{}", kind.tag()),
        GROUP,
        "neither the one-vertex hypergraph nor the looped vertex is a unit",
        move |_: &Budget| {
            let corpus = all_hypergraphs(3);
            [false, true]
                .into_iter()
                .map(|looped| {
                    let u = Hypergraph::single_vertex(looped);
                    let breaks = corpus.iter().find(|a| apply(kind, *a, &u).is_ok_and(|p| !is_isomorphic(&p, *a)));
                    match breaks {
                        Some(_) => Trial::Pass,
                        None => Trial::Fail(json!({ "unit_candidate": hypergraph_value(&u) })),
                    }
                })
                .collect()
        },
    )
}

/// Moves the union tag of `(x, Left(y))` to the outside.
fn tag_out<A: hyperprod_core::Vertex>(h: &Hypergraph<(A, Tagged<usize, usize>)>) -> Result<Hypergraph<Tagged<(A, usize), (A, usize)>>> {
    h.map_vertices(|(x, t)| match t {
        Tagged::Left(y) => Tagged::Left((x.clone(), *y)),
        Tagged::Right(z) => Tagged::Right((x.clone(), *z)),
    })
}

fn left_distributes(kind: ProductKind, a: &Hypergraph<usize>, b: &Hypergraph<usize>, c: &Hypergraph<usize>) -> Result<bool> {
    let left = tag_out(&apply(kind, a, &b.disjoint_union(c))?)?;
    let right = apply(kind, a, b)?.disjoint_union(&apply(kind, a, c)?);
    Ok(left == right)
}

fn distrib(kind: ProductKind) -> TheoremCheck {
    exhaustive(format!("distrib-{}", kind.tag()), GROUP, "A*(B+C) equals A*B + A*C for the disjoint union", move |_: &Budget| {
        triples(kind, |a, b, c| left_distributes(kind, a, b, c))
    })
}

fn lex_right_distrib() -> TheoremCheck {
    exhaustive("distrib-lex-right", GROUP, "(A+B) lex C equals A lex C + B lex C", |_: &Budget| {
        triples(Lex, |a, b, c| {
            let left = apply(Lex, &a.disjoint_union(b), c)?.map_vertices(|(t, z)| match t {
                Tagged::Left(x) => Tagged::Left((*x, *z)),
                Tagged::Right(y) => Tagged::Right((*y, *z)),
            })?;
            let right = apply(Lex, a, c)?.disjoint_union(&apply(Lex, b, c)?);
            Ok(left == right)
        })
    })
}

fn complete(n: usize) -> Hypergraph<usize> {
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| vec![a, b]));
    Hypergraph::new(0..n, edges).expect("indices in range")
}

fn lex_left_special(join: bool) -> TheoremCheck {
    let (id, statement) = if join {
        ("distrib-lex-complete-join", "K_n lex (B join C) equals (K_n lex B) join (K_n lex C)")
    } else {
        ("distrib-lex-edgeless-union", "the edgeless K_n lex (B+C) equals the sum of the edgeless K_n lex B and K_n lex C")
    };
    exhaustive(id, GROUP, statement, move |_: &Budget| {
        let corpus = all_hypergraphs(3);
        (1..=3)
            .flat_map(|n| {
                let frame = if join { complete(n) } else { Hypergraph::edgeless(0..n).expect("valid") };
                corpus
                    .iter()
                    .flat_map(|b| corpus.iter().map(move |c| (b, c)))
                    .map(|(b, c)| {
                        let law = || -> Result<bool> {
                            if join {
                                let left = tag_out(&apply(Lex, &frame, &b.join(c))?)?;
                                let right = apply(Lex, &frame, b)?.join(&apply(Lex, &frame, c)?);
                                Ok(left == right)
                            } else {
                                left_distributes(Lex, &frame, b, c)
                            }
                        };
                        outcome(law(), &[&frame, b, c])
                    })
                    .collect::<Vec<_>>()
            })
            .collect()
    })
}

fn lex_noncommutative() -> TheoremCheck {
    exhaustive("noncomm-lex", GROUP, "some A lex B is not isomorphic to B lex A", |_: &Budget| {
        let corpus = all_hypergraphs(3);
        let found = corpus.iter().any(|a| {
            corpus.iter().any(|b| match (apply(Lex, a, b), apply(Lex, b, a)) {
                (Ok(x), Ok(y)) => !is_isomorphic(&x, &y),
                _ => false,
            })
        });
        vec![if found { Trial::Pass } else { Trial::Fail(json!("no witness on three vertices")) }]
    })
}

pub(super) fn register(out: &mut Vec<TheoremCheck>) {
    for kind in [Cartesian, DirectMin, DirectR, Normal, Lex, Costrong, Square, Categorial] {
        out.push(assoc(kind));
    }
    for kind in [Cartesian, DirectMin, DirectR, DirectMax, DirectNr, Normal, Strong, Costrong, Square, Categorial] {
        out.push(comm(kind));
    }
    for kind in [Cartesian, DirectMax, Normal, Strong, Lex, Costrong, Square, Categorial] {
        out.push(unit(kind));
    }
    for kind in [DirectMin, DirectNr] {
        out.push(no_unit(kind));
    }
    for kind in [Cartesian, DirectMin, DirectMax, DirectNr, Normal, Strong, Square, Categorial] {
        out.push(distrib(kind));
    }
    out.push(lex_right_distrib());
    out.push(lex_left_special(false));
    out.push(lex_left_special(true));
    out.push(lex_noncommutative());
}
