use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::covering::Covering;
use crate::error::Error;
use crate::iso::is_isomorphic;
use crate::product::{self, ProductKind};

fn g(n: usize, edges: &[&[usize]]) -> Hypergraph<usize> {
    Hypergraph::from_index_edges(n, edges).unwrap()
}

fn k2() -> Hypergraph<usize> {
    g(2, &[&[0, 1]])
}

fn e3() -> Hypergraph<usize> {
    g(3, &[&[0, 1, 2]])
}

fn t3() -> Hypergraph<usize> {
    g(3, &[&[0, 1], &[1, 2], &[0, 2]])
}

fn cycle(n: usize) -> Hypergraph<usize> {
    let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    Hypergraph::new(0..n, edges).unwrap()
}

/// Each factor in `got` matched to a distinct isomorphic one in `want`.
fn same_multiset(got: &[Hypergraph<usize>], want: &[Hypergraph<usize>]) -> bool {
    if got.len() != want.len() {
        return false;
    }
    let mut used = vec![false; want.len()];
    got.iter().all(|f| {
        let hit = (0..want.len()).find(|&i| !used[i] && is_isomorphic(f, &want[i]));
        hit.map(|i| used[i] = true).is_some()
    })
}

#[test]
fn c4_factors_into_two_k2() {
    let pfd = factor_cartesian(&cycle(4), DEFAULT_PIPELINE_CAP).unwrap();
    assert!(same_multiset(&pfd.factors, &[k2(), k2()]));
    assert!(pfd.reproduces(&cycle(4)));
    assert_eq!(pfd.method, Method::Pipeline);
}

#[test]
fn hyperedge_factors_survive_the_pipeline() {
    let h = product::cartesian(&k2(), &e3()).hypergraph;
    let pfd = factor_cartesian(&h, DEFAULT_PIPELINE_CAP).unwrap();
    assert!(same_multiset(&pfd.factors, &[k2(), e3()]));
    assert!(pfd.reproduces(&h));
}

#[test]
fn t3_is_prime_for_the_pipeline() {
    let pfd = factor_cartesian(&t3(), DEFAULT_PIPELINE_CAP).unwrap();
    assert_eq!(pfd.factors.len(), 1);
    assert!(is_isomorphic(&pfd.factors[0], &t3()));
    assert!(pfd.reproduces(&t3()));
}

#[test]
fn three_factor_cube() {
    let q2 = product::cartesian(&k2(), &k2()).hypergraph;
    let q3 = product::cartesian(&q2, &t3()).hypergraph;
    let pfd = factor_cartesian(&q3, DEFAULT_PIPELINE_CAP).unwrap();
    assert!(same_multiset(&pfd.factors, &[k2(), k2(), t3()]));
    assert!(pfd.reproduces(&q3));
}

#[test]
fn merge_step_needs_the_partition_search() {
    // K2 x K2 glued by a 4-edge over the whole square is not a product of
    // the two K2 factors, but the single factor is valid.
    let h = g(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 1, 2, 3]]);
    let pfd = factor_cartesian(&h, DEFAULT_PIPELINE_CAP).unwrap();
    assert_eq!(pfd.factors.len(), 1);
    assert!(pfd.reproduces(&h));
}

#[test]
fn pipeline_preconditions() {
    let looped = k2().add_loops();
    assert_eq!(factor_cartesian(&looped, 64), Err(Error::LoopsPresent));
    let split = g(4, &[&[0, 1], &[2, 3]]);
    assert_eq!(factor_cartesian(&split, 64), Err(Error::NotConnected));
    assert!(matches!(factor_cartesian(&cycle(4), 3), Err(Error::SizeCapExceeded(_))));
    let k1 = Hypergraph::single_vertex(false);
    let pfd = factor_cartesian(&k1, 64).unwrap();
    assert!(pfd.factors.is_empty());
    assert!(pfd.reproduces(&k1));
}

#[test]
fn graph_classes_of_a_square() {
    let (edges, classes) = graph_factor_classes(&cycle(4).neighbours());
    assert_eq!(edges.len(), 4);
    assert_eq!(classes.iter().copied().collect::<BTreeSet<_>>().len(), 2);
    // K_{2,3} is prime; its edges all share one class.
    let k23 = g(5, &[&[0, 2], &[0, 3], &[0, 4], &[1, 2], &[1, 3], &[1, 4]]);
    let (_, classes) = graph_factor_classes(&k23.neighbours());
    assert!(classes.iter().all(|&c| c == 0));
}

use alloc::collections::BTreeSet;

#[test]
fn oracle_agrees_with_pipeline_on_small_products() {
    let opts = OracleOptions::default();
    for (a, b) in [(k2(), k2()), (k2(), e3()), (k2(), t3()), (t3(), t3())] {
        let h = product::cartesian(&a, &b).hypergraph;
        let oracle = factor_oracle(&h, ProductKind::Cartesian, &opts).unwrap();
        let pipeline = factor_cartesian(&h, DEFAULT_PIPELINE_CAP).unwrap();
        assert!(same_multiset(&oracle.factors, &pipeline.factors));
        assert_eq!(oracle.distinct_factorizations, 1);
        assert!(oracle.reproduces(&h));
    }
}

#[test]
fn square_oracle_recovers_e3_and_k2() {
    let h = product::square(&e3(), &k2()).hypergraph;
    assert_eq!(h.edge_count(), 1);
    let pfd = factor_oracle(&h, ProductKind::Square, &OracleOptions::default()).unwrap();
    assert!(same_multiset(&pfd.factors, &[e3(), k2()]));
    assert_eq!(pfd.distinct_factorizations, 1);
    assert!(pfd.reproduces(&h));
}

#[test]
fn k2_is_cartesian_prime() {
    let opts = OracleOptions::default();
    let pfd = factor_oracle(&k2(), ProductKind::Cartesian, &opts).unwrap();
    assert_eq!(pfd.factors.len(), 1);
    assert!(is_prime(&k2(), ProductKind::Cartesian, &opts).unwrap());
    assert!(is_prime(&t3(), ProductKind::Cartesian, &opts).unwrap());
    assert!(!is_prime(&cycle(4), ProductKind::Cartesian, &opts).unwrap());
    assert!(is_prime(&cycle(5), ProductKind::Cartesian, &opts).unwrap());
}

#[test]
fn lex_factorizations_have_equal_lengths() {
    let k4 = product::lex(&k2(), &k2()).hypergraph;
    let pfd = factor_oracle(&k4, ProductKind::Lex, &OracleOptions::default()).unwrap();
    assert!(pfd.factors.len() == 2);
    assert!(pfd.factorization_lengths.iter().all(|&l| l == 2));
    assert!(pfd.reproduces(&k4));
}

#[test]
fn oracle_rejects_kinds_without_unit_and_large_inputs() {
    let opts = OracleOptions::default();
    assert!(matches!(factor_oracle(&k2(), ProductKind::DirectMin, &opts), Err(Error::NoUnit(_))));
    assert!(matches!(is_prime(&k2(), ProductKind::DirectNr, &opts), Err(Error::NoUnit(_))));
    assert!(matches!(
        factor_oracle(&cycle(13), ProductKind::Cartesian, &opts),
        Err(Error::SizeCapExceeded(_))
    ));
}

#[test]
fn degenerate_one_vertex_factors() {
    let opts = OracleOptions::default();
    // An edgeless hypergraph is K1 ■ itself.
    let e2 = Hypergraph::edgeless(0..2usize).unwrap();
    assert!(!is_prime(&e2, ProductKind::Square, &opts).unwrap());
    // All loops: the looped K1 times the loop-free part.
    assert!(!is_prime(&t3().add_loops(), ProductKind::Cartesian, &opts).unwrap());
}

#[test]
fn other_kinds_round_trip_through_the_oracle() {
    let opts = OracleOptions::default();
    for kind in [ProductKind::Normal, ProductKind::Strong, ProductKind::Costrong, ProductKind::Categorial] {
        let h = product::product_with(kind, &k2(), &t3(), &Default::default()).unwrap().hypergraph;
        let pfd = factor_oracle(&h, kind, &opts).unwrap();
        assert!(pfd.reproduces(&h), "{kind}");
        assert!(pfd.factors.len() >= 2, "{kind}");
    }
}

#[test]
fn covering_products() {
    let c6 = cycle(6);
    let t3 = t3();
    let to_t3 = Covering::induced(&c6, &t3, (0..6).map(|i| i % 3).collect(), 2).unwrap();
    let hex = CoveringPair { cover: c6, base: t3, covering: to_t3 };
    let id = CoveringPair { cover: k2(), base: k2(), covering: Covering::identity(&k2()) };

    let cart = covering_product(&hex, &id, ProductKind::Cartesian).unwrap();
    assert_eq!(cart.covering.k, 2);
    assert_eq!(cart.covering.verify(&cart.cover, &cart.base), Ok(()));

    let sq = covering_product(&hex, &hex, ProductKind::Square).unwrap();
    assert_eq!(sq.covering.k, 4);
    assert_eq!(sq.covering.verify(&sq.cover, &sq.base), Ok(()));

    let ids = covering_product(&id, &id, ProductKind::Cartesian).unwrap();
    assert_eq!(ids.covering, Covering::identity(&ids.base));

    let broken = CoveringPair { covering: Covering { k: 3, ..hex.covering.clone() }, ..hex.clone() };
    assert!(matches!(covering_product(&broken, &id, ProductKind::Square), Err(Error::InvalidCovering(_))));
    assert!(matches!(covering_product(&id, &id, ProductKind::Lex), Err(Error::UnsupportedKind(_))));
}
