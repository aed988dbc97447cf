use hyperprod_core::factor::{factor_cartesian, factor_oracle, OracleOptions, DEFAULT_PIPELINE_CAP};
use hyperprod_core::iso::{is_isomorphic, isomorphism};
use hyperprod_core::product::{self, product_with, ProductKind, ProductOptions};
use hyperprod_core::section::{l2_inverse, l2_section, two_section};
use hyperprod_core::{ExtNat, Hypergraph};
use proptest::prelude::*;

fn hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph<usize>> {
    (1..=max_n).prop_flat_map(move |n| {
        let edge = proptest::collection::btree_set(0..n, 1..=n);
        proptest::collection::vec(edge, 0..=max_m)
            .prop_map(move |edges| Hypergraph::new(0..n, edges.into_iter().map(Vec::from_iter)).unwrap())
    })
}

fn loop_free(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph<usize>> {
    hypergraph(max_n, max_m).prop_map(|h| h.remove_loops())
}

fn shuffled(h: &Hypergraph<usize>, seed: u64) -> Hypergraph<usize> {
    let n = h.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        perm.swap(i, (s >> 33) as usize % (i + 1));
    }
    h.map_vertices(|&v| perm[v]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distance_equals_two_section_distance(h in loop_free(6, 5)) {
        let g = two_section(&h).unwrap();
        prop_assert_eq!(h.distance_matrix(), g.distance_matrix());
    }

    #[test]
    fn isomorphism_is_symmetric_and_survives_relabelling(h in hypergraph(6, 5), seed in any::<u64>()) {
        let other = shuffled(&h, seed);
        let map = isomorphism(&h, &other).expect("relabelling is an isomorphism");
        for e in h.edges() {
            let mut img: Vec<usize> = e.iter().map(|&v| map[v]).collect();
            img.sort_unstable();
            prop_assert!(other.has_edge(&img));
        }
        prop_assert!(is_isomorphic(&other, &h));
        prop_assert!(is_isomorphic(&h, &h));
    }

    #[test]
    fn double_dual_is_isomorphic(h in hypergraph(5, 5)) {
        prop_assume!(!h.has_isolated_vertices());
        let dual = h.dual().unwrap();
        // Vertices with equal stars collapse in the dual.
        prop_assume!(dual.edge_count() == h.vertex_count());
        let back = dual.dual().unwrap();
        prop_assert!(is_isomorphic(&back, &h));
    }

    #[test]
    fn adding_then_removing_loops_is_identity(h in loop_free(6, 5)) {
        prop_assert_eq!(h.add_loops().remove_loops(), h);
    }

    #[test]
    fn l2_section_round_trips(h in loop_free(6, 5)) {
        prop_assert_eq!(l2_inverse(&l2_section(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn cartesian_rank_and_connectivity(a in loop_free(4, 3), b in loop_free(4, 3)) {
        prop_assume!(a.edge_count() > 0 && b.edge_count() > 0);
        let p = product::cartesian(&a, &b).hypergraph;
        prop_assert_eq!(p.rank(), a.rank().max(b.rank()));
        prop_assert_eq!(p.antirank(), a.antirank().min(b.antirank()));
        prop_assert_eq!(p.is_connected(), a.is_connected() && b.is_connected());
    }

    #[test]
    fn square_rank_multiplies(a in hypergraph(4, 3), b in hypergraph(4, 3)) {
        prop_assume!(a.edge_count() > 0 && b.edge_count() > 0);
        let p = product::square(&a, &b).hypergraph;
        prop_assert_eq!(p.rank(), Some(a.rank().unwrap() * b.rank().unwrap()));
        prop_assert_eq!(p.edge_count(), a.edge_count() * b.edge_count());
    }

    #[test]
    fn cartesian_distance_is_additive(a in loop_free(4, 3), b in loop_free(4, 3)) {
        let p = product::cartesian(&a, &b);
        let (da, db) = (a.distance_matrix(), b.distance_matrix());
        let dp = p.hypergraph.distance_matrix();
        for u in 0..p.hypergraph.vertex_count() {
            for v in 0..p.hypergraph.vertex_count() {
                let ((x1, y1), (x2, y2)) = (p.coords(u), p.coords(v));
                let want = match (da[x1][x2], db[y1][y2]) {
                    (ExtNat::Finite(s), ExtNat::Finite(t)) => ExtNat::Finite(s + t),
                    _ => ExtNat::Infinite,
                };
                prop_assert_eq!(dp[u][v], want);
            }
        }
    }

    #[test]
    fn pipeline_reproduces_connected_inputs(h in loop_free(7, 6)) {
        prop_assume!(h.is_connected());
        let pfd = factor_cartesian(&h, DEFAULT_PIPELINE_CAP).unwrap();
        prop_assert!(pfd.reproduces(&h));
        prop_assert!(pfd.factors.iter().all(|f| f.vertex_count() >= 2));
    }
}

#[test]
fn cartesian_is_associative_up_to_reassociation() {
    let k2 = Hypergraph::from_index_edges(2, &[&[0, 1]]).unwrap();
    let e3 = Hypergraph::from_index_edges(3, &[&[0, 1, 2]]).unwrap();
    let left = product::cartesian(&product::cartesian(&k2, &e3).hypergraph, &k2).hypergraph;
    let right = product::cartesian(&k2, &product::cartesian(&e3, &k2).hypergraph).hypergraph;
    assert_eq!(product::reassociate(&left), right);
}

#[test]
fn oracle_handles_twelve_vertex_products() {
    let t3 = Hypergraph::from_index_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
    let c4 = Hypergraph::from_index_edges(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]).unwrap();
    let h = product_with(ProductKind::Cartesian, &t3, &c4, &ProductOptions::default()).unwrap().hypergraph;
    let oracle = factor_oracle(&h, ProductKind::Cartesian, &OracleOptions::default()).unwrap();
    assert_eq!(oracle.factors.len(), 3);
    assert_eq!(oracle.distinct_factorizations, 1);
    let pipeline = factor_cartesian(&h, DEFAULT_PIPELINE_CAP).unwrap();
    assert_eq!(pipeline.factors.len(), 3);
}
