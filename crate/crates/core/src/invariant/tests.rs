use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::walk::Walk;

fn h(n: usize, edges: &[&[usize]]) -> Hypergraph<usize> {
    Hypergraph::from_index_edges(n, edges).unwrap()
}

fn k2() -> Hypergraph<usize> {
    h(2, &[&[0, 1]])
}

fn e3() -> Hypergraph<usize> {
    h(3, &[&[0, 1, 2]])
}

fn t3() -> Hypergraph<usize> {
    h(3, &[&[0, 1], &[1, 2], &[0, 2]])
}

fn two_k2() -> Hypergraph<usize> {
    h(4, &[&[0, 1], &[2, 3]])
}

fn b() -> Budget {
    Budget::default()
}

fn r(p: i128, q: i128) -> Rational {
    Rational::new(p, q)
}

fn samples() -> Vec<Hypergraph<usize>> {
    vec![
        k2(),
        e3(),
        t3(),
        two_k2(),
        h(4, &[&[0, 1, 2], &[2, 3]]),
        h(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]),
        h(5, &[&[0, 1, 2], &[2, 3, 4], &[0, 4], &[1, 3]]),
        h(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]),
        h(3, &[&[0], &[0, 1, 2]]),
        h(5, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2, 3, 4]]),
    ]
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

fn contains_edge(g: &Hypergraph<usize>, s: &[usize]) -> bool {
    g.edges().iter().any(|e| e.iter().all(|v| s.contains(v)))
}

#[test]
fn independence_examples() {
    assert_eq!(independence_number(&t3(), &b()).unwrap().value, 1);
    assert_eq!(independence_number(&e3(), &b()).unwrap().value, 2);
    assert_eq!(independence_number(&k2(), &b()).unwrap().value, 1);
}

#[test]
fn cover_and_matching_examples() {
    assert_eq!(covering_number(&t3(), &b()).unwrap().value, 2);
    assert_eq!(matching_number(&t3(), &b()).unwrap().value, 1);
    assert_eq!(covering_number(&e3(), &b()).unwrap().value, 1);
    assert_eq!(matching_number(&e3(), &b()).unwrap().value, 1);
    assert_eq!(covering_number(&two_k2(), &b()).unwrap().value, 2);
    assert_eq!(matching_number(&two_k2(), &b()).unwrap().value, 2);
}

#[test]
fn fractional_cover_examples() {
    assert_eq!(fractional_covering_number(&t3(), &b()).unwrap().value, r(3, 2));
    assert_eq!(fractional_covering_by_vertex_enumeration(&t3(), &b()).unwrap(), r(3, 2));
    assert_eq!(fractional_covering_number(&e3(), &b()).unwrap().value, r(1, 1));
    assert_eq!(fractional_covering_number(&k2(), &b()).unwrap().value, r(1, 1));
}

#[test]
fn partition_examples() {
    assert_eq!(partition_number(&e3(), &b()).unwrap(), ExtNat::Finite(1));
    assert_eq!(partition_number(&t3(), &b()).unwrap(), ExtNat::Infinite);
    assert_eq!(partition_number(&two_k2(), &b()).unwrap(), ExtNat::Finite(2));
}

#[test]
fn coloring_examples() {
    assert_eq!(chromatic_number(&t3(), &b()).unwrap(), 3);
    assert_eq!(strong_chromatic_number(&t3(), &b()).unwrap(), 3);
    let q = chromatic_index(&t3(), &b()).unwrap();
    assert_eq!((q.q, q.max_degree, q.colored_hyperedge_property), (3, 2, false));
    assert_eq!(chromatic_number(&e3(), &b()).unwrap(), 2);
    assert_eq!(strong_chromatic_number(&e3(), &b()).unwrap(), 3);
    let q = chromatic_index(&e3(), &b()).unwrap();
    assert_eq!((q.q, q.max_degree, q.colored_hyperedge_property), (1, 1, true));
    assert_eq!(chromatic_number(&k2(), &b()).unwrap(), 2);
    assert!(chromatic_index(&k2(), &b()).unwrap().colored_hyperedge_property);
    assert_eq!(chromatic_number(&k2().add_loops(), &b()), Err(Error::LoopsPresent));
}

#[test]
fn discrepancy_examples() {
    assert_eq!(discrepancy(&k2(), 2, &b()).unwrap(), r(0, 1));
    assert_eq!(discrepancy(&e3(), 2, &b()).unwrap(), r(1, 2));
    assert_eq!(discrepancy(&e3(), 3, &b()).unwrap(), r(0, 1));
    assert_eq!(coloring_discrepancy(&e3(), &[0, 0, 0], 2), r(3, 2));
}

#[test]
fn helly_and_conformal_examples() {
    assert!(!has_helly_property(&t3(), &b()).unwrap());
    assert!(!is_conformal(&t3(), &b()).unwrap());
    assert!(has_helly_property(&e3(), &b()).unwrap());
    assert!(is_conformal(&e3(), &b()).unwrap());
    assert!(has_helly_property(&k2(), &b()).unwrap());
    assert!(is_conformal(&k2(), &b()).unwrap());
}

#[test]
fn path_examples() {
    assert_eq!(path_partition_number(&t3(), &b()).unwrap(), 1);
    assert!(hamiltonian(&t3(), HamiltonMode::Path, &b()).unwrap().is_some());
    let cycle = hamiltonian(&t3(), HamiltonMode::Cycle, &b()).unwrap().unwrap();
    assert!(cycle.is_cycle(&t3()));
    assert_eq!(path_partition_number(&e3(), &b()).unwrap(), 2);
    let two = hamiltonian(&e3(), HamiltonMode::PPath(2), &b()).unwrap().unwrap();
    assert!(two.is_p_path(&e3(), 2));
    assert!(hamiltonian(&e3(), HamiltonMode::Path, &b()).unwrap().is_none());
    assert_eq!(path_partition_number(&k2(), &b()).unwrap(), 1);
    assert!(hamiltonian(&k2(), HamiltonMode::Cycle, &b()).unwrap().is_none());
}

#[test]
fn budgets_fail_loudly() {
    let tiny = Budget { max_vertices: 2, max_steps: 10 };
    assert!(matches!(covering_number(&t3(), &tiny), Err(Error::SizeCapExceeded(_))));
    let starved = Budget { max_vertices: 40, max_steps: 1 };
    assert!(matches!(chromatic_number(&t3(), &starved), Err(Error::SizeCapExceeded(_))));
}

#[test]
fn searches_agree_with_brute_force() {
    for g in samples() {
        let n = g.vertex_count();
        let beta = subsets(n).filter(|s| !contains_edge(&g, s)).map(|s| s.len()).max().unwrap();
        let tau = subsets(n)
            .filter(|s| g.edges().iter().all(|e| e.iter().any(|v| s.contains(v))))
            .map(|s| s.len())
            .min()
            .unwrap();
        let m = g.edge_count();
        let nu = subsets(m)
            .filter(|fam| {
                fam.iter().enumerate().all(|(i, &a)| {
                    fam[i + 1..].iter().all(|&c| !g.edges()[a].iter().any(|v| g.edges()[c].contains(v)))
                })
            })
            .map(|f| f.len())
            .max()
            .unwrap();
        let rho = subsets(m)
            .filter(|fam| {
                let mut seen = vec![0; n];
                for &j in fam {
                    for &v in &g.edges()[j] {
                        seen[v] += 1;
                    }
                }
                seen.iter().all(|&c| c == 1)
            })
            .map(|f| f.len())
            .min();
        assert_eq!(independence_number(&g, &b()).unwrap().value, beta, "{g:?}");
        assert_eq!(covering_number(&g, &b()).unwrap().value, tau, "{g:?}");
        assert_eq!(matching_number(&g, &b()).unwrap().value, nu, "{g:?}");
        assert_eq!(partition_number(&g, &b()).unwrap(), ExtNat::from(rho), "{g:?}");
        let frac = fractional_covering_number(&g, &b()).unwrap();
        assert_eq!(frac.value, fractional_covering_by_vertex_enumeration(&g, &b()).unwrap(), "{g:?}");
        assert!(Rational::from(nu as i128) <= frac.value && frac.value <= Rational::from(tau as i128));
    }
}

#[test]
fn colorings_agree_with_brute_force() {
    for g in samples().into_iter().filter(|g| !g.has_loops()) {
        let n = g.vertex_count();
        let mut chi = n;
        let mut chi_s = n;
        for k in (1..=n).rev() {
            let mut code = vec![0usize; n];
            let mut proper = false;
            let mut strong = false;
            loop {
                if g.edges().iter().all(|e| e.iter().any(|&v| code[v] != code[e[0]])) {
                    proper = true;
                }
                if g.edges().iter().all(|e| {
                    e.iter().enumerate().all(|(i, &a)| e[i + 1..].iter().all(|&c| code[a] != code[c]))
                }) {
                    strong = true;
                }
                let mut i = 0;
                while i < n && code[i] == k - 1 {
                    code[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                code[i] += 1;
            }
            if proper {
                chi = k;
            }
            if strong {
                chi_s = k;
            }
        }
        assert_eq!(chromatic_number(&g, &b()).unwrap(), chi, "{g:?}");
        assert_eq!(strong_chromatic_number(&g, &b()).unwrap(), chi_s, "{g:?}");
        assert!(chi <= chi_s);
    }
}

#[test]
fn discrepancy_agrees_with_exhaustive_colorings() {
    for g in samples() {
        let n = g.vertex_count();
        for k in 2..=3usize {
            let mut best: Option<Rational> = None;
            for code in 0..k.pow(n as u32) {
                let mut c = code;
                let coloring: Vec<usize> = (0..n).map(|_| { let d = c % k; c /= k; d }).collect();
                let d = coloring_discrepancy(&g, &coloring, k);
                if best.map_or(true, |x| d < x) {
                    best = Some(d);
                }
            }
            assert_eq!(discrepancy(&g, k, &b()).unwrap(), best.unwrap(), "{g:?} k={k}");
        }
    }
}

#[test]
fn helly_and_conformal_agree_with_definitions() {
    for g in samples() {
        let m = g.edge_count();
        let helly = subsets(m).all(|fam| {
            let intersecting = fam.iter().all(|&a| {
                fam.iter().all(|&c| g.edges()[a].iter().any(|v| g.edges()[c].contains(v)))
            });
            !intersecting
                || fam.is_empty()
                || (0..g.vertex_count()).any(|v| fam.iter().all(|&a| g.edges()[a].contains(&v)))
        });
        assert_eq!(has_helly_property(&g, &b()).unwrap(), helly, "{g:?}");
        let adj = g.neighbours();
        let conformal = subsets(g.vertex_count()).all(|s| {
            let clique = s.iter().all(|&a| s.iter().all(|&c| a == c || adj[a].contains(&c)));
            !clique || s.len() < 2 || g.edges().iter().any(|e| s.iter().all(|v| e.contains(v)))
        });
        assert_eq!(is_conformal(&g, &b()).unwrap(), conformal, "{g:?}");
        if let Ok(d) = g.dual() {
            assert_eq!(helly, is_conformal(&d, &b()).unwrap(), "{g:?}");
        }
    }
}

#[test]
fn hamiltonian_witnesses_are_valid() {
    for g in samples() {
        if let Some(w) = hamiltonian(&g, HamiltonMode::Path, &b()).unwrap() {
            assert!(w.is_path(&g) && w.vertices.len() == g.vertex_count());
        }
        if let Some(w) = hamiltonian(&g, HamiltonMode::Cycle, &b()).unwrap() {
            assert!(w.is_cycle(&g) && w.vertices.len() == g.vertex_count());
        }
        let p = path_partition_number(&g, &b()).unwrap();
        assert!(p >= 1 && p <= g.vertex_count());
        let has_path = hamiltonian(&g, HamiltonMode::Path, &b()).unwrap().is_some();
        assert_eq!(p == 1, has_path, "{g:?}");
    }
    let _ = Walk { vertices: vec![0], edges: vec![] };
}

#[test]
fn report_collects_everything() {
    let rep = InvariantReport::compute(&t3(), &b());
    assert_eq!(rep.tau_star, Some(r(3, 2)));
    assert_eq!(rep.rho, Some(ExtNat::Infinite));
    assert_eq!(rep.chi, Some(3));
    assert_eq!(rep.ham_cycle, Some(true));
}
