//! Independent reference computations used by the checks.
//!
//! Nothing here calls the product code to predict its own output: the
//! distance tables come from factor distances and exact-length walk sets,
//! and the graph-side products are built on the 2-sections.

use hyperprod_core::covering::Covering;
use hyperprod_core::product::{product_with, ProductKind, ProductOptions};
use hyperprod_core::section::two_section;
use hyperprod_core::{ExtNat, Hypergraph, Result};
use rand::seq::SliceRandom;
use rand::Rng;

/// Whether the distance lemma for `kind` applies to the pair.
pub fn distance_lemma_applies(kind: ProductKind, h1: &Hypergraph<usize>, h2: &Hypergraph<usize>) -> bool {
    let loop_free = !h1.has_loops() && !h2.has_loops();
    let no_isolated = !h1.has_isolated_vertices() && !h2.has_isolated_vertices();
    match kind {
        ProductKind::Cartesian | ProductKind::DirectMin | ProductKind::Normal => true,
        ProductKind::DirectR => uniform_rank(h1).is_some() && uniform_rank(h1) == uniform_rank(h2),
        ProductKind::Strong => loop_free,
        ProductKind::Square | ProductKind::Categorial => loop_free && no_isolated,
        ProductKind::Lex => !h1.has_loops(),
        _ => false,
    }
}

fn uniform_rank(h: &Hypergraph<usize>) -> Option<usize> {
    match (h.rank(), h.antirank()) {
        (Some(r), Some(s)) if r == s => Some(r),
        _ => None,
    }
}

/// `reach[x][n][y]`: a walk of length exactly `n` from `x` to `y` exists.
fn exact_walks(h: &Hypergraph<usize>, max_len: usize) -> Vec<Vec<Vec<bool>>> {
    let adj = h.neighbours();
    let n = h.vertex_count();
    (0..n)
        .map(|x| {
            let mut layers = Vec::with_capacity(max_len + 1);
            let mut cur = vec![false; n];
            cur[x] = true;
            for _ in 0..=max_len {
                let mut next = vec![false; n];
                for (v, _) in cur.iter().enumerate().filter(|(_, &on)| on) {
                    for &w in &adj[v] {
                        next[w] = true;
                    }
                }
                layers.push(std::mem::replace(&mut cur, next));
            }
            layers
        })
        .collect()
}

/// The distance table the lemma for `kind` predicts, indexed like the
/// product (`i * |V2| + j`). `None` when no lemma covers the pair.
pub fn predicted_distances(
    kind: ProductKind,
    h1: &Hypergraph<usize>,
    h2: &Hypergraph<usize>,
) -> Option<Vec<Vec<ExtNat>>> {
    if !distance_lemma_applies(kind, h1, h2) {
        return None;
    }
    let (n1, n2) = (h1.vertex_count(), h2.vertex_count());
    let d1 = h1.distance_matrix();
    let d2 = h2.distance_matrix();
    let walks = matches!(kind, ProductKind::DirectMin | ProductKind::DirectR).then(|| {
        let bound = n1 * n2;
        (exact_walks(h1, bound), exact_walks(h2, bound))
    });
    let degree: Vec<usize> = (0..n1).map(|v| h1.degree(v)).collect();
    let add = |a: ExtNat, b: ExtNat| match (a, b) {
        (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a + b),
        _ => ExtNat::Infinite,
    };
    let mut table = vec![vec![ExtNat::Infinite; n1 * n2]; n1 * n2];
    for x1 in 0..n1 {
        for x2 in 0..n2 {
            for y1 in 0..n1 {
                for y2 in 0..n2 {
                    let (a, b) = (d1[x1][y1], d2[x2][y2]);
                    let d = match kind {
                        ProductKind::Cartesian => add(a, b),
                        ProductKind::Normal | ProductKind::Strong | ProductKind::Square | ProductKind::Categorial => {
                            a.max(b)
                        }
                        ProductKind::Lex => {
                            if x1 != y1 {
                                a
                            } else if degree[x1] == 0 {
                                b
                            } else {
                                b.min(ExtNat::Finite(2))
                            }
                        }
                        _ => {
                            let (w1, w2) = walks.as_ref().expect("walk tables built for direct kinds");
                            (0..=n1 * n2)
                                .find(|&len| w1[x1][len][y1] && w2[x2][len][y2])
                                .into()
                        }
                    };
                    table[x1 * n2 + x2][y1 * n2 + y2] = d;
                }
            }
        }
    }
    Some(table)
}

/// First vertex pair whose product distance differs from the lemma, as
/// `(from, to, actual, predicted)` index data. `Ok(None)` on agreement or
/// when the lemma does not apply.
pub fn distance_mismatch(
    kind: ProductKind,
    h1: &Hypergraph<usize>,
    h2: &Hypergraph<usize>,
    options: &ProductOptions,
) -> Result<Option<(usize, usize, ExtNat, ExtNat)>> {
    let Some(predicted) = predicted_distances(kind, h1, h2) else {
        return Ok(None);
    };
    let actual = product_with(kind, h1, h2, options)?.hypergraph.distance_matrix();
    for (u, row) in actual.iter().enumerate() {
        for (v, &d) in row.iter().enumerate() {
            if d != predicted[u][v] {
                return Ok(Some((u, v, d, predicted[u][v])));
            }
        }
    }
    Ok(None)
}

/// The graph product that the 2-section of `kind` is compared against.
pub fn graph_counterpart(kind: ProductKind) -> ProductKind {
    match kind {
        ProductKind::Cartesian => ProductKind::Cartesian,
        ProductKind::Lex => ProductKind::Lex,
        ProductKind::DirectR | ProductKind::DirectMin | ProductKind::DirectMax | ProductKind::DirectNr => {
            ProductKind::DirectMin
        }
        _ => ProductKind::Normal,
    }
}

/// `[H1 * H2]_2 == [H1]_2 * [H2]_2` with the graph counterpart on the right.
pub fn two_section_commutes(
    kind: ProductKind,
    h1: &Hypergraph<usize>,
    h2: &Hypergraph<usize>,
    options: &ProductOptions,
) -> Result<bool> {
    let left = two_section(&product_with(kind, h1, h2, options)?.hypergraph)?;
    let right = product_with(graph_counterpart(kind), &two_section(h1)?, &two_section(h2)?, options)?.hypergraph;
    Ok(left == right)
}

/// A random `k`-fold cover of `base`: vertices `(v, i)` for `i < k`, and
/// every base edge lifted to `k` disjoint copies through an independent
/// permutation of each vertex fibre.
pub fn random_cover(base: &Hypergraph<usize>, k: usize, rng: &mut impl Rng) -> (Hypergraph<(usize, usize)>, Covering) {
    let vertices: Vec<(usize, usize)> = base
        .vertices()
        .iter()
        .flat_map(|&v| (0..k).map(move |i| (v, i)))
        .collect();
    let mut edges = Vec::new();
    for e in base.edges() {
        let perms: Vec<Vec<usize>> = e
            .iter()
            .map(|_| {
                let mut p: Vec<usize> = (0..k).collect();
                p.shuffle(rng);
                p
            })
            .collect();
        for sheet in 0..k {
            edges.push(
                e.iter()
                    .zip(&perms)
                    .map(|(&v, p)| (*base.vertex(v), p[sheet]))
                    .collect::<Vec<_>>(),
            );
        }
    }
    let cover = Hypergraph::new(vertices, edges).expect("lifted edges use cover vertices");
    let vertex_map = cover
        .vertices()
        .iter()
        .map(|(v, _)| base.index_of(v).expect("fibre over a base vertex"))
        .collect();
    let covering = Covering::induced(&cover, base, vertex_map, k).expect("lifted edges project onto base edges");
    (cover, covering)
}

/// Loop-free, rank at most two, and the 2-section is 2-colourable.
pub fn is_bipartite_graph(h: &Hypergraph<usize>) -> bool {
    if h.has_loops() || h.rank().is_some_and(|r| r > 2) {
        return false;
    }
    let adj = h.neighbours();
    let mut side = vec![None; h.vertex_count()];
    for start in 0..h.vertex_count() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let s = side[v].expect("visited");
            for &w in &adj[v] {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        stack.push(w);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Searches for a walk in `h1` visiting every vertex, each between `lo`
/// and `hi` times. With `closing`, a walk that reaches `hi` at some
/// vertex must also have distinct ends lying in a common edge.
pub fn lex_walk_exists(h1: &Hypergraph<usize>, lo: usize, hi: usize, closing: bool) -> bool {
    let n = h1.vertex_count();
    if n == 0 || lo > hi || hi == 0 {
        return false;
    }
    let adj = h1.neighbours();
    let share_edge = |a: usize, b: usize| h1.edges().iter().any(|e| e.contains(&a) && e.contains(&b));
    let accept = |start: usize, end: usize, counts: &[usize]| {
        if counts.iter().any(|&c| c < lo) {
            return false;
        }
        if closing && counts.contains(&hi) {
            return start != end && share_edge(start, end);
        }
        true
    };
    let mut seen = std::collections::HashSet::new();
    for start in 0..n {
        let mut counts = vec![0; n];
        counts[start] = 1;
        let mut stack = vec![(start, counts)];
        while let Some((v, counts)) = stack.pop() {
            if !seen.insert((start, v, counts.clone())) {
                continue;
            }
            if accept(start, v, &counts) {
                return true;
            }
            for &w in &adj[v] {
                if counts[w] < hi {
                    let mut next = counts.clone();
                    next[w] += 1;
                    stack.push((w, next));
                }
            }
        }
    }
    false
}
