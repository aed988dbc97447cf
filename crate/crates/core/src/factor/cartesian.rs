use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{FactorTree, FactorizationResult, Method};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::product::ProductKind;
use crate::section::l2_section;
use crate::walk::{bfs, components_of};

/// Largest vertex count accepted by [`factor_cartesian`].
pub const DEFAULT_PIPELINE_CAP: usize = 64;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

/// Cartesian prime factor classes of a connected graph given by adjacency
/// lists. Returns the edge list `(u, v)` with `u < v` and, per edge, its
/// class index (classes numbered by first occurrence).
pub fn graph_factor_classes(adj: &[Vec<usize>]) -> (Vec<(usize, usize)>, Vec<usize>) {
    let n = adj.len();
    let mut edges = Vec::new();
    for (u, nb) in adj.iter().enumerate() {
        for &v in nb {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    let index: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|s| bfs(adj, s).into_iter().map(|d| d.finite().unwrap_or(usize::MAX / 4)).collect())
        .collect();
    let mut uf = UnionFind::new(edges.len());

    // Djokovic-Winkler relation.
    for (i, &(x, y)) in edges.iter().enumerate() {
        for (j, &(u, v)) in edges.iter().enumerate().skip(i + 1) {
            if dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u] {
                uf.union(i, j);
            }
        }
    }

    // Edges xy, xz whose ends y, z are non-adjacent with x as their only
    // common neighbour.
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    for x in 0..n {
        for (i, &y) in adj[x].iter().enumerate() {
            for &z in &adj[x][i + 1..] {
                if adj[y].binary_search(&z).is_ok() {
                    continue;
                }
                let common = adj[y].iter().filter(|w| adj[z].binary_search(w).is_ok()).count();
                if common == 1 {
                    uf.union(index[&key(x, y)], index[&key(x, z)]);
                }
            }
        }
    }

    let classes = number_classes(&mut uf, edges.len());
    (edges, classes)
}

fn number_classes(uf: &mut UnionFind, m: usize) -> Vec<usize> {
    let mut ids = BTreeMap::new();
    (0..m)
        .map(|i| {
            let r = uf.find(i);
            let next = ids.len();
            *ids.entry(r).or_insert(next)
        })
        .collect()
}

/// Cartesian prime factor decomposition of a connected loop-free
/// hypergraph through its L2-section.
///
/// ```
/// use hyperprod_core::{factor::factor_cartesian, Hypergraph};
/// let c4 = Hypergraph::from_index_edges(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]).unwrap();
/// let pfd = factor_cartesian(&c4, hyperprod_core::factor::DEFAULT_PIPELINE_CAP).unwrap();
/// assert_eq!(pfd.factors.len(), 2);
/// assert!(pfd.reproduces(&c4));
/// ```
pub fn factor_cartesian<V: Vertex>(h: &Hypergraph<V>, cap: usize) -> Result<FactorizationResult> {
    let n = h.vertex_count();
    if n > cap {
        return Err(Error::SizeCapExceeded(format!("{n} vertices exceed the cap of {cap}")));
    }
    if h.has_loops() {
        return Err(Error::LoopsPresent);
    }
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    if n == 1 {
        return Ok(FactorizationResult {
            kind: ProductKind::Cartesian,
            method: Method::Pipeline,
            factors: Vec::new(),
            tree: None,
            coordinates: vec![Vec::new()],
            distinct_factorizations: 1,
            factorization_lengths: vec![0],
        });
    }

    let section = l2_section(h)?;
    let adj = section.graph().neighbours();
    let (graph_edges, colors) = graph_factor_classes(&adj);
    let edge_index: BTreeMap<(usize, usize), usize> =
        graph_edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    let class_count = colors.iter().max().map_or(0, |m| m + 1);
    let mut uf = UnionFind::new(class_count);
    for e in h.edges() {
        let mut first = None;
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                let c = colors[edge_index[&(a, b)]];
                match first {
                    None => first = Some(c),
                    Some(f) => {
                        uf.union(f, c);
                    }
                }
            }
        }
    }
    let merged = number_classes(&mut uf, class_count);
    let k = merged.iter().max().map_or(0, |m| m + 1);
    let edge_class: Vec<usize> = colors.iter().map(|&c| merged[c]).collect();

    // Finest coarsening of the merged classes that is a Cartesian
    // factorization; the single block always is.
    let mut best = None;
    for blocks in (1..=k).rev() {
        for_each_partition(k, blocks, &mut |assign| {
            let classes: Vec<usize> = edge_class.iter().map(|&c| assign[c]).collect();
            match try_coordinatize(h, &adj, &graph_edges, &classes, blocks) {
                Some(r) => {
                    best = Some(r);
                    false
                }
                None => true,
            }
        });
        if best.is_some() {
            break;
        }
    }
    best.ok_or_else(|| Error::FactorizationFailed("no Cartesian coordinatization".into()))
}

/// Visits every partition of `0..k` into exactly `blocks` blocks as a
/// restricted-growth assignment; the visitor returns `false` to stop.
fn for_each_partition(k: usize, blocks: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        i: usize,
        used: usize,
        k: usize,
        blocks: usize,
        assign: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k - i < blocks - used {
            return true;
        }
        if i == k {
            return used != blocks || visit(assign);
        }
        for b in 0..=used.min(blocks - 1) {
            assign[i] = b;
            if !go(i + 1, used.max(b + 1), k, blocks, assign, visit) {
                return false;
            }
        }
        true
    }
    if k == 0 || blocks == 0 || blocks > k {
        return;
    }
    let mut assign = vec![0; k];
    go(0, 0, k, blocks, &mut assign, visit);
}

fn try_coordinatize<V: Vertex>(
    h: &Hypergraph<V>,
    adj: &[Vec<usize>],
    graph_edges: &[(usize, usize)],
    classes: &[usize],
    blocks: usize,
) -> Option<FactorizationResult> {
    let n = h.vertex_count();
    let class_of = |a: usize, b: usize| -> usize {
        let key = if a < b { (a, b) } else { (b, a) };
        classes[graph_edges.binary_search(&key).expect("2-section edge")]
    };
    let mut coordinates = vec![Vec::with_capacity(blocks); n];
    let mut sizes = Vec::with_capacity(blocks);
    for i in 0..blocks {
        // Vertices sharing coordinate i are joined by edges of other classes.
        let co_adj: Vec<Vec<usize>> = (0..n)
            .map(|u| adj[u].iter().copied().filter(|&v| class_of(u, v) != i).collect())
            .collect();
        let comps = components_of(&co_adj);
        let mut label = vec![0; n];
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                label[v] = c;
            }
        }
        for v in 0..n {
            coordinates[v].push(label[v]);
        }
        sizes.push(comps.len());
    }
    if sizes.iter().any(|&s| s < 2) || sizes.iter().product::<usize>() != n {
        return None;
    }

    let mut factor_edges: Vec<Vec<Vec<usize>>> = vec![Vec::new(); blocks];
    for e in h.edges() {
        let i = class_of(e[0], e[1]);
        let mut proj: Vec<usize> = e.iter().map(|&v| coordinates[v][i]).collect();
        proj.sort_unstable();
        proj.dedup();
        if proj.len() != e.len() {
            return None;
        }
        factor_edges[i].push(proj);
    }
    let factors: Vec<Hypergraph<usize>> = factor_edges
        .into_iter()
        .zip(&sizes)
        .map(|(edges, &s)| Hypergraph::from_parts((0..s).collect(), edges))
        .collect();
    let result = FactorizationResult {
        kind: ProductKind::Cartesian,
        method: Method::Pipeline,
        factors,
        tree: FactorTree::left_comb(blocks),
        coordinates,
        distinct_factorizations: 1,
        factorization_lengths: vec![blocks],
    };
    result.reproduces(h).then_some(result)
}
