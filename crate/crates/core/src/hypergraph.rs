use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Anything usable as a vertex label.
pub trait Vertex: Ord + Clone + fmt::Debug {}

impl<T: Ord + Clone + fmt::Debug> Vertex for T {}

/// A natural number or infinity, ordered with infinity last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(usize),
    Infinite,
}

impl ExtNat {
    pub fn finite(self) -> Option<usize> {
        match self {
            ExtNat::Finite(n) => Some(n),
            ExtNat::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtNat::Infinite
    }
}

impl From<Option<usize>> for ExtNat {
    fn from(value: Option<usize>) -> Self {
        value.map_or(ExtNat::Infinite, ExtNat::Finite)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Infinite => f.write_str("inf"),
        }
    }
}

/// Vertex label of a disjoint union: which operand the vertex came from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tagged<A, B> {
    Left(A),
    Right(B),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    pub antirank: usize,
    pub is_uniform: bool,
    pub is_simple: bool,
}

/// A finite hypergraph without repeated edges.
///
/// Vertices are stored sorted; every edge is a sorted, non-empty list of
/// vertex indices and the edge list itself is sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hypergraph<V> {
    vertices: Vec<V>,
    edges: Vec<Vec<usize>>,
}

impl<V: fmt::Debug> fmt::Debug for Hypergraph<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<Vec<&V>> = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&i| &self.vertices[i]).collect())
            .collect();
        f.debug_struct("Hypergraph")
            .field("vertices", &self.vertices)
            .field("edges", &edges)
            .finish()
    }
}

impl<V: Vertex> Hypergraph<V> {
    /// Builds a hypergraph from vertex labels and edges given as label sets.
    ///
    /// Repeated edges collapse. Empty edges, edges naming unknown vertices
    /// and repeated vertex labels are rejected.
    pub fn new<I, E, S>(vertices: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        E: IntoIterator<Item = S>,
        S: IntoIterator<Item = V>,
    {
        let mut vs: Vec<V> = vertices.into_iter().collect();
        vs.sort();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(format!("{:?}", w[0])));
        }
        let mut index_edges = Vec::new();
        for edge in edges {
            let mut idx = Vec::new();
            for v in edge {
                match vs.binary_search(&v) {
                    Ok(i) => idx.push(i),
                    Err(_) => return Err(Error::UnknownVertex(format!("{v:?}"))),
                }
            }
            if idx.is_empty() {
                return Err(Error::EmptyEdge);
            }
            index_edges.push(idx);
        }
        Ok(Self::from_parts(vs, index_edges))
    }

    /// A hypergraph with the given vertices and no edges.
    pub fn edgeless<I: IntoIterator<Item = V>>(vertices: I) -> Result<Self> {
        Self::new(vertices, core::iter::empty::<Vec<V>>())
    }

    /// Builds from a sorted duplicate-free vertex list and index edges.
    pub(crate) fn from_parts(vertices: Vec<V>, edges: Vec<Vec<usize>>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut edges: Vec<Vec<usize>> = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e.dedup();
                debug_assert!(!e.is_empty());
                debug_assert!(e.iter().all(|&i| i < vertices.len()));
                e
            })
            .collect();
        edges.sort();
        edges.dedup();
        Hypergraph { vertices, edges }
    }

    /// Same vertex set, different edges (index form).
    pub(crate) fn with_edges(&self, edges: Vec<Vec<usize>>) -> Self {
        Self::from_parts(self.vertices.clone(), edges)
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    /// Edges as sorted vertex-index lists.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, index: usize) -> &V {
        &self.vertices[index]
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub(crate) fn require_index(&self, v: &V) -> Result<usize> {
        self.index_of(v)
            .ok_or_else(|| Error::UnknownVertex(format!("{v:?}")))
    }

    /// Edges as label sets, in canonical order.
    pub fn edge_sets(&self) -> impl Iterator<Item = Vec<V>> + '_ {
        self.edges
            .iter()
            .map(|e| e.iter().map(|&i| self.vertices[i].clone()).collect())
    }

    pub fn edge_labels(&self, edge: usize) -> Vec<V> {
        self.edges[edge]
            .iter()
            .map(|&i| self.vertices[i].clone())
            .collect()
    }

    /// Position of a (sorted) index edge in the edge list.
    pub fn find_edge(&self, edge: &[usize]) -> Option<usize> {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(edge))
            .ok()
    }

    pub fn has_edge(&self, edge: &[usize]) -> bool {
        self.find_edge(edge).is_some()
    }

    /// Whether the given label set is an edge.
    pub fn has_edge_labels(&self, labels: &[V]) -> bool {
        let mut idx = Vec::with_capacity(labels.len());
        for v in labels {
            match self.index_of(v) {
                Some(i) => idx.push(i),
                None => return false,
            }
        }
        idx.sort_unstable();
        idx.dedup();
        self.has_edge(&idx)
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for (j, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(j);
            }
        }
        inc
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&vertex)).count()
    }

    /// Maximum degree, 0 for an edgeless hypergraph.
    pub fn max_degree(&self) -> usize {
        self.incidence().iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn rank(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).max()
    }

    pub fn antirank(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).min()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.len() == 1)
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.incidence().iter().any(Vec::is_empty)
    }

    /// No edge inside another and every edge has at least two vertices.
    pub fn is_simple(&self) -> bool {
        if self.has_loops() {
            return false;
        }
        for (i, a) in self.edges.iter().enumerate() {
            for (j, b) in self.edges.iter().enumerate() {
                if i != j && a.len() <= b.len() && is_subset(a, b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn rank_profile(&self) -> Result<RankProfile> {
        let rank = self.rank().ok_or(Error::NoEdges)?;
        let antirank = self.antirank().ok_or(Error::NoEdges)?;
        Ok(RankProfile {
            rank,
            antirank,
            is_uniform: rank == antirank,
            is_simple: self.is_simple(),
        })
    }

    /// Adds the loop `{x}` at every vertex.
    pub fn add_loops(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.extend((0..self.vertices.len()).map(|i| vec![i]));
        self.with_edges(edges)
    }

    /// Deletes every singleton edge.
    pub fn remove_loops(&self) -> Self {
        let edges = self.edges.iter().filter(|e| e.len() > 1).cloned().collect();
        self.with_edges(edges)
    }

    /// Sub-hypergraph induced by the given vertex indices: every edge lying
    /// entirely inside the subset.
    pub fn induced(&self, subset: &[usize]) -> Self {
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut position = vec![usize::MAX; self.vertices.len()];
        for (new, &old) in keep.iter().enumerate() {
            position[old] = new;
        }
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| position[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| position[v]).collect())
            .collect();
        Self::from_parts(vertices, edges)
    }

    /// Relabels vertices; the map must be injective on this vertex set.
    pub fn map_vertices<W: Vertex>(&self, mut f: impl FnMut(&V) -> W) -> Result<Hypergraph<W>> {
        let mut labeled: Vec<(W, usize)> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (f(v), i))
            .collect();
        labeled.sort();
        if labeled.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::NonInjectiveRelabel);
        }
        let mut position = vec![0; labeled.len()];
        for (new, (_, old)) in labeled.iter().enumerate() {
            position[*old] = new;
        }
        let vertices = labeled.into_iter().map(|(w, _)| w).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| position[v]).collect())
            .collect();
        Ok(Hypergraph::from_parts(vertices, edges))
    }

    /// The dual: one vertex per edge (labelled by edge position) and one
    /// edge `v* = {e : v in e}` per vertex. Identical stars collapse.
    pub fn dual(&self) -> Result<Hypergraph<usize>> {
        let inc = self.incidence();
        if let Some(v) = inc.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex(format!("{:?}", self.vertices[v])));
        }
        Ok(Hypergraph::from_parts(
            (0..self.edges.len()).collect(),
            inc,
        ))
    }

    /// Disjoint union, keeping operands apart with [`Tagged`] labels.
    pub fn disjoint_union<W: Vertex>(&self, other: &Hypergraph<W>) -> Hypergraph<Tagged<V, W>> {
        let n = self.vertices.len();
        let vertices = self
            .vertices
            .iter()
            .cloned()
            .map(Tagged::Left)
            .chain(other.vertices.iter().cloned().map(Tagged::Right))
            .collect();
        let edges = self
            .edges
            .iter()
            .cloned()
            .chain(
                other
                    .edges
                    .iter()
                    .map(|e| e.iter().map(|&v| v + n).collect()),
            )
            .collect();
        Hypergraph::from_parts(vertices, edges)
    }

    /// Disjoint union plus every cross pair `{u, v}`.
    pub fn join<W: Vertex>(&self, other: &Hypergraph<W>) -> Hypergraph<Tagged<V, W>> {
        let union = self.disjoint_union(other);
        let n = self.vertices.len();
        let mut edges = union.edges.clone();
        for u in 0..n {
            for v in 0..other.vertices.len() {
                edges.push(vec![u, n + v]);
            }
        }
        union.with_edges(edges)
    }

    /// The `X`-join: `parts[i]` is attached to the `i`-th vertex of `frame`.
    ///
    /// Edges are the edges of every part, plus every set meeting each part
    /// in at most one vertex whose set of touched parts is an edge of the
    /// frame.
    pub fn x_join<X: Vertex>(frame: &Hypergraph<X>, parts: &[Hypergraph<V>]) -> Result<Hypergraph<(X, V)>> {
        if parts.len() != frame.vertex_count() {
            return Err(Error::BadIndex(parts.len()));
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut vertices = Vec::new();
        for (x, part) in frame.vertices.iter().zip(parts) {
            offsets.push(vertices.len());
            vertices.extend(part.vertices.iter().map(|v| (x.clone(), v.clone())));
        }
        let mut edges: Vec<Vec<usize>> = Vec::new();
        for (p, part) in parts.iter().enumerate() {
            edges.extend(
                part.edges
                    .iter()
                    .map(|e| e.iter().map(|&v| v + offsets[p]).collect()),
            );
        }
        for f in &frame.edges {
            let choices: Vec<Vec<usize>> = f
                .iter()
                .map(|&x| (0..parts[x].vertex_count()).map(|v| v + offsets[x]).collect())
                .collect();
            for_each_choice(&choices, |pick| edges.push(pick.to_vec()));
        }
        Ok(Hypergraph::from_parts(vertices, edges))
    }
}

impl Hypergraph<usize> {
    /// `K1` (no loop) or `LK1` (with loop) on the vertex `0`.
    pub fn single_vertex(looped: bool) -> Self {
        let edges = if looped { vec![vec![0]] } else { Vec::new() };
        Hypergraph::from_parts(vec![0], edges)
    }

    /// Builds from a vertex count and index edges on `0..n`.
    pub fn from_index_edges(n: usize, edges: &[&[usize]]) -> Result<Self> {
        Hypergraph::new(0..n, edges.iter().map(|e| e.iter().copied()))
    }
}

/// Sorted-slice subset test.
pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Calls `visit` with every way of picking one element from each list.
pub(crate) fn for_each_choice(choices: &[Vec<usize>], mut visit: impl FnMut(&[usize])) {
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    let mut pick: Vec<usize> = choices.iter().map(|c| c[0]).collect();
    let mut cursor = vec![0usize; choices.len()];
    loop {
        visit(&pick);
        let mut i = choices.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            cursor[i] += 1;
            if cursor[i] < choices[i].len() {
                pick[i] = choices[i][cursor[i]];
                break;
            }
            cursor[i] = 0;
            pick[i] = choices[i][0];
        }
    }
}

/// Calls `visit` with every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        visit(&comb);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if comb[i] < n - k + i {
                comb[i] += 1;
                for j in i + 1..k {
                    comb[j] = comb[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Hypergraph<usize> {
        Hypergraph::from_index_edges(2, &[&[0, 1]]).unwrap()
    }

    fn t3() -> Hypergraph<usize> {
        Hypergraph::from_index_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap()
    }

    fn e3() -> Hypergraph<usize> {
        Hypergraph::from_index_edges(3, &[&[0, 1, 2]]).unwrap()
    }

    #[test]
    fn construction_normalizes_and_rejects() {
        assert_eq!(k2().edge_count(), 1);
        let dup = Hypergraph::from_index_edges(3, &[&[0, 1, 2], &[2, 1, 0]]).unwrap();
        assert_eq!(dup, e3());
        assert_eq!(
            Hypergraph::new([0], [Vec::<i32>::new()]),
            Err(Error::EmptyEdge)
        );
        assert!(matches!(
            Hypergraph::new([0, 1], [vec![0, 2]]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            Hypergraph::new([0, 0], [vec![0]]),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn rank_profiles() {
        let p = k2().rank_profile().unwrap();
        assert_eq!((p.rank, p.antirank, p.is_uniform, p.is_simple), (2, 2, true, true));
        let p = t3().rank_profile().unwrap();
        assert_eq!((p.rank, p.antirank, p.is_uniform, p.is_simple), (2, 2, true, true));
        let nested = Hypergraph::from_index_edges(3, &[&[0, 1], &[0, 1, 2]]).unwrap();
        let p = nested.rank_profile().unwrap();
        assert_eq!((p.rank, p.antirank, p.is_uniform, p.is_simple), (3, 2, false, false));
        assert_eq!(
            Hypergraph::single_vertex(false).rank_profile(),
            Err(Error::NoEdges)
        );
    }

    #[test]
    fn loops_round_trip() {
        let looped = k2().add_loops();
        let edges: Vec<Vec<usize>> = looped.edge_sets().collect();
        assert_eq!(edges, vec![vec![0], vec![0, 1], vec![1]]);
        assert_eq!(looped.remove_loops(), k2());
        assert_eq!(k2().remove_loops(), k2());
    }

    #[test]
    fn duals() {
        let d = k2().dual().unwrap();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.edges(), &[vec![0]]);
        let d = e3().dual().unwrap();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.edge_count(), 1);
        assert_eq!(t3().dual().unwrap().edge_count(), 3);
        let isolated = Hypergraph::from_index_edges(3, &[&[0, 1]]).unwrap();
        assert!(matches!(isolated.dual(), Err(Error::IsolatedVertex(_))));
    }

    #[test]
    fn unions_and_joins() {
        let u = k2().disjoint_union(&k2());
        assert_eq!((u.vertex_count(), u.edge_count()), (4, 2));
        let j = k2().join(&k2());
        assert_eq!((j.vertex_count(), j.edge_count()), (4, 6));
        let k1 = Hypergraph::single_vertex(false);
        let j = k1.join(&k1);
        assert_eq!((j.vertex_count(), j.edge_count()), (2, 1));
    }

    #[test]
    fn x_join_over_k2_is_the_join() {
        let frame = k2();
        let z = Hypergraph::x_join(&frame, &[k2(), k2()]).unwrap();
        let j = k2()
            .join(&k2())
            .map_vertices(|t| match t {
                Tagged::Left(v) => (0usize, *v),
                Tagged::Right(v) => (1usize, *v),
            })
            .unwrap();
        assert_eq!(z, j);
    }

    #[test]
    fn combinations_and_choices() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 6);
        let mut count = 0;
        for_each_choice(&[vec![0, 1], vec![2, 3, 4]], |_| count += 1);
        assert_eq!(count, 6);
        let mut zero = 0;
        for_each_combination(3, 0, |_| zero += 1);
        assert_eq!(zero, 1);
    }
}
