//! Walks, paths, distances and connectivity.
//!
//! Distances are computed by breadth-first search on the 2-section, which
//! gives the same values as shortest paths in the hypergraph itself.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::hypergraph::{ExtNat, Hypergraph, Vertex};

/// An alternating vertex/edge sequence `v0, e1, v1, ..., ek, vk`, stored as
/// vertex indices and edge indices (`edges.len() + 1 == vertices.len()`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Walk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Consecutive vertices distinct and both inside the connecting edge.
    pub fn is_walk<V: Vertex>(&self, h: &Hypergraph<V>) -> bool {
        if self.vertices.len() != self.edges.len() + 1 {
            return false;
        }
        if self.vertices.iter().any(|&v| v >= h.vertex_count())
            || self.edges.iter().any(|&e| e >= h.edge_count())
        {
            return false;
        }
        self.edges.iter().enumerate().all(|(i, &e)| {
            let (a, b) = (self.vertices[i], self.vertices[i + 1]);
            let edge = &h.edges()[e];
            a != b && edge.binary_search(&a).is_ok() && edge.binary_search(&b).is_ok()
        })
    }

    /// A walk with distinct vertices whose repeated edges occur only in
    /// consecutive runs of length at most `p`.
    pub fn is_p_path<V: Vertex>(&self, h: &Hypergraph<V>, p: usize) -> bool {
        if p == 0 || !self.is_walk(h) {
            return false;
        }
        let mut seen = vec![false; h.vertex_count()];
        for &v in &self.vertices {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let mut used = vec![false; h.edge_count()];
        let mut i = 0;
        while i < self.edges.len() {
            let e = self.edges[i];
            if used[e] {
                return false;
            }
            used[e] = true;
            let mut j = i;
            while j + 1 < self.edges.len() && self.edges[j + 1] == e {
                j += 1;
            }
            if j - i + 1 > p {
                return false;
            }
            i = j + 1;
        }
        true
    }

    pub fn is_path<V: Vertex>(&self, h: &Hypergraph<V>) -> bool {
        self.is_p_path(h, 1)
    }

    /// A closed walk `v0, e1, ..., ek, v0` (the first vertex is not repeated
    /// in `vertices`; `edges.len() == vertices.len()`) with distinct
    /// vertices, distinct edges and `k >= 2`.
    pub fn is_cycle<V: Vertex>(&self, h: &Hypergraph<V>) -> bool {
        if self.vertices.len() < 2 || self.edges.len() != self.vertices.len() {
            return false;
        }
        let mut open = self.vertices.clone();
        open.push(self.vertices[0]);
        let closed = Walk {
            vertices: open,
            edges: self.edges.clone(),
        };
        if !closed.is_walk(h) {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        vs.len() == self.vertices.len() && es.len() == self.edges.len()
    }
}

impl<V: Vertex> Hypergraph<V> {
    /// Neighbour lists in the 2-section (sorted, without the vertex itself).
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for e in self.edges() {
            for &a in e {
                for &b in e {
                    if a != b {
                        adj[a].push(b);
                    }
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Breadth-first distances from one vertex index.
    pub fn distances_from(&self, source: usize) -> Vec<ExtNat> {
        bfs(&self.neighbours(), source)
    }

    /// All-pairs distance matrix by vertex index.
    pub fn distance_matrix(&self) -> Vec<Vec<ExtNat>> {
        let adj = self.neighbours();
        (0..self.vertex_count()).map(|s| bfs(&adj, s)).collect()
    }

    pub fn distance(&self, u: &V, v: &V) -> Result<ExtNat> {
        let a = self.require_index(u)?;
        let b = self.require_index(v)?;
        Ok(self.distances_from(a)[b])
    }

    /// Vertex index sets of the connected components, in order of their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(&self.neighbours())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connectivity of the complement of the 2-section.
    pub fn is_coconnected(&self) -> bool {
        let n = self.vertex_count();
        let adj = self.neighbours();
        let mut co = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if a != b && adj[a].binary_search(&b).is_err() {
                    co[a].push(b);
                }
            }
        }
        components_of(&co).len() <= 1
    }
}

pub(crate) fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<ExtNat> {
    let mut dist = vec![ExtNat::Infinite; adj.len()];
    dist[source] = ExtNat::Finite(0);
    let mut queue = VecDeque::from([(source, 0usize)]);
    while let Some((v, d)) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w].is_infinite() {
                dist[w] = ExtNat::Finite(d + 1);
                queue.push_back((w, d + 1));
            }
        }
    }
    dist
}

pub(crate) fn components_of(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Hypergraph;

    fn t3() -> Hypergraph<usize> {
        Hypergraph::from_index_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap()
    }

    fn c4() -> Hypergraph<usize> {
        Hypergraph::from_index_edges(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]).unwrap()
    }

    fn two_k2() -> Hypergraph<usize> {
        Hypergraph::from_index_edges(4, &[&[0, 1], &[2, 3]]).unwrap()
    }

    #[test]
    fn distances() {
        assert_eq!(t3().distance(&0, &2).unwrap(), ExtNat::Finite(1));
        assert_eq!(c4().distance(&0, &2).unwrap(), ExtNat::Finite(2));
        assert_eq!(two_k2().distance(&0, &3).unwrap(), ExtNat::Infinite);
        assert_eq!(t3().distance(&1, &1).unwrap(), ExtNat::Finite(0));
        assert!(t3().distance(&0, &9).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(t3().is_connected());
        assert!(!two_k2().is_connected());
        assert_eq!(two_k2().components().len(), 2);
        assert!(Hypergraph::single_vertex(false).is_connected());
        assert!(!t3().is_coconnected());
        assert!(two_k2().is_coconnected());
        assert!(Hypergraph::single_vertex(false).is_coconnected());
    }

    #[test]
    fn walks_and_paths() {
        let e3 = Hypergraph::from_index_edges(3, &[&[0, 1, 2]]).unwrap();
        let two_path = Walk { vertices: vec![0, 1, 2], edges: vec![0, 0] };
        assert!(two_path.is_walk(&e3));
        assert!(two_path.is_p_path(&e3, 2));
        assert!(!two_path.is_path(&e3));
        let cycle = Walk { vertices: vec![0, 1, 2], edges: vec![0, 2, 1] };
        assert!(cycle.is_cycle(&t3()));
        let k2 = Hypergraph::from_index_edges(2, &[&[0, 1]]).unwrap();
        let back = Walk { vertices: vec![0, 1], edges: vec![0, 0] };
        assert!(!back.is_cycle(&k2));
    }
}
