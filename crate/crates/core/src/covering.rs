//! k-fold coverings between hypergraphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::{Hypergraph, Vertex};

/// Why a candidate covering projection was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoveringDefect {
    /// A map has the wrong length or points outside the base.
    MalformedMap,
    /// Some edge image is not the assigned base edge.
    NotHomomorphism,
    /// Vertex or edge map misses part of the base.
    NotSurjective,
    /// Some vertex fibre does not have `k` elements.
    VertexFiberSize,
    /// Some edge fibre does not have `k` elements.
    EdgeFiberSize,
    /// Two edges of one fibre intersect.
    FiberEdgesIntersect,
}

/// A covering projection given as vertex and edge index maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    pub k: usize,
}

impl Covering {
    /// The identity covering of `h` (k = 1).
    pub fn identity<V: Vertex>(h: &Hypergraph<V>) -> Self {
        Covering {
            vertex_map: (0..h.vertex_count()).collect(),
            edge_map: (0..h.edge_count()).collect(),
            k: 1,
        }
    }

    /// The edge map induced by a vertex map, if every edge image is an edge.
    pub fn induced<A: Vertex, B: Vertex>(
        cover: &Hypergraph<A>,
        base: &Hypergraph<B>,
        vertex_map: Vec<usize>,
        k: usize,
    ) -> Option<Self> {
        let edge_map = cover
            .edges()
            .iter()
            .map(|e| base.find_edge(&image(e, &vertex_map)?))
            .collect::<Option<Vec<usize>>>()?;
        Some(Covering { vertex_map, edge_map, k })
    }

    pub fn verify<A: Vertex, B: Vertex>(
        &self,
        cover: &Hypergraph<A>,
        base: &Hypergraph<B>,
    ) -> Result<(), CoveringDefect> {
        verify_covering(cover, base, &self.vertex_map, &self.edge_map, self.k)
    }
}

fn image(edge: &[usize], map: &[usize]) -> Option<Vec<usize>> {
    let mut img = Vec::with_capacity(edge.len());
    for &v in edge {
        img.push(*map.get(v)?);
    }
    img.sort_unstable();
    img.dedup();
    Some(img)
}

/// Checks that `(vertex_map, edge_map)` is a `k`-fold covering projection
/// from `cover` onto `base`.
pub fn verify_covering<A: Vertex, B: Vertex>(
    cover: &Hypergraph<A>,
    base: &Hypergraph<B>,
    vertex_map: &[usize],
    edge_map: &[usize],
    k: usize,
) -> Result<(), CoveringDefect> {
    if vertex_map.len() != cover.vertex_count()
        || edge_map.len() != cover.edge_count()
        || vertex_map.iter().any(|&v| v >= base.vertex_count())
        || edge_map.iter().any(|&e| e >= base.edge_count())
    {
        return Err(CoveringDefect::MalformedMap);
    }
    for (e, &target) in cover.edges().iter().zip(edge_map) {
        if image(e, vertex_map).as_deref() != Some(base.edges()[target].as_slice()) {
            return Err(CoveringDefect::NotHomomorphism);
        }
    }
    let mut vertex_fibers = vec![0usize; base.vertex_count()];
    for &v in vertex_map {
        vertex_fibers[v] += 1;
    }
    let mut edge_fibers = vec![Vec::new(); base.edge_count()];
    for (e, &target) in edge_map.iter().enumerate() {
        edge_fibers[target].push(e);
    }
    if vertex_fibers.contains(&0) || edge_fibers.iter().any(Vec::is_empty) {
        return Err(CoveringDefect::NotSurjective);
    }
    if vertex_fibers.iter().any(|&c| c != k) {
        return Err(CoveringDefect::VertexFiberSize);
    }
    if edge_fibers.iter().any(|f| f.len() != k) {
        return Err(CoveringDefect::EdgeFiberSize);
    }
    for fiber in &edge_fibers {
        for (i, &a) in fiber.iter().enumerate() {
            for &b in &fiber[i + 1..] {
                let (ea, eb) = (&cover.edges()[a], &cover.edges()[b]);
                if ea.iter().any(|v| eb.binary_search(v).is_ok()) {
                    return Err(CoveringDefect::FiberEdgesIntersect);
                }
            }
        }
    }
    Ok(())
}
