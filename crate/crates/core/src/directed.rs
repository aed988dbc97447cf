//! Directed hypergraphs and their Cartesian and square products.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::Vertex;

/// A hyperarc as sorted vertex-index lists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: Vec<usize>,
    pub head: Vec<usize>,
}

/// A finite directed hypergraph without repeated arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedHypergraph<V> {
    vertices: Vec<V>,
    arcs: Vec<Arc>,
}

impl<V: Vertex> DirectedHypergraph<V> {
    /// Builds from vertex labels and `(tail, head)` label sets.
    pub fn new<I, A, S>(vertices: I, arcs: A) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        A: IntoIterator<Item = (S, S)>,
        S: IntoIterator<Item = V>,
    {
        let mut vs: Vec<V> = vertices.into_iter().collect();
        vs.sort();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(format!("{:?}", w[0])));
        }
        let resolve = |side: S| -> Result<Vec<usize>> {
            let mut idx = Vec::new();
            for v in side {
                match vs.binary_search(&v) {
                    Ok(i) => idx.push(i),
                    Err(_) => return Err(Error::UnknownVertex(format!("{v:?}"))),
                }
            }
            if idx.is_empty() {
                return Err(Error::EmptyEdge);
            }
            Ok(idx)
        };
        let mut index_arcs = Vec::new();
        for (t, h) in arcs {
            index_arcs.push(Arc { tail: resolve(t)?, head: resolve(h)? });
        }
        Ok(Self::from_parts(vs, index_arcs))
    }

    pub(crate) fn from_parts(vertices: Vec<V>, arcs: Vec<Arc>) -> Self {
        let mut arcs: Vec<Arc> = arcs
            .into_iter()
            .map(|mut a| {
                a.tail.sort_unstable();
                a.tail.dedup();
                a.head.sort_unstable();
                a.head.dedup();
                a
            })
            .collect();
        arcs.sort();
        arcs.dedup();
        DirectedHypergraph { vertices, arcs }
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs as `(tail, head)` label sets.
    pub fn arc_sets(&self) -> impl Iterator<Item = (Vec<V>, Vec<V>)> + '_ {
        let label = |side: &[usize]| side.iter().map(|&i| self.vertices[i].clone()).collect();
        self.arcs.iter().map(move |a| (label(&a.tail), label(&a.head)))
    }
}

fn product_vertices<A: Vertex, B: Vertex>(
    d1: &DirectedHypergraph<A>,
    d2: &DirectedHypergraph<B>,
) -> Vec<(A, B)> {
    let mut out = Vec::with_capacity(d1.vertex_count() * d2.vertex_count());
    for a in &d1.vertices {
        for b in &d2.vertices {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn cross(xs: &[usize], ys: &[usize], n2: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for &x in xs {
        for &y in ys {
            out.push(x * n2 + y);
        }
    }
    out
}

/// Arcs `({x} x t(f), {x} x h(f))` and `(t(e) x {y}, h(e) x {y})`.
pub fn directed_cartesian<A: Vertex, B: Vertex>(
    d1: &DirectedHypergraph<A>,
    d2: &DirectedHypergraph<B>,
) -> DirectedHypergraph<(A, B)> {
    let n2 = d2.vertex_count();
    let mut arcs = Vec::new();
    for x in 0..d1.vertex_count() {
        for f in &d2.arcs {
            arcs.push(Arc { tail: cross(&[x], &f.tail, n2), head: cross(&[x], &f.head, n2) });
        }
    }
    for e in &d1.arcs {
        for y in 0..n2 {
            arcs.push(Arc { tail: cross(&e.tail, &[y], n2), head: cross(&e.head, &[y], n2) });
        }
    }
    DirectedHypergraph::from_parts(product_vertices(d1, d2), arcs)
}

/// Arcs `(t(e) x t(f), h(e) x h(f))`.
pub fn directed_square<A: Vertex, B: Vertex>(
    d1: &DirectedHypergraph<A>,
    d2: &DirectedHypergraph<B>,
) -> DirectedHypergraph<(A, B)> {
    let n2 = d2.vertex_count();
    let mut arcs = Vec::new();
    for e in &d1.arcs {
        for f in &d2.arcs {
            arcs.push(Arc { tail: cross(&e.tail, &f.tail, n2), head: cross(&e.head, &f.head, n2) });
        }
    }
    DirectedHypergraph::from_parts(product_vertices(d1, d2), arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn arc(a: char, b: char) -> DirectedHypergraph<char> {
        DirectedHypergraph::new([a, b], [(vec![a], vec![b])]).unwrap()
    }

    #[test]
    fn products_of_single_arcs() {
        let d1 = arc('a', 'b');
        let d2 = arc('x', 'y');
        assert_eq!(directed_cartesian(&d1, &d2).arc_count(), 4);
        let sq = directed_square(&d1, &d2);
        let arcs: Vec<_> = sq.arc_sets().collect();
        assert_eq!(arcs, vec![(vec![('a', 'x')], vec![('b', 'y')])]);
    }

    #[test]
    fn looped_single_vertex_is_a_square_unit() {
        let d = DirectedHypergraph::new(
            [0, 1, 2],
            [(vec![0], vec![1, 2]), (vec![1, 2], vec![0, 2])],
        )
        .unwrap();
        let unit = DirectedHypergraph::new(['u'], [(vec!['u'], vec!['u'])]).unwrap();
        let sq = directed_square(&d, &unit);
        let back: Vec<_> = sq
            .arc_sets()
            .map(|(t, h)| (t.into_iter().map(|p| p.0).collect(), h.into_iter().map(|p| p.0).collect()))
            .collect();
        let orig: Vec<(Vec<i32>, Vec<i32>)> = d.arc_sets().collect();
        assert_eq!(back, orig);
    }

    #[test]
    fn rejects_empty_sides() {
        assert_eq!(
            DirectedHypergraph::new([0], [(vec![], vec![0])]),
            Err(Error::EmptyEdge)
        );
    }
}
