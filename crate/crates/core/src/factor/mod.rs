//! Prime factor decomposition.
//!
//! [`factor_cartesian`] runs the L2-section pipeline for the Cartesian
//! product; [`factor_oracle`] is an exhaustive search usable for every
//! product kind with a unit, and backs [`is_prime`].

mod cartesian;
mod covering_product;
mod oracle;

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::hypergraph::{Hypergraph, Vertex};
use crate::product::{product_with, ProductKind, ProductOptions};

pub use cartesian::{factor_cartesian, graph_factor_classes, DEFAULT_PIPELINE_CAP};
pub use covering_product::{covering_product, CoveringPair};
pub use oracle::{factor_oracle, is_prime, OracleOptions, DEFAULT_ORACLE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Pipeline,
    Oracle,
}

/// How the factors are bracketed; leaves index into the factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorTree {
    Leaf(usize),
    Node(Box<FactorTree>, Box<FactorTree>),
}

impl FactorTree {
    /// `((0 * 1) * 2) * ...` over `k` factors.
    pub fn left_comb(k: usize) -> Option<Self> {
        let mut tree = None;
        for i in 0..k {
            tree = Some(match tree {
                None => FactorTree::Leaf(i),
                Some(t) => FactorTree::Node(Box::new(t), Box::new(FactorTree::Leaf(i))),
            });
        }
        tree
    }

    fn shifted(&self, by: usize) -> Self {
        match self {
            FactorTree::Leaf(i) => FactorTree::Leaf(i + by),
            FactorTree::Node(l, r) => FactorTree::Node(Box::new(l.shifted(by)), Box::new(r.shifted(by))),
        }
    }
}

/// Prime factors of a hypergraph plus a coordinatization of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    pub kind: ProductKind,
    pub method: Method,
    /// Prime factors on vertex sets `0..n_i`.
    pub factors: Vec<Hypergraph<usize>>,
    /// Bracketing of the factors; `None` for a single vertex (no factors).
    pub tree: Option<FactorTree>,
    /// `coordinates[v][i]` is the vertex of factor `i` that input vertex
    /// `v` (by index) projects to.
    pub coordinates: Vec<Vec<usize>>,
    /// Number of distinct factorizations found (always 1 for the pipeline).
    pub distinct_factorizations: usize,
    /// Factor count of each distinct factorization found.
    pub factorization_lengths: Vec<usize>,
}

impl FactorizationResult {
    /// Multiplies the factors back together on coordinate-tuple vertices.
    pub fn rebuild(&self) -> Result<Hypergraph<Vec<usize>>> {
        match &self.tree {
            None => Ok(Hypergraph::from_parts(vec![Vec::new()], Vec::new())),
            Some(t) => self.rebuild_tree(t),
        }
    }

    fn rebuild_tree(&self, t: &FactorTree) -> Result<Hypergraph<Vec<usize>>> {
        match t {
            FactorTree::Leaf(i) => self.factors[*i].map_vertices(|&v| vec![v]),
            FactorTree::Node(l, r) => {
                let a = self.rebuild_tree(l)?;
                let b = self.rebuild_tree(r)?;
                let p = product_with(self.kind, &a, &b, &ProductOptions::default())?;
                p.hypergraph.map_vertices(|(x, y)| {
                    let mut v = x.clone();
                    v.extend_from_slice(y);
                    v
                })
            }
        }
    }

    /// Whether relabelling `h` by the coordinatization gives exactly the
    /// product of the factors.
    pub fn reproduces<V: Vertex>(&self, h: &Hypergraph<V>) -> bool {
        if self.coordinates.len() != h.vertex_count() {
            return false;
        }
        let Ok(rebuilt) = self.rebuild() else { return false };
        match h.map_vertices(|v| {
            let i = h.index_of(v).expect("vertex of h");
            self.coordinates[i].clone()
        }) {
            Ok(relabelled) => relabelled == rebuilt,
            Err(_) => false,
        }
    }
}

pub(crate) fn merge_trees(left: &FactorTree, left_len: usize, right: &FactorTree) -> FactorTree {
    FactorTree::Node(Box::new(left.clone()), Box::new(right.shifted(left_len)))
}

/// Relabels vertices to their indices.
pub(crate) fn indexed<V: Vertex>(h: &Hypergraph<V>) -> Hypergraph<usize> {
    Hypergraph::from_parts((0..h.vertex_count()).collect(), h.edges().to_vec())
}

#[cfg(test)]
mod tests;
