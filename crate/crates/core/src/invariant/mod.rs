//! Exact combinatorial invariants.
//!
//! Every search is exhaustive and runs under a [`Budget`]; running out of
//! budget is an error, never an approximate answer.

mod coloring;
mod cover;
mod helly;
mod lp;
mod paths;

use alloc::format;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::hypergraph::{ExtNat, Hypergraph, Vertex};

pub use coloring::{
    chromatic_index, chromatic_number, coloring_discrepancy, discrepancy, strong_chromatic_number, ChromaticIndex,
};
pub use cover::{covering_number, independence_number, matching_number, partition_number};
pub use helly::{has_helly_property, is_conformal};
pub use lp::{fractional_covering_by_vertex_enumeration, fractional_covering_number, FractionalCover};
pub use paths::{hamiltonian, path_partition_number, HamiltonMode};

/// Exact rational numbers.
pub type Rational = Ratio<i128>;

/// Limits for exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_vertices: 40, max_steps: 20_000_000 }
    }
}

impl Budget {
    pub(crate) fn admit<V: Vertex>(&self, h: &Hypergraph<V>) -> Result<()> {
        if h.vertex_count() > self.max_vertices.min(crate::bits::MAX_BITS) {
            return Err(Error::SizeCapExceeded(format!(
                "{} vertices exceed the limit of {}",
                h.vertex_count(),
                self.max_vertices.min(crate::bits::MAX_BITS)
            )));
        }
        Ok(())
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter { left: self.max_steps }
    }
}

/// Step counter shared by one search.
pub(crate) struct Meter {
    left: u64,
}

impl Meter {
    pub(crate) fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::SizeCapExceeded("search step budget exhausted".into()));
        }
        self.left -= 1;
        Ok(())
    }
}

/// A value together with a certificate (a vertex or edge index set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witnessed<T> {
    pub value: T,
    pub witness: alloc::vec::Vec<usize>,
}

/// Every invariant of one hypergraph; `None` marks a value that could not
/// be computed within budget or does not apply (for example `chi` on a
/// hypergraph with loops).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InvariantReport {
    pub beta: Option<usize>,
    pub tau: Option<usize>,
    pub tau_star: Option<Rational>,
    pub nu: Option<usize>,
    pub rho: Option<ExtNat>,
    pub chi: Option<usize>,
    pub chi_strong: Option<usize>,
    pub chi_index: Option<usize>,
    pub has_colored_hyperedge_property: Option<bool>,
    pub helly: Option<bool>,
    pub conformal: Option<bool>,
    pub path_partition: Option<usize>,
    pub ham_path: Option<bool>,
    pub ham_cycle: Option<bool>,
}

impl InvariantReport {
    pub fn compute<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Self {
        let index = chromatic_index(h, budget).ok();
        InvariantReport {
            beta: independence_number(h, budget).ok().map(|w| w.value),
            tau: covering_number(h, budget).ok().map(|w| w.value),
            tau_star: fractional_covering_number(h, budget).ok().map(|f| f.value),
            nu: matching_number(h, budget).ok().map(|w| w.value),
            rho: partition_number(h, budget).ok(),
            chi: chromatic_number(h, budget).ok(),
            chi_strong: strong_chromatic_number(h, budget).ok(),
            chi_index: index.map(|i| i.q),
            has_colored_hyperedge_property: index.map(|i| i.colored_hyperedge_property),
            helly: has_helly_property(h, budget).ok(),
            conformal: is_conformal(h, budget).ok(),
            path_partition: path_partition_number(h, budget).ok(),
            ham_path: hamiltonian(h, HamiltonMode::Path, budget).ok().map(|w| w.is_some()),
            ham_cycle: hamiltonian(h, HamiltonMode::Cycle, budget).ok().map(|w| w.is_some()),
        }
    }
}

#[cfg(test)]
mod tests;
