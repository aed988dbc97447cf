//! Hypergraph algebra: products, 2-sections and L2-sections, Cartesian
//! prime factor decomposition, and exact combinatorial invariants.
//!
//! The crate is `no_std` and only needs `alloc`. Every value is immutable
//! once built and every operation is a pure function, so all types are
//! `Send + Sync` whenever the vertex type is.
//!
//! Vertices are opaque ordered values. A [`Hypergraph`] keeps its vertices
//! sorted and its edges as sorted index lists in lexicographic order, so two
//! hypergraphs compare equal exactly when their vertex and edge sets agree.
//! Products label vertices with coordinate pairs `(a, b)`.
//!
//! ```
//! use hyperprod_core::{Hypergraph, product};
//!
//! let k2 = Hypergraph::new([0, 1], [vec![0, 1]]).unwrap();
//! let c4 = product::cartesian(&k2, &k2);
//! assert_eq!(c4.hypergraph.vertex_count(), 4);
//! assert_eq!(c4.hypergraph.edge_count(), 4);
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod bits;
pub mod covering;
pub mod directed;
mod error;
pub mod factor;
mod hypergraph;
pub mod invariant;
pub mod iso;
pub mod product;
pub mod section;
pub mod walk;

pub use error::{Error, Result};
pub use hypergraph::{ExtNat, Hypergraph, RankProfile, Tagged, Vertex};
