//! Hypergraph products.
//!
//! Every product of `H1` and `H2` lives on the vertex set `V1 x V2`, with
//! vertex `(a, b)` stored at index `i * |V2| + j` where `a`, `b` sit at
//! indices `i`, `j` of their factors.

mod edges;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

pub(crate) use edges::full_projection_subsets;

/// Default cap on `|e1| * |e2|` for the categorial product.
pub const DEFAULT_CATEGORIAL_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProductKind {
    Cartesian,
    DirectR,
    DirectMin,
    DirectMax,
    DirectNr,
    Normal,
    Strong,
    StrongVariant(u8),
    Lex,
    Costrong,
    Square,
    Categorial,
    DirectedCartesian,
    DirectedSquare,
}

impl ProductKind {
    /// All undirected kinds, with the five strong variants.
    pub const UNDIRECTED: [ProductKind; 16] = [
        ProductKind::Cartesian,
        ProductKind::DirectR,
        ProductKind::DirectMin,
        ProductKind::DirectMax,
        ProductKind::DirectNr,
        ProductKind::Normal,
        ProductKind::Strong,
        ProductKind::StrongVariant(1),
        ProductKind::StrongVariant(2),
        ProductKind::StrongVariant(3),
        ProductKind::StrongVariant(4),
        ProductKind::StrongVariant(5),
        ProductKind::Lex,
        ProductKind::Costrong,
        ProductKind::Square,
        ProductKind::Categorial,
    ];

    pub fn tag(self) -> String {
        match self {
            ProductKind::Cartesian => "cartesian".into(),
            ProductKind::DirectR => "direct-r".into(),
            ProductKind::DirectMin => "direct-min".into(),
            ProductKind::DirectMax => "direct-max".into(),
            ProductKind::DirectNr => "direct-nr".into(),
            ProductKind::Normal => "normal".into(),
            ProductKind::Strong => "strong".into(),
            ProductKind::StrongVariant(n) => format!("strong-variant-{n}"),
            ProductKind::Lex => "lex".into(),
            ProductKind::Costrong => "costrong".into(),
            ProductKind::Square => "square".into(),
            ProductKind::Categorial => "categorial".into(),
            ProductKind::DirectedCartesian => "directed-cartesian".into(),
            ProductKind::DirectedSquare => "directed-square".into(),
        }
    }

    pub fn is_directed(self) -> bool {
        matches!(self, ProductKind::DirectedCartesian | ProductKind::DirectedSquare)
    }

    /// The unit: `Some(false)` for `K1`, `Some(true)` for `K1` with a loop,
    /// `None` when the kind has no unit.
    pub fn unit(self) -> Option<bool> {
        match self {
            ProductKind::Cartesian
            | ProductKind::Normal
            | ProductKind::Strong
            | ProductKind::Lex
            | ProductKind::Costrong => Some(false),
            ProductKind::DirectMax | ProductKind::Square | ProductKind::Categorial => Some(true),
            _ => None,
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = match s {
            "cartesian" => ProductKind::Cartesian,
            "direct-r" => ProductKind::DirectR,
            "direct-min" => ProductKind::DirectMin,
            "direct-max" => ProductKind::DirectMax,
            "direct-nr" => ProductKind::DirectNr,
            "normal" => ProductKind::Normal,
            "strong" => ProductKind::Strong,
            "lex" => ProductKind::Lex,
            "costrong" => ProductKind::Costrong,
            "square" => ProductKind::Square,
            "categorial" => ProductKind::Categorial,
            "directed-cartesian" => ProductKind::DirectedCartesian,
            "directed-square" => ProductKind::DirectedSquare,
            other => {
                let n = other
                    .strip_prefix("strong-variant-")
                    .and_then(|n| n.parse::<u8>().ok())
                    .ok_or_else(|| Error::UnknownKind(other.into()))?;
                if !(1..=5).contains(&n) {
                    return Err(Error::UnsupportedVariant(n));
                }
                ProductKind::StrongVariant(n)
            }
        };
        Ok(kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductOptions {
    pub categorial_cap: usize,
}

impl Default for ProductOptions {
    fn default() -> Self {
        ProductOptions { categorial_cap: DEFAULT_CATEGORIAL_CAP }
    }
}

/// A product hypergraph together with its two factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductResult<A, B> {
    pub kind: ProductKind,
    pub hypergraph: Hypergraph<(A, B)>,
    pub left: Hypergraph<A>,
    pub right: Hypergraph<B>,
}

/// Which structure-preservation property a projection satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Contract {
    /// Every edge maps onto an edge.
    Homomorphism,
    /// Every edge maps onto an edge or a single vertex.
    WeakHomomorphism,
    /// Every edge maps into an edge or onto a single vertex.
    AdjacencyPreserving,
    None,
}

/// The image of a product under a coordinate projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    /// Distinct edge images, as index sets of the factor.
    pub images: Vec<Vec<usize>>,
    pub contract: Contract,
}

impl<A: Vertex, B: Vertex> ProductResult<A, B> {
    pub fn arity(&self) -> usize {
        2
    }

    /// Factor indices of a product vertex index.
    pub fn coords(&self, vertex: usize) -> (usize, usize) {
        let n2 = self.right.vertex_count();
        (vertex / n2, vertex % n2)
    }

    /// Image of every product edge under `p_i` (`i` is 1 or 2).
    pub fn projection(&self, i: usize) -> Result<Projection> {
        let mut images: Vec<Vec<usize>> = match i {
            1 | 2 => self
                .hypergraph
                .edges()
                .iter()
                .map(|e| {
                    let mut img: Vec<usize> = e
                        .iter()
                        .map(|&v| {
                            let (a, b) = self.coords(v);
                            if i == 1 { a } else { b }
                        })
                        .collect();
                    img.sort_unstable();
                    img.dedup();
                    img
                })
                .collect(),
            _ => return Err(Error::BadIndex(i)),
        };
        images.sort();
        images.dedup();
        let factor_edges: &[Vec<usize>] = if i == 1 { self.left.edges() } else { self.right.edges() };
        let is_edge = |img: &Vec<usize>| factor_edges.binary_search(img).is_ok();
        let inside_edge = |img: &Vec<usize>| {
            factor_edges
                .iter()
                .any(|e| crate::hypergraph::is_subset(img, e))
        };
        let contract = if images.iter().all(is_edge) {
            Contract::Homomorphism
        } else if images.iter().all(|img| img.len() == 1 || is_edge(img)) {
            Contract::WeakHomomorphism
        } else if images.iter().all(|img| img.len() == 1 || inside_edge(img)) {
            Contract::AdjacencyPreserving
        } else {
            Contract::None
        };
        Ok(Projection { images, contract })
    }

    /// The layer through `w` in direction `j`: vertices agreeing with `w`
    /// in every coordinate except the `j`-th.
    pub fn layer(&self, w: &(A, B), j: usize) -> Result<Hypergraph<(A, B)>> {
        let index = self.hypergraph.require_index(w)?;
        let (a, b) = self.coords(index);
        let (n1, n2) = (self.left.vertex_count(), self.right.vertex_count());
        let subset: Vec<usize> = match j {
            1 => (0..n1).map(|x| x * n2 + b).collect(),
            2 => (0..n2).map(|y| a * n2 + y).collect(),
            _ => return Err(Error::BadIndex(j)),
        };
        Ok(self.hypergraph.induced(&subset))
    }
}

fn product_vertices<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> Vec<(A, B)> {
    let mut out = Vec::with_capacity(h1.vertex_count() * h2.vertex_count());
    for a in h1.vertices() {
        for b in h2.vertices() {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn assemble<A: Vertex, B: Vertex>(
    kind: ProductKind,
    h1: &Hypergraph<A>,
    h2: &Hypergraph<B>,
    edges: Vec<Vec<usize>>,
) -> ProductResult<A, B> {
    ProductResult {
        kind,
        hypergraph: Hypergraph::from_parts(product_vertices(h1, h2), edges),
        left: h1.clone(),
        right: h2.clone(),
    }
}

/// Builds any undirected product.
pub fn product_with<A: Vertex, B: Vertex>(
    kind: ProductKind,
    h1: &Hypergraph<A>,
    h2: &Hypergraph<B>,
    options: &ProductOptions,
) -> Result<ProductResult<A, B>> {
    let (n1, n2) = (h1.vertex_count(), h2.vertex_count());
    let (e1, e2) = (h1.edges(), h2.edges());
    let edges = match kind {
        ProductKind::Cartesian => edges::cartesian(n1, e1, n2, e2),
        ProductKind::DirectR => {
            let r = match (uniform_rank(h1)?, uniform_rank(h2)?) {
                (Some(a), Some(b)) if a != b => return Err(Error::RankMismatch(a, b)),
                (Some(a), Some(_)) => a,
                _ => 0,
            };
            if r == 0 { Vec::new() } else { edges::direct_r(e1, e2, r, n2) }
        }
        ProductKind::DirectMin => edges::direct_min(e1, e2, n2),
        ProductKind::DirectMax => edges::direct_max(e1, e2, n2),
        ProductKind::DirectNr => edges::direct_nr(e1, e2, n2),
        ProductKind::Normal => {
            let mut out = edges::cartesian(n1, e1, n2, e2);
            out.extend(edges::direct_min(e1, e2, n2));
            out
        }
        ProductKind::Strong => {
            let mut out = edges::cartesian(n1, e1, n2, e2);
            out.extend(edges::direct_max(e1, e2, n2));
            out
        }
        ProductKind::StrongVariant(id) => match id {
            1 => {
                let mut out = edges::cartesian(n1, e1, n2, e2);
                out.extend(edges::direct_nr(e1, e2, n2));
                out
            }
            2 => edges::binomial_family(e1, e2, n2, |a, b| alloc::vec![a.min(b)]),
            3 => edges::binomial_family(e1, e2, n2, |a, b| alloc::vec![a.max(b)]),
            4 => edges::binomial_family(e1, e2, n2, |a, b| {
                if a == b { alloc::vec![a] } else { alloc::vec![a, b] }
            }),
            5 => edges::binomial_family(e1, e2, n2, |a, b| (a.min(b)..=a.max(b)).collect()),
            other => return Err(Error::UnsupportedVariant(other)),
        },
        ProductKind::Lex => edges::lex(n1, e1, n2, e2),
        ProductKind::Costrong => {
            let mut out = edges::lex(n1, e1, n2, e2);
            out.extend(edges::lex_transposed(n1, e1, n2, e2));
            out
        }
        ProductKind::Square => edges::square(e1, e2, n2),
        ProductKind::Categorial => edges::categorial(e1, e2, n2, options.categorial_cap)?,
        ProductKind::DirectedCartesian | ProductKind::DirectedSquare => {
            return Err(Error::UnsupportedKind(kind.tag()))
        }
    };
    Ok(assemble(kind, h1, h2, edges))
}

fn uniform_rank<V: Vertex>(h: &Hypergraph<V>) -> Result<Option<usize>> {
    match (h.rank(), h.antirank()) {
        (Some(r), Some(s)) if r == s => Ok(Some(r)),
        (Some(_), Some(_)) => Err(Error::NotUniform),
        _ => Ok(None),
    }
}

fn infallible<A: Vertex, B: Vertex>(kind: ProductKind, h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    match product_with(kind, h1, h2, &ProductOptions::default()) {
        Ok(p) => p,
        Err(e) => unreachable!("{kind} cannot fail: {e}"),
    }
}

/// `H1 □ H2`: edges `{x} x f` and `e x {y}`.
pub fn cartesian<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    infallible(ProductKind::Cartesian, h1, h2)
}

/// Direct product of two `r`-uniform hypergraphs.
pub fn direct_r<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> Result<ProductResult<A, B>> {
    product_with(ProductKind::DirectR, h1, h2, &ProductOptions::default())
}

/// Minimal-rank-preserving direct product.
pub fn direct_min<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    infallible(ProductKind::DirectMin, h1, h2)
}

/// Maximal-rank-preserving direct product.
pub fn direct_max<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    infallible(ProductKind::DirectMax, h1, h2)
}

/// Non-rank-preserving direct product.
pub fn direct_nr<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    infallible(ProductKind::DirectNr, h1, h2)
}

pub fn normal<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    infallible(ProductKind::Normal, h1, h2)
}

pub fn strong<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    infallible(ProductKind::Strong, h1, h2)
}

pub fn strong_variant<A: Vertex, B: Vertex>(
    id: u8,
    h1: &Hypergraph<A>,
    h2: &Hypergraph<B>,
) -> Result<ProductResult<A, B>> {
    product_with(ProductKind::StrongVariant(id), h1, h2, &ProductOptions::default())
}

pub fn lex<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    infallible(ProductKind::Lex, h1, h2)
}

pub fn costrong<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    infallible(ProductKind::Costrong, h1, h2)
}

pub fn square<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> ProductResult<A, B> {
    infallible(ProductKind::Square, h1, h2)
}

pub fn categorial<A: Vertex, B: Vertex>(
    h1: &Hypergraph<A>,
    h2: &Hypergraph<B>,
    cap: usize,
) -> Result<ProductResult<A, B>> {
    product_with(ProductKind::Categorial, h1, h2, &ProductOptions { categorial_cap: cap })
}

/// Swaps the coordinates of every vertex.
pub fn transpose<A: Vertex, B: Vertex>(h: &Hypergraph<(A, B)>) -> Hypergraph<(B, A)> {
    h.map_vertices(|(a, b)| (b.clone(), a.clone()))
        .expect("swapping coordinates is injective")
}

/// Re-brackets `((a, b), c)` as `(a, (b, c))`.
pub fn reassociate<A: Vertex, B: Vertex, C: Vertex>(h: &Hypergraph<((A, B), C)>) -> Hypergraph<(A, (B, C))> {
    h.map_vertices(|((a, b), c)| (a.clone(), (b.clone(), c.clone())))
        .expect("re-bracketing is injective")
}
