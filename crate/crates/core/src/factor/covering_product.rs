use alloc::format;

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::product::{product_with, ProductKind, ProductOptions};

/// A covering of `base` by `cover`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringPair<C: Vertex, B: Vertex> {
    pub cover: Hypergraph<C>,
    pub base: Hypergraph<B>,
    pub covering: Covering,
}

/// Product of two coverings under the Cartesian or square product, with
/// projection `(x, y) -> (pi1(x), pi2(y))`.
pub fn covering_product<C1, B1, C2, B2>(
    first: &CoveringPair<C1, B1>,
    second: &CoveringPair<C2, B2>,
    kind: ProductKind,
) -> Result<CoveringPair<(C1, C2), (B1, B2)>>
where
    C1: Vertex,
    B1: Vertex,
    C2: Vertex,
    B2: Vertex,
{
    if !matches!(kind, ProductKind::Cartesian | ProductKind::Square) {
        return Err(Error::UnsupportedKind(kind.tag()));
    }
    for (i, defect) in [
        first.covering.verify(&first.cover, &first.base),
        second.covering.verify(&second.cover, &second.base),
    ]
    .into_iter()
    .enumerate()
    {
        if let Err(d) = defect {
            return Err(Error::InvalidCovering(format!("input {}: {d:?}", i + 1)));
        }
    }
    let opts = ProductOptions::default();
    let cover = product_with(kind, &first.cover, &second.cover, &opts)?.hypergraph;
    let base = product_with(kind, &first.base, &second.base, &opts)?.hypergraph;
    let (n2, m2) = (second.cover.vertex_count(), second.base.vertex_count());
    let vertex_map = (0..cover.vertex_count())
        .map(|v| first.covering.vertex_map[v / n2] * m2 + second.covering.vertex_map[v % n2])
        .collect();
    let k = first.covering.k * second.covering.k;
    let covering = Covering::induced(&cover, &base, vertex_map, k)
        .ok_or_else(|| Error::InvalidCovering("product projection is not a homomorphism".into()))?;
    Ok(CoveringPair { cover, base, covering })
}
