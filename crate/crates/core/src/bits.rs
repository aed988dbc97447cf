use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

pub(crate) const MAX_BITS: usize = 64;

pub(crate) fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, &i| m | (1u64 << i))
}

pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub(crate) fn to_indices(mask: u64) -> Vec<usize> {
    ones(mask).collect()
}

pub(crate) fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Edge bitmasks, failing when the vertex set does not fit in a word.
pub(crate) fn edge_masks<V: Vertex>(h: &Hypergraph<V>) -> Result<Vec<u64>> {
    if h.vertex_count() > MAX_BITS {
        return Err(Error::SizeCapExceeded(format!(
            "{} vertices exceed the {MAX_BITS}-vertex bitset limit",
            h.vertex_count()
        )));
    }
    Ok(h.edges().iter().map(|e| mask_of(e)).collect())
}
