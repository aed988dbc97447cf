use std::collections::BTreeMap;

use hyperprod_core::iso::is_isomorphic;
use hyperprod_core::Hypergraph;

/// Isomorphism-class representatives, deduplicated through a cheap
/// invariant before the exact test.
#[derive(Default)]
struct Classes {
    buckets: BTreeMap<(usize, Vec<usize>, Vec<usize>), Vec<usize>>,
    members: Vec<Hypergraph<usize>>,
}

impl Classes {
    fn insert(&mut self, h: Hypergraph<usize>) {
        let mut sizes: Vec<usize> = h.edges().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        let mut degrees: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
        degrees.sort_unstable();
        let bucket = self.buckets.entry((h.vertex_count(), sizes, degrees)).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&self.members[i], &h)) {
            return;
        }
        bucket.push(self.members.len());
        self.members.push(h);
    }
}

fn subsets_of(n: usize, min_size: usize) -> Vec<Vec<usize>> {
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|s| s.len() >= min_size)
        .collect()
}

fn enumerate(max_n: usize, min_edge: usize, keep: impl Fn(&Hypergraph<usize>) -> bool) -> Vec<Hypergraph<usize>> {
    let mut classes = Classes::default();
    for n in 1..=max_n {
        let pool = subsets_of(n, min_edge);
        for choice in 0u64..1 << pool.len() {
            let edges = (0..pool.len()).filter(|&i| choice & (1 << i) != 0).map(|i| pool[i].clone());
            let h = Hypergraph::new(0..n, edges).expect("valid subsets");
            if keep(&h) {
                classes.insert(h);
            }
        }
    }
    classes.members
}

/// Every hypergraph on 1 to `max_n` vertices (loops allowed), one per
/// isomorphism class. `max_n` above 3 is rejected as too large.
pub fn all_hypergraphs(max_n: usize) -> Vec<Hypergraph<usize>> {
    assert!(max_n <= 3, "the full corpus is only enumerated up to 3 vertices");
    enumerate(max_n, 1, |_| true)
}

/// Every simple hypergraph on 1 to `max_n` vertices, one per isomorphism
/// class. `max_n` above 4 is rejected as too large.
pub fn simple_hypergraphs(max_n: usize) -> Vec<Hypergraph<usize>> {
    assert!(max_n <= 4, "the simple corpus is only enumerated up to 4 vertices");
    enumerate(max_n, 2, Hypergraph::is_simple)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        // 1 vertex: K1 and its looped version; 2 vertices: six classes.
        assert_eq!(all_hypergraphs(1).len(), 2);
        assert_eq!(all_hypergraphs(2).len(), 8);
        // Simple graphs and hypergraphs on up to 3 vertices.
        let simple3 = simple_hypergraphs(3);
        assert!(simple3.iter().all(Hypergraph::is_simple));
        let simple4 = simple_hypergraphs(4);
        assert!(simple4.len() > simple3.len());
    }
}
