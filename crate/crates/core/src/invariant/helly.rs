use alloc::vec::Vec;

use super::{Budget, Meter};
use crate::bits::edge_masks;
use crate::error::Result;
use crate::hypergraph::{Hypergraph, Vertex};

/// Every pairwise-intersecting family of edges has a common vertex.
///
/// It suffices to test the maximal cliques of the edge intersection graph.
pub fn has_helly_property<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<bool> {
    budget.admit(h)?;
    let edges = edge_masks(h)?;
    let m = edges.len();
    let adj: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| i != j && edges[i] & edges[j] != 0).collect())
        .collect();
    let mut meter = budget.meter();
    let mut ok = true;
    maximal_cliques(&adj, &mut meter, &mut |clique| {
        let common = clique.iter().fold(u64::MAX, |acc, &i| acc & edges[i]);
        ok = common != 0;
        ok
    })?;
    Ok(ok)
}

/// Every maximal clique of the 2-section with at least two vertices lies
/// inside some edge.
pub fn is_conformal<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<bool> {
    budget.admit(h)?;
    let edges = edge_masks(h)?;
    let n = h.vertex_count();
    let neighbours = h.neighbours();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            let mut row = alloc::vec![false; n];
            for &j in &neighbours[i] {
                row[j] = true;
            }
            row
        })
        .collect();
    let mut meter = budget.meter();
    let mut ok = true;
    maximal_cliques(&adj, &mut meter, &mut |clique| {
        if clique.len() >= 2 {
            let mask = clique.iter().fold(0u64, |acc, &v| acc | 1 << v);
            ok = edges.iter().any(|&e| e & mask == mask);
        }
        ok
    })?;
    Ok(ok)
}

/// Bron-Kerbosch with pivoting; `visit` returns `false` to stop.
fn maximal_cliques(adj: &[Vec<bool>], meter: &mut Meter, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<()> {
    let n = adj.len();
    let mut clique = Vec::new();
    let p: Vec<usize> = (0..n).collect();
    bron_kerbosch(adj, &mut clique, p, Vec::new(), meter, visit)?;
    Ok(())
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    clique: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    meter: &mut Meter,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool> {
    meter.tick()?;
    if p.is_empty() {
        if x.is_empty() && !clique.is_empty() {
            return Ok(visit(clique));
        }
        return Ok(true);
    }
    let pivot = *p
        .iter()
        .chain(&x)
        .max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count())
        .unwrap();
    let mut p = p;
    let mut x = x;
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in candidates {
        clique.push(v);
        let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
        let go_on = bron_kerbosch(adj, clique, np, nx, meter, visit)?;
        clique.pop();
        if !go_on {
            return Ok(false);
        }
        p.retain(|&u| u != v);
        x.push(v);
    }
    Ok(true)
}
