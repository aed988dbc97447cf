use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{Budget, Meter, Rational};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

/// Chromatic number: fewest colours with no monochromatic edge.
/// Loops make every colouring improper, so they are rejected.
pub fn chromatic_number<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<usize> {
    budget.admit(h)?;
    if h.has_loops() {
        return Err(Error::LoopsPresent);
    }
    let n = h.vertex_count();
    // Edges indexed by their largest vertex: checked once fully coloured.
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in h.edges() {
        closing[*e.last().unwrap()].push(e);
    }
    let mut meter = budget.meter();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        if color_vertices(0, 0, k, &mut colors, &mut meter, &|v, colors| {
            closing[v].iter().all(|e| e.iter().any(|&u| colors[u] != colors[v]))
        })? {
            return Ok(k);
        }
    }
    Ok(0)
}

/// Strong chromatic number: vertices sharing an edge get distinct colours.
pub fn strong_chromatic_number<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<usize> {
    budget.admit(h)?;
    let adj = h.neighbours();
    graph_chromatic_number(&adj, budget)
}

fn graph_chromatic_number(adj: &[Vec<usize>], budget: &Budget) -> Result<usize> {
    let n = adj.len();
    let mut meter = budget.meter();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        if color_vertices(0, 0, k, &mut colors, &mut meter, &|v, colors| {
            adj[v].iter().all(|&u| u > v || colors[u] != colors[v])
        })? {
            return Ok(k);
        }
    }
    Ok(0)
}

/// Backtracking over restricted-growth colourings of `v..`.
fn color_vertices(
    v: usize,
    used: usize,
    k: usize,
    colors: &mut [usize],
    meter: &mut Meter,
    ok: &dyn Fn(usize, &[usize]) -> bool,
) -> Result<bool> {
    meter.tick()?;
    if v == colors.len() {
        return Ok(true);
    }
    for c in 0..(used + 1).min(k) {
        colors[v] = c;
        if ok(v, colors) && color_vertices(v + 1, used.max(c + 1), k, colors, meter, ok)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub q: usize,
    pub max_degree: usize,
    pub colored_hyperedge_property: bool,
}

/// Chromatic index: fewest edge colours with intersecting edges distinct.
pub fn chromatic_index<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<ChromaticIndex> {
    budget.admit(h)?;
    let m = h.edge_count();
    if m > budget.max_vertices * 4 {
        return Err(Error::SizeCapExceeded("too many edges for edge colouring".into()));
    }
    let edges = h.edges();
    let adj: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && edges[i].iter().any(|v| edges[j].binary_search(v).is_ok()))
                .collect()
        })
        .collect();
    let q = graph_chromatic_number(&adj, budget)?;
    let max_degree = h.max_degree();
    Ok(ChromaticIndex { q, max_degree, colored_hyperedge_property: q == max_degree })
}

/// `max_e max_i | |c^-1(i) ∩ e| - |e|/k |` for a given colouring.
pub fn coloring_discrepancy<V: Vertex>(h: &Hypergraph<V>, coloring: &[usize], k: usize) -> Rational {
    let mut worst = Rational::zero();
    for e in h.edges() {
        let share = Rational::new(e.len() as i128, k as i128);
        for i in 0..k {
            let count = e.iter().filter(|&&v| coloring[v] == i).count();
            let dev = (Rational::from(count as i128) - share).abs();
            if dev > worst {
                worst = dev;
            }
        }
    }
    worst
}

/// `disc(H, k)`: the smallest colouring discrepancy over all `k`-colourings.
pub fn discrepancy<V: Vertex>(h: &Hypergraph<V>, k: usize, budget: &Budget) -> Result<Rational> {
    budget.admit(h)?;
    if k == 0 {
        return Err(Error::BadIndex(0));
    }
    let n = h.vertex_count();
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            touching[v].push(j);
        }
    }
    let mut search = Disc {
        h_edges: h.edges(),
        k,
        touching: &touching,
        counts: vec![vec![0usize; k]; h.edge_count()],
        colored: vec![0usize; h.edge_count()],
        best: None,
        meter: budget.meter(),
    };
    search.run(0, 0)?;
    Ok(search.best.unwrap_or_else(Rational::zero))
}

struct Disc<'a> {
    h_edges: &'a [Vec<usize>],
    k: usize,
    touching: &'a [Vec<usize>],
    counts: Vec<Vec<usize>>,
    colored: Vec<usize>,
    best: Option<Rational>,
    meter: Meter,
}

impl Disc<'_> {
    /// Deviation already forced by the partial colouring of edge `j`.
    fn forced(&self, j: usize) -> Rational {
        let size = self.h_edges[j].len();
        let share = Rational::new(size as i128, self.k as i128);
        let left = (size - self.colored[j]) as i128;
        let mut worst = Rational::zero();
        for &c in &self.counts[j] {
            let over = Rational::from(c as i128) - share;
            let under = share - Rational::from(c as i128 + left);
            for d in [over, under] {
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    fn run(&mut self, v: usize, used: usize) -> Result<()> {
        self.meter.tick()?;
        if self.best.is_some_and(|b| b.is_zero()) {
            return Ok(());
        }
        if v == self.touching.len() {
            let value = (0..self.h_edges.len()).map(|j| self.forced(j)).max().unwrap_or_else(Rational::zero);
            if self.best.map_or(true, |b| value < b) {
                self.best = Some(value);
            }
            return Ok(());
        }
        let touching = self.touching;
        for c in 0..(used + 1).min(self.k) {
            for &j in &touching[v] {
                self.counts[j][c] += 1;
                self.colored[j] += 1;
            }
            let bound = touching[v].iter().map(|&j| self.forced(j)).max();
            if self.best.map_or(true, |b| bound.map_or(true, |x| x < b)) {
                self.run(v + 1, used.max(c + 1))?;
            }
            for &j in &touching[v] {
                self.counts[j][c] -= 1;
                self.colored[j] -= 1;
            }
        }
        Ok(())
    }
}
