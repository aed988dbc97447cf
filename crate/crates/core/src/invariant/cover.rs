use alloc::vec::Vec;

use super::{Budget, Meter, Witnessed};
use crate::bits::{edge_masks, full, ones, to_indices};
use crate::error::Result;
use crate::hypergraph::{ExtNat, Hypergraph, Vertex};

/// Largest vertex set containing no edge, with a witness.
pub fn independence_number<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<Witnessed<usize>> {
    budget.admit(h)?;
    let edges = edge_masks(h)?;
    let n = h.vertex_count();
    let mut incident: Vec<Vec<u64>> = alloc::vec![Vec::new(); n];
    for &e in &edges {
        for v in ones(e) {
            incident[v].push(e);
        }
    }
    let mut search = Independent { n, incident: &incident, best: 0, best_set: 0, meter: budget.meter() };
    search.run(0, 0, 0)?;
    Ok(Witnessed { value: search.best, witness: to_indices(search.best_set) })
}

struct Independent<'a> {
    n: usize,
    incident: &'a [Vec<u64>],
    best: usize,
    best_set: u64,
    meter: Meter,
}

impl Independent<'_> {
    fn run(&mut self, v: usize, set: u64, size: usize) -> Result<()> {
        self.meter.tick()?;
        if size + (self.n - v) <= self.best {
            return Ok(());
        }
        if v == self.n {
            self.best = size;
            self.best_set = set;
            return Ok(());
        }
        let with = set | 1 << v;
        if self.incident[v].iter().all(|&e| e & !with != 0) {
            self.run(v + 1, with, size + 1)?;
        }
        self.run(v + 1, set, size)
    }
}

/// Smallest vertex set meeting every edge, with a witness.
pub fn covering_number<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<Witnessed<usize>> {
    budget.admit(h)?;
    let edges = edge_masks(h)?;
    let mut search = Cover {
        edges: &edges,
        best: h.vertex_count() + 1,
        best_set: full(h.vertex_count()),
        meter: budget.meter(),
    };
    search.run(0, 0)?;
    Ok(Witnessed { value: search.best.min(h.vertex_count()), witness: to_indices(search.best_set) })
}

struct Cover<'a> {
    edges: &'a [u64],
    best: usize,
    best_set: u64,
    meter: Meter,
}

impl Cover<'_> {
    /// Lower bound: a greedy family of pairwise disjoint unhit edges.
    fn packing_bound(&self, set: u64) -> usize {
        let mut used = 0u64;
        let mut count = 0;
        for &e in self.edges {
            if e & set == 0 && e & used == 0 {
                used |= e;
                count += 1;
            }
        }
        count
    }

    fn run(&mut self, set: u64, size: usize) -> Result<()> {
        self.meter.tick()?;
        if size + self.packing_bound(set) >= self.best {
            return Ok(());
        }
        let unhit = self
            .edges
            .iter()
            .filter(|&&e| e & set == 0)
            .min_by_key(|e| e.count_ones());
        match unhit {
            None => {
                self.best = size;
                self.best_set = set;
            }
            Some(&e) => {
                for v in ones(e) {
                    self.run(set | 1 << v, size + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// Largest family of pairwise disjoint edges, with edge indices as witness.
pub fn matching_number<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<Witnessed<usize>> {
    budget.admit(h)?;
    let edges = edge_masks(h)?;
    let mut search = Matching { edges: &edges, all: full(h.vertex_count()), best: Vec::new(), meter: budget.meter() };
    let mut current = Vec::new();
    search.run(0, 0, &mut current)?;
    Ok(Witnessed { value: search.best.len(), witness: search.best })
}

struct Matching<'a> {
    edges: &'a [u64],
    all: u64,
    best: Vec<usize>,
    meter: Meter,
}

impl Matching<'_> {
    fn run(&mut self, i: usize, used: u64, current: &mut Vec<usize>) -> Result<()> {
        self.meter.tick()?;
        let available = self.edges[i..].iter().filter(|&&e| e & used == 0).count();
        let free = (self.all & !used).count_ones() as usize;
        let min_size = self.edges[i..]
            .iter()
            .filter(|&&e| e & used == 0)
            .map(|e| e.count_ones() as usize)
            .min()
            .unwrap_or(1);
        if current.len() + available.min(free / min_size) <= self.best.len() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            return Ok(());
        }
        if i == self.edges.len() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            return Ok(());
        }
        let e = self.edges[i];
        if e & used == 0 {
            current.push(i);
            self.run(i + 1, used | e, current)?;
            current.pop();
        }
        self.run(i + 1, used, current)
    }
}

/// Fewest pairwise disjoint edges covering every vertex, or infinity.
pub fn partition_number<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<ExtNat> {
    budget.admit(h)?;
    let edges = edge_masks(h)?;
    let all = full(h.vertex_count());
    let mut by_vertex: Vec<Vec<u64>> = alloc::vec![Vec::new(); h.vertex_count()];
    for &e in &edges {
        for v in ones(e) {
            by_vertex[v].push(e);
        }
    }
    let mut search = Partition { all, by_vertex: &by_vertex, best: None, meter: budget.meter() };
    search.run(0, 0)?;
    Ok(search.best.into())
}

struct Partition<'a> {
    all: u64,
    by_vertex: &'a [Vec<u64>],
    best: Option<usize>,
    meter: Meter,
}

impl Partition<'_> {
    fn run(&mut self, covered: u64, size: usize) -> Result<()> {
        self.meter.tick()?;
        if self.best.is_some_and(|b| size >= b) {
            return Ok(());
        }
        if covered == self.all {
            self.best = Some(size);
            return Ok(());
        }
        let v = (!covered).trailing_zeros() as usize;
        for &e in &self.by_vertex[v] {
            if e & covered == 0 {
                self.run(covered | e, size + 1)?;
            }
        }
        Ok(())
    }
}
