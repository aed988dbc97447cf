use alloc::vec;
use alloc::vec::Vec;

use super::{Budget, Meter};
use crate::error::Result;
use crate::hypergraph::{Hypergraph, Vertex};
use crate::walk::Walk;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonMode {
    /// A 1-path through every vertex.
    Path,
    /// A cycle through every vertex.
    Cycle,
    /// A `p`-path through every vertex.
    PPath(usize),
}

/// Searches for a Hamiltonian path, cycle or `p`-path and returns one.
pub fn hamiltonian<V: Vertex>(h: &Hypergraph<V>, mode: HamiltonMode, budget: &Budget) -> Result<Option<Walk>> {
    budget.admit(h)?;
    let n = h.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    let (p, cycle) = match mode {
        HamiltonMode::Path => (1, false),
        HamiltonMode::Cycle => (1, true),
        HamiltonMode::PPath(p) => (p.max(1), false),
    };
    if cycle && n < 2 {
        return Ok(None);
    }
    let mut search = Hamilton {
        edges: h.edges(),
        incident: h.incidence(),
        p,
        cycle,
        visited: vec![false; n],
        used: vec![false; h.edge_count()],
        walk: Walk { vertices: Vec::new(), edges: Vec::new() },
        meter: budget.meter(),
    };
    let starts = if cycle { 1 } else { n };
    for s in 0..starts {
        search.visited[s] = true;
        search.walk.vertices.push(s);
        if search.extend(0)? {
            return Ok(Some(search.walk));
        }
        search.walk.vertices.pop();
        search.visited[s] = false;
    }
    Ok(None)
}

struct Hamilton<'a> {
    edges: &'a [Vec<usize>],
    incident: Vec<Vec<usize>>,
    p: usize,
    cycle: bool,
    visited: Vec<bool>,
    used: Vec<bool>,
    walk: Walk,
    meter: Meter,
}

impl Hamilton<'_> {
    fn extend(&mut self, run: usize) -> Result<bool> {
        self.meter.tick()?;
        let current = *self.walk.vertices.last().unwrap();
        if self.walk.vertices.len() == self.visited.len() {
            if !self.cycle {
                return Ok(true);
            }
            let start = self.walk.vertices[0];
            let closing = self.incident[current]
                .iter()
                .copied()
                .find(|&f| !self.used[f] && self.edges[f].binary_search(&start).is_ok());
            if let Some(f) = closing {
                self.walk.edges.push(f);
                return Ok(true);
            }
            return Ok(false);
        }
        let last = self.walk.edges.last().copied();
        let mut options: Vec<(usize, usize)> = Vec::new();
        if let Some(f) = last {
            if run < self.p {
                options.push((f, run + 1));
            }
        }
        for &f in &self.incident[current] {
            if !self.used[f] {
                options.push((f, 1));
            }
        }
        for (f, next_run) in options {
            let fresh = !self.used[f];
            self.used[f] = true;
            self.walk.edges.push(f);
            for i in 0..self.edges[f].len() {
                let w = self.edges[f][i];
                if self.visited[w] {
                    continue;
                }
                self.visited[w] = true;
                self.walk.vertices.push(w);
                if self.extend(next_run)? {
                    return Ok(true);
                }
                self.walk.vertices.pop();
                self.visited[w] = false;
            }
            self.walk.edges.pop();
            if fresh {
                self.used[f] = false;
            }
        }
        Ok(false)
    }
}

/// The fewest vertex- and edge-disjoint paths covering every vertex.
pub fn path_partition_number<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<usize> {
    budget.admit(h)?;
    let n = h.vertex_count();
    let mut search = Partition {
        edges: h.edges(),
        incident: h.incidence(),
        covered: vec![false; n],
        used: vec![false; h.edge_count()],
        best: n,
        meter: budget.meter(),
    };
    search.run(0, n)?;
    Ok(search.best)
}

struct Partition<'a> {
    edges: &'a [Vec<usize>],
    incident: Vec<Vec<usize>>,
    covered: Vec<bool>,
    used: Vec<bool>,
    best: usize,
    meter: Meter,
}

impl Partition<'_> {
    fn run(&mut self, paths: usize, uncovered: usize) -> Result<()> {
        self.meter.tick()?;
        if uncovered == 0 {
            self.best = self.best.min(paths);
            return Ok(());
        }
        if paths + 1 >= self.best {
            return Ok(());
        }
        let v = self.covered.iter().position(|c| !c).unwrap();
        self.covered[v] = true;
        self.forward(v, v, paths, uncovered - 1)?;
        self.covered[v] = false;
        Ok(())
    }

    /// Grows the path forward from `end`; at every stage also tries every
    /// backward extension from `start`.
    fn forward(&mut self, start: usize, end: usize, paths: usize, uncovered: usize) -> Result<()> {
        self.backward(start, paths, uncovered)?;
        for k in 0..self.incident[end].len() {
            let f = self.incident[end][k];
            if self.used[f] {
                continue;
            }
            self.used[f] = true;
            for i in 0..self.edges[f].len() {
                let w = self.edges[f][i];
                if !self.covered[w] {
                    self.covered[w] = true;
                    self.forward(start, w, paths, uncovered - 1)?;
                    self.covered[w] = false;
                }
            }
            self.used[f] = false;
        }
        Ok(())
    }

    fn backward(&mut self, start: usize, paths: usize, uncovered: usize) -> Result<()> {
        self.run(paths + 1, uncovered)?;
        for k in 0..self.incident[start].len() {
            let f = self.incident[start][k];
            if self.used[f] {
                continue;
            }
            self.used[f] = true;
            for i in 0..self.edges[f].len() {
                let w = self.edges[f][i];
                if !self.covered[w] {
                    self.covered[w] = true;
                    self.backward(w, paths, uncovered - 1)?;
                    self.covered[w] = false;
                }
            }
            self.used[f] = false;
        }
        Ok(())
    }
}
