use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Budget, Rational};
use crate::error::{Error, Result};
use crate::hypergraph::{for_each_combination, Hypergraph, Vertex};

/// An optimal fractional cover and its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalCover {
    pub value: Rational,
    /// Weight of each vertex, by index.
    pub weights: Vec<Rational>,
}

/// `tau*` by exact simplex on the dual packing problem
/// `max sum(y) s.t. sum_{e ∋ v} y_e <= 1`; the optimal dual prices are an
/// optimal fractional cover, which is checked before it is returned.
pub fn fractional_covering_number<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<FractionalCover> {
    budget.admit(h)?;
    let n = h.vertex_count();
    let m = h.edge_count();
    let width = m + n;
    let zero = Rational::zero();
    let one = Rational::one();
    let mut rows: Vec<Vec<Rational>> = vec![vec![zero; width + 1]; n];
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            rows[v][j] = one;
        }
    }
    for (i, row) in rows.iter_mut().enumerate() {
        row[m + i] = one;
        row[width] = one;
    }
    let mut objective = vec![zero; width + 1];
    for c in objective.iter_mut().take(m) {
        *c = -one;
    }
    let mut basis: Vec<usize> = (m..width).collect();
    let mut meter = budget.meter();
    loop {
        meter.tick()?;
        let Some(enter) = (0..width).find(|&j| objective[j] < zero) else { break };
        let mut leave: Option<usize> = None;
        for i in 0..n {
            if rows[i][enter] > zero {
                let ratio = rows[i][width] / rows[i][enter];
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let best = rows[l][width] / rows[l][enter];
                        ratio < best || (ratio == best && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let Some(r) = leave else {
            return Err(Error::SizeCapExceeded("packing program unbounded".into()));
        };
        let pivot = rows[r][enter];
        for x in rows[r].iter_mut() {
            *x /= pivot;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        let f = objective[enter];
        for (x, p) in objective.iter_mut().zip(&pivot_row) {
            *x -= f * p;
        }
        basis[r] = enter;
    }
    let value = objective[width];
    let weights: Vec<Rational> = (0..n).map(|i| objective[m + i]).collect();
    let total: Rational = weights.iter().copied().fold(zero, |a, b| a + b);
    let feasible = weights.iter().all(|w| *w >= zero)
        && h.edges().iter().all(|e| e.iter().map(|&v| weights[v]).fold(zero, |a, b| a + b) >= one);
    if !feasible || total != value {
        return Err(Error::SizeCapExceeded("simplex certificate failed verification".into()));
    }
    Ok(FractionalCover { value, weights })
}

/// `tau*` by enumerating every basic point of the covering polyhedron.
/// Exponential; meant for cross-checking small instances.
pub fn fractional_covering_by_vertex_enumeration<V: Vertex>(h: &Hypergraph<V>, budget: &Budget) -> Result<Rational> {
    budget.admit(h)?;
    let n = h.vertex_count();
    let zero = Rational::zero();
    let one = Rational::one();
    let mut constraints: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for e in h.edges() {
        let mut row = vec![zero; n];
        for &v in e {
            row[v] = one;
        }
        constraints.push((row, one));
    }
    for v in 0..n {
        let mut row = vec![zero; n];
        row[v] = one;
        constraints.push((row, zero));
    }
    let mut meter = budget.meter();
    let mut best: Option<Rational> = None;
    let mut failure = None;
    for_each_combination(constraints.len(), n, |pick| {
        if failure.is_some() {
            return;
        }
        if let Err(e) = meter.tick() {
            failure = Some(e);
            return;
        }
        let system: Vec<(Vec<Rational>, Rational)> = pick.iter().map(|&i| constraints[i].clone()).collect();
        let Some(point) = solve(system) else { return };
        let feasible = constraints
            .iter()
            .all(|(row, rhs)| row.iter().zip(&point).fold(zero, |a, (c, x)| a + c * x) >= *rhs);
        if feasible {
            let value = point.iter().copied().fold(zero, |a, b| a + b);
            if best.map_or(true, |b| value < b) {
                best = Some(value);
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(best.unwrap_or(zero))
}

/// Solves a square system exactly; `None` when singular.
fn solve(mut system: Vec<(Vec<Rational>, Rational)>) -> Option<Vec<Rational>> {
    let n = system.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !system[r].0[col].is_zero())?;
        system.swap(col, pivot);
        let p = system[col].0[col];
        for x in system[col].0.iter_mut() {
            *x /= p;
        }
        system[col].1 /= p;
        let (prow, prhs) = system[col].clone();
        for (r, (row, rhs)) in system.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, q) in row.iter_mut().zip(&prow) {
                    *x -= f * q;
                }
                *rhs -= f * prhs;
            }
        }
    }
    Some(system.into_iter().map(|(_, rhs)| rhs).collect())
}
