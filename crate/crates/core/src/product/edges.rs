use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{for_each_choice, for_each_combination};

/// Product cells of an edge pair as `(x, y)` factor indices.
fn cells(e1: &[usize], e2: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(e1.len() * e2.len());
    for &x in e1 {
        for &y in e2 {
            out.push((x, y));
        }
    }
    out
}

fn flat(cell: (usize, usize), n2: usize) -> usize {
    cell.0 * n2 + cell.1
}

fn projections(picked: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let mut p1: Vec<usize> = picked.iter().map(|c| c.0).collect();
    let mut p2: Vec<usize> = picked.iter().map(|c| c.1).collect();
    p1.sort_unstable();
    p1.dedup();
    p2.sort_unstable();
    p2.dedup();
    (p1, p2)
}

/// Every `k`-subset of `e1 x e2` accepted by `keep`, given its projections.
fn subsets_of_size(
    e1: &[usize],
    e2: &[usize],
    k: usize,
    n2: usize,
    out: &mut Vec<Vec<usize>>,
    mut keep: impl FnMut(&[usize], &[usize]) -> bool,
) {
    let grid = cells(e1, e2);
    let mut picked = Vec::with_capacity(k);
    for_each_combination(grid.len(), k, |comb| {
        picked.clear();
        picked.extend(comb.iter().map(|&i| grid[i]));
        let (p1, p2) = projections(&picked);
        if keep(&p1, &p2) {
            out.push(picked.iter().map(|&c| flat(c, n2)).collect());
        }
    });
}

pub(crate) fn cartesian(n1: usize, e1s: &[Vec<usize>], n2: usize, e2s: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for x in 0..n1 {
        for f in e2s {
            out.push(f.iter().map(|&y| x * n2 + y).collect());
        }
    }
    for e in e1s {
        for y in 0..n2 {
            out.push(e.iter().map(|&x| x * n2 + y).collect());
        }
    }
    out
}

pub(crate) fn direct_r(e1s: &[Vec<usize>], e2s: &[Vec<usize>], r: usize, n2: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for e1 in e1s {
        for e2 in e2s {
            subsets_of_size(e1, e2, r, n2, &mut out, |p1, p2| {
                e1s.binary_search_by(|e| e.as_slice().cmp(p1)).is_ok()
                    && e2s.binary_search_by(|e| e.as_slice().cmp(p2)).is_ok()
            });
        }
    }
    out
}

pub(crate) fn direct_min(e1s: &[Vec<usize>], e2s: &[Vec<usize>], n2: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for e1 in e1s {
        for e2 in e2s {
            let r = e1.len().min(e2.len());
            subsets_of_size(e1, e2, r, n2, &mut out, |p1, p2| p1.len() == r && p2.len() == r);
        }
    }
    out
}

pub(crate) fn direct_max(e1s: &[Vec<usize>], e2s: &[Vec<usize>], n2: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for e1 in e1s {
        for e2 in e2s {
            let r = e1.len().max(e2.len());
            subsets_of_size(e1, e2, r, n2, &mut out, |p1, p2| p1 == e1.as_slice() && p2 == e2.as_slice());
        }
    }
    out
}

pub(crate) fn direct_nr(e1s: &[Vec<usize>], e2s: &[Vec<usize>], n2: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for e in e1s {
        for f in e2s {
            for &x in e {
                for &y in f {
                    let mut edge = vec![x * n2 + y];
                    for &a in e.iter().filter(|&&a| a != x) {
                        for &b in f.iter().filter(|&&b| b != y) {
                            edge.push(a * n2 + b);
                        }
                    }
                    out.push(edge);
                }
            }
        }
    }
    out
}

/// Every `k`-subset of `e x f` for each `k` in `sizes(|e|, |f|)`.
pub(crate) fn binomial_family(
    e1s: &[Vec<usize>],
    e2s: &[Vec<usize>],
    n2: usize,
    sizes: impl Fn(usize, usize) -> Vec<usize>,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for e1 in e1s {
        for e2 in e2s {
            for k in sizes(e1.len(), e2.len()) {
                subsets_of_size(e1, e2, k, n2, &mut out, |_, _| true);
            }
        }
    }
    out
}

/// Graphs of all functions `e -> V2` for `e` in `E1`, plus `{x} x f`.
pub(crate) fn lex(n1: usize, e1s: &[Vec<usize>], n2: usize, e2s: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let all: Vec<usize> = (0..n2).collect();
    for e in e1s {
        let choices: Vec<Vec<usize>> = e.iter().map(|&x| all.iter().map(|&y| x * n2 + y).collect()).collect();
        for_each_choice(&choices, |pick| out.push(pick.to_vec()));
    }
    for x in 0..n1 {
        for f in e2s {
            out.push(f.iter().map(|&y| x * n2 + y).collect());
        }
    }
    out
}

/// `lex(H2, H1)` with every vertex `(y, x)` moved to `(x, y)`.
pub(crate) fn lex_transposed(n1: usize, e1s: &[Vec<usize>], n2: usize, e2s: &[Vec<usize>]) -> Vec<Vec<usize>> {
    lex(n2, e2s, n1, e1s)
        .into_iter()
        .map(|e| e.into_iter().map(|c| (c % n1) * n2 + c / n1).collect())
        .collect()
}

pub(crate) fn square(e1s: &[Vec<usize>], e2s: &[Vec<usize>], n2: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for e1 in e1s {
        for e2 in e2s {
            out.push(cells(e1, e2).into_iter().map(|c| flat(c, n2)).collect());
        }
    }
    out
}

/// Subsets of `e1 x e2` with both projections full, for one edge pair.
pub(crate) fn full_projection_subsets(
    e1: &[usize],
    e2: &[usize],
    n2: usize,
    cap: usize,
    mut visit: impl FnMut(Vec<usize>),
) -> Result<()> {
    let size = e1.len() * e2.len();
    if size > cap || size >= 64 {
        return Err(Error::EdgeBlowupCap { size, cap });
    }
    let grid = cells(e1, e2);
    let mut picked = Vec::with_capacity(size);
    for mask in 1u64..(1u64 << size) {
        picked.clear();
        picked.extend((0..size).filter(|i| mask >> i & 1 == 1).map(|i| grid[i]));
        let (p1, p2) = projections(&picked);
        if p1 == e1 && p2 == e2 {
            visit(picked.iter().map(|&c| flat(c, n2)).collect());
        }
    }
    Ok(())
}

pub(crate) fn categorial(e1s: &[Vec<usize>], e2s: &[Vec<usize>], n2: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for e1 in e1s {
        for e2 in e2s {
            full_projection_subsets(e1, e2, n2, cap, |e| out.push(e))?;
        }
    }
    Ok(out)
}
