use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{indexed, merge_trees, FactorTree, FactorizationResult, Method};
use crate::error::{Error, Result};
use crate::hypergraph::{for_each_combination, Hypergraph, Vertex};
use crate::iso::{is_isomorphic, isomorphism};
use crate::product::{product_with, ProductKind, ProductOptions};

/// Largest vertex count accepted by the oracle.
pub const DEFAULT_ORACLE_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub cap: usize,
    /// Bound on candidate checks before giving up with `SizeCapExceeded`.
    pub max_steps: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { cap: DEFAULT_ORACLE_CAP, max_steps: 50_000_000 }
    }
}

/// Cheap isomorphism invariant used to bucket hypergraphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Fingerprint {
    n: usize,
    sizes: Vec<usize>,
    degrees: Vec<usize>,
}

fn fingerprint<V: Vertex>(h: &Hypergraph<V>) -> Fingerprint {
    let mut sizes: Vec<usize> = h.edges().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let mut degrees: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
    degrees.sort_unstable();
    Fingerprint { n: h.vertex_count(), sizes, degrees }
}

#[derive(Debug, Clone)]
struct Decomposition {
    leaves: Vec<usize>,
    tree: FactorTree,
}

struct Search {
    kind: ProductKind,
    opts: ProductOptions,
    steps: u64,
    classes: Vec<Hypergraph<usize>>,
    buckets: BTreeMap<Fingerprint, Vec<usize>>,
    memo: BTreeMap<usize, Vec<Decomposition>>,
}

impl Search {
    fn new(kind: ProductKind, options: &OracleOptions) -> Self {
        Search {
            kind,
            opts: ProductOptions::default(),
            steps: options.max_steps,
            classes: Vec::new(),
            buckets: BTreeMap::new(),
            memo: BTreeMap::new(),
        }
    }

    fn tick(&mut self) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::SizeCapExceeded("oracle step budget exhausted".into()));
        }
        self.steps -= 1;
        Ok(())
    }

    /// Isomorphism class id, registering `h` if new.
    fn class_of(&mut self, h: Hypergraph<usize>) -> usize {
        let fp = fingerprint(&h);
        if let Some(ids) = self.buckets.get(&fp) {
            for &id in ids {
                if is_isomorphic(&self.classes[id], &h) {
                    return id;
                }
            }
        }
        let id = self.classes.len();
        self.classes.push(h);
        self.buckets.entry(fp).or_default().push(id);
        id
    }

    fn product(&self, a: &Hypergraph<usize>, b: &Hypergraph<usize>) -> Result<Hypergraph<(usize, usize)>> {
        Ok(product_with(self.kind, a, b, &self.opts)?.hypergraph)
    }

    /// Every split `H ≅ A ⊛ B` with both factors on at least two vertices,
    /// as pairs of class ids.
    fn splits(&mut self, id: usize) -> Result<Vec<(usize, usize)>> {
        let h = self.classes[id].clone();
        let n = h.vertex_count();
        let mut out = BTreeSet::new();
        for d in 2..n {
            if n % d != 0 || n / d < 2 {
                continue;
            }
            match self.kind {
                ProductKind::Cartesian
                | ProductKind::Normal
                | ProductKind::Strong
                | ProductKind::Lex
                | ProductKind::Costrong => self.layer_splits(&h, d, &mut out)?,
                _ => self.grid_splits(&h, d, &mut out)?,
            }
        }
        Ok(out.into_iter().collect())
    }

    fn candidates(&mut self, h: &Hypergraph<usize>, k: usize) -> Vec<usize> {
        let mut subsets = Vec::new();
        for_each_combination(h.vertex_count(), k, |s| subsets.push(s.to_vec()));
        let mut ids = BTreeSet::new();
        for s in subsets {
            let layer = indexed(&h.induced(&s));
            ids.insert(self.class_of(layer.remove_loops()));
            ids.insert(self.class_of(layer.add_loops()));
            ids.insert(self.class_of(layer));
        }
        ids.into_iter().collect()
    }

    fn layer_splits(&mut self, h: &Hypergraph<usize>, d: usize, out: &mut BTreeSet<(usize, usize)>) -> Result<()> {
        let target = fingerprint(h);
        let left = self.candidates(h, d);
        let right = self.candidates(h, h.vertex_count() / d);
        for &a in &left {
            for &b in &right {
                self.tick()?;
                let (ha, hb) = (&self.classes[a], &self.classes[b]);
                if self.kind == ProductKind::Cartesian
                    && ha.vertex_count() * hb.edge_count() + ha.edge_count() * hb.vertex_count() != h.edge_count()
                {
                    continue;
                }
                let p = self.product(ha, hb)?;
                if fingerprint(&p) == target && is_isomorphic(&p, h) {
                    out.insert((a, b));
                }
            }
        }
        Ok(())
    }

    /// Searches coordinatizations of `h` as a `d × (n/d)` grid whose row
    /// and column projections multiply back to `h`.
    fn grid_splits(&mut self, h: &Hypergraph<usize>, d: usize, out: &mut BTreeSet<(usize, usize)>) -> Result<()> {
        let n = h.vertex_count();
        let b = n / d;
        let mut found = Vec::new();
        let mut row = vec![usize::MAX; n];
        let mut counts = vec![0usize; d];
        self.row_partitions(h, d, b, 0, 0, &mut row, &mut counts, &mut found)?;
        for (a, bb) in found {
            let ia = self.class_of(a);
            let ib = self.class_of(bb);
            out.insert((ia, ib));
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn row_partitions(
        &mut self,
        h: &Hypergraph<usize>,
        d: usize,
        b: usize,
        v: usize,
        used: usize,
        row: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        found: &mut Vec<(Hypergraph<usize>, Hypergraph<usize>)>,
    ) -> Result<()> {
        let n = h.vertex_count();
        if v == n {
            if self.kind == ProductKind::Square && !rows_are_rectangular(h, row, d) {
                return Ok(());
            }
            let mut col = vec![usize::MAX; n];
            let rows: Vec<Vec<usize>> = (0..d).map(|r| (0..n).filter(|&x| row[x] == r).collect()).collect();
            for (c, &x) in rows[0].iter().enumerate() {
                col[x] = c;
            }
            return self.column_labels(h, &rows, 1, row, &mut col, found);
        }
        for r in 0..=used.min(d - 1) {
            if counts[r] == b {
                continue;
            }
            row[v] = r;
            counts[r] += 1;
            self.row_partitions(h, d, b, v + 1, used.max(r + 1), row, counts, found)?;
            counts[r] -= 1;
        }
        row[v] = usize::MAX;
        Ok(())
    }

    fn column_labels(
        &mut self,
        h: &Hypergraph<usize>,
        rows: &[Vec<usize>],
        r: usize,
        row: &[usize],
        col: &mut Vec<usize>,
        found: &mut Vec<(Hypergraph<usize>, Hypergraph<usize>)>,
    ) -> Result<()> {
        self.tick()?;
        if r == rows.len() {
            if let Some(pair) = self.check_grid(h, rows.len(), rows[0].len(), row, col)? {
                found.push(pair);
            }
            return Ok(());
        }
        let b = rows[0].len();
        let mut perm: Vec<usize> = (0..b).collect();
        loop {
            for (i, &x) in rows[r].iter().enumerate() {
                col[x] = perm[i];
            }
            if self.kind != ProductKind::Square || columns_consistent(h, row, col, r) {
                self.column_labels(h, rows, r + 1, row, col, found)?;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        for &x in &rows[r] {
            col[x] = usize::MAX;
        }
        Ok(())
    }

    fn check_grid(
        &self,
        h: &Hypergraph<usize>,
        d: usize,
        b: usize,
        row: &[usize],
        col: &[usize],
    ) -> Result<Option<(Hypergraph<usize>, Hypergraph<usize>)>> {
        let project = |coord: &[usize]| -> Vec<Vec<usize>> {
            h.edges()
                .iter()
                .map(|e| {
                    let mut p: Vec<usize> = e.iter().map(|&v| coord[v]).collect();
                    p.sort_unstable();
                    p.dedup();
                    p
                })
                .collect()
        };
        let a = Hypergraph::from_parts((0..d).collect(), project(row));
        let bb = Hypergraph::from_parts((0..b).collect(), project(col));
        let p = self.product(&a, &bb)?;
        let mut relabelled: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .map(|e| {
                let mut img: Vec<usize> = e.iter().map(|&v| row[v] * b + col[v]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        relabelled.sort();
        Ok((relabelled == p.edges()).then_some((a, bb)))
    }

    fn decompositions(&mut self, id: usize) -> Result<Vec<Decomposition>> {
        if let Some(d) = self.memo.get(&id) {
            return Ok(d.clone());
        }
        let splits = self.splits(id)?;
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        if splits.is_empty() {
            out.push(Decomposition { leaves: vec![id], tree: FactorTree::Leaf(0) });
        }
        for (a, b) in splits {
            let left = self.decompositions(a)?;
            let right = self.decompositions(b)?;
            for l in &left {
                for r in &right {
                    let mut leaves = l.leaves.clone();
                    leaves.extend_from_slice(&r.leaves);
                    let mut key = leaves.clone();
                    if self.kind != ProductKind::Lex {
                        key.sort_unstable();
                    }
                    if seen.insert(key) {
                        out.push(Decomposition { leaves, tree: merge_trees(&l.tree, l.leaves.len(), &r.tree) });
                    }
                }
            }
        }
        self.memo.insert(id, out.clone());
        Ok(out)
    }
}

fn rows_are_rectangular(h: &Hypergraph<usize>, row: &[usize], d: usize) -> bool {
    h.edges().iter().all(|e| {
        let mut per_row = vec![0usize; d];
        for &v in e {
            per_row[row[v]] += 1;
        }
        let mut sizes = per_row.into_iter().filter(|&c| c > 0);
        let first = sizes.next().unwrap_or(0);
        sizes.all(|c| c == first)
    })
}

/// Every edge meets the rows labelled so far (`0..=r`) in one common set of
/// columns.
fn columns_consistent(h: &Hypergraph<usize>, row: &[usize], col: &[usize], r: usize) -> bool {
    h.edges().iter().all(|e| {
        if !e.iter().any(|&v| row[v] == r) {
            return true;
        }
        let cols_in = |target: usize| {
            let mut c: Vec<usize> = e.iter().filter(|&&v| row[v] == target).map(|&v| col[v]).collect();
            c.sort_unstable();
            c
        };
        let mine = cols_in(r);
        (0..r).all(|q| {
            let other = cols_in(q);
            other.is_empty() || other == mine
        })
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn check_kind<V: Vertex>(h: &Hypergraph<V>, kind: ProductKind, options: &OracleOptions) -> Result<()> {
    if kind.unit().is_none() || kind.is_directed() {
        return Err(Error::NoUnit(kind.tag()));
    }
    if h.vertex_count() > options.cap {
        return Err(Error::SizeCapExceeded(format!(
            "oracle limited to {} vertices, got {}",
            options.cap,
            h.vertex_count()
        )));
    }
    Ok(())
}

/// Exhaustive factorization into factors on at least two vertices each.
/// Returns one decomposition and the number of distinct ones (as
/// multisets of factor isomorphism classes; ordered for `Lex`).
pub fn factor_oracle<V: Vertex>(h: &Hypergraph<V>, kind: ProductKind, options: &OracleOptions) -> Result<FactorizationResult> {
    check_kind(h, kind, options)?;
    let n = h.vertex_count();
    if n <= 1 {
        return Ok(FactorizationResult {
            kind,
            method: Method::Oracle,
            factors: if n == 1 { vec![indexed(h)] } else { Vec::new() },
            tree: (n == 1).then_some(FactorTree::Leaf(0)),
            coordinates: vec![vec![0]; n],
            distinct_factorizations: 1,
            factorization_lengths: vec![n],
        });
    }
    let mut search = Search::new(kind, options);
    let root = search.class_of(indexed(h));
    let all = search.decompositions(root)?;
    let chosen = &all[0];
    let mut result = FactorizationResult {
        kind,
        method: Method::Oracle,
        factors: chosen.leaves.iter().map(|&id| search.classes[id].clone()).collect(),
        tree: Some(chosen.tree.clone()),
        coordinates: Vec::new(),
        distinct_factorizations: all.len(),
        factorization_lengths: all.iter().map(|d| d.leaves.len()).collect(),
    };
    let rebuilt = result.rebuild()?;
    let map = isomorphism(h, &rebuilt).ok_or_else(|| Error::FactorizationFailed("oracle rebuild mismatch".into()))?;
    result.coordinates = map.into_iter().map(|i| rebuilt.vertex(i).clone()).collect();
    Ok(result)
}

/// Whether `h` admits no factorization into two non-unit factors.
///
/// Besides splits into factors on at least two vertices this also looks
/// for `U' ⊛ H'` with `U'` the one-vertex hypergraph that is not the unit,
/// so for instance an edgeless hypergraph is never prime under the square
/// product.
pub fn is_prime<V: Vertex>(h: &Hypergraph<V>, kind: ProductKind, options: &OracleOptions) -> Result<bool> {
    check_kind(h, kind, options)?;
    let looped_unit = kind.unit() == Some(true);
    let unit = Hypergraph::single_vertex(looped_unit);
    let other = Hypergraph::single_vertex(!looped_unit);
    let base = indexed(h);
    if is_isomorphic(&base, &unit) {
        return Ok(false);
    }
    let opts = ProductOptions::default();
    let edgeless = Hypergraph::from_parts((0..base.vertex_count()).collect(), Vec::new());
    for rest in [base.clone(), base.remove_loops(), base.add_loops(), edgeless] {
        if is_isomorphic(&rest, &unit) {
            continue;
        }
        let left = product_with(kind, &other, &rest, &opts)?.hypergraph;
        let right = product_with(kind, &rest, &other, &opts)?.hypergraph;
        if is_isomorphic(&left, &base) || is_isomorphic(&right, &base) {
            return Ok(false);
        }
    }
    let mut search = Search::new(kind, options);
    let root = search.class_of(base);
    Ok(search.splits(root)?.is_empty())
}
