//! 2-sections, L2-sections and their products.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{for_each_choice, for_each_combination, Hypergraph, Vertex};
use crate::product::{full_projection_subsets, ProductKind, ProductOptions};

/// The graph on `V` joining two distinct vertices that share an edge.
pub fn two_section<V: Vertex>(h: &Hypergraph<V>) -> Result<Hypergraph<V>> {
    if h.has_loops() {
        return Err(Error::LoopsPresent);
    }
    Ok(two_section_unchecked(h))
}

pub(crate) fn two_section_unchecked<V: Vertex>(h: &Hypergraph<V>) -> Hypergraph<V> {
    let mut edges = Vec::new();
    for (a, list) in h.neighbours().into_iter().enumerate() {
        edges.extend(list.into_iter().filter(|&b| a < b).map(|b| vec![a, b]));
    }
    h.with_edges(edges)
}

/// A graph plus a labelling of every graph edge `{x, y}` by a set of
/// hyperedges (as sorted vertex-index lists).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct L2Section<V> {
    graph: Hypergraph<V>,
    labels: BTreeMap<(usize, usize), Vec<Vec<usize>>>,
}

impl<V: Vertex> L2Section<V> {
    /// Builds from a graph and labels; checks the labelling is the one
    /// induced by the union of all labels.
    pub fn new(graph: Hypergraph<V>, labels: BTreeMap<(usize, usize), Vec<Vec<usize>>>) -> Result<Self> {
        let section = Self::from_parts(graph, labels);
        section.validate()?;
        Ok(section)
    }

    pub(crate) fn from_parts(graph: Hypergraph<V>, labels: BTreeMap<(usize, usize), Vec<Vec<usize>>>) -> Self {
        let labels = labels
            .into_iter()
            .map(|((a, b), label)| {
                let mut label: Vec<Vec<usize>> = label
                    .into_iter()
                    .map(|mut e| {
                        e.sort_unstable();
                        e.dedup();
                        e
                    })
                    .collect();
                label.sort();
                label.dedup();
                ((a.min(b), a.max(b)), label)
            })
            .collect();
        L2Section { graph, labels }
    }

    pub fn graph(&self) -> &Hypergraph<V> {
        &self.graph
    }

    pub fn labels(&self) -> &BTreeMap<(usize, usize), Vec<Vec<usize>>> {
        &self.labels
    }

    /// The label of `{a, b}`, empty when the pair is not a graph edge.
    pub fn label(&self, a: usize, b: usize) -> &[Vec<usize>] {
        self.labels
            .get(&(a.min(b), a.max(b)))
            .map_or(&[][..], Vec::as_slice)
    }

    /// Every hyperedge occurring in some label.
    pub fn hyperedges(&self) -> Vec<Vec<usize>> {
        let all: BTreeSet<&Vec<usize>> = self.labels.values().flatten().collect();
        all.into_iter().cloned().collect()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.graph.vertex_count();
        let bad = |msg: alloc::string::String| Err(Error::MalformedSection(msg));
        if self.graph.edges().iter().any(|e| e.len() != 2) {
            return bad("underlying graph is not 2-uniform".into());
        }
        let keys: Vec<Vec<usize>> = self.labels.keys().map(|&(a, b)| vec![a, b]).collect();
        if keys.as_slice() != self.graph.edges() {
            return bad("labelled pairs differ from the graph edges".into());
        }
        for (&(a, b), label) in &self.labels {
            if label.is_empty() {
                return bad(format!("edge {{{a}, {b}}} has an empty label"));
            }
            for e in label {
                if e.iter().any(|&v| v >= n) {
                    return bad("label names an unknown vertex".into());
                }
                if e.binary_search(&a).is_err() || e.binary_search(&b).is_err() {
                    return bad(format!("label of {{{a}, {b}}} holds an edge missing that pair"));
                }
            }
        }
        for e in self.hyperedges() {
            for (i, &x) in e.iter().enumerate() {
                for &y in &e[i + 1..] {
                    if self.label(x, y).binary_search(&e).is_err() {
                        return bad(format!("hyperedge {e:?} is missing from the label of {{{x}, {y}}}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The L2-section of a loop-free hypergraph.
pub fn l2_section<V: Vertex>(h: &Hypergraph<V>) -> Result<L2Section<V>> {
    let graph = two_section(h)?;
    let mut labels: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    for e in h.edges() {
        for (i, &x) in e.iter().enumerate() {
            for &y in &e[i + 1..] {
                labels.entry((x, y)).or_default().push(e.clone());
            }
        }
    }
    Ok(L2Section::from_parts(graph, labels))
}

/// Rebuilds the hypergraph whose edges are the union of all labels.
pub fn l2_inverse<V: Vertex>(section: &L2Section<V>) -> Result<Hypergraph<V>> {
    section.validate()?;
    Ok(section.graph.with_edges(section.hyperedges()))
}

/// The L2-section product for the kinds that have one.
pub fn l2_product<A: Vertex, B: Vertex>(
    kind: ProductKind,
    g1: &L2Section<A>,
    g2: &L2Section<B>,
) -> Result<L2Section<(A, B)>> {
    l2_product_with(kind, g1, g2, &ProductOptions::default())
}

pub fn l2_product_with<A: Vertex, B: Vertex>(
    kind: ProductKind,
    g1: &L2Section<A>,
    g2: &L2Section<B>,
    options: &ProductOptions,
) -> Result<L2Section<(A, B)>> {
    if !matches!(
        kind,
        ProductKind::Cartesian
            | ProductKind::DirectMin
            | ProductKind::Normal
            | ProductKind::Strong
            | ProductKind::Lex
            | ProductKind::Square
            | ProductKind::Categorial
    ) {
        return Err(Error::UnsupportedKind(kind.tag()));
    }
    let ctx = Context::new(g1, g2);
    let n = ctx.n1 * ctx.n2;
    let mut graph_edges = Vec::new();
    let mut labels = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            let (x1, y1) = (u / ctx.n2, u % ctx.n2);
            let (x2, y2) = (v / ctx.n2, v % ctx.n2);
            let adj1 = g1.labels.contains_key(&(x1.min(x2), x1.max(x2)));
            let adj2 = g2.labels.contains_key(&(y1.min(y2), y1.max(y2)));
            let (eq1, eq2) = (x1 == x2, y1 == y2);
            let cart = (eq1 && adj2) || (eq2 && adj1);
            let direct = adj1 && adj2;
            let adjacent = match kind {
                ProductKind::Cartesian => cart,
                ProductKind::DirectMin => direct,
                ProductKind::Lex => adj1 || (eq1 && adj2),
                _ => cart || direct,
            };
            if !adjacent {
                continue;
            }
            let e = Pair { x1, y1, x2, y2 };
            let label = match kind {
                ProductKind::Cartesian => ctx.cartesian(&e),
                ProductKind::DirectMin => ctx.direct_min(&e),
                ProductKind::Normal if cart => ctx.cartesian(&e),
                ProductKind::Normal => ctx.direct_min(&e),
                ProductKind::Strong => ctx.strong(&e),
                ProductKind::Lex => ctx.lex(&e),
                ProductKind::Square => ctx.square(&e),
                _ => ctx.categorial(&e, options.categorial_cap)?,
            };
            if label.is_empty() {
                continue;
            }
            graph_edges.push(vec![u, v]);
            labels.insert((u, v), label);
        }
    }
    let mut vertices = Vec::with_capacity(n);
    for a in g1.graph.vertices() {
        for b in g2.graph.vertices() {
            vertices.push((a.clone(), b.clone()));
        }
    }
    Ok(L2Section::from_parts(Hypergraph::from_parts(vertices, graph_edges), labels))
}

struct Pair {
    x1: usize,
    y1: usize,
    x2: usize,
    y2: usize,
}

impl Pair {
    fn cells(&self, n2: usize) -> [usize; 2] {
        [self.x1 * n2 + self.y1, self.x2 * n2 + self.y2]
    }
}

struct Context<'a, A, B> {
    g1: &'a L2Section<A>,
    g2: &'a L2Section<B>,
    n1: usize,
    n2: usize,
    edges1: Vec<Vec<usize>>,
    edges2: Vec<Vec<usize>>,
}

fn projections(cells: &[usize], n2: usize) -> (Vec<usize>, Vec<usize>) {
    let mut p1: Vec<usize> = cells.iter().map(|c| c / n2).collect();
    let mut p2: Vec<usize> = cells.iter().map(|c| c % n2).collect();
    p1.sort_unstable();
    p1.dedup();
    p2.sort_unstable();
    p2.dedup();
    (p1, p2)
}

impl<'a, A: Vertex, B: Vertex> Context<'a, A, B> {
    fn new(g1: &'a L2Section<A>, g2: &'a L2Section<B>) -> Self {
        Context {
            g1,
            g2,
            n1: g1.graph.vertex_count(),
            n2: g2.graph.vertex_count(),
            edges1: g1.hyperedges(),
            edges2: g2.hyperedges(),
        }
    }

    fn cartesian(&self, e: &Pair) -> Vec<Vec<usize>> {
        let n2 = self.n2;
        if e.x1 == e.x2 {
            self.g2
                .label(e.y1, e.y2)
                .iter()
                .map(|f| f.iter().map(|&y| e.x1 * n2 + y).collect())
                .collect()
        } else if e.y1 == e.y2 {
            self.g1
                .label(e.x1, e.x2)
                .iter()
                .map(|f| f.iter().map(|&x| x * n2 + e.y1).collect())
                .collect()
        } else {
            Vec::new()
        }
    }

    /// `e' ∪ A` for `A` an `(r-2)`-subset of the cells outside the rows and
    /// columns of `e'`, with both projections of size `r - 2`.
    fn direct_min(&self, e: &Pair) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for e1 in self.g1.label(e.x1, e.x2) {
            for e2 in self.g2.label(e.y1, e.y2) {
                let r = e1.len().min(e2.len());
                let pool: Vec<usize> = cross_minus(e1, &[e.x1, e.x2], e2, &[e.y1, e.y2], self.n2);
                for_each_combination(pool.len(), r - 2, |comb| {
                    let a: Vec<usize> = comb.iter().map(|&i| pool[i]).collect();
                    let (p1, p2) = projections(&a, self.n2);
                    if p1.len() == r - 2 && p2.len() == r - 2 {
                        let mut edge = a;
                        edge.extend(e.cells(self.n2));
                        out.push(edge);
                    }
                });
            }
        }
        out
    }

    fn strong(&self, e: &Pair) -> Vec<Vec<usize>> {
        let n2 = self.n2;
        let mut out = self.cartesian(e);
        let full = |extra: &[usize], e1: &[usize], e2: &[usize]| -> Option<Vec<usize>> {
            let mut edge = extra.to_vec();
            edge.extend(e.cells(n2));
            let (p1, p2) = projections(&edge, n2);
            (p1 == e1 && p2 == e2).then_some(edge)
        };
        if e.x1 == e.x2 {
            for e2 in self.g2.label(e.y1, e.y2) {
                for e1 in self.edges1_with(e.x1).filter(|e1| e1.len() < e2.len()) {
                    let pool = cross_minus(e1, &[], e2, &[e.y1, e.y2], n2);
                    for_each_combination(pool.len(), e2.len() - 2, |comb| {
                        let b: Vec<usize> = comb.iter().map(|&i| pool[i]).collect();
                        out.extend(full(&b, e1, e2));
                    });
                }
            }
        } else if e.y1 == e.y2 {
            for e1 in self.g1.label(e.x1, e.x2) {
                for e2 in self.edges2_with(e.y1).filter(|e2| e2.len() < e1.len()) {
                    let pool = cross_minus(e1, &[e.x1, e.x2], e2, &[], n2);
                    for_each_combination(pool.len(), e1.len() - 2, |comb| {
                        let c: Vec<usize> = comb.iter().map(|&i| pool[i]).collect();
                        out.extend(full(&c, e1, e2));
                    });
                }
            }
        } else {
            for e1 in self.g1.label(e.x1, e.x2) {
                for e2 in self.g2.label(e.y1, e.y2) {
                    let r = e1.len().max(e2.len());
                    let corner = [e.x1 * n2 + e.y1, e.x1 * n2 + e.y2, e.x2 * n2 + e.y1, e.x2 * n2 + e.y2];
                    let pool: Vec<usize> = cross_minus(e1, &[], e2, &[], n2)
                        .into_iter()
                        .filter(|c| !corner.contains(c))
                        .collect();
                    for_each_combination(pool.len(), r - 2, |comb| {
                        let d: Vec<usize> = comb.iter().map(|&i| pool[i]).collect();
                        out.extend(full(&d, e1, e2));
                    });
                }
            }
        }
        out
    }

    fn lex(&self, e: &Pair) -> Vec<Vec<usize>> {
        let n2 = self.n2;
        if e.x1 == e.x2 {
            return self.cartesian(e);
        }
        let mut out = Vec::new();
        for e1 in self.g1.label(e.x1, e.x2) {
            let choices: Vec<Vec<usize>> = e1
                .iter()
                .map(|&x| {
                    if x == e.x1 {
                        vec![x * n2 + e.y1]
                    } else if x == e.x2 {
                        vec![x * n2 + e.y2]
                    } else {
                        (0..n2).map(|y| x * n2 + y).collect()
                    }
                })
                .collect();
            for_each_choice(&choices, |pick| out.push(pick.to_vec()));
        }
        out
    }

    fn square(&self, e: &Pair) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut push = |e1: &[usize], e2: &[usize]| out.push(cross_minus(e1, &[], e2, &[], self.n2));
        if e.x1 == e.x2 {
            for e1 in self.edges1_with(e.x1) {
                for e2 in self.g2.label(e.y1, e.y2) {
                    push(e1, e2);
                }
            }
        }
        if e.y1 == e.y2 {
            for e2 in self.edges2_with(e.y1) {
                for e1 in self.g1.label(e.x1, e.x2) {
                    push(e1, e2);
                }
            }
        }
        for e1 in self.g1.label(e.x1, e.x2) {
            for e2 in self.g2.label(e.y1, e.y2) {
                push(e1, e2);
            }
        }
        out
    }

    fn categorial(&self, e: &Pair, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut pairs: Vec<(&Vec<usize>, &Vec<usize>)> = Vec::new();
        if e.y1 == e.y2 {
            for e1 in self.g1.label(e.x1, e.x2) {
                pairs.extend(self.edges2_with(e.y1).map(|e2| (e1, e2)));
            }
        } else if e.x1 == e.x2 {
            for e2 in self.g2.label(e.y1, e.y2) {
                pairs.extend(self.edges1_with(e.x1).map(|e1| (e1, e2)));
            }
        } else {
            for e1 in self.g1.label(e.x1, e.x2) {
                pairs.extend(self.g2.label(e.y1, e.y2).iter().map(|e2| (e1, e2)));
            }
        }
        let need = e.cells(self.n2);
        let mut out = Vec::new();
        for (e1, e2) in pairs {
            full_projection_subsets(e1, e2, self.n2, cap, |mut f| {
                f.sort_unstable();
                if need.iter().all(|c| f.binary_search(c).is_ok()) {
                    out.push(f);
                }
            })?;
        }
        Ok(out)
    }

    fn edges1_with(&self, x: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.edges1.iter().filter(move |e| e.binary_search(&x).is_ok())
    }

    fn edges2_with(&self, y: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.edges2.iter().filter(move |e| e.binary_search(&y).is_ok())
    }
}

/// Cells of `(e1 \ skip1) x (e2 \ skip2)`.
fn cross_minus(e1: &[usize], skip1: &[usize], e2: &[usize], skip2: &[usize], n2: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &x in e1.iter().filter(|x| !skip1.contains(x)) {
        for &y in e2.iter().filter(|y| !skip2.contains(y)) {
            out.push(x * n2 + y);
        }
    }
    out
}

/// Whether every labelled hyperedge of `section` is a clique of its graph.
pub fn labels_are_cliques<V: Vertex>(section: &L2Section<V>) -> bool {
    section.hyperedges().iter().all(|e| {
        e.iter()
            .enumerate()
            .all(|(i, &x)| e[i + 1..].iter().all(|&y| section.graph.has_edge(&[x, y])))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::l2_isomorphism;
    use crate::product::{self, product_with};

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph<usize> {
        Hypergraph::from_index_edges(n, edges).unwrap()
    }

    fn k2() -> Hypergraph<usize> {
        h(2, &[&[0, 1]])
    }

    fn e3() -> Hypergraph<usize> {
        h(3, &[&[0, 1, 2]])
    }

    fn t3() -> Hypergraph<usize> {
        h(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    fn mixed() -> Hypergraph<usize> {
        h(4, &[&[0, 1, 2], &[2, 3]])
    }

    #[test]
    fn two_sections() {
        assert_eq!(two_section(&e3()).unwrap(), t3());
        assert_eq!(two_section(&k2()).unwrap(), k2());
        assert_eq!(two_section(&mixed()).unwrap(), h(4, &[&[0, 1], &[0, 2], &[1, 2], &[2, 3]]));
        assert_eq!(two_section(&k2().add_loops()), Err(Error::LoopsPresent));
    }

    #[test]
    fn l2_round_trips() {
        for g in [e3(), t3(), mixed(), k2()] {
            let s = l2_section(&g).unwrap();
            assert!(labels_are_cliques(&s));
            assert_eq!(l2_inverse(&s).unwrap(), g);
        }
        let s = l2_section(&e3()).unwrap();
        assert!(s.labels().values().all(|l| l == &vec![vec![0, 1, 2]]));
        let s = l2_section(&mixed()).unwrap();
        assert_eq!(s.label(0, 1), &[vec![0, 1, 2]]);
        assert_eq!(s.label(2, 3), &[vec![2, 3]]);
    }

    #[test]
    fn malformed_sections_are_rejected() {
        let graph = t3();
        let mut labels = BTreeMap::new();
        labels.insert((0, 1), vec![vec![0, 1, 2]]);
        labels.insert((1, 2), vec![vec![1, 2]]);
        labels.insert((0, 2), vec![vec![0, 2]]);
        assert!(matches!(L2Section::new(graph, labels), Err(Error::MalformedSection(_))));
    }

    #[test]
    fn l2_isomorphism_examples() {
        let a = l2_section(&e3()).unwrap();
        let b = l2_section(&e3().map_vertices(|v| v * 7).unwrap()).unwrap();
        assert!(l2_isomorphism(&a, &b).is_some());
        assert!(l2_isomorphism(&a, &l2_section(&t3()).unwrap()).is_none());
        assert_eq!(l2_isomorphism(&a, &a), Some(vec![0, 1, 2]));
    }

    #[test]
    fn l2_product_examples() {
        let l = l2_section(&k2()).unwrap();
        let c = l2_product(ProductKind::Cartesian, &l, &l).unwrap();
        assert_eq!(c, l2_section(&product::cartesian(&k2(), &k2()).hypergraph).unwrap());
        let s = l2_product(ProductKind::Square, &l, &l).unwrap();
        assert_eq!(s.graph().edge_count(), 6);
        assert!(s.labels().values().all(|l| l == &vec![vec![0, 1, 2, 3]]));
        let isolated = l2_section(&h(3, &[&[0, 1]])).unwrap();
        let s = l2_product(ProductKind::Square, &isolated, &l).unwrap();
        assert_eq!(s, l2_section(&product::square(&h(3, &[&[0, 1]]), &k2()).hypergraph).unwrap());
        assert_eq!(s.graph().edge_count(), 6);
        let k1 = Hypergraph::single_vertex(false);
        let lk = l2_product(ProductKind::Lex, &l, &l2_section(&k1).unwrap()).unwrap();
        assert_eq!(l2_inverse(&lk).unwrap().map_vertices(|(a, _)| *a).unwrap(), k2());
        assert!(matches!(
            l2_product(ProductKind::DirectMax, &l, &l),
            Err(Error::UnsupportedKind(_))
        ));
    }

    #[test]
    fn l2_products_commute_with_sections_on_small_inputs() {
        let samples = [k2(), e3(), t3(), mixed(), h(3, &[&[0, 1], &[1, 2]]), h(4, &[&[0, 1, 2], &[1, 2, 3]])];
        let kinds = [
            ProductKind::Cartesian,
            ProductKind::DirectMin,
            ProductKind::Normal,
            ProductKind::Strong,
            ProductKind::Lex,
            ProductKind::Square,
            ProductKind::Categorial,
        ];
        for kind in kinds {
            for a in &samples {
                for b in &samples {
                    let opts = ProductOptions { categorial_cap: 16 };
                    let Ok(p) = product_with(kind, a, b, &opts) else { continue };
                    let expected = l2_section(&p.hypergraph).unwrap();
                    let got = l2_product_with(kind, &l2_section(a).unwrap(), &l2_section(b).unwrap(), &opts).unwrap();
                    assert_eq!(got, expected, "{kind} on {a:?} and {b:?}");
                }
            }
        }
    }
}
