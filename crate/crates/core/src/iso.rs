//! Isomorphism and automorphism search.
//!
//! Both hypergraphs are refined jointly by colour refinement on their
//! vertex/edge incidence structure, then a backtracking search extends a
//! partial bijection one vertex at a time, checking every edge that becomes
//! fully mapped in either direction.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::section::L2Section;

/// Default vertex cap for automorphism enumeration.
pub const DEFAULT_AUTOMORPHISM_CAP: usize = 10;

/// A set system with coloured sets, the common input of all searches here.
#[derive(Debug, Clone)]
pub(crate) struct SetSystem {
    pub points: usize,
    pub sets: Vec<(u32, Vec<usize>)>,
}

impl SetSystem {
    pub fn from_hypergraph<V: Vertex>(h: &Hypergraph<V>) -> Self {
        SetSystem {
            points: h.vertex_count(),
            sets: h.edges().iter().map(|e| (0, e.clone())).collect(),
        }
    }
}

struct Prepared<'a> {
    sys: &'a SetSystem,
    point_color: Vec<u32>,
    incident: Vec<Vec<usize>>,
    lookup: BTreeSet<(u32, Vec<usize>)>,
}

fn refine(a: &SetSystem, b: &SetSystem) -> (Vec<u32>, Vec<u32>) {
    let incidence = |s: &SetSystem| {
        let mut inc = vec![Vec::new(); s.points];
        for (j, (_, set)) in s.sets.iter().enumerate() {
            for &v in set {
                inc[v].push(j);
            }
        }
        inc
    };
    let (inc_a, inc_b) = (incidence(a), incidence(b));
    let mut pa = vec![0u32; a.points];
    let mut pb = vec![0u32; b.points];
    let mut sa: Vec<u32> = a.sets.iter().map(|(c, _)| *c).collect();
    let mut sb: Vec<u32> = b.sets.iter().map(|(c, _)| *c).collect();
    let mut classes = 0usize;
    loop {
        let mut set_ids: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let set_sig = |sys: &SetSystem, colors: &[u32], points: &[u32]| -> Vec<(u32, Vec<u32>)> {
            sys.sets
                .iter()
                .enumerate()
                .map(|(j, (_, set))| {
                    let mut m: Vec<u32> = set.iter().map(|&v| points[v]).collect();
                    m.sort_unstable();
                    (colors[j], m)
                })
                .collect()
        };
        let sig_a = set_sig(a, &sa, &pa);
        let sig_b = set_sig(b, &sb, &pb);
        for s in sig_a.iter().chain(&sig_b) {
            let next = set_ids.len() as u32;
            set_ids.entry(s.clone()).or_insert(next);
        }
        sa = sig_a.iter().map(|s| set_ids[s]).collect();
        sb = sig_b.iter().map(|s| set_ids[s]).collect();

        let mut point_ids: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let point_sig = |inc: &[Vec<usize>], points: &[u32], sets: &[u32]| -> Vec<(u32, Vec<u32>)> {
            inc.iter()
                .enumerate()
                .map(|(v, js)| {
                    let mut m: Vec<u32> = js.iter().map(|&j| sets[j]).collect();
                    m.sort_unstable();
                    (points[v], m)
                })
                .collect()
        };
        let psig_a = point_sig(&inc_a, &pa, &sa);
        let psig_b = point_sig(&inc_b, &pb, &sb);
        for s in psig_a.iter().chain(&psig_b) {
            let next = point_ids.len() as u32;
            point_ids.entry(s.clone()).or_insert(next);
        }
        pa = psig_a.iter().map(|s| point_ids[s]).collect();
        pb = psig_b.iter().map(|s| point_ids[s]).collect();
        let now = point_ids.len() + set_ids.len();
        if now == classes {
            return (pa, pb);
        }
        classes = now;
    }
}

fn prepare(sys: &SetSystem, point_color: Vec<u32>) -> Prepared<'_> {
    let mut incident = vec![Vec::new(); sys.points];
    for (j, (_, set)) in sys.sets.iter().enumerate() {
        for &v in set {
            incident[v].push(j);
        }
    }
    let lookup = sys
        .sets
        .iter()
        .map(|(c, s)| {
            let mut s = s.clone();
            s.sort_unstable();
            (*c, s)
        })
        .collect();
    Prepared { sys, point_color, incident, lookup }
}

/// Enumerates colour-preserving bijections carrying the sets of `a` onto
/// the sets of `b`. `visit` returns `false` to stop the search.
pub(crate) fn search(a: &SetSystem, b: &SetSystem, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if a.points != b.points || a.sets.len() != b.sets.len() {
        return;
    }
    let (ca, cb) = refine(a, b);
    let histogram = |c: &[u32]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    if histogram(&ca) != histogram(&cb) {
        return;
    }
    let pa = prepare(a, ca);
    let pb = prepare(b, cb);
    if pa.lookup.len() != pb.lookup.len() {
        return;
    }

    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &pa.point_color {
        *class_size.entry(c).or_default() += 1;
    }
    let order = search_order(&pa, &class_size);
    let mut state = State {
        a: &pa,
        b: &pb,
        order: &order,
        forward: vec![usize::MAX; a.points],
        backward: vec![usize::MAX; a.points],
    };
    state.extend(0, visit);
}

fn search_order(p: &Prepared<'_>, class_size: &BTreeMap<u32, usize>) -> Vec<usize> {
    let n = p.sys.points;
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut touched = vec![0usize; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (usize::MAX - touched[v], class_size[&p.point_color[v]], v))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &j in &p.incident[next] {
            for &w in &p.sys.sets[j].1 {
                touched[w] += 1;
            }
        }
    }
    order
}

struct State<'a, 'b> {
    a: &'a Prepared<'b>,
    b: &'a Prepared<'b>,
    order: &'a [usize],
    forward: Vec<usize>,
    backward: Vec<usize>,
}

impl State<'_, '_> {
    fn extend(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.forward);
        }
        let v = self.order[depth];
        let color = self.a.point_color[v];
        for w in 0..self.b.sys.points {
            if self.backward[w] != usize::MAX || self.b.point_color[w] != color {
                continue;
            }
            self.forward[v] = w;
            self.backward[w] = v;
            if self.consistent(v, w) && !self.extend(depth + 1, visit) {
                self.forward[v] = usize::MAX;
                self.backward[w] = usize::MAX;
                return false;
            }
            self.forward[v] = usize::MAX;
            self.backward[w] = usize::MAX;
        }
        true
    }

    fn consistent(&self, v: usize, w: usize) -> bool {
        for &j in &self.a.incident[v] {
            let (c, set) = &self.a.sys.sets[j];
            if set.iter().all(|&x| self.forward[x] != usize::MAX) {
                let mut image: Vec<usize> = set.iter().map(|&x| self.forward[x]).collect();
                image.sort_unstable();
                if !self.b.lookup.contains(&(*c, image)) {
                    return false;
                }
            }
        }
        for &j in &self.b.incident[w] {
            let (c, set) = &self.b.sys.sets[j];
            if set.iter().all(|&y| self.backward[y] != usize::MAX) {
                let mut pre: Vec<usize> = set.iter().map(|&y| self.backward[y]).collect();
                pre.sort_unstable();
                if !self.a.lookup.contains(&(*c, pre)) {
                    return false;
                }
            }
        }
        true
    }
}

/// A vertex bijection (index in `h1` to index in `h2`) carrying the edges
/// of `h1` exactly onto the edges of `h2`.
pub fn isomorphism<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> Option<Vec<usize>> {
    let mut found = None;
    search(
        &SetSystem::from_hypergraph(h1),
        &SetSystem::from_hypergraph(h2),
        &mut |m| {
            found = Some(m.to_vec());
            false
        },
    );
    found
}

pub fn is_isomorphic<A: Vertex, B: Vertex>(h1: &Hypergraph<A>, h2: &Hypergraph<B>) -> bool {
    isomorphism(h1, h2).is_some()
}

/// Every automorphism as an index permutation, identity included.
pub fn automorphisms<V: Vertex>(h: &Hypergraph<V>, cap: usize) -> Result<Vec<Vec<usize>>> {
    if h.vertex_count() > cap {
        return Err(Error::SizeCapExceeded(format!(
            "automorphism enumeration limited to {cap} vertices, got {}",
            h.vertex_count()
        )));
    }
    let sys = SetSystem::from_hypergraph(h);
    let mut all = Vec::new();
    search(&sys, &sys, &mut |m| {
        all.push(m.to_vec());
        true
    });
    all.sort();
    Ok(all)
}

/// Number of automorphisms, without materializing them.
pub fn automorphism_count<V: Vertex>(h: &Hypergraph<V>, cap: usize) -> Result<usize> {
    if h.vertex_count() > cap {
        return Err(Error::SizeCapExceeded(format!(
            "automorphism enumeration limited to {cap} vertices, got {}",
            h.vertex_count()
        )));
    }
    let sys = SetSystem::from_hypergraph(h);
    let mut count = 0;
    search(&sys, &sys, &mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// A graph isomorphism between the underlying graphs that also carries
/// every label onto the label of the image edge.
pub fn l2_isomorphism<A: Vertex, B: Vertex>(g1: &L2Section<A>, g2: &L2Section<B>) -> Option<Vec<usize>> {
    let (s1, s2) = (l2_system(g1), l2_system(g2));
    let mut found = None;
    search(&s1, &s2, &mut |m| {
        let ok = g1.labels().iter().all(|((x, y), label)| {
            let (a, b) = (m[*x].min(m[*y]), m[*x].max(m[*y]));
            let Some(target) = g2.labels().get(&(a, b)) else {
                return false;
            };
            let mut mapped: Vec<Vec<usize>> = label
                .iter()
                .map(|e| {
                    let mut img: Vec<usize> = e.iter().map(|&v| m[v]).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            mapped.sort();
            &mapped == target
        });
        if ok {
            found = Some(m.to_vec());
        }
        !ok
    });
    found
}

fn l2_system<V: Vertex>(g: &L2Section<V>) -> SetSystem {
    let mut sets: Vec<(u32, Vec<usize>)> = g.graph().edges().iter().map(|e| (0, e.clone())).collect();
    let labeled: BTreeSet<&Vec<usize>> = g.labels().values().flatten().collect();
    sets.extend(labeled.into_iter().map(|e| (1, e.clone())));
    SetSystem { points: g.graph().vertex_count(), sets }
}
