//! JSON interchange for hypergraphs, directed hypergraphs and L2-sections.
//!
//! Vertices are integers, strings or nested arrays (product coordinates).
//! Rationals are written as `"p/q"` strings and infinity as `"inf"`.

use std::collections::BTreeMap;

use hyperprod_core::directed::DirectedHypergraph;
use hyperprod_core::invariant::Rational;
use hyperprod_core::section::L2Section;
use hyperprod_core::{ExtNat, Hypergraph, Tagged};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Domain(#[from] hyperprod_core::Error),
}

/// A vertex label as it appears in JSON.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Name(String),
    Tuple(Vec<Label>),
}

pub trait ToLabel {
    fn to_label(&self) -> Label;
}

impl ToLabel for Label {
    fn to_label(&self) -> Label {
        self.clone()
    }
}

impl ToLabel for usize {
    fn to_label(&self) -> Label {
        Label::Int(*self as i64)
    }
}

impl ToLabel for i64 {
    fn to_label(&self) -> Label {
        Label::Int(*self)
    }
}

impl ToLabel for String {
    fn to_label(&self) -> Label {
        Label::Name(self.clone())
    }
}

impl<A: ToLabel, B: ToLabel> ToLabel for (A, B) {
    fn to_label(&self) -> Label {
        Label::Tuple(vec![self.0.to_label(), self.1.to_label()])
    }
}

impl<T: ToLabel> ToLabel for Vec<T> {
    fn to_label(&self) -> Label {
        Label::Tuple(self.iter().map(ToLabel::to_label).collect())
    }
}

impl<A: ToLabel, B: ToLabel> ToLabel for Tagged<A, B> {
    fn to_label(&self) -> Label {
        match self {
            Tagged::Left(a) => Label::Tuple(vec![Label::Int(0), a.to_label()]),
            Tagged::Right(b) => Label::Tuple(vec![Label::Int(1), b.to_label()]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphDoc {
    pub vertices: Vec<Label>,
    pub edges: Vec<Vec<Label>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDoc {
    pub tail: Vec<Label>,
    pub head: Vec<Label>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedDoc {
    pub vertices: Vec<Label>,
    pub arcs: Vec<ArcDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLabelDoc {
    pub edge: [Label; 2],
    pub hyperedges: Vec<Vec<Label>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct L2SectionDoc {
    pub graph: HypergraphDoc,
    pub labels: Vec<EdgeLabelDoc>,
}

fn labels_of<V: ToLabel>(vertices: &[V], set: &[usize]) -> Vec<Label> {
    set.iter().map(|&i| vertices[i].to_label()).collect()
}

pub fn hypergraph_doc<V: ToLabel + hyperprod_core::Vertex>(h: &Hypergraph<V>) -> HypergraphDoc {
    HypergraphDoc {
        vertices: h.vertices().iter().map(ToLabel::to_label).collect(),
        edges: h.edges().iter().map(|e| labels_of(h.vertices(), e)).collect(),
    }
}

pub fn hypergraph_value<V: ToLabel + hyperprod_core::Vertex>(h: &Hypergraph<V>) -> Value {
    serde_json::to_value(hypergraph_doc(h)).expect("documents serialize")
}

impl HypergraphDoc {
    pub fn build(&self) -> Result<Hypergraph<Label>, JsonError> {
        Ok(Hypergraph::new(self.vertices.clone(), self.edges.clone())?)
    }
}

pub fn directed_doc<V: ToLabel + hyperprod_core::Vertex>(d: &DirectedHypergraph<V>) -> DirectedDoc {
    DirectedDoc {
        vertices: d.vertices().iter().map(ToLabel::to_label).collect(),
        arcs: d
            .arcs()
            .iter()
            .map(|a| ArcDoc { tail: labels_of(d.vertices(), &a.tail), head: labels_of(d.vertices(), &a.head) })
            .collect(),
    }
}

impl DirectedDoc {
    pub fn build(&self) -> Result<DirectedHypergraph<Label>, JsonError> {
        let arcs = self.arcs.iter().map(|a| (a.tail.clone(), a.head.clone()));
        Ok(DirectedHypergraph::new(self.vertices.clone(), arcs)?)
    }
}

pub fn section_doc<V: ToLabel + hyperprod_core::Vertex>(s: &L2Section<V>) -> L2SectionDoc {
    let graph = s.graph();
    let hyper = |e: &Vec<usize>| labels_of(graph.vertices(), e);
    L2SectionDoc {
        graph: hypergraph_doc(graph),
        labels: s
            .labels()
            .iter()
            .map(|(&(a, b), hs)| EdgeLabelDoc {
                edge: [graph.vertex(a).to_label(), graph.vertex(b).to_label()],
                hyperedges: hs.iter().map(hyper).collect(),
            })
            .collect(),
    }
}

impl L2SectionDoc {
    pub fn build(&self) -> Result<L2Section<Label>, JsonError> {
        let graph = self.graph.build()?;
        let index = |l: &Label| {
            graph
                .index_of(l)
                .ok_or_else(|| hyperprod_core::Error::UnknownVertex(format!("{l:?}")))
        };
        let mut labels = BTreeMap::new();
        for entry in &self.labels {
            let (a, b) = (index(&entry.edge[0])?, index(&entry.edge[1])?);
            let key = (a.min(b), a.max(b));
            let mut sets = Vec::new();
            for h in &entry.hyperedges {
                let mut set = h.iter().map(&index).collect::<Result<Vec<_>, _>>()?;
                set.sort_unstable();
                set.dedup();
                sets.push(set);
            }
            labels.insert(key, sets);
        }
        Ok(L2Section::new(graph, labels)?)
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph<Label>, JsonError> {
    serde_json::from_str::<HypergraphDoc>(text)?.build()
}

pub fn parse_directed(text: &str) -> Result<DirectedHypergraph<Label>, JsonError> {
    serde_json::from_str::<DirectedDoc>(text)?.build()
}

pub fn parse_section(text: &str) -> Result<L2Section<Label>, JsonError> {
    serde_json::from_str::<L2SectionDoc>(text)?.build()
}

pub fn ext_nat_value(n: ExtNat) -> Value {
    match n {
        ExtNat::Finite(k) => Value::from(k),
        ExtNat::Infinite => Value::from("inf"),
    }
}

pub fn rational_value(r: &Rational) -> Value {
    Value::from(format!("{}/{}", r.numer(), r.denom()))
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents serialize");
    out.push('\n');
    out
}
