//! The graph monoid `M_(E,w)`: the free abelian monoid on the vertices modulo
//! `w(v)·v = Σ_{e ∈ s⁻¹(v)} r(e)` for every regular vertex `v`.
//!
//! Equality is only semi-decided. [`GraphMonoid::equal`] either finds a
//! replayable chain of relation applications or answers
//! [`Verdict::Unknown`]; it never claims two elements differ.

mod parse;
mod search;
mod types;

use std::fmt;

use thiserror::Error;

use crate::algebra::ParseError;
use crate::graph::{GraphError, WeightedGraph};

pub use search::{Direction, EqualityCertificate, SearchLimits, Verdict, WitnessStep};
pub use types::ModuleType;

/// Default number of relation applications searched.
pub const DEFAULT_DEPTH: u32 = 8;
/// Default cap on visited states before giving up.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("count overflow")]
    Overflow,
    #[error("element has {got} entries, the graph has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
}

/// An element of `𝔽_E = ℕ^(E⁰)`, indexed by vertex position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidElement {
    counts: Vec<u64>,
}

impl MonoidElement {
    pub fn zero(n: usize) -> Self {
        MonoidElement { counts: vec![0; n] }
    }

    pub fn unit(n: usize, v: usize) -> Self {
        let mut x = Self::zero(n);
        x.counts[v] = 1;
        x
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        MonoidElement { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, v: usize) -> u64 {
        self.counts[v]
    }

    pub fn set(&mut self, v: usize, c: u64) {
        self.counts[v] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Vertex positions with a nonzero count.
    pub fn support(&self) -> Vec<usize> {
        (0..self.counts.len())
            .filter(|&v| self.counts[v] > 0)
            .collect()
    }

    /// Componentwise `self ≥ other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.counts.iter().zip(&other.counts).all(|(a, b)| a >= b)
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<_>>()?;
        Some(MonoidElement { counts })
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<_>>()?;
        Some(MonoidElement { counts })
    }

    pub fn checked_scale(&self, k: u64) -> Option<Self> {
        let counts = self
            .counts
            .iter()
            .map(|a| a.checked_mul(k))
            .collect::<Option<_>>()?;
        Some(MonoidElement { counts })
    }
}

/// `lhs = w(v)·v`, `rhs = Σ r(e)` over the edges leaving `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidRelation {
    pub vertex: usize,
    pub lhs: MonoidElement,
    pub rhs: MonoidElement,
}

/// The monoid of a vertex-weighted graph.
#[derive(Debug, Clone)]
pub struct GraphMonoid {
    graph: WeightedGraph,
    relations: Vec<MonoidRelation>,
}

impl GraphMonoid {
    pub fn new(g: &WeightedGraph) -> Result<GraphMonoid, MonoidError> {
        if !g.is_vertex_weighted() {
            return Err(GraphError::NotVertexWeighted.into());
        }
        let n = g.vertex_count();
        let mut relations = Vec::new();
        for v in 0..n {
            let Ok(w) = g.vertex_weight(v) else { continue };
            let mut lhs = MonoidElement::zero(n);
            lhs.counts[v] = w as u64;
            let mut rhs = MonoidElement::zero(n);
            for &e in g.out_edges(v) {
                rhs.counts[g.edge(e).dst] += 1;
            }
            relations.push(MonoidRelation {
                vertex: v,
                lhs,
                rhs,
            });
        }
        Ok(GraphMonoid {
            graph: g.clone(),
            relations,
        })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    /// One relation per regular vertex, in vertex order.
    pub fn relations(&self) -> &[MonoidRelation] {
        &self.relations
    }

    pub fn relation_at(&self, v: usize) -> Option<&MonoidRelation> {
        self.relations.iter().find(|r| r.vertex == v)
    }

    pub fn zero(&self) -> MonoidElement {
        MonoidElement::zero(self.graph.vertex_count())
    }

    /// The order unit `Σ_{v ∈ E⁰} v`.
    pub fn order_unit(&self) -> MonoidElement {
        MonoidElement::from_counts(vec![1; self.graph.vertex_count()])
    }

    pub fn unit(&self, id: &str) -> Result<MonoidElement, MonoidError> {
        let v = self.graph.require_vertex(id)?;
        Ok(MonoidElement::unit(self.graph.vertex_count(), v))
    }

    pub fn from_map<'a>(
        &self,
        counts: impl IntoIterator<Item = (&'a str, u64)>,
    ) -> Result<MonoidElement, MonoidError> {
        let mut x = self.zero();
        for (id, c) in counts {
            let v = self.graph.require_vertex(id)?;
            x.counts[v] = x.counts[v].checked_add(c).ok_or(MonoidError::Overflow)?;
        }
        Ok(x)
    }

    /// Nonzero counts keyed by vertex id.
    pub fn to_map(&self, x: &MonoidElement) -> Vec<(String, u64)> {
        x.support()
            .into_iter()
            .map(|v| (self.graph.vertex_id(v).to_string(), x.counts[v]))
            .collect()
    }

    pub(crate) fn check(&self, x: &MonoidElement) -> Result<(), MonoidError> {
        let expected = self.graph.vertex_count();
        if x.counts.len() == expected {
            Ok(())
        } else {
            Err(MonoidError::WrongLength {
                expected,
                got: x.counts.len(),
            })
        }
    }

    /// `x` with the relation at `v` applied once in `direction`, if `x`
    /// contains the consumed side.
    pub fn apply(
        &self,
        x: &MonoidElement,
        v: usize,
        direction: Direction,
    ) -> Option<MonoidElement> {
        let r = self.relation_at(v)?;
        let (take, give) = match direction {
            Direction::Forward => (&r.lhs, &r.rhs),
            Direction::Backward => (&r.rhs, &r.lhs),
        };
        x.checked_sub(take)?.checked_add(give)
    }

    pub fn format(&self, x: &MonoidElement) -> String {
        Display(self, x).to_string()
    }
}

struct Display<'a>(&'a GraphMonoid, &'a MonoidElement);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.1.support();
        if support.is_empty() {
            return f.write_str("0");
        }
        for (k, v) in support.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let c = self.1.counts[v];
            let id = self.0.graph.vertex_id(v);
            if c == 1 {
                f.write_str(id)?;
            } else {
                write!(f, "{c}*{id}")?;
            }
        }
        Ok(())
    }
}
