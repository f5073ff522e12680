use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{GraphError, WeightedGraph};

/// A set of vertex ids. Iteration is in lexicographic id order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<String>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, id: impl Into<String>) -> bool {
        self.0.insert(id.into())
    }

    pub fn contains(&self, id: &str) -> bool {
        self.0.contains(id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).cloned().collect())
    }
}

impl<S: Into<String>> FromIterator<S> for VertexSet {
    fn from_iter<T: IntoIterator<Item = S>>(iter: T) -> Self {
        VertexSet(iter.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Parses `v1,v2,v3`. Blank entries are ignored, so `""` is the empty set.
impl FromStr for VertexSet {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect())
    }
}

/// Vertices added in one round of the closure iteration
/// `G_{n+1} = H(G_n) ∪ S(G_n) ∪ G_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureLayer {
    /// New vertices that are ranges of edges leaving `G_n`.
    pub hereditary: Vec<String>,
    /// New regular vertices all of whose edges land in `G_n`.
    pub saturated: Vec<String>,
}

impl WeightedGraph {
    /// Every edge with source in `h` has its range in `h`.
    pub fn is_hereditary(&self, h: &VertexSet) -> Result<bool, GraphError> {
        let mask = self.mask(h)?;
        Ok(self.edges().iter().all(|e| !mask[e.src] || mask[e.dst]))
    }

    /// No regular vertex outside `h` has `r(A_{v,i}) ⊆ h` for some `i ≤ w(v)`,
    /// where `A_{v,i}` are the edges leaving `v` of weight at least `i`.
    pub fn is_saturated(&self, h: &VertexSet) -> Result<bool, GraphError> {
        let mask = self.mask(h)?;
        if self.is_vertex_weighted() {
            // A_{v,i} = s⁻¹(v) for every i.
            return Ok((0..self.vertex_count()).all(|v| {
                mask[v]
                    || self.is_sink(v)
                    || self.out_edges(v).iter().any(|&e| !mask[self.edge(e).dst])
            }));
        }
        Ok((0..self.vertex_count()).all(|v| {
            if mask[v] || self.is_sink(v) {
                return true;
            }
            let top = self.vertex_weight(v).expect("regular vertex");
            (1..=top).all(|i| {
                self.out_edges(v)
                    .iter()
                    .map(|&e| self.edge(e))
                    .filter(|e| e.weight >= i)
                    .any(|e| !mask[e.dst])
            })
        }))
    }

    fn closure_preconditions(&self, x: &VertexSet) -> Result<Vec<bool>, GraphError> {
        if x.is_empty() {
            return Err(GraphError::EmptySeed);
        }
        let mask = self.mask(x)?;
        if !self.is_vertex_weighted() {
            return Err(GraphError::NotVertexWeighted);
        }
        Ok(mask)
    }

    /// Smallest hereditary and saturated set containing `x`.
    ///
    /// Worklist form of the `G_n` iteration: each vertex is added once, and a
    /// regular vertex joins as soon as its last outstanding edge range does.
    pub fn hereditary_saturated_closure(&self, x: &VertexSet) -> Result<VertexSet, GraphError> {
        let mut inside = self.closure_preconditions(x)?;
        let n = self.vertex_count();
        let mut missing: Vec<usize> = (0..n)
            .map(|v| {
                self.out_edges(v)
                    .iter()
                    .filter(|&&e| !inside[self.edge(e).dst])
                    .count()
            })
            .collect();
        // `missing` is relative to the current set, so only vertices added
        // after this point update it.
        let mut work: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
        let mut added: Vec<usize> = (0..n)
            .filter(|&v| !inside[v] && self.is_regular(v) && missing[v] == 0)
            .collect();
        loop {
            while let Some(v) = added.pop() {
                if inside[v] {
                    continue;
                }
                inside[v] = true;
                work.push(v);
                for &e in self.in_edges(v) {
                    let s = self.edge(e).src;
                    missing[s] -= 1;
                    if !inside[s] && missing[s] == 0 {
                        added.push(s);
                    }
                }
            }
            let Some(u) = work.pop() else { break };
            for &e in self.out_edges(u) {
                let d = self.edge(e).dst;
                if !inside[d] {
                    added.push(d);
                }
            }
        }
        Ok(self.set_from_mask(&inside))
    }

    /// The rounds of `G_{n+1} = H(G_n) ∪ S(G_n) ∪ G_n` starting from `G_0 = x`,
    /// stopping at the fixed point. A vertex reached both ways counts as
    /// hereditary. Each list is in id order.
    pub fn closure_layers(&self, x: &VertexSet) -> Result<Vec<ClosureLayer>, GraphError> {
        let mut inside = self.closure_preconditions(x)?;
        let order = self.vertices_by_id();
        let mut layers = Vec::new();
        loop {
            let mut reached = vec![false; self.vertex_count()];
            for e in self.edges() {
                if inside[e.src] && !inside[e.dst] {
                    reached[e.dst] = true;
                }
            }
            let hereditary: Vec<usize> = order.iter().copied().filter(|&v| reached[v]).collect();
            let saturated: Vec<usize> = order
                .iter()
                .copied()
                .filter(|&v| {
                    !inside[v]
                        && !reached[v]
                        && self.is_regular(v)
                        && self.out_edges(v).iter().all(|&e| inside[self.edge(e).dst])
                })
                .collect();
            if hereditary.is_empty() && saturated.is_empty() {
                break;
            }
            for &v in hereditary.iter().chain(&saturated) {
                inside[v] = true;
            }
            let ids = |vs: Vec<usize>| {
                vs.into_iter()
                    .map(|v| self.vertex_id(v).to_string())
                    .collect()
            };
            layers.push(ClosureLayer {
                hereditary: ids(hereditary),
                saturated: ids(saturated),
            });
        }
        Ok(layers)
    }
}
