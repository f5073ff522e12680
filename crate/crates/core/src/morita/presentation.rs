use std::collections::BTreeMap;

use super::MoritaError;
use crate::graph::{GraphError, VertexSet, WeightedGraph};
use crate::monoid::{GraphMonoid, MonoidElement};

/// `P ≅ ⊕_v (Lv)^{m_v}`, stored as the nonzero `m_v` by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePresentation {
    multiplicities: BTreeMap<String, u64>,
}

impl ProjectivePresentation {
    /// Zero entries are dropped; at least one must remain and every id must
    /// be a vertex of `g`.
    pub fn new(
        g: &WeightedGraph,
        multiplicities: BTreeMap<String, u64>,
    ) -> Result<Self, MoritaError> {
        for v in multiplicities.keys() {
            g.require_vertex(v)?;
        }
        let multiplicities: BTreeMap<_, _> =
            multiplicities.into_iter().filter(|&(_, c)| c > 0).collect();
        if multiplicities.is_empty() {
            return Err(MoritaError::EmptyPresentation);
        }
        Ok(ProjectivePresentation { multiplicities })
    }

    /// `⊕_{v ∈ W} Lv`.
    pub fn indicator(g: &WeightedGraph, w: &VertexSet) -> Result<Self, MoritaError> {
        Self::new(g, w.iter().map(|v| (v.to_string(), 1)).collect())
    }

    /// Parses `v1=2,v3=1`. Repeated ids add up.
    pub fn parse(g: &WeightedGraph, s: &str) -> Result<Self, MoritaError> {
        let mut out: BTreeMap<String, u64> = BTreeMap::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (id, count) = part
                .split_once('=')
                .ok_or_else(|| GraphError::UnknownVertex(part.to_string()))?;
            let count: u64 = count
                .trim()
                .parse()
                .map_err(|_| MoritaError::Internal(format!("bad multiplicity in `{part}`")))?;
            let slot = out.entry(id.trim().to_string()).or_default();
            *slot = slot.checked_add(count).ok_or(MoritaError::Overflow)?;
        }
        Self::new(g, out)
    }

    pub fn multiplicities(&self) -> &BTreeMap<String, u64> {
        &self.multiplicities
    }

    pub fn support(&self) -> VertexSet {
        self.multiplicities.keys().cloned().collect()
    }

    pub(crate) fn to_element(&self, m: &GraphMonoid) -> Result<MonoidElement, MoritaError> {
        Ok(m.from_map(self.multiplicities.iter().map(|(k, &v)| (k.as_str(), v)))?)
    }
}
