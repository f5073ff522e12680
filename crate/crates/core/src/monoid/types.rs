use super::{EqualityCertificate, GraphMonoid, MonoidError, SearchLimits};
use crate::graph::{GraphError, VertexSet};

/// A found module type `(m, n)` with the certificate for `m·𝟙 ~ n·𝟙`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleType {
    pub m: u64,
    pub n: u64,
    pub certificate: EqualityCertificate,
}

impl GraphMonoid {
    /// The lexicographically smallest `(m, n)` with `1 ≤ m < n`, `m ≤ m_max`,
    /// `n ≤ n_max` and `m·𝟙 ~ n·𝟙` found within `limits`, where `𝟙` is the
    /// sum of all vertices. `None` means no witness was found, not that the
    /// algebra has no such type.
    pub fn algebra_type(
        &self,
        m_max: u64,
        n_max: u64,
        limits: SearchLimits,
    ) -> Result<Option<ModuleType>, MonoidError> {
        let unit = self.order_unit();
        for m in 1..=m_max {
            let x = unit.checked_scale(m).ok_or(MonoidError::Overflow)?;
            for n in m + 1..=n_max {
                let y = unit.checked_scale(n).ok_or(MonoidError::Overflow)?;
                let certificate = self.equal_with(&x, &y, limits)?;
                if certificate.is_equal() {
                    return Ok(Some(ModuleType { m, n, certificate }));
                }
            }
        }
        Ok(None)
    }

    /// Whether `Σ_{v ∈ W} v` is a full idempotent, i.e. the hereditary
    /// saturated closure of `W` is every vertex.
    pub fn is_full_vertex_idempotent(&self, w: &VertexSet) -> Result<bool, MonoidError> {
        if w.is_empty() {
            return Err(GraphError::EmptySeed.into());
        }
        let closure = self.graph.hereditary_saturated_closure(w)?;
        Ok(closure.len() == self.graph.vertex_count())
    }
}
