//! Progenerator decompositions and the graphs that realize matrix algebras
//! over corners and endomorphism rings.
//!
//! A finitely generated projective module `P ≅ ⊕ (Lv)^{m_v}` is represented
//! by its class `Σ m_v·v` in the graph monoid. [`decompose_progenerator`]
//! finds `n` and `n_v ≥ 1` on the hereditary saturated closure `H` of the
//! support with `n·[P] = Σ_{v ∈ H} n_v·v`, together with a replayable chain
//! of relation applications proving it.

mod presentation;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::graph::{GraphError, VertexSet, WeightedGraph};
use crate::monoid::{
    Direction, GraphMonoid, MonoidElement, MonoidError, SearchLimits, WitnessStep,
};

pub use presentation::ProjectivePresentation;

/// Longest witness the decomposition will spell out step by step.
pub const MAX_WITNESS_STEPS: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoritaError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("the module has empty support")]
    EmptyPresentation,
    #[error("the module is not a generator: its support closes to {closure}, not every vertex")]
    NotGenerator { closure: VertexSet },
    #[error("{0} is not a full vertex set")]
    NotFull(VertexSet),
    #[error("counts no longer fit in 64 bits")]
    Overflow,
    #[error("the witness would exceed {MAX_WITNESS_STEPS} relation applications")]
    WitnessTooLong,
    #[error("internal check failed: {0}; this is a bug")]
    Internal(String),
}

/// How a vertex entered the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Growth {
    /// Reached along `edge` from `from`; one forward relation at `from`.
    Hereditary { from: String, edge: String },
    /// All ranges already present; one backward relation at the vertex.
    Saturated,
}

/// One entry of the audit trail: the whole multiset was multiplied by
/// `factor` before `vertex` was brought in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingStep {
    pub vertex: String,
    pub growth: Growth,
    pub factor: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionResult {
    pub n: BigUint,
    /// Positive on exactly the closure of the support.
    pub multiplicities: BTreeMap<String, u64>,
    /// Relation applications from `n·[P]` to `Σ n_v·v`.
    pub witness: Vec<WitnessStep>,
    pub steps: Vec<ScalingStep>,
}

impl DecompositionResult {
    /// Product of all scaling factors; always equals `n`.
    pub fn audited_exponent(&self) -> BigUint {
        self.steps
            .iter()
            .fold(BigUint::one(), |acc, s| acc * BigUint::from(s.factor))
    }
}

fn loops(g: &WeightedGraph, u: usize) -> u64 {
    g.out_edges(u)
        .iter()
        .filter(|&&e| g.edge(e).dst == u)
        .count() as u64
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn rescale(current: &mut MonoidElement, scale: &mut u64, k: u64) -> Result<(), MoritaError> {
    *current = current.checked_scale(k).ok_or(MoritaError::Overflow)?;
    *scale = scale.checked_mul(k).ok_or(MoritaError::Overflow)?;
    Ok(())
}

/// Runs the layer-by-layer construction over the closure iteration of the
/// support of `p`.
///
/// For a vertex `z` reached along the smallest-id edge from some `u` already
/// present, the multiset is scaled by the least `k` with
/// `k·c(u) ≥ max(w(u), w(u) + 1 − loops(u))` and `w(u)·u` is replaced by the
/// ranges of `u`; this keeps `c(u) ≥ 1` afterwards, counting the copies of
/// `u` the loops give back. For a saturated vertex `z`, the multiset is scaled
/// until every range `x` of `z` has `c(x) ≥ mult(x) + 1`, then the ranges are
/// replaced by `w(z)·z`.
pub fn decompose_progenerator(
    g: &WeightedGraph,
    p: &ProjectivePresentation,
) -> Result<DecompositionResult, MoritaError> {
    let monoid = GraphMonoid::new(g)?;
    let start = p.to_element(&monoid)?;
    let support = p.support();
    let layers = g.closure_layers(&support)?;

    let mut inside = vec![false; g.vertex_count()];
    for v in start.support() {
        inside[v] = true;
    }
    let mut current = start.clone();
    let mut scale = 1u64;
    // (vertex, direction, scale at which it was applied)
    let mut ops: Vec<(usize, Direction, u64)> = Vec::new();
    let mut steps = Vec::new();

    for layer in &layers {
        let before = inside.clone();
        for z_id in &layer.hereditary {
            let z = g.require_vertex(z_id)?;
            if current.get(z) >= 1 {
                continue;
            }
            let e = g
                .in_edges(z)
                .iter()
                .copied()
                .filter(|&e| before[g.edge(e).src])
                .min_by(|&a, &b| g.edge(a).id.cmp(&g.edge(b).id))
                .ok_or_else(|| MoritaError::Internal(format!("no edge into `{z_id}`")))?;
            let u = g.edge(e).src;
            let w = g.vertex_weight(u)? as u64;
            let need = w.max((w + 1).saturating_sub(loops(g, u)));
            let k = ceil_div(need, current.get(u)).max(1);
            rescale(&mut current, &mut scale, k)?;
            current = monoid
                .apply(&current, u, Direction::Forward)
                .ok_or_else(|| {
                    MoritaError::Internal(format!("cannot expand `{}`", g.vertex_id(u)))
                })?;
            ops.push((u, Direction::Forward, scale));
            steps.push(ScalingStep {
                vertex: z_id.clone(),
                growth: Growth::Hereditary {
                    from: g.vertex_id(u).to_string(),
                    edge: g.edge(e).id.clone(),
                },
                factor: k,
            });
        }
        for z_id in &layer.saturated {
            let z = g.require_vertex(z_id)?;
            let mut k = 1;
            let rel = monoid
                .relation_at(z)
                .ok_or_else(|| MoritaError::Internal(format!("`{z_id}` is not regular")))?;
            for x in rel.rhs.support() {
                k = k.max(ceil_div(rel.rhs.get(x) + 1, current.get(x)));
            }
            rescale(&mut current, &mut scale, k)?;
            current = monoid
                .apply(&current, z, Direction::Backward)
                .ok_or_else(|| MoritaError::Internal(format!("cannot contract into `{z_id}`")))?;
            ops.push((z, Direction::Backward, scale));
            steps.push(ScalingStep {
                vertex: z_id.clone(),
                growth: Growth::Saturated,
                factor: k,
            });
        }
        for v in layer.hereditary.iter().chain(&layer.saturated) {
            inside[g.require_vertex(v)?] = true;
        }
    }

    // Spell out the witness at the final scale: an operation recorded at
    // scale `s` is applied `scale / s` times in a row, once per copy.
    let mut witness = Vec::new();
    let mut at = start.checked_scale(scale).ok_or(MoritaError::Overflow)?;
    for &(v, direction, s) in &ops {
        for _ in 0..scale / s {
            if witness.len() >= MAX_WITNESS_STEPS {
                return Err(MoritaError::WitnessTooLong);
            }
            let next = monoid
                .apply(&at, v, direction)
                .ok_or_else(|| MoritaError::Internal("witness step does not apply".into()))?;
            witness.push(WitnessStep {
                vertex: v,
                direction,
                at,
            });
            at = next;
        }
    }

    let result = DecompositionResult {
        n: BigUint::from(scale),
        multiplicities: monoid.to_map(&current).into_iter().collect(),
        witness,
        steps,
    };
    self_check(g, &monoid, &start, &current, scale, &result)?;
    Ok(result)
}

fn self_check(
    g: &WeightedGraph,
    monoid: &GraphMonoid,
    start: &MonoidElement,
    end: &MonoidElement,
    scale: u64,
    r: &DecompositionResult,
) -> Result<(), MoritaError> {
    let seed: VertexSet = start
        .support()
        .iter()
        .map(|&v| g.vertex_id(v).to_string())
        .collect();
    let closure = g.hereditary_saturated_closure(&seed)?;
    let support: VertexSet = r.multiplicities.keys().cloned().collect();
    if support != closure {
        return Err(MoritaError::Internal(format!(
            "support {support} is not the closure {closure}"
        )));
    }
    if r.audited_exponent() != r.n {
        return Err(MoritaError::Internal(
            "audit trail does not reproduce n".into(),
        ));
    }
    let from = start.checked_scale(scale).ok_or(MoritaError::Overflow)?;
    if !monoid.replay(&from, end, &r.witness) {
        return Err(MoritaError::Internal("witness does not replay".into()));
    }
    Ok(())
}

/// Accepts `(n, {n_v})` when the support of `{n_v}` is the closure of the
/// support of `p`, every `n_v ≥ 1`, and the monoid search proves
/// `n·[P] = Σ n_v·v` within `depth` steps.
pub fn verify_decomposition(
    g: &WeightedGraph,
    p: &ProjectivePresentation,
    n: &BigUint,
    multiplicities: &BTreeMap<String, u64>,
    depth: u32,
) -> Result<bool, MoritaError> {
    let monoid = GraphMonoid::new(g)?;
    let start = p.to_element(&monoid)?;
    let closure = g.hereditary_saturated_closure(&p.support())?;
    let support: VertexSet = multiplicities.keys().cloned().collect();
    if support != closure || multiplicities.values().any(|&c| c == 0) {
        return Ok(false);
    }
    let Some(n) = n.to_u64() else {
        return Err(MoritaError::Overflow);
    };
    if n == 0 {
        return Ok(false);
    }
    let x = start.checked_scale(n).ok_or(MoritaError::Overflow)?;
    let y = monoid.from_map(multiplicities.iter().map(|(k, &v)| (k.as_str(), v)))?;
    Ok(monoid
        .equal_with(&x, &y, SearchLimits::depth(depth))?
        .is_equal())
}

/// `n` and `E⁺` with `𝕄_n(End(P)) ≅ L_k(E⁺, w⁺)`, where `E⁺` is the hair
/// extension with head lengths `n_v` from the decomposition of `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub n: BigUint,
    pub graph: WeightedGraph,
    pub hair_lengths: BTreeMap<String, u32>,
    pub decomposition: DecompositionResult,
}

pub fn endomorphism_realization(
    g: &WeightedGraph,
    p: &ProjectivePresentation,
) -> Result<Realization, MoritaError> {
    let closure = g.hereditary_saturated_closure(&p.support())?;
    if closure.len() != g.vertex_count() {
        return Err(MoritaError::NotGenerator { closure });
    }
    let decomposition = decompose_progenerator(g, p)?;
    let hair_lengths = decomposition
        .multiplicities
        .iter()
        .map(|(v, &c)| {
            Ok((
                v.clone(),
                u32::try_from(c).map_err(|_| MoritaError::Overflow)?,
            ))
        })
        .collect::<Result<BTreeMap<_, _>, MoritaError>>()?;
    let graph = g.hair_extension(&hair_lengths)?;
    Ok(Realization {
        n: decomposition.n.clone(),
        graph,
        hair_lengths,
        decomposition,
    })
}

/// Realization for the corner `εLε` of the full idempotent `ε = Σ_{v ∈ W} v`.
pub fn corner_realization(g: &WeightedGraph, w: &VertexSet) -> Result<Realization, MoritaError> {
    let p = ProjectivePresentation::indicator(g, w)?;
    let closure = g.hereditary_saturated_closure(w)?;
    if closure.len() != g.vertex_count() {
        return Err(MoritaError::NotFull(w.clone()));
    }
    endomorphism_realization(g, &p)
}

/// The graph whose algebra is `𝕄_n(L_k(E, w))`.
pub fn matrix_realization(g: &WeightedGraph, n: u32) -> Result<WeightedGraph, MoritaError> {
    Ok(g.matrix_extension(n)?)
}

/// Matrix extension of size `m`, then the corner of `W` inside it. The
/// returned graph is a hair extension of `𝕄_m E`.
pub fn morita_realization_pipeline(
    g: &WeightedGraph,
    m: u32,
    w: &VertexSet,
) -> Result<Realization, MoritaError> {
    let big = matrix_realization(g, m)?;
    corner_realization(&big, w)
}
