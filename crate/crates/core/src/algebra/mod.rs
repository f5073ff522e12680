//! Exact arithmetic in the weighted Leavitt path algebra `L_k(E, w)`.
//!
//! Elements are stored in the basis of normal generalized paths: composable
//! words in `e_i`, `e_i*` containing no forbidden factor
//! `α^v_i (α^v_j)*` or `e_1* f_1`. Every operation rewrites its result back
//! into that basis (see [`reduce`](Algebra::reduce)).
//!
//! ```
//! use wlpa::{algebra::Algebra, fixtures};
//! let alg = Algebra::new(&fixtures::loop_and_exit()).unwrap();
//! let x = alg.parse("e[1]* f[1]").unwrap();
//! assert_eq!(alg.format(&x), "-e[2]*f[2]");
//! ```

mod alpha;
mod basis;
pub(crate) mod expr;
mod path;
mod quotient;
mod reduce;
mod relations;
mod scalar;

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::graph::WeightedGraph;

pub use alpha::AlphaChoice;
pub use expr::ParseError;
pub use path::{Generator, Letter, Path};
pub use quotient::Quotient;
pub use reduce::{Leftmost, RedexSelector};
pub use relations::{RelationInstance, Residual};
pub use scalar::{Field, Scalar};

/// Default rewrite budget per reduction.
pub const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("modulus {0} is not a prime below 2^31")]
    BadModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("index {index} out of range for edge `{edge}` of weight {weight}")]
    IndexOutOfRange {
        edge: String,
        index: u32,
        weight: u32,
    },
    #[error("`{edge}` is not a maximal-weight edge leaving `{vertex}`")]
    BadAlpha { vertex: String, edge: String },
    #[error("alpha choice does not cover every regular vertex")]
    IncompleteAlpha,
    #[error("word is not composable at position {0}")]
    NonComposable(usize),
    #[error("empty word")]
    EmptyWord,
    #[error("rewrite budget of {0} steps exhausted; the rewriting system should terminate, this is a bug")]
    FuelExhausted(u64),
    #[error("elements belong to different algebras")]
    MixedAmbient,
    #[error("the algebra of the empty graph is not supported here")]
    EmptyGraph,
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Knobs for building an [`Algebra`].
#[derive(Debug, Clone)]
pub struct AlgebraOptions {
    pub field: Field,
    pub alpha: Option<AlphaChoice>,
    pub fuel: u64,
}

impl Default for AlgebraOptions {
    fn default() -> Self {
        AlgebraOptions {
            field: Field::Rational,
            alpha: None,
            fuel: DEFAULT_FUEL,
        }
    }
}

/// A finite linear combination of normal generalized paths. Zero is the
/// empty map; no zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Path, Scalar>,
    ambient: u64,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Path) -> Option<&Scalar> {
        self.terms.get(p)
    }
}

/// `L_k(E, w)` for a fixed graph, choice of `α`, and coefficient field, with
/// lookup tables for the rewriting engine.
#[derive(Debug, Clone)]
pub struct Algebra {
    graph: WeightedGraph,
    alpha: AlphaChoice,
    field: Field,
    fuel: u64,
    fingerprint: u64,
    src: Vec<u32>,
    dst: Vec<u32>,
    weight: Vec<u32>,
    is_alpha: Vec<bool>,
}

impl Algebra {
    pub fn new(g: &WeightedGraph) -> Result<Algebra, AlgebraError> {
        Self::with_options(g, AlgebraOptions::default())
    }

    pub fn with_options(g: &WeightedGraph, opts: AlgebraOptions) -> Result<Algebra, AlgebraError> {
        if g.is_empty() {
            return Err(AlgebraError::EmptyGraph);
        }
        Self::build(g, opts)
    }

    /// Also accepts the empty graph, whose algebra is zero. Used for quotients.
    pub(crate) fn build(g: &WeightedGraph, opts: AlgebraOptions) -> Result<Algebra, AlgebraError> {
        if let Field::Prime(p) = opts.field {
            Field::prime(p)?;
        }
        let alpha = match opts.alpha {
            Some(a) => {
                a.check(g)?;
                a
            }
            None => AlphaChoice::default_for(g),
        };
        let mut is_alpha = vec![false; g.edge_count()];
        for (_, e) in alpha.iter() {
            is_alpha[g.edge_by_id(e).expect("checked alpha")] = true;
        }
        let mut hasher = DefaultHasher::new();
        g.to_json().hash(&mut hasher);
        alpha.hash(&mut hasher);
        opts.field.hash(&mut hasher);
        Ok(Algebra {
            src: g.edges().iter().map(|e| e.src as u32).collect(),
            dst: g.edges().iter().map(|e| e.dst as u32).collect(),
            weight: g.edges().iter().map(|e| e.weight).collect(),
            graph: g.clone(),
            alpha,
            field: opts.field,
            fuel: opts.fuel,
            fingerprint: hasher.finish(),
            is_alpha,
        })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn alpha(&self) -> &AlphaChoice {
        &self.alpha
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }

    pub(crate) fn options(&self) -> AlgebraOptions {
        AlgebraOptions {
            field: self.field,
            alpha: Some(self.alpha.clone()),
            fuel: self.fuel,
        }
    }

    // Letter geometry: s(e_i) = s(e), r(e_i) = r(e), s(e_i*) = r(e), r(e_i*) = s(e).

    pub(crate) fn letter_src(&self, l: Letter) -> u32 {
        if l.star {
            self.dst[l.edge as usize]
        } else {
            self.src[l.edge as usize]
        }
    }

    pub(crate) fn letter_dst(&self, l: Letter) -> u32 {
        if l.star {
            self.src[l.edge as usize]
        } else {
            self.dst[l.edge as usize]
        }
    }

    pub(crate) fn edge_weight(&self, e: u32) -> u32 {
        self.weight[e as usize]
    }

    pub(crate) fn edge_is_alpha(&self, e: u32) -> bool {
        self.is_alpha[e as usize]
    }

    pub(crate) fn edge_src(&self, e: u32) -> u32 {
        self.src[e as usize]
    }

    pub(crate) fn edge_dst(&self, e: u32) -> u32 {
        self.dst[e as usize]
    }

    fn path_src(&self, p: &Path) -> u32 {
        match p {
            Path::Vertex(v) => *v,
            Path::Word(w) => self.letter_src(w[0]),
        }
    }

    fn path_dst(&self, p: &Path) -> u32 {
        match p {
            Path::Vertex(v) => *v,
            Path::Word(w) => self.letter_dst(*w.last().expect("nonempty word")),
        }
    }

    // Construction.

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            terms: BTreeMap::new(),
            ambient: self.fingerprint,
        }
    }

    pub(crate) fn element(&self, terms: BTreeMap<Path, Scalar>) -> AlgebraElement {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        AlgebraElement {
            terms,
            ambient: self.fingerprint,
        }
    }

    /// `1 = Σ_{v ∈ E⁰} v`.
    pub fn one(&self) -> AlgebraElement {
        self.element(
            (0..self.graph.vertex_count())
                .map(|v| (Path::Vertex(v as u32), self.field.one()))
                .collect(),
        )
    }

    pub fn vertex(&self, id: &str) -> Result<AlgebraElement, AlgebraError> {
        let v = self
            .graph
            .vertex(id)
            .ok_or_else(|| AlgebraError::UnknownVertex(id.to_string()))?;
        Ok(self.element([(Path::Vertex(v as u32), self.field.one())].into()))
    }

    /// Looks up `e_i` (or `e_i*`), checking `1 ≤ i ≤ w(e)`.
    pub fn letter(&self, edge: &str, index: u32, star: bool) -> Result<Letter, AlgebraError> {
        let e = self
            .graph
            .edge_by_id(edge)
            .ok_or_else(|| AlgebraError::UnknownEdge(edge.to_string()))?;
        let weight = self.weight[e];
        if index == 0 || index > weight {
            return Err(AlgebraError::IndexOutOfRange {
                edge: edge.to_string(),
                index,
                weight,
            });
        }
        Ok(Letter::new(e, index, star))
    }

    /// The element given by a single generalized path, which must be
    /// composable. The result is reduced.
    pub fn path(&self, word: &[Generator]) -> Result<AlgebraElement, AlgebraError> {
        self.reduce(&[(self.field.one(), word.to_vec())])
    }

    pub fn generator(&self, g: Generator) -> AlgebraElement {
        self.path(&[g]).expect("single generators are composable")
    }

    /// Turns a composable word of generators into a generalized path,
    /// absorbing vertices. Non-composable words are rejected.
    pub(crate) fn word_to_path(&self, word: &[Generator]) -> Result<Path, AlgebraError> {
        let ends = |g: &Generator| match g {
            Generator::Vertex(v) => (*v, *v),
            Generator::Letter(l) => (self.letter_src(*l), self.letter_dst(*l)),
        };
        let first = word.first().ok_or(AlgebraError::EmptyWord)?;
        for (i, pair) in word.windows(2).enumerate() {
            if ends(&pair[0]).1 != ends(&pair[1]).0 {
                return Err(AlgebraError::NonComposable(i + 1));
            }
        }
        let letters: Vec<Letter> = word
            .iter()
            .filter_map(|g| match g {
                Generator::Letter(l) => Some(*l),
                Generator::Vertex(_) => None,
            })
            .collect();
        Ok(if letters.is_empty() {
            Path::Vertex(ends(first).0)
        } else {
            Path::Word(letters)
        })
    }

    fn check(&self, x: &AlgebraElement) -> Result<(), AlgebraError> {
        if x.ambient == self.fingerprint {
            Ok(())
        } else {
            Err(AlgebraError::MixedAmbient)
        }
    }

    // Arithmetic.

    pub fn add(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        let mut terms = x.terms.clone();
        for (p, c) in &y.terms {
            accumulate(self.field, &mut terms, p.clone(), c.clone());
        }
        Ok(self.element(terms))
    }

    pub fn sub(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        let neg = self.scalar_mul(&self.field.from_i64(-1), y)?;
        self.add(x, &neg)
    }

    pub fn scalar_mul(
        &self,
        c: &Scalar,
        x: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check(x)?;
        if !self.field.contains(c) {
            return Err(AlgebraError::MixedAmbient);
        }
        if c.is_zero() {
            return Ok(self.zero());
        }
        Ok(self.element(
            x.terms
                .iter()
                .map(|(p, a)| (p.clone(), self.field.mul(c, a)))
                .collect(),
        ))
    }

    /// Concatenates basis words pairwise (non-composable products are zero)
    /// and reduces the result.
    pub fn multiply(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        let mut raw: Vec<(Scalar, Path)> = Vec::new();
        for (p, a) in &x.terms {
            for (q, b) in &y.terms {
                if let Some(pq) = self.concat(p, q) {
                    raw.push((self.field.mul(a, b), pq));
                }
            }
        }
        self.reduce_paths(raw, &mut Leftmost)
    }

    fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.path_dst(p) != self.path_src(q) {
            return None;
        }
        Some(match (p, q) {
            (Path::Vertex(_), _) => q.clone(),
            (_, Path::Vertex(_)) => p.clone(),
            (Path::Word(a), Path::Word(b)) => {
                let mut w = Vec::with_capacity(a.len() + b.len());
                w.extend_from_slice(a);
                w.extend_from_slice(b);
                Path::Word(w)
            }
        })
    }

    /// The linear, anti-multiplicative involution `v ↦ v`, `e_i ↦ e_i*`,
    /// `e_i* ↦ e_i`.
    pub fn involution(&self, x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(x)?;
        let raw = x
            .terms
            .iter()
            .map(|(p, c)| (c.clone(), p.adjoint()))
            .collect();
        self.reduce_paths(raw, &mut Leftmost)
    }

    /// Canonical term order: length, then generator by generator on
    /// (kind, id, index, star) with vertices before edge letters.
    pub fn canonical_cmp(&self, a: &Path, b: &Path) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| match (a, b) {
            (Path::Vertex(u), Path::Vertex(v)) => self
                .graph
                .vertex_id(*u as usize)
                .cmp(self.graph.vertex_id(*v as usize)),
            (Path::Vertex(_), Path::Word(_)) => Ordering::Less,
            (Path::Word(_), Path::Vertex(_)) => Ordering::Greater,
            (Path::Word(x), Path::Word(y)) => {
                for (l, m) in x.iter().zip(y) {
                    let ord = self
                        .graph
                        .edge(l.edge as usize)
                        .id
                        .cmp(&self.graph.edge(m.edge as usize).id)
                        .then(l.index.cmp(&m.index))
                        .then(l.star.cmp(&m.star));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            }
        })
    }

    /// Terms of `x` in canonical order.
    pub fn sorted_terms<'a>(&self, x: &'a AlgebraElement) -> Vec<(&'a Path, &'a Scalar)> {
        let mut terms: Vec<_> = x.terms.iter().collect();
        terms.sort_by(|a, b| self.canonical_cmp(a.0, b.0));
        terms
    }

    pub fn is_normal(&self, p: &Path) -> bool {
        match p {
            Path::Vertex(_) => true,
            Path::Word(w) => w
                .windows(2)
                .all(|pair| !self.is_forbidden(pair[0], pair[1])),
        }
    }
}

pub(crate) fn accumulate(field: Field, terms: &mut BTreeMap<Path, Scalar>, p: Path, c: Scalar) {
    use std::collections::btree_map::Entry;
    match terms.entry(p) {
        Entry::Vacant(slot) => {
            if !c.is_zero() {
                slot.insert(c);
            }
        }
        Entry::Occupied(mut slot) => {
            let sum = field.add(slot.get(), &c);
            if sum.is_zero() {
                slot.remove();
            } else {
                slot.insert(sum);
            }
        }
    }
}
