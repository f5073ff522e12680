//! The rewriting engine.
//!
//! Relations (iii) and (iv) are oriented so that their left-hand sides are
//! exactly the forbidden words:
//!
//! ```text
//! A:  α_i (α_j)*  →  δ_ij v − Σ_{e ∈ s⁻¹(v), e ≠ α} e_i e_j*
//! B:  e_1* f_1    →  δ_ef r(e) − Σ_{i = 2..w} e_i* f_i
//! ```
//!
//! with any `e_i`, `e_i*` whose index exceeds `w(e)` dropped. Pending terms
//! are kept in a map ordered so that every right-hand side is strictly
//! smaller than the word it replaces; popping the largest word first means
//! each word is rewritten at most once and cancellations happen before any
//! work is spent on them.

use std::collections::BTreeMap;

use super::{accumulate, Algebra, AlgebraElement, AlgebraError, Generator, Letter, Path, Scalar};

/// Picks which forbidden factor to rewrite next.
pub trait RedexSelector {
    /// `redexes` holds the start positions of every forbidden factor in
    /// `word`, in increasing order. Returns an index into `redexes`.
    fn select(&mut self, word: &[Letter], redexes: &[usize]) -> usize;
}

/// Always rewrites the leftmost forbidden factor.
#[derive(Debug, Clone, Copy, Default)]
pub struct Leftmost;

impl RedexSelector for Leftmost {
    fn select(&mut self, _word: &[Letter], _redexes: &[usize]) -> usize {
        0
    }
}

impl<F: FnMut(&[Letter], &[usize]) -> usize> RedexSelector for F {
    fn select(&mut self, word: &[Letter], redexes: &[usize]) -> usize {
        self(word, redexes)
    }
}

/// Word with its precomputed monomial-order key.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Pending {
    ranks: Vec<u64>,
    word: Vec<Letter>,
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ranks
            .len()
            .cmp(&other.ranks.len())
            .then_with(|| self.ranks.cmp(&other.ranks))
    }
}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Algebra {
    /// Position in the monomial order. Starred letters sit above unstarred
    /// ones and prefer low indices; unstarred `α` letters sit above other
    /// unstarred letters. Rules A and B both strictly decrease this order.
    fn rank(&self, l: Letter) -> u64 {
        let edge = l.edge as u64;
        let index = l.index as u64;
        if l.star {
            (1 << 62) | ((u32::MAX as u64 - index) << 24) | edge
        } else {
            ((self.edge_is_alpha(l.edge) as u64) << 60) | (edge << 24) | index
        }
    }

    fn pending(&self, word: Vec<Letter>) -> Pending {
        Pending {
            ranks: word.iter().map(|&l| self.rank(l)).collect(),
            word,
        }
    }

    /// Whether the adjacent pair `a b` is one of the forbidden words
    /// `α^v_i (α^v_j)*` or `e_1* f_1` with `s(e) = s(f)`.
    pub fn is_forbidden(&self, a: Letter, b: Letter) -> bool {
        if !a.star && b.star {
            a.edge == b.edge && self.edge_is_alpha(a.edge)
        } else if a.star && !b.star {
            a.index == 1 && b.index == 1 && self.edge_src(a.edge) == self.edge_src(b.edge)
        } else {
            false
        }
    }

    /// Right-hand side of the rule whose redex is `a b`. `None` stands for the
    /// vertex term.
    fn rewrite(&self, a: Letter, b: Letter) -> Vec<(i64, Option<[Letter; 2]>, u32)> {
        let mut out = Vec::new();
        if !a.star {
            // Rule A at v = s(α).
            let v = self.edge_src(a.edge);
            let (i, j) = (a.index, b.index);
            if i == j {
                out.push((1, None, v));
            }
            for &e in self.graph.out_edges(v as usize) {
                let e = e as u32;
                if e == a.edge || self.edge_weight(e) < i.max(j) {
                    continue;
                }
                out.push((
                    -1,
                    Some([
                        Letter {
                            edge: e,
                            index: i,
                            star: false,
                        },
                        Letter {
                            edge: e,
                            index: j,
                            star: true,
                        },
                    ]),
                    v,
                ));
            }
        } else {
            // Rule B for e, f ∈ s⁻¹(v).
            let (e, f) = (a.edge, b.edge);
            if e == f {
                out.push((1, None, self.edge_dst(e)));
            }
            let top = self.edge_weight(e).min(self.edge_weight(f));
            for i in 2..=top {
                out.push((
                    -1,
                    Some([
                        Letter {
                            edge: e,
                            index: i,
                            star: true,
                        },
                        Letter {
                            edge: f,
                            index: i,
                            star: false,
                        },
                    ]),
                    0,
                ));
            }
        }
        out
    }

    fn redexes(&self, word: &[Letter]) -> Vec<usize> {
        (0..word.len().saturating_sub(1))
            .filter(|&k| self.is_forbidden(word[k], word[k + 1]))
            .collect()
    }

    /// Reduces a formal linear combination of composable words to its normal
    /// form, rewriting the leftmost forbidden factor first.
    pub fn reduce(&self, x: &[(Scalar, Vec<Generator>)]) -> Result<AlgebraElement, AlgebraError> {
        self.reduce_with(x, &mut Leftmost)
    }

    /// As [`reduce`](Self::reduce), letting `selector` choose each redex.
    /// The result does not depend on the choices made.
    pub fn reduce_with(
        &self,
        x: &[(Scalar, Vec<Generator>)],
        selector: &mut dyn RedexSelector,
    ) -> Result<AlgebraElement, AlgebraError> {
        let mut paths = Vec::with_capacity(x.len());
        for (c, word) in x {
            if !self.field.contains(c) {
                return Err(AlgebraError::MixedAmbient);
            }
            paths.push((c.clone(), self.word_to_path(word)?));
        }
        self.reduce_paths(paths, selector)
    }

    /// Re-normalizes an element that is already in normal form. Always the
    /// identity; exposed for testing idempotence.
    pub fn renormalize(&self, x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let raw = x.terms().map(|(p, c)| (c.clone(), p.clone())).collect();
        self.reduce_paths(raw, &mut Leftmost)
    }

    pub(crate) fn reduce_paths(
        &self,
        x: Vec<(Scalar, Path)>,
        selector: &mut dyn RedexSelector,
    ) -> Result<AlgebraElement, AlgebraError> {
        let field = self.field;
        let mut done: BTreeMap<Path, Scalar> = BTreeMap::new();
        let mut pending: BTreeMap<Pending, Scalar> = BTreeMap::new();

        fn push(
            field: super::Field,
            pending: &mut BTreeMap<Pending, Scalar>,
            key: Pending,
            c: Scalar,
        ) {
            use std::collections::btree_map::Entry;
            match pending.entry(key) {
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

        for (c, p) in x {
            match p {
                Path::Vertex(_) => accumulate(field, &mut done, p, c),
                Path::Word(w) => push(field, &mut pending, self.pending(w), c),
            }
        }

        let mut steps = 0u64;
        while let Some((Pending { word, .. }, c)) = pending.pop_last() {
            let redexes = self.redexes(&word);
            if redexes.is_empty() {
                accumulate(field, &mut done, Path::Word(word), c);
                continue;
            }
            steps += 1;
            if steps > self.fuel {
                return Err(AlgebraError::FuelExhausted(self.fuel));
            }
            let choice = selector.select(&word, &redexes);
            let at = redexes[choice.min(redexes.len() - 1)];
            for (sign, rhs, vertex) in self.rewrite(word[at], word[at + 1]) {
                let coeff = if sign < 0 { field.neg(&c) } else { c.clone() };
                let mut next = Vec::with_capacity(word.len());
                next.extend_from_slice(&word[..at]);
                if let Some(pair) = rhs {
                    next.extend_from_slice(&pair);
                }
                next.extend_from_slice(&word[at + 2..]);
                if next.is_empty() {
                    accumulate(field, &mut done, Path::Vertex(vertex), coeff);
                } else {
                    push(field, &mut pending, self.pending(next), coeff);
                }
            }
        }
        Ok(self.element(done))
    }
}
