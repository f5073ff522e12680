//! Bidirectional breadth-first search for a chain of relation applications.
//!
//! Both frontiers are expanded in a fixed order (relations by vertex, forward
//! before backward), and the smaller frontier goes first with ties going to
//! the `x` side, so verdict and witness are deterministic.

use std::collections::HashMap;

use super::{GraphMonoid, MonoidElement, MonoidError, DEFAULT_DEPTH, DEFAULT_STATE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// `w(v)·v → Σ r(e)`
    Forward,
    /// `Σ r(e) → w(v)·v`
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }
}

/// Apply the relation at `vertex` in `direction` to `at`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessStep {
    pub vertex: usize,
    pub direction: Direction,
    pub at: MonoidElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    /// No chain was found within the limits. This is never a claim of
    /// inequality.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityCertificate {
    pub verdict: Verdict,
    /// Empty unless `verdict` is `Equal`.
    pub witness: Vec<WitnessStep>,
    /// Distinct elements visited over both sides.
    pub explored: usize,
    /// Set when one side's congruence class was enumerated completely.
    pub exhausted: bool,
}

impl EqualityCertificate {
    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Maximum total number of relation applications.
    pub depth: u32,
    pub state_cap: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            depth: DEFAULT_DEPTH,
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

impl SearchLimits {
    pub fn depth(depth: u32) -> Self {
        SearchLimits {
            depth,
            ..Default::default()
        }
    }
}

struct Side {
    states: Vec<MonoidElement>,
    /// `(parent, vertex, direction)` with `apply(parent, vertex, direction)`
    /// equal to this state.
    parent: Vec<Option<(usize, usize, Direction)>>,
    index: HashMap<MonoidElement, usize>,
    frontier: Vec<usize>,
    level: u32,
}

impl Side {
    fn new(root: &MonoidElement) -> Side {
        Side {
            states: vec![root.clone()],
            parent: vec![None],
            index: HashMap::from([(root.clone(), 0)]),
            frontier: vec![0],
            level: 0,
        }
    }

    /// Steps from the root to state `i`.
    fn path_from_root(&self, mut i: usize) -> Vec<WitnessStep> {
        let mut out = Vec::new();
        while let Some((p, vertex, direction)) = self.parent[i] {
            out.push(WitnessStep {
                vertex,
                direction,
                at: self.states[p].clone(),
            });
            i = p;
        }
        out.reverse();
        out
    }

    /// Steps from state `i` back to the root.
    fn path_to_root(&self, mut i: usize) -> Vec<WitnessStep> {
        let mut out = Vec::new();
        while let Some((p, vertex, direction)) = self.parent[i] {
            out.push(WitnessStep {
                vertex,
                direction: direction.reversed(),
                at: self.states[i].clone(),
            });
            i = p;
        }
        out
    }
}

impl GraphMonoid {
    /// Searches for `x ~ y` with default limits and the given depth.
    pub fn equal(
        &self,
        x: &MonoidElement,
        y: &MonoidElement,
        depth: u32,
    ) -> Result<EqualityCertificate, MonoidError> {
        self.equal_with(x, y, SearchLimits::depth(depth))
    }

    /// Bidirectional search. Every `Equal` answer is replayed before it is
    /// returned.
    pub fn equal_with(
        &self,
        x: &MonoidElement,
        y: &MonoidElement,
        limits: SearchLimits,
    ) -> Result<EqualityCertificate, MonoidError> {
        self.check(x)?;
        self.check(y)?;
        let cert = self.search(x, y, limits);
        if cert.is_equal() {
            assert!(
                self.replay(x, y, &cert.witness),
                "monoid search produced a witness that does not replay"
            );
        }
        Ok(cert)
    }

    fn search(
        &self,
        x: &MonoidElement,
        y: &MonoidElement,
        limits: SearchLimits,
    ) -> EqualityCertificate {
        let unknown = |explored, exhausted| EqualityCertificate {
            verdict: Verdict::Unknown,
            witness: Vec::new(),
            explored,
            exhausted,
        };
        if x == y {
            return EqualityCertificate {
                verdict: Verdict::Equal,
                witness: Vec::new(),
                explored: 1,
                exhausted: false,
            };
        }
        let mut sides = [Side::new(x), Side::new(y)];
        loop {
            let explored = sides[0].states.len() + sides[1].states.len();
            if sides[0].frontier.is_empty() || sides[1].frontier.is_empty() {
                return unknown(explored, true);
            }
            if sides[0].level + sides[1].level >= limits.depth {
                return unknown(explored, false);
            }
            let s = if sides[0].frontier.len() <= sides[1].frontier.len() {
                0
            } else {
                1
            };
            let (a, b) = sides.split_at_mut(1);
            let (me, other) = if s == 0 {
                (&mut a[0], &b[0])
            } else {
                (&mut b[0], &a[0])
            };

            let frontier = std::mem::take(&mut me.frontier);
            for i in frontier {
                for r in &self.relations {
                    for direction in [Direction::Forward, Direction::Backward] {
                        let Some(next) = self.apply(&me.states[i], r.vertex, direction) else {
                            continue;
                        };
                        if me.index.contains_key(&next) {
                            continue;
                        }
                        let j = me.states.len();
                        me.states.push(next.clone());
                        me.parent.push(Some((i, r.vertex, direction)));
                        me.frontier.push(j);
                        if let Some(&k) = other.index.get(&next) {
                            let explored = me.states.len() + other.states.len();
                            let (from_x, from_y, jx, ky) = if s == 0 {
                                (&*me, other, j, k)
                            } else {
                                (other, &*me, k, j)
                            };
                            let mut witness = from_x.path_from_root(jx);
                            witness.extend(from_y.path_to_root(ky));
                            return EqualityCertificate {
                                verdict: Verdict::Equal,
                                witness,
                                explored,
                                exhausted: false,
                            };
                        }
                        me.index.insert(next, j);
                        if me.states.len() + other.states.len() > limits.state_cap {
                            return unknown(limits.state_cap, false);
                        }
                    }
                }
            }
            me.level += 1;
        }
    }

    /// Checks that `witness` is a valid chain of relation applications from
    /// `x` to `y`.
    pub fn replay(&self, x: &MonoidElement, y: &MonoidElement, witness: &[WitnessStep]) -> bool {
        let mut cur = x.clone();
        for step in witness {
            if step.at != cur {
                return false;
            }
            match self.apply(&cur, step.vertex, step.direction) {
                Some(next) => cur = next,
                None => return false,
            }
        }
        cur == *y
    }
}
