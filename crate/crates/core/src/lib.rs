//! Symbolic computation for weighted Leavitt path algebras `L_k(E, w)` of
//! finite weighted graphs.
//!
//! - [`graph`]: weighted graphs, hereditary/saturated sets, quotients, matrix
//!   and hair extensions, source elimination.
//! - [`algebra`]: exact arithmetic by rewriting to the basis of normal
//!   generalized paths.
//! - [`monoid`]: the graph monoid `M_(E,w)` and a certified word-problem search.
//! - [`morita`]: progenerator decompositions and the graphs realizing matrix
//!   algebras over corners and endomorphism rings.
//! - [`sandpile`]: sandpile graphs and their sandpile-algebra graphs.
//! - [`cli`]: the `wlpa` command line.

pub mod algebra;
pub mod cli;
pub mod fixtures;
pub mod graph;
pub mod monoid;
pub mod morita;
pub mod sandpile;

pub use algebra::{Algebra, AlgebraElement, AlgebraError, AlgebraOptions};
pub use graph::{GraphBuilder, GraphError, VertexSet, WeightedGraph};
