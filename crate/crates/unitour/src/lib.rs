//! Digraphs on the vertex set `{1, …, n}` with exactly one Eulerian tour.
//!
//! A digraph is *uniquely Eulerian* when it has no isolated vertices and
//! exactly one closed walk that uses every edge exactly once, counted up to
//! cyclic shift. The loopless digraphs with this property are counted by
//! `(n-1)! C_n / 2` where `C_n` is the n-th Catalan number (OEIS A102693).
//! This crate provides three independent routes to that family and the
//! machinery to cross-validate them:
//!
//! * [`DiGraph`]: edge-list digraphs with exact tour enumeration by
//!   backtracking, simple-cycle and simple-path enumeration, and the
//!   structural membership predicates.
//! * [`best`]: tour counting via the BEST theorem, with spanning
//!   arborescences counted by an integer Matrix-Tree determinant.
//! * [`plane_tree`]: labeled rooted plane trees and the bijection between
//!   the trees whose vertex 2 sits below vertex 1 and the loopless uniquely
//!   Eulerian digraphs.
//! * [`parens`]: labeled parenthesis arrangements and the bijection with
//!   2-in 2-out digraphs (loops allowed) carrying a marked edge.
//! * [`counting`]: Catalan numbers, the closed-form count, exhaustive
//!   edge-subset search, and cross-checking reports.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so shared inputs can be used concurrently without
//! synchronization.

pub mod best;
pub mod counting;
pub mod digraph;
mod error;
pub mod parens;
pub mod plane_tree;
mod tour;

pub use digraph::{Degrees, DiGraph, Edge, SimpleCycle};
pub use error::Error;
pub use parens::{MarkedDigraph, ParenArrangement, ParenKind, ParenToken};
pub use plane_tree::RootedPlaneTree;
pub use tour::{explain_not_uniquely_eulerian, EulerianTour};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
