//! Exact graph invariants and a verification harness for two sharp lower
//! bounds on the circumference of a graph.
//!
//! The crate computes longest paths, longest cycles and circumference
//! exactly (subset dynamic programming cross-checked by an independent
//! brute-force oracle), builds rooted disjoint-path families ("spreadings")
//! over a host path or cycle of the off-cycle remainder, and machine-checks
//! a family of inequalities relating circumference, minimum degree and the
//! longest path/cycle of the remainder. A CLI drives exhaustive, random and
//! structured corpora and emits reproducible JSON/CSV reports.
//!
//! Length conventions used throughout:
//! * the length of a path is its edge count, and the empty path has
//!   length -1;
//! * a single vertex counts as a cycle of length 1 and a single edge as a
//!   cycle of length 2, so the circumference of a nonempty graph is always
//!   at least 1.

pub mod cli;
pub mod corpus;
pub mod extremal;
pub mod graph;
pub mod report;
pub mod runner;
pub mod solve;
pub mod spreading;
pub mod verify;

mod matching;
