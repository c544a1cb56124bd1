//! External splits of cubic graphs.
//!
//! A split (X, Y) of a graph G is *external* when every vertex keeps at most
//! half of its degree on its own side, and it is a *bisection* when
//! |X| = |Y|. The conjecture driving this crate says every cubic graph has an
//! external split with -2 <= |X| - |Y| <= 2. The crate provides:
//!
//! * the split calculus (`graph`, `split`): evaluation, discrepancy,
//!   offenders, monochromatic components;
//! * splitting lemmas for cubic trees (`tree`, `tree_split`);
//! * constructive solvers that turn structure certificates
//!   (3-edge-colourings, tree-plus-cycle decompositions, trees with bipartite
//!   complement, nowhere-zero flows) into conjecture witnesses (`construct`);
//! * exhaustive certificate searches (`search`);
//! * a brute-force oracle and a lemma sweep harness (`oracle`, `enumerate`);
//! * text formats, generators, and a CLI (`io`, `generators`, `report`,
//!   `cli`).

#![forbid(unsafe_code)]

pub mod canon;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod report;
pub mod search;
pub mod split;
pub mod tree;
pub mod tree_split;

pub use error::{Error, Result};
pub use graph::{CubicGraph, GeneralGraph};
pub use split::{evaluate_split, induced_mono_graph, verify_ban_linial, Side, Split, SplitReport};
