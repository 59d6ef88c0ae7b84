//! Exact computation of the Graovac-Pisanski index of small simple connected
//! graphs.
//!
//! The Graovac-Pisanski index (also called the modified Wiener index) weights
//! shortest-path distances by the symmetries of the graph. This crate
//! computes it with exact rational arithmetic through three independent
//! routes, classifies when the value is guaranteed to be an integer, runs
//! isomorph-free censuses of small connected graphs, and evaluates the
//! closed form for odd-cycle tadpole graphs.
//!
//! # Example
//!
//! ```
//! use gpindex::{Graph, gp};
//!
//! let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
//! let report = gp::gp_report(&c5).unwrap();
//! assert_eq!(report.gp.to_string(), "15");
//! assert!(report.is_integer);
//! ```
//!
//! See the `examples/` directory for runnable walkthroughs of each
//! capability: single-graph reports, censuses, canonical forms, and the
//! tadpole family.

pub mod census;
pub mod cli;
pub mod distance;
pub mod error;
pub mod families;
pub mod gp;
pub mod graph;
pub mod graph6;
pub mod rational;
pub mod symmetry;

pub use error::{Error, Result, MAX_VERTICES};
pub use graph::{Bipartition, Graph, Side};
pub use rational::Rational;
