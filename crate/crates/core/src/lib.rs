//! Irreversible dynamic monopolies (target sets) of graphs under vertex
//! threshold assignments.
//!
//! - [`graph`]: simple undirected graphs and the edge-list format.
//! - [`propagation`]: threshold assignments, the activation process, resistant subgraphs.
//! - [`exact`]: exhaustive oracles (minimum dynamo, worst-case `Ldyn_t`, vertex cover).
//! - [`bounds`]: degree-sequence bound, self-opinioned closed form, `c/(c+1)` bound.
//! - [`mcflow`]: min-cost flow and cost-bounded bipartite matching.
//! - [`forest`]: polynomial-time `Ldyn_t` on forests.
//! - [`constructions`]: worst-case family and the vertex-cover reduction generator.
//! - [`transforms`]: interpolation between equal-total assignments, triangle-free rewrite.
//! - [`cli`]: the `ldyn` command-line front end.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod forest;
pub mod graph;
pub mod mcflow;
pub mod propagation;
pub mod rational;
pub mod transforms;

pub use error::{Error, ParseError, Result};
pub use exact::LdynWitness;
pub use graph::Graph;
pub use propagation::{PropagationTrace, ThresholdAssignment};
pub use rational::Rational;
