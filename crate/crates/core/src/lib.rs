//! Exact solvers for the latency-bounded, budgeted influence maximization
//! problem under weighted linear-threshold diffusion.
//!
//! Given a directed network whose nodes carry an integer activation
//! threshold and a seeding cost, and whose arcs carry integer influence
//! weights, the goal is a target set of total cost at most `budget` that
//! maximizes the number of nodes active within `lambda` synchronous rounds.
//!
//! The general problem is NP-hard, so the crate provides exact algorithms
//! for the structured cases that admit them:
//!
//! * [`solver::complete`]: unweighted complete graphs, linear time greedy;
//! * [`solver::tree`]: weighted trees (and forests), pseudo-polynomial DP;
//! * [`solver::path`]: weighted paths, `O(n² λ)` DP;
//! * [`solver::cycle`]: weighted cycles, reduced to `n` path instances;
//!
//! plus an exhaustive [`oracle`] and the hardness [`reductions`] used to
//! cross-validate them. [`pipeline::solve`] normalizes an instance, detects
//! its topology and routes it to the right solver.

pub mod bench;
pub mod diffusion;
pub mod error;
pub mod ext;
pub mod generate;
pub mod io;
pub mod network;
pub mod oracle;
pub mod pipeline;
pub mod reductions;
pub mod solution;
pub mod solver;
pub mod topology;

pub use diffusion::{diffuse, DiffusionTrace};
pub use error::{Error, Result};
pub use ext::{ExtCost, ExtCount, Round};
pub use network::{clamp_thresholds, normalize_zero_cost, Arc, InfluenceNetwork, ProblemInstance, ZeroCostReduction};
pub use pipeline::{solve, SolverChoice};
pub use solution::Solution;
pub use topology::{detect_topology, Topology};

/// Node identifier; nodes of a network are always numbered `0..n`.
pub type NodeId = usize;
/// Arc influence weight.
pub type Weight = i64;
/// Node activation threshold.
pub type Threshold = i64;
/// Seeding cost, also the unit of the budget.
pub type Cost = i64;
