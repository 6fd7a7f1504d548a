//! Normalize, classify and route an instance to the matching exact solver.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::network::{normalize_zero_cost, ProblemInstance};
use crate::oracle::brute_force;
use crate::solution::Solution;
use crate::solver::path::PathTables;
use crate::solver::tree::{solve_tree_with_tables, RootedTree};
use crate::solver::{solve_complete_unweighted, solve_cycle, solve_path};
use crate::topology::{detect_topology, Topology};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverChoice {
    Auto,
    Complete,
    Tree,
    Path,
    Cycle,
    Brute,
}

impl SolverChoice {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "auto" => SolverChoice::Auto,
            "complete" => SolverChoice::Complete,
            "tree" => SolverChoice::Tree,
            "path" => SolverChoice::Path,
            "cycle" => SolverChoice::Cycle,
            "brute" => SolverChoice::Brute,
            _ => return None,
        })
    }
}

/// Solver output plus what the pipeline did to get there.
#[derive(Clone, Debug)]
pub struct Report {
    pub solution: Solution,
    /// Solver that produced the target set (`"forced"` when the reduced
    /// network was empty).
    pub solver: &'static str,
    /// Topology of the normalized network.
    pub topology: Topology,
    /// MIS table of the tree solver, when requested and used.
    pub tree_tables: Option<Value>,
}

pub fn solve(instance: &ProblemInstance, choice: SolverChoice) -> Result<Solution> {
    solve_with_report(instance, choice, false).map(|r| r.solution)
}

/// Runs the pipeline. Zero-cost nodes are seeded for free and removed
/// first; the solver works on what remains and the forced seeds are merged
/// back before the final evaluation on the original network.
pub fn solve_with_report(instance: &ProblemInstance, choice: SolverChoice, dump_tables: bool) -> Result<Report> {
    let g = instance.network();
    let reduction = normalize_zero_cost(g);
    let reduced = instance.with_network(reduction.network.clone());
    let topology = detect_topology(reduced.network());
    if choice == SolverChoice::Brute {
        let solution = brute_force(instance)?;
        return Ok(Report { solution, solver: "brute", topology, tree_tables: None });
    }
    let unsupported = || Err(Error::UnsupportedTopology(topology.name().to_string()));
    let mut tree_tables = None;
    let (set, solver) = if reduced.network().is_empty() {
        (Vec::new(), "forced")
    } else {
        let route = match (choice, &topology) {
            (SolverChoice::Auto, Topology::Path { .. }) => SolverChoice::Path,
            (SolverChoice::Auto, Topology::Cycle { .. }) => SolverChoice::Cycle,
            (SolverChoice::Auto, Topology::Tree { .. } | Topology::Forest { .. }) => SolverChoice::Tree,
            (SolverChoice::Auto, Topology::CompleteUnweighted) => {
                if reduced.network().costs().iter().all(|&c| c == 1) {
                    SolverChoice::Complete
                } else {
                    return unsupported();
                }
            }
            (SolverChoice::Auto, Topology::General) => return unsupported(),
            (other, _) => other,
        };
        match route {
            SolverChoice::Path => {
                let order = PathTables::order_of(reduced.network())?;
                (solve_path(&reduced, &order)?.target_set, "path")
            }
            SolverChoice::Cycle => match &topology {
                Topology::Cycle { order } => (solve_cycle(&reduced, order)?.target_set, "cycle"),
                other => {
                    return Err(Error::Precondition(format!("cycle solver needs a cycle, got {}", other.name())))
                }
            },
            SolverChoice::Tree => {
                let rooted = RootedTree::from_topology(reduced.network(), &topology)?;
                let (sol, tables) = solve_tree_with_tables(&reduced, &rooted)?;
                if dump_tables {
                    tree_tables = Some(tables.to_json(&reduction.kept));
                }
                (sol.target_set, "tree")
            }
            SolverChoice::Complete => (solve_complete_unweighted(&reduced)?.target_set, "complete"),
            SolverChoice::Auto | SolverChoice::Brute => unreachable!("resolved above"),
        }
    };
    let mut seeds = reduction.to_original(&set);
    seeds.extend_from_slice(&reduction.forced_seeds);
    let solution = Solution::evaluate(g, &seeds, instance.lambda())?;
    Ok(Report { solution, solver, topology, tree_tables })
}
