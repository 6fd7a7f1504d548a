//! Weighted cycles via `n` path instances.
//!
//! Either the target set is empty, or it contains some node `v_i`. Fixing
//! `v_i` as a seed leaves the path `v_{i+1}, …, v_{i-1}` in which the two
//! neighbors of `v_i` see their thresholds lowered by `w(v_i, ·)` and the
//! budget drops by `c(v_i)`. The path solver is exact on each piece; every
//! candidate is re-evaluated on the cycle and the best one wins.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::network::{InfluenceNetwork, ProblemInstance};
use crate::solution::Solution;
use crate::solver::path::{PathMode, PathTables};
use crate::NodeId;

/// The path left after seeding `order[i]`, in path order and relabelled
/// `0..n-1`, together with the original ids.
pub fn cut_at(network: &InfluenceNetwork, order: &[NodeId], i: usize) -> (InfluenceNetwork, Vec<NodeId>) {
    let n = order.len();
    let seed = order[i];
    let keep: Vec<NodeId> = (1..n).map(|k| order[(i + k) % n]).collect();
    let mut thresholds = network.thresholds().to_vec();
    for &(u, w) in network.out_arcs(seed) {
        thresholds[u] = (thresholds[u] - w).max(0);
    }
    let lowered = network.with_thresholds(thresholds).expect("lowering thresholds keeps the network valid");
    (lowered.induced(&keep), keep)
}

fn solve_piece(instance: &ProblemInstance, order: &[NodeId], i: usize) -> Result<Option<Vec<NodeId>>> {
    let g = instance.network();
    let seed = order[i];
    let rest = instance.budget() - g.cost(seed);
    if rest < 0 {
        return Ok(None);
    }
    let (path, keep) = cut_at(g, order, i);
    let path_order: Vec<NodeId> = (0..keep.len()).collect();
    let tables = PathTables::compute(&path, &path_order, instance.lambda(), PathMode::Witness)?;
    let k = tables.best_count(rest);
    let mut set: Vec<NodeId> = tables.reconstruct(k)?.into_iter().map(|v| keep[v]).collect();
    set.push(seed);
    set.sort_unstable();
    Ok(Some(set))
}

/// Solves a cycle instance exactly. `order` lists the nodes around the cycle.
///
/// Ties are broken by influenced count, then by the lexicographically
/// smallest target set, so the result does not depend on thread scheduling.
pub fn solve_cycle(instance: &ProblemInstance, order: &[NodeId]) -> Result<Solution> {
    let g = instance.network();
    let n = g.node_count();
    if order.len() != n || n < 3 {
        return Err(Error::Precondition("cycle order must list every node, n ≥ 3".into()));
    }
    let candidates: Vec<Option<Vec<NodeId>>> =
        (0..n).into_par_iter().map(|i| solve_piece(instance, order, i)).collect::<Result<_>>()?;
    let mut best = Solution::evaluate(g, &[], instance.lambda())?;
    for set in candidates.into_iter().flatten() {
        let s = Solution::evaluate(g, &set, instance.lambda())?;
        if s.influenced_count > best.influenced_count
            || (s.influenced_count == best.influenced_count && s.target_set < best.target_set)
        {
            best = s;
        }
    }
    Ok(best)
}
