//! Unweighted complete graphs with unit costs.
//!
//! Every active node pushes weight 1 into every other node, so the diffusion
//! only depends on how many nodes are active. Seeding the β nodes with the
//! highest thresholds is optimal: any other target set of the same size
//! leaves a node with a threshold at least as high to be activated by
//! diffusion.

use crate::error::{Error, Result};
use crate::network::ProblemInstance;
use crate::solution::Solution;
use crate::topology::is_complete_unweighted;
use crate::NodeId;

/// The `k` nodes with the highest thresholds, lowest id first among equal
/// thresholds, via a counting sort on clamped thresholds.
pub fn highest_thresholds(thresholds: &[i64], k: usize) -> Vec<NodeId> {
    let n = thresholds.len();
    let k = k.min(n);
    // Thresholds above n - 1 can never be met by the other nodes; they all
    // rank above every reachable threshold, so clamp them to n.
    let mut buckets = vec![Vec::new(); n + 1];
    for (v, &t) in thresholds.iter().enumerate() {
        buckets[(t.max(0) as usize).min(n)].push(v);
    }
    let mut out: Vec<NodeId> = buckets.into_iter().rev().flatten().take(k).collect();
    out.sort_unstable();
    out
}

pub fn solve_complete_unweighted(instance: &ProblemInstance) -> Result<Solution> {
    let g = instance.network();
    if !is_complete_unweighted(g) {
        return Err(Error::Precondition("network is not an unweighted complete graph".into()));
    }
    if g.costs().iter().any(|&c| c != 1) {
        return Err(Error::Precondition("complete-graph greedy needs unit costs".into()));
    }
    let k = usize::try_from(instance.budget()).unwrap_or(usize::MAX);
    let set = highest_thresholds(g.thresholds(), k);
    Solution::evaluate(g, &set, instance.lambda())
}
