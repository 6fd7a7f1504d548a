//! Exhaustive reference solvers.

use crate::diffusion::Simulator;
use crate::error::{Error, Result};
use crate::network::ProblemInstance;
use crate::solution::Solution;
use crate::NodeId;

/// Largest network [`brute_force`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 25;

/// Tries every target set within budget. Among optimal sets the
/// lexicographically smallest sorted id list wins.
pub fn brute_force(instance: &ProblemInstance) -> Result<Solution> {
    let g = instance.network();
    let n = g.node_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    let mut sim = Simulator::new(g);
    let mut best: Option<(usize, Vec<NodeId>)> = None;
    let mut current = Vec::with_capacity(n);
    // Depth-first over include/exclude decisions in id order, include first,
    // so sets are visited in lexicographic order of their sorted id lists.
    fn rec(
        v: usize,
        left: i64,
        instance: &ProblemInstance,
        sim: &mut Simulator<'_>,
        current: &mut Vec<NodeId>,
        best: &mut Option<(usize, Vec<NodeId>)>,
    ) {
        let g = instance.network();
        if v == g.node_count() {
            let count = sim.run(current, instance.lambda());
            let better = match best {
                None => true,
                Some((c, s)) => count > *c || (count == *c && current.as_slice() < s.as_slice()),
            };
            if better {
                *best = Some((count, current.clone()));
            }
            return;
        }
        if g.cost(v) <= left {
            current.push(v);
            rec(v + 1, left - g.cost(v), instance, sim, current, best);
            current.pop();
        }
        rec(v + 1, left, instance, sim, current, best);
    }
    rec(0, instance.budget(), instance, &mut sim, &mut current, &mut best);
    let (_, set) = best.expect("the empty set is always feasible");
    Solution::evaluate(g, &set, instance.lambda())
}

/// 0/1 knapsack: the largest total profit of items with total weight at most
/// `capacity`. `O(n · capacity)`.
pub fn knapsack_dp(weights: &[i64], profits: &[i64], capacity: i64) -> i64 {
    assert_eq!(weights.len(), profits.len());
    if capacity < 0 {
        return 0;
    }
    let cap = capacity as usize;
    let mut best = vec![0i64; cap + 1];
    for (&w, &p) in weights.iter().zip(profits) {
        let w = w as usize;
        if w > cap {
            continue;
        }
        for c in (w..=cap).rev() {
            best[c] = best[c].max(best[c - w] + p);
        }
    }
    best[cap]
}

/// Whether the undirected graph on `n` nodes has a clique of size `k`.
pub fn has_clique(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    fn grow(adj: &[u64], candidates: u64, size: usize, k: usize) -> bool {
        if size >= k {
            return true;
        }
        if (candidates.count_ones() as usize) + size < k {
            return false;
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if grow(adj, rest & adj[v], size + 1, k) {
                return true;
            }
        }
        false
    }
    assert!(n <= 64, "clique oracle supports at most 64 nodes");
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    grow(&adj, all, 0, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{Arc, InfluenceNetwork};

    #[test]
    fn knapsack_small() {
        assert_eq!(knapsack_dp(&[1, 3, 4, 5], &[1, 4, 5, 7], 7), 9);
        assert_eq!(knapsack_dp(&[2], &[3], 1), 0);
        assert_eq!(knapsack_dp(&[], &[], 10), 0);
    }

    #[test]
    fn clique_small() {
        let tri = [(0, 1), (1, 2), (0, 2), (2, 3)];
        assert!(has_clique(4, &tri, 3));
        assert!(!has_clique(4, &tri, 4));
        assert!(has_clique(4, &[], 1));
        assert!(has_clique(0, &[], 0));
    }

    #[test]
    fn brute_force_prefers_small_lexicographic_sets() {
        // Two symmetric nodes; seeding either reaches both.
        let g = InfluenceNetwork::new(vec![1, 1], vec![1, 1], [Arc::new(0, 1, 1), Arc::new(1, 0, 1)]).unwrap();
        let s = brute_force(&ProblemInstance::new(g, 1, 1).unwrap()).unwrap();
        assert_eq!(s.target_set, vec![0]);
        assert_eq!(s.influenced_count, 2);
    }

    #[test]
    fn brute_force_refuses_large_networks() {
        let g = InfluenceNetwork::new(vec![1; 26], vec![1; 26], []).unwrap();
        let err = brute_force(&ProblemInstance::new(g, 1, 1).unwrap()).unwrap_err();
        assert_eq!(err, Error::TooLarge { n: 26, limit: 25 });
    }
}
