//! Instance builders from the hardness constructions, used as test fixtures.

use crate::error::{Error, Result};
use crate::network::{Arc, InfluenceNetwork, ProblemInstance};
use crate::{NodeId, Threshold};

/// One knapsack item.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Item {
    pub profit: i64,
    pub weight: i64,
}

/// Star whose leaves are the items and whose hub needs influence `bound`.
///
/// Leaf `i` has threshold 0 and cost `w_i` and pushes `p_i` into the hub
/// (node `n`); the hub has threshold `bound` and cost `capacity + 1`, so it
/// can never be bought. With `λ = 1` and `β = capacity`, every node is
/// influenced within budget iff some item subset of weight at most
/// `capacity` has profit at least `bound`.
pub fn knapsack_to_star(items: &[Item], capacity: i64, bound: i64) -> Result<ProblemInstance> {
    if items.is_empty() {
        return Err(Error::InvalidInstance("knapsack needs at least one item".into()));
    }
    if capacity < 0 || bound < 0 || items.iter().any(|it| it.profit < 0 || it.weight < 0) {
        return Err(Error::InvalidInstance("knapsack values must be non-negative".into()));
    }
    let n = items.len();
    let mut thresholds = vec![0; n];
    thresholds.push(bound);
    let mut costs: Vec<i64> = items.iter().map(|it| it.weight).collect();
    costs.push(capacity + 1);
    let arcs = items.iter().enumerate().map(|(i, it)| Arc::new(i, n, it.profit));
    let network = InfluenceNetwork::new(thresholds, costs, arcs)?;
    ProblemInstance::new(network, 1, capacity)
}

/// Complete network with the same diffusion as the undirected graph `edges`.
///
/// Edges become arcs of weight `n + 1` both ways, non-edges arcs of weight 1,
/// and thresholds are scaled by `n + 1`. The `< n + 1` total a node can
/// collect from non-edges never crosses a multiple of `n + 1`.
pub fn graph_to_weighted_complete(n: usize, edges: &[(NodeId, NodeId)], thresholds: &[Threshold]) -> Result<InfluenceNetwork> {
    if thresholds.len() != n {
        return Err(Error::InvalidNetwork(format!("expected {n} thresholds, got {}", thresholds.len())));
    }
    let mut adjacent = vec![vec![false; n]; n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::UnknownNode(u.max(v)));
        }
        if u == v {
            return Err(Error::InvalidNetwork(format!("self-loop at {u}")));
        }
        adjacent[u][v] = true;
        adjacent[v][u] = true;
    }
    let big = n as i64 + 1;
    let arcs = (0..n).flat_map(|u| {
        let row = &adjacent[u];
        (0..n).filter(move |&v| v != u).map(move |v| Arc::new(u, v, if row[v] { big } else { 1 }))
    });
    InfluenceNetwork::new(thresholds.iter().map(|&t| t * big).collect(), vec![1; n], arcs)
}

/// The undirected graph itself as a symmetric unit-weight network.
pub fn graph_network(n: usize, edges: &[(NodeId, NodeId)], thresholds: &[Threshold]) -> Result<InfluenceNetwork> {
    let arcs = edges.iter().flat_map(|&(u, v)| [Arc::new(u, v, 1), Arc::new(v, u, 1)]);
    InfluenceNetwork::new(thresholds.to_vec(), vec![1; n], arcs)
}
