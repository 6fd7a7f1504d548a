//! The influence network data model and the two instance normalizations
//! every solver relies on: folding zero-cost nodes into the target set and
//! clamping thresholds to `W(v) + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{Cost, NodeId, Threshold, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub src: NodeId,
    pub dst: NodeId,
    pub weight: Weight,
}

impl Arc {
    pub fn new(src: NodeId, dst: NodeId, weight: Weight) -> Self {
        Arc { src, dst, weight }
    }
}

/// A directed network with integer thresholds, costs and arc weights.
///
/// Nodes are `0..n`. There are no self-loops and at most one arc per ordered
/// pair. All quantities are non-negative. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfluenceNetwork {
    thresholds: Vec<Threshold>,
    costs: Vec<Cost>,
    arcs: Vec<Arc>,
    in_adj: Vec<Vec<(NodeId, Weight)>>,
    out_adj: Vec<Vec<(NodeId, Weight)>>,
}

impl InfluenceNetwork {
    pub fn new(
        thresholds: Vec<Threshold>,
        costs: Vec<Cost>,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<Self> {
        let n = thresholds.len();
        if costs.len() != n {
            return Err(Error::InvalidNetwork(format!(
                "{} thresholds but {} costs",
                n,
                costs.len()
            )));
        }
        if let Some(v) = thresholds.iter().position(|&t| t < 0) {
            return Err(Error::InvalidNetwork(format!("node {v} has a negative threshold")));
        }
        if let Some(v) = costs.iter().position(|&c| c < 0) {
            return Err(Error::InvalidNetwork(format!("node {v} has a negative cost")));
        }
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        for a in &arcs {
            if a.src >= n || a.dst >= n {
                return Err(Error::InvalidNetwork(format!(
                    "arc ({}, {}) references a node outside 0..{}",
                    a.src, a.dst, n
                )));
            }
            if a.src == a.dst {
                return Err(Error::InvalidNetwork(format!("self-loop on node {}", a.src)));
            }
            if a.weight < 0 {
                return Err(Error::InvalidNetwork(format!(
                    "arc ({}, {}) has a negative weight",
                    a.src, a.dst
                )));
            }
        }
        arcs.sort_unstable_by_key(|a| (a.src, a.dst));
        if let Some(w) = arcs.windows(2).find(|w| (w[0].src, w[0].dst) == (w[1].src, w[1].dst)) {
            return Err(Error::InvalidNetwork(format!(
                "duplicate arc ({}, {})",
                w[0].src, w[0].dst
            )));
        }
        let mut in_adj = vec![Vec::new(); n];
        let mut out_adj = vec![Vec::new(); n];
        for a in &arcs {
            out_adj[a.src].push((a.dst, a.weight));
            in_adj[a.dst].push((a.src, a.weight));
        }
        // out_adj is sorted by construction; in_adj too, since arcs are sorted by src.
        Ok(InfluenceNetwork { thresholds, costs, arcs, in_adj, out_adj })
    }

    pub fn empty() -> Self {
        InfluenceNetwork {
            thresholds: Vec::new(),
            costs: Vec::new(),
            arcs: Vec::new(),
            in_adj: Vec::new(),
            out_adj: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.thresholds.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thresholds.is_empty()
    }

    pub fn threshold(&self, v: NodeId) -> Threshold {
        self.thresholds[v]
    }

    pub fn cost(&self, v: NodeId) -> Cost {
        self.costs[v]
    }

    pub fn thresholds(&self) -> &[Threshold] {
        &self.thresholds
    }

    pub fn costs(&self) -> &[Cost] {
        &self.costs
    }

    /// Arcs sorted by `(src, dst)`.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// In-neighbors of `v` with the weight of the arc into `v`, sorted by id.
    pub fn in_arcs(&self, v: NodeId) -> &[(NodeId, Weight)] {
        &self.in_adj[v]
    }

    /// Out-neighbors of `v` with the weight of the arc out of `v`, sorted by id.
    pub fn out_arcs(&self, v: NodeId) -> &[(NodeId, Weight)] {
        &self.out_adj[v]
    }

    pub fn has_arc(&self, u: NodeId, v: NodeId) -> bool {
        self.out_adj[u].binary_search_by_key(&v, |&(x, _)| x).is_ok()
    }

    /// `w(u, v)`, with a missing arc reading as weight 0.
    pub fn weight(&self, u: NodeId, v: NodeId) -> Weight {
        match self.out_adj[u].binary_search_by_key(&v, |&(x, _)| x) {
            Ok(i) => self.out_adj[u][i].1,
            Err(_) => 0,
        }
    }

    /// `W(v)`: the total weight entering `v`.
    pub fn in_weight(&self, v: NodeId) -> Weight {
        self.in_adj[v].iter().map(|&(_, w)| w).sum()
    }

    /// `max_v W(v)`. This is the quantity the tree DP's table sizes depend on.
    pub fn max_in_weight(&self) -> Weight {
        (0..self.node_count()).map(|v| self.in_weight(v)).max().unwrap_or(0)
    }

    /// Sum of all arc weights. Larger than [`Self::max_in_weight`] in
    /// general; the two are sometimes conflated when quoting the tree DP's
    /// running time.
    pub fn total_weight(&self) -> Weight {
        self.arcs.iter().map(|a| a.weight).sum()
    }

    pub fn max_in_degree(&self) -> usize {
        self.in_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn total_cost(&self) -> Cost {
        self.costs.iter().sum()
    }

    pub fn cost_of(&self, set: &[NodeId]) -> Cost {
        set.iter().map(|&v| self.costs[v]).sum()
    }

    /// Same arcs and costs, new thresholds.
    pub fn with_thresholds(&self, thresholds: Vec<Threshold>) -> Result<Self> {
        Self::new(thresholds, self.costs.clone(), self.arcs.iter().copied())
    }

    /// The subnetwork induced by `keep`, relabelled so that `keep[i]` becomes
    /// node `i`.
    pub fn induced(&self, keep: &[NodeId]) -> Self {
        let mut index = vec![usize::MAX; self.node_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| index[a.src] != usize::MAX && index[a.dst] != usize::MAX)
            .map(|a| Arc::new(index[a.src], index[a.dst], a.weight));
        Self::new(
            keep.iter().map(|&v| self.thresholds[v]).collect(),
            keep.iter().map(|&v| self.costs[v]).collect(),
            arcs,
        )
        .expect("induced subnetwork of a valid network is valid")
    }
}

/// A network together with the latency bound and the budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    network: InfluenceNetwork,
    lambda: u32,
    budget: Cost,
}

impl ProblemInstance {
    pub fn new(network: InfluenceNetwork, lambda: u32, budget: Cost) -> Result<Self> {
        if lambda == 0 {
            return Err(Error::InvalidInstance("lambda must be at least 1".into()));
        }
        if budget < 0 {
            return Err(Error::InvalidInstance("budget must be non-negative".into()));
        }
        Ok(ProblemInstance { network, lambda, budget })
    }

    pub fn network(&self) -> &InfluenceNetwork {
        &self.network
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn budget(&self) -> Cost {
        self.budget
    }

    pub fn with_network(&self, network: InfluenceNetwork) -> Self {
        ProblemInstance { network, ..self.clone() }
    }

    pub fn with_budget(&self, budget: Cost) -> Result<Self> {
        Self::new(self.network.clone(), self.lambda, budget)
    }
}

/// Result of [`normalize_zero_cost`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroCostReduction {
    /// The reduced network; every cost is at least 1.
    pub network: InfluenceNetwork,
    /// Original ids of the removed zero-cost nodes, ascending.
    pub forced_seeds: Vec<NodeId>,
    /// `kept[i]` is the original id of reduced node `i`.
    pub kept: Vec<NodeId>,
}

impl ZeroCostReduction {
    pub fn to_original(&self, reduced: &[NodeId]) -> Vec<NodeId> {
        reduced.iter().map(|&v| self.kept[v]).collect()
    }
}

/// Removes every zero-cost node, charging its out-arcs against the
/// thresholds of its out-neighbors.
///
/// A zero-cost node belongs to some optimal target set for free, so it is
/// active from round 0 and each out-neighbor `u` effectively has threshold
/// `max(t(u) - w(v, u), 0)`. Removal never creates new zero-cost nodes, so a
/// single linear pass reaches the fixpoint.
pub fn normalize_zero_cost(network: &InfluenceNetwork) -> ZeroCostReduction {
    let n = network.node_count();
    let forced_seeds: Vec<NodeId> = (0..n).filter(|&v| network.cost(v) == 0).collect();
    if forced_seeds.is_empty() {
        return ZeroCostReduction {
            network: network.clone(),
            forced_seeds,
            kept: (0..n).collect(),
        };
    }
    let mut thresholds = network.thresholds().to_vec();
    for &v in &forced_seeds {
        for &(u, w) in network.out_arcs(v) {
            thresholds[u] = (thresholds[u] - w).max(0);
        }
    }
    let kept: Vec<NodeId> = (0..n).filter(|&v| network.cost(v) != 0).collect();
    let adjusted = network
        .with_thresholds(thresholds)
        .expect("lowering thresholds keeps the network valid");
    ZeroCostReduction { network: adjusted.induced(&kept), forced_seeds, kept }
}

/// Caps every threshold at `W(u) + 1`. A node whose threshold exceeds its
/// total incoming weight can only be activated by seeding, with or without
/// the clamp, so the diffusion is unchanged for every target set.
pub fn clamp_thresholds(network: &InfluenceNetwork) -> InfluenceNetwork {
    let thresholds = (0..network.node_count())
        .map(|u| network.threshold(u).min(network.in_weight(u) + 1))
        .collect();
    network.with_thresholds(thresholds).expect("clamping keeps thresholds non-negative")
}
