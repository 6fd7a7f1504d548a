//! Seeded random instances. The same kind, size, caps and seed always give
//! the same instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::network::{Arc, InfluenceNetwork, ProblemInstance};
use crate::reductions::Item;
use crate::NodeId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Path,
    Cycle,
    Tree,
    /// Unweighted complete graph with unit costs.
    Complete,
    /// Symmetric random graph, each pair joined with probability 1/2.
    Graph,
}

impl Shape {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "path" => Shape::Path,
            "cycle" => Shape::Cycle,
            "tree" => Shape::Tree,
            "complete" => Shape::Complete,
            "graph" => Shape::Graph,
            _ => return None,
        })
    }
}

/// Inclusive upper bounds for the drawn parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_weight: i64,
    pub max_threshold: i64,
    pub min_cost: i64,
    pub max_cost: i64,
    pub max_lambda: u32,
    pub max_budget: i64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_weight: 3, max_threshold: 5, min_cost: 1, max_cost: 3, max_lambda: 4, max_budget: 6 }
    }
}

/// Undirected skeleton of the requested shape, on shuffled labels.
fn skeleton(shape: Shape, n: usize, rng: &mut ChaCha8Rng) -> Vec<(NodeId, NodeId)> {
    let mut label: Vec<NodeId> = (0..n).collect();
    label.shuffle(rng);
    let mut edges = Vec::new();
    match shape {
        Shape::Path => edges.extend((1..n).map(|i| (label[i - 1], label[i]))),
        Shape::Cycle => {
            edges.extend((1..n).map(|i| (label[i - 1], label[i])));
            edges.push((label[n - 1], label[0]));
        }
        Shape::Tree => edges.extend((1..n).map(|i| (label[rng.gen_range(0..i)], label[i]))),
        Shape::Complete => {
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
        }
        Shape::Graph => {
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    edges
}

pub fn random_instance(shape: Shape, n: usize, seed: u64, caps: &Caps) -> Result<ProblemInstance> {
    if n == 0 {
        return Err(Error::InvalidInstance("n must be at least 1".into()));
    }
    if shape == Shape::Cycle && n < 3 {
        return Err(Error::InvalidInstance("a cycle needs at least 3 nodes".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = skeleton(shape, n, &mut rng);
    let unit = shape == Shape::Complete;
    let mut arcs = Vec::with_capacity(edges.len() * 2);
    for (u, v) in edges {
        let (a, b) = if unit {
            (1, 1)
        } else {
            (rng.gen_range(1..=caps.max_weight), rng.gen_range(1..=caps.max_weight))
        };
        arcs.push(Arc::new(u, v, a));
        arcs.push(Arc::new(v, u, b));
    }
    let thresholds = (0..n).map(|_| rng.gen_range(0..=caps.max_threshold)).collect();
    let costs = (0..n).map(|_| if unit { 1 } else { rng.gen_range(caps.min_cost..=caps.max_cost) }).collect();
    let network = InfluenceNetwork::new(thresholds, costs, arcs)?;
    let lambda = rng.gen_range(1..=caps.max_lambda);
    let budget = rng.gen_range(0..=caps.max_budget);
    ProblemInstance::new(network, lambda, budget)
}

/// Random knapsack items with `n` items, weights in `0..=capacity` and
/// profits in `0..=max_profit`, plus a capacity in `0..=max_capacity`.
pub fn random_knapsack(n: usize, max_capacity: i64, max_profit: i64, seed: u64) -> (Vec<Item>, i64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let capacity = rng.gen_range(0..=max_capacity);
    let items = (0..n)
        .map(|_| Item { profit: rng.gen_range(0..=max_profit), weight: rng.gen_range(0..=max_capacity) })
        .collect();
    (items, capacity)
}

/// Random simple undirected graph, each pair present with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Vec<(NodeId, NodeId)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}
