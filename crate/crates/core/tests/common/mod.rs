#![allow(dead_code)]

use latmax::network::{Arc, InfluenceNetwork};
use latmax::solver::{RootedTree, ThresholdClass};
use latmax::NodeId;

/// Nodes of the subtree rooted at `v`, `v` first.
pub fn subtree(rooted: &RootedTree, v: NodeId) -> Vec<NodeId> {
    let mut out = vec![v];
    let mut i = 0;
    while i < out.len() {
        out.extend_from_slice(rooted.children(out[i]));
        i += 1;
    }
    out
}

/// Largest number of nodes of `T(v)` that can be given a round in
/// `0..=lambda` when `v` itself gets exactly `slot` (`lambda + 1` = never),
/// by trying every assignment of rounds. A node at round 0 is bought; a node
/// at round `a ≥ 1` needs the weight of its tree neighbors at earlier rounds
/// to reach its threshold (`v` uses the class threshold). `None` when no
/// assignment fits the budget.
pub fn declared_mis(
    g: &InfluenceNetwork,
    rooted: &RootedTree,
    v: NodeId,
    lambda: u32,
    budget: i64,
    slot: usize,
    class: ThresholdClass,
) -> Option<i32> {
    let nodes = subtree(rooted, v);
    let m = nodes.len();
    let slots = lambda as usize + 2;
    let never = slots - 1;
    let mut pos = vec![usize::MAX; g.node_count()];
    for (i, &x) in nodes.iter().enumerate() {
        pos[x] = i;
    }
    let th = |x: NodeId| -> i64 {
        if x == v && class == ThresholdClass::Residual {
            rooted.residual_threshold(x)
        } else {
            g.threshold(x)
        }
    };
    let mut assign = vec![0usize; m];
    assign[0] = slot;
    let mut best: Option<i32> = None;
    let free = m - 1;
    let total = slots.pow(free as u32);
    for code in 0..total {
        let mut c = code;
        for a in assign.iter_mut().skip(1) {
            *a = c % slots;
            c /= slots;
        }
        let cost: i64 = nodes.iter().zip(&assign).filter(|(_, &a)| a == 0).map(|(&x, _)| g.cost(x)).sum();
        if cost > budget {
            continue;
        }
        let ok = nodes.iter().enumerate().all(|(i, &x)| {
            let a = assign[i];
            if a == 0 || a == never {
                return true;
            }
            let inflow: i64 = g
                .in_arcs(x)
                .iter()
                .filter(|&&(u, _)| pos[u] != usize::MAX && assign[pos[u]] < a)
                .map(|&(_, w)| w)
                .sum();
            inflow >= th(x)
        });
        if ok {
            let count = assign.iter().filter(|&&a| a != never).count() as i32;
            best = Some(best.map_or(count, |b| b.max(count)));
        }
    }
    best
}

/// Symmetric network from undirected edges with per-direction weights.
pub fn symmetric(t: &[i64], c: &[i64], edges: &[(NodeId, NodeId, i64, i64)]) -> InfluenceNetwork {
    let arcs = edges.iter().flat_map(|&(u, v, f, b)| [Arc::new(u, v, f), Arc::new(v, u, b)]);
    InfluenceNetwork::new(t.to_vec(), c.to_vec(), arcs).unwrap()
}
