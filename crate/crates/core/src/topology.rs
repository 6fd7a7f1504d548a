//! Topology classification used to route an instance to a solver.

use crate::network::InfluenceNetwork;
use crate::NodeId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Topology {
    /// Every ordered pair is an arc of weight 1.
    CompleteUnweighted,
    /// The undirected support is a tree, rooted at its smallest id.
    Tree { root: NodeId },
    /// Arcs are exactly both directions between consecutive nodes of `order`.
    /// `order` starts at the smaller-id endpoint.
    Path { order: Vec<NodeId> },
    /// A path plus both directions of the closing pair. `order` starts at
    /// node 0 and continues towards its smaller-id neighbor.
    Cycle { order: Vec<NodeId> },
    /// The undirected support is a forest with at least two components; one
    /// root (smallest id) per component, ascending.
    Forest { roots: Vec<NodeId> },
    General,
}

impl Topology {
    pub fn name(&self) -> &'static str {
        match self {
            Topology::CompleteUnweighted => "complete",
            Topology::Tree { .. } => "tree",
            Topology::Path { .. } => "path",
            Topology::Cycle { .. } => "cycle",
            Topology::Forest { .. } => "forest",
            Topology::General => "general",
        }
    }
}

/// Undirected neighbor lists of the arc support (an arc in either direction
/// makes an edge), sorted by id.
pub(crate) fn support(network: &InfluenceNetwork) -> Vec<Vec<NodeId>> {
    let n = network.node_count();
    let mut adj = vec![Vec::new(); n];
    for a in network.arcs() {
        adj[a.src].push(a.dst);
        adj[a.dst].push(a.src);
    }
    for l in &mut adj {
        l.sort_unstable();
        l.dedup();
    }
    adj
}

/// Smallest id of each connected component of the support, ascending.
fn component_roots(adj: &[Vec<NodeId>]) -> Vec<NodeId> {
    let mut seen = vec![false; adj.len()];
    let mut roots = Vec::new();
    let mut stack = Vec::new();
    for r in 0..adj.len() {
        if seen[r] {
            continue;
        }
        roots.push(r);
        seen[r] = true;
        stack.push(r);
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    roots
}

fn all_arcs_symmetric(network: &InfluenceNetwork) -> bool {
    network.arcs().iter().all(|a| network.has_arc(a.dst, a.src))
}

/// Walks a graph whose support has maximum degree 2 from `start`, always
/// taking the smallest unvisited neighbor.
fn walk(adj: &[Vec<NodeId>], start: NodeId) -> Vec<NodeId> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev && x != start) {
        order.push(next);
        prev = cur;
        cur = next;
        if order.len() > adj.len() {
            break;
        }
    }
    order
}

/// Every ordered pair of distinct nodes is an arc of weight 1.
pub fn is_complete_unweighted(network: &InfluenceNetwork) -> bool {
    let n = network.node_count();
    network.arc_count() == n * n.saturating_sub(1) && network.arcs().iter().all(|a| a.weight == 1)
}

/// Classifies a (normalized) network. When several labels apply, the most
/// specific wins: Path, then Cycle, then CompleteUnweighted, then Tree.
pub fn detect_topology(network: &InfluenceNetwork) -> Topology {
    let n = network.node_count();
    if n == 0 {
        return Topology::Path { order: Vec::new() };
    }
    let adj = support(network);
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let roots = component_roots(&adj);
    let connected = roots.len() == 1;
    let symmetric = all_arcs_symmetric(network);
    let max_deg = adj.iter().map(Vec::len).max().unwrap_or(0);

    if connected && edges + 1 == n && symmetric && max_deg <= 2 {
        let start = (0..n).find(|&v| adj[v].len() <= 1).expect("a path has an endpoint");
        return Topology::Path { order: walk(&adj, start) };
    }
    if connected && n >= 3 && edges == n && symmetric && adj.iter().all(|l| l.len() == 2) {
        return Topology::Cycle { order: walk(&adj, 0) };
    }
    if is_complete_unweighted(network) {
        return Topology::CompleteUnweighted;
    }
    if connected && edges + 1 == n {
        return Topology::Tree { root: 0 };
    }
    if edges + roots.len() == n {
        return Topology::Forest { roots };
    }
    Topology::General
}
