//! Pseudo-polynomial exact DP for weighted trees and forests.
//!
//! For every node `v`, budget `b ≤ β`, round slot `τ ∈ {0, …, λ, ∞}` and
//! threshold class (`t(v)` or the residual `t'(v) = max(t(v) − w(p(v), v), 0)`)
//! the table `MIS[v][b][τ][class]` holds the largest number of nodes of the
//! subtree `T(v)` counted active within λ rounds by a target set inside `T(v)`
//! of cost at most `b`, where
//!
//! * `τ = 0`: `v` is seeded;
//! * `1 ≤ τ ≤ λ`: `v` is not seeded, its children active by round `τ − 1`
//!   bring at least the class threshold, and `v` is treated as becoming
//!   active exactly at round `τ`, so children it helps see the residual
//!   threshold from round `τ + 1` on;
//! * `τ = ∞`: `v` is not counted and exerts no influence on its children.
//!
//! The residual class means "the parent is active strictly before round τ".
//! With these declared rounds every child either helps `v` (it is declared
//! before `τ` and uses its original threshold), or is helped by `v` (declared
//! after `τ`, residual threshold), or neither. A declaration is sound because
//! each declared round upper-bounds the real activation round, and complete
//! because the real rounds of any target set form a valid declaration.
//!
//! Each cell is assembled from three per-node knapsacks over the children
//! `v_1..v_d` (ascending id) and their budget split:
//!
//! * `A[i][j]`: `v` seeded, best count in the first `i` child subtrees with
//!   budget `j`;
//! * `B_τ[i][j][k]`: `v` declared at round `τ`, best count in the first `i`
//!   child subtrees when the children declared before `τ` bring weight `≥ k`;
//! * `C[i][j]`: `v` inert, children use their original thresholds.
//!
//! Every cell keeps a choice record (budget split, chosen child slot and
//! class, whether the child helps `v`) so a witness target set is rebuilt in
//! one top-down pass. Forests are handled by one more knapsack over the roots.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ext::{ExtCount, Round};
use crate::network::{clamp_thresholds, InfluenceNetwork, ProblemInstance};
use crate::solution::Solution;
use crate::solver::{never_slot, round_slot, ThresholdClass};
use crate::topology::{support, Topology};
use crate::{Cost, NodeId, Threshold, Weight};

/// A rooted orientation of a tree (or of a forest, one root per component).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    roots: Vec<NodeId>,
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    /// Children before parents.
    postorder: Vec<NodeId>,
    residual: Vec<Threshold>,
}

impl RootedTree {
    pub fn new(network: &InfluenceNetwork, root: NodeId) -> Result<Self> {
        Self::forest(network, &[root])
    }

    /// Roots every component at the given node. Fails unless the support of
    /// `network` is a forest and `roots` picks exactly one node per component.
    pub fn forest(network: &InfluenceNetwork, roots: &[NodeId]) -> Result<Self> {
        let n = network.node_count();
        let adj = support(network);
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut bfs = Vec::with_capacity(n);
        for &r in roots {
            if r >= n {
                return Err(Error::UnknownNode(r));
            }
            if seen[r] {
                return Err(Error::Precondition(format!("root {r} shares a component with another root")));
            }
            seen[r] = true;
            let start = bfs.len();
            bfs.push(r);
            let mut head = start;
            while head < bfs.len() {
                let u = bfs[head];
                head += 1;
                for &v in &adj[u] {
                    if Some(v) == parent[u] {
                        continue;
                    }
                    if seen[v] {
                        return Err(Error::Precondition("the network is not a tree".into()));
                    }
                    seen[v] = true;
                    parent[v] = Some(u);
                    bfs.push(v);
                }
            }
        }
        if bfs.len() != n {
            return Err(Error::Precondition("the roots do not reach every node".into()));
        }
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                children[p].push(v);
            }
        }
        let residual = (0..n)
            .map(|v| match parent[v] {
                Some(p) => (network.threshold(v) - network.weight(p, v)).max(0),
                None => network.threshold(v),
            })
            .collect();
        bfs.reverse();
        Ok(RootedTree { roots: roots.to_vec(), parent, children, postorder: bfs, residual })
    }

    /// Orientation for a network classified as a tree, path or forest.
    pub fn from_topology(network: &InfluenceNetwork, topology: &Topology) -> Result<Self> {
        match topology {
            Topology::Tree { root } => Self::new(network, *root),
            Topology::Path { order } if order.is_empty() => Self::forest(network, &[]),
            Topology::Path { order } => Self::new(network, order[0].min(*order.last().unwrap())),
            Topology::Forest { roots } => Self::forest(network, roots),
            other => Err(Error::Precondition(format!("tree solver needs a tree, got {}", other.name()))),
        }
    }

    pub fn roots(&self) -> &[NodeId] {
        &self.roots
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.parent[v]
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.children[v]
    }

    pub fn postorder(&self) -> &[NodeId] {
        &self.postorder
    }

    /// `t'(v)`; equals `t(v)` at a root.
    pub fn residual_threshold(&self, v: NodeId) -> Threshold {
        self.residual[v]
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }
}

/// Choice record of one knapsack cell.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Choice {
    /// Budget left to the first `i − 1` children; child `i` gets the rest.
    pub split: u32,
    /// Round slot chosen for child `i`.
    pub slot: u16,
    pub residual: bool,
    /// Child `i` is declared before the parent and counts towards `k`.
    pub contrib: bool,
}

/// A knapsack table over the children, `(d + 1) × width`, row 0 being the
/// empty forest.
#[derive(Clone, Debug)]
pub struct SplitTable {
    width: usize,
    values: Vec<ExtCount>,
    choices: Vec<Choice>,
}

impl SplitTable {
    pub fn value(&self, i: usize, j: usize) -> ExtCount {
        self.values[i * self.width + j]
    }

    pub fn choice(&self, i: usize, j: usize) -> Choice {
        self.choices[i * self.width + j]
    }

    pub fn rows(&self) -> usize {
        self.values.len().checked_div(self.width).unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.width
    }
}

/// `B_τ[i][j][k]` for one node and one round, `(d + 1) × width × (t(v) + 1)`.
#[derive(Clone, Debug)]
pub struct BTable {
    width: usize,
    kcap: usize,
    values: Vec<ExtCount>,
    choices: Vec<Choice>,
}

impl BTable {
    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.width + j) * self.kcap + k
    }

    pub fn value(&self, i: usize, j: usize, k: usize) -> ExtCount {
        self.values[self.at(i, j, k)]
    }

    pub fn choice(&self, i: usize, j: usize, k: usize) -> Choice {
        self.choices[self.at(i, j, k)]
    }

    /// Largest `k` stored, `t(v)` after clamping.
    pub fn max_demand(&self) -> usize {
        self.kcap - 1
    }
}

#[derive(Clone, Debug)]
pub struct NodeTables {
    pub a: SplitTable,
    /// `b[τ − 1]` is `B_τ`.
    pub b: Vec<BTable>,
    pub c: SplitTable,
}

/// One child's best values, summarized for its parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pick {
    value: ExtCount,
    slot: u16,
    residual: bool,
}

impl Pick {
    const NONE: Pick = Pick { value: ExtCount::NEG_INF, slot: 0, residual: false };

    fn better(self, other: Pick) -> Pick {
        if other.value > self.value {
            other
        } else {
            self
        }
    }
}

/// Prefix maxima of a child's original-threshold row and suffix maxima of its
/// residual row, per budget.
struct ChildSummary {
    slots: usize,
    pre_orig: Vec<Pick>,
    suf_resid: Vec<Pick>,
    up_weight: Weight,
}

impl ChildSummary {
    fn new(mis: &[ExtCount], width: usize, slots: usize, up_weight: Weight) -> Self {
        let mut pre_orig = vec![Pick::NONE; width * slots];
        let mut suf_resid = vec![Pick::NONE; width * (slots + 1)];
        for j in 0..width {
            let mut best = Pick::NONE;
            for s in 0..slots {
                let cand = Pick { value: mis[(j * slots + s) * 2], slot: s as u16, residual: false };
                // Ties go to the later slot, so seeding is the last resort.
                if cand.value >= best.value && cand.value.is_finite() {
                    best = cand;
                }
                pre_orig[j * slots + s] = best;
            }
            let mut best = Pick::NONE;
            for s in (0..slots).rev() {
                let cand = Pick { value: mis[(j * slots + s) * 2 + 1], slot: s as u16, residual: true };
                best = best.better(cand);
                suf_resid[j * (slots + 1) + s] = best;
            }
        }
        ChildSummary { slots, pre_orig, suf_resid, up_weight }
    }

    fn pre(&self, j: usize, s: usize) -> Pick {
        self.pre_orig[j * self.slots + s]
    }

    fn suf(&self, j: usize, s: usize) -> Pick {
        self.suf_resid[j * (self.slots + 1) + s]
    }

    /// Best over every slot with the original threshold (parent inert).
    fn inert(&self, j: usize) -> Pick {
        self.pre(j, self.slots - 1)
    }

    /// Parent seeded: the child is seeded itself, or uses the residual
    /// threshold from round 1.
    fn under_seeded_parent(&self, j: usize) -> Pick {
        let (seeded, rest) = (self.pre(j, 0), self.suf(j, 1));
        if seeded.value > rest.value {
            seeded
        } else {
            rest
        }
    }

    /// Parent declared at `tau`, child declared strictly earlier.
    fn helping(&self, j: usize, tau: usize) -> Pick {
        self.pre(j, tau - 1)
    }

    /// Parent declared at `tau`, child not required to help: declared no
    /// later than `tau` with its own threshold, or later with the residual.
    fn not_helping(&self, j: usize, tau: usize) -> Pick {
        let (early, late) = (self.pre(j, tau), self.suf(j, tau + 1));
        if early.value > late.value {
            early
        } else {
            late
        }
    }
}

/// Single-node table entry of a leaf.
///
/// 1 if the leaf is seeded within budget, or is declared in a round
/// `1 ≤ τ ≤ λ` with threshold 0; 0 for `τ = ∞`; `−∞` otherwise.
pub fn leaf_base(cost: Cost, lambda: u32, b: Cost, tau: Round, t: Threshold) -> ExtCount {
    match tau {
        Round::Never => ExtCount::ZERO,
        Round::At(0) if b >= cost => ExtCount::new(1),
        Round::At(r) if r >= 1 && r <= lambda && t == 0 => ExtCount::new(1),
        _ => ExtCount::NEG_INF,
    }
}

fn split_knapsack(children: &[ChildSummary], width: usize, pick: impl Fn(&ChildSummary, usize) -> Pick) -> SplitTable {
    let d = children.len();
    let mut values = vec![ExtCount::NEG_INF; (d + 1) * width];
    let mut choices = vec![Choice::default(); (d + 1) * width];
    values[..width].fill(ExtCount::ZERO);
    for (i, child) in children.iter().enumerate() {
        let picks: Vec<Pick> = (0..width).map(|j| pick(child, j)).collect();
        let (prev, next) = values.split_at_mut((i + 1) * width);
        let prev = &prev[i * width..];
        let next = &mut next[..width];
        let ch = &mut choices[(i + 1) * width..(i + 2) * width];
        for j in 0..width {
            let mut best = ExtCount::NEG_INF;
            for a in 0..=j {
                let cand = prev[a] + picks[j - a].value;
                if cand > best {
                    best = cand;
                    let p = picks[j - a];
                    ch[j] = Choice { split: a as u32, slot: p.slot, residual: p.residual, contrib: false };
                }
            }
            next[j] = best;
        }
    }
    SplitTable { width, values, choices }
}

/// `A_v`: `v` is seeded. Budgets `0..width` are those left after paying `c(v)`.
fn compute_a(children: &[ChildSummary], width: usize) -> SplitTable {
    split_knapsack(children, width, ChildSummary::under_seeded_parent)
}

/// `C_v`: `v` exerts no influence.
fn compute_c(children: &[ChildSummary], width: usize) -> SplitTable {
    split_knapsack(children, width, ChildSummary::inert)
}

/// `B_{v,τ}` for demands `k ∈ 0..=t_cap`.
fn compute_b(children: &[ChildSummary], width: usize, tau: usize, t_cap: usize) -> BTable {
    let d = children.len();
    let kcap = t_cap + 1;
    let row = width * kcap;
    let mut values = vec![ExtCount::NEG_INF; (d + 1) * row];
    let mut choices = vec![Choice::default(); (d + 1) * row];
    for j in 0..width {
        values[j * kcap] = ExtCount::ZERO;
    }
    for (i, child) in children.iter().enumerate() {
        let helping: Vec<Pick> = (0..width).map(|j| child.helping(j, tau)).collect();
        let idle: Vec<Pick> = (0..width).map(|j| child.not_helping(j, tau)).collect();
        let w = usize::try_from(child.up_weight).unwrap_or(usize::MAX);
        let (prev, next) = values.split_at_mut((i + 1) * row);
        let prev = &prev[i * row..];
        let next = &mut next[..row];
        let ch = &mut choices[(i + 1) * row..(i + 2) * row];
        for j in 0..width {
            let out = &mut next[j * kcap..(j + 1) * kcap];
            let out_ch = &mut ch[j * kcap..(j + 1) * kcap];
            for a in 0..=j {
                let p_idle = idle[j - a];
                let p_help = helping[j - a];
                let prev_row = &prev[a * kcap..(a + 1) * kcap];
                for k in 0..kcap {
                    let cand = prev_row[k] + p_idle.value;
                    if cand > out[k] {
                        out[k] = cand;
                        out_ch[k] = Choice { split: a as u32, slot: p_idle.slot, residual: p_idle.residual, contrib: false };
                    }
                    let cand = prev_row[k.saturating_sub(w)] + p_help.value;
                    if cand > out[k] {
                        out[k] = cand;
                        out_ch[k] = Choice { split: a as u32, slot: p_help.slot, residual: false, contrib: true };
                    }
                }
            }
        }
    }
    BTable { width, kcap, values, choices }
}

/// All DP tables of a rooted tree or forest, for every budget up to β.
#[derive(Clone, Debug)]
pub struct TreeTables {
    lambda: u32,
    budget: usize,
    slots: usize,
    costs: Vec<Cost>,
    thresholds: Vec<Threshold>,
    residual: Vec<Threshold>,
    rooted: RootedTree,
    up_weight: Vec<Weight>,
    mis: Vec<Vec<ExtCount>>,
    nodes: Vec<NodeTables>,
    top: SplitTable,
}

impl TreeTables {
    /// Fills every table bottom-up. Thresholds are clamped to `W(v) + 1`
    /// first; costs must be positive.
    pub fn compute(instance: &ProblemInstance, rooted: &RootedTree) -> Result<Self> {
        let g = clamp_thresholds(instance.network());
        let n = g.node_count();
        if rooted.node_count() != n {
            return Err(Error::Precondition("rooted tree does not match the network".into()));
        }
        if let Some(v) = (0..n).find(|&v| g.cost(v) < 1) {
            return Err(Error::Precondition(format!("node {v} has zero cost; normalize first")));
        }
        let lambda = instance.lambda();
        let slots = never_slot(lambda) + 1;
        // Budgets beyond the total cost change nothing.
        let budget = instance.budget().min(g.total_cost()) as usize;
        let width = budget + 1;
        let thresholds: Vec<Threshold> = g.thresholds().to_vec();
        let residual: Vec<Threshold> = (0..n)
            .map(|v| match rooted.parent(v) {
                Some(p) => (thresholds[v] - g.weight(p, v)).max(0),
                None => thresholds[v],
            })
            .collect();
        let up_weight: Vec<Weight> = (0..n).map(|v| rooted.parent(v).map_or(0, |p| g.weight(v, p))).collect();

        let mut mis: Vec<Vec<ExtCount>> = vec![Vec::new(); n];
        let mut nodes: Vec<Option<NodeTables>> = vec![None; n];
        for &v in rooted.postorder() {
            let kids: Vec<ChildSummary> = rooted
                .children(v)
                .iter()
                .map(|&c| ChildSummary::new(&mis[c], width, slots, up_weight[c]))
                .collect();
            let cost = g.cost(v) as usize;
            let t_full = thresholds[v] as usize;
            let t_res = residual[v] as usize;
            let a = compute_a(&kids, budget);
            let c = compute_c(&kids, width);
            let b: Vec<BTable> = (1..=lambda as usize).map(|tau| compute_b(&kids, width, tau, t_full)).collect();
            let d = kids.len();
            let mut row = vec![ExtCount::NEG_INF; width * slots * 2];
            for bud in 0..width {
                let seeded = if bud >= cost { a.value(d, bud - cost).succ() } else { ExtCount::NEG_INF };
                let base = bud * slots * 2;
                row[base] = seeded;
                row[base + 1] = seeded;
                for tau in 1..=lambda as usize {
                    row[base + tau * 2] = b[tau - 1].value(d, bud, t_full).succ();
                    row[base + tau * 2 + 1] = b[tau - 1].value(d, bud, t_res).succ();
                }
                let never = never_slot(lambda);
                row[base + never * 2] = c.value(d, bud);
                row[base + never * 2 + 1] = c.value(d, bud);
            }
            mis[v] = row;
            nodes[v] = Some(NodeTables { a, b, c });
        }
        let roots: Vec<ChildSummary> =
            rooted.roots().iter().map(|&r| ChildSummary::new(&mis[r], width, slots, 0)).collect();
        let top = compute_c(&roots, width);
        Ok(TreeTables {
            lambda,
            budget,
            slots,
            costs: g.costs().to_vec(),
            thresholds,
            residual,
            rooted: rooted.clone(),
            up_weight,
            mis,
            nodes: nodes.into_iter().map(|t| t.expect("every node is in the postorder")).collect(),
            top,
        })
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// Largest budget tabulated: `min(β, total cost)`.
    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn rooted(&self) -> &RootedTree {
        &self.rooted
    }

    pub fn node(&self, v: NodeId) -> &NodeTables {
        &self.nodes[v]
    }

    /// `MIS[v][b][τ][class]`. Budgets above the tabulated range read as the
    /// largest one.
    pub fn mis(&self, v: NodeId, b: usize, tau: Round, class: ThresholdClass) -> ExtCount {
        let b = b.min(self.budget);
        self.mis[v][(b * self.slots + round_slot(tau, self.lambda)) * 2 + class.index()]
    }

    /// Optimum over the whole tree with budget `b`.
    pub fn best_count(&self, b: usize) -> usize {
        let v = self.top.value(self.rooted.roots().len(), b.min(self.budget));
        v.value().unwrap_or(0) as usize
    }

    pub fn optimum(&self) -> usize {
        self.best_count(self.budget)
    }

    /// A target set of cost at most `b` reaching [`Self::best_count`]`(b)`.
    pub fn reconstruct(&self, b: usize) -> Vec<NodeId> {
        let b = b.min(self.budget);
        let never = never_slot(self.lambda);
        let mut stack: Vec<(NodeId, usize, usize, bool)> = Vec::new();
        let roots = self.rooted.roots();
        let mut j = b;
        for i in (1..=roots.len()).rev() {
            let ch = self.top.choice(i, j);
            stack.push((roots[i - 1], j - ch.split as usize, ch.slot as usize, false));
            j = ch.split as usize;
        }
        let mut set = Vec::new();
        while let Some((v, bud, slot, residual)) = stack.pop() {
            let kids = self.rooted.children(v);
            let tables = &self.nodes[v];
            debug_assert!(self.mis[v][(bud * self.slots + slot) * 2 + residual as usize].is_finite());
            if slot == 0 {
                set.push(v);
                let mut j = bud - self.costs[v] as usize;
                for i in (1..=kids.len()).rev() {
                    let ch = tables.a.choice(i, j);
                    stack.push((kids[i - 1], j - ch.split as usize, ch.slot as usize, ch.residual));
                    j = ch.split as usize;
                }
            } else if slot == never {
                let mut j = bud;
                for i in (1..=kids.len()).rev() {
                    let ch = tables.c.choice(i, j);
                    stack.push((kids[i - 1], j - ch.split as usize, ch.slot as usize, ch.residual));
                    j = ch.split as usize;
                }
            } else {
                let table = &tables.b[slot - 1];
                let mut k = (if residual { self.residual[v] } else { self.thresholds[v] }) as usize;
                let mut j = bud;
                for i in (1..=kids.len()).rev() {
                    let ch = table.choice(i, j, k);
                    let child = kids[i - 1];
                    stack.push((child, j - ch.split as usize, ch.slot as usize, ch.residual));
                    if ch.contrib {
                        k = k.saturating_sub(self.up_weight[child] as usize);
                    }
                    j = ch.split as usize;
                }
                debug_assert_eq!(k, 0);
            }
        }
        set.sort_unstable();
        set
    }

    /// The MIS table as JSON, with node ids mapped through `ids`.
    pub fn to_json(&self, ids: &[NodeId]) -> Value {
        let cell = |x: ExtCount| match x.value() {
            Some(v) => json!(v),
            None => json!("-inf"),
        };
        let nodes: Vec<Value> = (0..self.mis.len())
            .map(|v| {
                let rows: Vec<Value> = (0..=self.budget)
                    .map(|b| {
                        let per_tau: Vec<Value> = (0..self.slots)
                            .map(|s| {
                                let base = (b * self.slots + s) * 2;
                                json!({
                                    "tau": crate::solver::slot_round(s, self.lambda).to_string(),
                                    "original": cell(self.mis[v][base]),
                                    "residual": cell(self.mis[v][base + 1]),
                                })
                            })
                            .collect();
                        json!({ "budget": b, "cells": per_tau })
                    })
                    .collect();
                json!({
                    "id": ids[v],
                    "parent": self.rooted.parent(v).map(|p| ids[p]),
                    "threshold": self.thresholds[v],
                    "residual_threshold": self.residual[v],
                    "mis": rows,
                })
            })
            .collect();
        json!({
            "lambda": self.lambda,
            "budget": self.budget,
            "roots": self.rooted.roots().iter().map(|&r| ids[r]).collect::<Vec<_>>(),
            "optimum": self.optimum(),
            "nodes": nodes,
        })
    }
}

/// Solves a tree (or forest) instance exactly and returns a witness.
pub fn solve_tree(instance: &ProblemInstance, rooted: &RootedTree) -> Result<Solution> {
    solve_tree_with_tables(instance, rooted).map(|(s, _)| s)
}

pub fn solve_tree_with_tables(instance: &ProblemInstance, rooted: &RootedTree) -> Result<(Solution, TreeTables)> {
    let tables = TreeTables::compute(instance, rooted)?;
    let set = tables.reconstruct(tables.budget());
    let solution = Solution::evaluate(instance.network(), &set, instance.lambda())?;
    debug_assert_eq!(solution.influenced_count, tables.optimum());
    Ok((solution, tables))
}
