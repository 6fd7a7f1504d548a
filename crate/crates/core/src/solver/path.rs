//! `O(n² λ)` exact DP for weighted paths.
//!
//! Nodes are taken in path order `v_0, …, v_{n-1}`. Every node gets a
//! declared slot `a`: 0 (seeded), `1..=λ` (active in round `a`, justified by
//! neighbors declared strictly earlier) or ∞ (not counted). Declared rounds
//! never undercut the real ones, and the real rounds of any target set are a
//! valid declaration, so optimizing over declarations is exact.
//!
//! `E[i][j][a][r]` is the least cost of a target set inside `v_0..=v_i` that
//! lets at least `j` of those nodes be declared within λ, with `v_i` declared
//! at slot `a`. The flag `r` records that `v_{i+1}` is declared strictly
//! before `a`, so the weight `w(v_{i+1}, v_i)` already counts towards `t(v_i)`.
//! The left neighbor's slot `x` must agree with the flag it assumed:
//! `r' = [a < x]`.

use crate::error::{Error, Result};
use crate::ext::ExtCost;
use crate::network::{InfluenceNetwork, ProblemInstance};
use crate::solution::Solution;
use crate::solver::never_slot;
use crate::topology::Topology;
use crate::{NodeId, Weight};

const NO_LEFT: u16 = u16::MAX;

/// What [`PathTables::compute`] keeps besides the final row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathMode {
    /// Only `min cost for ≥ j nodes`; no witness.
    CostsOnly,
    /// Choice records for witness reconstruction.
    Witness,
    /// Choice records and every `E` value.
    Full,
}

#[derive(Clone, Debug)]
pub struct PathTables {
    order: Vec<NodeId>,
    lambda: u32,
    slots: usize,
    /// `F(j)` for `j ∈ 0..=n`.
    best: Vec<ExtCost>,
    best_slot: Vec<u16>,
    /// Row `i` holds `(i + 2) × slots × 2` left-slot choices.
    choices: Vec<u16>,
    offsets: Vec<usize>,
    values: Vec<ExtCost>,
    mode: PathMode,
}

/// Minimum over a range of left cells, with the slot that reaches it.
#[derive(Clone, Copy)]
struct Best {
    cost: ExtCost,
    slot: u16,
}

const NONE: Best = Best { cost: ExtCost::INF, slot: NO_LEFT };

/// Checks that consecutive nodes of `order` carry every arc of `network`.
fn check_order(network: &InfluenceNetwork, order: &[NodeId]) -> Result<()> {
    let n = network.node_count();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n {
            return Err(Error::UnknownNode(v));
        }
        if pos[v] != usize::MAX {
            return Err(Error::Precondition(format!("node {v} repeats in the path order")));
        }
        pos[v] = i;
    }
    if order.len() != n {
        return Err(Error::Precondition("the path order must list every node once".into()));
    }
    if let Some(a) = network.arcs().iter().find(|a| pos[a.src].abs_diff(pos[a.dst]) != 1) {
        return Err(Error::Precondition(format!("arc {} -> {} does not follow the path", a.src, a.dst)));
    }
    Ok(())
}

impl PathTables {
    /// Path order of a network classified as a path.
    pub fn order_of(network: &InfluenceNetwork) -> Result<Vec<NodeId>> {
        match crate::topology::detect_topology(network) {
            Topology::Path { order } => Ok(order),
            other => Err(Error::Precondition(format!("path solver needs a path, got {}", other.name()))),
        }
    }

    pub fn compute(network: &InfluenceNetwork, order: &[NodeId], lambda: u32, mode: PathMode) -> Result<Self> {
        check_order(network, order)?;
        let n = order.len();
        let slots = never_slot(lambda) + 1;
        if slots >= NO_LEFT as usize {
            return Err(Error::InvalidInstance(format!("lambda {lambda} is too large for the path solver")));
        }
        let never = never_slot(lambda);
        let keep_choices = mode != PathMode::CostsOnly;
        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0usize;
        for i in 0..n {
            offsets.push(total);
            total += (i + 2) * slots * 2;
        }
        offsets.push(total);
        let mut choices = if keep_choices { vec![NO_LEFT; total] } else { Vec::new() };
        let mut values = if mode == PathMode::Full { Vec::with_capacity(total) } else { Vec::new() };

        let mut prev: Vec<ExtCost> = Vec::new();
        let mut pre_orig: Vec<Best> = Vec::new();
        let mut suf_resid: Vec<Best> = Vec::new();
        for i in 0..n {
            let v = order[i];
            let t = network.threshold(v);
            let c = ExtCost::new(network.cost(v));
            let w_left: Weight = if i > 0 { network.weight(order[i - 1], v) } else { 0 };
            let w_right: Weight = if i + 1 < n { network.weight(order[i + 1], v) } else { 0 };
            let rmax = if i + 1 < n { 2 } else { 1 };

            // Prefix minima of the left row with r' = 0, suffix minima with r' = 1.
            if i > 0 {
                let rows = i + 1;
                pre_orig.clear();
                pre_orig.resize(rows * slots, NONE);
                suf_resid.clear();
                suf_resid.resize(rows * (slots + 1), NONE);
                for jp in 0..rows {
                    let mut best = NONE;
                    for x in 0..slots {
                        let e = prev[(jp * slots + x) * 2];
                        if e <= best.cost && e.is_finite() {
                            best = Best { cost: e, slot: x as u16 };
                        }
                        pre_orig[jp * slots + x] = best;
                    }
                    let mut best = NONE;
                    for x in (0..slots).rev() {
                        let e = prev[(jp * slots + x) * 2 + 1];
                        if e < best.cost {
                            best = Best { cost: e, slot: x as u16 };
                        }
                        suf_resid[jp * (slots + 1) + x] = best;
                    }
                }
            }
            let left_any = |jp: usize, a: usize| -> Best {
                if i == 0 {
                    return if jp == 0 { Best { cost: ExtCost::ZERO, slot: NO_LEFT } } else { NONE };
                }
                if jp > i {
                    return NONE;
                }
                let p = pre_orig[jp * slots + a];
                let s = suf_resid[jp * (slots + 1) + a + 1];
                if p.cost < s.cost {
                    p
                } else {
                    s
                }
            };
            let left_before = |jp: usize, a: usize| -> Best {
                if i == 0 || jp > i {
                    NONE
                } else {
                    pre_orig[jp * slots + a - 1]
                }
            };

            let rows = i + 2;
            let mut cur = vec![ExtCost::INF; rows * slots * 2];
            let ch = if keep_choices { &mut choices[offsets[i]..offsets[i + 1]] } else { &mut [][..] };
            for j in 0..rows {
                let jm = j.saturating_sub(1);
                for a in 0..slots {
                    for r in 0..rmax {
                        let pick = if a == 0 {
                            let l = left_any(jm, 0);
                            Best { cost: c + l.cost, slot: l.slot }
                        } else if a == never {
                            left_any(j, never)
                        } else {
                            let need = (t - if r == 1 { w_right } else { 0 }).max(0);
                            if need == 0 {
                                left_any(jm, a)
                            } else if i > 0 && w_left >= need {
                                left_before(jm, a)
                            } else {
                                NONE
                            }
                        };
                        let at = (j * slots + a) * 2 + r;
                        cur[at] = pick.cost;
                        if keep_choices {
                            ch[at] = pick.slot;
                        }
                    }
                }
            }
            if mode == PathMode::Full {
                values.extend_from_slice(&cur);
            }
            prev = cur;
        }

        let mut best = vec![ExtCost::INF; n + 1];
        let mut best_slot = vec![NO_LEFT; n + 1];
        if n == 0 {
            best[0] = ExtCost::ZERO;
        }
        for j in 0..prev.len() / (slots * 2) {
            // Scan from ∞ down so ties keep the non-seeding declaration.
            for a in (0..slots).rev() {
                let e = prev[(j * slots + a) * 2];
                if e < best[j] {
                    best[j] = e;
                    best_slot[j] = a as u16;
                }
            }
        }
        Ok(PathTables { order: order.to_vec(), lambda, slots, best, best_slot, choices, offsets, values, mode })
    }

    pub fn order(&self) -> &[NodeId] {
        &self.order
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// Least cost letting at least `j` nodes be active within λ rounds.
    pub fn min_cost(&self, j: usize) -> ExtCost {
        self.best.get(j).copied().unwrap_or(ExtCost::INF)
    }

    /// Largest coverage reachable with `budget`.
    pub fn best_count(&self, budget: i64) -> usize {
        (0..self.best.len()).rev().find(|&j| self.best[j].value().is_some_and(|c| c <= budget)).unwrap_or(0)
    }

    /// `E[i][j][a][r]`; only available in [`PathMode::Full`].
    pub fn value(&self, i: usize, j: usize, a: usize, residual: bool) -> Option<ExtCost> {
        if self.mode != PathMode::Full || i >= self.order.len() || a >= self.slots {
            return None;
        }
        if j > i + 1 {
            return Some(ExtCost::INF);
        }
        Some(self.values[self.offsets[i] + (j * self.slots + a) * 2 + residual as usize])
    }

    /// A target set of cost [`Self::min_cost`]`(j)`.
    pub fn reconstruct(&self, j: usize) -> Result<Vec<NodeId>> {
        if self.mode == PathMode::CostsOnly {
            return Err(Error::Precondition("path tables were computed without choices".into()));
        }
        if !self.min_cost(j).is_finite() {
            return Err(Error::Precondition(format!("no target set covers {j} nodes")));
        }
        let never = never_slot(self.lambda);
        let mut set = Vec::new();
        let (mut j, mut a, mut r) = (j, self.best_slot[j] as usize, 0usize);
        for i in (0..self.order.len()).rev() {
            if a == 0 {
                set.push(self.order[i]);
            }
            let x = self.choices[self.offsets[i] + (j * self.slots + a) * 2 + r] as usize;
            if a != never {
                j = j.saturating_sub(1);
            }
            if i > 0 {
                r = (a < x) as usize;
                a = x;
            }
        }
        set.sort_unstable();
        Ok(set)
    }
}

/// Solves a path instance exactly. `order` lists the nodes along the path.
pub fn solve_path(instance: &ProblemInstance, order: &[NodeId]) -> Result<Solution> {
    let g = instance.network();
    let tables = PathTables::compute(g, order, instance.lambda(), PathMode::Witness)?;
    let k = tables.best_count(instance.budget());
    let set = tables.reconstruct(k)?;
    let solution = Solution::evaluate(g, &set, instance.lambda())?;
    debug_assert!(solution.influenced_count >= k);
    Ok(solution)
}

/// Least cost of a target set activating at least `alpha` nodes within
/// `lambda` rounds of a path network; `inf` when no set does.
pub fn min_cost_for_coverage(network: &InfluenceNetwork, lambda: u32, alpha: usize) -> Result<ExtCost> {
    let order = PathTables::order_of(network)?;
    let tables = PathTables::compute(network, &order, lambda, PathMode::CostsOnly)?;
    Ok(tables.min_cost(alpha))
}
