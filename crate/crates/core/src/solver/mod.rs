//! Exact solvers for the structured topologies.

pub mod complete;
pub mod cycle;
pub mod path;
pub mod tree;

pub use complete::solve_complete_unweighted;
pub use cycle::solve_cycle;
pub use path::{min_cost_for_coverage, solve_path, PathMode, PathTables};
pub use tree::{leaf_base, solve_tree, solve_tree_with_tables, RootedTree, TreeTables};

/// Slot index of round `τ ∈ {0, …, λ}`; slot `λ + 1` stands for "not
/// within λ rounds".
#[inline]
pub(crate) fn never_slot(lambda: u32) -> usize {
    lambda as usize + 1
}

pub(crate) fn slot_round(slot: usize, lambda: u32) -> crate::Round {
    if slot == never_slot(lambda) {
        crate::Round::Never
    } else {
        crate::Round::At(slot as u32)
    }
}

pub(crate) fn round_slot(round: crate::Round, lambda: u32) -> usize {
    match round {
        crate::Round::At(r) => {
            assert!(r <= lambda, "round {r} exceeds lambda {lambda}");
            r as usize
        }
        crate::Round::Never => never_slot(lambda),
    }
}

/// Which threshold a node uses in a DP cell: its own, or the residual one
/// left over once its parent (on a path: its successor) is already active.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThresholdClass {
    Original,
    Residual,
}

impl ThresholdClass {
    pub(crate) fn index(self) -> usize {
        match self {
            ThresholdClass::Original => 0,
            ThresholdClass::Residual => 1,
        }
    }

}
