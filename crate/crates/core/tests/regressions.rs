//! Instances where activation order inside a neighborhood matters.

mod common;

use common::symmetric;
use latmax::oracle::brute_force;
use latmax::solver::{solve_path, solve_tree, RootedTree};
use latmax::ProblemInstance;

/// Path 0-1-2-3 with thresholds 0, 2, 1, 0 and unit weights, nothing can
/// be bought. Node 0 and node 3 come up in round 1, node 2 in round 2
/// (from 3), and node 1 needs both neighbors, so only in round 3. A reading
/// in which a node's left neighbor has to be active strictly before it
/// *and* its right neighbor strictly after it cannot represent node 1.
#[test]
fn path_node_fed_from_both_sides() {
    let g = symmetric(&[0, 2, 1, 0], &[9; 4], &[(0, 1, 1, 1), (1, 2, 1, 1), (2, 3, 1, 1)]);
    for (lambda, want) in [(1, 2), (2, 3), (3, 4)] {
        let inst = ProblemInstance::new(g.clone(), lambda, 0).unwrap();
        assert_eq!(brute_force(&inst).unwrap().influenced_count, want);
        assert_eq!(solve_path(&inst, &[0, 1, 2, 3]).unwrap().influenced_count, want);
    }
}

/// Star centre with threshold 2 and two leaves of threshold 0 and 1: the
/// first leaf is active in round 1, the second only after the centre. The
/// centre itself is fed by one leaf bought at round 0 and one that joins in
/// round 1, so the children that justify it come up in different rounds.
#[test]
fn tree_children_from_different_rounds() {
    let g = symmetric(&[2, 0, 1, 1], &[5, 5, 1, 5], &[(0, 1, 1, 1), (0, 2, 1, 1), (2, 3, 1, 1)]);
    let rooted = RootedTree::new(&g, 0).unwrap();
    for lambda in 1..=4 {
        for budget in 0..=2 {
            let inst = ProblemInstance::new(g.clone(), lambda, budget).unwrap();
            let want = brute_force(&inst).unwrap().influenced_count;
            assert_eq!(solve_tree(&inst, &rooted).unwrap().influenced_count, want, "lambda {lambda} budget {budget}");
        }
    }
}

/// The children of a node must count as helping only if they are active
/// strictly before it, even when they are active within the same horizon.
#[test]
fn tree_child_active_too_late_does_not_help() {
    // Chain 0-1-2 rooted at 0; only node 2 is cheap.
    let g = symmetric(&[1, 1, 1], &[9, 9, 1], &[(0, 1, 1, 1), (1, 2, 1, 1)]);
    let rooted = RootedTree::new(&g, 0).unwrap();
    for lambda in 1..=3 {
        let inst = ProblemInstance::new(g.clone(), lambda, 1).unwrap();
        let want = brute_force(&inst).unwrap().influenced_count;
        assert_eq!(want, (1 + lambda as usize).min(3));
        assert_eq!(solve_tree(&inst, &rooted).unwrap().influenced_count, want);
    }
}
