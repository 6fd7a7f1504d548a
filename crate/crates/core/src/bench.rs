//! Timing helpers for empirical scaling checks.

use std::time::{Duration, Instant};

use crate::generate::{random_instance, Caps, Shape};
use crate::solver::path::{PathMode, PathTables};
use crate::solver::tree::{RootedTree, TreeTables};
use crate::topology::{detect_topology, Topology};

/// Best of `reps` runs of `f`.
pub fn time_min<F: FnMut()>(reps: usize, mut f: F) -> Duration {
    (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed()
        })
        .min()
        .expect("at least one repetition")
}

/// Least-squares slope of `log t` against `log x`.
pub fn fit_exponent(xs: &[f64], ts: &[f64]) -> f64 {
    assert_eq!(xs.len(), ts.len());
    assert!(xs.len() >= 2, "need at least two points");
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let lt: Vec<f64> = ts.iter().map(|t| t.ln()).collect();
    let k = xs.len() as f64;
    let mx = lx.iter().sum::<f64>() / k;
    let mt = lt.iter().sum::<f64>() / k;
    let num: f64 = lx.iter().zip(&lt).map(|(x, t)| (x - mx) * (t - mt)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

/// Seconds to fill the path tables (costs only) on a random path.
pub fn time_path(n: usize, lambda: u32, reps: usize, seed: u64) -> f64 {
    let caps = Caps { max_lambda: 1, ..Caps::default() };
    let inst = random_instance(Shape::Path, n, seed, &caps).expect("valid caps");
    let order = PathTables::order_of(inst.network()).expect("generated path");
    time_min(reps, || {
        let t = PathTables::compute(inst.network(), &order, lambda, PathMode::CostsOnly).expect("path tables");
        std::hint::black_box(t.min_cost(n / 2));
    })
    .as_secs_f64()
}

/// Seconds to fill the tree tables on a random tree with the given budget.
pub fn time_tree(n: usize, lambda: u32, budget: i64, reps: usize, seed: u64) -> f64 {
    let caps = Caps { max_lambda: 1, max_cost: 3, ..Caps::default() };
    let inst = random_instance(Shape::Tree, n, seed, &caps).expect("valid caps");
    let inst = crate::network::ProblemInstance::new(inst.network().clone(), lambda, budget).expect("valid instance");
    let topo = detect_topology(inst.network());
    let rooted = RootedTree::from_topology(inst.network(), &topo).expect("generated tree");
    debug_assert!(!matches!(topo, Topology::General));
    time_min(reps, || {
        let t = TreeTables::compute(&inst, &rooted).expect("tree tables");
        std::hint::black_box(t.optimum());
    })
    .as_secs_f64()
}

/// One measured series.
#[derive(Clone, Debug)]
pub struct Series {
    pub label: String,
    pub xs: Vec<f64>,
    pub seconds: Vec<f64>,
}

impl Series {
    pub fn exponent(&self) -> f64 {
        fit_exponent(&self.xs, &self.seconds)
    }

    /// Mean ratio between consecutive timings.
    pub fn mean_ratio(&self) -> f64 {
        let r: Vec<f64> = self.seconds.windows(2).map(|w| w[1] / w[0]).collect();
        r.iter().sum::<f64>() / r.len() as f64
    }
}

pub fn path_n_series(ns: &[usize], lambda: u32, reps: usize) -> Series {
    Series {
        label: format!("path, lambda = {lambda}, n doubling"),
        xs: ns.iter().map(|&n| n as f64).collect(),
        seconds: ns.iter().map(|&n| time_path(n, lambda, reps, 1)).collect(),
    }
}

pub fn path_lambda_series(n: usize, lambdas: &[u32], reps: usize) -> Series {
    Series {
        label: format!("path, n = {n}, lambda doubling"),
        xs: lambdas.iter().map(|&l| l as f64).collect(),
        seconds: lambdas.iter().map(|&l| time_path(n, l, reps, 1)).collect(),
    }
}

pub fn tree_budget_series(n: usize, lambda: u32, budgets: &[i64], reps: usize) -> Series {
    Series {
        label: format!("tree, n = {n}, lambda = {lambda}, budget doubling"),
        xs: budgets.iter().map(|&b| b as f64).collect(),
        seconds: budgets.iter().map(|&b| time_tree(n, lambda, b, reps, 1)).collect(),
    }
}
