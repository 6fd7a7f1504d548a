mod common;

use common::{declared_mis, symmetric};
use latmax::generate::{random_instance, Caps, Shape};
use latmax::solver::{RootedTree, ThresholdClass, TreeTables};
use latmax::{detect_topology, ProblemInstance, Round};

const CLASSES: [ThresholdClass; 2] = [ThresholdClass::Original, ThresholdClass::Residual];

fn rounds(lambda: u32) -> Vec<Round> {
    (0..=lambda).map(Round::At).chain([Round::Never]).collect()
}

#[test]
fn every_cell_matches_exhaustive_declarations() {
    let caps = Caps { max_lambda: 3, max_budget: 4, ..Caps::default() };
    for seed in 0..120 {
        let n = 1 + seed as usize % 6;
        let inst = random_instance(Shape::Tree, n, seed, &caps).unwrap();
        let g = inst.network();
        let rooted = RootedTree::from_topology(g, &detect_topology(g)).unwrap();
        let tables = TreeTables::compute(&inst, &rooted).unwrap();
        for v in 0..n {
            for b in 0..=tables.budget() {
                for (s, &tau) in rounds(inst.lambda()).iter().enumerate() {
                    for class in CLASSES {
                        let want = declared_mis(g, &rooted, v, inst.lambda(), b as i64, s, class);
                        let got = tables.mis(v, b, tau, class).value();
                        assert_eq!(got, want, "seed {seed} v {v} b {b} tau {tau} {class:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn monotone_in_budget_and_threshold_class() {
    let caps = Caps { max_lambda: 3, max_budget: 8, ..Caps::default() };
    for seed in 0..100 {
        let inst = random_instance(Shape::Tree, 10, seed, &caps).unwrap();
        let g = inst.network();
        let rooted = RootedTree::from_topology(g, &detect_topology(g)).unwrap();
        let t = TreeTables::compute(&inst, &rooted).unwrap();
        for v in 0..10 {
            for tau in rounds(inst.lambda()) {
                for b in 0..=t.budget() {
                    let o = t.mis(v, b, tau, ThresholdClass::Original);
                    let r = t.mis(v, b, tau, ThresholdClass::Residual);
                    assert!(r >= o);
                    if b > 0 {
                        assert!(o >= t.mis(v, b - 1, tau, ThresholdClass::Original));
                    }
                }
            }
        }
    }
}

/// Star with centre 0 (threshold 1) and leaves of thresholds 2, 1, 1; unit
/// costs and weights, two rounds, budget 1. Seeding the centre reaches the
/// two easy leaves, a centre activated in round 1 reaches all four, one
/// activated in round 2 has no time left, and an inactive centre leaves a
/// single bought leaf.
#[test]
fn star_row_is_not_monotone_in_tau() {
    let g = symmetric(&[1, 2, 1, 1], &[1; 4], &[(0, 1, 1, 1), (0, 2, 1, 1), (0, 3, 1, 1)]);
    let inst = ProblemInstance::new(g.clone(), 2, 1).unwrap();
    let rooted = RootedTree::new(&g, 0).unwrap();
    let t = TreeTables::compute(&inst, &rooted).unwrap();
    let row: Vec<Option<i32>> = rounds(2).iter().map(|&r| t.mis(0, 1, r, ThresholdClass::Original).value()).collect();
    assert_eq!(row, vec![Some(3), Some(4), Some(2), Some(1)]);
    for (s, v) in row.iter().enumerate() {
        assert_eq!(*v, declared_mis(&g, &rooted, 0, 2, 1, s, ThresholdClass::Original));
    }
    let row0: Vec<Option<i32>> = rounds(2).iter().map(|&r| t.mis(0, 0, r, ThresholdClass::Original).value()).collect();
    assert_eq!(row0, vec![None, None, None, Some(0)]);
    assert_eq!(t.optimum(), 4);
}

#[test]
fn dump_contains_every_node() {
    let g = symmetric(&[1, 2, 1], &[1; 3], &[(0, 1, 1, 1), (0, 2, 1, 1)]);
    let inst = ProblemInstance::new(g.clone(), 1, 1).unwrap();
    let t = TreeTables::compute(&inst, &RootedTree::new(&g, 0).unwrap()).unwrap();
    let v = t.to_json(&[10, 11, 12]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(v["nodes"][1]["parent"], 10);
    assert_eq!(v["nodes"][0]["mis"][0]["cells"][0]["original"], "-inf");
    assert_eq!(v["nodes"][0]["mis"][0]["cells"][2]["tau"], "inf");
}
