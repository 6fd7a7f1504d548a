use latmax::generate::{random_instance, Caps, Shape};
use latmax::oracle::brute_force;
use latmax::{clamp_thresholds, diffuse, normalize_zero_cost, solve, Arc, InfluenceNetwork, ProblemInstance, SolverChoice};
use proptest::prelude::*;

fn network(max_n: usize) -> impl Strategy<Value = InfluenceNetwork> {
    (1..=max_n).prop_flat_map(|n| {
        let arcs = prop::collection::vec((0..n, 0..n, 0i64..4), 0..n * 3);
        (prop::collection::vec(0i64..6, n), prop::collection::vec(0i64..4, n), arcs).prop_map(|(t, c, arcs)| {
            let mut seen = std::collections::HashSet::new();
            let arcs: Vec<Arc> = arcs
                .into_iter()
                .filter(|&(u, v, _)| u != v && seen.insert((u, v)))
                .map(|(u, v, w)| Arc::new(u, v, w))
                .collect();
            InfluenceNetwork::new(t, c, arcs).unwrap()
        })
    })
}

fn seeds(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..=n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn more_rounds_never_shrink_the_active_set(g in network(10), s in any::<prop::sample::Index>(), lambda in 0u32..6) {
        let seed = s.index(g.node_count());
        let tr = diffuse(&g, &[seed], lambda + 1).unwrap();
        for tau in 0..=lambda {
            let a = tr.influenced(tau);
            let b = tr.influenced(tau + 1);
            prop_assert!(a.iter().all(|v| b.contains(v)));
        }
        // Truncating the horizon gives the same prefix.
        let short = diffuse(&g, &[seed], lambda).unwrap();
        prop_assert_eq!(short.influenced(lambda), tr.influenced(lambda));
    }

    #[test]
    fn more_seeds_never_shrink_the_active_set(g in network(10), extra in seeds(10), lambda in 0u32..5) {
        let n = g.node_count();
        let extra: Vec<usize> = extra.into_iter().filter(|&v| v < n).collect();
        let base: Vec<usize> = extra.iter().copied().step_by(2).collect();
        let small = diffuse(&g, &base, lambda).unwrap();
        let large = diffuse(&g, &extra, lambda).unwrap();
        prop_assert!(small.influenced(lambda).iter().all(|v| large.influenced(lambda).contains(v)));
    }

    #[test]
    fn fixpoint_within_n_rounds(g in network(10), s in seeds(10)) {
        let n = g.node_count();
        let s: Vec<usize> = s.into_iter().filter(|&v| v < n).collect();
        let a = diffuse(&g, &s, n as u32).unwrap();
        let b = diffuse(&g, &s, 3 * n as u32 + 1).unwrap();
        prop_assert_eq!(a.rounds(), b.rounds());
        prop_assert!(a.rounds_to_fixpoint() as usize <= n);
    }

    #[test]
    fn clamping_keeps_the_diffusion(g in network(10), s in seeds(10), lambda in 0u32..6) {
        let n = g.node_count();
        let s: Vec<usize> = s.into_iter().filter(|&v| v < n).collect();
        prop_assert_eq!(diffuse(&g, &s, lambda).unwrap(), diffuse(&clamp_thresholds(&g), &s, lambda).unwrap());
    }

    #[test]
    fn normalization_keeps_the_optimum(g in network(8), lambda in 1u32..4, budget in 0i64..5) {
        let inst = ProblemInstance::new(g.clone(), lambda, budget).unwrap();
        let red = normalize_zero_cost(&g);
        let reduced = ProblemInstance::new(red.network.clone(), lambda, budget).unwrap();
        let best = brute_force(&inst).unwrap();
        let best_red = brute_force(&reduced).unwrap();
        let mut lifted = red.to_original(&best_red.target_set);
        lifted.extend_from_slice(&red.forced_seeds);
        let replay = diffuse(&g, &lifted, lambda).unwrap();
        prop_assert_eq!(replay.count(), best.influenced_count);
    }

    #[test]
    fn auto_routing_agrees_with_the_oracle(
        shape in prop::sample::select(vec![Shape::Path, Shape::Cycle, Shape::Tree, Shape::Complete]),
        n in 3usize..10,
        seed in any::<u64>(),
        zero_costs in any::<bool>(),
    ) {
        let caps = Caps { min_cost: if zero_costs { 0 } else { 1 }, max_threshold: 5, ..Caps::default() };
        let inst = random_instance(shape, n, seed, &caps).unwrap();
        let auto = solve(&inst, SolverChoice::Auto).unwrap();
        let brute = solve(&inst, SolverChoice::Brute).unwrap();
        prop_assert_eq!(auto.influenced_count, brute.influenced_count);
        prop_assert!(auto.cost <= inst.budget());
        let replay = diffuse(inst.network(), &auto.target_set, inst.lambda()).unwrap();
        prop_assert_eq!(replay.count(), auto.influenced_count);
    }
}
