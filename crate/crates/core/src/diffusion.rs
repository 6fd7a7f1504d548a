//! Synchronous weighted-threshold diffusion.
//!
//! `Influenced[S, 0] = S`, and a node outside the active set becomes active
//! in round `τ > 0` when the weights of its in-arcs from nodes active by
//! round `τ - 1` sum to at least its threshold. All activations of a round
//! read only the previous round's active set.

use crate::error::{Error, Result};
use crate::ext::Round;
use crate::network::InfluenceNetwork;
use crate::NodeId;

/// Per-node activation rounds of one diffusion run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffusionTrace {
    rounds: Vec<Round>,
    lambda: u32,
    rounds_to_fixpoint: u32,
}

impl DiffusionTrace {
    pub fn from_rounds(rounds: Vec<Round>, lambda: u32) -> Self {
        let rounds_to_fixpoint = rounds.iter().filter_map(|r| r.finite()).max().unwrap_or(0);
        DiffusionTrace { rounds, lambda, rounds_to_fixpoint }
    }

    pub fn activation_round(&self, v: NodeId) -> Round {
        self.rounds[v]
    }

    pub fn rounds(&self) -> &[Round] {
        &self.rounds
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// The last round in which some node was activated (0 if only seeds are
    /// active). Never exceeds `min(lambda, n)`.
    pub fn rounds_to_fixpoint(&self) -> u32 {
        self.rounds_to_fixpoint
    }

    /// `|Influenced[S, tau]|`.
    pub fn influenced_count(&self, tau: u32) -> usize {
        self.rounds.iter().filter(|r| r.is_within(tau)).count()
    }

    /// `|Influenced[S, lambda]|`.
    pub fn count(&self) -> usize {
        self.influenced_count(self.lambda)
    }

    /// `Influenced[S, tau]`, ascending.
    pub fn influenced(&self, tau: u32) -> Vec<NodeId> {
        (0..self.rounds.len()).filter(|&v| self.rounds[v].is_within(tau)).collect()
    }
}

/// Runs the diffusion from `seeds` for at most `lambda` rounds.
pub fn diffuse(network: &InfluenceNetwork, seeds: &[NodeId], lambda: u32) -> Result<DiffusionTrace> {
    if let Some(&v) = seeds.iter().find(|&&v| v >= network.node_count()) {
        return Err(Error::UnknownNode(v));
    }
    let mut sim = Simulator::new(network);
    sim.run(seeds, lambda);
    Ok(DiffusionTrace::from_rounds(sim.rounds.clone(), lambda))
}

/// Event-driven simulator with reusable scratch space. Only nodes that
/// received new influence in the previous round are re-examined.
pub(crate) struct Simulator<'a> {
    network: &'a InfluenceNetwork,
    rounds: Vec<Round>,
    acc: Vec<i64>,
    stamp: Vec<u32>,
    epoch: u32,
    frontier: Vec<NodeId>,
    next: Vec<NodeId>,
    touched: Vec<NodeId>,
    zero_threshold: Vec<NodeId>,
}

impl<'a> Simulator<'a> {
    pub(crate) fn new(network: &'a InfluenceNetwork) -> Self {
        let n = network.node_count();
        Simulator {
            network,
            rounds: vec![Round::Never; n],
            acc: vec![0; n],
            stamp: vec![0; n],
            epoch: 0,
            frontier: Vec::new(),
            next: Vec::new(),
            touched: Vec::new(),
            zero_threshold: (0..n).filter(|&v| network.threshold(v) == 0).collect(),
        }
    }

    /// Simulates and returns `|Influenced[S, lambda]|`. Seeds must be valid ids.
    pub(crate) fn run(&mut self, seeds: &[NodeId], lambda: u32) -> usize {
        let g = self.network;
        self.rounds.iter_mut().for_each(|r| *r = Round::Never);
        self.acc.iter_mut().for_each(|a| *a = 0);
        self.frontier.clear();
        for &s in seeds {
            if self.rounds[s] == Round::Never {
                self.rounds[s] = Round::At(0);
                self.frontier.push(s);
            }
        }
        let mut count = self.frontier.len();
        for tau in 1..=lambda {
            self.epoch = self.epoch.wrapping_add(1);
            if self.epoch == 0 {
                self.stamp.iter_mut().for_each(|s| *s = 0);
                self.epoch = 1;
            }
            self.touched.clear();
            for &u in &self.frontier {
                for &(v, w) in g.out_arcs(u) {
                    if self.rounds[v] == Round::Never {
                        self.acc[v] += w;
                        if self.stamp[v] != self.epoch {
                            self.stamp[v] = self.epoch;
                            self.touched.push(v);
                        }
                    }
                }
            }
            if tau == 1 {
                for &v in &self.zero_threshold {
                    if self.stamp[v] != self.epoch {
                        self.stamp[v] = self.epoch;
                        self.touched.push(v);
                    }
                }
            }
            self.next.clear();
            for &v in &self.touched {
                if self.rounds[v] == Round::Never && self.acc[v] >= g.threshold(v) {
                    self.next.push(v);
                }
            }
            if self.next.is_empty() {
                break;
            }
            for &v in &self.next {
                self.rounds[v] = Round::At(tau);
            }
            count += self.next.len();
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::Arc;

    fn unit_path(t: &[i64]) -> InfluenceNetwork {
        let n = t.len();
        let arcs = (0..n - 1).flat_map(|i| [Arc::new(i, i + 1, 1), Arc::new(i + 1, i, 1)]);
        InfluenceNetwork::new(t.to_vec(), vec![1; n], arcs).unwrap()
    }

    /// Direct transcription of the set recurrence, one full sweep per round.
    fn reference(g: &InfluenceNetwork, seeds: &[NodeId], lambda: u32) -> Vec<Round> {
        let n = g.node_count();
        let mut rounds = vec![Round::Never; n];
        for &s in seeds {
            rounds[s] = Round::At(0);
        }
        for tau in 1..=lambda {
            let prev = rounds.clone();
            for u in 0..n {
                if prev[u] != Round::Never {
                    continue;
                }
                let inflow: i64 = g
                    .in_arcs(u)
                    .iter()
                    .filter(|&&(v, _)| prev[v] != Round::Never)
                    .map(|&(_, w)| w)
                    .sum();
                if inflow >= g.threshold(u) {
                    rounds[u] = Round::At(tau);
                }
            }
        }
        rounds
    }

    #[test]
    fn empty_seed_set_with_positive_thresholds() {
        let g = unit_path(&[1, 2, 1]);
        let tr = diffuse(&g, &[], 5).unwrap();
        assert!(tr.rounds().iter().all(|&r| r == Round::Never));
        assert_eq!(tr.influenced_count(3), 0);
        assert_eq!(tr.rounds_to_fixpoint(), 0);
    }

    #[test]
    fn path_seeded_in_the_middle() {
        let g = unit_path(&[1, 2, 1]);
        let tr = diffuse(&g, &[1], 2).unwrap();
        assert_eq!(tr.rounds(), &[Round::At(1), Round::At(0), Round::At(1)]);
        assert_eq!(tr.count(), 3);
        assert_eq!(tr.influenced_count(0), 1);
        assert_eq!(tr.influenced(1), vec![0, 1, 2]);
    }

    #[test]
    fn zero_threshold_activates_in_round_one() {
        let g = InfluenceNetwork::new(vec![0, 3], vec![1, 1], [Arc::new(1, 0, 1)]).unwrap();
        let tr = diffuse(&g, &[], 1).unwrap();
        assert_eq!(tr.activation_round(0), Round::At(1));
        assert_eq!(tr.activation_round(1), Round::Never);
    }

    #[test]
    fn latency_bound_cuts_the_cascade() {
        let g = unit_path(&[1, 1, 1, 1]);
        let tr = diffuse(&g, &[0], 2).unwrap();
        assert_eq!(tr.rounds(), &[Round::At(0), Round::At(1), Round::At(2), Round::Never]);
        assert_eq!(tr.rounds_to_fixpoint(), 2);
    }

    #[test]
    fn unknown_seed() {
        let g = unit_path(&[1, 1]);
        assert_eq!(diffuse(&g, &[2], 1).unwrap_err(), Error::UnknownNode(2));
    }

    #[test]
    fn matches_round_by_round_sweep() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..10);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.3) {
                        arcs.push(Arc::new(u, v, rng.gen_range(0..4)));
                    }
                }
            }
            let t = (0..n).map(|_| rng.gen_range(0..5)).collect();
            let g = InfluenceNetwork::new(t, vec![1; n], arcs).unwrap();
            let seeds: Vec<_> = (0..n).filter(|_| rng.gen_bool(0.25)).collect();
            let lambda = rng.gen_range(0..6);
            assert_eq!(diffuse(&g, &seeds, lambda).unwrap().rounds(), reference(&g, &seeds, lambda).as_slice());
        }
    }
}
