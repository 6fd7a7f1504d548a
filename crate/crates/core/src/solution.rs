use crate::diffusion::{diffuse, DiffusionTrace};
use crate::error::Result;
use crate::network::InfluenceNetwork;
use crate::{Cost, NodeId};

/// A target set together with its cost and the diffusion it triggers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub target_set: Vec<NodeId>,
    pub cost: Cost,
    pub influenced_count: usize,
    pub trace: DiffusionTrace,
}

impl Solution {
    /// Simulates `seeds` on `network`; the seed list is sorted and deduplicated.
    pub fn evaluate(network: &InfluenceNetwork, seeds: &[NodeId], lambda: u32) -> Result<Self> {
        let mut target_set = seeds.to_vec();
        target_set.sort_unstable();
        target_set.dedup();
        let trace = diffuse(network, &target_set, lambda)?;
        Ok(Solution {
            cost: network.cost_of(&target_set),
            influenced_count: trace.count(),
            target_set,
            trace,
        })
    }
}
