//! JSON instance and solution files.
//!
//! Node ids in instance files must be exactly `0..n` (in any order). Rounds
//! past the latency bound are written as the string `"inf"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::diffusion::DiffusionTrace;
use crate::error::{Error, Result};
use crate::ext::Round;
use crate::network::{Arc, InfluenceNetwork, ProblemInstance};
use crate::solution::Solution;
use crate::{Cost, NodeId, Threshold};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct NodeRecord {
    pub id: NodeId,
    pub threshold: Threshold,
    pub cost: Cost,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct InstanceFile {
    pub nodes: Vec<NodeRecord>,
    pub arcs: Vec<Arc>,
    pub lambda: u32,
    pub budget: Cost,
    /// Free-form generator metadata; ignored when solving.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Value>,
}

impl InstanceFile {
    pub fn from_instance(instance: &ProblemInstance) -> Self {
        let g = instance.network();
        InstanceFile {
            nodes: (0..g.node_count())
                .map(|v| NodeRecord { id: v, threshold: g.threshold(v), cost: g.cost(v) })
                .collect(),
            arcs: g.arcs().to_vec(),
            lambda: instance.lambda(),
            budget: instance.budget(),
            meta: None,
        }
    }

    pub fn to_instance(&self) -> Result<ProblemInstance> {
        let n = self.nodes.len();
        let mut thresholds = vec![None; n];
        let mut costs = vec![0; n];
        for rec in &self.nodes {
            if rec.id >= n {
                return Err(Error::Parse(format!("node id {} outside 0..{n}", rec.id)));
            }
            if thresholds[rec.id].is_some() {
                return Err(Error::Parse(format!("node id {} appears twice", rec.id)));
            }
            thresholds[rec.id] = Some(rec.threshold);
            costs[rec.id] = rec.cost;
        }
        let thresholds = thresholds.into_iter().map(|t| t.expect("ids are a permutation")).collect();
        let network = InfluenceNetwork::new(thresholds, costs, self.arcs.iter().copied())?;
        ProblemInstance::new(network, self.lambda, self.budget)
    }
}

pub fn parse_instance(text: &str) -> Result<ProblemInstance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.to_instance()
}

pub fn instance_to_json(instance: &ProblemInstance, meta: Option<Value>) -> Value {
    let mut file = InstanceFile::from_instance(instance);
    file.meta = meta;
    serde_json::to_value(file).expect("instance files serialize")
}

fn round_json(r: Round) -> Value {
    match r {
        Round::At(t) => json!(t),
        Round::Never => json!("inf"),
    }
}

/// `{"<id>": round | "inf"}`, keys in id order.
pub fn activation_rounds_json(trace: &DiffusionTrace) -> Value {
    let map: BTreeMap<NodeId, Value> = trace.rounds().iter().enumerate().map(|(v, &r)| (v, round_json(r))).collect();
    let obj: serde_json::Map<String, Value> = map.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    Value::Object(obj)
}

pub fn solution_to_json(solution: &Solution) -> Value {
    json!({
        "target_set": solution.target_set,
        "cost": solution.cost,
        "influenced_count": solution.influenced_count,
        "activation_round": activation_rounds_json(&solution.trace),
    })
}

pub fn trace_to_json(trace: &DiffusionTrace) -> Value {
    json!({
        "lambda": trace.lambda(),
        "influenced_count": trace.count(),
        "rounds_to_fixpoint": trace.rounds_to_fixpoint(),
        "activation_round": activation_rounds_json(trace),
    })
}

/// The fields of a solution file needed to replay it.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct SolutionSummary {
    pub target_set: Vec<NodeId>,
    pub cost: Cost,
    pub influenced_count: usize,
}

pub fn parse_solution(text: &str) -> Result<SolutionSummary> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
        "nodes": [{"id": 1, "threshold": 2, "cost": 1}, {"id": 0, "threshold": 1, "cost": 3}],
        "arcs": [{"src": 0, "dst": 1, "weight": 2}],
        "lambda": 2,
        "budget": 3
    }"#;

    #[test]
    fn parse_and_round_trip() {
        let inst = parse_instance(SAMPLE).unwrap();
        assert_eq!(inst.network().thresholds(), &[1, 2]);
        assert_eq!(inst.network().costs(), &[3, 1]);
        let back = parse_instance(&instance_to_json(&inst, Some(json!({"seed": 4}))).to_string()).unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn bad_ids_and_syntax() {
        assert!(matches!(parse_instance("{"), Err(Error::Parse(_))));
        let gap = SAMPLE.replace(r#""id": 1"#, r#""id": 5"#);
        assert!(matches!(parse_instance(&gap), Err(Error::Parse(_))));
        let neg = SAMPLE.replace(r#""threshold": 2"#, r#""threshold": -2"#);
        assert!(matches!(parse_instance(&neg), Err(Error::InvalidNetwork(_))));
    }

    #[test]
    fn never_is_written_as_inf() {
        let inst = parse_instance(SAMPLE).unwrap();
        let s = Solution::evaluate(inst.network(), &[], 2).unwrap();
        let v = solution_to_json(&s);
        assert_eq!(v["activation_round"]["0"], json!("inf"));
        let summary = parse_solution(&v.to_string()).unwrap();
        assert_eq!(summary.influenced_count, 0);
    }
}
