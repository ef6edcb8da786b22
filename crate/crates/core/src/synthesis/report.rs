//! Serializable plan summary. All node numbers are 1-based.

use serde::{Deserialize, Serialize};

use super::{Coupling, Synthesis};
use crate::model::BooleanNetwork;
use crate::structure::Edge;

pub const PLAN_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub free: Vec<usize>,
    pub fixed: Vec<usize>,
    /// Target value per fixed node, aligned with `fixed`.
    pub alpha: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ControllerReport {
    pub node: usize,
    pub name: String,
    /// 1, 2 or 3: the selection part that pinned the node first.
    pub part: u8,
    pub coupling: Coupling,
    pub inputs: Vec<usize>,
    pub dropped: Vec<usize>,
    /// Values of the dropped inputs inside the target, aligned with `dropped`.
    pub frozen: Vec<u8>,
    pub overwritten: bool,
    pub dynamics_matrix: String,
    pub target_matrix: String,
    pub feedback_matrix: String,
    pub feedback: String,
    pub controlled_rule: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanReport {
    pub format_version: u32,
    pub nodes: Vec<String>,
    pub tau: Option<usize>,
    pub partition: PartitionReport,
    pub part1: Vec<usize>,
    pub part1_arcs: Vec<Edge>,
    pub part2: Vec<usize>,
    pub feedback_arcs: Vec<Edge>,
    pub diameter_nodes: Vec<usize>,
    pub diameter_arcs: Vec<Edge>,
    pub part3: Vec<usize>,
    pub pinned: Vec<usize>,
    pub removed_arcs: Vec<Edge>,
    pub controllers: Vec<ControllerReport>,
}

fn one_based(nodes: &[usize]) -> Vec<usize> {
    nodes.iter().map(|k| k + 1).collect()
}

impl PlanReport {
    pub fn new(original: &BooleanNetwork, synthesis: &Synthesis) -> Self {
        let plan = &synthesis.plan;
        let names = original.names();
        let controlled = &synthesis.controlled.network;
        let part_of = |j: usize| {
            if plan.part1.contains(&j) {
                1
            } else if plan.part2.nodes.contains(&j) {
                2
            } else {
                3
            }
        };
        let controllers = synthesis
            .controllers
            .iter()
            .map(|c| {
                let target = plan.target(c.node).expect("target per controller");
                ControllerReport {
                    node: c.node + 1,
                    name: names[c.node].clone(),
                    part: part_of(c.node),
                    coupling: c.coupling,
                    inputs: one_based(&c.inputs),
                    dropped: one_based(&target.dropped),
                    frozen: target.frozen.iter().map(|&b| u8::from(b)).collect(),
                    overwritten: target.overwritten,
                    dynamics_matrix: c.s_f.to_string(),
                    target_matrix: target.matrix.to_string(),
                    feedback_matrix: c.s_phi.to_string(),
                    feedback: c.feedback.display(names).to_string(),
                    controlled_rule: controlled.rule(c.node).display(names).to_string(),
                }
            })
            .collect();
        PlanReport {
            format_version: PLAN_FORMAT_VERSION,
            nodes: names.to_vec(),
            tau: plan.tau,
            partition: PartitionReport {
                free: one_based(&plan.partition.free),
                fixed: one_based(&plan.partition.fixed),
                alpha: plan.partition.alpha.iter().map(|&b| u8::from(b)).collect(),
            },
            part1: one_based(&plan.part1),
            part1_arcs: plan.part1_arcs.clone(),
            part2: one_based(&plan.part2.nodes),
            feedback_arcs: plan.part2.feedback_arcs.clone(),
            diameter_nodes: one_based(&plan.part2.diameter_nodes),
            diameter_arcs: plan.part2.diameter_arcs.clone(),
            part3: one_based(&plan.part3),
            pinned: one_based(&plan.pinned()),
            removed_arcs: plan.removed_arcs.clone(),
            controllers,
        }
    }
}
