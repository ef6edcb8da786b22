//! Pinned-node selection in three parts.

use crate::error::{Error, Result};
use crate::model::BooleanNetwork;
use crate::partition::NodePartition;
use crate::structure::{boundary_arcs, enforce_diameter, feedback_arc_set, Digraph, Edge};

fn heads(arcs: &[Edge]) -> Vec<usize> {
    let mut nodes: Vec<usize> = arcs.iter().map(|e| e.head).collect();
    nodes.sort_unstable();
    nodes.dedup();
    nodes
}

/// Part I: cut every arc entering the fixed-state nodes from the free ones.
pub fn select_part1(g: &Digraph, partition: &NodePartition) -> (Vec<usize>, Vec<Edge>) {
    let arcs = boundary_arcs(g, &partition.free, &partition.fixed);
    (heads(&arcs), arcs)
}

/// Part II selection: feedback arcs, plus the in-arcs of the vertices sourced
/// to meet a stabilizing-time bound.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Part2 {
    pub nodes: Vec<usize>,
    pub feedback_arcs: Vec<Edge>,
    /// Vertices sourced for the time bound, in selection order.
    pub diameter_nodes: Vec<usize>,
    pub diameter_arcs: Vec<Edge>,
}

impl Part2 {
    pub fn arcs(&self) -> Vec<Edge> {
        let mut arcs: Vec<Edge> = self
            .feedback_arcs
            .iter()
            .chain(&self.diameter_arcs)
            .copied()
            .collect();
        arcs.sort_unstable();
        arcs.dedup();
        arcs
    }
}

/// Part II on the graph with Part-I arcs already removed.
///
/// With `tau`, the fixed-state subgraph is further cut until its longest path
/// has at most `tau - 1` arcs, so every trajectory settles within `tau` steps.
pub fn select_part2(
    g_after_part1: &Digraph,
    partition: &NodePartition,
    tau: Option<usize>,
) -> Result<Part2> {
    let sub = g_after_part1.induced(&partition.fixed);
    let feedback_arcs = feedback_arc_set(&sub);
    let mut part = Part2 {
        feedback_arcs,
        ..Part2::default()
    };
    if let Some(tau) = tau {
        if tau < 1 {
            return Err(Error::InfeasibleTau(tau));
        }
        let acyclic = sub.without(&part.feedback_arcs);
        let cut = enforce_diameter(&acyclic, &[], tau - 1)?;
        part.diameter_nodes = cut.sourced;
        part.diameter_arcs = cut.removed;
    }
    part.nodes = heads(&part.arcs());
    Ok(part)
}

/// Part III: fixed-state nodes, not yet pinned, whose dynamics do not map the
/// target values of their inputs to their own target value.
pub fn select_part3(
    net: &BooleanNetwork,
    partition: &NodePartition,
    already_pinned: &[usize],
) -> Vec<usize> {
    let alpha = partition.alpha_table();
    partition
        .fixed
        .iter()
        .copied()
        .filter(|j| !already_pinned.contains(j))
        .filter(|&j| {
            let value = net
                .rule(j)
                .eval_with(&|i: usize| alpha[i].unwrap_or(false));
            Some(value) != alpha[j]
        })
        .collect()
}
