//! Pinning-controller synthesis: pinned-node selection, target matrices,
//! coupling equations and the rewritten network.

mod coupling;
mod report;
mod select;
mod sop;
mod target;

use crate::error::{Error, Result};
use crate::model::{BoolExpr, BooleanNetwork, TargetSet, TruthTable};
use crate::partition::{lambda_partition, NodePartition};
use crate::stp::{embed_nonfunctional, structure_matrix, LogicalMatrix};
use crate::structure::{is_acyclic, network_structure, Digraph, Edge};

pub use coupling::{closed_loop_matrix, solve_coupling, Coupling};
pub use report::{ControllerReport, PartitionReport, PlanReport, PLAN_FORMAT_VERSION};
pub use select::{select_part1, select_part2, select_part3, Part2};
pub use sop::sum_of_products;
pub use target::{build_target, NodeTarget};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinningPlan {
    pub partition: NodePartition,
    pub part1: Vec<usize>,
    pub part1_arcs: Vec<Edge>,
    pub part2: Part2,
    pub part3: Vec<usize>,
    /// Union of all cut arcs, sorted.
    pub removed_arcs: Vec<Edge>,
    /// One entry per pinned node, ascending by node.
    pub targets: Vec<NodeTarget>,
    pub tau: Option<usize>,
}

impl PinningPlan {
    /// All pinned nodes, ascending.
    pub fn pinned(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self
            .part1
            .iter()
            .chain(&self.part2.nodes)
            .chain(&self.part3)
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn target(&self, node: usize) -> Option<&NodeTarget> {
        self.targets.iter().find(|t| t.node == node)
    }
}

/// State-feedback law of one pinned node: `x_j⁺ = φ_j(x_{N_j}) ⊕_j f_j(x_{N_j})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Controller {
    pub node: usize,
    pub coupling: Coupling,
    /// Variables of `s_phi` and `s_f`: the in-neighbors of the node.
    pub inputs: Vec<usize>,
    pub s_f: LogicalMatrix,
    pub s_phi: LogicalMatrix,
    /// Target embedded over `inputs`, the right-hand side of the coupling equation.
    pub embedded_target: LogicalMatrix,
    pub feedback: BoolExpr,
}

impl Controller {
    /// Whether the coupling equation holds on every column.
    pub fn residual_is_zero(&self) -> Result<bool> {
        Ok(closed_loop_matrix(self.coupling, &self.s_phi, &self.s_f)? == self.embedded_target)
    }
}

/// Rewritten network together with the nodes whose rules were replaced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlledNetwork {
    pub network: BooleanNetwork,
    pub pinned: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Synthesis {
    pub plan: PinningPlan,
    pub controlled: ControlledNetwork,
    pub controllers: Vec<Controller>,
}

impl Synthesis {
    pub fn controller(&self, node: usize) -> Option<&Controller> {
        self.controllers.iter().find(|c| c.node == node)
    }

    pub fn report(&self, original: &BooleanNetwork) -> PlanReport {
        PlanReport::new(original, self)
    }
}

/// Controller for one pinned node given its target.
pub fn design_controller(net: &BooleanNetwork, target: &NodeTarget) -> Result<Controller> {
    let j = target.node;
    let s_f = structure_matrix(net.rule(j), &target.inputs)?;
    let embedded_target = embed_nonfunctional(&target.matrix, &target.inputs, &target.dropped)?;
    let (coupling, s_phi) = solve_coupling(&s_f, &embedded_target)?;
    let phi_table = TruthTable::from_fn(&target.inputs, |c| s_phi.value(c));
    Ok(Controller {
        node: j,
        coupling,
        inputs: target.inputs.clone(),
        s_f,
        s_phi,
        embedded_target,
        feedback: sum_of_products(&phi_table),
    })
}

/// Full pipeline: partition, three-part selection, target matrices,
/// couplings, and the rewritten network.
pub fn synthesize(net: &BooleanNetwork, target: &TargetSet, tau: Option<usize>) -> Result<Synthesis> {
    let partition = lambda_partition(target, net.len())?;
    let g = network_structure(net);

    let (part1, part1_arcs) = select_part1(&g, &partition);
    let part2 = select_part2(&g.without(&part1_arcs), &partition, tau)?;
    let mut pinned12: Vec<usize> = part1.iter().chain(&part2.nodes).copied().collect();
    pinned12.sort_unstable();
    pinned12.dedup();
    let part3 = select_part3(net, &partition, &pinned12);

    let mut removed_arcs: Vec<Edge> = part1_arcs.iter().copied().chain(part2.arcs()).collect();
    removed_arcs.sort_unstable();
    removed_arcs.dedup();

    let mut plan = PinningPlan {
        partition,
        part1,
        part1_arcs,
        part2,
        part3,
        removed_arcs,
        targets: Vec::new(),
        tau,
    };

    let mut controllers = Vec::new();
    let mut replacements = Vec::new();
    for j in plan.pinned() {
        let dropped: Vec<usize> = net
            .neighbors(j)
            .iter()
            .copied()
            .filter(|&i| plan.removed_arcs.contains(&Edge::new(i, j)))
            .collect();
        let node_target = build_target(j, net, &plan.partition, &dropped)?;
        let controller = design_controller(net, &node_target)?;
        replacements.push((
            j,
            controller
                .coupling
                .combine(controller.feedback.clone(), net.rule(j).clone()),
        ));
        plan.targets.push(node_target);
        controllers.push(controller);
    }

    let controlled = ControlledNetwork {
        network: net.with_rules(&replacements)?,
        pinned: plan.pinned(),
    };
    check_closed_acyclic(&controlled.network, &plan.partition.fixed)?;

    Ok(Synthesis {
        plan,
        controlled,
        controllers,
    })
}

/// Structure of the subnetwork on `fixed`, failing unless it reads no other node.
pub fn fixed_subgraph(net: &BooleanNetwork, fixed: &[usize]) -> Result<Digraph> {
    let mut in_fixed = vec![false; net.len()];
    fixed.iter().for_each(|&k| in_fixed[k] = true);
    for &j in fixed {
        if let Some(&i) = net.neighbors(j).iter().find(|&&i| !in_fixed[i]) {
            return Err(Error::NotClosed { node: j, input: i });
        }
    }
    Ok(network_structure(net).induced(fixed))
}

fn check_closed_acyclic(net: &BooleanNetwork, fixed: &[usize]) -> Result<()> {
    if is_acyclic(&fixed_subgraph(net, fixed)?) {
        Ok(())
    } else {
        Err(Error::Cyclic)
    }
}
