//! Browser demo: synthesize a pinning plan, lay out the network structure,
//! and simulate trajectories of the open and controlled networks.
//!
//! Every export takes and returns JSON strings. The plain functions are
//! ordinary Rust so they can be tested natively.

use bnpin::model::{emit_network, member, BooleanNetwork, StateVector, TargetSet};
use bnpin::structure::{network_structure, topological_order, Digraph, Edge};
use bnpin::synthesis::synthesize;
use bnpin::verify::{check_set_stabilization, random_state, trajectory, Budget};
use bnpin::{lambda_partition, parse_network};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest network simulated or laid out in the page.
const MAX_NODES: usize = 400;
const MAX_STEPS: usize = 200;

fn load(model: &str, target: &str) -> Result<(BooleanNetwork, TargetSet), String> {
    let net = parse_network(model).map_err(|e| e.to_string())?;
    if net.len() > MAX_NODES {
        return Err(format!("{} nodes; the demo handles at most {MAX_NODES}", net.len()));
    }
    let target = TargetSet::parse(target, &net).map_err(|e| e.to_string())?;
    target.check_len(net.len()).map_err(|e| e.to_string())?;
    Ok((net, target))
}

#[derive(Serialize)]
struct SynthesisView {
    plan: bnpin::synthesis::PlanReport,
    controlled_model: String,
    verified: bool,
    mode: bnpin::verify::VerificationMode,
    tau_star: usize,
    diameter_bound: Option<usize>,
}

/// Plan, controlled model text and a quick verification verdict.
pub fn synthesize_plan(model: &str, target: &str, tau: Option<usize>) -> Result<String, String> {
    let (net, target) = load(model, target)?;
    let s = synthesize(&net, &target, tau).map_err(|e| e.to_string())?;
    let budget = Budget {
        samples: 500,
        ..Budget::default()
    };
    let report = check_set_stabilization(&s.controlled.network, &target, &budget)
        .map_err(|e| e.to_string())?;
    let view = SynthesisView {
        plan: s.report(&net),
        controlled_model: emit_network(&s.controlled.network),
        verified: report.passed,
        mode: report.mode,
        tau_star: report.tau_star,
        diameter_bound: report.diameter_bound,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct NodeView {
    id: usize,
    name: String,
    x: f64,
    y: f64,
    fixed: bool,
}

#[derive(Serialize)]
struct ArcView {
    tail: usize,
    head: usize,
}

#[derive(Serialize)]
struct LayoutView {
    width: f64,
    height: f64,
    nodes: Vec<NodeView>,
    arcs: Vec<ArcView>,
}

const COLUMN_GAP: f64 = 110.0;
const ROW_GAP: f64 = 44.0;
const MARGIN: f64 = 40.0;

/// Layer of each vertex: longest distance from a source once feedback arcs
/// are ignored.
fn layers(g: &Digraph) -> Vec<usize> {
    let acyclic = g.without(&bnpin::structure::feedback_arc_set(g));
    let order = topological_order(&acyclic).expect("acyclic after removing feedback arcs");
    let mut layer = vec![0usize; g.vertex_count()];
    for v in order {
        for e in acyclic.in_arcs(v) {
            layer[v] = layer[v].max(layer[e.tail] + 1);
        }
    }
    layer
}

/// Layered drawing of the network structure. Nodes are 1-based.
pub fn structure_layout(model: &str, target: &str) -> Result<String, String> {
    let (net, target) = load(model, target)?;
    let fixed = lambda_partition(&target, net.len())
        .map_err(|e| e.to_string())?
        .fixed;
    let g = network_structure(&net);
    let layer = layers(&g);
    let mut rows = vec![0usize; layer.iter().max().map_or(0, |m| m + 1)];
    let mut nodes = Vec::with_capacity(net.len());
    for (v, &l) in layer.iter().enumerate() {
        nodes.push(NodeView {
            id: v + 1,
            name: net.name(v).to_string(),
            x: MARGIN + l as f64 * COLUMN_GAP,
            y: MARGIN + rows[l] as f64 * ROW_GAP,
            fixed: fixed.binary_search(&v).is_ok(),
        });
        rows[l] += 1;
    }
    let view = LayoutView {
        width: 2.0 * MARGIN + rows.len().saturating_sub(1) as f64 * COLUMN_GAP,
        height: 2.0 * MARGIN + rows.iter().max().map_or(0, |m| m.saturating_sub(1)) as f64 * ROW_GAP,
        nodes,
        arcs: g
            .arcs()
            .map(|Edge { tail, head }| ArcView {
                tail: tail + 1,
                head: head + 1,
            })
            .collect(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Raster {
    /// One bit string per time step, starting with the initial state.
    states: Vec<String>,
    inside: Vec<bool>,
}

/// Trajectory of `model` from `initial` (a bit string, or empty for a seeded
/// random state) over `steps` steps, with target membership per step.
pub fn simulate_raster(
    model: &str,
    target: &str,
    initial: &str,
    steps: usize,
    seed: u64,
) -> Result<String, String> {
    let (net, target) = load(model, target)?;
    let x0 = if initial.trim().is_empty() {
        random_state(net.len(), &mut ChaCha8Rng::seed_from_u64(seed))
    } else {
        let s: StateVector = initial.parse().map_err(|e: bnpin::Error| e.to_string())?;
        if s.len() != net.len() {
            return Err(format!("initial state has {} bits, model has {} nodes", s.len(), net.len()));
        }
        s
    };
    let states = trajectory(&net, &x0, steps.min(MAX_STEPS));
    let raster = Raster {
        inside: states.iter().map(|s| member(&target, s)).collect(),
        states: states.iter().map(|s| s.to_string()).collect(),
    };
    serde_json::to_string(&raster).map_err(|e| e.to_string())
}

/// Bundled example model and target.
pub fn example() -> String {
    serde_json::json!({
        "model": bnpin::fixtures::TLGL_MODEL,
        "target": bnpin::fixtures::TLGL_TARGET.trim(),
    })
    .to_string()
}

#[wasm_bindgen(js_name = synthesize)]
pub fn synthesize_js(model: &str, target: &str, tau: Option<u32>) -> Result<String, JsError> {
    synthesize_plan(model, target, tau.map(|t| t as usize)).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = layout)]
pub fn layout_js(model: &str, target: &str) -> Result<String, JsError> {
    structure_layout(model, target).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = simulate)]
pub fn simulate_js(
    model: &str,
    target: &str,
    initial: &str,
    steps: u32,
    seed: u32,
) -> Result<String, JsError> {
    simulate_raster(model, target, initial, steps as usize, u64::from(seed))
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = example)]
pub fn example_js() -> String {
    example()
}
