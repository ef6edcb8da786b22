use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bnpin::model::{emit_network, member, BooleanNetwork, StateVector, TargetSet};
use bnpin::structure::{network_structure, to_dot, DotStyle, Edge};
use bnpin::synthesis::{synthesize, PlanReport};
use bnpin::verify::{
    check_set_stabilization, random_state, time_bound_check, Budget, DEFAULT_EXHAUSTIVE_CAP,
};
use bnpin::{lambda_partition, parse_network};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const FORMAT_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "bnpin", version, about = "Pinning control of Boolean networks toward a target set")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split nodes into free and fixed-state nodes.
    Partition {
        model: PathBuf,
        #[arg(short, long)]
        target: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Select pinned nodes and design their controllers.
    Synthesize {
        model: PathBuf,
        #[arg(short, long)]
        target: String,
        /// Stabilize within this many steps.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        tau: Option<u64>,
        /// Plan JSON; stdout when omitted.
        #[arg(long)]
        plan: Option<PathBuf>,
        /// Controlled model in the rule format.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check that every trajectory enters the target set and stays there.
    Verify {
        model: PathBuf,
        #[arg(short, long)]
        target: String,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 40)]
        horizon: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        exhaustive_cap: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Graphviz export of the network structure or state transition graph.
    Export {
        model: PathBuf,
        #[arg(long, value_enum, default_value_t = What::Structure)]
        what: What,
        /// Plan JSON whose cut arcs and pinned nodes are styled.
        #[arg(long)]
        plan: Option<PathBuf>,
        /// Target set; its states are filled in the transition graph.
        #[arg(short, long)]
        target: Option<String>,
        /// Above 16 nodes the transition graph is sampled from this many states.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 40)]
        horizon: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Structure,
    Stg,
}

const STG_EXHAUSTIVE_NODES: usize = 16;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_model(path: &Path) -> Result<BooleanNetwork> {
    parse_network(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// `@file` reads the target from a file; anything else is the target itself.
fn load_target(spec: &str, net: &BooleanNetwork) -> Result<TargetSet> {
    let text = match spec.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None => spec.to_string(),
    };
    let target = TargetSet::parse(&text, net)?;
    target.check_len(net.len())?;
    Ok(target)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|k| k + 1).collect()
}

fn partition(model: &Path, target: &str, out: Option<&Path>) -> Result<ExitCode> {
    let net = load_model(model)?;
    let target = load_target(target, &net)?;
    let p = lambda_partition(&target, net.len())?;
    let doc = json!({
        "format_version": FORMAT_VERSION,
        "nodes": net.names(),
        "free": one_based(&p.free),
        "fixed": one_based(&p.fixed),
        "fixed_names": p.fixed.iter().map(|&k| net.name(k)).collect::<Vec<_>>(),
        "alpha": p.alpha.iter().map(|&b| u8::from(b)).collect::<Vec<_>>(),
    });
    write_out(out, &pretty(&doc))?;
    Ok(ExitCode::SUCCESS)
}

fn synthesize_cmd(
    model: &Path,
    target: &str,
    tau: Option<u64>,
    plan: Option<&Path>,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let net = load_model(model)?;
    let target = load_target(target, &net)?;
    let tau = tau.map(|t| usize::try_from(t).context("tau too large")).transpose()?;
    let s = synthesize(&net, &target, tau)?;
    let mut report = serde_json::to_string_pretty(&s.report(&net))?;
    report.push('\n');
    write_out(plan, &report)?;
    if let Some(out) = out {
        let mut text = String::from("targets, factors\n");
        text.push_str(&emit_network(&s.controlled.network));
        fs::write(out, text).with_context(|| format!("writing {}", out.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(model: &Path, target: &str, budget: Budget, out: Option<&Path>) -> Result<ExitCode> {
    let net = load_model(model)?;
    let target = load_target(target, &net)?;
    let report = check_set_stabilization(&net, &target, &budget)?;
    let fixed = lambda_partition(&target, net.len())?.fixed;
    let time_bound = match report.diameter {
        Some(_) if fixed.len() <= budget.exhaustive_cap => {
            Some(time_bound_check(&net, &fixed, budget.exhaustive_cap)?)
        }
        _ => None,
    };
    let passed = report.passed && time_bound.as_ref().is_none_or(|t| t.passed);
    let mut doc = serde_json::to_value(&report)?;
    let obj = doc.as_object_mut().expect("report is an object");
    obj.insert("format_version".into(), json!(FORMAT_VERSION));
    obj.insert("time_bound".into(), serde_json::to_value(&time_bound)?);
    obj.insert("passed".into(), json!(passed));
    write_out(out, &pretty(&doc))?;
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn structure_dot(net: &BooleanNetwork, plan: Option<&PlanReport>) -> String {
    let g = network_structure(net);
    let zero = |v: &[usize]| v.iter().map(|k| k.saturating_sub(1)).collect::<Vec<_>>();
    let (removed, pinned, fixed): (Vec<Edge>, Vec<usize>, Vec<usize>) = match plan {
        Some(p) => (p.removed_arcs.clone(), zero(&p.pinned), zero(&p.partition.fixed)),
        None => Default::default(),
    };
    to_dot(
        &g,
        net.names(),
        &DotStyle {
            removed: &removed,
            pinned: &pinned,
            highlighted: &fixed,
        },
    )
}

/// Transition graph over all states, or over the trajectories of sampled
/// initial states for larger networks.
fn stg_dot(
    net: &BooleanNetwork,
    target: Option<&TargetSet>,
    samples: Option<usize>,
    horizon: usize,
    seed: u64,
) -> Result<String> {
    let n = net.len();
    let mut arcs: BTreeSet<(StateVector, StateVector)> = BTreeSet::new();
    if n <= STG_EXHAUSTIVE_NODES && samples.is_none() {
        for x in 0..1u64 << n {
            let s = StateVector::from_index(x, n);
            arcs.insert((s.clone(), net.step(&s)));
        }
    } else {
        let Some(samples) = samples else {
            bail!("{n} nodes is above {STG_EXHAUSTIVE_NODES}; pass --samples to sample the transition graph");
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let mut x = random_state(n, &mut rng);
            for _ in 0..horizon {
                let next = net.step(&x);
                if !arcs.insert((x, next.clone())) {
                    break;
                }
                x = next;
            }
        }
    }
    let states: BTreeSet<&StateVector> = arcs.iter().flat_map(|(a, b)| [a, b]).collect();
    let mut out = String::from("digraph stg {\n    node [shape=box, fontname=monospace];\n");
    for s in &states {
        let fill = match target {
            Some(t) if member(t, s) => ", style=filled, fillcolor=lightgrey",
            _ => "",
        };
        writeln!(out, "    \"{s}\" [label=\"{s}\"{fill}];")?;
    }
    for (a, b) in &arcs {
        writeln!(out, "    \"{a}\" -> \"{b}\";")?;
    }
    out.push_str("}\n");
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn export(
    model: &Path,
    what: What,
    plan: Option<&Path>,
    target: Option<&str>,
    samples: Option<usize>,
    horizon: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let net = load_model(model)?;
    let text = match what {
        What::Structure => {
            let plan: Option<PlanReport> = plan
                .map(|p| -> Result<PlanReport> {
                    serde_json::from_str(&read(p)?).with_context(|| format!("parsing {}", p.display()))
                })
                .transpose()?;
            if let Some(p) = &plan {
                if p.nodes.len() != net.len() {
                    bail!("plan covers {} nodes but the model has {}", p.nodes.len(), net.len());
                }
            }
            structure_dot(&net, plan.as_ref())
        }
        What::Stg => {
            let target = target.map(|t| load_target(t, &net)).transpose()?;
            stg_dot(&net, target.as_ref(), samples, horizon, seed)?
        }
    };
    write_out(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Partition { model, target, out } => partition(&model, &target, out.as_deref()),
        Command::Synthesize {
            model,
            target,
            tau,
            plan,
            out,
        } => synthesize_cmd(&model, &target, tau, plan.as_deref(), out.as_deref()),
        Command::Verify {
            model,
            target,
            samples,
            horizon,
            seed,
            exhaustive_cap,
            out,
        } => {
            let budget = Budget {
                horizon,
                samples: usize::try_from(samples).context("sample count too large")?,
                seed,
                exhaustive_cap,
            };
            verify(&model, &target, budget, out.as_deref())
        }
        Command::Export {
            model,
            what,
            plan,
            target,
            samples,
            horizon,
            seed,
            out,
        } => export(
            &model,
            what,
            plan.as_deref(),
            target.as_deref(),
            samples,
            horizon,
            seed,
            out.as_deref(),
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
