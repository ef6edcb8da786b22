//! Seeded random networks and targets for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::model::{BoolExpr, BooleanNetwork, TargetSet};

/// Random rule over `inputs`: a random truth table rendered as a
/// sum of minterms, so every function is reachable.
fn random_table_rule<R: Rng>(inputs: &[usize], rng: &mut R) -> BoolExpr {
    let k = inputs.len();
    let terms = (0..1usize << k)
        .filter(|_| rng.gen())
        .map(|c| {
            BoolExpr::and(
                inputs
                    .iter()
                    .enumerate()
                    .map(|(p, &i)| {
                        if (c >> p) & 1 == 1 {
                            BoolExpr::var(i)
                        } else {
                            BoolExpr::not(BoolExpr::var(i))
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    BoolExpr::or(terms)
}

/// Random AND/OR/XOR tree with random negations over `inputs`; cheap for
/// wide rules and large networks.
fn random_gate_rule<R: Rng>(inputs: &[usize], rng: &mut R) -> BoolExpr {
    let literals: Vec<BoolExpr> = inputs
        .iter()
        .map(|&i| {
            if rng.gen_bool(0.3) {
                BoolExpr::not(BoolExpr::var(i))
            } else {
                BoolExpr::var(i)
            }
        })
        .collect();
    match rng.gen_range(0..3) {
        0 => BoolExpr::and(literals),
        1 => BoolExpr::or(literals),
        _ => {
            let split = literals.len() / 2;
            let mut rest = literals;
            let tail = rest.split_off(split);
            BoolExpr::or(vec![BoolExpr::and(rest), BoolExpr::and(tail)])
        }
    }
}

fn pick_inputs<R: Rng>(n: usize, max_in_degree: usize, rng: &mut R) -> Vec<usize> {
    let k = rng.gen_range(0..=max_in_degree.min(n));
    let mut inputs = rand::seq::index::sample(rng, n, k).into_vec();
    inputs.sort_unstable();
    inputs
}

/// Random network whose rules are uniformly random truth tables over at most
/// `max_in_degree` inputs (suited to small `n`).
pub fn random_network<R: Rng>(n: usize, max_in_degree: usize, rng: &mut R) -> BooleanNetwork {
    let rules = (0..n)
        .map(|_| random_table_rule(&pick_inputs(n, max_in_degree, rng), rng))
        .collect();
    BooleanNetwork::anonymous(rules).expect("in-degree within arity cap")
}

/// Random sparse network built from gate-shaped rules (suited to large `n`).
pub fn random_sparse_network<R: Rng>(
    n: usize,
    max_in_degree: usize,
    rng: &mut R,
) -> BooleanNetwork {
    let rules = (0..n)
        .map(|_| random_gate_rule(&pick_inputs(n, max_in_degree, rng), rng))
        .collect();
    BooleanNetwork::anonymous(rules).expect("in-degree within arity cap")
}

/// Pattern target fixing each node with probability `fixed_ratio`.
pub fn random_pattern<R: Rng>(n: usize, fixed_ratio: f64, rng: &mut R) -> TargetSet {
    TargetSet::Pattern(
        (0..n)
            .map(|_| rng.gen_bool(fixed_ratio).then(|| rng.gen()))
            .collect(),
    )
}

/// Pattern target fixing exactly `fixed` nodes chosen uniformly.
pub fn random_pattern_with<R: Rng>(n: usize, fixed: usize, rng: &mut R) -> TargetSet {
    let mut nodes: Vec<usize> = (0..n).collect();
    nodes.shuffle(rng);
    let mut pattern = vec![None; n];
    for &k in &nodes[..fixed.min(n)] {
        pattern[k] = Some(rng.gen());
    }
    TargetSet::Pattern(pattern)
}
