//! Simulation-based verification of set stabilization.
//!
//! Small networks are checked over their whole state space. Larger ones are
//! checked exhaustively on the closed fixed-state subnetwork, which decides
//! target membership on its own, plus seeded random sampling of full states.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{BoolExpr, BooleanNetwork, StateVector, TargetSet};
use crate::partition::{lambda_partition, projection};
use crate::structure::{is_acyclic, longest_path, network_structure};

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 22;
/// Largest state space enumerated even when a caller raises the cap.
pub const HARD_EXHAUSTIVE_CAP: usize = 30;
pub const DEFAULT_ATTRACTOR_CAP: usize = 20;
const MAX_REPORTED_VIOLATIONS: usize = 16;
const TABLE_ARITY: usize = 16;
const INF: u32 = u32::MAX;
const UNSEEN: u32 = u32::MAX - 1;
const ON_PATH: u32 = u32::MAX - 2;

#[cfg(feature = "parallel")]
fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}

enum Rule {
    /// Bit `c` of `table` is the value when input `p` holds bit `p` of `c`.
    Table { inputs: Vec<usize>, table: Vec<u64> },
    Expr(BoolExpr),
}

/// Network with small rules flattened into lookup tables.
pub struct CompiledNetwork {
    rules: Vec<Rule>,
}

impl CompiledNetwork {
    pub fn new(net: &BooleanNetwork) -> Self {
        let rules = (0..net.len())
            .map(|k| {
                let inputs = net.neighbors(k).to_vec();
                if inputs.len() > TABLE_ARITY {
                    return Rule::Expr(net.rule(k).clone());
                }
                let size = 1usize << inputs.len();
                let mut table = vec![0u64; size.div_ceil(64)];
                for c in 0..size {
                    let value = net.rule(k).eval_with(&|v: usize| {
                        inputs
                            .iter()
                            .position(|&w| w == v)
                            .is_some_and(|p| (c >> p) & 1 == 1)
                    });
                    if value {
                        table[c / 64] |= 1 << (c % 64);
                    }
                }
                Rule::Table { inputs, table }
            })
            .collect();
        CompiledNetwork { rules }
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    #[inline]
    fn eval(&self, k: usize, get: impl Fn(usize) -> bool) -> bool {
        match &self.rules[k] {
            Rule::Table { inputs, table } => {
                let c = inputs
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (p, &i)| acc | (usize::from(get(i)) << p));
                (table[c / 64] >> (c % 64)) & 1 == 1
            }
            Rule::Expr(e) => e.eval_with(&get),
        }
    }

    pub fn step(&self, state: &StateVector) -> StateVector {
        let mut next = StateVector::zeros(self.len());
        for k in 0..self.len() {
            next.set(k, self.eval(k, |i| state.get(i)));
        }
        next
    }

    /// Successor on the packed encoding, node `k` at bit `k`.
    pub fn step_index(&self, state: usize) -> usize {
        (0..self.len()).fold(0usize, |acc, k| {
            acc | (usize::from(self.eval(k, |i| (state >> i) & 1 == 1)) << k)
        })
    }
}

/// Target-set membership specialised for fast repeated queries.
enum Membership {
    Pattern(Vec<(usize, bool)>),
    Explicit(HashSet<StateVector>),
}

impl Membership {
    fn new(target: &TargetSet) -> Self {
        match target {
            TargetSet::Pattern(p) => Membership::Pattern(
                p.iter()
                    .enumerate()
                    .filter_map(|(k, v)| v.map(|b| (k, b)))
                    .collect(),
            ),
            TargetSet::Explicit(states) => Membership::Explicit(states.iter().cloned().collect()),
        }
    }

    fn contains(&self, state: &StateVector) -> bool {
        match self {
            Membership::Pattern(fixed) => fixed.iter().all(|&(k, b)| state.get(k) == b),
            Membership::Explicit(set) => set.contains(state),
        }
    }

    fn contains_index(&self, state: usize, n: usize) -> bool {
        match self {
            Membership::Pattern(fixed) => fixed.iter().all(|&(k, b)| ((state >> k) & 1 == 1) == b),
            Membership::Explicit(set) => set.contains(&StateVector::from_index(state as u64, n)),
        }
    }
}

/// Whether the target equals the full rectangle spanned by its fixed bits,
/// so membership depends only on the fixed-state nodes.
fn is_rectangular(target: &TargetSet, n: usize) -> Result<bool> {
    Ok(match target {
        TargetSet::Pattern(_) => true,
        TargetSet::Explicit(states) => {
            let free = lambda_partition(target, n)?.free.len();
            free < 64 && states.len() as u64 == 1u64 << free
        }
    })
}

/// Trajectory `x(0), …, x(steps)`.
pub fn trajectory(net: &BooleanNetwork, x0: &StateVector, steps: usize) -> Vec<StateVector> {
    let compiled = CompiledNetwork::new(net);
    let mut states = vec![x0.clone()];
    for _ in 0..steps {
        let next = compiled.step(states.last().expect("non-empty"));
        states.push(next);
    }
    states
}

/// Closed, acyclic fixed-state subnetwork with its longest path.
struct Subnetwork {
    net: BooleanNetwork,
    diameter: usize,
}

fn closed_subnetwork(net: &BooleanNetwork, fixed: &[usize]) -> Result<Subnetwork> {
    let sub = net.induced(fixed)?;
    let g = network_structure(&sub);
    if !is_acyclic(&g) {
        return Err(Error::Cyclic);
    }
    let diameter = longest_path(&g)?;
    Ok(Subnetwork { net: sub, diameter })
}

/// Unique fixed point of the closed acyclic subnetwork on `fixed`, in the
/// order of `fixed`.
pub fn subnetwork_fixed_point(net: &BooleanNetwork, fixed: &[usize]) -> Result<Vec<bool>> {
    let sub = closed_subnetwork(net, fixed)?;
    let s = fixed.len();
    let compiled = CompiledNetwork::new(&sub.net);
    let settle = |mut x: StateVector| {
        for _ in 0..=sub.diameter {
            x = compiled.step(&x);
        }
        x
    };
    let a = settle(StateVector::zeros(s));
    let b = settle(StateVector::from_bits(&vec![true; s]));
    if a != b || compiled.step(&a) != a {
        return Err(Error::Cyclic);
    }
    Ok(a.iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimeBoundReport {
    pub passed: bool,
    pub diameter: usize,
    /// `diameter + 1`, the step budget every trajectory must meet.
    pub bound: usize,
    /// Largest number of steps any subnetwork state needed.
    pub worst_steps: usize,
    pub states_checked: u64,
}

/// Every state of the closed acyclic subnetwork on `fixed` reaches the fixed
/// point within `diameter + 1` steps.
pub fn time_bound_check(net: &BooleanNetwork, fixed: &[usize], cap: usize) -> Result<TimeBoundReport> {
    let s = fixed.len();
    let cap = cap.min(HARD_EXHAUSTIVE_CAP);
    if s > cap {
        return Err(Error::CapExceeded {
            what: "fixed-state subnetwork",
            size: s,
            cap,
        });
    }
    let sub = closed_subnetwork(net, fixed)?;
    let compiled = CompiledNetwork::new(&sub.net);
    let bound = sub.diameter + 1;
    let fixed_point = StateVector::from_bits(&subnetwork_fixed_point(net, fixed)?).to_index() as usize;
    let steps = map_range(1usize << s, |x0| {
        let mut x = x0;
        let mut t = 0;
        while x != fixed_point && t <= bound {
            x = compiled.step_index(x);
            t += 1;
        }
        t
    });
    let worst_steps = steps.into_iter().max().unwrap_or(0);
    Ok(TimeBoundReport {
        passed: worst_steps <= bound,
        diameter: sub.diameter,
        bound,
        worst_steps,
        states_checked: 1u64 << s,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerificationMode {
    /// Every state of the full network.
    ExhaustiveFull,
    /// Every state of the closed fixed-state subnetwork, plus sampling.
    ExhaustiveSub,
    /// Random full states only; a pass is evidence, not proof.
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub horizon: usize,
    pub samples: usize,
    pub seed: u64,
    pub exhaustive_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            horizon: 40,
            samples: 10_000,
            seed: 0,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub initial: StateVector,
    /// First time the trajectory is outside the target set.
    pub escape_time: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub mode: VerificationMode,
    pub passed: bool,
    pub nodes: usize,
    /// 1-based fixed-state nodes.
    pub fixed_nodes: Vec<usize>,
    /// Fixed point of the fixed-state subnetwork when it is closed and acyclic.
    pub subnetwork_fixed_point: Option<Vec<u8>>,
    pub diameter: Option<usize>,
    pub diameter_bound: Option<usize>,
    /// Largest stabilizing time observed over passing initial states.
    pub tau_star: usize,
    pub states_checked: u64,
    pub samples: usize,
    pub horizon: usize,
    pub seed: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
}

/// Stabilizing time of every state of a functional graph: 0 once the whole
/// future lies in the target, `INF` if the trajectory leaves it forever after.
fn stabilizing_times(succ: &[u32], inside: &[bool]) -> Vec<u32> {
    let len = succ.len();
    let mut tau = vec![UNSEEN; len];
    let mut path = Vec::new();
    for start in 0..len {
        if tau[start] != UNSEEN {
            continue;
        }
        let mut x = start;
        while tau[x] == UNSEEN {
            tau[x] = ON_PATH;
            path.push(x);
            x = succ[x] as usize;
        }
        if tau[x] == ON_PATH {
            let at = path.iter().rposition(|&y| y == x).expect("cycle entry on path");
            let good = path[at..].iter().all(|&y| inside[y]);
            for &y in &path[at..] {
                tau[y] = if good { 0 } else { INF };
            }
            path.truncate(at);
        }
        while let Some(y) = path.pop() {
            let next = tau[succ[y] as usize];
            tau[y] = match next {
                INF => INF,
                0 if inside[y] => 0,
                t => t + 1,
            };
        }
    }
    tau
}

fn first_escape(compiled: &CompiledNetwork, lambda: &Membership, x0: &StateVector) -> usize {
    let mut x = x0.clone();
    let mut seen = HashSet::new();
    for t in 0.. {
        if !lambda.contains(&x) || !seen.insert(x.clone()) {
            return t;
        }
        x = compiled.step(&x);
    }
    unreachable!()
}

struct SampleOutcome {
    tau: Option<usize>,
    violation: Option<Violation>,
}

/// Simulates one sampled state. A revisited state proves the outcome exactly;
/// otherwise the trajectory must end inside the target at the horizon.
fn simulate_sample(
    compiled: &CompiledNetwork,
    lambda: &Membership,
    x0: StateVector,
    horizon: usize,
) -> SampleOutcome {
    let mut seen: HashMap<StateVector, usize> = HashMap::new();
    let mut last_outside: Option<usize> = None;
    let mut first_outside: Option<usize> = None;
    let mut x = x0.clone();
    let mut cycle_good = None;
    for t in 0..=horizon {
        if let Some(&t0) = seen.get(&x) {
            // states t0..t form the attractor
            cycle_good = Some(last_outside.is_none_or(|l| l < t0));
            break;
        }
        if !lambda.contains(&x) {
            last_outside = Some(t);
            first_outside.get_or_insert(t);
        }
        seen.insert(x.clone(), t);
        if t < horizon {
            x = compiled.step(&x);
        }
    }
    let converged = match cycle_good {
        Some(good) => good,
        None => lambda.contains(&x),
    };
    if converged {
        SampleOutcome {
            tau: Some(last_outside.map_or(0, |l| l + 1)),
            violation: None,
        }
    } else {
        SampleOutcome {
            tau: None,
            violation: Some(Violation {
                escape_time: first_outside.unwrap_or(horizon),
                initial: x0,
            }),
        }
    }
}

pub fn random_state<R: Rng>(n: usize, rng: &mut R) -> StateVector {
    let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    StateVector::from_bits(&bits)
}

/// Sample `i` of a seeded run; independent of evaluation order.
fn sample_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

fn exhaustive_full(
    compiled: &CompiledNetwork,
    lambda: &Membership,
) -> (u64, usize, u64, Vec<Violation>) {
    let n = compiled.len();
    let len = 1usize << n;
    let succ: Vec<u32> = map_range(len, |x| compiled.step_index(x) as u32);
    let inside: Vec<bool> = map_range(len, |x| lambda.contains_index(x, n));
    let tau = stabilizing_times(&succ, &inside);
    let tau_star = tau.iter().filter(|&&t| t != INF).max().copied().unwrap_or(0) as usize;
    let mut count = 0u64;
    let mut violations = Vec::new();
    for (x, _) in tau.iter().enumerate().filter(|(_, &t)| t == INF) {
        count += 1;
        if violations.len() < MAX_REPORTED_VIOLATIONS {
            let initial = StateVector::from_index(x as u64, n);
            violations.push(Violation {
                escape_time: first_escape(compiled, lambda, &initial),
                initial,
            });
        }
    }
    (len as u64, tau_star, count, violations)
}

/// Checks that every trajectory of `net` enters `target` and stays there.
pub fn check_set_stabilization(
    net: &BooleanNetwork,
    target: &TargetSet,
    budget: &Budget,
) -> Result<VerificationReport> {
    let n = net.len();
    target.check_len(n)?;
    let partition = lambda_partition(target, n)?;
    let cap = budget.exhaustive_cap.min(HARD_EXHAUSTIVE_CAP);
    let compiled = CompiledNetwork::new(net);
    let lambda = Membership::new(target);

    let sub = closed_subnetwork(net, &partition.fixed).ok();
    let fixed_point = match &sub {
        Some(_) => Some(subnetwork_fixed_point(net, &partition.fixed)?),
        None => None,
    };
    let mut report = VerificationReport {
        mode: VerificationMode::Sampled,
        passed: false,
        nodes: n,
        fixed_nodes: partition.fixed.iter().map(|k| k + 1).collect(),
        subnetwork_fixed_point: fixed_point
            .as_ref()
            .map(|p| p.iter().map(|&b| u8::from(b)).collect()),
        diameter: sub.as_ref().map(|s| s.diameter),
        diameter_bound: sub.as_ref().map(|s| s.diameter + 1),
        tau_star: 0,
        states_checked: 0,
        samples: 0,
        horizon: budget.horizon,
        seed: budget.seed,
        violation_count: 0,
        violations: Vec::new(),
    };

    if n <= cap {
        let (checked, tau_star, count, violations) = exhaustive_full(&compiled, &lambda);
        report.mode = VerificationMode::ExhaustiveFull;
        report.states_checked = checked;
        report.tau_star = tau_star;
        report.violation_count = count;
        report.violations = violations;
        report.passed = count == 0;
        return Ok(report);
    }

    let s = partition.fixed.len();
    if let Some(sub) = sub.as_ref().filter(|_| s <= cap && is_rectangular(target, n).unwrap_or(false)) {
        // membership depends only on the autonomous fixed-state bits
        let sub_compiled = CompiledNetwork::new(&sub.net);
        let alpha = StateVector::from_bits(&partition.alpha);
        let sub_lambda = Membership::Explicit(std::iter::once(alpha).collect());
        let (checked, tau_star, count, _) = exhaustive_full(&sub_compiled, &sub_lambda);
        report.mode = VerificationMode::ExhaustiveSub;
        report.states_checked = checked;
        report.tau_star = tau_star;
        report.violation_count = count;
    }

    let outcomes = map_range(budget.samples, |i| {
        let x0 = random_state(n, &mut sample_rng(budget.seed, i));
        simulate_sample(&compiled, &lambda, x0, budget.horizon)
    });
    report.samples = budget.samples;
    for outcome in outcomes {
        if let Some(tau) = outcome.tau {
            report.tau_star = report.tau_star.max(tau);
        }
        if let Some(v) = outcome.violation {
            report.violation_count += 1;
            if report.violations.len() < MAX_REPORTED_VIOLATIONS {
                report.violations.push(v);
            }
        }
    }
    report.passed = report.violation_count == 0;
    Ok(report)
}

/// Rotates a cycle so that its smallest state comes first.
fn canonical_cycle(mut cycle: Vec<StateVector>) -> Vec<StateVector> {
    if let Some((at, _)) = cycle.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)) {
        cycle.rotate_left(at);
    }
    cycle
}

/// All attractors by exhaustive successor walks, sorted.
pub fn attractors(net: &BooleanNetwork, cap: usize) -> Result<Vec<Vec<StateVector>>> {
    let n = net.len();
    let cap = cap.min(HARD_EXHAUSTIVE_CAP);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "network",
            size: n,
            cap,
        });
    }
    let compiled = CompiledNetwork::new(net);
    let len = 1usize << n;
    let succ: Vec<u32> = map_range(len, |x| compiled.step_index(x) as u32);
    // 0 unseen, 1 on current walk, 2 done
    let mut mark = vec![0u8; len];
    let mut found = Vec::new();
    let mut path = Vec::new();
    for start in 0..len {
        let mut x = start;
        while mark[x] == 0 {
            mark[x] = 1;
            path.push(x);
            x = succ[x] as usize;
        }
        if mark[x] == 1 {
            let at = path.iter().position(|&y| y == x).expect("on path");
            let cycle = path[at..]
                .iter()
                .map(|&y| StateVector::from_index(y as u64, n))
                .collect();
            found.push(canonical_cycle(cycle));
        }
        for &y in &path {
            mark[y] = 2;
        }
        path.clear();
    }
    found.sort();
    Ok(found)
}

/// Attractors reached from seeded random initial states within `horizon`
/// steps, deduplicated and sorted.
pub fn sampled_attractors(
    net: &BooleanNetwork,
    samples: usize,
    horizon: usize,
    seed: u64,
) -> Vec<Vec<StateVector>> {
    let compiled = CompiledNetwork::new(net);
    let n = net.len();
    let cycles = map_range(samples, |i| {
        let mut x = random_state(n, &mut sample_rng(seed, i));
        let mut seen: HashMap<StateVector, usize> = HashMap::new();
        let mut path = Vec::new();
        for t in 0..=horizon {
            if let Some(&t0) = seen.get(&x) {
                return Some(canonical_cycle(path[t0..].to_vec()));
            }
            seen.insert(x.clone(), t);
            path.push(x.clone());
            x = compiled.step(&x);
        }
        None
    });
    let mut unique: Vec<Vec<StateVector>> = cycles
        .into_iter()
        .flatten()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    unique.sort();
    unique
}

/// Counterexample to `dist(f(μ), f(ν)) ≤ I ×_B dist(μ, ν)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HammingViolation {
    pub mu: StateVector,
    pub nu: StateVector,
    /// 1-based node whose component fails.
    pub node: usize,
}

fn hamming_pair(
    net: &BooleanNetwork,
    compiled: &CompiledNetwork,
    mu: &StateVector,
    nu: &StateVector,
) -> Option<HammingViolation> {
    let (fm, fnu) = (compiled.step(mu), compiled.step(nu));
    (0..net.len())
        .find(|&i| {
            let lhs = fm.get(i) != fnu.get(i);
            let rhs = net.neighbors(i).iter().any(|&j| mu.get(j) != nu.get(j));
            lhs && !rhs
        })
        .map(|i| HammingViolation {
            mu: mu.clone(),
            nu: nu.clone(),
            node: i + 1,
        })
}

/// Componentwise Hamming inequality on seeded random state pairs.
pub fn hamming_check(net: &BooleanNetwork, trials: usize, seed: u64) -> Option<HammingViolation> {
    let compiled = CompiledNetwork::new(net);
    let n = net.len();
    map_range(trials, |i| {
        let mut rng = sample_rng(seed, i);
        let mu = random_state(n, &mut rng);
        let nu = random_state(n, &mut rng);
        hamming_pair(net, &compiled, &mu, &nu)
    })
    .into_iter()
    .flatten()
    .next()
}

/// Hamming inequality over all state pairs (`n` at most 12).
pub fn hamming_check_exhaustive(net: &BooleanNetwork) -> Result<Option<HammingViolation>> {
    let n = net.len();
    if n > 12 {
        return Err(Error::CapExceeded {
            what: "network",
            size: n,
            cap: 12,
        });
    }
    let compiled = CompiledNetwork::new(net);
    let len = 1usize << n;
    Ok(map_range(len, |a| {
        let mu = StateVector::from_index(a as u64, n);
        (0..len).find_map(|b| {
            let nu = StateVector::from_index(b as u64, n);
            hamming_pair(net, &compiled, &mu, &nu)
        })
    })
    .into_iter()
    .flatten()
    .next())
}

/// Bits of `state` on the fixed-state nodes of `target`.
pub fn fixed_projection(target: &TargetSet, state: &StateVector) -> Result<Vec<bool>> {
    let partition = lambda_partition(target, state.len())?;
    Ok(projection(state, &partition.fixed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_network;

    fn net(text: &str) -> BooleanNetwork {
        parse_network(text).unwrap()
    }

    #[test]
    fn stabilizing_times_on_small_graph() {
        // 0 -> 1 -> 2 -> 2, with 2 inside only
        let tau = stabilizing_times(&[1, 2, 2], &[false, false, true]);
        assert_eq!(tau, vec![2, 1, 0]);
        // 0 <-> 1 with 1 outside: never stabilizes
        let tau = stabilizing_times(&[1, 0], &[true, false]);
        assert_eq!(tau, vec![INF, INF]);
        // leaving and re-entering counts from the last entry
        let tau = stabilizing_times(&[1, 2, 2], &[true, false, true]);
        assert_eq!(tau, vec![2, 1, 0]);
    }

    #[test]
    fn compiled_step_matches_expression_step() {
        let n = net("A, B & !C\nB, A | C\nC, A ^ B\n");
        let compiled = CompiledNetwork::new(&n);
        for x in 0..8usize {
            let s = StateVector::from_index(x as u64, 3);
            assert_eq!(compiled.step(&s), n.step(&s));
            assert_eq!(compiled.step_index(x) as u64, n.step_index(x as u64));
        }
    }

    #[test]
    fn negation_has_one_two_cycle() {
        let n = net("A, !A\n");
        let found = attractors(&n, 20).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].len(), 2);
    }

    #[test]
    fn full_target_passes_with_zero_time() {
        let n = net("A, !A\nB, A\n");
        let report = check_set_stabilization(&n, &TargetSet::full(2), &Budget::default()).unwrap();
        assert!(report.passed);
        assert_eq!(report.tau_star, 0);
        assert_eq!(report.mode, VerificationMode::ExhaustiveFull);
    }

    #[test]
    fn chain_needs_its_length_in_steps() {
        let n = net("A, 0\nB, A\nC, B\nD, C\n");
        let fixed = [0, 1, 2, 3];
        assert_eq!(subnetwork_fixed_point(&n, &fixed).unwrap(), vec![false; 4]);
        let r = time_bound_check(&n, &fixed, 22).unwrap();
        assert!(r.passed);
        assert_eq!((r.diameter, r.worst_steps), (3, 4));
    }

    #[test]
    fn oscillator_fails_with_counterexample() {
        let n = net("A, !A\n");
        let t = TargetSet::pattern("1").unwrap();
        let report = check_set_stabilization(&n, &t, &Budget::default()).unwrap();
        assert!(!report.passed);
        assert_eq!(report.violation_count, 2);
        assert_eq!(report.violations[0].escape_time, 0);
        assert_eq!(report.violations[1].escape_time, 1);
    }

    #[test]
    fn sampled_mode_detects_bad_cycle() {
        let n = net("A, !A\nB, A\n");
        let t = TargetSet::pattern("1*").unwrap();
        let budget = Budget {
            exhaustive_cap: 0,
            samples: 20,
            ..Budget::default()
        };
        let report = check_set_stabilization(&n, &t, &budget).unwrap();
        assert_eq!(report.mode, VerificationMode::Sampled);
        assert!(!report.passed);
        assert_eq!(report.violation_count, 20);
    }

    #[test]
    fn subnetwork_mode_on_closed_chain() {
        let n = net("A, 1\nB, A\nC, !C | B\n");
        let t = TargetSet::pattern("11*").unwrap();
        let budget = Budget {
            exhaustive_cap: 2,
            samples: 50,
            ..Budget::default()
        };
        let report = check_set_stabilization(&n, &t, &budget).unwrap();
        assert_eq!(report.mode, VerificationMode::ExhaustiveSub);
        assert!(report.passed);
        assert_eq!(report.tau_star, 2);
        assert_eq!(report.subnetwork_fixed_point, Some(vec![1, 1]));
    }

    #[test]
    fn hamming_holds_for_equal_states() {
        let n = net("A, B\nB, A & B\n");
        let s: StateVector = "10".parse().unwrap();
        let compiled = CompiledNetwork::new(&n);
        assert!(hamming_pair(&n, &compiled, &s, &s).is_none());
        assert!(hamming_check_exhaustive(&n).unwrap().is_none());
    }
}
