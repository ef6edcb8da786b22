mod common;

use bnpin::model::{BooleanNetwork, TargetSet, TruthTable};
use bnpin::stp::LogicalMatrix;
use bnpin::structure::{is_acyclic, longest_path};
use bnpin::synthesis::{fixed_subgraph, synthesize, Synthesis};
use bnpin::verify::{check_set_stabilization, Budget};
use common::*;
use proptest::prelude::*;

fn instance(max_n: usize) -> impl Strategy<Value = (BooleanNetwork, TargetSet)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            network(n),
            proptest::collection::vec(proptest::option::of(any::<bool>()), n)
                .prop_map(TargetSet::Pattern),
        )
    })
}

/// Checks every structural and algebraic invariant of a synthesis result.
fn check_invariants(net: &BooleanNetwork, s: &Synthesis) -> Result<(), TestCaseError> {
    let plan = &s.plan;
    let cnet = &s.controlled.network;
    let fixed = &plan.partition.fixed;
    let sub = fixed_subgraph(cnet, fixed).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(is_acyclic(&sub));

    let pinned = plan.pinned();
    for k in 0..net.len() {
        if !pinned.contains(&k) {
            prop_assert_eq!(cnet.rule(k), net.rule(k));
        }
    }
    for c in &s.controllers {
        prop_assert!(c.residual_is_zero().unwrap());
        prop_assert!(c.feedback.variables().iter().all(|v| c.inputs.contains(v)));
        let target = plan.target(c.node).unwrap();
        // fixed-point identity at the retained target values
        let column = target.retained.iter().enumerate().fold(0usize, |acc, (p, &i)| {
            let a = plan.partition.alpha_of(i).unwrap();
            acc | (usize::from(!a) << (target.retained.len() - 1 - p))
        });
        prop_assert_eq!(Some(target.matrix.value(column)), plan.partition.alpha_of(c.node));
        // the rewritten rule is the embedded target
        let tt = TruthTable::build(cnet.rule(c.node), &c.inputs, 24).unwrap();
        prop_assert_eq!(LogicalMatrix::from_truth_table(&tt), c.embedded_target.clone());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn synthesis_stabilizes((net, target) in instance(8)) {
        let s = synthesize(&net, &target, None).unwrap();
        check_invariants(&net, &s)?;
        let cnet = &s.controlled.network;
        let n = net.len();
        let TargetSet::Pattern(p) = &target else { unreachable!() };
        let inside = |x: usize| p.iter().enumerate().all(|(k, v)| v.is_none_or(|b| ((x >> k) & 1 == 1) == b));
        let succ = brute_successors(cnet);
        let diam = longest_path(&fixed_subgraph(cnet, &s.plan.partition.fixed).unwrap()).unwrap();
        let mut worst = 0;
        for x in 0..1usize << n {
            let tau = brute_tau(&succ, inside, x);
            prop_assert!(tau.is_some(), "state {} never stabilizes", x);
            worst = worst.max(tau.unwrap());
        }
        prop_assert!(worst <= diam + 1);
        let report = check_set_stabilization(cnet, &target, &Budget::default()).unwrap();
        prop_assert!(report.passed);
        prop_assert_eq!(report.tau_star, worst);
    }

    #[test]
    fn unit_time_bound_makes_fixed_rules_constant((net, target) in instance(8)) {
        let s = synthesize(&net, &target, Some(1)).unwrap();
        check_invariants(&net, &s)?;
        for &j in &s.plan.partition.fixed {
            prop_assert!(s.controlled.network.neighbors(j).is_empty());
        }
    }

    #[test]
    fn time_bound_is_met((net, target) in instance(8), tau in 1usize..4) {
        let s = synthesize(&net, &target, Some(tau)).unwrap();
        check_invariants(&net, &s)?;
        let report = check_set_stabilization(&s.controlled.network, &target, &Budget::default()).unwrap();
        prop_assert!(report.passed);
        prop_assert!(report.tau_star <= tau);
    }
}

#[test]
fn empty_fixed_set_leaves_network_unchanged() {
    let net = bnpin::parse_network("A, !B\nB, A\n").unwrap();
    let s = synthesize(&net, &TargetSet::full(2), None).unwrap();
    assert!(s.plan.pinned().is_empty());
    assert_eq!(s.controlled.network, net);
}

#[test]
fn zero_time_bound_is_rejected() {
    let net = bnpin::parse_network("A, A\n").unwrap();
    let t = TargetSet::pattern("1").unwrap();
    assert_eq!(
        synthesize(&net, &t, Some(0)).unwrap_err(),
        bnpin::Error::InfeasibleTau(0)
    );
}
