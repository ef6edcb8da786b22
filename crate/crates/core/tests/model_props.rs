mod common;

use bnpin::model::{emit_network, functional_inputs, member, parse_network, StateVector, TargetSet};
use bnpin::partition::lambda_partition;
use common::*;
use proptest::prelude::*;

fn pattern(n: usize) -> impl Strategy<Value = TargetSet> {
    proptest::collection::vec(proptest::option::of(any::<bool>()), n).prop_map(TargetSet::Pattern)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn neighbors_are_semantic(net in network(6)) {
        for k in 0..net.len() {
            prop_assert_eq!(net.neighbors(k).to_vec(), brute_functional(net.rule(k), 6));
            prop_assert_eq!(
                functional_inputs(net.rule(k), &net.rule(k).variables()).unwrap(),
                net.neighbors(k).to_vec()
            );
        }
    }

    #[test]
    fn nonfunctional_flips_do_not_change_value(net in network(5), x in 0usize..32) {
        for k in 0..5 {
            for v in (0..5).filter(|v| !net.neighbors(k).contains(v)) {
                let y = x ^ (1 << v);
                let a = net.rule(k).eval_with(&|i: usize| (x >> i) & 1 == 1);
                let b = net.rule(k).eval_with(&|i: usize| (y >> i) & 1 == 1);
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn step_is_deterministic(net in network(7), x in 0u64..128) {
        let s = StateVector::from_index(x, 7);
        prop_assert_eq!(net.step(&s), net.step(&s));
        prop_assert_eq!(net.step(&s).to_index(), brute_successors(&net)[x as usize] as u64);
    }

    #[test]
    fn emit_parse_round_trip(net in network(6)) {
        let back = parse_network(&emit_network(&net)).unwrap();
        prop_assert_eq!(back.names(), net.names());
        prop_assert_eq!(brute_successors(&back), brute_successors(&net));
        for k in 0..6 {
            prop_assert_eq!(back.neighbors(k), net.neighbors(k));
        }
    }

    #[test]
    fn pattern_membership_matches_expansion(t in (1usize..=12).prop_flat_map(pattern)) {
        let n = t.len();
        let expanded = TargetSet::explicit(t.expand()).unwrap();
        for x in 0..1u64 << n {
            let s = StateVector::from_index(x, n);
            prop_assert_eq!(member(&t, &s), member(&expanded, &s));
        }
        let (a, b) = (lambda_partition(&t, n).unwrap(), lambda_partition(&expanded, n).unwrap());
        prop_assert_eq!(a, b);
    }
}

#[test]
fn pattern_partition_reads_positions() {
    let t = TargetSet::pattern("1*0**").unwrap();
    let p = lambda_partition(&t, 5).unwrap();
    assert_eq!(p.fixed, vec![0, 2]);
    assert_eq!(p.alpha, vec![true, false]);
    assert_eq!(p.free, vec![1, 3, 4]);
}

#[test]
fn non_rectangular_explicit_target_is_rejected() {
    let t = TargetSet::explicit(vec!["00".parse().unwrap(), "11".parse().unwrap()]).unwrap();
    let err = lambda_partition(&t, 2).unwrap_err();
    assert_eq!(err, bnpin::Error::AmbiguousTarget(vec![0, 1]));
}
