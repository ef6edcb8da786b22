use bnpin::fixtures::tlgl;
use bnpin::model::StateVector;
use bnpin::structure::Edge;
use bnpin::synthesis::{synthesize, Coupling};
use bnpin::verify::{check_set_stabilization, subnetwork_fixed_point, Budget};

fn e(t: usize, h: usize) -> Edge {
    Edge::new(t - 1, h - 1)
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|k| k + 1).collect()
}

#[test]
fn tlgl_plan() {
    let (net, target) = tlgl().unwrap();
    assert_eq!(net.len(), 29);
    let s = synthesize(&net, &target, None).unwrap();
    let p = &s.plan;
    assert_eq!(one_based(&p.partition.fixed), [1, 9, 11, 14, 15]);
    assert_eq!(p.partition.alpha, [true, true, false, false, false]);
    assert_eq!(one_based(&p.part1), [11, 15]);
    assert_eq!(p.part1_arcs, [e(10, 11), e(16, 15)]);
    assert_eq!(one_based(&p.part2.nodes), [1, 9]);
    assert_eq!(p.part2.feedback_arcs, [e(1, 1), e(9, 9)]);
    assert!(p.part3.is_empty());
    assert_eq!(one_based(&p.pinned()), [1, 9, 11, 15]);

    let c15 = s.controller(14).unwrap();
    assert_eq!(c15.coupling, Coupling::And);
    assert_eq!(c15.s_f.to_string(), "d2[1,1,1,2]");
    assert_eq!(p.target(14).unwrap().matrix.to_string(), "d2[1,2]");
    assert_eq!(c15.feedback.display(net.names()).to_string(), "PI3K");
    for j in [0, 8] {
        let c = s.controller(j).unwrap();
        assert_eq!(c.coupling, Coupling::Or);
        assert_eq!(c.s_phi.to_string(), "d2[2,1]");
    }
}

#[test]
fn tlgl_controlled_steady_state() {
    let (net, target) = tlgl().unwrap();
    let s = synthesize(&net, &target, None).unwrap();
    let cnet = &s.controlled.network;
    let fixed = &s.plan.partition.fixed;
    assert_eq!(
        subnetwork_fixed_point(cnet, fixed).unwrap(),
        [true, true, false, false, false]
    );
    let steady: StateVector = "11111111110000000110011100000".parse().unwrap();
    assert_eq!(cnet.step(&steady), steady);
    let report = check_set_stabilization(cnet, &target, &Budget::default()).unwrap();
    assert!(report.passed, "{report:?}");
    assert!(report.tau_star <= 2);
    let open = check_set_stabilization(&net, &target, &Budget { samples: 200, ..Budget::default() }).unwrap();
    assert!(!open.passed);
}
