mod common;

use bnpin::model::BoolExpr;
use bnpin::stp::{
    embed_nonfunctional, factor_nonfunctional, power_reducing, reorder_front, structure_matrix,
    swap_matrix, LogicalMatrix,
};
use common::*;
use proptest::prelude::*;

#[test]
fn swap_identity_up_to_order_16() {
    for q in [1, 2, 4, 8, 16] {
        for p in [1, 2, 4, 8, 16] {
            let w = Dense::from_logical(&swap_matrix(q, p));
            for a in 1..=p {
                for b in 1..=q {
                    let (da, db) = (Dense::delta(p, a), Dense::delta(q, b));
                    assert_eq!(da.kron(&db), w.mul(&db.kron(&da)), "W[{q},{p}] a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn power_reducing_identity_up_to_order_16() {
    for p in [1, 2, 4, 8, 16] {
        let phi = Dense::from_logical(&power_reducing(p));
        for a in 1..=p {
            let da = Dense::delta(p, a);
            assert_eq!(da.kron(&da), phi.mul(&da));
        }
    }
}

#[test]
fn small_swap_and_power_listings() {
    assert_eq!(swap_matrix(2, 2).to_string(), "d4[1,3,2,4]");
    assert_eq!(swap_matrix(2, 4).to_string(), "d8[1,3,5,7,2,4,6,8]");
    assert_eq!(power_reducing(2).to_string(), "d4[1,4]");
    assert_eq!(power_reducing(4).to_string(), "d16[1,6,11,16]");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn compressed_stp_equals_dense(a in any_logical_matrix(3, 6), b in any_logical_matrix(3, 6)) {
        let fast = a.stp(&b).unwrap();
        let dense = Dense::from_logical(&a).stp(&Dense::from_logical(&b));
        prop_assert_eq!(Dense::from_logical(&fast), dense);
    }

    #[test]
    fn factor_embed_round_trip(
        k in 1usize..=6,
        mask in any::<u8>(),
        table in proptest::collection::vec(any::<bool>(), 64),
    ) {
        let vars: Vec<usize> = (0..k).map(|p| 3 * p + 1).collect();
        let drop: Vec<usize> = (0..k).filter(|p| mask >> p & 1 == 1).map(|p| vars[p]).collect();
        let kept: Vec<usize> = (0..k).filter(|p| mask >> p & 1 == 0).collect();
        let m = kept.len();
        // A over the retained variables, S the same function padded with the dropped ones
        let a_idx: Vec<usize> = (0..1usize << m).map(|c| if table[c] { 1 } else { 2 }).collect();
        let s_idx: Vec<usize> = (0..1usize << k)
            .map(|c| {
                let local = kept.iter().enumerate().fold(0usize, |acc, (q, &p)| {
                    acc | (usize::from(!bit_at(c, p, k)) << (m - 1 - q))
                });
                a_idx[local]
            })
            .collect();
        let a = LogicalMatrix::delta(2, &a_idx).unwrap();
        let s = LogicalMatrix::delta(2, &s_idx).unwrap();
        prop_assert_eq!(&factor_nonfunctional(&s, &vars, &drop).unwrap(), &a);
        prop_assert_eq!(&embed_nonfunctional(&a, &vars, &drop).unwrap(), &s);
    }

    #[test]
    fn reorder_front_moves_subset(k in 1usize..=6, mask in any::<u8>(), x in any::<u8>()) {
        let vars: Vec<usize> = (0..k).map(|p| 2 * p).collect();
        let subset: Vec<usize> = (0..k).filter(|p| mask >> p & 1 == 1).map(|p| vars[p]).collect();
        let w = Dense::from_logical(&reorder_front(&vars, &subset).unwrap());
        let bits: Vec<bool> = (0..k).map(|p| x >> p & 1 == 1).collect();
        let front: Vec<bool> = (0..k).filter(|p| mask >> p & 1 == 1).map(|p| bits[p]).collect();
        let back: Vec<bool> = (0..k).filter(|p| mask >> p & 1 == 0).map(|p| bits[p]).collect();
        let moved = dense_product(&front).kron(&dense_product(&back));
        prop_assert_eq!(dense_product(&bits), w.mul(&moved));
    }

    #[test]
    fn structure_matrix_represents_expression(e in expr(4)) {
        let vars = [0, 1, 2, 3];
        let s = Dense::from_logical(&structure_matrix(&e, &vars).unwrap());
        for x in 0..16usize {
            let bits: Vec<bool> = (0..4).map(|p| x >> p & 1 == 1).collect();
            let value = e.eval_with(&|i: usize| bits[i]);
            let expected = Dense::delta(2, if value { 1 } else { 2 });
            prop_assert_eq!(s.mul(&dense_product(&bits)), expected);
        }
    }

    #[test]
    fn structure_matrix_is_unique(e in expr(3)) {
        let doubled = BoolExpr::not(BoolExpr::not(e.clone()));
        prop_assert_eq!(
            structure_matrix(&e, &[0, 1, 2]).unwrap(),
            structure_matrix(&doubled, &[0, 1, 2]).unwrap()
        );
    }
}

#[test]
fn spec_listings() {
    let e = BoolExpr::or(vec![BoolExpr::var(10), BoolExpr::var(15)]);
    assert_eq!(structure_matrix(&e, &[10, 15]).unwrap().to_string(), "d2[1,1,1,2]");
    let nor = BoolExpr::not(BoolExpr::or(vec![BoolExpr::var(3), BoolExpr::var(10)]));
    assert_eq!(structure_matrix(&nor, &[3, 10]).unwrap().to_string(), "d2[2,2,2,1]");
    let a: LogicalMatrix = "d2[1,2]".parse().unwrap();
    assert_eq!(
        embed_nonfunctional(&a, &[10, 15], &[15]).unwrap().to_string(),
        "d2[1,1,2,2]"
    );
    assert_eq!(reorder_front(&[10, 15], &[15]).unwrap().to_string(), "d4[1,3,2,4]");
}
