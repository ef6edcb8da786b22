//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use bnpin::model::{BoolExpr, BooleanNetwork};
use bnpin::stp::LogicalMatrix;
use proptest::prelude::*;

/// Dense 0/1 matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dense {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl Dense {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Dense { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn from_logical(m: &LogicalMatrix) -> Self {
        let mut d = Self::zeros(m.rows(), m.ncols());
        for (c, i) in m.indices().into_iter().enumerate() {
            d.set(i - 1, c, 1);
        }
        d
    }

    /// Canonical vector `δ_order^index` as a column.
    pub fn delta(order: usize, index: usize) -> Self {
        let mut d = Self::zeros(order, 1);
        d.set(index - 1, 0, 1);
        d
    }

    pub fn mul(&self, other: &Dense) -> Dense {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Dense) -> Dense {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) == 0 {
                    continue;
                }
                for rr in 0..other.rows {
                    for cc in 0..other.cols {
                        out.set(r * other.rows + rr, c * other.cols + cc, other.get(rr, cc));
                    }
                }
            }
        }
        out
    }

    /// Semi-tensor product: `(A ⊗ I_{t/n})(B ⊗ I_{t/p})`, `t = lcm(n, p)`.
    pub fn stp(&self, other: &Dense) -> Dense {
        let (n, p) = (self.cols, other.rows);
        let t = lcm(n, p);
        self.kron(&Dense::identity(t / n))
            .mul(&other.kron(&Dense::identity(t / p)))
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// `ζ(x_1) ⋉ … ⋉ ζ(x_k)` built from Kronecker products of dense columns.
pub fn dense_product(bits: &[bool]) -> Dense {
    bits.iter().fold(Dense::delta(1, 1), |acc, &b| {
        acc.kron(&Dense::delta(2, if b { 1 } else { 2 }))
    })
}

/// Variable `position` of `arity` at canonical column `column`: first
/// variable most significant, digit 0 meaning true.
pub fn bit_at(column: usize, position: usize, arity: usize) -> bool {
    (column >> (arity - 1 - position)) & 1 == 0
}

pub fn logical_matrix(rows_exp: u32, cols_exp: u32) -> impl Strategy<Value = LogicalMatrix> {
    let rows = 1usize << rows_exp;
    proptest::collection::vec(1..=rows, 1usize << cols_exp)
        .prop_map(move |idx| LogicalMatrix::delta(rows, &idx).unwrap())
}

pub fn any_logical_matrix(max_rows_exp: u32, max_cols_exp: u32) -> impl Strategy<Value = LogicalMatrix> {
    (0..=max_rows_exp, 0..=max_cols_exp).prop_flat_map(|(r, c)| logical_matrix(r, c))
}

/// Random expression over variables `0..vars`.
pub fn expr(vars: usize) -> impl Strategy<Value = BoolExpr> {
    let leaf = prop_oneof![
        1 => any::<bool>().prop_map(BoolExpr::Const),
        4 => (0..vars).prop_map(BoolExpr::var),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(BoolExpr::not),
            proptest::collection::vec(inner.clone(), 2..=3).prop_map(BoolExpr::and),
            proptest::collection::vec(inner.clone(), 2..=3).prop_map(BoolExpr::or),
            proptest::collection::vec(inner, 2..=3).prop_map(BoolExpr::xor),
        ]
    })
}

/// Random network of `n` nodes with rules drawn by [`expr`].
pub fn network(n: usize) -> impl Strategy<Value = BooleanNetwork> {
    proptest::collection::vec(expr(n), n)
        .prop_map(|rules| BooleanNetwork::anonymous(rules).unwrap())
}

/// Brute-force functional variables: some assignment flips the value.
pub fn brute_functional(e: &BoolExpr, vars: usize) -> Vec<usize> {
    (0..vars)
        .filter(|&v| {
            (0..1usize << vars).any(|x| {
                let a = e.eval_with(&|i: usize| (x >> i) & 1 == 1);
                let y = x ^ (1 << v);
                let b = e.eval_with(&|i: usize| (y >> i) & 1 == 1);
                a != b
            })
        })
        .collect()
}

/// Successor table over all `2^n` states, node `k` at bit `k`, straight from
/// the rule expressions.
pub fn brute_successors(net: &BooleanNetwork) -> Vec<usize> {
    let n = net.len();
    (0..1usize << n)
        .map(|x| {
            (0..n).fold(0, |acc, k| {
                let v = net.rule(k).eval_with(&|i: usize| (x >> i) & 1 == 1);
                acc | (usize::from(v) << k)
            })
        })
        .collect()
}

/// Brute-force stabilizing time: iterate far enough to sit on the attractor,
/// then walk back to the last step outside the target. `None` if the
/// attractor leaves the target.
pub fn brute_tau(succ: &[usize], inside: impl Fn(usize) -> bool, x0: usize) -> Option<usize> {
    let len = succ.len();
    let mut traj = vec![x0];
    for _ in 0..2 * len {
        let next = succ[*traj.last().unwrap()];
        traj.push(next);
    }
    // the last `len` states all lie on the attractor
    if traj[len..].iter().any(|&x| !inside(x)) {
        return None;
    }
    Some(traj.iter().rposition(|&x| !inside(x)).map_or(0, |t| t + 1))
}
