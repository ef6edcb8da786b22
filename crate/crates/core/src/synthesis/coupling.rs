use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::BoolExpr;
use crate::stp::{power_reducing, LogicalMatrix};

/// Binary operator joining the feedback input to the original dynamics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coupling {
    Or,
    And,
    Xor,
}

impl Coupling {
    /// `2 × 4` structure matrix, first argument most significant.
    pub fn structure_matrix(self) -> LogicalMatrix {
        let cols: &[usize] = match self {
            Coupling::Or => &[1, 1, 1, 2],
            Coupling::And => &[1, 2, 2, 2],
            Coupling::Xor => &[2, 1, 1, 2],
        };
        LogicalMatrix::delta(2, cols).unwrap()
    }

    pub fn apply(self, u: bool, f: bool) -> bool {
        match self {
            Coupling::Or => u || f,
            Coupling::And => u && f,
            Coupling::Xor => u ^ f,
        }
    }

    /// `u ⊕ f` as an expression.
    pub fn combine(self, u: BoolExpr, f: BoolExpr) -> BoolExpr {
        match self {
            Coupling::Or => BoolExpr::or(vec![u, f]),
            Coupling::And => BoolExpr::and(vec![u, f]),
            Coupling::Xor => BoolExpr::xor(vec![u, f]),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Coupling::Or => "|",
            Coupling::And => "&",
            Coupling::Xor => "^",
        }
    }
}

impl fmt::Display for Coupling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coupling::Or => "or",
            Coupling::And => "and",
            Coupling::Xor => "xor",
        })
    }
}

/// Solves `M_⊕ S_φ (I ⊗ S_f) Φ = target` for the coupling and feedback
/// structure matrices.
///
/// `OR` is used when `f ≤ g` everywhere (feedback `g ∧ ¬f`), else `AND` when
/// `g ≤ f` (feedback `g`), else `XOR` (feedback `g ⊻ f`), which always solves.
pub fn solve_coupling(
    s_f: &LogicalMatrix,
    target: &LogicalMatrix,
) -> Result<(Coupling, LogicalMatrix)> {
    if s_f.ncols() != target.ncols() || s_f.rows() != 2 || target.rows() != 2 {
        return Err(Error::Dimension(format!(
            "dynamics {}x{} against target {}x{}",
            s_f.rows(),
            s_f.ncols(),
            target.rows(),
            target.ncols()
        )));
    }
    let cols = 0..s_f.ncols();
    let f = |c: usize| s_f.value(c);
    let g = |c: usize| target.value(c);
    let (coupling, phi): (Coupling, Vec<bool>) = if cols.clone().all(|c| !f(c) || g(c)) {
        (Coupling::Or, cols.map(|c| g(c) && !f(c)).collect())
    } else if cols.clone().all(|c| !g(c) || f(c)) {
        (Coupling::And, cols.map(g).collect())
    } else {
        (Coupling::Xor, cols.map(|c| g(c) ^ f(c)).collect())
    };
    let s_phi = LogicalMatrix::from_raw(2, phi.iter().map(|&v| u32::from(!v)).collect());
    Ok((coupling, s_phi))
}

/// Left-hand side `M_⊕ ⋉ S_φ ⋉ (I ⊗ S_f) ⋉ Φ`, computed in the STP algebra.
pub fn closed_loop_matrix(
    coupling: Coupling,
    s_phi: &LogicalMatrix,
    s_f: &LogicalMatrix,
) -> Result<LogicalMatrix> {
    let width = s_f.ncols();
    let lifted = LogicalMatrix::identity(width).kron(s_f);
    coupling
        .structure_matrix()
        .stp(s_phi)?
        .stp(&lifted)?
        .stp(&power_reducing(width))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> LogicalMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn node_fifteen_uses_and_with_pi3k() {
        let s_f = d("d2[1,1,1,2]");
        let target = d("d2[1,1,2,2]");
        let (c, s_phi) = solve_coupling(&s_f, &target).unwrap();
        assert_eq!(c, Coupling::And);
        assert_eq!(s_phi, d("d2[1,1,2,2]"));
        assert_eq!(closed_loop_matrix(c, &s_phi, &s_f).unwrap(), target);
    }

    #[test]
    fn unchanged_target_needs_zero_feedback() {
        let s_f = d("d2[1,2,2,1]");
        let (c, s_phi) = solve_coupling(&s_f, &s_f).unwrap();
        assert_eq!(c, Coupling::Or);
        assert_eq!(s_phi, d("d2[2,2,2,2]"));
    }

    #[test]
    fn xor_fallback() {
        let s_f = d("d2[1,2]");
        let target = d("d2[2,1]");
        let (c, s_phi) = solve_coupling(&s_f, &target).unwrap();
        assert_eq!(c, Coupling::Xor);
        assert_eq!(closed_loop_matrix(c, &s_phi, &s_f).unwrap(), target);
    }

    #[test]
    fn constant_dynamics() {
        let s_f = d("d2[1]");
        let target = d("d2[2]");
        let (c, s_phi) = solve_coupling(&s_f, &target).unwrap();
        assert_eq!(c, Coupling::And);
        assert_eq!(closed_loop_matrix(c, &s_phi, &s_f).unwrap(), target);
    }

    #[test]
    fn self_loop_with_true_target_matches_or_not_x() {
        let (c, s_phi) = solve_coupling(&d("d2[1,2]"), &d("d2[1,1]")).unwrap();
        assert_eq!(c, Coupling::Or);
        assert_eq!(s_phi, d("d2[2,1]"));
    }
}
