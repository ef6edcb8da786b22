//! Target-set partition of the nodes into free and fixed-state nodes.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::model::{StateVector, TargetSet};

/// Free nodes may take any value inside the target set; fixed nodes must hold
/// the value recorded in `alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodePartition {
    pub free: Vec<usize>,
    pub fixed: Vec<usize>,
    /// Target value per fixed node, aligned with `fixed`.
    pub alpha: Vec<bool>,
}

impl NodePartition {
    pub fn node_count(&self) -> usize {
        self.free.len() + self.fixed.len()
    }

    /// Target value of node `k` if it is fixed.
    pub fn alpha_of(&self, k: usize) -> Option<bool> {
        self.fixed
            .binary_search(&k)
            .ok()
            .map(|p| self.alpha[p])
    }

    pub fn is_fixed(&self, k: usize) -> bool {
        self.fixed.binary_search(&k).is_ok()
    }

    /// Lookup table of target values indexed by node.
    pub fn alpha_table(&self) -> Vec<Option<bool>> {
        let mut table = vec![None; self.node_count()];
        for (&k, &a) in self.fixed.iter().zip(&self.alpha) {
            table[k] = Some(a);
        }
        table
    }

    /// Whether the fixed-node projection of `state` equals `alpha`.
    pub fn satisfied_by(&self, state: &StateVector) -> bool {
        self.fixed
            .iter()
            .zip(&self.alpha)
            .all(|(&k, &a)| state.get(k) == a)
    }
}

/// Splits the nodes by comparing, for every node `k`, the target states with
/// `x_k = 0` and with `x_k = 1` after deleting component `k`. Equal sets make
/// the node free.
pub fn lambda_partition(target: &TargetSet, n: usize) -> Result<NodePartition> {
    target.check_len(n)?;
    match target {
        TargetSet::Pattern(p) => {
            let free = (0..n).filter(|&k| p[k].is_none()).collect();
            let fixed: Vec<usize> = (0..n).filter(|&k| p[k].is_some()).collect();
            let alpha = fixed.iter().map(|&k| p[k].unwrap()).collect();
            Ok(NodePartition { free, fixed, alpha })
        }
        TargetSet::Explicit(states) => {
            let mut free = Vec::new();
            let mut fixed = Vec::new();
            let mut alpha = Vec::new();
            let mut ambiguous = Vec::new();
            for k in 0..n {
                let mut with_zero = HashSet::new();
                let mut with_one = HashSet::new();
                for s in states {
                    let mut reduced = s.clone();
                    reduced.set(k, false);
                    if s.get(k) {
                        with_one.insert(reduced);
                    } else {
                        with_zero.insert(reduced);
                    }
                }
                if with_zero == with_one {
                    free.push(k);
                } else if with_zero.is_empty() || with_one.is_empty() {
                    fixed.push(k);
                    alpha.push(with_zero.is_empty());
                } else {
                    ambiguous.push(k);
                }
            }
            if !ambiguous.is_empty() {
                return Err(Error::AmbiguousTarget(ambiguous));
            }
            Ok(NodePartition { free, fixed, alpha })
        }
    }
}

/// Bits of `state` at `nodes`, in the given order.
pub fn projection(state: &StateVector, nodes: &[usize]) -> Vec<bool> {
    nodes.iter().map(|&k| state.get(k)).collect()
}
