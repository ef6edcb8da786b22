use crate::error::{Error, Result};
use crate::model::BooleanNetwork;
use crate::partition::NodePartition;
use crate::stp::{is_functional_at, reorder_front, structure_matrix, LogicalMatrix};

/// Desired dynamics of a pinned node over its retained inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeTarget {
    pub node: usize,
    /// Functional inputs of the original rule.
    pub inputs: Vec<usize>,
    /// Inputs whose arcs stay in the controlled structure.
    pub retained: Vec<usize>,
    /// Inputs whose arcs are cut.
    pub dropped: Vec<usize>,
    /// Values the dropped inputs were frozen to, aligned with `dropped`.
    pub frozen: Vec<bool>,
    /// The column at the target values had to be overwritten.
    pub overwritten: bool,
    /// Target matrix over `retained`.
    pub matrix: LogicalMatrix,
}

/// Builds the target matrix of pinned node `j`.
///
/// Every assignment of the dropped inputs is tried as a restriction of the
/// original structure matrix. Restrictions mapping the target values of the
/// retained inputs to the target value of `j` are preferred, and among those
/// the one keeping the most retained inputs functional. If none qualifies,
/// the best restriction has its column at the target values overwritten.
pub fn build_target(
    j: usize,
    net: &BooleanNetwork,
    partition: &NodePartition,
    dropped: &[usize],
) -> Result<NodeTarget> {
    let inputs = net.neighbors(j).to_vec();
    let retained: Vec<usize> = inputs
        .iter()
        .copied()
        .filter(|i| !dropped.contains(i))
        .collect();
    let alpha_j = partition.alpha_of(j).ok_or_else(|| {
        Error::InvalidTarget(format!("node {} is not a fixed-state node", j + 1))
    })?;
    let mut alpha_column = 0usize;
    for (p, &i) in retained.iter().enumerate() {
        let a = partition
            .alpha_of(i)
            .ok_or(Error::NotClosed { node: j, input: i })?;
        alpha_column |= usize::from(!a) << (retained.len() - 1 - p);
    }

    let s_f = structure_matrix(net.rule(j), &inputs)?;
    let moved = s_f.stp(&reorder_front(&inputs, dropped)?)?;
    let width = 1usize << retained.len();
    let sigma = dropped.len();

    // (satisfies fixed point, functional count, block) ranked; lowest block wins ties
    let mut best: Option<(bool, usize, usize, LogicalMatrix)> = None;
    for block in 0..1usize << sigma {
        let cols = moved.raw()[block * width..(block + 1) * width].to_vec();
        let restriction = LogicalMatrix::from_raw(2, cols);
        let holds = restriction.value(alpha_column) == alpha_j;
        let functional = (0..retained.len())
            .filter(|&p| is_functional_at(&restriction, p))
            .count();
        let better = match &best {
            None => true,
            Some((h, f, _, _)) => (holds, functional) > (*h, *f),
        };
        if better {
            best = Some((holds, functional, block, restriction));
        }
    }
    let (holds, _, block, mut matrix) = best.expect("at least one restriction");
    if !holds {
        let mut cols = matrix.raw().to_vec();
        cols[alpha_column] = u32::from(!alpha_j);
        matrix = LogicalMatrix::from_raw(2, cols);
    }
    let frozen = (0..sigma)
        .map(|i| (block >> (sigma - 1 - i)) & 1 == 0)
        .collect();
    Ok(NodeTarget {
        node: j,
        inputs,
        retained,
        dropped: dropped.to_vec(),
        frozen,
        overwritten: !holds,
        matrix,
    })
}
