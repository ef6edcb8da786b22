//! Semi-tensor-product algebra on logical matrices, kept in compressed form.
//!
//! A logical matrix is stored as one row index per column. All dimensions used
//! by the synthesis pipeline are powers of two, so the product of mismatched
//! dimensions always reduces to a Kronecker inflation by an identity on one side.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{column_of, BoolExpr, TruthTable, DEFAULT_ARITY_CAP};

/// `δ_order^index`, with `index` 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalVector {
    pub order: usize,
    pub index: usize,
}

impl CanonicalVector {
    pub fn new(order: usize, index: usize) -> Self {
        assert!((1..=order).contains(&index), "δ_{order}^{index} out of range");
        CanonicalVector { order, index }
    }

    pub fn to_matrix(self) -> LogicalMatrix {
        LogicalMatrix {
            rows: self.order,
            cols: vec![(self.index - 1) as u32],
        }
    }
}

/// Canonical form of a bit: `1 ↦ δ_2^1`, `0 ↦ δ_2^2`.
pub fn zeta(bit: bool) -> CanonicalVector {
    CanonicalVector::new(2, 2 - usize::from(bit))
}

pub fn unzeta(v: CanonicalVector) -> bool {
    assert_eq!(v.order, 2);
    v.index == 1
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LogicalMatrix {
    rows: usize,
    /// 0-based row of the single 1-entry of each column.
    cols: Vec<u32>,
}

impl LogicalMatrix {
    /// `δ_rows[indices]` with 1-based indices.
    pub fn delta(rows: usize, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > rows) {
            return Err(Error::Dimension(format!("index {bad} outside 1..={rows}")));
        }
        Ok(LogicalMatrix {
            rows,
            cols: indices.iter().map(|&i| (i - 1) as u32).collect(),
        })
    }

    pub(crate) fn from_raw(rows: usize, cols: Vec<u32>) -> Self {
        debug_assert!(cols.iter().all(|&c| (c as usize) < rows));
        LogicalMatrix { rows, cols }
    }

    pub fn identity(n: usize) -> Self {
        LogicalMatrix {
            rows: n,
            cols: (0..n as u32).collect(),
        }
    }

    /// Row vector of `n` ones, `1_n^T`.
    pub fn ones_row(n: usize) -> Self {
        LogicalMatrix {
            rows: 1,
            cols: vec![0; n],
        }
    }

    /// `2 × 1` matrix `ζ(value)`.
    pub fn constant(value: bool) -> Self {
        zeta(value).to_matrix()
    }

    /// `2 × 2^k` structure matrix from a truth table in canonical column order.
    pub fn from_truth_table(tt: &TruthTable) -> Self {
        LogicalMatrix {
            rows: 2,
            cols: (0..tt.len()).map(|c| u32::from(!tt.get(c))).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// 1-based row index of column `c` (0-based).
    pub fn index(&self, c: usize) -> usize {
        self.cols[c] as usize + 1
    }

    /// 1-based row indices, as in the bracket notation.
    pub fn indices(&self) -> Vec<usize> {
        self.cols.iter().map(|&c| c as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.cols
    }

    /// Boolean value of column `c` of a 2-row matrix.
    pub fn value(&self, c: usize) -> bool {
        debug_assert_eq!(self.rows, 2);
        self.cols[c] == 0
    }

    /// Number of variables of a `2 × 2^k` structure matrix.
    pub fn arity(&self) -> usize {
        debug_assert!(self.cols.len().is_power_of_two());
        self.cols.len().trailing_zeros() as usize
    }

    /// Product with a canonical vector: picks one column.
    pub fn apply(&self, v: CanonicalVector) -> Result<CanonicalVector> {
        let m = self.stp(&v.to_matrix())?;
        Ok(CanonicalVector::new(m.rows, m.index(0)))
    }

    /// Semi-tensor product `self ⋉ other`.
    pub fn stp(&self, other: &LogicalMatrix) -> Result<LogicalMatrix> {
        let n = self.cols.len();
        let p = other.rows;
        if n == p {
            return Ok(LogicalMatrix {
                rows: self.rows,
                cols: other.cols.iter().map(|&r| self.cols[r as usize]).collect(),
            });
        }
        if n > p && n.is_multiple_of(p) {
            // A (B ⊗ I_t)
            let t = n / p;
            let mut cols = Vec::with_capacity(other.cols.len() * t);
            for &r in &other.cols {
                let base = r as usize * t;
                cols.extend_from_slice(&self.cols[base..base + t]);
            }
            return Ok(LogicalMatrix {
                rows: self.rows,
                cols,
            });
        }
        if p > n && p.is_multiple_of(n) {
            // (A ⊗ I_t) B
            let t = p / n;
            let cols = other
                .cols
                .iter()
                .map(|&r| {
                    let (i, j) = (r as usize / t, r as usize % t);
                    (self.cols[i] as usize * t + j) as u32
                })
                .collect();
            return Ok(LogicalMatrix {
                rows: self.rows * t,
                cols,
            });
        }
        Err(Error::Dimension(format!(
            "cannot form the semi-tensor product of {} columns with {} rows",
            n, p
        )))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &LogicalMatrix) -> LogicalMatrix {
        let mut cols = Vec::with_capacity(self.cols.len() * other.cols.len());
        for &a in &self.cols {
            for &b in &other.cols {
                cols.push((a as usize * other.rows + b as usize) as u32);
            }
        }
        LogicalMatrix {
            rows: self.rows * other.rows,
            cols,
        }
    }

    /// Transpose of a permutation matrix.
    pub fn transpose(&self) -> Result<LogicalMatrix> {
        if self.rows != self.cols.len() {
            return Err(Error::Dimension("transpose of a non-square logical matrix".into()));
        }
        let mut inv = vec![u32::MAX; self.rows];
        for (c, &r) in self.cols.iter().enumerate() {
            if inv[r as usize] != u32::MAX {
                return Err(Error::Dimension(
                    "transpose of a non-permutation logical matrix".into(),
                ));
            }
            inv[r as usize] = c as u32;
        }
        Ok(LogicalMatrix {
            rows: self.rows,
            cols: inv,
        })
    }
}

impl fmt::Display for LogicalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}[", self.rows)?;
        for (k, c) in self.cols.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for LogicalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LogicalMatrix {
    type Err = Error;

    /// Parses `d4[1,3,2,4]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Dimension(format!("malformed logical matrix `{s}`"));
        let s = s.trim();
        let rest = s.strip_prefix('d').ok_or_else(bad)?;
        let (rows, body) = rest.split_once('[').ok_or_else(bad)?;
        let body = body.strip_suffix(']').ok_or_else(bad)?;
        let rows: usize = rows.trim().parse().map_err(|_| bad())?;
        let indices = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        LogicalMatrix::delta(rows, &indices)
    }
}

/// Swap matrix `W_[q,p]`: `a ⋉ b = W_[q,p] ⋉ b ⋉ a` for `a` of order `p`, `b` of order `q`.
pub fn swap_matrix(q: usize, p: usize) -> LogicalMatrix {
    // column of b ⋉ a is (b-1)p + a; row of a ⋉ b is (a-1)q + b
    let mut cols = vec![0u32; q * p];
    for b in 0..q {
        for a in 0..p {
            cols[b * p + a] = (a * q + b) as u32;
        }
    }
    LogicalMatrix { rows: q * p, cols }
}

/// Power-reducing matrix `Φ_p`: `a ⋉ a = Φ_p ⋉ a` for canonical `a` of order `p`.
pub fn power_reducing(p: usize) -> LogicalMatrix {
    LogicalMatrix {
        rows: p * p,
        cols: (0..p).map(|k| (k * p + k) as u32).collect(),
    }
}

/// Structure matrix of `expr` over the ordered variable list `vars`.
pub fn structure_matrix(expr: &BoolExpr, vars: &[usize]) -> Result<LogicalMatrix> {
    let tt = TruthTable::build(expr, vars, DEFAULT_ARITY_CAP)?;
    Ok(LogicalMatrix::from_truth_table(&tt))
}

fn positions_of(vars: &[usize], subset: &[usize]) -> Result<Vec<usize>> {
    let mut positions = Vec::with_capacity(subset.len());
    for &s in subset {
        let p = vars
            .iter()
            .position(|&v| v == s)
            .ok_or_else(|| Error::Dimension(format!("variable {} not in list", s + 1)))?;
        if positions.last().is_some_and(|&last| last >= p) {
            return Err(Error::Dimension("subset must be an ordered sublist".into()));
        }
        positions.push(p);
    }
    Ok(positions)
}

/// `W` with `⋉_{vars} x = W (⋉_{subset} x)(⋉_{vars \ subset} x)`.
///
/// Built as a chain of swaps: the last subset variable is moved to the front
/// first, then the one before it, so that the subset ends up in order.
pub fn reorder_front(vars: &[usize], subset: &[usize]) -> Result<LogicalMatrix> {
    let positions = positions_of(vars, subset)?;
    let size = 1usize << vars.len();
    let sigma = positions.len();
    let mut chain = LogicalMatrix::identity(1);
    for (i, &p) in positions.iter().enumerate().rev() {
        // already-moved variables sit in front, shifting this one right
        let pos = p + (sigma - 1 - i);
        chain = chain.stp(&swap_matrix(2, 1 << pos))?;
    }
    let width = chain.ncols();
    Ok(if width < size {
        chain.kron(&LogicalMatrix::identity(size / width))
    } else {
        chain
    })
}

/// Factors the variables `drop` out of a structure matrix `s` over `vars`.
///
/// Returns `A` over the retained variables with
/// `s ⋉ reorder_front(vars, drop) = 1^T ⊗ A`.
pub fn factor_nonfunctional(
    s: &LogicalMatrix,
    vars: &[usize],
    drop: &[usize],
) -> Result<LogicalMatrix> {
    if s.ncols() != 1 << vars.len() {
        return Err(Error::Dimension(format!(
            "{} columns for {} variables",
            s.ncols(),
            vars.len()
        )));
    }
    let w = reorder_front(vars, drop)?;
    let moved = s.stp(&w)?;
    let kept = 1usize << (vars.len() - drop.len());
    let sigma = drop.len();
    let block = |b: usize| &moved.cols[b * kept..(b + 1) * kept];
    for (i, &var) in drop.iter().enumerate() {
        let mask = 1usize << (sigma - 1 - i);
        if (0..1usize << sigma)
            .filter(|b| b & mask == 0)
            .any(|b| block(b) != block(b | mask))
        {
            return Err(Error::StillFunctional(var));
        }
    }
    Ok(LogicalMatrix {
        rows: s.rows,
        cols: block(0).to_vec(),
    })
}

/// Inverse of [`factor_nonfunctional`]: `(1^T ⊗ A) ⋉ reorder_front(vars, drop)^T`.
pub fn embed_nonfunctional(
    a: &LogicalMatrix,
    vars: &[usize],
    drop: &[usize],
) -> Result<LogicalMatrix> {
    let kept = vars.len().checked_sub(drop.len()).ok_or_else(|| {
        Error::Dimension("more dropped than listed variables".into())
    })?;
    if a.ncols() != 1 << kept {
        return Err(Error::Dimension(format!(
            "{} columns for {} retained variables",
            a.ncols(),
            kept
        )));
    }
    let w = reorder_front(vars, drop)?;
    LogicalMatrix::ones_row(1 << drop.len())
        .kron(a)
        .stp(&w.transpose()?)
}

/// Structure matrix with the variable at `position` (1-based) frozen to `value`.
pub fn restrict(s: &LogicalMatrix, position: usize, value: bool) -> Result<LogicalMatrix> {
    let k = s.arity();
    if position == 0 || position > k {
        return Err(Error::Dimension(format!("position {position} of {k}")));
    }
    let p = position - 1;
    let low_bits = k - 1 - p;
    let digit = usize::from(!value);
    let cols = (0..1usize << (k - 1))
        .map(|c| {
            let high = c >> low_bits;
            let low = c & ((1 << low_bits) - 1);
            s.cols[(high << (low_bits + 1)) | (digit << low_bits) | low]
        })
        .collect();
    Ok(LogicalMatrix { rows: s.rows, cols })
}

/// Whether the variable at 0-based `position` is functional in `s`.
pub fn is_functional_at(s: &LogicalMatrix, position: usize) -> bool {
    let k = s.arity();
    let mask = 1usize << (k - 1 - position);
    (0..s.ncols())
        .filter(|c| c & mask == 0)
        .any(|c| s.cols[c] != s.cols[c | mask])
}

/// Value of a structure matrix at the given variable values.
pub fn eval_structure(s: &LogicalMatrix, values: &[bool]) -> bool {
    debug_assert_eq!(s.ncols(), 1 << values.len());
    s.value(column_of(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> LogicalMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn zeta_maps_bits_to_canonical_vectors() {
        assert_eq!(zeta(true), CanonicalVector::new(2, 1));
        assert_eq!(zeta(false), CanonicalVector::new(2, 2));
        for b in [false, true] {
            assert_eq!(unzeta(zeta(b)), b);
        }
    }

    #[test]
    fn small_products() {
        let id = d("d2[1,2]");
        assert_eq!(id.stp(&LogicalMatrix::constant(true)).unwrap(), d("d2[1]"));
        let neg = d("d2[2,1]");
        assert_eq!(neg.stp(&neg).unwrap(), d("d2[1,2]"));
        let e1 = LogicalMatrix::constant(true);
        let e2 = LogicalMatrix::constant(false);
        assert_eq!(e1.stp(&e2).unwrap(), d("d4[2]"));
    }

    #[test]
    fn swap_matrices() {
        assert_eq!(swap_matrix(1, 4), LogicalMatrix::identity(4));
        assert_eq!(swap_matrix(2, 2), d("d4[1,3,2,4]"));
        assert_eq!(swap_matrix(2, 4), d("d8[1,3,5,7,2,4,6,8]"));
    }

    #[test]
    fn power_reducing_matrices() {
        assert_eq!(power_reducing(2), d("d4[1,4]"));
        assert_eq!(power_reducing(4), d("d16[1,6,11,16]"));
    }

    #[test]
    fn structure_matrices_of_tlgl_rules() {
        let or = BoolExpr::or(vec![BoolExpr::var(10), BoolExpr::var(15)]);
        assert_eq!(structure_matrix(&or, &[10, 15]).unwrap(), d("d2[1,1,1,2]"));
        assert_eq!(
            structure_matrix(&BoolExpr::var(10), &[10]).unwrap(),
            d("d2[1,2]")
        );
        let nor = BoolExpr::not(BoolExpr::or(vec![BoolExpr::var(3), BoolExpr::var(10)]));
        assert_eq!(structure_matrix(&nor, &[3, 10]).unwrap(), d("d2[2,2,2,1]"));
    }

    #[test]
    fn reorder_examples() {
        assert_eq!(reorder_front(&[1, 2, 3], &[1, 2]).unwrap(), LogicalMatrix::identity(8));
        assert_eq!(reorder_front(&[10, 15], &[15]).unwrap(), d("d4[1,3,2,4]"));
        assert!(reorder_front(&[1, 2], &[5]).is_err());
    }

    #[test]
    fn factor_examples() {
        // x1 | x2 padded with a non-functional x3
        let s = d("d2[1,1,1,1,1,1,2,2]");
        assert_eq!(factor_nonfunctional(&s, &[0, 1, 2], &[2]).unwrap(), d("d2[1,1,1,2]"));
        let c = d("d2[2,2,2,2]");
        assert_eq!(factor_nonfunctional(&c, &[0, 1], &[0, 1]).unwrap(), d("d2[2]"));
        assert_eq!(
            factor_nonfunctional(&d("d2[1,1,1,2]"), &[0, 1], &[1]),
            Err(Error::StillFunctional(1))
        );
    }

    #[test]
    fn embed_examples() {
        let a = d("d2[1,2]");
        assert_eq!(embed_nonfunctional(&a, &[10, 15], &[15]).unwrap(), d("d2[1,1,2,2]"));
        assert_eq!(embed_nonfunctional(&a, &[10], &[]).unwrap(), a);
        assert!(embed_nonfunctional(&a, &[10, 15], &[]).is_err());
    }

    #[test]
    fn restrict_examples() {
        let or = d("d2[1,1,1,2]");
        assert_eq!(restrict(&or, 2, false).unwrap(), d("d2[1,2]"));
        assert_eq!(restrict(&or, 2, true).unwrap(), d("d2[1,1]"));
        let nor = d("d2[2,2,2,1]");
        assert_eq!(restrict(&nor, 1, true).unwrap(), d("d2[2,2]"));
        let pad = d("d2[1,1,2,2]");
        assert_eq!(restrict(&pad, 2, true).unwrap(), d("d2[1,2]"));
    }

    #[test]
    fn bracket_text_round_trips() {
        let m = d("d16[1,6,11,16]");
        assert_eq!(m.to_string(), "d16[1,6,11,16]");
        assert!("d2[3]".parse::<LogicalMatrix>().is_err());
        assert!("x2[1]".parse::<LogicalMatrix>().is_err());
    }
}
