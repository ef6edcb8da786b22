use std::fmt;

use crate::error::{Error, Result};

/// Cap on the number of syntactic variables a single rule may read before
/// truth-table enumeration is refused.
pub const DEFAULT_ARITY_CAP: usize = 24;

/// Logical expression over network nodes. Variables hold 0-based node indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoolExpr {
    Const(bool),
    Var(usize),
    Not(Box<BoolExpr>),
    And(Vec<BoolExpr>),
    Or(Vec<BoolExpr>),
    Xor(Vec<BoolExpr>),
}

impl BoolExpr {
    pub fn var(index: usize) -> Self {
        BoolExpr::Var(index)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(expr: BoolExpr) -> Self {
        BoolExpr::Not(Box::new(expr))
    }

    pub fn and(terms: Vec<BoolExpr>) -> Self {
        Self::nary(terms, BoolExpr::And, true)
    }

    pub fn or(terms: Vec<BoolExpr>) -> Self {
        Self::nary(terms, BoolExpr::Or, false)
    }

    pub fn xor(terms: Vec<BoolExpr>) -> Self {
        Self::nary(terms, BoolExpr::Xor, false)
    }

    fn nary(mut terms: Vec<BoolExpr>, make: fn(Vec<BoolExpr>) -> BoolExpr, empty: bool) -> Self {
        match terms.len() {
            0 => BoolExpr::Const(empty),
            1 => terms.pop().unwrap(),
            _ => make(terms),
        }
    }

    /// Evaluates with `get(i)` supplying the state of node `i`.
    pub fn eval_with<F: Fn(usize) -> bool + ?Sized>(&self, get: &F) -> bool {
        match self {
            BoolExpr::Const(b) => *b,
            BoolExpr::Var(i) => get(*i),
            BoolExpr::Not(e) => !e.eval_with(get),
            BoolExpr::And(ts) => ts.iter().all(|t| t.eval_with(get)),
            BoolExpr::Or(ts) => ts.iter().any(|t| t.eval_with(get)),
            BoolExpr::Xor(ts) => ts.iter().fold(false, |acc, t| acc ^ t.eval_with(get)),
        }
    }

    /// Syntactic variables, ascending and deduplicated.
    pub fn variables(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            BoolExpr::Const(_) => {}
            BoolExpr::Var(i) => out.push(*i),
            BoolExpr::Not(e) => e.collect_vars(out),
            BoolExpr::And(ts) | BoolExpr::Or(ts) | BoolExpr::Xor(ts) => {
                ts.iter().for_each(|t| t.collect_vars(out))
            }
        }
    }

    /// Rewrites every variable through `f`; `None` freezes it to `false`.
    pub fn map_vars(&self, f: &impl Fn(usize) -> Option<usize>) -> BoolExpr {
        match self {
            BoolExpr::Const(b) => BoolExpr::Const(*b),
            BoolExpr::Var(i) => f(*i).map_or(BoolExpr::Const(false), BoolExpr::Var),
            BoolExpr::Not(e) => BoolExpr::Not(Box::new(e.map_vars(f))),
            BoolExpr::And(ts) => BoolExpr::And(ts.iter().map(|t| t.map_vars(f)).collect()),
            BoolExpr::Or(ts) => BoolExpr::Or(ts.iter().map(|t| t.map_vars(f)).collect()),
            BoolExpr::Xor(ts) => BoolExpr::Xor(ts.iter().map(|t| t.map_vars(f)).collect()),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            BoolExpr::Or(_) => 1,
            BoolExpr::Xor(_) => 2,
            BoolExpr::And(_) => 3,
            BoolExpr::Not(_) => 4,
            BoolExpr::Const(_) | BoolExpr::Var(_) => 5,
        }
    }

    /// Renders in the rule grammar using `names` for variables.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        Rendered { expr: self, names }
    }
}

struct Rendered<'a> {
    expr: &'a BoolExpr,
    names: &'a [String],
}

impl Rendered<'_> {
    fn write(&self, e: &BoolExpr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let child = |c: &BoolExpr, min: u8, f: &mut fmt::Formatter<'_>| {
            if c.precedence() < min {
                f.write_str("(")?;
                self.write(c, f)?;
                f.write_str(")")
            } else {
                self.write(c, f)
            }
        };
        match e {
            BoolExpr::Const(b) => f.write_str(if *b { "1" } else { "0" }),
            BoolExpr::Var(i) => match self.names.get(*i) {
                Some(name) => f.write_str(name),
                None => write!(f, "x{}", i + 1),
            },
            BoolExpr::Not(inner) => {
                f.write_str("!")?;
                child(inner, 4, f)
            }
            BoolExpr::And(ts) | BoolExpr::Or(ts) | BoolExpr::Xor(ts) => {
                let (op, prec) = match e {
                    BoolExpr::And(_) => (" & ", 3),
                    BoolExpr::Or(_) => (" | ", 1),
                    _ => (" ^ ", 2),
                };
                for (k, t) in ts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(op)?;
                    }
                    // equal precedence is safe: all three operators are associative
                    child(t, prec, f)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.expr, f)
    }
}

/// Truth table of an expression over an ordered variable list.
///
/// Entries are stored in canonical-vector column order: the first variable is
/// the most significant digit and the all-true assignment is entry 0. This is
/// the column order of the structure matrix, so entry `c` is column `c + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    vars: Vec<usize>,
    bits: Vec<u64>,
}

impl TruthTable {
    /// Enumerates `expr` over `vars`. Syntactic variables outside `vars` are
    /// frozen to `false`, which is sound whenever they are non-functional.
    pub fn build(expr: &BoolExpr, vars: &[usize], cap: usize) -> Result<Self> {
        if vars.len() > cap {
            return Err(Error::ArityCap {
                node: String::new(),
                arity: vars.len(),
                cap,
            });
        }
        let local = expr.map_vars(&|v| vars.iter().position(|&w| w == v));
        let k = vars.len();
        let len = 1usize << k;
        let mut bits = vec![0u64; len.div_ceil(64)];
        for c in 0..len {
            let value = local.eval_with(&|p: usize| column_bit(c, p, k));
            if value {
                bits[c / 64] |= 1 << (c % 64);
            }
        }
        Ok(TruthTable {
            vars: vars.to_vec(),
            bits,
        })
    }

    pub fn from_fn(vars: &[usize], f: impl Fn(usize) -> bool) -> Self {
        let len = 1usize << vars.len();
        let mut bits = vec![0u64; len.div_ceil(64)];
        for c in 0..len {
            if f(c) {
                bits[c / 64] |= 1 << (c % 64);
            }
        }
        TruthTable {
            vars: vars.to_vec(),
            bits,
        }
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        1 << self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, column: usize) -> bool {
        (self.bits[column / 64] >> (column % 64)) & 1 == 1
    }

    /// Value at an assignment given as one bool per variable.
    pub fn at(&self, values: &[bool]) -> bool {
        self.get(column_of(values))
    }

    /// Whether the variable at `position` flips the output for some assignment.
    pub fn is_functional(&self, position: usize) -> bool {
        let k = self.vars.len();
        let mask = 1usize << (k - 1 - position);
        (0..self.len())
            .filter(|c| c & mask == 0)
            .any(|c| self.get(c) != self.get(c | mask))
    }

    pub fn functional_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&p| self.is_functional(p))
            .map(|p| self.vars[p])
            .collect()
    }

    pub fn constant(&self) -> Option<bool> {
        let first = self.get(0);
        (1..self.len()).all(|c| self.get(c) == first).then_some(first)
    }
}

/// Value of variable `position` (of `arity`) at canonical column `column`.
/// Digit 0 selects `true`, matching `zeta(1) = δ_2^1`.
pub fn column_bit(column: usize, position: usize, arity: usize) -> bool {
    (column >> (arity - 1 - position)) & 1 == 0
}

/// Canonical column index of an assignment, first value most significant.
pub fn column_of(values: &[bool]) -> usize {
    values
        .iter()
        .fold(0usize, |acc, &v| (acc << 1) | usize::from(!v))
}

/// Semantic dependency set of `expr` among `candidates`, ascending.
///
/// A candidate is functional when flipping it alone changes the output for
/// some assignment of the others.
pub fn functional_inputs(expr: &BoolExpr, candidates: &[usize]) -> Result<Vec<usize>> {
    functional_inputs_capped(expr, candidates, DEFAULT_ARITY_CAP)
}

pub fn functional_inputs_capped(
    expr: &BoolExpr,
    candidates: &[usize],
    cap: usize,
) -> Result<Vec<usize>> {
    let mut vars = candidates.to_vec();
    vars.sort_unstable();
    vars.dedup();
    Ok(TruthTable::build(expr, &vars, cap)?.functional_vars())
}
