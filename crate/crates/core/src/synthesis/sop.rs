//! Two-level sum-of-products rendering of small truth tables.

use crate::model::{BoolExpr, TruthTable};

/// Above this many functional inputs prime-implicant generation is skipped
/// and the canonical minterm expansion is emitted instead.
const PRIME_LIMIT: usize = 12;

/// An implicant over `k` variables: `mask` marks cared positions and `value`
/// their polarity. Bit `i` refers to variable `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Cube {
    mask: u32,
    value: u32,
}

impl Cube {
    fn covers(&self, minterm: u32) -> bool {
        minterm & self.mask == self.value
    }

    fn literals(&self) -> u32 {
        self.mask.count_ones()
    }
}

/// Sum-of-products expression equal to `tt`, over its functional variables.
///
/// Constants and single literals collapse to themselves; otherwise prime
/// implicants are generated exactly and covered with essential primes first,
/// then greedily by coverage.
pub fn sum_of_products(tt: &TruthTable) -> BoolExpr {
    let all_vars = tt.vars();
    let k_all = all_vars.len();
    let keep: Vec<usize> = (0..k_all).filter(|&p| tt.is_functional(p)).collect();
    let k = keep.len();
    // bit i of a minterm holds variable keep[i]; dropped variables read as true
    let value_at = |m: u32| {
        let column = keep.iter().enumerate().fold(0usize, |acc, (i, &p)| {
            acc | (usize::from((m >> i) & 1 == 0) << (k_all - 1 - p))
        });
        tt.get(column)
    };
    let minterms: Vec<u32> = (0..1u32 << k).filter(|&m| value_at(m)).collect();
    if minterms.is_empty() {
        return BoolExpr::Const(false);
    }
    if minterms.len() == 1usize << k {
        return BoolExpr::Const(true);
    }
    let full = (1u32 << k) - 1;
    let cubes = if k <= PRIME_LIMIT {
        cover(&primes(&minterms, k), &minterms)
    } else {
        minterms
            .iter()
            .map(|&m| Cube {
                mask: full,
                value: m,
            })
            .collect()
    };
    let terms = cubes
        .iter()
        .map(|c| {
            BoolExpr::and(
                (0..k)
                    .filter(|&i| (c.mask >> i) & 1 == 1)
                    .map(|i| {
                        let v = BoolExpr::var(all_vars[keep[i]]);
                        if (c.value >> i) & 1 == 1 {
                            v
                        } else {
                            BoolExpr::not(v)
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    BoolExpr::or(terms)
}

fn primes(minterms: &[u32], k: usize) -> Vec<Cube> {
    let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
    let mut current: Vec<Cube> = minterms
        .iter()
        .map(|&m| Cube {
            mask: full,
            value: m,
        })
        .collect();
    let mut primes = Vec::new();
    while !current.is_empty() {
        let mut merged_flag = vec![false; current.len()];
        let mut next = std::collections::BTreeSet::new();
        for a in 0..current.len() {
            for b in a + 1..current.len() {
                let (x, y) = (current[a], current[b]);
                if x.mask != y.mask {
                    continue;
                }
                let diff = x.value ^ y.value;
                if diff.count_ones() == 1 {
                    next.insert(Cube {
                        mask: x.mask & !diff,
                        value: x.value & !diff,
                    });
                    merged_flag[a] = true;
                    merged_flag[b] = true;
                }
            }
        }
        primes.extend(
            current
                .iter()
                .zip(&merged_flag)
                .filter(|(_, &m)| !m)
                .map(|(c, _)| *c),
        );
        current = next.into_iter().collect();
    }
    primes.sort();
    primes.dedup();
    primes
}

fn cover(primes: &[Cube], minterms: &[u32]) -> Vec<Cube> {
    let mut chosen: Vec<Cube> = Vec::new();
    let mut uncovered: Vec<u32> = minterms.to_vec();
    for &m in minterms {
        let covering: Vec<&Cube> = primes.iter().filter(|p| p.covers(m)).collect();
        if covering.len() == 1 && !chosen.contains(covering[0]) {
            chosen.push(*covering[0]);
        }
    }
    uncovered.retain(|&m| !chosen.iter().any(|c| c.covers(m)));
    while !uncovered.is_empty() {
        let best = primes
            .iter()
            .filter(|p| !chosen.contains(p))
            .max_by_key(|p| {
                let gain = uncovered.iter().filter(|&&m| p.covers(m)).count();
                (gain, std::cmp::Reverse(p.literals()), std::cmp::Reverse(**p))
            })
            .copied()
            .expect("primes cover every minterm");
        chosen.push(best);
        uncovered.retain(|&m| !best.covers(m));
    }
    // larger cubes first, then by variable order
    chosen.sort_by_key(|c| (c.literals(), c.mask.reverse_bits(), !c.value));
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::DEFAULT_ARITY_CAP;

    fn table(expr: &BoolExpr, vars: &[usize]) -> TruthTable {
        TruthTable::build(expr, vars, DEFAULT_ARITY_CAP).unwrap()
    }

    #[test]
    fn constants_and_literals_collapse() {
        let t = TruthTable::from_fn(&[3, 7], |_| true);
        assert_eq!(sum_of_products(&t), BoolExpr::Const(true));
        let t = TruthTable::from_fn(&[3, 7], |_| false);
        assert_eq!(sum_of_products(&t), BoolExpr::Const(false));
        let not_x = table(&BoolExpr::not(BoolExpr::var(0)), &[0]);
        assert_eq!(sum_of_products(&not_x), BoolExpr::not(BoolExpr::var(0)));
        let x_padded = table(&BoolExpr::var(10), &[10, 15]);
        assert_eq!(sum_of_products(&x_padded), BoolExpr::var(10));
    }

    #[test]
    fn xor_and_majority() {
        let xor = BoolExpr::xor(vec![BoolExpr::var(0), BoolExpr::var(1)]);
        let sop = sum_of_products(&table(&xor, &[0, 1]));
        assert_eq!(table(&sop, &[0, 1]), table(&xor, &[0, 1]));
        let v = |i| BoolExpr::var(i);
        let maj = BoolExpr::or(vec![
            BoolExpr::and(vec![v(0), v(1)]),
            BoolExpr::and(vec![v(1), v(2)]),
            BoolExpr::and(vec![v(0), v(2)]),
        ]);
        let sop = sum_of_products(&table(&maj, &[0, 1, 2]));
        assert_eq!(table(&sop, &[0, 1, 2]), table(&maj, &[0, 1, 2]));
        match sop {
            BoolExpr::Or(terms) => assert_eq!(terms.len(), 3),
            other => panic!("{other:?}"),
        }
    }
}
