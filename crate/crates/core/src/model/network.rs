use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::expr::{functional_inputs_capped, BoolExpr, DEFAULT_ARITY_CAP};
use crate::error::{Error, Result};

/// Network state, bit `k` holding node `k` (node `k + 1` in reports).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateVector {
    len: usize,
    words: Vec<u64>,
}

impl StateVector {
    pub fn zeros(len: usize) -> Self {
        StateVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut s = Self::zeros(bits.len());
        for (k, &b) in bits.iter().enumerate() {
            s.set(k, b);
        }
        s
    }

    /// State whose node `k` is bit `k` of `index`.
    pub fn from_index(index: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut s = Self::zeros(len);
        if len > 0 {
            s.words[0] = if len == 64 { index } else { index & ((1 << len) - 1) };
        }
        s
    }

    pub fn to_index(&self) -> u64 {
        assert!(self.len <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, k: usize) -> bool {
        debug_assert!(k < self.len);
        (self.words[k / 64] >> (k % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, k: usize, value: bool) {
        debug_assert!(k < self.len);
        let mask = 1u64 << (k % 64);
        if value {
            self.words[k / 64] |= mask;
        } else {
            self.words[k / 64] &= !mask;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|k| self.get(k))
    }

    /// Positions where the two states differ.
    pub fn hamming(&self, other: &StateVector) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateVector({self})")
    }
}

impl FromStr for StateVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidTarget(format!(
                    "unexpected character `{other}` in state string"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StateVector::from_bits(&bits))
    }
}

impl Serialize for StateVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for StateVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Synchronous Boolean network with semantically computed input lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanNetwork {
    names: Vec<String>,
    rules: Vec<BoolExpr>,
    neighbors: Vec<Vec<usize>>,
}

impl BooleanNetwork {
    pub fn new(names: Vec<String>, rules: Vec<BoolExpr>) -> Result<Self> {
        Self::with_arity_cap(names, rules, DEFAULT_ARITY_CAP)
    }

    pub fn with_arity_cap(names: Vec<String>, rules: Vec<BoolExpr>, cap: usize) -> Result<Self> {
        if names.len() != rules.len() {
            return Err(Error::Dimension(format!(
                "{} names for {} rules",
                names.len(),
                rules.len()
            )));
        }
        let n = names.len();
        let mut neighbors = Vec::with_capacity(n);
        for (name, rule) in names.iter().zip(&rules) {
            let vars = rule.variables();
            if let Some(&bad) = vars.iter().find(|&&v| v >= n) {
                return Err(Error::Dimension(format!(
                    "rule of `{name}` reads node {} of {n}",
                    bad + 1
                )));
            }
            let inputs = functional_inputs_capped(rule, &vars, cap).map_err(|e| match e {
                Error::ArityCap { arity, cap, .. } => Error::ArityCap {
                    node: name.clone(),
                    arity,
                    cap,
                },
                other => other,
            })?;
            neighbors.push(inputs);
        }
        Ok(BooleanNetwork {
            names,
            rules,
            neighbors,
        })
    }

    /// Network with anonymous nodes `x1..xn`.
    pub fn anonymous(rules: Vec<BoolExpr>) -> Result<Self> {
        let names = (1..=rules.len()).map(|k| format!("x{k}")).collect();
        Self::new(names, rules)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, k: usize) -> &str {
        &self.names[k]
    }

    pub fn rules(&self) -> &[BoolExpr] {
        &self.rules
    }

    pub fn rule(&self, k: usize) -> &BoolExpr {
        &self.rules[k]
    }

    /// Functional inputs of node `k`, ascending.
    pub fn neighbors(&self, k: usize) -> &[usize] {
        &self.neighbors[k]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name_map(&self) -> HashMap<&str, usize> {
        self.names
            .iter()
            .enumerate()
            .map(|(k, n)| (n.as_str(), k))
            .collect()
    }

    /// Copy with the rules of the given nodes replaced.
    pub fn with_rules(&self, replacements: &[(usize, BoolExpr)]) -> Result<Self> {
        let mut rules = self.rules.clone();
        for (k, rule) in replacements {
            rules[*k] = rule.clone();
        }
        Self::new(self.names.clone(), rules)
    }

    pub fn eval_node(&self, k: usize, state: &StateVector) -> bool {
        self.rules[k].eval_with(&|i| state.get(i))
    }

    /// One synchronous update.
    pub fn step(&self, state: &StateVector) -> StateVector {
        assert_eq!(state.len(), self.len(), "state length must match network");
        let mut next = StateVector::zeros(self.len());
        for k in 0..self.len() {
            next.set(k, self.eval_node(k, state));
        }
        next
    }

    /// Successor on the packed index encoding (n ≤ 64).
    pub fn step_index(&self, state: u64) -> u64 {
        let get = |i: usize| (state >> i) & 1 == 1;
        self.rules
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, r)| acc | (u64::from(r.eval_with(&get)) << k))
    }

    /// Subnetwork on `nodes` (ascending), reindexed; fails unless closed.
    pub fn induced(&self, nodes: &[usize]) -> Result<BooleanNetwork> {
        let mut local = vec![None; self.len()];
        for (p, &k) in nodes.iter().enumerate() {
            local[k] = Some(p);
        }
        for &k in nodes {
            if let Some(&input) = self.neighbors[k].iter().find(|&&i| local[i].is_none()) {
                return Err(Error::NotClosed { node: k, input });
            }
        }
        let names = nodes.iter().map(|&k| self.names[k].clone()).collect();
        let rules = nodes
            .iter()
            .map(|&k| self.rules[k].map_vars(&|v| local[v]))
            .collect();
        Self::new(names, rules)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_node_is_stationary() {
        let net = BooleanNetwork::anonymous(vec![BoolExpr::var(0)]).unwrap();
        let s = StateVector::from_bits(&[true]);
        assert_eq!(net.step(&s), s);
    }

    #[test]
    fn swap_pair_updates_synchronously() {
        let net = BooleanNetwork::anonymous(vec![BoolExpr::var(1), BoolExpr::var(0)]).unwrap();
        let s: StateVector = "10".parse().unwrap();
        assert_eq!(net.step(&s).to_string(), "01");
        assert_eq!(net.step_index(s.to_index()), 0b10);
    }

    #[test]
    fn neighbors_are_semantic() {
        let net = BooleanNetwork::anonymous(vec![
            BoolExpr::xor(vec![BoolExpr::var(1), BoolExpr::var(1)]),
            BoolExpr::or(vec![BoolExpr::var(0), BoolExpr::not(BoolExpr::var(0))]),
        ])
        .unwrap();
        assert!(net.neighbors(0).is_empty());
        assert!(net.neighbors(1).is_empty());
    }

    #[test]
    fn induced_requires_closure() {
        let net = BooleanNetwork::anonymous(vec![
            BoolExpr::var(1),
            BoolExpr::var(2),
            BoolExpr::Const(true),
        ])
        .unwrap();
        assert!(matches!(
            net.induced(&[0, 1]),
            Err(Error::NotClosed { node: 1, input: 2 })
        ));
        let sub = net.induced(&[1, 2]).unwrap();
        assert_eq!(sub.neighbors(0), &[1]);
    }

    #[test]
    fn state_string_round_trip() {
        let s: StateVector = "11111111110000000110011100000".parse().unwrap();
        assert_eq!(s.len(), 29);
        assert!(s.get(0) && s.get(9) && !s.get(10));
        assert_eq!(s.to_string(), "11111111110000000110011100000");
    }
}
