use std::collections::HashSet;
use std::fmt;

use super::network::{BooleanNetwork, StateVector};
use crate::error::{Error, Result};

/// Target set of states: a `{0,1,*}` pattern or an explicit list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetSet {
    /// `None` marks a free position.
    Pattern(Vec<Option<bool>>),
    Explicit(Vec<StateVector>),
}

impl TargetSet {
    pub fn pattern(text: &str) -> Result<Self> {
        text.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(Some(false)),
                '1' => Ok(Some(true)),
                '*' | '#' => Ok(None),
                other => Err(Error::InvalidTarget(format!(
                    "unexpected character `{other}` in pattern"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(TargetSet::Pattern)
    }

    pub fn explicit(states: Vec<StateVector>) -> Result<Self> {
        let Some(first) = states.first() else {
            return Err(Error::InvalidTarget("explicit target set is empty".into()));
        };
        let n = first.len();
        if let Some(bad) = states.iter().find(|s| s.len() != n) {
            return Err(Error::TargetLength {
                expected: n,
                found: bad.len(),
            });
        }
        let mut seen = HashSet::new();
        if let Some(dup) = states.iter().find(|s| !seen.insert(*s)) {
            return Err(Error::InvalidTarget(format!("state {dup} listed twice")));
        }
        Ok(TargetSet::Explicit(states))
    }

    /// Named form `A=1,B=0`; unnamed nodes are free.
    pub fn named(text: &str, net: &BooleanNetwork) -> Result<Self> {
        let mut pattern = vec![None; net.len()];
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidTarget(format!("expected NAME=0|1, got `{item}`")))?;
            let k = net
                .index_of(name.trim())
                .ok_or_else(|| Error::InvalidTarget(format!("unknown node `{}`", name.trim())))?;
            pattern[k] = Some(match value.trim() {
                "0" => false,
                "1" => true,
                v => return Err(Error::InvalidTarget(format!("bad value `{v}` for {name}"))),
            });
        }
        Ok(TargetSet::Pattern(pattern))
    }

    /// Parses any of the textual forms: several lines of bit strings give an
    /// explicit list, `NAME=v` items give the named form, otherwise a pattern.
    pub fn parse(text: &str, net: &BooleanNetwork) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        let target = match lines.as_slice() {
            [] => return Err(Error::InvalidTarget("empty target".into())),
            [one] if one.contains('=') => Self::named(one, net)?,
            [one] if one.contains(['*', '#']) => Self::pattern(one)?,
            [one] => Self::explicit(vec![one.parse()?])?,
            many => Self::explicit(
                many.iter()
                    .map(|l| l.parse())
                    .collect::<Result<Vec<StateVector>>>()?,
            )?,
        };
        target.check_len(net.len())?;
        Ok(target)
    }

    pub fn full(n: usize) -> Self {
        TargetSet::Pattern(vec![None; n])
    }

    pub fn len(&self) -> usize {
        match self {
            TargetSet::Pattern(p) => p.len(),
            TargetSet::Explicit(states) => states[0].len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::TargetLength {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, state: &StateVector) -> bool {
        match self {
            TargetSet::Pattern(p) => p
                .iter()
                .enumerate()
                .all(|(k, v)| v.is_none_or(|b| state.get(k) == b)),
            TargetSet::Explicit(states) => states.contains(state),
        }
    }

    /// Every state of the set; pattern inputs must have at most 24 free bits.
    pub fn expand(&self) -> Vec<StateVector> {
        match self {
            TargetSet::Explicit(states) => states.clone(),
            TargetSet::Pattern(p) => {
                let free: Vec<usize> = (0..p.len()).filter(|&k| p[k].is_none()).collect();
                assert!(free.len() <= 24, "pattern too wide to expand");
                let mut base = StateVector::zeros(p.len());
                for (k, v) in p.iter().enumerate() {
                    base.set(k, v.unwrap_or(false));
                }
                (0..1u64 << free.len())
                    .map(|m| {
                        let mut s = base.clone();
                        for (b, &k) in free.iter().enumerate() {
                            s.set(k, (m >> b) & 1 == 1);
                        }
                        s
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for TargetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetSet::Pattern(p) => {
                for v in p {
                    f.write_str(match v {
                        Some(true) => "1",
                        Some(false) => "0",
                        None => "*",
                    })?;
                }
                Ok(())
            }
            TargetSet::Explicit(states) => {
                let parts: Vec<String> = states.iter().map(|s| s.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

/// Member test; `false` when lengths differ.
pub fn member(target: &TargetSet, state: &StateVector) -> bool {
    target.len() == state.len() && target.contains(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_membership() {
        let t = TargetSet::pattern("1*0").unwrap();
        assert!(member(&t, &"110".parse().unwrap()));
        assert!(member(&t, &"100".parse().unwrap()));
        assert!(!member(&t, &"111".parse().unwrap()));
        assert!(!member(&t, &"11".parse().unwrap()));
    }

    #[test]
    fn pattern_agrees_with_expansion() {
        for text in ["1*0*", "****", "0101", "*1**1*"] {
            let t = TargetSet::pattern(text).unwrap();
            let expanded = TargetSet::explicit(t.expand()).unwrap();
            let n = t.len();
            for i in 0..1u64 << n {
                let s = StateVector::from_index(i, n);
                assert_eq!(member(&t, &s), member(&expanded, &s), "{text} {s}");
            }
        }
    }

    #[test]
    fn explicit_validation() {
        assert!(TargetSet::explicit(vec![]).is_err());
        let a: StateVector = "01".parse().unwrap();
        assert!(TargetSet::explicit(vec![a.clone(), a.clone()]).is_err());
        assert!(matches!(
            TargetSet::explicit(vec![a, "1".parse().unwrap()]),
            Err(Error::TargetLength { .. })
        ));
    }
}
