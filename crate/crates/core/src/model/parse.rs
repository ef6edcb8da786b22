//! Rule-file grammar: one `NAME , EXPR` per line, `#` comments, blank lines
//! ignored. Operators by decreasing precedence: `!`, `&`, `^`, `|`.

use std::collections::HashMap;
use std::fmt::Write;

use super::expr::{BoolExpr, DEFAULT_ARITY_CAP};
use super::network::BooleanNetwork;
use crate::error::{Error, Result};

pub fn parse_network(text: &str) -> Result<BooleanNetwork> {
    parse_network_capped(text, DEFAULT_ARITY_CAP)
}

pub fn parse_network_capped(text: &str, arity_cap: usize) -> Result<BooleanNetwork> {
    struct Pending<'a> {
        line: usize,
        column: usize,
        body: &'a str,
    }

    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut pending = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if names.is_empty() && content.trim().eq_ignore_ascii_case("targets, factors") {
            continue;
        }
        let Some(comma) = content.find(',') else {
            return Err(Error::Syntax {
                line,
                column: content.len() + 1,
                message: "expected `NAME , EXPR`".into(),
            });
        };
        let name = content[..comma].trim();
        if !is_identifier(name) {
            let column = content.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
            return Err(Error::Syntax {
                line,
                column,
                message: format!("invalid node name `{name}`"),
            });
        }
        if index.contains_key(name) {
            return Err(Error::DuplicateNode {
                line,
                name: name.to_string(),
            });
        }
        index.insert(name.to_string(), names.len());
        names.push(name.to_string());
        pending.push(Pending {
            line,
            column: comma + 2,
            body: &content[comma + 1..],
        });
    }

    let rules = pending
        .iter()
        .map(|p| {
            let mut parser = Parser {
                src: p.body.as_bytes(),
                pos: 0,
                line: p.line,
                column0: p.column,
                index: &index,
            };
            parser.parse_rule()
        })
        .collect::<Result<Vec<_>>>()?;

    BooleanNetwork::with_arity_cap(names, rules, arity_cap)
}

/// Writes a network back in the rule grammar.
pub fn emit_network(net: &BooleanNetwork) -> String {
    let mut out = String::new();
    for k in 0..net.len() {
        writeln!(out, "{}, {}", net.name(k), net.rule(k).display(net.names())).unwrap();
    }
    out
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    column0: usize,
    index: &'a HashMap<String, usize>,
}

impl Parser<'_> {
    fn parse_rule(&mut self) -> Result<BoolExpr> {
        let e = self.parse_or()?;
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.error(format!("unexpected `{}`", self.src[self.pos] as char)));
        }
        Ok(e)
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column0 + self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, op: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_level(
        &mut self,
        op: u8,
        next: fn(&mut Self) -> Result<BoolExpr>,
        make: fn(Vec<BoolExpr>) -> BoolExpr,
    ) -> Result<BoolExpr> {
        let mut terms = vec![next(self)?];
        while self.eat(op) {
            terms.push(next(self)?);
        }
        Ok(make(terms))
    }

    fn parse_or(&mut self) -> Result<BoolExpr> {
        self.parse_level(b'|', Self::parse_xor, BoolExpr::or)
    }

    fn parse_xor(&mut self) -> Result<BoolExpr> {
        self.parse_level(b'^', Self::parse_and, BoolExpr::xor)
    }

    fn parse_and(&mut self) -> Result<BoolExpr> {
        self.parse_level(b'&', Self::parse_unary, BoolExpr::and)
    }

    fn parse_unary(&mut self) -> Result<BoolExpr> {
        if self.eat(b'!') {
            return Ok(BoolExpr::not(self.parse_unary()?));
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<BoolExpr> {
        self.skip_ws();
        let Some(&c) = self.src.get(self.pos) else {
            return Err(self.error("unexpected end of expression".into()));
        };
        if c == b'(' {
            self.pos += 1;
            let e = self.parse_or()?;
            if !self.eat(b')') {
                return Err(self.error("expected `)`".into()));
            }
            return Ok(e);
        }
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("unexpected `{}`", c as char)));
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match word {
            "0" => Ok(BoolExpr::Const(false)),
            "1" => Ok(BoolExpr::Const(true)),
            _ if is_identifier(word) => match self.index.get(word) {
                Some(&k) => Ok(BoolExpr::Var(k)),
                None => Err(Error::UndefinedName {
                    line: self.line,
                    name: word.to_string(),
                }),
            },
            _ => {
                self.pos = start;
                Err(self.error(format!("invalid token `{word}`")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphk_line() {
        let net = parse_network("PI3K, PI3K\nSPHK, PI3K | S1P\nS1P, SPHK\n").unwrap();
        let k = net.index_of("SPHK").unwrap();
        assert_eq!(net.neighbors(k), &[0, 2]);
        assert_eq!(
            net.rule(k),
            &BoolExpr::Or(vec![BoolExpr::Var(0), BoolExpr::Var(2)])
        );
    }

    #[test]
    fn constants_and_semantic_simplification() {
        let net = parse_network("A, 0\nB, A ^ A\n").unwrap();
        assert_eq!(net.rule(0), &BoolExpr::Const(false));
        assert!(net.neighbors(0).is_empty());
        assert_eq!(net.rule(1).variables(), vec![0]);
        assert!(net.neighbors(1).is_empty());
    }

    #[test]
    fn precedence_not_and_xor_or() {
        let net = parse_network("a, 1\nb, 1\nc, 1\nd, !a & b ^ c | a\n").unwrap();
        let expected = BoolExpr::or(vec![
            BoolExpr::xor(vec![
                BoolExpr::and(vec![BoolExpr::not(BoolExpr::var(0)), BoolExpr::var(1)]),
                BoolExpr::var(2),
            ]),
            BoolExpr::var(0),
        ]);
        assert_eq!(net.rule(3), &expected);
    }

    #[test]
    fn comments_blank_lines_and_header() {
        let text = "targets, factors\n# model\n\nA, !A # oscillator\n";
        let net = parse_network(text).unwrap();
        assert_eq!(net.len(), 1);
        assert_eq!(net.neighbors(0), &[0]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_network("A, A &\n") {
            Err(Error::Syntax { line: 1, column, .. }) => assert_eq!(column, 7),
            other => panic!("{other:?}"),
        }
        match parse_network("A, 1\nB, A | C\n") {
            Err(Error::UndefinedName { line: 2, name }) => assert_eq!(name, "C"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_network("A, 1\nA, 0\n"),
            Err(Error::DuplicateNode { line: 2, .. })
        ));
        assert!(matches!(
            parse_network("A 1\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_network("A, (A\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn emit_round_trips() {
        let text = "a, !a | b & (a ^ b)\nb, !(a | b)\n";
        let net = parse_network(text).unwrap();
        let again = parse_network(&emit_network(&net)).unwrap();
        assert_eq!(net, again);
    }
}
