//! Recursive-descent parser for `x<i>, <expr>` network files.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! or   := xor ('|' xor)*
//! xor  := and ('^' and)*
//! and  := not ('&' not)*
//! not  := '!' not | atom
//! atom := 'x' digits | '0' | '1' | '(' or ')'
//! ```

use super::{NetworkDocument, Source};
use crate::cube::check_dimension;
use crate::error::{Error, Result};
use crate::network::BooleanNetwork;

/// A Boolean expression over `x1..xn`; variables are stored 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(bool),
    Var(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Xor(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Evaluates at the configuration word `x` (bit `i - 1` is `x_i`).
    pub fn eval(&self, x: u32) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Var(i) => x >> (i - 1) & 1 == 1,
            Expr::Not(e) => !e.eval(x),
            Expr::And(a, b) => a.eval(x) && b.eval(x),
            Expr::Xor(a, b) => a.eval(x) ^ b.eval(x),
            Expr::Or(a, b) => a.eval(x) || b.eval(x),
        }
    }

    fn max_var(&self) -> usize {
        match self {
            Expr::Const(_) => 0,
            Expr::Var(i) => *i,
            Expr::Not(e) => e.max_var(),
            Expr::And(a, b) | Expr::Xor(a, b) | Expr::Or(a, b) => a.max_var().max(b.max_var()),
        }
    }
}

struct Parser<'a> {
    line: usize,
    text: &'a [u8],
    pos: usize,
    /// Column of `text[0]` within the original line, 1-based.
    offset: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.offset + self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn binary(
        &mut self,
        op: u8,
        next: fn(&mut Self) -> Result<Expr>,
        build: fn(Box<Expr>, Box<Expr>) -> Expr,
    ) -> Result<Expr> {
        let mut lhs = next(self)?;
        while self.eat(op) {
            let rhs = next(self)?;
            lhs = build(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Expr> {
        self.binary(b'|', Self::xor, Expr::Or)
    }

    fn xor(&mut self) -> Result<Expr> {
        self.binary(b'^', Self::and, Expr::Xor)
    }

    fn and(&mut self) -> Result<Expr> {
        self.binary(b'&', Self::not, Expr::And)
    }

    fn not(&mut self) -> Result<Expr> {
        if self.eat(b'!') {
            Ok(Expr::Not(Box::new(self.not()?)))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            None => Err(self.error("unexpected end of line")),
            Some(b'0') => {
                self.pos += 1;
                Ok(Expr::Const(false))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Expr::Const(true))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.or()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                let start = self.pos;
                self.pos += 1;
                let digits_start = self.pos;
                while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.text[digits_start..self.pos]).unwrap_or("");
                match digits.parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(Expr::Var(i)),
                    _ => {
                        self.pos = start;
                        Err(self.error("expected a variable `x<i>` with i >= 1"))
                    }
                }
            }
            Some(c) => Err(self.error(format!("unexpected character `{}`", c as char))),
        }
    }
}

/// Parses a single expression; `line` is used in error positions.
pub fn parse_expression(text: &str, line: usize) -> Result<Expr> {
    let mut p = Parser {
        line,
        text: text.as_bytes(),
        pos: 0,
        offset: 1,
    };
    let e = p.or()?;
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses one `x<i>, <expr>` line per coordinate and materialises the table.
pub fn parse_expression_network(text: &str) -> Result<NetworkDocument> {
    let mut name = None;
    let mut rules: Vec<(usize, usize, Expr)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(label) = comment.trim().strip_prefix("name:") {
                name = Some(label.trim().to_string());
            }
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        let Some(comma) = raw.find(',') else {
            return Err(Error::Syntax {
                line: line_no,
                column: raw.len() + 1,
                message: "expected `x<i>, <expr>`".into(),
            });
        };
        let target = raw[..comma].trim();
        let index = target
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&i| i >= 1)
            .ok_or_else(|| Error::Syntax {
                line: line_no,
                column: raw.len() - raw.trim_start().len() + 1,
                message: format!("bad coordinate name `{target}`"),
            })?;
        let body = &raw[comma + 1..];
        let mut p = Parser {
            line: line_no,
            text: body.as_bytes(),
            pos: 0,
            offset: comma + 2,
        };
        let e = p.or()?;
        if p.peek().is_some() {
            return Err(p.error("unexpected trailing input"));
        }
        if rules.iter().any(|(i, _, _)| *i == index) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("duplicate coordinate x{index}"),
            });
        }
        rules.push((index, line_no, e));
    }
    let n = rules.iter().map(|(i, _, _)| *i).max().ok_or(Error::EmptyInput)?;
    check_dimension(n)?;
    for i in 1..=n {
        if !rules.iter().any(|(j, _, _)| *j == i) {
            return Err(Error::Parse {
                line: 0,
                message: format!("missing coordinate line for x{i}"),
            });
        }
    }
    for (_, line, e) in &rules {
        if e.max_var() > n {
            return Err(Error::Parse {
                line: *line,
                message: format!("undefined variable x{}", e.max_var()),
            });
        }
    }
    rules.sort_by_key(|(i, _, _)| *i);
    let network = BooleanNetwork::from_fn(n, |x| {
        rules
            .iter()
            .fold(0, |acc, (i, _, e)| acc | (e.eval(x) as u32) << (i - 1))
    })?;
    Ok(NetworkDocument {
        source: Source::Expression,
        network,
        name,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::Configuration;

    fn image(doc: &NetworkDocument, s: &str) -> String {
        let x: Configuration = s.parse().unwrap();
        doc.network.apply(x).unwrap().to_string()
    }

    #[test]
    fn or_network() {
        let doc = parse_expression_network("x1, x1 | x2\nx2, x2").unwrap();
        assert_eq!(image(&doc, "00"), "00");
        assert_eq!(image(&doc, "01"), "11");
        assert_eq!(image(&doc, "10"), "10");
        assert_eq!(image(&doc, "11"), "11");
    }

    #[test]
    fn negation_network() {
        let doc = parse_expression_network("x1, !x1").unwrap();
        assert_eq!(doc.network, BooleanNetwork::negation(1).unwrap());
    }

    #[test]
    fn syntax_error_at_end_of_line() {
        let err = parse_expression_network("x1, x2 &").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 1,
                column: 9,
                message: "unexpected end of line".into()
            }
        );
    }

    #[test]
    fn precedence() {
        // ! > & > ^ > |
        let e = parse_expression("1 | 1 ^ 1 & 0", 1).unwrap();
        assert!(e.eval(0));
        let e = parse_expression("1 ^ 1 | 1", 1).unwrap();
        assert!(e.eval(0));
        let e = parse_expression("!0 & 0", 1).unwrap();
        assert!(!e.eval(0));
        let e = parse_expression("1 ^ 1 & 0", 1).unwrap();
        assert!(e.eval(0));
    }

    #[test]
    fn undefined_and_missing() {
        assert!(matches!(
            parse_expression_network("x1, x3\nx2, x1").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(parse_expression_network("x2, x1").is_err());
        assert!(parse_expression_network("x1, x1\nx1, 0").is_err());
        assert!(parse_expression_network("x1, (x1").is_err());
    }
}
