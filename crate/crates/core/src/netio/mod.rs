//! Text formats for networks and DOT export of layered graphs.
//!
//! Truth tables look like
//!
//! ```text
//! # name: f_ex3
//! n=3
//! 000 110
//! 100 100
//! ...
//! ```
//!
//! with one row per configuration in any order. Expression files give one
//! `x<i>, <expr>` line per coordinate.

mod dot;
mod expr;

pub use dot::{export_dot, DEFAULT_PALETTE};
pub use expr::{parse_expression, parse_expression_network, Expr};

use crate::cube::{check_dimension, Configuration};
use crate::error::{Error, Result};
use crate::network::BooleanNetwork;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    TruthTable,
    Expression,
}

/// A parsed network together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkDocument {
    pub source: Source,
    pub network: BooleanNetwork,
    pub name: Option<String>,
}

impl NetworkDocument {
    pub fn new(network: BooleanNetwork) -> Self {
        Self {
            source: Source::TruthTable,
            network,
            name: None,
        }
    }

    pub fn dimension(&self) -> usize {
        self.network.dimension()
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_row_token(token: &str, n: usize, line: usize) -> Result<u32> {
    if token.len() != n {
        return Err(parse_error(
            line,
            format!("ragged row: `{token}` has width {}, expected {n}", token.len()),
        ));
    }
    let mut bits = 0;
    for (i, ch) in token.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => bits |= 1 << i,
            other => return Err(parse_error(line, format!("bad character `{other}`"))),
        }
    }
    Ok(bits)
}

/// Parses the truth-table format. Rows may come in any order but must cover
/// every configuration exactly once.
pub fn parse_truth_table(text: &str) -> Result<NetworkDocument> {
    let mut name = None;
    let mut n: Option<usize> = None;
    let mut image: Vec<Option<u32>> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        last_line = line_no;
        let line = raw.trim_end_matches('\r');
        if let Some(comment) = line.trim_start().strip_prefix('#') {
            if let Some(label) = comment.trim().strip_prefix("name:") {
                name = Some(label.trim().to_string());
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let Some(dim) = n else {
            let value = line
                .trim()
                .strip_prefix("n=")
                .ok_or_else(|| parse_error(line_no, "expected header `n=<k>`"))?;
            let dim: usize = value
                .parse()
                .map_err(|_| parse_error(line_no, format!("bad dimension `{value}`")))?;
            check_dimension(dim).map_err(|e| parse_error(line_no, e.to_string()))?;
            n = Some(dim);
            image = vec![None; 1 << dim];
            continue;
        };
        let mut tokens = line.split(' ');
        let (Some(from), Some(to), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(parse_error(
                line_no,
                "expected `<configuration> <image>` separated by one space",
            ));
        };
        let x = parse_row_token(from, dim, line_no)?;
        let y = parse_row_token(to, dim, line_no)?;
        if image[x as usize].replace(y).is_some() {
            return Err(parse_error(
                line_no,
                format!("duplicate configuration {}", Configuration::from_raw(dim, x)),
            ));
        }
    }
    let dim = n.ok_or_else(|| parse_error(last_line.max(1), "missing header `n=<k>`"))?;
    if let Some(x) = image.iter().position(Option::is_none) {
        return Err(parse_error(
            last_line,
            format!("missing configuration {}", Configuration::from_raw(dim, x as u32)),
        ));
    }
    let table = image.into_iter().map(|v| v.expect("checked above")).collect();
    Ok(NetworkDocument {
        source: Source::TruthTable,
        network: BooleanNetwork::from_table(dim, table)?,
        name,
    })
}

/// Canonical truth table: optional name comment, header, rows in increasing
/// configuration order.
pub fn write_truth_table(doc: &NetworkDocument) -> String {
    let f = &doc.network;
    let n = f.dimension();
    let mut out = String::with_capacity((2 * n + 2) << n);
    if let Some(name) = &doc.name {
        out.push_str("# name: ");
        out.push_str(name);
        out.push('\n');
    }
    out.push_str(&format!("n={n}\n"));
    for x in f.configurations() {
        let y = f.apply(x).expect("same dimension");
        out.push_str(&format!("{x} {y}\n"));
    }
    out
}
