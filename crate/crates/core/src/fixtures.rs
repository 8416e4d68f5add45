//! Networks shipped with the crate: the running three-dimensional example
//! and the counterexamples attached to the implication diagrams.
//!
//! Labels are `<directory>/<name>`, e.g. `lille/k` or `examples/f_ex3`.

use crate::error::{Error, Result};
use crate::netio::{parse_truth_table, NetworkDocument};
use crate::network::BooleanNetwork;

macro_rules! fixture_table {
    ($($label:literal),* $(,)?) => {
        /// Every shipped fixture as `(label, truth-table text)`.
        pub const FIXTURES: &[(&str, &str)] = &[
            $(($label, include_str!(concat!("../fixtures/", $label, ".tt")))),*
        ];
    };
}

fixture_table!(
    "examples/f_ex3",
    "examples/f_ex3_closure",
    "examples/id",
    "examples/neg",
    "symmetric/a",
    "symmetric/b",
    "marseille/c",
    "marseille/d",
    "triangular/e",
    "triangular/f",
    "triangular/g",
    "triangular/h",
    "triangular/i",
    "triangular/j",
    "lille/k",
    "lille/l",
    "lille/m",
    "lille/n",
    "lille/o",
    "lille/p",
    "lille/q",
    "minimal/min_pair_a",
    "minimal/min_pair_b",
    "minimal/monotonicity_f",
    "minimal/monotonicity_g",
);

/// The parsed fixture document with the given label.
pub fn document(label: &str) -> Result<NetworkDocument> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(l, _)| *l == label)
        .ok_or_else(|| Error::MissingFixture(label.to_string()))?;
    parse_truth_table(text)
}

pub fn named(label: &str) -> Result<BooleanNetwork> {
    Ok(document(label)?.network)
}

/// The three-dimensional running example.
pub fn f_ex3() -> BooleanNetwork {
    named("examples/f_ex3").expect("shipped fixture parses")
}
