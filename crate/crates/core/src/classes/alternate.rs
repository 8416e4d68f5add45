//! Literal evaluation of every condition in the alternate-definition
//! theorems. For a correct implementation each returned vector is constant.

use super::{is_commutative, is_globally_idempotent, upd};
use crate::cube::{full_mask, Subcube};
use crate::dynamics::{build_graph, graph_property, GraphKind, GraphProperty};
use crate::error::{Error, Result};
use crate::generators::{constant_on_arrangements, negation_on_subcubes, Arrangement};
use crate::network::BooleanNetwork;
use crate::trapspaces::{
    enumerate_trapspaces, minimal_trapspaces, principal_raw, principal_table, trapping_closure,
    trapping_graph,
};
use crate::Configuration;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::OnceLock;

/// Largest dimension for the `4^n` sweeps over pairs `(S, T)`.
pub const MAX_SWEEP_DIMENSION: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlternateTheorem {
    Trapping7,
    Commutative3,
    Marseille4,
    Lille4,
    GloballyIdempotent3,
    SinkTerminal5,
}

impl AlternateTheorem {
    pub const ALL: [AlternateTheorem; 6] = [
        AlternateTheorem::Trapping7,
        AlternateTheorem::Commutative3,
        AlternateTheorem::Marseille4,
        AlternateTheorem::Lille4,
        AlternateTheorem::GloballyIdempotent3,
        AlternateTheorem::SinkTerminal5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlternateTheorem::Trapping7 => "trapping7",
            AlternateTheorem::Commutative3 => "commutative3",
            AlternateTheorem::Marseille4 => "marseille4",
            AlternateTheorem::Lille4 => "lille4",
            AlternateTheorem::GloballyIdempotent3 => "globally_idempotent3",
            AlternateTheorem::SinkTerminal5 => "sink_terminal5",
        }
    }
}

/// Evaluates each condition of `theorem` on `f` independently.
pub fn check_alternate_definitions(f: &BooleanNetwork, theorem: AlternateTheorem) -> Result<Vec<bool>> {
    let n = f.dimension();
    if n > MAX_SWEEP_DIMENSION {
        return Err(Error::DimensionTooLarge {
            operation: "check_alternate_definitions",
            limit: MAX_SWEEP_DIMENSION,
            n,
        });
    }
    Ok(match theorem {
        AlternateTheorem::Trapping7 => vec![
            graph_property(&build_graph(f, GraphKind::General)?, GraphProperty::Transitive),
            all_pairs(f, |x, y| f.interval_raw(y).is_subset_raw(&f.interval_raw(x))),
            (0..f.size() as u32).all(|x| f.interval_raw(x) == principal_raw(f, x)),
            *f == trapping_closure(f),
            is_some_closure(f),
            trapping_graph(f)? == build_graph(f, GraphKind::General)?,
            all_st(f, |s, t, x| {
                let lhs = upd(f, upd(f, x, s), t) ^ x;
                let rhs = upd(f, x, s | t) ^ x;
                lhs & !rhs == 0
            }),
        ],
        AlternateTheorem::Commutative3 => vec![
            is_commutative(f),
            all_pairs(f, |x, y| {
                let yfx = span2(n, y, f.at(x));
                let yfy = f.interval_raw(y);
                yfx.is_subset_raw(&yfy) && yfy.is_subset_raw(&f.interval_raw(x))
            }),
            all_st(f, |s, t, x| {
                let st = upd(f, upd(f, x, s), t) ^ x;
                let sym = upd(f, x, s ^ t) ^ x;
                let uni = upd(f, x, s | t) ^ x;
                sym & !st == 0 && st & !uni == 0
            }),
        ],
        AlternateTheorem::Marseille4 => vec![
            is_commutative(f) && f.is_bijective(),
            is_negation_on_subcubes(f),
            all_pairs(f, |x, y| f.interval_raw(y) == f.interval_raw(x)),
            all_st(f, |s, t, x| upd(f, x, s ^ t) == upd(f, upd(f, x, s), t)),
        ],
        AlternateTheorem::Lille4 => vec![
            is_commutative(f) && f.is_idempotent(),
            is_constant_on_arrangements(f),
            all_pairs(f, |x, y| f.interval_raw(y) == span2(n, y, f.at(x))),
            all_st(f, |s, t, x| upd(f, upd(f, x, s), t) == upd(f, x, s | t)),
        ],
        AlternateTheorem::GloballyIdempotent3 => vec![
            is_globally_idempotent(f)?,
            all_pairs(f, |x, y| f.interval_raw(y).is_subset_raw(&span2(n, y, f.at(x)))),
            all_st(f, |s, t, x| one_sided_idempotent(f, s, t, x) && {
                let st = upd(f, upd(f, x, s), t) ^ x;
                st & !(upd(f, x, s | t) ^ x) == 0
            }),
        ],
        AlternateTheorem::SinkTerminal5 => {
            let principal = principal_table(f);
            let (_, m) = minimal_trapspaces(f);
            vec![
                graph_property(&trapping_graph(f)?, GraphProperty::SinkTerminal),
                (0..f.size() as u32).filter(|&x| !f.is_fixed(x)).all(|x| {
                    let tx = principal[x as usize];
                    tx.member_bits().any(|y| {
                        let ty = principal[y as usize];
                        ty != tx && ty.is_subset_raw(&tx)
                    })
                }),
                m == f.fixed_points(),
                principal
                    .iter()
                    .all(|t| t.member_bits().any(|x| f.is_fixed(x))),
                enumerate_trapspaces(f)?
                    .iter()
                    .all(|t| t.member_bits().any(|x| f.is_fixed(x))),
            ]
        }
    })
}

/// `f^(S∩T)(x)` is below `f^(S,T)(x)` in the delta order. On its own this
/// does not force idempotence; the theorem needs the upper bound `f^(S∪T)`
/// as well.
fn one_sided_idempotent(f: &BooleanNetwork, s: u32, t: u32, x: u32) -> bool {
    let meet = upd(f, x, s & t) ^ x;
    let st = upd(f, upd(f, x, s), t) ^ x;
    meet & !st == 0
}

fn span2(n: usize, a: u32, b: u32) -> Subcube {
    Subcube::from_raw(n, a ^ b, a)
}

/// `pred(x, y)` for every `x` and every `y ∈ [x, f(x)]`.
fn all_pairs(f: &BooleanNetwork, pred: impl Fn(u32, u32) -> bool) -> bool {
    (0..f.size() as u32).all(|x| f.interval_raw(x).member_bits().all(|y| pred(x, y)))
}

/// `pred(S, T, x)` for all subsets `S`, `T` and configurations `x`.
fn all_st(f: &BooleanNetwork, pred: impl Fn(u32, u32, u32) -> bool) -> bool {
    let full = full_mask(f.dimension());
    (0..=full).all(|s| (0..=full).all(|t| (0..f.size() as u32).all(|x| pred(s, t, x))))
}

/// Every trapping closure of a network on `B^n`, for `n <= 2`.
fn closure_image(n: usize) -> &'static HashSet<Vec<u32>> {
    static IMAGES: [OnceLock<HashSet<Vec<u32>>>; 2] = [OnceLock::new(), OnceLock::new()];
    IMAGES[n - 1].get_or_init(|| {
        let size = 1usize << n;
        let values = 1u64 << n;
        let total = values.pow(size as u32);
        (0..total)
            .map(|code| {
                let table: Vec<u32> = (0..size)
                    .map(|x| ((code / values.pow(x as u32)) % values) as u32)
                    .collect();
                let g = BooleanNetwork::from_table(n, table).expect("valid table");
                trapping_closure(&g).table().to_vec()
            })
            .collect()
    })
}

/// Whether `f = g^T` for some `g`. Exhaustive over all `g` for `n <= 2`;
/// above that, only witnesses `g ⊑ f` built from `f` itself are tried
/// (any witness must lie below `f`).
fn is_some_closure(f: &BooleanNetwork) -> bool {
    let n = f.dimension();
    if n <= 2 {
        return closure_image(n).contains(f.table());
    }
    let lowest_flip = BooleanNetwork::from_raw_fn(n, |x| {
        let d = f.delta_at(x);
        x ^ (d & d.wrapping_neg())
    });
    [f.clone(), lowest_flip]
        .iter()
        .any(|g| trapping_closure(g) == *f)
}

/// Reads the intervals as a candidate partition into subcubes and compares
/// `f` with the negation on those subcubes.
fn is_negation_on_subcubes(f: &BooleanNetwork) -> bool {
    let n = f.dimension();
    let cubes: BTreeSet<Subcube> = (0..f.size() as u32)
        .map(|x| f.interval_raw(x))
        .filter(|c| c.rank() > 0)
        .collect();
    let cubes: Vec<Subcube> = cubes.into_iter().collect();
    match negation_on_subcubes(n, &cubes) {
        Ok(g) => g == *f,
        Err(_) => false,
    }
}

/// Groups configurations by image `t`, forms the arrangement
/// `{[x, t] : f(x) = t}` for each, and compares `f` with the constant on
/// those arrangements.
fn is_constant_on_arrangements(f: &BooleanNetwork) -> bool {
    let n = f.dimension();
    let mut groups: BTreeMap<u32, Vec<Subcube>> = BTreeMap::new();
    for x in 0..f.size() as u32 {
        groups.entry(f.at(x)).or_default().push(span2(n, x, f.at(x)));
    }
    let mut parts = Vec::new();
    for (t, members) in groups {
        let Ok(a) = Arrangement::new(members) else {
            return false;
        };
        parts.push((a, Configuration::from_raw(n, t)));
    }
    match constant_on_arrangements(n, &parts) {
        Ok(g) => g == *f,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::f_ex3;

    #[test]
    fn examples() {
        let neg = BooleanNetwork::negation(3).unwrap();
        assert_eq!(check_alternate_definitions(&neg, AlternateTheorem::Trapping7).unwrap(), vec![true; 7]);
        assert_eq!(check_alternate_definitions(&f_ex3(), AlternateTheorem::Trapping7).unwrap(), vec![false; 7]);
        let id = BooleanNetwork::identity(3).unwrap();
        assert_eq!(check_alternate_definitions(&id, AlternateTheorem::Lille4).unwrap(), vec![true; 4]);
        assert!(check_alternate_definitions(&BooleanNetwork::identity(9).unwrap(), AlternateTheorem::Lille4).is_err());
    }

    #[test]
    fn lower_bound_alone_is_too_weak() {
        // f(x) = (x1 x2, 0): not idempotent, yet f^(S∩T) ⊑ f^(S,T) everywhere
        let f = BooleanNetwork::from_table(2, vec![0, 0, 0, 1]).unwrap();
        assert!(all_st(&f, |s, t, x| one_sided_idempotent(&f, s, t, x)));
        let v = check_alternate_definitions(&f, AlternateTheorem::GloballyIdempotent3).unwrap();
        assert_eq!(v, vec![false; 3]);
    }

    #[test]
    fn closure_image_sizes() {
        // every network on B^1 is trapping
        assert_eq!(closure_image(1).len(), 4);
    }
}
