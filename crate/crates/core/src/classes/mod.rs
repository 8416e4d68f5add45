//! Network classes, alternate-definition checkers, trapspace equivalence and
//! the implication diagrams between classes.

mod alternate;
mod diagrams;

pub use alternate::{check_alternate_definitions, AlternateTheorem, MAX_SWEEP_DIMENSION};
pub use diagrams::{
    counterexample_violations, edge_violations, verify_diagram, Counterexample, DiagramId, DiagramSpec, Edge, Guard, GraphOf, NetworkFacts,
    Property, Violation, ViolationKind,
};

use crate::cube::{check_same, Configuration};
use crate::dynamics::{build_graph, graph_property, GraphKind, GraphProperty};
use crate::error::{Error, Result};
use crate::network::BooleanNetwork;
use crate::trapspaces::{
    enumerate_trapspaces, min_trapping_extension, minimal_trapspaces, principal_collection,
    principal_table, trapping_closure, trapping_graph, MAX_ENUMERATION_DIMENSION,
};
use serde::Serialize;

/// Largest dimension for sweeps over all `2^n` subsets `S`.
pub const MAX_GLOBAL_DIMENSION: usize = 16;

/// `f^(S)(x)` on raw words.
#[inline]
pub(crate) fn upd(f: &BooleanNetwork, x: u32, s: u32) -> u32 {
    x ^ (f.delta_at(x) & s)
}

pub(crate) fn table_bijective(t: &[u32]) -> bool {
    let mut seen = vec![false; t.len()];
    t.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
}

pub(crate) fn table_involutive(t: &[u32]) -> bool {
    t.iter().enumerate().all(|(x, &y)| t[y as usize] == x as u32)
}

pub(crate) fn table_idempotent(t: &[u32]) -> bool {
    t.iter().all(|&y| t[y as usize] == y)
}

/// `f^(i,j) = f^(j,i)` for every pair of coordinates.
pub fn is_commutative(f: &BooleanNetwork) -> bool {
    let n = f.dimension();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let (si, sj) = (1u32 << i, 1u32 << j);
            (0..f.size() as u32).all(|x| upd(f, upd(f, x, si), sj) == upd(f, upd(f, x, sj), si))
        })
    })
}

/// `GA(f)` is transitive.
pub fn is_trapping(f: &BooleanNetwork) -> Result<bool> {
    Ok(graph_property(&build_graph(f, GraphKind::General)?, GraphProperty::Transitive))
}

fn locally(f: &BooleanNetwork, pred: fn(&[u32]) -> bool) -> bool {
    (0..f.dimension()).all(|i| pred(f.update_raw(1 << i).table()))
}

/// Whether `pred` holds for `f^(S)` over every subset, visiting subsets in
/// Gray-code order so each step changes one coordinate of the table.
fn globally(f: &BooleanNetwork, pred: impl Fn(&[u32]) -> bool) -> Result<bool> {
    let n = f.dimension();
    if n > MAX_GLOBAL_DIMENSION {
        return Err(Error::DimensionTooLarge {
            operation: "global subset sweep",
            limit: MAX_GLOBAL_DIMENSION,
            n,
        });
    }
    let mut table: Vec<u32> = (0..f.size() as u32).collect();
    if !pred(&table) {
        return Ok(false);
    }
    for k in 1u32..1 << n {
        let bit = 1u32 << k.trailing_zeros();
        for (x, v) in table.iter_mut().enumerate() {
            *v ^= f.delta_at(x as u32) & bit;
        }
        if !pred(&table) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_globally_bijective(f: &BooleanNetwork) -> Result<bool> {
    globally(f, table_bijective)
}

pub fn is_globally_involutive(f: &BooleanNetwork) -> Result<bool> {
    globally(f, table_involutive)
}

/// `f^(S,S) = f^(S)` for every `S`.
pub fn is_globally_idempotent(f: &BooleanNetwork) -> Result<bool> {
    globally(f, table_idempotent)
}

/// Fixed points inside `[x, f(x)]`, counted up to two.
fn interval_fixed_points(f: &BooleanNetwork, x: u32) -> usize {
    f.interval_raw(x)
        .member_bits()
        .filter(|&y| f.is_fixed(y))
        .take(2)
        .count()
}

pub fn is_interval_fp(f: &BooleanNetwork) -> bool {
    (0..f.size() as u32).all(|x| interval_fixed_points(f, x) >= 1)
}

pub fn is_interval_ufp(f: &BooleanNetwork) -> bool {
    (0..f.size() as u32).all(|x| interval_fixed_points(f, x) == 1)
}

/// Principal trapspaces pairwise distinct.
pub fn is_dpt(f: &BooleanNetwork) -> bool {
    let mut table = principal_table(f);
    let total = table.len();
    table.sort();
    table.dedup();
    table.len() == total
}

/// `A(f)` is sink-terminal: every asynchronous attractor is a fixed point.
pub fn is_fixable(f: &BooleanNetwork) -> Result<bool> {
    Ok(graph_property(
        &build_graph(f, GraphKind::Asynchronous)?,
        GraphProperty::SinkTerminal,
    ))
}

/// Every trapspace contains a fixed point.
pub fn is_trapspace_fp(f: &BooleanNetwork) -> Result<bool> {
    Ok(enumerate_trapspaces(f)?
        .iter()
        .all(|t| t.member_bits().any(|x| f.is_fixed(x))))
}

/// The class flags of one network, each computed from its own definition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub trapping: bool,
    pub commutative: bool,
    pub marseille: bool,
    pub lille: bool,
    pub globally_idempotent: bool,
    pub bijective: bool,
    pub locally_bijective: bool,
    pub globally_bijective: bool,
    pub involutive: bool,
    pub locally_involutive: bool,
    pub globally_involutive: bool,
    pub idempotent: bool,
    pub locally_idempotent: bool,
    pub dynamically_local: bool,
    pub dpt: bool,
    pub fixable: bool,
    pub trapspace_fp: bool,
    pub interval_fp: bool,
    pub interval_ufp: bool,
    pub min_trapping: bool,
}

impl ClassReport {
    /// `(name, value)` pairs in declaration order.
    pub fn entries(&self) -> [(&'static str, bool); 20] {
        [
            ("trapping", self.trapping),
            ("commutative", self.commutative),
            ("marseille", self.marseille),
            ("lille", self.lille),
            ("globally_idempotent", self.globally_idempotent),
            ("bijective", self.bijective),
            ("locally_bijective", self.locally_bijective),
            ("globally_bijective", self.globally_bijective),
            ("involutive", self.involutive),
            ("locally_involutive", self.locally_involutive),
            ("globally_involutive", self.globally_involutive),
            ("idempotent", self.idempotent),
            ("locally_idempotent", self.locally_idempotent),
            ("dynamically_local", self.dynamically_local),
            ("dpt", self.dpt),
            ("fixable", self.fixable),
            ("trapspace_fp", self.trapspace_fp),
            ("interval_fp", self.interval_fp),
            ("interval_ufp", self.interval_ufp),
            ("min_trapping", self.min_trapping),
        ]
    }
}

/// Classifies `f`; limited to `n <= 13` by the trapspace enumeration behind
/// `trapspace_fp`.
pub fn classify_network(f: &BooleanNetwork) -> Result<ClassReport> {
    let n = f.dimension();
    if n > MAX_ENUMERATION_DIMENSION {
        return Err(Error::DimensionTooLarge {
            operation: "classify_network",
            limit: MAX_ENUMERATION_DIMENSION,
            n,
        });
    }
    let commutative = is_commutative(f);
    let bijective = f.is_bijective();
    let idempotent = f.is_idempotent();
    Ok(ClassReport {
        trapping: is_trapping(f)?,
        commutative,
        marseille: commutative && bijective,
        lille: commutative && idempotent,
        globally_idempotent: is_globally_idempotent(f)?,
        bijective,
        locally_bijective: locally(f, table_bijective),
        globally_bijective: is_globally_bijective(f)?,
        involutive: f.is_involutive(),
        locally_involutive: locally(f, table_involutive),
        globally_involutive: is_globally_involutive(f)?,
        idempotent,
        locally_idempotent: locally(f, table_idempotent),
        dynamically_local: f.power(3) == *f,
        dpt: is_dpt(f),
        fixable: is_fixable(f)?,
        trapspace_fp: is_trapspace_fp(f)?,
        interval_fp: is_interval_fp(f),
        interval_ufp: is_interval_ufp(f),
        min_trapping: min_trapping_extension(f) == *f,
    })
}

/// The five conditions for `f` and `g` to be trapspace-equivalent, each
/// evaluated separately.
pub fn trapspace_equivalent(f: &BooleanNetwork, g: &BooleanNetwork) -> Result<Vec<bool>> {
    check_same(f.dimension(), g.dimension())?;
    Ok(vec![
        principal_collection(f) == principal_collection(g),
        enumerate_trapspaces(f)? == enumerate_trapspaces(g)?,
        principal_table(f) == principal_table(g),
        trapping_graph(f)? == trapping_graph(g)?,
        trapping_closure(f) == trapping_closure(g),
    ])
}

/// The four conditions for `f` and `g` to share their minimal trapspaces.
pub fn min_trapspace_equivalent(f: &BooleanNetwork, g: &BooleanNetwork) -> Result<Vec<bool>> {
    check_same(f.dimension(), g.dimension())?;
    let (mt_f, m_f) = minimal_trapspaces(f);
    let (mt_g, m_g) = minimal_trapspaces(g);
    let (pf, pg) = (principal_table(f), principal_table(g));
    let agree = |x: &Configuration| pf[x.bits() as usize] == pg[x.bits() as usize];
    Ok(vec![
        mt_f == mt_g,
        m_f == m_g && m_f.iter().all(agree),
        m_f.iter().chain(m_g.iter()).all(agree),
        min_trapping_extension(f) == min_trapping_extension(g),
    ])
}
