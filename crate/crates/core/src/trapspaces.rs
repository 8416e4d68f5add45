//! Principal, minimal and complete trapspace computation, the trapping
//! closure and graph, and the min-trapping extension.

use crate::collections::SubcubeCollection;
use crate::cube::{check_same, full_mask, submasks, Configuration, Subcube};
use crate::dynamics::{build_graph, GraphKind, HypercubeGraph};
use crate::error::{Error, Result};
use crate::network::BooleanNetwork;
use rayon::prelude::*;

/// Largest dimension for the `3^n` subcube sweep.
pub const MAX_ENUMERATION_DIMENSION: usize = 13;

/// Free mask of `T_f(x)`, growing the span only from newly added members.
///
/// Stops early and returns `cap` once the free mask reaches `cap`; pass the
/// full mask to compute the trapspace outright.
pub(crate) fn principal_free(f: &BooleanNetwork, x: u32, cap: u32) -> u32 {
    let mut free = 0u32;
    let mut fresh = 0u32;
    let mut acc = f.delta_at(x);
    loop {
        if fresh != 0 {
            // members x ^ (a | b), a ⊆ old free, b a non-empty subset of fresh
            for b in submasks(fresh).skip(1) {
                for a in submasks(free) {
                    acc |= f.at(x ^ a ^ b) ^ x;
                }
            }
            free |= fresh;
        }
        fresh = acc & !free;
        if fresh == 0 || (free | fresh) & cap == cap {
            return if fresh == 0 { free } else { cap };
        }
    }
}

/// `T_f(x)`, the least trapspace containing `x`.
pub fn principal_trapspace(f: &BooleanNetwork, x: Configuration) -> Result<Subcube> {
    check_same(f.dimension(), x.dimension())?;
    Ok(principal_raw(f, x.bits()))
}

pub(crate) fn principal_raw(f: &BooleanNetwork, x: u32) -> Subcube {
    let free = principal_free(f, x, full_mask(f.dimension()));
    Subcube::from_raw(f.dimension(), free, x)
}

/// All principal trapspaces, indexed by configuration.
pub fn principal_table(f: &BooleanNetwork) -> Vec<Subcube> {
    (0..f.size() as u32)
        .into_par_iter()
        .map(|x| principal_raw(f, x))
        .collect()
}

/// `f(X) ⊆ X`.
pub fn is_trapspace(f: &BooleanNetwork, cube: &Subcube) -> Result<bool> {
    check_same(f.dimension(), cube.dimension())?;
    Ok(is_trapspace_raw(f, cube))
}

pub(crate) fn is_trapspace_raw(f: &BooleanNetwork, cube: &Subcube) -> bool {
    let fixed = !cube.free_bits();
    cube.member_bits().all(|x| f.delta_at(x) & fixed == 0)
}

fn check_enumeration(n: usize, operation: &'static str) -> Result<()> {
    if n > MAX_ENUMERATION_DIMENSION {
        return Err(Error::DimensionTooLarge {
            operation,
            limit: MAX_ENUMERATION_DIMENSION,
            n,
        });
    }
    Ok(())
}

/// `T(f)`: every subcube `X` with `f(X) ⊆ X`.
///
/// One pass over the `3^n` subcubes in ternary order; the union of the
/// deltas over a subcube is the union over its two halves along the lowest
/// free coordinate, both of which come earlier in that order.
pub fn enumerate_trapspaces(f: &BooleanNetwork) -> Result<SubcubeCollection> {
    let n = f.dimension();
    check_enumeration(n, "enumerate_trapspaces")?;
    let mut pow3 = vec![1usize; n + 1];
    for i in 1..=n {
        pow3[i] = pow3[i - 1] * 3;
    }
    let total = pow3[n];
    let mut union = vec![0u32; total];
    let mut digits = vec![0u8; n];
    let (mut free, mut base) = (0u32, 0u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let u = match (0..n).find(|&i| digits[i] == 2) {
            None => f.delta_at(base),
            Some(i) => union[idx - 2 * pow3[i]] | union[idx - pow3[i]],
        };
        union[idx] = u;
        if u & !free == 0 {
            out.push(Subcube::from_raw(n, free, base));
        }
        // ternary odometer: 0 -> 1 -> 2 (free) -> carry
        for i in 0..n {
            let bit = 1u32 << i;
            match digits[i] {
                0 => {
                    digits[i] = 1;
                    base |= bit;
                    break;
                }
                1 => {
                    digits[i] = 2;
                    base &= !bit;
                    free |= bit;
                    break;
                }
                _ => {
                    digits[i] = 0;
                    free &= !bit;
                }
            }
        }
    }
    SubcubeCollection::new(n, out)
}

/// `MT(f)` and `M(f)`.
///
/// Descends from each unvisited point through strictly smaller principal
/// trapspaces until every member of the current one has the same principal
/// trapspace; such a principal trapspace is minimal. Never sweeps `3^n`.
pub fn minimal_trapspaces(f: &BooleanNetwork) -> (SubcubeCollection, Vec<Configuration>) {
    const UNKNOWN: u32 = u32::MAX;
    let n = f.dimension();
    // free mask of T_f(y) once known; a known point is either inside a
    // recorded minimal trapspace or has a non-minimal principal trapspace
    let mut memo = vec![UNKNOWN; f.size()];
    let mut minimal = Vec::new();
    for x in 0..f.size() as u32 {
        if memo[x as usize] != UNKNOWN {
            continue;
        }
        let mut t = principal_raw(f, x);
        memo[x as usize] = t.free_bits();
        'descend: loop {
            let cap = t.free_bits();
            for y in t.member_bits() {
                let fy = match memo[y as usize] {
                    UNKNOWN => {
                        let fy = principal_free(f, y, cap);
                        memo[y as usize] = fy;
                        fy
                    }
                    known => known,
                };
                if fy != cap {
                    t = Subcube::from_raw(n, fy, y);
                    continue 'descend;
                }
            }
            break;
        }
        if !minimal.contains(&t) {
            minimal.push(t);
        }
    }
    let collection = SubcubeCollection::from_raw(n, minimal);
    let mut configs: Vec<Configuration> = collection.iter().flat_map(|c| c.members()).collect();
    configs.sort();
    (collection, configs)
}

/// `f^T(x) = T_f(x) − x`.
pub fn trapping_closure(f: &BooleanNetwork) -> BooleanNetwork {
    let n = f.dimension();
    let full = full_mask(n);
    let image: Vec<u32> = (0..f.size() as u32)
        .into_par_iter()
        .map(|x| x ^ principal_free(f, x, full))
        .collect();
    BooleanNetwork::from_table(n, image).expect("closure preserves the table shape")
}

/// `TG(f)`: arcs `x -> y` for every `y ∈ T_f(x)`.
pub fn trapping_graph(f: &BooleanNetwork) -> Result<HypercubeGraph> {
    build_graph(&trapping_closure(f), GraphKind::General)
}

/// `f^M`: `T_f(x) − x` on `M(f)`, `¬x` elsewhere.
pub fn min_trapping_extension(f: &BooleanNetwork) -> BooleanNetwork {
    let n = f.dimension();
    let (minimal, _) = minimal_trapspaces(f);
    let full = full_mask(n);
    let mut image: Vec<u32> = (0..f.size() as u32).map(|x| x ^ full).collect();
    for cube in minimal.iter() {
        for x in cube.member_bits() {
            image[x as usize] = x ^ cube.free_bits();
        }
    }
    BooleanNetwork::from_table(n, image).expect("extension preserves the table shape")
}

/// Principal, complete and minimal trapspaces of one network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrapspaceReport {
    /// `T_f(x)` indexed by configuration.
    pub principal: Vec<Subcube>,
    pub all: SubcubeCollection,
    pub minimal: SubcubeCollection,
    pub min_configs: Vec<Configuration>,
}

impl TrapspaceReport {
    pub fn compute(f: &BooleanNetwork) -> Result<Self> {
        let all = enumerate_trapspaces(f)?;
        let (minimal, min_configs) = minimal_trapspaces(f);
        Ok(Self {
            principal: principal_table(f),
            all,
            minimal,
            min_configs,
        })
    }

    /// `PT(f)` as a collection.
    pub fn principal_collection(&self) -> SubcubeCollection {
        let n = self.all.dimension();
        SubcubeCollection::from_raw(n, self.principal.clone())
    }
}

/// `PT(f)`.
pub fn principal_collection(f: &BooleanNetwork) -> SubcubeCollection {
    SubcubeCollection::from_raw(f.dimension(), principal_table(f))
}
