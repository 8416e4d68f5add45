//! Collections of subcubes: pointwise intersections, the realisation map,
//! the `λ` and `μ` operators and the four structural recognisers.

use crate::cube::{check_dimension, check_same, full_mask, submasks, Configuration, Subcube};
use crate::error::{Error, Result};
use crate::network::BooleanNetwork;
use crate::trapspaces::MAX_ENUMERATION_DIMENSION;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// A duplicate-free set of subcubes of `B^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubcubeCollection {
    n: u8,
    members: BTreeSet<Subcube>,
}

impl SubcubeCollection {
    pub fn new(n: usize, members: impl IntoIterator<Item = Subcube>) -> Result<Self> {
        check_dimension(n)?;
        let mut set = BTreeSet::new();
        for m in members {
            check_same(n, m.dimension())?;
            set.insert(m);
        }
        Ok(Self {
            n: n as u8,
            members: set,
        })
    }

    pub(crate) fn from_raw(n: usize, members: impl IntoIterator<Item = Subcube>) -> Self {
        Self {
            n: n as u8,
            members: members.into_iter().collect(),
        }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// Parses one subcube per line in star notation; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut members = Vec::new();
        let mut n = None;
        for (k, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let cube: Subcube = line.parse().map_err(|e: Error| Error::Parse {
                line: k + 1,
                message: e.to_string(),
            })?;
            match n {
                None => n = Some(cube.dimension()),
                Some(d) if d != cube.dimension() => {
                    return Err(Error::Parse {
                        line: k + 1,
                        message: format!("expected width {d}, found {}", cube.dimension()),
                    })
                }
                _ => {}
            }
            members.push(cube);
        }
        Self::new(n.ok_or(Error::EmptyInput)?, members)
    }

    pub fn dimension(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, cube: &Subcube) -> bool {
        self.members.contains(cube)
    }

    pub fn insert(&mut self, cube: Subcube) -> Result<bool> {
        check_same(self.dimension(), cube.dimension())?;
        Ok(self.members.insert(cube))
    }

    /// Members in increasing (dimension, free, base) order.
    pub fn iter(&self) -> impl Iterator<Item = &Subcube> {
        self.members.iter()
    }

    /// Union of the members as a point bitmap.
    pub(crate) fn content(&self) -> Vec<bool> {
        let mut seen = vec![false; 1 << self.n];
        for m in &self.members {
            for x in m.member_bits() {
                seen[x as usize] = true;
            }
        }
        seen
    }

    /// `𝒜(x)` as a free mask for every `x`, `[n]` where nothing contains `x`.
    pub(crate) fn pointwise_free(&self) -> Vec<u32> {
        let mut free = vec![full_mask(self.dimension()); 1 << self.n];
        for m in &self.members {
            for x in m.member_bits() {
                free[x as usize] &= m.free_bits();
            }
        }
        free
    }
}

impl fmt::Display for SubcubeCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.members {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SubcubeCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter().map(|m| m.to_string())).finish()
    }
}

impl<'a> IntoIterator for &'a SubcubeCollection {
    type Item = &'a Subcube;
    type IntoIter = std::collections::btree_set::Iter<'a, Subcube>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// `𝒜(x)`: intersection of the members containing `x`, or `B^n` if none does.
pub fn collection_at(a: &SubcubeCollection, x: Configuration) -> Result<Subcube> {
    check_same(a.dimension(), x.dimension())?;
    let n = a.dimension();
    let free = a
        .iter()
        .filter(|m| m.contains_bits(x.bits()))
        .fold(full_mask(n), |acc, m| acc & m.free_bits());
    Ok(Subcube::from_raw(n, free, x.bits()))
}

/// `F(𝒜)(x) = 𝒜(x) − x`.
pub fn realize(a: &SubcubeCollection) -> BooleanNetwork {
    let n = a.dimension();
    let free = a.pointwise_free();
    BooleanNetwork::from_raw_fn(n, |x| x ^ free[x as usize])
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

/// Free masks of the members containing each point, reduced to the minimal ones.
fn minimal_frees_per_point(a: &SubcubeCollection) -> Vec<Vec<u32>> {
    let mut per_point: Vec<Vec<u32>> = vec![Vec::new(); 1 << a.n];
    for m in a.iter() {
        for x in m.member_bits() {
            per_point[x as usize].push(m.free_bits());
        }
    }
    for frees in &mut per_point {
        let all = std::mem::take(frees);
        *frees = all
            .iter()
            .copied()
            .filter(|&f| !all.iter().any(|&g| g != f && g & !f == 0))
            .collect();
    }
    per_point
}

/// `λ(𝒜)`: every subcube that is a union of members.
///
/// A subcube `C` qualifies iff each of its points lies in some member
/// contained in `C`.
pub fn lambda_closure(a: &SubcubeCollection) -> Result<SubcubeCollection> {
    let n = a.dimension();
    check_enumeration(n, "lambda_closure")?;
    let frees = minimal_frees_per_point(a);
    let mut out = Vec::new();
    for free in 0..1u32 << n {
        for base in submasks(full_mask(n) & !free) {
            let c = Subcube::from_raw(n, free, base);
            let covered = c
                .member_bits()
                .all(|x| frees[x as usize].iter().any(|&f| f & !free == 0));
            if covered {
                out.push(c);
            }
        }
    }
    Ok(SubcubeCollection::from_raw(n, out))
}

/// `μ(𝒜) = { 𝒜(x) : x ∈ B^n }`.
pub fn mu_reduction(a: &SubcubeCollection) -> SubcubeCollection {
    let n = a.dimension();
    let free = a.pointwise_free();
    SubcubeCollection::from_raw(
        n,
        (0..1u32 << n).map(|x| Subcube::from_raw(n, free[x as usize], x)),
    )
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CollectionFlags {
    pub pre_principal: bool,
    pub pre_ideal: bool,
    pub min_ideal: bool,
    pub convex: bool,
}

/// Whether `cube` is the union of the members of `a` that it contains.
fn is_union_of_inner(a: &SubcubeCollection, cube: &Subcube, strict: bool) -> bool {
    let mut covered = vec![false; cube.size()];
    let mut count = 0;
    let positions = |x: u32| -> usize {
        // index of x among the members of cube, by compressing its free bits
        let mut idx = 0;
        let mut k = 0;
        let mut rest = cube.free_bits();
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if x & bit != 0 {
                idx |= 1 << k;
            }
            k += 1;
            rest &= rest - 1;
        }
        idx
    };
    for m in a.iter() {
        if !m.is_subset_raw(cube) || (strict && m == cube) {
            continue;
        }
        for x in m.member_bits() {
            let i = positions(x);
            if !covered[i] {
                covered[i] = true;
                count += 1;
            }
        }
    }
    count == cube.size()
}

fn pre_principal(a: &SubcubeCollection) -> bool {
    if a.content().iter().any(|&c| !c) {
        return false;
    }
    let members: Vec<&Subcube> = a.iter().collect();
    for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            if let Some(meet) = x.intersection_raw(y) {
                if !is_union_of_inner(a, &meet, false) {
                    return false;
                }
            }
        }
    }
    members.iter().all(|m| !is_union_of_inner(a, m, true))
}

fn pre_ideal(a: &SubcubeCollection) -> Result<bool> {
    let n = a.dimension();
    if !a.contains(&Subcube::from_raw(n, full_mask(n), 0)) {
        return Ok(false);
    }
    let members: Vec<&Subcube> = a.iter().collect();
    for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            if let Some(meet) = x.intersection_raw(y) {
                if !a.contains(&meet) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(lambda_closure(a)? == *a)
}

fn min_ideal(a: &SubcubeCollection) -> bool {
    let members: Vec<&Subcube> = a.iter().collect();
    members.iter().enumerate().all(|(i, x)| {
        members[i + 1..]
            .iter()
            .all(|y| x.intersection_raw(y).is_none())
    })
}

fn convex(a: &SubcubeCollection) -> bool {
    let n = a.dimension();
    for q in a.iter() {
        for r in a.iter() {
            if q == r || !q.is_subset_raw(r) {
                continue;
            }
            let extra = r.free_bits() & !q.free_bits();
            for add in submasks(extra) {
                let free = q.free_bits() | add;
                let s = Subcube::from_raw(n, free, q.base_bits());
                if !a.contains(&s) {
                    return false;
                }
            }
        }
    }
    true
}

/// Evaluates each recogniser from its own definition.
pub fn classify_collection(a: &SubcubeCollection) -> Result<CollectionFlags> {
    check_enumeration(a.dimension(), "classify_collection")?;
    Ok(CollectionFlags {
        pre_principal: pre_principal(a),
        pre_ideal: pre_ideal(a)?,
        min_ideal: min_ideal(a),
        convex: convex(a),
    })
}
