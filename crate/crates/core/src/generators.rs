//! Structured network populations: uniform random networks, arrangement
//! networks and their disjoint unions, negations on subcubes, constants on
//! arrangements and a trapping network with a long transient.

use crate::classes::is_commutative;
use crate::cube::{check_dimension, check_same, full_mask, Configuration, Mask, Subcube};
use crate::error::{Error, Result};
use crate::network::BooleanNetwork;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Attempts per part before `random_commutative` gives up on that part.
pub const RETRY_CAP: usize = 100;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random network; the same seed gives the same table.
pub fn random_network(n: usize, seed: u64) -> Result<BooleanNetwork> {
    check_dimension(n)?;
    let mut r = rng(seed);
    let mask = full_mask(n);
    let table = (0..1usize << n).map(|_| r.gen::<u32>() & mask).collect();
    BooleanNetwork::from_table(n, table)
}

/// A family of subcubes with non-empty common intersection `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: u8,
    members: Vec<Subcube>,
    core: Subcube,
    content: Vec<u32>,
    free_dims: Mask,
}

impl Arrangement {
    pub fn new(members: Vec<Subcube>) -> Result<Self> {
        let first = *members.first().ok_or(Error::EmptyInput)?;
        let n = first.dimension();
        let mut core = first;
        for m in &members[1..] {
            check_same(n, m.dimension())?;
            core = core.intersection_raw(m).ok_or(Error::EmptyArrangement)?;
        }
        let mut inside = vec![false; 1 << n];
        for m in &members {
            for x in m.member_bits() {
                inside[x as usize] = true;
            }
        }
        let content: Vec<u32> = (0..1u32 << n).filter(|&x| inside[x as usize]).collect();
        let free_dims = (0..n)
            .filter(|&i| content.iter().all(|&x| inside[(x ^ 1 << i) as usize]))
            .fold(0u32, |acc, i| acc | 1 << i);
        Ok(Self {
            n: n as u8,
            members,
            core,
            content,
            free_dims: Mask::from_raw(n, free_dims),
        })
    }

    pub fn dimension(&self) -> usize {
        self.n as usize
    }

    pub fn members(&self) -> &[Subcube] {
        &self.members
    }

    /// `Y`, the common intersection.
    pub fn core(&self) -> Subcube {
        self.core
    }

    /// The union of the members, in increasing order.
    pub fn content(&self) -> Vec<Configuration> {
        let n = self.dimension();
        self.content.iter().map(|&x| Configuration::from_raw(n, x)).collect()
    }

    pub(crate) fn content_bits(&self) -> &[u32] {
        &self.content
    }

    pub fn free_dims(&self) -> Mask {
        self.free_dims
    }
}

/// What an arrangement network does on one free dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DimBehavior {
    Const0,
    Const1,
    Negate,
}

impl DimBehavior {
    pub const ALL: [DimBehavior; 3] = [DimBehavior::Const0, DimBehavior::Const1, DimBehavior::Negate];

    fn apply(self, bit: bool) -> bool {
        match self {
            DimBehavior::Const0 => false,
            DimBehavior::Const1 => true,
            DimBehavior::Negate => !bit,
        }
    }
}

/// One behaviour per free dimension, keyed by 1-based coordinate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeDimBehavior(pub BTreeMap<usize, DimBehavior>);

impl FreeDimBehavior {
    /// The same behaviour on every free dimension of `a`.
    pub fn uniform(a: &Arrangement, b: DimBehavior) -> Self {
        Self(a.free_dims().coordinates().map(|i| (i, b)).collect())
    }
}

/// Checks the three arrangement-network axioms and commutativity.
fn validate_arrangement_network(a: &Arrangement, f: &BooleanNetwork) -> Result<()> {
    let n = a.dimension();
    let mut inside = vec![false; 1 << n];
    for &x in a.content_bits() {
        inside[x as usize] = true;
    }
    for x in 0..1u32 << n {
        if !inside[x as usize] && f.at(x) != x {
            return Err(Error::ValidationFailed(format!(
                "{} lies outside the content but is not fixed",
                Configuration::from_raw(n, x)
            )));
        }
    }
    for &x in a.content_bits() {
        if !a.core().contains_bits(f.at(x)) {
            return Err(Error::ValidationFailed(format!(
                "image of {} leaves the core {}",
                Configuration::from_raw(n, x),
                a.core()
            )));
        }
    }
    for i in 0..n {
        let mut seen = [None::<u32>; 2];
        for &x in a.content_bits() {
            let side = (x >> i & 1) as usize;
            let v = f.at(x) >> i & 1;
            match seen[side] {
                None => seen[side] = Some(v),
                Some(w) if w != v => {
                    return Err(Error::ValidationFailed(format!(
                        "coordinate {} is not uniform along the content",
                        i + 1
                    )))
                }
                _ => {}
            }
        }
    }
    if !is_commutative(f) {
        return Err(Error::ValidationFailed("result is not commutative".into()));
    }
    Ok(())
}

/// The arrangement network of `a` with behaviour `b` on its free dimensions.
///
/// Coordinates fixed by the core take the core's value; free dimensions
/// follow `b`. The result is checked against the axioms before returning.
pub fn arrangement_network(a: &Arrangement, b: &FreeDimBehavior) -> Result<BooleanNetwork> {
    let n = a.dimension();
    let keys: Vec<usize> = b.0.keys().copied().collect();
    let free: Vec<usize> = a.free_dims().coordinates().collect();
    if keys != free {
        return Err(Error::InvalidParameter(format!(
            "behaviours given for {keys:?}, free dimensions are {free:?}"
        )));
    }
    let core = a.core();
    let mut image: Vec<u32> = (0..1u32 << n).collect();
    for &x in a.content_bits() {
        let mut y = core.base_bits();
        for (&i, &beh) in &b.0 {
            let bit = 1u32 << (i - 1);
            y &= !bit;
            if beh.apply(x & bit != 0) {
                y |= bit;
            }
        }
        image[x as usize] = y;
    }
    let f = BooleanNetwork::from_table(n, image)?;
    validate_arrangement_network(a, &f)?;
    Ok(f)
}

fn check_pairwise_disjoint(cubes: &[Subcube]) -> Result<()> {
    for (i, x) in cubes.iter().enumerate() {
        for y in &cubes[i + 1..] {
            check_same(x.dimension(), y.dimension())?;
            if x.intersection_raw(y).is_some() {
                return Err(Error::Overlap(*x, *y));
            }
        }
    }
    Ok(())
}

/// `f(x) = X − x` on each of the disjoint cubes `X`, identity elsewhere.
pub fn negation_on_subcubes(n: usize, cubes: &[Subcube]) -> Result<BooleanNetwork> {
    check_dimension(n)?;
    for c in cubes {
        check_same(n, c.dimension())?;
    }
    check_pairwise_disjoint(cubes)?;
    let mut image: Vec<u32> = (0..1u32 << n).collect();
    for c in cubes {
        for x in c.member_bits() {
            image[x as usize] = x ^ c.free_bits();
        }
    }
    BooleanNetwork::from_table(n, image)
}

/// Constant `target` on the content of each arrangement, identity elsewhere.
pub fn constant_on_arrangements(
    n: usize,
    parts: &[(Arrangement, Configuration)],
) -> Result<BooleanNetwork> {
    check_dimension(n)?;
    let mut owner = vec![None::<usize>; 1 << n];
    let mut image: Vec<u32> = (0..1u32 << n).collect();
    for (k, (a, target)) in parts.iter().enumerate() {
        check_same(n, a.dimension())?;
        check_same(n, target.dimension())?;
        if !a.core().contains_bits(target.bits()) {
            return Err(Error::TargetOutsideCore {
                target: *target,
                core: a.core(),
            });
        }
        for &x in a.content_bits() {
            if let Some(other) = owner[x as usize] {
                let mine = a.members().iter().find(|m| m.contains_bits(x));
                let theirs = parts[other].0.members().iter().find(|m| m.contains_bits(x));
                return Err(Error::Overlap(*theirs.expect("owner"), *mine.expect("content")));
            }
            owner[x as usize] = Some(k);
            image[x as usize] = target.bits();
        }
    }
    BooleanNetwork::from_table(n, image)
}

/// Glues networks whose supports `{x : f(x) != x}` are pairwise disjoint.
pub fn union_disjoint(parts: &[BooleanNetwork]) -> Result<BooleanNetwork> {
    let n = parts.first().ok_or(Error::EmptyInput)?.dimension();
    let mut owner = vec![None::<usize>; 1 << n];
    let mut image: Vec<u32> = (0..1u32 << n).collect();
    for (k, f) in parts.iter().enumerate() {
        check_same(n, f.dimension())?;
        for x in 0..1u32 << n {
            if f.is_fixed(x) {
                continue;
            }
            if let Some(other) = owner[x as usize] {
                return Err(Error::SupportOverlap(other, k));
            }
            owner[x as usize] = Some(k);
            image[x as usize] = f.at(x);
        }
    }
    BooleanNetwork::from_table(n, image)
}

/// `t^i` of the long-transient construction: `t^i_j = 1` for `j < i`,
/// `(i + j) mod 2` otherwise.
fn transient_point(n: usize, i: usize) -> u32 {
    (1..=n)
        .filter(|&j| j < i || (i + j) % 2 == 1)
        .fold(0, |acc, j| acc | 1 << (j - 1))
}

/// Trapping network with transient `n` and period 2: `t^1 -> ... -> t^(n+1)`
/// plus the swap `0...00 <-> 0...01`.
pub fn long_transient_trapping(n: usize) -> Result<BooleanNetwork> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "long_transient_trapping needs n >= 3, got {n}"
        )));
    }
    check_dimension(n)?;
    let mut image: Vec<u32> = (0..1u32 << n).collect();
    for i in 1..=n {
        image[transient_point(n, i) as usize] = transient_point(n, i + 1);
    }
    let c2 = 1u32 << (n - 1);
    image[0] = c2;
    image[c2 as usize] = 0;
    BooleanNetwork::from_table(n, image)
}

fn random_subcube(r: &mut ChaCha8Rng, n: usize, max_free: usize) -> Subcube {
    let mut free = 0u32;
    let want = r.gen_range(0..=max_free.min(n));
    while (free.count_ones() as usize) < want {
        free |= 1 << r.gen_range(0..n);
    }
    let base = r.gen::<u32>() & full_mask(n) & !free;
    Subcube::from_raw(n, free, base)
}

/// A random arrangement: a small core and up to three random supersets of it.
fn random_arrangement(r: &mut ChaCha8Rng, n: usize) -> Arrangement {
    let core = random_subcube(r, n, 1);
    let k = r.gen_range(1..=3);
    let members = (0..k)
        .map(|_| {
            let mut extra = 0u32;
            for i in 0..n {
                if r.gen_bool(0.3) {
                    extra |= 1 << i;
                }
            }
            let free = core.free_bits() | (extra & full_mask(n));
            Subcube::from_raw(n, free, core.base_bits())
        })
        .collect();
    Arrangement::new(members).expect("members share the core")
}

fn overlaps(used: &[bool], a: &Arrangement) -> bool {
    a.content_bits().iter().any(|&x| used[x as usize])
}

fn claim(used: &mut [bool], a: &Arrangement) {
    for &x in a.content_bits() {
        used[x as usize] = true;
    }
}

/// A union of up to `parts` random arrangement networks with disjoint contents.
pub fn random_commutative(n: usize, seed: u64, parts: usize) -> Result<BooleanNetwork> {
    check_dimension(n)?;
    if parts == 0 {
        return Err(Error::InvalidParameter("parts must be at least 1".into()));
    }
    let mut r = rng(seed);
    let mut used = vec![false; 1 << n];
    let mut pieces = vec![BooleanNetwork::identity(n)?];
    for _ in 0..parts {
        for _ in 0..RETRY_CAP {
            let a = random_arrangement(&mut r, n);
            if overlaps(&used, &a) {
                continue;
            }
            let core = a.core();
            let behavior = FreeDimBehavior(
                a.free_dims()
                    .coordinates()
                    .map(|i| {
                        let b = if core.free().contains(i) {
                            DimBehavior::ALL[r.gen_range(0..3)]
                        } else if core.base().get(i - 1) {
                            DimBehavior::Const1
                        } else {
                            DimBehavior::Const0
                        };
                        (i, b)
                    })
                    .collect(),
            );
            if let Ok(f) = arrangement_network(&a, &behavior) {
                claim(&mut used, &a);
                pieces.push(f);
                break;
            }
        }
    }
    union_disjoint(&pieces)
}

/// A negation on up to `parts` random disjoint subcubes.
pub fn random_negation(n: usize, seed: u64, parts: usize) -> Result<BooleanNetwork> {
    check_dimension(n)?;
    let mut r = rng(seed);
    let mut cubes: Vec<Subcube> = Vec::new();
    for _ in 0..parts {
        for _ in 0..RETRY_CAP {
            let c = random_subcube(&mut r, n, n);
            if cubes.iter().all(|d| c.intersection_raw(d).is_none()) {
                cubes.push(c);
                break;
            }
        }
    }
    negation_on_subcubes(n, &cubes)
}

/// A constant on up to `parts` random arrangements with disjoint contents.
pub fn random_constant(n: usize, seed: u64, parts: usize) -> Result<BooleanNetwork> {
    check_dimension(n)?;
    let mut r = rng(seed);
    let mut used = vec![false; 1 << n];
    let mut chosen = Vec::new();
    for _ in 0..parts {
        for _ in 0..RETRY_CAP {
            let a = random_arrangement(&mut r, n);
            if overlaps(&used, &a) {
                continue;
            }
            let core = a.core();
            let target = core.base_bits() | (r.gen::<u32>() & core.free_bits());
            claim(&mut used, &a);
            chosen.push((a, Configuration::from_raw(n, target)));
            break;
        }
    }
    constant_on_arrangements(n, &chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::transient_and_period;
    use std::collections::BTreeSet;

    fn cube(s: &str) -> Subcube {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    #[test]
    fn random_is_deterministic_and_covers_n1() {
        assert_eq!(random_network(2, 5).unwrap(), random_network(2, 5).unwrap());
        let seen: BTreeSet<Vec<u32>> = (0..64)
            .map(|s| random_network(1, s).unwrap().table().to_vec())
            .collect();
        assert_eq!(seen.len(), 4);
        assert_eq!(random_network(3, 9).unwrap().size(), 8);
        assert!(random_network(0, 1).is_err());
    }

    #[test]
    fn single_cube_negate_is_negation_on_it() {
        let a = Arrangement::new(vec![cube("1**")]).unwrap();
        let f = arrangement_network(&a, &FreeDimBehavior::uniform(&a, DimBehavior::Negate)).unwrap();
        assert_eq!(f, negation_on_subcubes(3, &[cube("1**")]).unwrap());
        let top = Arrangement::new(vec![cube("*")]).unwrap();
        let f = arrangement_network(&top, &FreeDimBehavior::uniform(&top, DimBehavior::Negate)).unwrap();
        assert_eq!(f, BooleanNetwork::negation(1).unwrap());
    }

    #[test]
    fn crossed_faces_give_three_networks() {
        let a = Arrangement::new(vec![cube("**0"), cube("1**")]).unwrap();
        assert_eq!(a.core(), cube("1*0"));
        assert_eq!(a.free_dims(), Mask::from_coordinates(3, &[2]).unwrap());
        let net = |b| arrangement_network(&a, &FreeDimBehavior::uniform(&a, b)).unwrap();
        let zero = net(DimBehavior::Const0);
        assert_eq!(zero.apply(c("010")).unwrap(), c("100"));
        assert_eq!(zero.apply(c("111")).unwrap(), c("100"));
        let neg = net(DimBehavior::Negate);
        assert_eq!(neg.apply(c("000")).unwrap(), c("110"));
        assert_eq!(neg.apply(c("100")).unwrap(), c("110"));
        let one = net(DimBehavior::Const1);
        assert_eq!(one.apply(c("101")).unwrap(), c("110"));
        assert_eq!(one.apply(c("001")).unwrap(), c("001"));
        let distinct: BTreeSet<_> = [zero, neg, one].iter().map(|f| f.table().to_vec()).collect();
        assert_eq!(distinct.len(), 3);
    }

    #[test]
    fn behaviour_must_match_free_dims() {
        let a = Arrangement::new(vec![cube("**0"), cube("1**")]).unwrap();
        assert!(arrangement_network(&a, &FreeDimBehavior::default()).is_err());
        // the core fixes x_1 = 1 on the free dimension of this arrangement
        let b = Arrangement::new(vec![cube("1*"), cube("**")]).unwrap();
        assert!(matches!(
            arrangement_network(&b, &FreeDimBehavior::uniform(&b, DimBehavior::Const0)),
            Err(Error::ValidationFailed(_))
        ));
    }

    #[test]
    fn negation_examples() {
        assert_eq!(negation_on_subcubes(2, &[cube("**")]).unwrap(), BooleanNetwork::negation(2).unwrap());
        assert!(negation_on_subcubes(2, &[]).unwrap().is_identity());
        assert!(matches!(
            negation_on_subcubes(2, &[cube("0*"), cube("*0")]),
            Err(Error::Overlap(_, _))
        ));
    }

    #[test]
    fn constant_examples() {
        let all = Arrangement::new(vec![cube("***")]).unwrap();
        let f = constant_on_arrangements(3, &[(all.clone(), c("101"))]).unwrap();
        assert!(f.table().iter().all(|&v| v == c("101").bits()));
        assert!(constant_on_arrangements(3, &[]).unwrap().is_identity());
        let a = Arrangement::new(vec![cube("0**"), cube("*0*")]).unwrap();
        assert!(matches!(
            constant_on_arrangements(3, &[(a, c("111"))]),
            Err(Error::TargetOutsideCore { .. })
        ));
    }

    #[test]
    fn union_examples() {
        let f = negation_on_subcubes(2, &[cube("0*")]).unwrap();
        assert_eq!(union_disjoint(std::slice::from_ref(&f)).unwrap(), f);
        assert_eq!(union_disjoint(&[f.clone(), f]), Err(Error::SupportOverlap(0, 1)));
    }

    #[test]
    fn long_transient_points() {
        let pts: Vec<String> = (1..=5)
            .map(|i| Configuration::new(4, transient_point(4, i)).unwrap().to_string())
            .collect();
        assert_eq!(pts, vec!["0101", "1010", "1101", "1110", "1111"]);
        let f = long_transient_trapping(4).unwrap();
        assert_eq!(transient_and_period(&f).unwrap(), (4, 2));
        assert!(long_transient_trapping(2).is_err());
    }

    #[test]
    fn random_commutative_outputs_are_commutative() {
        for seed in 0..50 {
            for n in 2..=5 {
                assert!(is_commutative(&random_commutative(n, seed, 3).unwrap()));
                assert!(is_commutative(&random_negation(n, seed, 3).unwrap()));
                assert!(is_commutative(&random_constant(n, seed, 3).unwrap()));
            }
        }
    }
}
