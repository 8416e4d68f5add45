//! Configurations, coordinate masks and subcubes of the hypercube `B^n`.
//!
//! Coordinate `x_i` (1-based, as written in binary strings) lives in bit `i - 1`
//! of the machine word. Binary strings are written `x_1 x_2 ... x_n` from left to
//! right, so `"110"` has `x_1 = 1`, `x_2 = 1`, `x_3 = 0`.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Largest supported dimension.
pub const MAX_DIMENSION: usize = 20;

pub(crate) fn check_dimension(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIMENSION {
        Err(Error::InvalidDimension(n))
    } else {
        Ok(())
    }
}

pub(crate) fn check_same(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        Err(Error::DimensionMismatch { expected, found })
    } else {
        Ok(())
    }
}

/// All-ones mask over `n` coordinates.
#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates the submasks of `mask` in increasing numeric order, starting at 0.
pub(crate) fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == mask {
            None
        } else {
            Some(((current | !mask).wrapping_add(1)) & mask)
        };
        Some(current)
    })
}

fn format_bits(f: &mut fmt::Formatter<'_>, n: usize, bits: u32) -> fmt::Result {
    for i in 0..n {
        f.write_str(if bits >> i & 1 == 1 { "1" } else { "0" })?;
    }
    Ok(())
}

fn parse_bits(s: &str) -> Result<(usize, u32)> {
    let n = s.len();
    check_dimension(n)?;
    let mut bits = 0;
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => bits |= 1 << i,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unexpected character `{other}` in binary string `{s}`"
                )))
            }
        }
    }
    Ok((n, bits))
}

/// A point of `B^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    n: u8,
    bits: u32,
}

impl Configuration {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_dimension(n)?;
        if bits & !full_mask(n) != 0 {
            return Err(Error::ValueOutOfRange { value: bits, n });
        }
        Ok(Self::from_raw(n, bits))
    }

    #[inline]
    pub(crate) fn from_raw(n: usize, bits: u32) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        Self { n: n as u8, bits }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Value of the coordinate with 0-based index `index` (i.e. `x_{index+1}`).
    pub fn get(&self, index: usize) -> bool {
        self.bits >> index & 1 == 1
    }

    /// Componentwise negation `¬x`.
    pub fn negate(&self) -> Self {
        Self::from_raw(self.dimension(), !self.bits & full_mask(self.dimension()))
    }

    /// Flips every coordinate in `mask`.
    pub fn flip(&self, mask: Mask) -> Result<Self> {
        check_same(self.dimension(), mask.dimension())?;
        Ok(Self::from_raw(self.dimension(), self.bits ^ mask.bits()))
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        Ok(delta_mask(*self, *other)?.len())
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_bits(f, self.dimension(), self.bits)
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({self})")
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, bits) = parse_bits(s)?;
        Ok(Self::from_raw(n, bits))
    }
}

/// A subset of the coordinates `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mask {
    n: u8,
    bits: u32,
}

impl Mask {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_dimension(n)?;
        if bits & !full_mask(n) != 0 {
            return Err(Error::ValueOutOfRange { value: bits, n });
        }
        Ok(Self::from_raw(n, bits))
    }

    #[inline]
    pub(crate) fn from_raw(n: usize, bits: u32) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        Self { n: n as u8, bits }
    }

    /// Builds a mask from 1-based coordinate indices.
    pub fn from_coordinates(n: usize, coordinates: &[usize]) -> Result<Self> {
        check_dimension(n)?;
        let mut bits = 0;
        for &i in coordinates {
            if i == 0 || i > n {
                return Err(Error::InvalidParameter(format!(
                    "coordinate {i} outside 1..={n}"
                )));
            }
            bits |= 1 << (i - 1);
        }
        Ok(Self::from_raw(n, bits))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn full(n: usize) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self::from_raw(n, full_mask(n)))
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Whether the 1-based coordinate `i` belongs to the mask.
    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.dimension() && self.bits >> (i - 1) & 1 == 1
    }

    /// 1-based coordinates in increasing order.
    pub fn coordinates(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.dimension()).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        check_same(self.dimension(), other.dimension())?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        check_same(self.dimension(), other.dimension())?;
        Ok(Self::from_raw(self.dimension(), self.bits | other.bits))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        check_same(self.dimension(), other.dimension())?;
        Ok(Self::from_raw(self.dimension(), self.bits & other.bits))
    }

    pub fn symmetric_difference(&self, other: &Self) -> Result<Self> {
        check_same(self.dimension(), other.dimension())?;
        Ok(Self::from_raw(self.dimension(), self.bits ^ other.bits))
    }

    pub fn complement(&self) -> Self {
        Self::from_raw(self.dimension(), !self.bits & full_mask(self.dimension()))
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.coordinates().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mask({self})")
    }
}

/// The set of coordinates on which `x` and `y` differ.
pub fn delta_mask(x: Configuration, y: Configuration) -> Result<Mask> {
    check_same(x.dimension(), y.dimension())?;
    Ok(Mask::from_raw(x.dimension(), x.bits ^ y.bits))
}

/// A subcube `{ x : x agrees with base outside free }` in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subcube {
    n: u8,
    free: u32,
    base: u32,
}

impl Subcube {
    pub fn new(free: Mask, base: Configuration) -> Result<Self> {
        check_same(free.dimension(), base.dimension())?;
        Ok(Self::from_raw(free.dimension(), free.bits(), base.bits()))
    }

    /// Canonicalizing constructor on raw words; clears the free bits of `base`.
    #[inline]
    pub(crate) fn from_raw(n: usize, free: u32, base: u32) -> Self {
        debug_assert!((free | base) & !full_mask(n) == 0);
        Self {
            n: n as u8,
            free,
            base: base & !free,
        }
    }

    /// The whole hypercube `B^n`.
    pub fn full(n: usize) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self::from_raw(n, full_mask(n), 0))
    }

    /// The singleton `{x}`.
    pub fn point(x: Configuration) -> Self {
        Self::from_raw(x.dimension(), 0, x.bits())
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.n as usize
    }

    pub fn free(&self) -> Mask {
        Mask::from_raw(self.dimension(), self.free)
    }

    #[inline]
    pub(crate) fn free_bits(&self) -> u32 {
        self.free
    }

    #[inline]
    pub(crate) fn base_bits(&self) -> u32 {
        self.base
    }

    /// The member with every free coordinate set to 0.
    pub fn base(&self) -> Configuration {
        Configuration::from_raw(self.dimension(), self.base)
    }

    /// Number of free coordinates.
    pub fn rank(&self) -> usize {
        self.free.count_ones() as usize
    }

    /// Number of members, `2^rank`.
    pub fn size(&self) -> usize {
        1usize << self.rank()
    }

    pub fn is_full(&self) -> bool {
        self.free == full_mask(self.dimension())
    }

    #[inline]
    pub(crate) fn contains_bits(&self, x: u32) -> bool {
        (x & !self.free) == self.base
    }

    pub fn contains(&self, x: Configuration) -> Result<bool> {
        check_same(self.dimension(), x.dimension())?;
        Ok(self.contains_bits(x.bits()))
    }

    /// Members as raw words in increasing order.
    pub(crate) fn member_bits(&self) -> impl Iterator<Item = u32> {
        let base = self.base;
        submasks(self.free).map(move |s| base | s)
    }

    /// Members in increasing order.
    pub fn members(&self) -> impl Iterator<Item = Configuration> {
        let n = self.dimension();
        self.member_bits().map(move |b| Configuration::from_raw(n, b))
    }

    #[inline]
    pub(crate) fn is_subset_raw(&self, other: &Self) -> bool {
        self.free & !other.free == 0 && (self.base ^ other.base) & !other.free == 0
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        check_same(self.dimension(), other.dimension())?;
        Ok(self.is_subset_raw(other))
    }

    #[inline]
    pub(crate) fn intersection_raw(&self, other: &Self) -> Option<Self> {
        if (self.base ^ other.base) & !self.free & !other.free != 0 {
            return None;
        }
        let free = self.free & other.free;
        Some(Self::from_raw(
            self.dimension(),
            free,
            (self.base | other.base) & !free,
        ))
    }

    /// Intersection, `None` when the two subcubes are disjoint.
    pub fn intersection(&self, other: &Self) -> Result<Option<Self>> {
        check_same(self.dimension(), other.dimension())?;
        Ok(self.intersection_raw(other))
    }

    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        Ok(self.intersection(other)?.is_none())
    }

    /// The opposite `X - x` of a member `x`: the unique `y` with `[x, y] = X`.
    pub fn opposite(&self, x: Configuration) -> Result<Configuration> {
        opposite(*self, x)
    }

    /// Star notation, e.g. `1*0` for `{x : x_1 = 1, x_3 = 0}`.
    pub fn to_star_string(&self) -> String {
        (0..self.dimension())
            .map(|i| {
                if self.free >> i & 1 == 1 {
                    '*'
                } else if self.base >> i & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

impl Ord for Subcube {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.free.count_ones(), self.free, self.base).cmp(&(
            other.n,
            other.free.count_ones(),
            other.free,
            other.base,
        ))
    }
}

impl PartialOrd for Subcube {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_star_string())
    }
}

impl fmt::Debug for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subcube({self})")
    }
}

impl FromStr for Subcube {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.chars().count();
        check_dimension(n)?;
        let (mut free, mut base) = (0u32, 0u32);
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => base |= 1 << i,
                '*' => free |= 1 << i,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unexpected character `{other}` in subcube `{s}`"
                    )))
                }
            }
        }
        Ok(Self::from_raw(n, free, base))
    }
}

/// The smallest subcube `[A]` containing every point of `points`.
pub fn span<I>(points: I) -> Result<Subcube>
where
    I: IntoIterator<Item = Configuration>,
{
    let mut iter = points.into_iter();
    let first = iter.next().ok_or(Error::EmptyInput)?;
    let mut free = 0;
    for p in iter {
        check_same(first.dimension(), p.dimension())?;
        free |= first.bits() ^ p.bits();
    }
    Ok(Subcube::from_raw(first.dimension(), free, first.bits()))
}

/// The opposite of `x` in `cube`.
pub fn opposite(cube: Subcube, x: Configuration) -> Result<Configuration> {
    if !cube.contains(x)? {
        return Err(Error::NotMember { point: x, cube });
    }
    Ok(Configuration::from_raw(x.dimension(), x.bits() ^ cube.free))
}
