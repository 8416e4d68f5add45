//! Boolean networks as image tables, subset updates, update words and the
//! lattice order on networks.

use crate::cube::{check_dimension, check_same, full_mask, Configuration, Mask, Subcube};
use crate::error::{Error, Result};
use std::fmt;

/// A map `f : B^n -> B^n` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanNetwork {
    n: u8,
    image: Vec<u32>,
}

/// Which lattice operation [`BooleanNetwork::lattice_combine`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeOp {
    Join,
    Meet,
}

impl BooleanNetwork {
    /// Builds a network from raw image words, one per configuration.
    pub fn from_table(n: usize, image: Vec<u32>) -> Result<Self> {
        check_dimension(n)?;
        if image.len() != 1 << n {
            return Err(Error::TableLength {
                expected: 1 << n,
                found: image.len(),
            });
        }
        let mask = full_mask(n);
        if let Some(&bad) = image.iter().find(|&&v| v & !mask != 0) {
            return Err(Error::ValueOutOfRange { value: bad, n });
        }
        Ok(Self { n: n as u8, image })
    }

    pub fn from_fn(n: usize, f: impl Fn(u32) -> u32) -> Result<Self> {
        check_dimension(n)?;
        Self::from_table(n, (0..1u32 << n).map(f).collect())
    }

    /// Total constructor for internal use where the invariants hold by construction.
    pub(crate) fn from_raw_fn(n: usize, f: impl Fn(u32) -> u32) -> Self {
        let image: Vec<u32> = (0..1u32 << n).map(f).collect();
        debug_assert!(image.iter().all(|&v| v & !full_mask(n) == 0));
        Self { n: n as u8, image }
    }

    /// The identity network, bottom of the lattice.
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, |x| x)
    }

    /// The negation network `x -> ¬x`, top of the lattice.
    pub fn negation(n: usize) -> Result<Self> {
        let m = full_mask(n);
        Self::from_fn(n, |x| !x & m)
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.n as usize
    }

    /// Number of configurations, `2^n`.
    #[inline]
    pub fn size(&self) -> usize {
        self.image.len()
    }

    /// The raw image table, indexed by configuration word.
    pub fn table(&self) -> &[u32] {
        &self.image
    }

    #[inline]
    pub(crate) fn at(&self, x: u32) -> u32 {
        self.image[x as usize]
    }

    /// `Δ(x, f(x))` as a raw word.
    #[inline]
    pub(crate) fn delta_at(&self, x: u32) -> u32 {
        self.image[x as usize] ^ x
    }

    pub fn apply(&self, x: Configuration) -> Result<Configuration> {
        check_same(self.dimension(), x.dimension())?;
        Ok(Configuration::from_raw(self.dimension(), self.at(x.bits())))
    }

    /// The interval `[x, f(x)]`.
    pub fn interval(&self, x: Configuration) -> Result<Subcube> {
        check_same(self.dimension(), x.dimension())?;
        Ok(self.interval_raw(x.bits()))
    }

    #[inline]
    pub(crate) fn interval_raw(&self, x: u32) -> Subcube {
        Subcube::from_raw(self.dimension(), self.delta_at(x), x)
    }

    pub fn configurations(&self) -> impl Iterator<Item = Configuration> {
        let n = self.dimension();
        (0..1u32 << n).map(move |x| Configuration::from_raw(n, x))
    }

    pub fn fixed_points(&self) -> Vec<Configuration> {
        let n = self.dimension();
        (0..self.size() as u32)
            .filter(|&x| self.at(x) == x)
            .map(|x| Configuration::from_raw(n, x))
            .collect()
    }

    pub(crate) fn is_fixed(&self, x: u32) -> bool {
        self.at(x) == x
    }

    /// `f^(S)`: coordinates in `S` take their image value, the rest keep theirs.
    pub fn update(&self, s: Mask) -> Result<Self> {
        check_same(self.dimension(), s.dimension())?;
        Ok(self.update_raw(s.bits()))
    }

    pub(crate) fn update_raw(&self, s: u32) -> Self {
        Self {
            n: self.n,
            image: self
                .image
                .iter()
                .enumerate()
                .map(|(x, &fx)| (fx & s) | (x as u32 & !s))
                .collect(),
        }
    }

    /// Applies the updates of `word` from first to last.
    pub fn compose_word(&self, word: &UpdateWord) -> Result<Self> {
        check_same(self.dimension(), word.dimension())?;
        let steps: Vec<u32> = word.steps.iter().map(|m| m.bits()).collect();
        Ok(self.compose_word_raw(&steps))
    }

    pub(crate) fn compose_word_raw(&self, steps: &[u32]) -> Self {
        Self::from_raw_fn(self.dimension(), |x| {
            steps
                .iter()
                .fold(x, |y, &s| (self.at(y) & s) | (y & !s))
        })
    }

    /// `g ∘ self`: first `self`, then `g`.
    pub fn then(&self, g: &Self) -> Result<Self> {
        check_same(self.dimension(), g.dimension())?;
        Ok(self.then_raw(g))
    }

    pub(crate) fn then_raw(&self, g: &Self) -> Self {
        Self {
            n: self.n,
            image: self.image.iter().map(|&y| g.at(y)).collect(),
        }
    }

    /// The iterated power `f^k`; `f^0` is the identity.
    pub fn power(&self, k: usize) -> Self {
        let mut result = Self::from_raw_fn(self.dimension(), |x| x);
        for _ in 0..k {
            result = result.then_raw(self);
        }
        result
    }

    /// `f ⊑ g`: `Δ(x, f(x)) ⊆ Δ(x, g(x))` for every `x`.
    pub fn order_leq(&self, g: &Self) -> Result<bool> {
        check_same(self.dimension(), g.dimension())?;
        Ok(self.leq_raw(g))
    }

    pub(crate) fn leq_raw(&self, g: &Self) -> bool {
        (0..self.size() as u32).all(|x| self.delta_at(x) & !g.delta_at(x) == 0)
    }

    /// Least upper bound (join) or greatest lower bound (meet) under `⊑`.
    pub fn lattice_combine(&self, g: &Self, op: LatticeOp) -> Result<Self> {
        check_same(self.dimension(), g.dimension())?;
        Ok(Self::from_raw_fn(self.dimension(), |x| {
            let d = match op {
                LatticeOp::Join => self.delta_at(x) | g.delta_at(x),
                LatticeOp::Meet => self.delta_at(x) & g.delta_at(x),
            };
            x ^ d
        }))
    }

    pub fn join(&self, g: &Self) -> Result<Self> {
        self.lattice_combine(g, LatticeOp::Join)
    }

    pub fn meet(&self, g: &Self) -> Result<Self> {
        self.lattice_combine(g, LatticeOp::Meet)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size() as u32).all(|x| self.is_fixed(x))
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.size()];
        for &y in &self.image {
            if std::mem::replace(&mut seen[y as usize], true) {
                return false;
            }
        }
        true
    }

    /// `f^2 = id`.
    pub fn is_involutive(&self) -> bool {
        (0..self.size() as u32).all(|x| self.at(self.at(x)) == x)
    }

    /// `f^2 = f`.
    pub fn is_idempotent(&self) -> bool {
        self.image.iter().all(|&y| self.at(y) == y)
    }
}

impl fmt::Debug for BooleanNetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dimension();
        write!(f, "BooleanNetwork(n={n}; ")?;
        for (x, &y) in self.image.iter().enumerate() {
            if x > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "{}->{}",
                Configuration::from_raw(n, x as u32),
                Configuration::from_raw(n, y)
            )?;
        }
        f.write_str(")")
    }
}

/// An ordered sequence of coordinate subsets `(S_1, ..., S_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpdateWord {
    n: u8,
    steps: Vec<Mask>,
}

impl UpdateWord {
    pub fn new(n: usize, steps: Vec<Mask>) -> Result<Self> {
        check_dimension(n)?;
        for s in &steps {
            check_same(n, s.dimension())?;
        }
        Ok(Self { n: n as u8, steps })
    }

    pub fn dimension(&self) -> usize {
        self.n as usize
    }

    pub fn steps(&self) -> &[Mask] {
        &self.steps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::f_ex3;

    fn c(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    fn m(n: usize, coords: &[usize]) -> Mask {
        Mask::from_coordinates(n, coords).unwrap()
    }

    #[test]
    fn update_examples() {
        let f = f_ex3();
        assert_eq!(f.update(m(3, &[1])).unwrap().apply(c("000")).unwrap(), c("100"));
        assert!(f.update(Mask::empty(3).unwrap()).unwrap().is_identity());
        assert_eq!(f.update(Mask::full(3).unwrap()).unwrap(), f);
        let neg = BooleanNetwork::negation(2).unwrap();
        assert_eq!(neg.update(m(2, &[2])).unwrap().apply(c("00")).unwrap(), c("01"));
        assert!(f.update(m(2, &[1])).is_err());
    }

    #[test]
    fn compose_word_examples() {
        let f = f_ex3();
        let w = UpdateWord::new(3, vec![m(3, &[1]), m(3, &[2])]).unwrap();
        assert_eq!(f.compose_word(&w).unwrap().apply(c("000")).unwrap(), c("100"));
        assert!(f.compose_word(&UpdateWord::new(3, vec![]).unwrap()).unwrap().is_identity());
        let neg = BooleanNetwork::negation(3).unwrap();
        let w = UpdateWord::new(3, vec![m(3, &[1]), m(3, &[1])]).unwrap();
        assert!(neg.compose_word(&w).unwrap().is_identity());
    }

    #[test]
    fn lattice_examples() {
        let f = f_ex3();
        let id = BooleanNetwork::identity(3).unwrap();
        let neg = BooleanNetwork::negation(3).unwrap();
        assert!(id.order_leq(&f).unwrap());
        assert!(f.order_leq(&neg).unwrap());
        assert!(!neg.order_leq(&f).unwrap());
        assert_eq!(id.join(&neg).unwrap(), neg);
        assert_eq!(f.meet(&id).unwrap(), id);
        assert_eq!(f.join(&f).unwrap(), f);
        assert_eq!(f.join(&id).unwrap(), f);
        assert_eq!(f.meet(&neg).unwrap(), f);
    }

    #[test]
    fn class_primitives() {
        let neg = BooleanNetwork::negation(2).unwrap();
        assert!(neg.is_bijective() && neg.is_involutive() && !neg.is_idempotent());
        let id = BooleanNetwork::identity(2).unwrap();
        assert!(id.is_bijective() && id.is_involutive() && id.is_idempotent());
        assert_eq!(f_ex3().fixed_points(), vec![c("100"), c("110"), c("101")]);
        assert_eq!(f_ex3().power(0), BooleanNetwork::identity(3).unwrap());
    }

    #[test]
    fn table_validation() {
        assert!(BooleanNetwork::from_table(2, vec![0, 1, 2]).is_err());
        assert!(BooleanNetwork::from_table(2, vec![0, 1, 2, 4]).is_err());
    }
}
