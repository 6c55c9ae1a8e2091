//! Fixed-width bit vectors over the point indices of a configuration.
//!
//! A `PointSet` is the carrier for hyperplanes, subspaces and subgraph
//! vertex sets. The width is part of the value: operations on sets of
//! different widths are rejected.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// A subset of the points of a configuration, as a fixed-width bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    width: usize,
    words: Vec<u64>,
}

impl PointSet {
    /// The empty set over `width` points.
    pub fn empty(width: usize) -> Self {
        let words = vec![0u64; width.div_ceil(WORD_BITS)];
        PointSet { width, words }
    }

    /// The full set over `width` points.
    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for i in 0..width {
            s.insert(i as u32);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(width: usize, indices: I) -> Self {
        let mut s = Self::empty(width);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Reconstructs a set from a `u64` mask; only valid for widths up to 64.
    pub fn from_mask(width: usize, mask: u64) -> Self {
        assert!(width <= 64, "mask constructor requires width <= 64");
        let mut s = Self::empty(width);
        if width > 0 {
            s.words[0] = mask & Self::tail_mask(width);
        }
        s
    }

    fn tail_mask(width: usize) -> u64 {
        let rem = width % WORD_BITS;
        if rem == 0 {
            u64::MAX
        } else {
            (1u64 << rem) - 1
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, i: u32) -> bool {
        let i = i as usize;
        debug_assert!(i < self.width);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: u32) {
        let i = i as usize;
        assert!(i < self.width, "point {i} out of range {}", self.width);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: u32) {
        let i = i as usize;
        assert!(i < self.width);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.width
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.width as u32).filter(move |&i| self.contains(i))
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        if let Some(last) = out.words.last_mut() {
            *last &= Self::tail_mask(self.width);
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        PointSet {
            width: self.width,
            words,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        PointSet {
            width: self.width,
            words,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.width, other.width);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// `self ⋔ other`: the complement of the symmetric difference. Both
    /// operands and the result live over the same implicit ambient set.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        if self.width != other.width {
            return Err(Error::WidthMismatch(self.width, other.width));
        }
        let mut words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| !(a ^ b))
            .collect();
        if let Some(last) = words.last_mut() {
            *last &= Self::tail_mask(self.width);
        }
        Ok(PointSet {
            width: self.width,
            words,
        })
    }

    /// The `u64` mask of a narrow set; panics for widths above 64.
    pub fn mask(&self) -> u64 {
        assert!(self.width <= 64);
        self.words.first().copied().unwrap_or(0)
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the bit sequence `b0 b1 b2 ...` with `0 < 1`:
/// at the first differing index, the set without that point is smaller.
impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.width, other.width, "comparing sets of unequal width");
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if a >> bit & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meet_rejects_width_mismatch() {
        let a = PointSet::empty(5);
        let b = PointSet::empty(6);
        assert!(matches!(a.meet(&b), Err(Error::WidthMismatch(5, 6))));
    }

    #[test]
    fn meet_is_complement_of_symmetric_difference() {
        let a = PointSet::from_indices(7, [0, 1, 4]);
        let b = PointSet::from_indices(7, [1, 2, 6]);
        let m = a.meet(&b).unwrap();
        let expected = PointSet::from_indices(7, [1, 3, 5]);
        assert_eq!(m, expected);
    }

    #[test]
    fn lexicographic_order_prefers_absent_low_bits() {
        let empty = PointSet::empty(4);
        let zero = PointSet::from_indices(4, [0]);
        let one = PointSet::from_indices(4, [1]);
        let zero_one = PointSet::from_indices(4, [0, 1]);
        assert!(empty < zero);
        assert!(one < zero);
        assert!(zero < zero_one);
    }

    #[test]
    fn complement_respects_width() {
        let a = PointSet::from_indices(65, [0, 64]);
        let c = a.complement();
        assert_eq!(c.len(), 63);
        assert!(!c.contains(0));
        assert!(!c.contains(64));
        assert!(c.contains(63));
    }
}
