//! Subsets of a dense ground set `0..size`.

use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

/// A subset of the ground set `0..ground_size()`, stored as a bitset.
///
/// The bitset length *is* the ground set size; rank oracles reject sets built
/// over a different ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(ground: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(ground),
        }
    }

    pub fn full(ground: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(ground);
        bits.insert_range(..);
        ElementSet { bits }
    }

    /// Builds a set from an index list. Out-of-range and repeated indices are
    /// contract violations.
    pub fn from_indices<I: IntoIterator<Item = usize>>(ground: usize, indices: I) -> Result<Self> {
        let mut set = Self::empty(ground);
        for e in indices {
            if e >= ground {
                return Err(Error::ElementOutOfRange { element: e, ground });
            }
            if set.bits.put(e) {
                return Err(Error::DuplicateElement(e));
            }
        }
        Ok(set)
    }

    /// Low `ground` bits of `mask`; handy for exhaustive enumeration.
    pub fn from_mask(ground: usize, mask: u64) -> Self {
        debug_assert!(ground <= 64);
        let mut set = Self::empty(ground);
        for e in 0..ground {
            if mask >> e & 1 == 1 {
                set.bits.insert(e);
            }
        }
        set
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.bits.contains(e)
    }

    /// Panics if `e` is outside the ground set.
    #[inline]
    pub fn insert(&mut self, e: usize) -> bool {
        !self.bits.put(e)
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        self.bits.remove(e);
    }

    pub fn with(&self, e: usize) -> Self {
        let mut out = self.clone();
        out.insert(e);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ElementSet { bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSet { bits }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub(crate) fn check_ground(&self, expected: usize) -> Result<()> {
        if self.ground_size() == expected {
            Ok(())
        } else {
            Err(Error::GroundMismatch {
                expected,
                found: self.ground_size(),
            })
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
