//! Fixed-width vertex subsets.
//!
//! Vertices are 1-based, matching the variable indexing `x_1..x_n`. A set is a
//! 128-bit mask, so every structure in this crate is limited to
//! [`MAX_VERTICES`] vertices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 128;

/// A subset of `{1, ..., MAX_VERTICES}`.
///
/// Ordering is lexicographic on the sorted element list, so `{1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u128 << (v - 1))
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    /// `{a, ..., b}`; empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> Self {
        if a > b {
            return Self::EMPTY;
        }
        VertexSet(Self::full(b).0 & !Self::full(a - 1).0)
    }

    pub fn try_from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Result<Self> {
        let mut s = Self::EMPTY;
        for v in vs {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: MAX_VERTICES,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << (v - 1));
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << (v - 1))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << (v - 1)))
    }

    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    /// Complement inside `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_superset(self, o: Self) -> bool {
        o.is_subset(self)
    }

    pub fn intersects(self, o: Self) -> bool {
        self.0 & o.0 != 0
    }

    /// Largest vertex, or 0 for the empty set.
    pub fn max(self) -> usize {
        128 - self.0.leading_zeros() as usize
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Shift every vertex up by `k`.
    pub fn shifted(self, k: usize) -> Self {
        VertexSet(self.0 << k)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    universe: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            Some((cur.wrapping_sub(self.universe)) & self.universe)
        };
        Some(VertexSet(cur))
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        VertexSet::try_from_vertices(vs).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building a set from a literal list of vertices.
#[macro_export]
macro_rules! vset {
    ($($v:expr),* $(,)?) => {
        $crate::VertexSet::from_iter([$($v as usize),*])
    };
}

/// Drop every set that strictly contains another, remove duplicates and sort.
pub fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.len(), s.bits()));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Drop every set strictly contained in another, remove duplicates and sort.
pub fn maximalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.len()), s.bits()));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
pub(crate) fn is_antichain(sets: &[VertexSet]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset(*b))
    })
}
