//! Fixed-capacity bit sets used for subgroup membership and relation rows.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A set of indices `0..len` packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Capacity (universe size), not the number of members.
    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// Inserts `i`; returns true if it was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let w = &mut self.words[i / WORD];
        let bit = 1u64 << (i % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / WORD] &= !(1u64 << (i % WORD));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// `self |= other`; returns true if anything changed.
    pub fn union_with(&mut self, other: &BitSet) -> bool {
        let mut changed = false;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            let n = *a | b;
            changed |= n != *a;
            *a = n;
        }
        changed
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl Ord for BitSet {
    /// Lexicographic on the ascending member lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_count() {
        let mut s = BitSet::new(130);
        for i in [0, 3, 64, 127, 129] {
            assert!(s.insert(i));
        }
        assert!(!s.insert(3));
        assert_eq!(s.count(), 5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 64, 127, 129]);
        s.remove(64);
        assert!(!s.contains(64));
    }

    #[test]
    fn lexicographic_order() {
        let a = BitSet::from_indices(8, [0, 5]);
        let b = BitSet::from_indices(8, [1, 2]);
        let c = BitSet::from_indices(8, [0, 5, 6]);
        assert!(a < b);
        assert!(a < c);
    }

    #[test]
    fn subset_and_union() {
        let a = BitSet::from_indices(70, [1, 65]);
        let mut b = BitSet::from_indices(70, [1, 2, 65]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(!b.union_with(&a));
        let c = BitSet::from_indices(70, [69]);
        assert!(b.union_with(&c));
        assert_eq!(b.count(), 4);
    }
}
