//! Fixed-size bit sets over element ids `0..n`.

use alloc::vec;
use alloc::vec::Vec;

/// Bit set over `0..len` ids, used for element subsets (ideals, unit sets,
/// annihilators). Word-level ops keep intersection scans cheap on rings of
/// order a few thousand.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BitSet {
    len: u32,
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(len: u32) -> Self {
        BitSet {
            len,
            words: vec![0; (len as usize + 63) / 64],
        }
    }

    pub fn full(len: u32) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: u32) {
        self.words[(i / 64) as usize] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: u32) {
        self.words[(i / 64) as usize] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Ids in the set, ascending.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let len = self.len;
        (0..len).filter(move |&i| self.contains(i))
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(len: u32, ids: I) -> Self {
        let mut s = Self::empty(len);
        for i in ids {
            s.insert(i);
        }
        s
    }

    pub fn to_ids(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// True iff the set is exactly `{0}` (the zero ideal, given id 0 = zero).
    pub fn is_zero_singleton(&self) -> bool {
        self.contains(0) && self.count() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = BitSet::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert!(s.contains(64));
        assert!(!s.contains(63));
        assert_eq!(s.count(), 3);
        assert_eq!(s.to_ids(), alloc::vec![0, 64, 129]);
        let t = BitSet::from_ids(130, [64, 70]);
        assert_eq!(s.intersection(&t).to_ids(), alloc::vec![64]);
        assert!(t.is_subset(&BitSet::full(130)));
    }
}
