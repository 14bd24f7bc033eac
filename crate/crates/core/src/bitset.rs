//! Fixed-width bit vectors.
//!
//! Sets up to 128 elements stay inline; larger ones spill to the heap.

use std::fmt;

use smallvec::{smallvec, SmallVec};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    len: usize,
    words: SmallVec<[u64; 2]>,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitSet {
    pub fn empty(len: usize) -> Self {
        BitSet { len, words: smallvec![0; word_count(len)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet { len, words: smallvec![u64::MAX; word_count(len)] };
        s.trim();
        s
    }

    /// Low `len` bits of `word`. Panics if `len > 64`.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= 64, "from_word supports at most 64 bits");
        let mut s = BitSet::empty(len);
        if len > 0 {
            s.words[0] = word;
            s.trim();
        }
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Universe size.
    pub fn capacity(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    /// The single backing word, when the universe fits in 64 bits.
    pub fn as_word(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterate the set bits of a word, lowest first.
pub(crate) fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

/// Iterate the `k`-element submasks of `mask` in increasing numeric order.
pub(crate) fn submasks_of_size(mask: u64, k: usize) -> impl Iterator<Item = u64> {
    let positions: Vec<usize> = bits(mask).collect();
    let n = positions.len();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.iter().fold(0u64, |m, &i| m | 1 << positions[i]);
        // advance to the next combination in colex order of positions
        let mut i = 0;
        loop {
            if i == k {
                done = true;
                break;
            }
            let limit = if i + 1 < k { idx[i + 1] } else { n };
            if idx[i] + 1 < limit {
                idx[i] += 1;
                for (j, slot) in idx.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_high_bits() {
        let s = BitSet::full(70);
        assert_eq!(s.count(), 70);
        assert!(!s.contains(70));
        assert_eq!(BitSet::from_word(3, 0xff).count(), 3);
    }

    #[test]
    fn subset_and_intersection() {
        let a = BitSet::from_indices(100, [1, 65, 99]);
        let b = BitSet::from_indices(100, [1, 2, 65, 99]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![1, 2, 65, 99]);
    }

    #[test]
    fn submask_enumeration() {
        let got: Vec<u64> = submasks_of_size(0b10110, 2).collect();
        assert_eq!(got, vec![0b00110, 0b10010, 0b10100]);
        assert_eq!(submasks_of_size(0b111, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(submasks_of_size(0b1, 2).count(), 0);
        assert_eq!(submasks_of_size(0b111111, 3).count(), 20);
    }
}
