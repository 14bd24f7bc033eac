//! Radon numbers.
//!
//! Sets without a Radon partition are closed under taking subsets, so the
//! search grows them one element at a time (each set is reached from its
//! prefix without its largest element) and stops at the first empty level.

use crate::bitset::bits;
use crate::error::{Error, Result};
use crate::set_system::SetSystem;
use crate::Budget;

pub(crate) struct WordHulls {
    members: Vec<u64>,
    ground: u64,
}

impl WordHulls {
    pub(crate) fn new(f: &SetSystem) -> Result<Self> {
        if f.ground_size() > 64 {
            return Err(Error::TooLarge(format!(
                "ground set of size {} exceeds the 64-element limit of point-subset search",
                f.ground_size()
            )));
        }
        let distinct = SetSystem::from_bitsets(f.ground_size(), f.distinct_members())?;
        Ok(WordHulls {
            members: distinct.member_words().expect("ground fits in a word"),
            ground: if f.ground_size() == 64 { u64::MAX } else { (1 << f.ground_size()) - 1 },
        })
    }

    #[inline]
    pub(crate) fn hull(&self, p: u64) -> u64 {
        self.members.iter().filter(|&&a| p & !a == 0).fold(self.ground, |acc, &a| acc & a)
    }

    pub(crate) fn ground_size(&self) -> usize {
        self.ground.count_ones() as usize
    }

    /// Whether `s` splits into two nonempty parts with intersecting hulls.
    pub(crate) fn has_radon_partition(&self, s: u64) -> bool {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        // P1 always holds the lowest element; P2 = s \ P1 must be nonempty
        let mut sub = rest;
        loop {
            let p1 = low | sub;
            if p1 != s && self.hull(p1) & self.hull(s ^ p1) != 0 {
                return true;
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & rest;
        }
    }
}

/// Smallest `r` such that every `r`-point subset of the ground set has a
/// Radon partition. At most `ground_size + 1`.
pub fn radon(f: &SetSystem, budget: &Budget) -> Result<u64> {
    let hulls = WordHulls::new(f)?;
    let g = hulls.ground_size();
    let mut level: Vec<u64> = (0..g).map(|x| 1 << x).collect();
    let mut best = 1u64;
    loop {
        let mut next = Vec::new();
        for &s in &level {
            let top = 63 - s.leading_zeros() as usize;
            for y in top + 1..g {
                budget.tick().map_err(|e| e.with_lower_bound(best + 1))?;
                let t = s | 1 << y;
                if !hulls.has_radon_partition(t) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            return Ok(best + 1);
        }
        best += 1;
        level = next;
    }
}

/// A largest point set with no Radon partition, as a sorted element list.
pub fn radon_witness(f: &SetSystem, budget: &Budget) -> Result<Vec<usize>> {
    let hulls = WordHulls::new(f)?;
    let g = hulls.ground_size();
    let mut level: Vec<u64> = (0..g).map(|x| 1 << x).collect();
    loop {
        let mut next = Vec::new();
        for &s in &level {
            let top = 63 - s.leading_zeros() as usize;
            for y in top + 1..g {
                budget.tick()?;
                let t = s | 1 << y;
                if !hulls.has_radon_partition(t) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            return Ok(bits(level[0]).collect());
        }
        level = next;
    }
}
