//! k-th partition numbers over multisets.
//!
//! A multiset is "bad" when it cannot be split into `k` nonempty parts whose
//! hulls share a point. Bad multisets are closed under removing copies, so
//! they are grown level by level from the empty multiset, appending elements
//! in non-decreasing order so that each multiset is produced once.
//!
//! Two reductions keep the per-multiset check small:
//! - an element with at least `k` copies can sit in every part, so the
//!   multiset is good;
//! - otherwise an element with `μ` copies may as well occupy `μ` distinct
//!   parts, since hulls only grow when a part gains an element.
//!
//! Parts are unlabeled; new parts are opened in index order.

use crate::bitset::submasks_of_size;
use crate::error::{Error, Result};
use crate::params::radon::WordHulls;
use crate::set_system::SetSystem;
use crate::Budget;

/// `rad^(k)`: the smallest `r` such that every size-`r` multiset over the
/// ground set splits into `k` nonempty parts with a common hull point.
pub fn partition_number(f: &SetSystem, k: usize, budget: &Budget) -> Result<u64> {
    if k < 2 {
        return Err(Error::input("partition number needs k >= 2"));
    }
    if k > 64 {
        return Err(Error::TooLarge(format!("k = {k} exceeds 64 parts")));
    }
    let hulls = WordHulls::new(f)?;
    let g = hulls.ground_size();
    // each level holds (multiplicities, largest element present)
    let mut level: Vec<(Vec<u8>, usize)> = vec![(vec![0; g], 0)];
    let mut best = 0u64;
    loop {
        let mut next = Vec::new();
        for (mult, top) in &level {
            for y in *top..g {
                budget.tick().map_err(|e| e.with_lower_bound(best + 1))?;
                if mult[y] as usize + 1 >= k {
                    continue;
                }
                let mut grown = mult.clone();
                grown[y] += 1;
                let splittable = Splitter::new(&hulls, &grown, k)
                    .run(budget)
                    .map_err(|e| e.with_lower_bound(best + 1))?;
                if !splittable {
                    next.push((grown, y));
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

struct Splitter<'a> {
    hulls: &'a WordHulls,
    elements: Vec<(usize, usize)>,
    k: usize,
    parts: Vec<u64>,
}

impl<'a> Splitter<'a> {
    fn new(hulls: &'a WordHulls, mult: &[u8], k: usize) -> Self {
        let elements =
            mult.iter().enumerate().filter(|(_, &m)| m > 0).map(|(x, &m)| (x, m as usize)).collect();
        Splitter { hulls, elements, k, parts: vec![0; k] }
    }

    fn run(&mut self, budget: &Budget) -> Result<bool> {
        let copies: usize = self.elements.iter().map(|e| e.1).sum();
        if copies < self.k {
            return Ok(false);
        }
        self.assign(0, 0, copies, budget)
    }

    fn assign(&mut self, i: usize, used: usize, remaining: usize, budget: &Budget) -> Result<bool> {
        if i == self.elements.len() {
            if used < self.k {
                return Ok(false);
            }
            let common = self.parts.iter().fold(u64::MAX, |acc, &p| acc & self.hulls.hull(p));
            return Ok(common != 0);
        }
        let (x, mu) = self.elements[i];
        let remaining = remaining - mu;
        let used_mask: u64 = if used == 64 { u64::MAX } else { (1u64 << used) - 1 };
        for fresh in 0..=mu.min(self.k - used) {
            // parts still unopened after this element must be coverable later
            if used + fresh + remaining < self.k {
                continue;
            }
            let reuse = mu - fresh;
            if reuse > used {
                continue;
            }
            for chosen in submasks_of_size(used_mask, reuse) {
                budget.tick()?;
                let mut targets = chosen;
                for j in used..used + fresh {
                    targets |= 1 << j;
                }
                let saved = self.parts.clone();
                for j in crate::bitset::bits(targets) {
                    self.parts[j] |= 1 << x;
                }
                let ok = self.assign(i + 1, used + fresh, remaining, budget)?;
                self.parts = saved;
                if ok {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}
