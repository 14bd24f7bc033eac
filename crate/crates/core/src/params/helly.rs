//! Helly numbers by direct scan, and minimal obstructions.

use crate::bitset::bits;
use crate::error::Result;
use crate::set_system::{Selector, SetSystem};
use crate::Budget;

/// An inclusion-minimal subfamily with empty intersection.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Obstruction {
    pub selector: Selector,
}

impl Obstruction {
    pub fn size(&self) -> usize {
        self.selector.len()
    }
}

pub(crate) fn clique_table(f: &SetSystem, budget: &Budget) -> Result<Vec<bool>> {
    Ok(f.all_meets(budget)?.into_iter().map(|m| !m.is_empty()).collect())
}

/// `wise[mask]`: every `c`-subset of `mask` is a clique (and `mask` itself is
/// a clique when it has at most `c` members).
pub(crate) fn wise_table(clique: &[bool], c: usize, budget: &Budget) -> Result<Vec<bool>> {
    budget.charge(clique.len() as u64)?;
    let mut wise = vec![false; clique.len()];
    for mask in 0..clique.len() {
        wise[mask] = if (mask as u64).count_ones() as usize <= c {
            clique[mask]
        } else {
            bits(mask as u64).all(|i| wise[mask ^ (1 << i)])
        };
    }
    Ok(wise)
}

/// Smallest `h` such that every subfamily whose `h`-subsets all intersect
/// has a common point. The empty family has Helly number 0; every nonempty
/// family has Helly number at least 1.
pub fn helly(f: &SetSystem, budget: &Budget) -> Result<u64> {
    if f.is_empty() {
        return Ok(0);
    }
    let clique = clique_table(f, budget)?;
    for h in 1..f.len() {
        let wise = wise_table(&clique, h, budget)?;
        if wise.iter().zip(&clique).all(|(&w, &c)| !w || c) {
            return Ok(h as u64);
        }
    }
    // every subfamily has at most |F| members, so h = |F| is always enough
    Ok(f.len() as u64)
}

/// All inclusion-minimal non-clique subfamilies, ordered by size then by
/// position mask.
pub fn minimal_obstructions(f: &SetSystem, budget: &Budget) -> Result<Vec<Obstruction>> {
    let clique = clique_table(f, budget)?;
    let mut out: Vec<(u32, u64)> = (1..clique.len() as u64)
        .filter(|&mask| !clique[mask as usize] && bits(mask).all(|i| clique[(mask ^ (1 << i)) as usize]))
        .map(|mask| (mask.count_ones(), mask))
        .collect();
    out.sort_unstable();
    Ok(out.into_iter().map(|(_, mask)| Obstruction { selector: Selector::from_mask(mask) }).collect())
}
