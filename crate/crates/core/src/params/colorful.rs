//! Colorful Helly numbers, plain and c-wise.
//!
//! A counterexample for `m` colors is a subfamily together with a surjective
//! `m`-coloring in which every rainbow selection (one member per color) is a
//! clique in the chosen sense while no color class is. Colorings are
//! enumerated as set partitions of the subfamily (colors are interchangeable).
//! Both clique predicates are closed under subfamilies, so a partial rainbow
//! selection that already fails prunes the branch.

use crate::bitset::bits;
use crate::error::{Error, Result};
use crate::params::helly::{clique_table, wise_table};
use crate::set_system::SetSystem;
use crate::Budget;

/// Which clique notion the colorful number uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueMode {
    /// Common intersection (`ch`).
    Plain,
    /// Every `c`-subset intersects (`ch^(c)`); the color count starts at `c`.
    CWise(usize),
}

impl CliqueMode {
    pub fn min_colors(self) -> usize {
        match self {
            CliqueMode::Plain => 1,
            CliqueMode::CWise(c) => c,
        }
    }
}

/// Smallest admissible color count with no counterexample.
pub fn colorful_helly(f: &SetSystem, mode: CliqueMode, budget: &Budget) -> Result<u64> {
    if let CliqueMode::CWise(0) = mode {
        return Err(Error::input("clique arity c must be at least 1"));
    }
    let clique = clique_table(f, budget)?;
    let pred = match mode {
        CliqueMode::Plain => clique,
        CliqueMode::CWise(c) => wise_table(&clique, c, budget)?,
    };
    let start = mode.min_colors();
    let mut search = Search { pred: &pred, start, refuted: 0, blocks: Vec::new() };
    let n = f.len();
    for mask in 1u64..(1u64 << n) {
        let members: Vec<usize> = bits(mask).collect();
        search.partitions(&members, 0, budget).map_err(|e| e.with_lower_bound(search.least(n) as u64))?;
    }
    Ok(search.least(n) as u64)
}

struct Search<'a> {
    pred: &'a [bool],
    start: usize,
    /// bit `m` set when some `m`-coloring is a counterexample
    refuted: u128,
    blocks: Vec<u64>,
}

impl Search<'_> {
    fn least(&self, n: usize) -> usize {
        (self.start..=n.max(self.start) + 1)
            .find(|&m| self.refuted >> m & 1 == 0)
            .expect("no coloring uses more colors than members")
    }

    fn partitions(&mut self, members: &[usize], i: usize, budget: &Budget) -> Result<()> {
        budget.tick()?;
        if i == members.len() {
            let m = self.blocks.len();
            if m >= self.start
                && self.refuted >> m & 1 == 0
                && self.blocks.iter().all(|&b| !self.pred[b as usize])
            {
                self.refuted |= 1 << m;
            }
            return Ok(());
        }
        let x = members[i];
        for j in 0..=self.blocks.len() {
            if j == self.blocks.len() {
                self.blocks.push(1 << x);
            } else {
                self.blocks[j] |= 1 << x;
            }
            if self.rainbows_through(x, j) {
                self.partitions(members, i + 1, budget)?;
            }
            if self.blocks[j] == 1 << x {
                self.blocks.pop();
            } else {
                self.blocks[j] &= !(1 << x);
            }
        }
        Ok(())
    }

    /// All partial rainbow selections that pick `x` from block `home`.
    fn rainbows_through(&self, x: usize, home: usize) -> bool {
        fn walk(s: &Search<'_>, home: usize, j: usize, acc: u64) -> bool {
            if j == s.blocks.len() {
                return s.pred[acc as usize];
            }
            if j == home {
                return walk(s, home, j + 1, acc);
            }
            bits(s.blocks[j]).all(|y| walk(s, home, j + 1, acc | 1 << y))
        }
        walk(self, home, 0, 1 << x)
    }
}
