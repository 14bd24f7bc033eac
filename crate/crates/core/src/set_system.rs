//! Finite set systems, F-convex hulls and clique predicates.

use std::fmt::Write as _;

use crate::bitset::{self, BitSet};
use crate::error::{Error, Result};

/// A ground set `{0, .., ground_size - 1}` with an ordered list of members.
///
/// Members are a list: duplicates and empty members are allowed and keep
/// their positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground_size: usize,
    members: Vec<BitSet>,
}

/// A subfamily, given by member positions (sorted, without repeats).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Selector(Vec<usize>);

impl Selector {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Selector(v)
    }

    pub fn all(n: usize) -> Self {
        Selector((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        Selector(bitset::bits(mask).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit mask over member positions; `None` if a position is ≥ 64.
    pub fn mask(&self) -> Option<u64> {
        self.0.iter().try_fold(0u64, |m, &i| (i < 64).then(|| m | 1 << i))
    }
}

impl SetSystem {
    /// Build from explicit element lists.
    pub fn new<I, M>(ground_size: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = M>,
        M: IntoIterator<Item = usize>,
    {
        if ground_size == 0 {
            return Err(Error::input("ground set must have at least one element"));
        }
        let members = members
            .into_iter()
            .enumerate()
            .map(|(pos, m)| {
                let mut s = BitSet::empty(ground_size);
                for x in m {
                    if x >= ground_size {
                        return Err(Error::input(format!(
                            "member {pos}: element {x} outside ground set of size {ground_size}"
                        )));
                    }
                    s.insert(x);
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SetSystem { ground_size, members })
    }

    pub fn from_bitsets(ground_size: usize, members: Vec<BitSet>) -> Result<Self> {
        if ground_size == 0 {
            return Err(Error::input("ground set must have at least one element"));
        }
        if let Some(pos) = members.iter().position(|m| m.capacity() != ground_size) {
            return Err(Error::input(format!("member {pos} has the wrong universe size")));
        }
        Ok(SetSystem { ground_size, members })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn members(&self) -> &[BitSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ground(&self) -> BitSet {
        BitSet::full(self.ground_size)
    }

    pub fn element_set(&self, elements: impl IntoIterator<Item = usize>) -> Result<BitSet> {
        let mut s = BitSet::empty(self.ground_size);
        for x in elements {
            if x >= self.ground_size {
                return Err(Error::input(format!(
                    "element {x} outside ground set of size {}",
                    self.ground_size
                )));
            }
            s.insert(x);
        }
        Ok(s)
    }

    pub fn check_selector(&self, g: &Selector) -> Result<()> {
        match g.indices().last() {
            Some(&i) if i >= self.len() => Err(Error::input(format!(
                "selector position {i} out of range for {} members",
                self.len()
            ))),
            _ => Ok(()),
        }
    }

    /// `conv_F(P)`: the intersection of all members containing `p`, or the
    /// whole ground set when no member contains it.
    pub fn hull(&self, p: &BitSet) -> Result<BitSet> {
        if p.capacity() != self.ground_size {
            return Err(Error::input("element set has the wrong universe size"));
        }
        let mut out = self.ground();
        for m in &self.members {
            if p.is_subset(m) {
                out.intersect_with(m);
            }
        }
        Ok(out)
    }

    /// Common intersection of the selected members (ground set for an empty
    /// selector).
    pub fn meet(&self, g: &Selector) -> Result<BitSet> {
        self.check_selector(g)?;
        let mut out = self.ground();
        for &i in g.indices() {
            out.intersect_with(&self.members[i]);
        }
        Ok(out)
    }

    pub fn is_clique(&self, g: &Selector) -> Result<bool> {
        Ok(!self.meet(g)?.is_empty())
    }

    /// Every `c`-element subfamily of `g` is a clique.
    ///
    /// A selector with fewer than `c` members qualifies only if it is itself a
    /// clique, so that `c`-wise cliques are exactly cliques once `c` reaches
    /// the Helly number and the predicate weakens monotonically as `c` drops.
    pub fn is_cwise_clique(&self, g: &Selector, c: usize) -> Result<bool> {
        if c == 0 {
            return Err(Error::input("clique arity c must be at least 1"));
        }
        self.check_selector(g)?;
        if g.len() <= c {
            return self.is_clique(g);
        }
        let idx = g.indices();
        let mut combo: Vec<usize> = (0..c).collect();
        loop {
            let mut acc = self.ground();
            for &j in &combo {
                acc.intersect_with(&self.members[idx[j]]);
            }
            if acc.is_empty() {
                return Ok(false);
            }
            // next combination
            let mut i = c;
            while i > 0 && combo[i - 1] == idx.len() - c + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return Ok(true);
            }
            combo[i - 1] += 1;
            for j in i..c {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }

    /// The subfamily at the selected positions, in order, on the same ground set.
    pub fn restrict(&self, g: &Selector) -> Result<SetSystem> {
        self.check_selector(g)?;
        Ok(SetSystem {
            ground_size: self.ground_size,
            members: g.indices().iter().map(|&i| self.members[i].clone()).collect(),
        })
    }

    /// Distinct members, first occurrence order. Hull-based parameters only
    /// depend on this list.
    pub fn distinct_members(&self) -> Vec<BitSet> {
        let mut seen = std::collections::HashSet::new();
        self.members.iter().filter(|m| seen.insert(*m)).cloned().collect()
    }

    /// Members as `u64` masks over the ground set; `None` if the ground set
    /// has more than 64 elements.
    pub(crate) fn member_words(&self) -> Option<Vec<u64>> {
        self.members.iter().map(BitSet::as_word).collect()
    }

    /// Exhaustive member-subset searches use `u64` position masks.
    pub(crate) fn require_mask_members(&self) -> Result<()> {
        if self.len() > 63 {
            Err(Error::TooLarge(format!(
                "{} members exceed the 63-member limit of exhaustive subfamily search",
                self.len()
            )))
        } else {
            Ok(())
        }
    }

    /// Intersections of every position subset, indexed by mask.
    pub(crate) fn all_meets(&self, budget: &crate::Budget) -> Result<Vec<BitSet>> {
        self.require_mask_members()?;
        let n = self.len();
        budget.charge(1u64 << n)?;
        let mut meets = Vec::with_capacity(1 << n);
        meets.push(self.ground());
        for mask in 1u64..(1 << n) {
            let low = mask.trailing_zeros() as usize;
            let prev = &meets[(mask & (mask - 1)) as usize];
            meets.push(prev.intersection(&self.members[low]));
        }
        Ok(meets)
    }

    /// Parse the `.ss` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ground: Option<usize> = None;
        let mut members = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = lineno + 1;
            let mut words = line.split_whitespace();
            let directive = words.next().unwrap_or_default();
            match (directive, ground) {
                ("ground", None) => {
                    let n = parse_usize(words.next(), lineno, "ground size")?;
                    if words.next().is_some() {
                        return Err(Error::parse(lineno, "trailing tokens after ground size"));
                    }
                    if n == 0 {
                        return Err(Error::parse(lineno, "ground size must be at least 1"));
                    }
                    ground = Some(n);
                }
                ("ground", Some(_)) => return Err(Error::parse(lineno, "duplicate ground line")),
                ("set", Some(n)) => {
                    let mut s = BitSet::empty(n);
                    for w in words {
                        let x = parse_usize(Some(w), lineno, "element")?;
                        if x >= n {
                            return Err(Error::parse(
                                lineno,
                                format!("element {x} out of range for ground size {n}"),
                            ));
                        }
                        s.insert(x);
                    }
                    members.push(s);
                }
                ("set", None) => return Err(Error::parse(lineno, "`set` before `ground`")),
                (other, _) => {
                    return Err(Error::parse(lineno, format!("unknown directive `{other}`")))
                }
            }
        }
        let n = ground.ok_or_else(|| Error::parse(0, "missing `ground` line"))?;
        SetSystem::from_bitsets(n, members)
    }

    /// Render in the `.ss` text format. `parse(to_text(f)) == f`.
    pub fn to_text(&self) -> String {
        let mut out = format!("ground {}\n", self.ground_size);
        for m in &self.members {
            out.push_str("set");
            for x in m.iter() {
                let _ = write!(out, " {x}");
            }
            out.push('\n');
        }
        out
    }
}

pub(crate) fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

/// Ready-made systems used throughout tests and examples.
pub mod named {
    use super::SetSystem;

    /// `{X}`: the single member equal to the ground set.
    pub fn whole(ground: usize) -> SetSystem {
        SetSystem::new(ground, std::iter::once(0..ground)).expect("valid")
    }

    /// `n` members on `n` points, member `j` omitting point `j`.
    pub fn star(n: usize) -> SetSystem {
        SetSystem::new(n, (0..n).map(|j| (0..n).filter(move |&x| x != j))).expect("valid")
    }

    /// All nonempty integer intervals `[a, b]` on `n` points, ordered by `(a, b)`.
    pub fn intervals(n: usize) -> SetSystem {
        let members = (0..n).flat_map(|a| (a..n).map(move |b| a..=b));
        SetSystem::new(n, members).expect("valid")
    }
}
