//! Convexity parameters of set systems.
//!
//! Each parameter is a [`Parameter`] trait object registered by name in a
//! [`ParameterRegistry`]; [`graded`] lifts any of them to its graded profile.

pub mod colorful;
pub mod fractional;
pub mod helly;
pub mod partition;
pub mod radon;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::set_system::{Selector, SetSystem};
use crate::Budget;

pub use colorful::{colorful_helly, CliqueMode};
pub use fractional::{fh_profile, FractionalProfile};
pub use helly::{helly, minimal_obstructions, Obstruction};
pub use partition::partition_number;
pub use radon::{radon, radon_witness};

/// A non-negative integer parameter of a finite set system.
pub trait Parameter: Send + Sync {
    fn name(&self) -> String;

    fn evaluate(&self, f: &SetSystem, budget: &Budget) -> Result<u64>;

    /// Whether the value depends only on the distinct members (true for
    /// everything defined through hulls and intersections).
    fn duplicate_insensitive(&self) -> bool {
        false
    }
}

pub struct Helly;
pub struct Radon;
pub struct Partition(pub usize);
pub struct Colorful(pub CliqueMode);

impl Parameter for Helly {
    fn name(&self) -> String {
        "helly".into()
    }
    fn evaluate(&self, f: &SetSystem, budget: &Budget) -> Result<u64> {
        helly(f, budget)
    }
    fn duplicate_insensitive(&self) -> bool {
        true
    }
}

impl Parameter for Radon {
    fn name(&self) -> String {
        "radon".into()
    }
    fn evaluate(&self, f: &SetSystem, budget: &Budget) -> Result<u64> {
        radon(f, budget)
    }
    fn duplicate_insensitive(&self) -> bool {
        true
    }
}

impl Parameter for Partition {
    fn name(&self) -> String {
        format!("partition-{}", self.0)
    }
    fn evaluate(&self, f: &SetSystem, budget: &Budget) -> Result<u64> {
        partition_number(f, self.0, budget)
    }
    fn duplicate_insensitive(&self) -> bool {
        true
    }
}

impl Parameter for Colorful {
    fn name(&self) -> String {
        match self.0 {
            CliqueMode::Plain => "colorful-plain".into(),
            CliqueMode::CWise(c) => format!("colorful-{c}"),
        }
    }
    fn evaluate(&self, f: &SetSystem, budget: &Budget) -> Result<u64> {
        colorful_helly(f, self.0, budget)
    }
}

/// Options a parameter factory may consume.
#[derive(Clone, Debug, Default)]
pub struct ParameterOptions {
    pub c: Option<usize>,
    pub k: Option<usize>,
}

type Factory = fn(&ParameterOptions) -> Result<Box<dyn Parameter>>;

/// Name → parameter factory.
pub struct ParameterRegistry {
    factories: BTreeMap<&'static str, Factory>,
}

impl ParameterRegistry {
    pub fn empty() -> Self {
        ParameterRegistry { factories: BTreeMap::new() }
    }

    pub fn register(&mut self, name: &'static str, factory: Factory) {
        self.factories.insert(name, factory);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.factories.keys().copied()
    }

    pub fn build(&self, name: &str, opts: &ParameterOptions) -> Result<Box<dyn Parameter>> {
        let factory = self.factories.get(name).ok_or_else(|| {
            let known: Vec<_> = self.names().collect();
            Error::input(format!("unknown parameter `{name}` (known: {})", known.join(", ")))
        })?;
        factory(opts)
    }
}

impl Default for ParameterRegistry {
    fn default() -> Self {
        let mut r = ParameterRegistry::empty();
        r.register("helly", |_| Ok(Box::new(Helly)));
        r.register("radon", |_| Ok(Box::new(Radon)));
        r.register("partition", |o| {
            let k = o.k.ok_or_else(|| Error::input("partition needs k"))?;
            if k < 2 {
                return Err(Error::input("partition needs k >= 2"));
            }
            Ok(Box::new(Partition(k)))
        });
        r.register("colorful", |o| {
            let c = o.c.ok_or_else(|| Error::input("colorful needs c"))?;
            if c == 0 {
                return Err(Error::input("clique arity c must be at least 1"));
            }
            Ok(Box::new(Colorful(CliqueMode::CWise(c))))
        });
        r.register("colorful-plain", |_| Ok(Box::new(Colorful(CliqueMode::Plain))));
        r
    }
}

/// Values indexed by `t = 1..=t_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedProfile(pub Vec<u64>);

impl GradedProfile {
    pub fn t_max(&self) -> usize {
        self.0.len()
    }

    /// Value at `t` (1-based).
    pub fn at(&self, t: usize) -> u64 {
        self.0[t - 1]
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Graded profile of `param`: at `t`, the largest value over all sub-lists
/// of at most `t` members (the empty sub-list included).
///
/// Sub-lists are evaluated in parallel; the result does not depend on the
/// thread count.
pub fn graded(f: &SetSystem, param: &dyn Parameter, t_max: usize, budget: &Budget) -> Result<GradedProfile> {
    if t_max == 0 {
        return Err(Error::input("t_max must be at least 1"));
    }
    f.require_mask_members()?;
    let n = f.len();
    let cap = t_max.min(n);
    let masks: Vec<u64> = (0u64..1 << n).filter(|m| m.count_ones() as usize <= cap).collect();
    budget.charge(masks.len() as u64)?;

    // one evaluation per distinct key; for duplicate-insensitive parameters
    // the key is the sorted set of distinct members
    let mut keys: Vec<Vec<BitSet>> = Vec::new();
    let mut key_of: HashMap<Vec<BitSet>, usize> = HashMap::new();
    let mut slot = Vec::with_capacity(masks.len());
    for &mask in &masks {
        let mut key: Vec<BitSet> = crate::bitset::bits(mask).map(|i| f.members()[i].clone()).collect();
        if param.duplicate_insensitive() {
            key.sort();
            key.dedup();
        }
        let next = keys.len();
        let id = *key_of.entry(key.clone()).or_insert_with(|| {
            keys.push(key);
            next
        });
        slot.push(id);
    }
    let values: Vec<u64> = keys
        .par_iter()
        .map(|members| {
            let sub = SetSystem::from_bitsets(f.ground_size(), members.clone())?;
            param.evaluate(&sub, budget)
        })
        .collect::<Vec<Result<u64>>>()
        .into_iter()
        .collect::<Result<_>>()?;

    let mut best_by_size = vec![0u64; cap + 1];
    for (mask, id) in masks.iter().zip(slot) {
        let size = mask.count_ones() as usize;
        best_by_size[size] = best_by_size[size].max(values[id]);
    }
    let mut out = Vec::with_capacity(t_max);
    let mut running = best_by_size[0];
    for t in 1..=t_max {
        if t <= cap {
            running = running.max(best_by_size[t]);
        }
        out.push(running);
    }
    Ok(GradedProfile(out))
}

/// Sub-list realising the graded value at `t`: the first position mask (in
/// numeric order) of size at most `t` attaining the maximum.
pub fn graded_witness(f: &SetSystem, param: &dyn Parameter, t: usize, budget: &Budget) -> Result<(Selector, u64)> {
    f.require_mask_members()?;
    let n = f.len();
    let mut best: Option<(u64, u64)> = None;
    for mask in 0u64..1 << n {
        if mask.count_ones() as usize > t {
            continue;
        }
        let sub = f.restrict(&Selector::from_mask(mask))?;
        let v = param.evaluate(&sub, budget)?;
        if best.is_none_or(|(_, b)| v > b) {
            best = Some((mask, v));
        }
    }
    let (mask, v) = best.expect("the empty sub-list always exists");
    Ok((Selector::from_mask(mask), v))
}
