//! Empirical fractional-Helly profile: clique density among s-tuples and the
//! largest c-wise clique.

use num_bigint::BigUint;
use num_rational::Ratio;

use crate::bitset::submasks_of_size;
use crate::error::{Error, Result};
use crate::params::helly::{clique_table, wise_table};
use crate::set_system::SetSystem;
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalProfile {
    pub s: usize,
    pub c: usize,
    /// Fraction of the `s`-subsets of member positions that are `c`-wise cliques.
    pub alpha: Ratio<BigUint>,
    pub max_cwise_clique: usize,
    pub n: usize,
}

pub fn fh_profile(f: &SetSystem, s: usize, c: usize, budget: &Budget) -> Result<FractionalProfile> {
    let n = f.len();
    if s == 0 || s > n {
        return Err(Error::input(format!("tuple size s = {s} must lie in 1..={n}")));
    }
    if c == 0 {
        return Err(Error::input("clique arity c must be at least 1"));
    }
    let clique = clique_table(f, budget)?;
    let wise = wise_table(&clique, c, budget)?;
    let full = (1u64 << n) - 1;
    let hits = submasks_of_size(full, s).filter(|&m| wise[m as usize]).count();
    let max_cwise_clique = (0..wise.len())
        .filter(|&m| wise[m])
        .map(|m| (m as u64).count_ones() as usize)
        .max()
        .unwrap_or(0);
    Ok(FractionalProfile {
        s,
        c,
        alpha: Ratio::new(BigUint::from(hits), binomial(n, s)),
        max_cwise_clique,
        n,
    })
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}
