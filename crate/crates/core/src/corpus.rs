//! Seeded generators for test corpora.
//!
//! The same seed always yields the same instances: the generator is ChaCha8
//! and draws happen in a fixed order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::homology::complex::{Simplex, SimplicialComplex, MAX_VERTICES};
use crate::set_system::{named, SetSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    Random,
    Intervals,
    Star,
}

impl std::str::FromStr for CorpusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(CorpusKind::Random),
            "intervals" => Ok(CorpusKind::Intervals),
            "star" => Ok(CorpusKind::Star),
            _ => Err(Error::input(format!("unknown corpus kind `{s}` (random, intervals, star)"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    /// Largest ground set.
    pub ground: usize,
    /// Largest member count (random kind only).
    pub members: usize,
    pub kind: CorpusKind,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ground size uniform in `1..=ground_max`, member count uniform in
/// `1..=members_max`, each element in each member with probability 1/2.
pub fn random_set_system(rng: &mut impl Rng, ground_max: usize, members_max: usize) -> SetSystem {
    let g = rng.gen_range(1..=ground_max.max(1));
    let m = rng.gen_range(1..=members_max.max(1));
    let members = (0..m)
        .map(|_| {
            let mut b = BitSet::empty(g);
            for x in 0..g {
                if rng.gen_bool(0.5) {
                    b.insert(x);
                }
            }
            b
        })
        .collect();
    SetSystem::from_bitsets(g, members).expect("members lie in the ground set")
}

/// Vertex count uniform in `1..=max_vertices`, then between 1 and
/// `max_generators` random nonempty generating faces, so the complex is
/// never empty.
pub fn random_complex(rng: &mut impl Rng, max_vertices: usize, max_generators: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices.clamp(1, MAX_VERTICES));
    let k = rng.gen_range(1..=max_generators.max(1));
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let gens: Vec<Simplex> = (0..k)
        .map(|_| {
            let mut mask = rng.gen::<u64>() & full;
            if mask == 0 {
                mask = 1 << rng.gen_range(0..n);
            }
            Simplex::new(crate::bitset::bits(mask)).expect("nonempty")
        })
        .collect();
    SimplicialComplex::from_generators(n, gens).expect("vertices in range")
}

/// Named instances for `spec`. Deterministic kinds emit one system per size
/// `1..=ground` and ignore `count`.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<(String, SetSystem)>> {
    if spec.ground == 0 {
        return Err(Error::input("ground must be at least 1"));
    }
    Ok(match spec.kind {
        CorpusKind::Random => {
            if spec.members == 0 {
                return Err(Error::input("members must be at least 1"));
            }
            let mut r = rng(spec.seed);
            (0..spec.count)
                .map(|i| (format!("random-{i:04}"), random_set_system(&mut r, spec.ground, spec.members)))
                .collect()
        }
        CorpusKind::Intervals => (1..=spec.ground).map(|n| (format!("intervals-{n}"), named::intervals(n))).collect(),
        CorpusKind::Star => (1..=spec.ground).map(|n| (format!("star-{n}"), named::star(n))).collect(),
    })
}
