//! GF(2) chain maps between finite complexes and homological
//! almost-embeddings.

pub mod format;
pub mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::homology::{Simplex, SimplicialComplex};

pub use search::{search_hae, HaeSearch, SearchOutcome};

/// A GF(2) chain: a set of equal-dimension simplices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    dim: usize,
    simplices: BTreeSet<Simplex>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Chain { dim, simplices: BTreeSet::new() }
    }

    pub fn new(dim: usize, simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for s in simplices {
            if s.dim() != dim {
                return Err(Error::input(format!("simplex {s:?} in a {dim}-chain")));
            }
            if !set.insert(s) {
                return Err(Error::input(format!("simplex {s:?} listed twice in a chain")));
            }
        }
        Ok(Chain { dim, simplices: set })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.simplices.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Vertices of the support (the downward closure of the simplices).
    pub fn support_vertices(&self) -> u64 {
        self.simplices.iter().fold(0, |m, s| m | s.mask())
    }

    pub fn add_assign(&mut self, other: &Chain) {
        debug_assert_eq!(self.dim, other.dim);
        for s in &other.simplices {
            if !self.simplices.remove(s) {
                self.simplices.insert(*s);
            }
        }
    }

    /// `∂` of a chain of dimension ≥ 1.
    pub fn boundary(&self) -> Chain {
        assert!(self.dim >= 1, "boundary of a 0-chain is the augmentation");
        let mut out = Chain::zero(self.dim - 1);
        for s in &self.simplices {
            for f in s.facets() {
                if !out.simplices.remove(&f) {
                    out.simplices.insert(f);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.simplices).finish()
    }
}

/// One image chain per source face, of the same dimension, inside the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    images: BTreeMap<Simplex, Chain>,
}

impl ChainMap {
    pub fn new(source: SimplicialComplex, target: SimplicialComplex, images: BTreeMap<Simplex, Chain>) -> Result<Self> {
        for s in source.faces() {
            let c = images.get(&s).ok_or_else(|| Error::input(format!("no image for source face {s:?}")))?;
            if c.dim() != s.dim() {
                return Err(Error::input(format!(
                    "image of {s:?} has dimension {} instead of {}",
                    c.dim(),
                    s.dim()
                )));
            }
            if let Some(bad) = c.simplices().find(|&t| !target.contains(t)) {
                return Err(Error::input(format!("image of {s:?} uses {bad:?}, not a face of the target")));
            }
        }
        if let Some(extra) = images.keys().find(|s| !source.contains(**s)) {
            return Err(Error::input(format!("image given for {extra:?}, not a face of the source")));
        }
        Ok(ChainMap { source, target, images })
    }

    /// Chain map induced by a vertex map; faces collapsed by the map go to 0.
    pub fn induced(source: SimplicialComplex, target: SimplicialComplex, vertex_map: &[usize]) -> Result<Self> {
        let mut images = BTreeMap::new();
        for s in source.faces() {
            let mut mask = 0u64;
            for v in s.vertices() {
                let w = *vertex_map
                    .get(v)
                    .ok_or_else(|| Error::input(format!("vertex {v} has no image")))?;
                if w >= 64 {
                    return Err(Error::input(format!("vertex image {w} out of range")));
                }
                mask |= 1 << w;
            }
            let chain = if mask.count_ones() as usize == s.dim() + 1 {
                let t = Simplex::new(crate::bitset::bits(mask))?;
                Chain::new(s.dim(), [t])?
            } else {
                Chain::zero(s.dim())
            };
            images.insert(s, chain);
        }
        ChainMap::new(source, target, images)
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn image(&self, s: Simplex) -> Option<&Chain> {
        self.images.get(&s)
    }

    pub fn images(&self) -> impl Iterator<Item = (Simplex, &Chain)> {
        self.images.iter().map(|(s, c)| (*s, c))
    }

    /// The same images on a subcomplex of the source.
    pub fn restrict(&self, sub: &SimplicialComplex) -> Result<ChainMap> {
        if !sub.is_subcomplex_of(&self.source) {
            return Err(Error::input("restriction target is not a subcomplex of the source"));
        }
        let images = sub.faces().map(|s| (s, self.images[&s].clone())).collect();
        ChainMap::new(sub.clone(), self.target.clone(), images)
    }
}

/// First source face (in face order) where `∂ f(σ) ≠ f(∂σ)`.
pub fn chain_map_defect(f: &ChainMap) -> Option<Simplex> {
    f.source.faces().filter(|s| s.dim() >= 1).find(|&s| {
        let mut expected = Chain::zero(s.dim() - 1);
        for facet in s.facets() {
            expected.add_assign(&f.images[&facet]);
        }
        f.images[&s].boundary() != expected
    })
}

/// Boundary commutation on every face of positive dimension. Vertex images
/// are unconstrained here; their parity is the nontriviality condition.
pub fn verify_chain_map(f: &ChainMap) -> bool {
    chain_map_defect(f).is_none()
}

/// Why a chain map is not a homological almost-embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HaeDefect {
    /// Boundary commutation fails at this source face.
    NotChainMap { face: Simplex },
    /// A vertex image has a support of even size.
    EvenVertexSupport { vertex: usize, size: usize },
    /// Two vertex-disjoint source faces have supports sharing these target vertices.
    SupportsMeet { first: Simplex, second: Simplex, shared: Vec<usize> },
}

impl fmt::Display for HaeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HaeDefect::NotChainMap { face } => write!(f, "not a chain map at face {face:?}"),
            HaeDefect::EvenVertexSupport { vertex, size } => {
                write!(f, "vertex {vertex} has an image with even support size {size}")
            }
            HaeDefect::SupportsMeet { first, second, shared } => {
                write!(f, "non-adjacent faces {first:?} and {second:?} have supports sharing vertices {shared:?}")
            }
        }
    }
}

/// Checks the chain-map condition, then odd vertex supports, then vertex-disjoint
/// supports for every pair of non-adjacent source faces; reports the first defect.
pub fn verify_hae(f: &ChainMap) -> std::result::Result<(), HaeDefect> {
    if let Some(face) = chain_map_defect(f) {
        return Err(HaeDefect::NotChainMap { face });
    }
    for v in f.source.faces_of_dim(0) {
        let size = f.images[v].len();
        if size.is_multiple_of(2) {
            return Err(HaeDefect::EvenVertexSupport { vertex: v.vertices().next().expect("vertex"), size });
        }
    }
    let faces: Vec<(Simplex, u64)> = f.source.faces().map(|s| (s, f.images[&s].support_vertices())).collect();
    for (i, &(a, sa)) in faces.iter().enumerate() {
        for &(b, sb) in &faces[i + 1..] {
            if !a.shares_vertex(b) && sa & sb != 0 {
                return Err(HaeDefect::SupportsMeet {
                    first: a,
                    second: b,
                    shared: crate::bitset::bits(sa & sb).collect(),
                });
            }
        }
    }
    Ok(())
}
