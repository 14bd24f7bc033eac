//! Exhaustive backtracking search for homological almost-embeddings.
//!
//! Source faces are assigned in face order (vertices first). A vertex gets an
//! odd-size set of target vertices; a face of dimension `d ≥ 1` gets a
//! `d`-chain whose boundary equals the sum of its facets' images. Every
//! candidate avoids the support vertices of already-assigned source faces
//! that share no vertex with it, so the chain is solved for inside the
//! target's induced subcomplex on the remaining vertices: a particular
//! solution plus the span of that subcomplex's cycle space.
//!
//! Candidates are tried in a fixed order (vertex images by increasing bit
//! mask, chains by increasing kernel-combination index), so the first
//! certificate found is deterministic.

use std::collections::BTreeMap;

use crate::bitset::bits;
use crate::chain_map::{verify_hae, Chain, ChainMap};
use crate::error::{Error, Result};
use crate::homology::gf2::{flip, get, words, Gf2Matrix};
use crate::homology::{Simplex, SimplicialComplex};
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HaeSearch {
    /// A verified almost-embedding.
    Found(Box<ChainMap>),
    /// The search space is exhausted: no almost-embedding exists.
    ExhaustedNone,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub result: HaeSearch,
    pub nodes_explored: u64,
}

impl SearchOutcome {
    pub fn tag(&self) -> &'static str {
        match self.result {
            HaeSearch::Found(_) => "Found",
            HaeSearch::ExhaustedNone => "ExhaustedNone",
            HaeSearch::BudgetExceeded => "BudgetExceeded",
        }
    }
}

pub fn search_hae(k: &SimplicialComplex, l: &SimplicialComplex, budget: &Budget) -> Result<SearchOutcome> {
    let (Some(dk), dl) = (k.dim(), l.dim()) else {
        // the empty source maps trivially
        let map = ChainMap::new(k.clone(), l.clone(), BTreeMap::new())?;
        return Ok(SearchOutcome { result: HaeSearch::Found(Box::new(map)), nodes_explored: 0 });
    };
    if dl.is_none_or(|dl| dk > dl) {
        return Err(Error::input(format!(
            "source dimension {dk} exceeds target dimension {}",
            dl.map_or("-1 (empty)".to_string(), |d| d.to_string())
        )));
    }
    let start = budget.used();
    let mut s = Searcher::new(k, l);
    let found = match s.assign(0, budget) {
        Ok(found) => found,
        Err(Error::BudgetExceeded { .. }) => {
            return Ok(SearchOutcome {
                result: HaeSearch::BudgetExceeded,
                nodes_explored: budget.used().min(budget.limit()) - start,
            })
        }
        Err(e) => return Err(e),
    };
    let nodes_explored = budget.used() - start;
    let result = if found {
        let map = s.certificate()?;
        debug_assert_eq!(verify_hae(&map), Ok(()));
        HaeSearch::Found(Box::new(map))
    } else {
        HaeSearch::ExhaustedNone
    };
    Ok(SearchOutcome { result, nodes_explored })
}

struct Searcher<'a> {
    k: &'a SimplicialComplex,
    l: &'a SimplicialComplex,
    faces: Vec<Simplex>,
    /// earlier faces sharing no vertex with face i
    conflicts: Vec<Vec<usize>>,
    /// indices (into `faces`) of the facets of face i
    facets: Vec<Vec<usize>>,
    images: Vec<Vec<u64>>,
    supports: Vec<u64>,
}

impl<'a> Searcher<'a> {
    fn new(k: &'a SimplicialComplex, l: &'a SimplicialComplex) -> Self {
        let faces: Vec<Simplex> = k.faces().collect();
        let index: BTreeMap<Simplex, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let conflicts = faces
            .iter()
            .enumerate()
            .map(|(i, a)| (0..i).filter(|&j| !faces[j].shares_vertex(*a)).collect())
            .collect();
        let facets = faces.iter().map(|f| f.facets().map(|t| index[&t]).collect()).collect();
        let n = faces.len();
        Searcher { k, l, faces, conflicts, facets, images: vec![Vec::new(); n], supports: vec![0; n] }
    }

    fn assign(&mut self, i: usize, budget: &Budget) -> Result<bool> {
        if i == self.faces.len() {
            return Ok(true);
        }
        let forbidden = self.conflicts[i].iter().fold(0u64, |m, &j| m | self.supports[j]);
        let allowed = self.l.vertex_mask() & !forbidden;
        let d = self.faces[i].dim();
        if d == 0 {
            return self.assign_vertex(i, allowed, budget);
        }

        let lower = self.l.faces_of_dim(d - 1);
        let mut target = vec![0u64; words(lower.len())];
        for &f in &self.facets[i] {
            for (w, x) in target.iter_mut().zip(&self.images[f]) {
                *w ^= x;
            }
        }
        if (0..lower.len()).any(|r| get(&target, r) && lower[r].mask() & !allowed != 0) {
            return Ok(false);
        }

        // linear system on the induced subcomplex
        let rows: Vec<usize> = (0..lower.len()).filter(|&r| lower[r].mask() & !allowed == 0).collect();
        let upper = self.l.faces_of_dim(d);
        let cols: Vec<usize> = (0..upper.len()).filter(|&c| upper[c].mask() & !allowed == 0).collect();
        let row_pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(p, &r)| (r, p)).collect();
        let mut m = Gf2Matrix::zeros(rows.len(), cols.len());
        for (cp, &c) in cols.iter().enumerate() {
            for facet in upper[c].facets() {
                let r = self.l.position(facet).expect("closed under faces");
                m.set(row_pos[&r], cp);
            }
        }
        let mut b = vec![0u64; words(rows.len())];
        for (p, &r) in rows.iter().enumerate() {
            if get(&target, r) {
                flip(&mut b, p);
            }
        }
        let Some(sol) = m.solve(&b) else {
            return Ok(false);
        };
        let dim = sol.kernel.len();
        if dim >= 63 {
            budget.charge(u64::MAX)?;
        }
        for combo in 0u64..1 << dim {
            budget.tick()?;
            let mut local = sol.particular.clone();
            for j in bits(combo) {
                for (w, x) in local.iter_mut().zip(&sol.kernel[j]) {
                    *w ^= x;
                }
            }
            let mut chain = vec![0u64; words(upper.len())];
            let mut support = 0u64;
            for (cp, &c) in cols.iter().enumerate() {
                if get(&local, cp) {
                    flip(&mut chain, c);
                    support |= upper[c].mask();
                }
            }
            self.images[i] = chain;
            self.supports[i] = support;
            if self.assign(i + 1, budget)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn assign_vertex(&mut self, i: usize, allowed: u64, budget: &Budget) -> Result<bool> {
        let vertices = self.l.faces_of_dim(0);
        // submasks of `allowed` in increasing numeric order
        let mut sub = 0u64;
        loop {
            sub = (sub | !allowed).wrapping_add(1) & allowed;
            if sub == 0 {
                return Ok(false);
            }
            if sub.count_ones().is_multiple_of(2) {
                continue;
            }
            budget.tick()?;
            let mut chain = vec![0u64; words(vertices.len())];
            for v in bits(sub) {
                let p = self.l.position(Simplex::from_mask(1 << v)).expect("vertex of target");
                flip(&mut chain, p);
            }
            self.images[i] = chain;
            self.supports[i] = sub;
            if self.assign(i + 1, budget)? {
                return Ok(true);
            }
        }
    }

    fn certificate(&self) -> Result<ChainMap> {
        let mut images = BTreeMap::new();
        for (i, &f) in self.faces.iter().enumerate() {
            let d = f.dim();
            let upper = self.l.faces_of_dim(d);
            let simplices = (0..upper.len()).filter(|&c| get(&self.images[i], c)).map(|c| upper[c]);
            images.insert(f, Chain::new(d, simplices)?);
        }
        ChainMap::new(self.k.clone(), self.l.clone(), images)
    }
}
