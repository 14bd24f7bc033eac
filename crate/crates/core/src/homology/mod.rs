//! Simplicial complexes and their reduced homology over GF(2).

pub mod complex;
pub mod format;
pub mod gf2;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::params::GradedProfile;
use crate::set_system::Selector;
use crate::Budget;

pub use complex::{named, skeleton_simplex, Simplex, SimplicialComplex};
pub use gf2::Gf2Matrix;

/// Reduced Betti numbers `β̃_0 ..= β̃_dim`. Indices past the end read as 0.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `max_{i in range} β̃_i`.
    pub fn max_over(&self, range: std::ops::Range<usize>) -> usize {
        range.map(|i| self.get(i)).max().unwrap_or(0)
    }

    /// `Σ (−1)^i β̃_i` over `i ≥ 0`; equals `χ(K) − 1` for nonempty `K`
    /// (the empty complex also has `β̃_{−1} = 1`, which is not stored).
    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }
}

/// Boundary matrix `∂_d : C_d → C_{d-1}` (rows: `(d-1)`-faces, columns: `d`-faces).
pub fn boundary_matrix(k: &SimplicialComplex, d: usize) -> Gf2Matrix {
    assert!(d >= 1);
    let lower = k.faces_of_dim(d - 1);
    let upper = k.faces_of_dim(d);
    let mut m = Gf2Matrix::zeros(lower.len(), upper.len());
    for (c, s) in upper.iter().enumerate() {
        for facet in s.facets() {
            m.set(k.position(facet).expect("closed under faces"), c);
        }
    }
    m
}

/// Reduced Betti numbers with the augmentation as `∂_0`. The empty complex
/// has the empty vector (every `β̃_i`, `i ≥ 0`, reads as 0).
pub fn reduced_betti(k: &SimplicialComplex) -> BettiVector {
    let Some(top) = k.dim() else {
        return BettiVector::default();
    };
    // rank[d] = rank of ∂_d for d = 0..=top+1
    let mut rank = vec![0usize; top + 2];
    rank[0] = 1;
    for (d, r) in rank.iter_mut().enumerate().take(top + 1).skip(1) {
        *r = boundary_matrix(k, d).rank();
    }
    BettiVector((0..=top).map(|d| k.faces_of_dim(d).len() - rank[d] - rank[d + 1]).collect())
}

/// A base complex with an ordered list of named subcomplexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcomplexFamily {
    base: SimplicialComplex,
    members: Vec<(String, SimplicialComplex)>,
}

impl SubcomplexFamily {
    pub fn new(base: SimplicialComplex, members: Vec<(String, SimplicialComplex)>) -> Result<Self> {
        for (name, m) in &members {
            if !m.is_subcomplex_of(&base) {
                return Err(Error::input(format!("member `{name}` is not a subcomplex of the base")));
            }
        }
        Ok(SubcomplexFamily { base, members })
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn members(&self) -> &[(String, SimplicialComplex)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Face-set intersection of the selected members; the base for an empty selector.
pub fn intersection_subcomplex(fam: &SubcomplexFamily, g: &Selector) -> Result<SimplicialComplex> {
    if let Some(&i) = g.indices().last() {
        if i >= fam.len() {
            return Err(Error::input(format!("selector position {i} out of range for {} members", fam.len())));
        }
    }
    Ok(g.indices().iter().fold(fam.base.clone(), |acc, &i| acc.intersection(&fam.members[i].1)))
}

/// Per nonempty selector of size at most `k_max`: `max_{i in range} β̃_i` of
/// its intersection, returned as (size, value) in mask order.
fn selector_values(
    fam: &SubcomplexFamily,
    k_max: usize,
    range: std::ops::Range<usize>,
    budget: &Budget,
) -> Result<Vec<(usize, u64)>> {
    if fam.len() > 63 {
        return Err(Error::TooLarge(format!("{} members exceed the 63-member limit", fam.len())));
    }
    let masks: Vec<u64> =
        (1u64..1 << fam.len()).filter(|m| m.count_ones() as usize <= k_max).collect();
    budget.charge(masks.len() as u64)?;
    masks
        .par_iter()
        .map(|&mask| {
            let k = intersection_subcomplex(fam, &Selector::from_mask(mask))?;
            Ok((mask.count_ones() as usize, reduced_betti(&k).max_over(range.clone()) as u64))
        })
        .collect()
}

/// Homological shatter profile: at `k`, the largest `β̃_i` with `0 ≤ i ≤ h`
/// over intersections of between 1 and `k` members.
pub fn shatter(fam: &SubcomplexFamily, h: usize, k_max: usize, budget: &Budget) -> Result<GradedProfile> {
    if k_max == 0 {
        return Err(Error::input("k_max must be at least 1"));
    }
    match fam.base.dim() {
        Some(d) if h <= d => {}
        _ => return Err(Error::input(format!("h = {h} exceeds the dimension of the base complex"))),
    }
    let values = selector_values(fam, k_max, 0..h + 1, budget)?;
    let mut by_size = vec![0u64; k_max + 1];
    for (size, v) in values {
        by_size[size] = by_size[size].max(v);
    }
    let mut running = 0;
    Ok(GradedProfile(
        by_size[1..]
            .iter()
            .map(|&v| {
                running = running.max(v);
                running
            })
            .collect(),
    ))
}

/// h-level topological complexity: the largest `β̃_i` with `0 ≤ i < h` over
/// intersections of nonempty subfamilies.
pub fn level_complexity(fam: &SubcomplexFamily, h: usize, budget: &Budget) -> Result<u64> {
    if h == 0 {
        return Err(Error::input("h must be at least 1"));
    }
    let values = selector_values(fam, fam.len(), 0..h, budget)?;
    Ok(values.into_iter().map(|(_, v)| v).max().unwrap_or(0))
}

/// `μ(K)`: the largest `dim σ + dim τ` over vertex-disjoint faces; `None`
/// when no two faces are vertex-disjoint.
pub fn mu(k: &SimplicialComplex) -> Option<usize> {
    let faces: Vec<Simplex> = k.faces().collect();
    let mut best = None;
    for (i, &a) in faces.iter().enumerate() {
        for &b in &faces[i + 1..] {
            if !a.shares_vertex(b) {
                let v = a.dim() + b.dim();
                if best.is_none_or(|x| v > x) {
                    best = Some(v);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn lists(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, faces.iter().map(|f| f.iter().copied())).unwrap()
    }

    #[test]
    fn betti_examples() {
        assert_eq!(reduced_betti(&sphere_boundary(2)).0, vec![0, 1]);
        assert_eq!(reduced_betti(&sphere_boundary(3)).0, vec![0, 0, 1]);
        assert_eq!(reduced_betti(&projective_plane()).0, vec![0, 1, 1]);
        assert_eq!(reduced_betti(&torus()).0, vec![0, 2, 1]);
        assert_eq!(reduced_betti(&SimplicialComplex::empty(3)).0, Vec::<usize>::new());
        assert_eq!(reduced_betti(&lists(3, &[&[0], &[1], &[2]])).0, vec![2]);
    }

    fn circle_family() -> SubcomplexFamily {
        let base = sphere_boundary(2);
        SubcomplexFamily::new(base.clone(), vec![("A".into(), base), ("B".into(), lists(3, &[&[0, 1]]))]).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let fam = circle_family();
        let ab = intersection_subcomplex(&fam, &Selector::all(2)).unwrap();
        assert_eq!(ab, lists(3, &[&[0, 1]]));
        let a = intersection_subcomplex(&fam, &Selector::new([0])).unwrap();
        assert_eq!(a, sphere_boundary(2));
        assert_eq!(intersection_subcomplex(&fam, &Selector::default()).unwrap(), sphere_boundary(2));

        let disjoint = SubcomplexFamily::new(
            sphere_boundary(2),
            vec![("x".into(), lists(3, &[&[0]])), ("y".into(), lists(3, &[&[1]]))],
        )
        .unwrap();
        assert!(intersection_subcomplex(&disjoint, &Selector::all(2)).unwrap().is_empty());
    }

    #[test]
    fn shatter_examples() {
        let b = Budget::default();
        assert_eq!(shatter(&circle_family(), 1, 2, &b).unwrap().0, vec![1, 1]);
        let points = SubcomplexFamily::new(
            sphere_boundary(2),
            vec![("x".into(), lists(3, &[&[0]])), ("y".into(), lists(3, &[&[2]]))],
        )
        .unwrap();
        assert_eq!(shatter(&points, 1, 2, &b).unwrap().0, vec![0, 0]);
        let sphere = SubcomplexFamily::new(sphere_boundary(3), vec![("S".into(), sphere_boundary(3))]).unwrap();
        assert_eq!(shatter(&sphere, 2, 1, &b).unwrap().0, vec![1]);
        assert!(shatter(&sphere, 3, 1, &b).is_err());
    }

    #[test]
    fn level_examples() {
        let b = Budget::default();
        let circle = SubcomplexFamily::new(sphere_boundary(2), vec![("A".into(), sphere_boundary(2))]).unwrap();
        assert_eq!(level_complexity(&circle, 2, &b).unwrap(), 1);
        assert_eq!(level_complexity(&circle, 1, &b).unwrap(), 0);
        let disk = SubcomplexFamily::new(disk4(), vec![("D".into(), disk4())]).unwrap();
        assert_eq!(level_complexity(&disk, 3, &b).unwrap(), 0);
        assert!(level_complexity(&disk, 0, &b).is_err());
    }

    #[test]
    fn member_must_be_subcomplex() {
        assert!(SubcomplexFamily::new(lists(3, &[&[0, 1]]), vec![("x".into(), lists(3, &[&[1, 2]]))]).is_err());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(&skeleton_simplex(4, 1).unwrap()), Some(2));
        assert_eq!(mu(&skeleton_simplex(2, 2).unwrap()), Some(1));
        assert_eq!(mu(&lists(2, &[&[0, 1]])), Some(0));
        assert_eq!(mu(&lists(1, &[&[0]])), None);
    }
}
