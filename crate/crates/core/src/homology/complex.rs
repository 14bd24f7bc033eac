//! Finite simplicial complexes on at most 64 labelled vertices.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::bitset::bits;
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A nonempty vertex set, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Simplex(u64);

impl Simplex {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::input(format!("vertex {v} exceeds the {MAX_VERTICES}-vertex limit")));
            }
            if mask >> v & 1 == 1 {
                return Err(Error::input(format!("vertex {v} repeated in a simplex")));
            }
            mask |= 1 << v;
        }
        if mask == 0 {
            return Err(Error::input("a simplex needs at least one vertex"));
        }
        Ok(Simplex(mask))
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        debug_assert!(mask != 0);
        Simplex(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn dim(self) -> usize {
        self.0.count_ones() as usize - 1
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }

    /// Codimension-one faces; empty for a vertex.
    pub fn facets(self) -> impl Iterator<Item = Simplex> {
        let m = self.0;
        bits(m).filter(move |_| m.count_ones() > 1).map(move |v| Simplex(m & !(1 << v)))
    }

    pub fn shares_vertex(self, other: Simplex) -> bool {
        self.0 & other.0 != 0
    }
}

impl Ord for Simplex {
    /// Dimension first, then lexicographic on sorted vertex lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .count_ones()
            .cmp(&other.0.count_ones())
            .then_with(|| self.vertices().cmp(other.vertices()))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
        write!(f, "[{}]", vs.join(" "))
    }
}

/// A downward-closed set of simplices on vertices `0..vertex_count`.
///
/// Faces are the downward closure of the generating simplices; a label below
/// `vertex_count` that appears in no face is not a vertex of the complex.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    by_dim: Vec<Vec<Simplex>>,
    index: HashMap<u64, usize>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertex_count", &self.vertex_count)
            .field("faces", &self.by_dim)
            .finish()
    }
}

impl SimplicialComplex {
    /// Downward closure of `generators`.
    pub fn from_generators(vertex_count: usize, generators: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::input(format!("at most {MAX_VERTICES} vertices are supported")));
        }
        let mut faces = BTreeSet::new();
        for g in generators {
            if vertex_count < 64 && g.0 >> vertex_count != 0 {
                return Err(Error::input(format!("simplex {g:?} uses a vertex ≥ {vertex_count}")));
            }
            if faces.contains(&g) {
                continue;
            }
            let m = g.0;
            let mut sub = m;
            while sub != 0 {
                faces.insert(Simplex(sub));
                sub = (sub - 1) & m;
            }
        }
        Ok(Self::from_closed(vertex_count, faces))
    }

    /// Convenience over vertex lists.
    pub fn from_lists<I, S>(vertex_count: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        let gens = generators.into_iter().map(Simplex::new).collect::<Result<Vec<_>>>()?;
        Self::from_generators(vertex_count, gens)
    }

    fn from_closed(vertex_count: usize, faces: BTreeSet<Simplex>) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        let mut index = HashMap::with_capacity(faces.len());
        for s in faces {
            let d = s.dim();
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            index.insert(s.0, by_dim[d].len());
            by_dim[d].push(s);
        }
        SimplicialComplex { vertex_count, by_dim, index }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_closed(vertex_count, BTreeSet::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn faces_of_dim(&self, d: usize) -> &[Simplex] {
        self.by_dim.get(d).map_or(&[], Vec::as_slice)
    }

    /// All faces, by dimension then lexicographically.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.by_dim.iter().flatten().copied()
    }

    pub fn face_count(&self) -> usize {
        self.index.len()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, s: Simplex) -> bool {
        self.index.contains_key(&s.0)
    }

    /// Position of `s` among the faces of its dimension.
    pub fn position(&self, s: Simplex) -> Option<usize> {
        self.index.get(&s.0).copied()
    }

    /// Vertices that occur in some face.
    pub fn vertex_mask(&self) -> u64 {
        self.faces_of_dim(0).iter().fold(0, |m, s| m | s.0)
    }

    pub fn maximal_faces(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = self
            .faces()
            .filter(|s| {
                bits(!s.0 & self.vertex_mask()).all(|v| !self.index.contains_key(&(s.0 | 1 << v)))
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces().all(|s| other.contains(s))
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let faces = self.faces().filter(|&s| other.contains(s)).collect();
        Self::from_closed(self.vertex_count.max(other.vertex_count), faces)
    }

    /// Faces whose vertices all lie in `mask`.
    pub fn induced(&self, mask: u64) -> SimplicialComplex {
        let faces = self.faces().filter(|s| s.0 & !mask == 0).collect();
        Self::from_closed(self.vertex_count, faces)
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        let faces = self.faces().filter(|s| s.dim() <= k).collect();
        Self::from_closed(self.vertex_count, faces)
    }

    /// Cone with apex `vertex_count` (one new vertex).
    pub fn cone(&self) -> Result<SimplicialComplex> {
        let apex = self.vertex_count;
        if apex >= MAX_VERTICES {
            return Err(Error::input("no room for a cone apex"));
        }
        let mut faces: BTreeSet<Simplex> = self.faces().collect();
        faces.insert(Simplex(1 << apex));
        faces.extend(self.faces().map(|s| Simplex(s.0 | 1 << apex)));
        Ok(Self::from_closed(apex + 1, faces))
    }

    /// Disjoint union, shifting the labels of `other` by `self.vertex_count`.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let shift = self.vertex_count;
        if shift + other.vertex_count > MAX_VERTICES {
            return Err(Error::input("disjoint union exceeds the vertex limit"));
        }
        let mut faces: BTreeSet<Simplex> = self.faces().collect();
        faces.extend(other.faces().map(|s| Simplex(s.0 << shift)));
        Ok(Self::from_closed(shift + other.vertex_count, faces))
    }

    /// Apply a vertex permutation given as `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        if perm.len() != self.vertex_count {
            return Err(Error::input("permutation length must equal vertex_count"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.vertex_count || seen >> p & 1 == 1 {
                return Err(Error::input("not a permutation"));
            }
            seen |= 1 << p;
        }
        let faces = self.faces().map(|s| Simplex(s.vertices().fold(0, |m, v| m | 1 << perm[v]))).collect();
        Ok(Self::from_closed(self.vertex_count, faces))
    }

    /// Render in the `.sc` text format (maximal faces only).
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.vertex_count);
        for s in self.maximal_faces() {
            out.push_str("simplex");
            for v in s.vertices() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// All subsets of `{0..=n}` with at most `k + 1` elements: the `k`-skeleton
/// of the `n`-simplex.
pub fn skeleton_simplex(n: usize, k: usize) -> Result<SimplicialComplex> {
    if k > n {
        return Err(Error::input(format!("skeleton dimension {k} exceeds simplex dimension {n}")));
    }
    if n + 1 > MAX_VERTICES {
        return Err(Error::input("simplex too large"));
    }
    let full = Simplex(if n + 1 == 64 { u64::MAX } else { (1 << (n + 1)) - 1 });
    Ok(SimplicialComplex::from_generators(n + 1, [full])?.skeleton(k))
}

/// Standard complexes used as fixtures and examples.
pub mod named {
    use super::*;

    fn lists(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, faces.iter().map(|f| f.iter().copied())).expect("valid fixture")
    }

    /// Boundary of the `n`-simplex (an `(n-1)`-sphere).
    pub fn sphere_boundary(n: usize) -> SimplicialComplex {
        skeleton_simplex(n, n - 1).expect("n >= 1")
    }

    /// Minimal 6-vertex triangulation of the real projective plane.
    pub fn projective_plane() -> SimplicialComplex {
        lists(
            6,
            &[
                &[0, 1, 3], &[0, 1, 5], &[0, 2, 4], &[0, 2, 5], &[0, 3, 4],
                &[1, 2, 3], &[1, 2, 4], &[1, 4, 5], &[2, 3, 5], &[3, 4, 5],
            ],
        )
    }

    /// 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
    pub fn torus() -> SimplicialComplex {
        let faces = (0..7).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]]);
        SimplicialComplex::from_lists(7, faces).expect("valid fixture")
    }

    /// Triangle `{0,1,2}` subdivided by a central vertex 3.
    pub fn disk4() -> SimplicialComplex {
        lists(4, &[&[0, 1, 3], &[1, 2, 3], &[0, 2, 3]])
    }

    /// Triangulated disks on at most six vertices.
    pub fn disks() -> Vec<(&'static str, SimplicialComplex)> {
        vec![
            ("triangle", lists(3, &[&[0, 1, 2]])),
            ("square", lists(4, &[&[0, 1, 2], &[0, 2, 3]])),
            ("cone-triangle", disk4()),
            ("strip5", lists(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]])),
            ("fan5", lists(5, &[&[0, 1, 2], &[0, 2, 3], &[0, 3, 4]])),
            ("wheel4", lists(5, &[&[0, 1, 4], &[1, 2, 4], &[2, 3, 4], &[0, 3, 4]])),
            (
                "triangle-two-interior",
                lists(5, &[&[0, 1, 3], &[1, 3, 4], &[1, 2, 4], &[0, 2, 4], &[0, 3, 4]]),
            ),
            ("wheel5", lists(6, &[&[0, 1, 5], &[1, 2, 5], &[2, 3, 5], &[3, 4, 5], &[0, 4, 5]])),
            (
                "subdivided-triangle",
                // corners 0,1,2; edge midpoints 3 (01), 4 (12), 5 (02)
                lists(6, &[&[0, 3, 5], &[1, 3, 4], &[2, 4, 5], &[3, 4, 5]]),
            ),
            ("hexagon-fan", lists(6, &[&[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5]])),
            ("strip6", lists(6, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 5]])),
            (
                "two-interior",
                // square 0,1,2,3 with interior vertices 4, 5
                lists(
                    6,
                    &[&[0, 1, 4], &[1, 2, 5], &[2, 3, 5], &[0, 3, 4], &[3, 4, 5], &[1, 4, 5]],
                ),
            ),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn closure_and_order() {
        let k = SimplicialComplex::from_lists(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(k.f_vector(), vec![3, 3, 1]);
        let order: Vec<_> = k.faces().map(|s| s.vertices().collect::<Vec<_>>()).collect();
        assert_eq!(order[3..6], [vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn skeleton_examples() {
        assert_eq!(skeleton_simplex(4, 1).unwrap().f_vector(), vec![5, 10]);
        assert_eq!(skeleton_simplex(2, 2).unwrap().f_vector(), vec![3, 3, 1]);
        assert_eq!(skeleton_simplex(3, 1).unwrap().f_vector(), vec![4, 6]);
        assert!(skeleton_simplex(2, 3).is_err());
    }

    #[test]
    fn rejects_bad_simplices() {
        assert!(Simplex::new([0, 0]).is_err());
        assert!(Simplex::new([]).is_err());
        assert!(SimplicialComplex::from_lists(2, [vec![0, 2]]).is_err());
    }

    #[test]
    fn fixtures_have_expected_f_vectors() {
        assert_eq!(projective_plane().f_vector(), vec![6, 15, 10]);
        assert_eq!(torus().f_vector(), vec![7, 21, 14]);
        for (name, d) in disks() {
            let f = d.f_vector();
            assert_eq!(f[0] as i64 - f[1] as i64 + f[2] as i64, 1, "{name} is not a disk");
        }
    }

    #[test]
    fn maximal_faces_roundtrip_text() {
        let k = disk4();
        assert_eq!(k.maximal_faces().len(), 3);
        assert!(k.to_text().starts_with("vertices 4\n"));
    }

    #[test]
    fn relabel_requires_permutation() {
        let k = disk4();
        assert!(k.relabel(&[0, 0, 1, 2]).is_err());
        let r = k.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(r.f_vector(), k.f_vector());
        assert!(r.contains(Simplex::new([0, 1, 2]).unwrap()));
    }
}
