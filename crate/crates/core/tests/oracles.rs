//! Definitional brute-force oracles checked against the library.
//!
//! Every oracle works on plain `Vec<bool>` sets and enumerates the
//! definition directly, sharing no search code with the crate.

use graded_convexity::chain_map::{search_hae, verify_hae, HaeSearch};
use graded_convexity::corpus::{random_complex, random_set_system, rng};
use graded_convexity::homology::{named as complexes, reduced_betti, Simplex, SimplicialComplex};
use graded_convexity::params::{self, colorful_helly, partition_number, CliqueMode};
use graded_convexity::set_system::named;
use graded_convexity::{Budget, SetSystem};

type Set = Vec<bool>;

struct Plain {
    ground: usize,
    members: Vec<Set>,
}

impl Plain {
    fn of(f: &SetSystem) -> Self {
        let members = f.members().iter().map(|m| (0..f.ground_size()).map(|x| m.contains(x)).collect()).collect();
        Plain { ground: f.ground_size(), members }
    }

    fn meet(&self, sel: &[usize]) -> Set {
        let mut out = vec![true; self.ground];
        for &i in sel {
            for x in 0..self.ground {
                out[x] &= self.members[i][x];
            }
        }
        out
    }

    fn clique(&self, sel: &[usize]) -> bool {
        self.meet(sel).iter().any(|&b| b)
    }

    fn cwise(&self, sel: &[usize], c: usize) -> bool {
        subsets(sel).into_iter().filter(|s| s.len() <= c).all(|s| self.clique(&s))
    }

    fn hull(&self, p: &Set) -> Set {
        let mut out = vec![true; self.ground];
        for m in &self.members {
            if (0..self.ground).all(|x| !p[x] || m[x]) {
                for x in 0..self.ground {
                    out[x] &= m[x];
                }
            }
        }
        out
    }
}

fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0u32..1 << items.len())
        .map(|m| items.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, t)| t.clone()).collect())
        .collect()
}

fn indicator(ground: usize, elems: &[usize]) -> Set {
    let mut s = vec![false; ground];
    for &e in elems {
        s[e] = true;
    }
    s
}

fn meets(a: &Set, b: &Set) -> bool {
    a.iter().zip(b).any(|(x, y)| *x && *y)
}

/// Smallest `h ≥ 1` such that every subfamily whose `h`-subfamilies all
/// intersect is itself a clique; 0 for the empty family.
fn helly_oracle(p: &Plain) -> u64 {
    let all: Vec<usize> = (0..p.members.len()).collect();
    if all.is_empty() {
        return 0;
    }
    (1..=all.len())
        .find(|&h| {
            subsets(&all).iter().all(|g| !p.cwise(g, h) || p.clique(g))
        })
        .expect("h = member count always works") as u64
}

fn minimal_obstructions_oracle(p: &Plain) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..p.members.len()).collect();
    let mut out: Vec<Vec<usize>> = subsets(&all)
        .into_iter()
        .filter(|g| !p.clique(g) && subsets(g).iter().filter(|s| s.len() < g.len()).all(|s| p.clique(s)))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// One more than the largest point set with no split into two nonempty
/// parts with intersecting hulls.
fn radon_oracle(p: &Plain) -> u64 {
    let pts: Vec<usize> = (0..p.ground).collect();
    let worst = subsets(&pts)
        .into_iter()
        .filter(|s| !s.is_empty())
        .filter(|s| {
            !subsets(s).iter().any(|a| {
                let b: Vec<usize> = s.iter().copied().filter(|x| !a.contains(x)).collect();
                !a.is_empty() && !b.is_empty() && meets(&p.hull(&indicator(p.ground, a)), &p.hull(&indicator(p.ground, &b)))
            })
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0);
    worst as u64 + 1
}

/// Multisets of size `r` over `0..g` as sorted vectors.
fn multisets(g: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(g: usize, r: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in from..g {
            cur.push(x);
            go(g, r, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, r, 0, &mut Vec::new(), &mut out);
    out
}

fn k_good(p: &Plain, ms: &[usize], k: usize) -> bool {
    let r = ms.len();
    let total = k.pow(r as u32);
    (0..total).any(|mut code| {
        let mut parts = vec![Vec::new(); k];
        for &x in ms {
            parts[code % k].push(x);
            code /= k;
        }
        if parts.iter().any(Vec::is_empty) {
            return false;
        }
        let mut common = vec![true; p.ground];
        for part in &parts {
            let h = p.hull(&indicator(p.ground, part));
            for x in 0..p.ground {
                common[x] &= h[x];
            }
        }
        common.iter().any(|&b| b)
    })
}

/// One more than the largest multiset with no partition into `k` nonempty
/// parts whose hulls share a point. Beyond `(k−1)·g` points some element
/// repeats `k` times, so larger sizes never need checking.
fn partition_oracle(p: &Plain, k: usize) -> u64 {
    let bound = (k - 1) * p.ground;
    let worst = (1..=bound).filter(|&r| multisets(p.ground, r).iter().any(|ms| !k_good(p, ms, k))).max().unwrap_or(0);
    worst as u64 + 1
}

/// Smallest `m ≥ start` with no subfamily and surjective `m`-coloring whose
/// rainbow selections all satisfy `pred` while no color class does.
fn colorful_oracle(p: &Plain, pred: &dyn Fn(&[usize]) -> bool, start: usize) -> u64 {
    let all: Vec<usize> = (0..p.members.len()).collect();
    let refuted = |m: usize| {
        subsets(&all).iter().filter(|g| g.len() >= m).any(|g| {
            (0..m.pow(g.len() as u32)).any(|mut code| {
                let mut classes = vec![Vec::new(); m];
                for &i in g {
                    classes[code % m].push(i);
                    code /= m;
                }
                if classes.iter().any(Vec::is_empty) || classes.iter().any(|c| pred(c)) {
                    return false;
                }
                let mut rainbows = vec![Vec::new()];
                for c in &classes {
                    rainbows = rainbows
                        .into_iter()
                        .flat_map(|r: Vec<usize>| c.iter().map(move |&i| [r.clone(), vec![i]].concat()))
                        .collect();
                }
                rainbows.iter().all(|r| pred(r))
            })
        })
    };
    (start..).find(|&m| !refuted(m)).expect("terminates above the member count") as u64
}

fn corpus(seed: u64, count: usize, ground: usize, members: usize) -> Vec<SetSystem> {
    let mut r = rng(seed);
    (0..count).map(|_| random_set_system(&mut r, ground, members)).collect()
}

fn curated() -> Vec<SetSystem> {
    vec![named::star(3), named::star(4), named::intervals(3), named::whole(1), named::whole(3)]
}

#[test]
fn helly_and_obstructions_match_definition() {
    let b = Budget::default();
    for f in corpus(11, 300, 5, 5).into_iter().chain(curated()) {
        let p = Plain::of(&f);
        assert_eq!(params::helly(&f, &b).unwrap(), helly_oracle(&p), "{}", f.to_text());
        let obs = params::minimal_obstructions(&f, &b).unwrap();
        assert!(obs.windows(2).all(|w| w[0].size() <= w[1].size()));
        let mut got: Vec<Vec<usize>> = obs.into_iter().map(|o| o.selector.indices().to_vec()).collect();
        got.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        assert_eq!(got, minimal_obstructions_oracle(&p), "{}", f.to_text());
    }
}

#[test]
fn radon_matches_definition() {
    let b = Budget::default();
    for f in corpus(12, 300, 6, 5).into_iter().chain(curated()) {
        assert_eq!(params::radon(&f, &b).unwrap(), radon_oracle(&Plain::of(&f)), "{}", f.to_text());
    }
}

#[test]
fn radon_witness_has_no_partition() {
    let b = Budget::default();
    for f in corpus(13, 100, 6, 5) {
        let p = Plain::of(&f);
        let w = params::radon_witness(&f, &b).unwrap();
        assert_eq!(w.len() as u64 + 1, params::radon(&f, &b).unwrap());
        for a in subsets(&w) {
            let rest: Vec<usize> = w.iter().copied().filter(|x| !a.contains(x)).collect();
            if !a.is_empty() && !rest.is_empty() {
                assert!(!meets(&p.hull(&indicator(p.ground, &a)), &p.hull(&indicator(p.ground, &rest))));
            }
        }
    }
}

#[test]
fn partition_numbers_match_definition() {
    let b = Budget::default();
    for f in corpus(14, 60, 3, 4).into_iter().chain([named::star(3), named::intervals(3), named::whole(1)]) {
        let p = Plain::of(&f);
        for k in 2..=3 {
            assert_eq!(partition_number(&f, k, &b).unwrap(), partition_oracle(&p, k), "k={k}\n{}", f.to_text());
        }
    }
    let x = named::whole(1);
    assert_eq!(partition_number(&x, 4, &b).unwrap(), partition_oracle(&Plain::of(&x), 4));
}

#[test]
fn colorful_matches_definition() {
    let b = Budget::default();
    for f in corpus(15, 80, 4, 4).into_iter().chain([named::star(3), named::intervals(2)]) {
        let p = Plain::of(&f);
        let plain = colorful_oracle(&p, &|s| p.clique(s), 1);
        assert_eq!(colorful_helly(&f, CliqueMode::Plain, &b).unwrap(), plain, "{}", f.to_text());
        for c in 1..=3 {
            let want = colorful_oracle(&p, &|s| p.cwise(s, c), c);
            assert_eq!(colorful_helly(&f, CliqueMode::CWise(c), &b).unwrap(), want, "c={c}\n{}", f.to_text());
        }
    }
}

#[test]
fn cwise_predicate_matches_definition() {
    for f in corpus(16, 100, 5, 5) {
        let p = Plain::of(&f);
        let all: Vec<usize> = (0..f.len()).collect();
        for g in subsets(&all) {
            let sel = graded_convexity::Selector::new(g.iter().copied());
            assert_eq!(f.is_clique(&sel).unwrap(), p.clique(&g));
            for c in 1..=4 {
                assert_eq!(f.is_cwise_clique(&sel, c).unwrap(), p.cwise(&g, c), "c={c} g={g:?}\n{}", f.to_text());
            }
        }
    }
}

/// GF(2) rank by dense elimination on `Vec<Vec<bool>>`.
fn rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Faces by dimension, rebuilt from the maximal faces as vertex lists.
fn faces_by_dim(k: &SimplicialComplex) -> Vec<Vec<Vec<usize>>> {
    let mut all: Vec<Vec<usize>> = Vec::new();
    for m in k.maximal_faces() {
        let vs: Vec<usize> = m.vertices().collect();
        for s in subsets(&vs) {
            if !s.is_empty() && !all.contains(&s) {
                all.push(s);
            }
        }
    }
    let top = all.iter().map(Vec::len).max().unwrap_or(0);
    let mut by: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top];
    for s in all {
        by[s.len() - 1].push(s);
    }
    by
}

/// Reduced Betti numbers with the augmentation map in dimension 0.
fn betti_oracle(k: &SimplicialComplex) -> Vec<usize> {
    let by = faces_by_dim(k);
    let bd_rank = |d: usize| -> usize {
        if d == 0 {
            return usize::from(!by[0].is_empty());
        }
        if d >= by.len() {
            return 0;
        }
        let rows = by[d]
            .iter()
            .map(|s| by[d - 1].iter().map(|t| t.iter().all(|v| s.contains(v))).collect())
            .collect();
        rank(rows)
    };
    (0..by.len()).map(|d| by[d].len() - bd_rank(d) - bd_rank(d + 1)).collect()
}

#[test]
fn betti_matches_dense_elimination() {
    let mut r = rng(21);
    for _ in 0..200 {
        let k = random_complex(&mut r, 7, 6);
        if k.is_empty() {
            continue;
        }
        assert_eq!(reduced_betti(&k).0, betti_oracle(&k), "{}", k.to_text());
    }
    for k in [complexes::projective_plane(), complexes::torus(), complexes::sphere_boundary(4)] {
        assert_eq!(reduced_betti(&k).0, betti_oracle(&k));
    }
}

/// Almost-embedding check straight from the definition: boundary
/// commutation, odd vertex supports, and vertex-disjoint supports for
/// vertex-disjoint source faces.
fn hae_oracle(f: &graded_convexity::chain_map::ChainMap) -> bool {
    let src: Vec<Simplex> = f.source().faces().collect();
    let image = |s: Simplex| -> Vec<Simplex> { f.image(s).expect("total").simplices().collect() };
    let toggle = |acc: &mut Vec<Simplex>, s: Simplex| {
        if let Some(i) = acc.iter().position(|&t| t == s) {
            acc.remove(i);
        } else {
            acc.push(s);
        }
    };
    for &s in &src {
        if s.dim() == 0 {
            continue;
        }
        let mut lhs = Vec::new();
        for t in image(s) {
            for face in t.facets() {
                toggle(&mut lhs, face);
            }
        }
        let mut rhs = Vec::new();
        for facet in s.facets() {
            for t in image(facet) {
                toggle(&mut rhs, t);
            }
        }
        lhs.sort();
        rhs.sort();
        if lhs != rhs {
            return false;
        }
    }
    let support = |s: Simplex| -> Vec<usize> {
        let mut v: Vec<usize> = image(s).into_iter().flat_map(|t| t.vertices().collect::<Vec<_>>()).collect();
        v.sort();
        v.dedup();
        v
    };
    for &s in src.iter().filter(|s| s.dim() == 0) {
        if image(s).len() % 2 == 0 {
            return false;
        }
    }
    for (i, &a) in src.iter().enumerate() {
        for &b in &src[i + 1..] {
            let disjoint = a.vertices().all(|v| !b.vertices().any(|w| w == v));
            if disjoint && support(a).iter().any(|v| support(b).contains(v)) {
                return false;
            }
        }
    }
    true
}

#[test]
fn search_certificates_pass_definitional_check() {
    let b = Budget::default();
    let k4 = graded_convexity::homology::skeleton_simplex(3, 1).unwrap();
    let mut found = 0;
    for (name, disk) in complexes::disks() {
        if let HaeSearch::Found(map) = search_hae(&k4, &disk, &b).unwrap().result {
            assert!(verify_hae(&map).is_ok(), "{name}");
            assert!(hae_oracle(&map), "{name}");
            found += 1;
        }
    }
    assert!(found >= 1);
    let circle = complexes::sphere_boundary(2);
    assert_eq!(circle.dim(), Some(1));
    let mut r = rng(31);
    for _ in 0..40 {
        let target = random_complex(&mut r, 6, 4);
        if target.dim().is_none_or(|d| d < 1) {
            continue;
        }
        if let HaeSearch::Found(map) = search_hae(&circle, &target, &b).unwrap().result {
            assert!(hae_oracle(&map), "{}", target.to_text());
        }
    }
}

/// Whether any almost-embedding exists, by assigning every source face (in
/// dimension order) each chain of the target in turn and rejecting as soon
/// as a condition among assigned faces fails.
fn hae_exists_oracle(src: &SimplicialComplex, dst: &SimplicialComplex) -> bool {
    let faces: Vec<Simplex> = src.faces().collect();
    let by_dim: Vec<Vec<Simplex>> = (0..=dst.dim().map_or(0, |d| d + 1)).map(|d| dst.faces_of_dim(d).to_vec()).collect();

    fn support(chain: &[Simplex]) -> u64 {
        chain.iter().fold(0, |m, s| m | s.mask())
    }

    fn boundary(chain: &[Simplex]) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = Vec::new();
        for s in chain {
            for f in s.facets() {
                match out.iter().position(|&t| t == f) {
                    Some(i) => {
                        out.swap_remove(i);
                    }
                    None => out.push(f),
                }
            }
        }
        out.sort();
        out
    }

    fn go(i: usize, faces: &[Simplex], by_dim: &[Vec<Simplex>], images: &mut Vec<Vec<Simplex>>) -> bool {
        if i == faces.len() {
            return true;
        }
        let s = faces[i];
        let pool = &by_dim[s.dim()];
        for code in 0u64..1 << pool.len() {
            let chain: Vec<Simplex> = (0..pool.len()).filter(|b| code >> b & 1 == 1).map(|b| pool[b]).collect();
            if s.dim() == 0 && chain.len().is_multiple_of(2) {
                continue;
            }
            if s.dim() > 0 {
                let mut want: Vec<Simplex> = Vec::new();
                for f in s.facets() {
                    let j = faces.iter().position(|&t| t == f).expect("closed");
                    for &t in &images[j] {
                        match want.iter().position(|&u| u == t) {
                            Some(p) => {
                                want.swap_remove(p);
                            }
                            None => want.push(t),
                        }
                    }
                }
                want.sort();
                if boundary(&chain) != want {
                    continue;
                }
            }
            let sup = support(&chain);
            let clash = (0..i).any(|j| faces[j].mask() & s.mask() == 0 && support(&images[j]) & sup != 0);
            if clash {
                continue;
            }
            images.push(chain);
            if go(i + 1, faces, by_dim, images) {
                return true;
            }
            images.pop();
        }
        false
    }

    go(0, &faces, &by_dim, &mut Vec::new())
}

#[test]
fn search_is_complete_on_small_pairs() {
    let mut r = rng(41);
    let mut seen = [0usize; 2];
    for _ in 0..300 {
        let src = random_complex(&mut r, 4, 3);
        let dst = random_complex(&mut r, 5, 3);
        let (Some(ds), Some(dd)) = (src.dim(), dst.dim()) else { continue };
        if ds > dd || dst.f_vector().iter().any(|&n| n > 10) {
            continue;
        }
        let want = hae_exists_oracle(&src, &dst);
        let got = search_hae(&src, &dst, &Budget::default()).unwrap();
        assert_eq!(matches!(got.result, HaeSearch::Found(_)), want, "{}\n->\n{}", src.to_text(), dst.to_text());
        assert!(!matches!(got.result, HaeSearch::BudgetExceeded));
        seen[usize::from(want)] += 1;
    }
    // both outcomes must actually occur
    assert!(seen[0] > 10 && seen[1] > 10, "{seen:?}");
    let k5 = graded_convexity::homology::skeleton_simplex(4, 1).unwrap();
    let k4 = graded_convexity::homology::skeleton_simplex(3, 1).unwrap();
    let disk = complexes::disk4();
    assert!(!hae_exists_oracle(&k5, &disk));
    assert!(hae_exists_oracle(&k4, &disk));
}

#[test]
fn k5_misses_every_bundled_disk_by_brute_force() {
    let k5 = graded_convexity::homology::skeleton_simplex(4, 1).unwrap();
    for (name, disk) in complexes::disks() {
        assert!(!hae_exists_oracle(&k5, &disk), "{name}");
        let out = search_hae(&k5, &disk, &Budget::default()).unwrap();
        assert_eq!(out.result, HaeSearch::ExhaustedNone, "{name}");
    }
}
