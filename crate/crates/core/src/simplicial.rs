//! Pure simplicial complexes on at most 128 vertices, the M-complexes
//! `M_d(J)` of order ideals, shellings, f/h transforms and the
//! vertex-decomposable, flag, balanced and thin checks.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multicomplex::{binomial, ChainProduct, OrderIdeal};

/// Default facet bound for [`SimplicialComplex::is_vertex_decomposable`].
pub const DEFAULT_VD_LIMIT: usize = 20;

/// Largest facet cardinality for which faces are enumerated explicitly.
pub const MAX_FACE_ENUMERATION: usize = 24;

/// A vertex `(value, coordinate)`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Vertex {
    pub value: u32,
    pub coord: u32,
}

impl Vertex {
    pub fn new(value: u32, coord: u32) -> Self {
        Self { value, coord }
    }
}

/// `F_x` for a 1-based point `x` of `[d_1] x ... x [d_k]`.
pub fn facet_of(x: &[u32], d: &[u32]) -> Result<Vec<Vertex>> {
    if x.len() != d.len() || x.iter().zip(d).any(|(&xi, &di)| xi < 1 || xi > di) {
        return Err(Error::OutOfBounds {
            point: x.to_vec(),
            bounds: d.to_vec(),
        });
    }
    let mut out = Vec::new();
    for (i, (&xi, &di)) in x.iter().zip(d).enumerate() {
        let skip = di + 1 - xi;
        out.extend(
            (1..=di)
                .filter(|&v| v != skip)
                .map(|v| Vertex::new(v, i as u32 + 1)),
        );
    }
    Ok(out)
}

/// Thin/subthin classification of a pure complex with several facets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Thinness {
    Thin,
    Subthin,
    Neither,
}

/// Outcome of [`SimplicialComplex::verify_shelling`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingCheck {
    pub is_shelling: bool,
    /// Position in the order of the first facet that breaks the condition.
    pub violation: Option<usize>,
    /// Restriction set of each facet in order, as vertex indices.
    pub restrictions: Vec<Vec<usize>>,
    /// `h_j = #{ i : |R(F_i)| = j }`, only meaningful for shellings.
    pub h_vector: Vec<i64>,
}

/// A simplicial complex stored by its facets, each a bitset over the
/// vertex universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<u128>,
    labels: Option<Vec<Vec<u32>>>,
}

#[inline]
fn bits(mut x: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b)
        }
    })
}

/// Keeps the inclusion-maximal sets, sorted and without repetition.
fn maximal_sets(mut sets: Vec<u128>) -> Vec<u128> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut out: Vec<u128> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&f| s & f == s) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

impl SimplicialComplex {
    /// Complex generated by `facets`, given as lists of indices into
    /// `vertices`. Non-maximal and repeated sets are dropped.
    pub fn from_facets(vertices: Vec<Vertex>, facets: &[Vec<usize>]) -> Result<Self> {
        if vertices.len() > 128 {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let mut sets = Vec::with_capacity(facets.len());
        for f in facets {
            let mut s = 0u128;
            for &v in f {
                if v >= vertices.len() {
                    return Err(Error::OutOfBounds {
                        point: vec![v as u32],
                        bounds: vec![vertices.len() as u32],
                    });
                }
                s |= 1 << v;
            }
            sets.push(s);
        }
        if sets.is_empty() {
            sets.push(0);
        }
        Ok(Self {
            vertices,
            facets: maximal_sets(sets),
            labels: None,
        })
    }

    /// Complex on vertices `(1,1), (2,1), ..., (n,1)`.
    pub fn from_index_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let vertices = (1..=n as u32).map(|v| Vertex::new(v, 1)).collect();
        Self::from_facets(vertices, facets)
    }

    /// The full M-complex `M_d`.
    pub fn m_complex(d: &ChainProduct) -> Result<Self> {
        Self::m_complex_of_ideal(&OrderIdeal::full(d))
    }

    /// `M_d(J)`, one facet per point of `J` in the order of `J.indices()`.
    pub fn m_complex_of_ideal(ideal: &OrderIdeal) -> Result<Self> {
        if ideal.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let d = ideal.ambient().degrees();
        let total: u32 = d.iter().sum();
        if total > 128 {
            return Err(Error::TooManyVertices(total as usize));
        }
        let mut vertices = Vec::with_capacity(total as usize);
        let mut offset = Vec::with_capacity(d.len());
        for (i, &di) in d.iter().enumerate() {
            offset.push(vertices.len());
            vertices.extend((1..=di).map(|v| Vertex::new(v, i as u32 + 1)));
        }
        let mut facets = Vec::with_capacity(ideal.len());
        let mut labels = Vec::with_capacity(ideal.len());
        for p in ideal.points() {
            let mut s = 0u128;
            for (i, (&xi, &di)) in p.iter().zip(d).enumerate() {
                // 0-based x_i excludes the value d_i - x_i
                let skip = (di - xi - 1) as usize;
                let all = ((1u128 << di) - 1) & !(1 << skip);
                s |= all << offset[i];
            }
            facets.push(s);
            labels.push(p.iter().map(|&v| v + 1).collect());
        }
        Ok(Self {
            vertices,
            facets,
            labels: Some(labels),
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Facet `i` as vertex indices.
    pub fn facet(&self, i: usize) -> Vec<usize> {
        bits(self.facets[i]).collect()
    }

    pub fn facet_vertices(&self, i: usize) -> Vec<Vertex> {
        bits(self.facets[i]).map(|v| self.vertices[v]).collect()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        (0..self.facets.len()).map(|i| self.facet(i)).collect()
    }

    /// Source points (1-based) of the facets of an M-complex.
    pub fn labels(&self) -> Option<&[Vec<u32>]> {
        self.labels.as_deref()
    }

    /// `max |F| - 1`; `-1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn is_pure(&self) -> bool {
        let c = self.facets[0].count_ones();
        self.facets.iter().all(|f| f.count_ones() == c)
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        let s = face.iter().fold(0u128, |acc, &v| acc | 1 << v);
        self.facets.iter().any(|&f| s & f == s)
    }

    /// Checks whether `order` (a permutation of facet positions) is a
    /// shelling: for `i < j` some `v ∈ F_j \ F_i` has `F_j \ F_h = {v}`
    /// for an earlier `h`.
    pub fn verify_shelling(&self, order: &[usize]) -> Result<ShellingCheck> {
        if !self.is_pure() {
            return Err(Error::NonPure);
        }
        let r = self.facets.len();
        let mut seen = vec![false; r];
        if order.len() != r
            || order
                .iter()
                .any(|&i| i >= r || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::BadFacetOrder);
        }
        let size = self.facets[0].count_ones() as usize;
        let mut restrictions = Vec::with_capacity(r);
        let mut h = vec![0i64; size + 1];
        let mut violation = None;
        for (j, &fj) in order.iter().enumerate() {
            let fj = self.facets[fj];
            let mut restr = 0u128;
            for &fh in &order[..j] {
                let diff = fj & !self.facets[fh];
                if diff.count_ones() == 1 {
                    restr |= diff;
                }
            }
            if violation.is_none()
                && order[..j]
                    .iter()
                    .any(|&fi| fj & !self.facets[fi] & restr == 0)
            {
                violation = Some(j);
            }
            h[restr.count_ones() as usize] += 1;
            restrictions.push(bits(restr).collect());
        }
        Ok(ShellingCheck {
            is_shelling: violation.is_none(),
            violation,
            restrictions,
            h_vector: h,
        })
    }

    /// `f_i` = number of faces of cardinality `i`, `f_0 = 1`.
    pub fn f_vector(&self) -> Result<Vec<i64>> {
        let top = (self.dim() + 1) as usize;
        if top > MAX_FACE_ENUMERATION {
            return Err(Error::SizeLimit {
                what: "facet cardinality for face enumeration".into(),
                size: top,
                limit: MAX_FACE_ENUMERATION,
            });
        }
        let mut f = vec![0i64; top + 1];
        // a face is counted at the first facet containing it
        for (j, &fj) in self.facets.iter().enumerate() {
            let elems: Vec<usize> = bits(fj).collect();
            for mask in 0u32..1 << elems.len() {
                let s = elems
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .fold(0u128, |acc, (_, &v)| acc | 1 << v);
                if !self.facets[..j].iter().any(|&fi| s & fi == s) {
                    f[s.count_ones() as usize] += 1;
                }
            }
        }
        Ok(f)
    }

    pub fn h_vector(&self) -> Result<Vec<i64>> {
        Ok(h_from_f(&self.f_vector()?))
    }

    fn link_sets(sets: &[u128], v: usize) -> Vec<u128> {
        let bit = 1u128 << v;
        maximal_sets(
            sets.iter()
                .filter(|&&f| f & bit != 0)
                .map(|&f| f & !bit)
                .collect(),
        )
    }

    fn deletion_sets(sets: &[u128], v: usize) -> Vec<u128> {
        let bit = 1u128 << v;
        maximal_sets(sets.iter().map(|&f| f & !bit).collect())
    }

    /// Vertex decomposability with the default facet bound.
    pub fn is_vertex_decomposable(&self) -> Result<bool> {
        self.is_vertex_decomposable_with_limit(DEFAULT_VD_LIMIT)
    }

    pub fn is_vertex_decomposable_with_limit(&self, limit: usize) -> Result<bool> {
        if self.facets.len() > limit {
            return Err(Error::SizeLimit {
                what: "facets for vertex decomposability".into(),
                size: self.facets.len(),
                limit,
            });
        }
        let mut memo = HashMap::new();
        Ok(vd(&maximal_sets(self.facets.clone()), &mut memo))
    }

    /// All minimal non-faces have at most two vertices, i.e. every
    /// clique of the 1-skeleton is a face.
    pub fn is_flag(&self) -> bool {
        let support = self.facets.iter().fold(0u128, |a, &f| a | f);
        let n = self.vertices.len();
        let mut adj = vec![0u128; n];
        for &f in &self.facets {
            for v in bits(f) {
                adj[v] |= f & !(1 << v);
            }
        }
        let mut ok = true;
        bron_kerbosch(0, support, 0, &adj, &mut |clique| {
            if !self.facets.iter().any(|&f| clique & f == clique) {
                ok = false;
            }
            ok
        });
        ok
    }

    /// Every facet meets colour class `i` in exactly `a[i]` vertices.
    pub fn is_balanced(&self, coloring: &[usize], a: &[usize]) -> bool {
        if coloring.len() != self.vertices.len() || coloring.iter().any(|&c| c >= a.len()) {
            return false;
        }
        let mut classes = vec![0u128; a.len()];
        for (v, &c) in coloring.iter().enumerate() {
            classes[c] |= 1 << v;
        }
        self.facets.iter().all(|&f| {
            classes
                .iter()
                .zip(a)
                .all(|(&s, &ai)| (f & s).count_ones() as usize == ai)
        })
    }

    /// Colours each vertex by its coordinate (0-based).
    pub fn coordinate_coloring(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.coord as usize - 1).collect()
    }

    /// Counts how many facets contain each codimension-one face.
    pub fn thinness(&self) -> Result<Thinness> {
        if !self.is_pure() {
            return Err(Error::NonPure);
        }
        if self.facets.len() < 2 {
            return Err(Error::SingleFacet);
        }
        let mut count: HashMap<u128, u32> = HashMap::new();
        for &f in &self.facets {
            for v in bits(f) {
                *count.entry(f & !(1 << v)).or_default() += 1;
            }
        }
        Ok(if count.values().all(|&c| c == 2) {
            Thinness::Thin
        } else if count.values().all(|&c| c <= 2) {
            Thinness::Subthin
        } else {
            Thinness::Neither
        })
    }

    /// `{dim, vertices, facets, labels}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim(),
            "vertices": self.vertices.iter().map(|v| [v.value, v.coord]).collect::<Vec<_>>(),
            "facets": self.facets(),
            "labels": self.labels,
        })
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn vd(sets: &[u128], memo: &mut HashMap<Vec<u128>, bool>) -> bool {
    if sets.len() <= 1 {
        return true;
    }
    if let Some(&b) = memo.get(sets) {
        return b;
    }
    let support = sets.iter().fold(0u128, |a, &f| a | f);
    let mut result = false;
    for v in bits(support) {
        let del = SimplicialComplex::deletion_sets(sets, v);
        let c = del[0].count_ones();
        if del.iter().any(|f| f.count_ones() != c) {
            continue;
        }
        let link = SimplicialComplex::link_sets(sets, v);
        if vd(&link, memo) && vd(&del, memo) {
            result = true;
            break;
        }
    }
    memo.insert(sets.to_vec(), result);
    result
}

/// Calls `visit` on each maximal clique; stops when it returns false.
fn bron_kerbosch(
    r: u128,
    mut p: u128,
    mut x: u128,
    adj: &[u128],
    visit: &mut dyn FnMut(u128) -> bool,
) -> bool {
    if p == 0 && x == 0 {
        return visit(r);
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .unwrap();
    for v in bits(p & !adj[pivot]) {
        if !bron_kerbosch(r | 1 << v, p & adj[v], x & adj[v], adj, visit) {
            return false;
        }
        p &= !(1 << v);
        x |= 1 << v;
    }
    true
}

/// h-vector from the f-vector `(f_0, ..., f_{d+1})` of a `d`-dimensional
/// complex: `h_k = Σ_i (-1)^(k-i) C(d+1-i, k-i) f_i`.
pub fn h_from_f(f: &[i64]) -> Vec<i64> {
    let top = f.len().saturating_sub(1);
    (0..f.len())
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let c = binomial((top - i) as u128, (k - i) as u128).expect("small") as i64;
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * c * f[i]
                })
                .sum()
        })
        .collect()
}

/// Inverse of [`h_from_f`]: `f_k = Σ_i C(d+1-i, k-i) h_i`.
pub fn f_from_h(h: &[i64]) -> Vec<i64> {
    let top = h.len().saturating_sub(1);
    (0..h.len())
        .map(|k| {
            (0..=k)
                .map(|i| binomial((top - i) as u128, (k - i) as u128).expect("small") as i64 * h[i])
                .sum()
        })
        .collect()
}

/// Flag condition on an ideal of `[2]^k`: `J` is the whole cube or every
/// minimal point outside `J` has rank at most 2.
pub fn is_flag_ideal(ideal: &OrderIdeal) -> Result<bool> {
    let amb = ideal.ambient();
    if amb.degrees().iter().any(|&d| d != 2) {
        return Err(Error::InvalidPartition {
            parts: amb.degrees().to_vec(),
            reason: "flag ideals live in [2]^k".into(),
        });
    }
    if ideal.is_full() {
        return Ok(true);
    }
    Ok((0..amb.size())
        .filter(|&i| !ideal.contains_index(i))
        .filter(|&i| amb.lower_covers(i).all(|j| ideal.contains_index(j)))
        .all(|i| amb.rank_of_index(i) <= 2))
}

/// Maps a linear extension of `J` (ambient indices) to facet positions of
/// `M_d(J)`.
pub fn extension_to_facet_order(ideal: &OrderIdeal, extension: &[usize]) -> Result<Vec<usize>> {
    extension
        .iter()
        .map(|&a| {
            ideal
                .indices()
                .binary_search(&a)
                .map_err(|_| Error::BadFacetOrder)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multicomplex::order_ideals;
    use proptest::prelude::*;

    fn box_of(d: &[u32]) -> ChainProduct {
        ChainProduct::new(d.to_vec()).unwrap()
    }

    /// All faces by brute force over subsets of the vertex universe.
    fn f_vector_oracle(c: &SimplicialComplex) -> Vec<i64> {
        let n = c.vertices().len();
        let top = (c.dim() + 1) as usize;
        let mut f = vec![0i64; top + 1];
        for mask in 0u32..1 << n {
            let face: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if c.is_face(&face) {
                f[face.len()] += 1;
            }
        }
        f
    }

    #[test]
    fn facet_examples() {
        let f = facet_of(&[1, 2, 2], &[3, 3, 4]).unwrap();
        let want: Vec<Vertex> = [(1, 1), (2, 1), (1, 2), (3, 2), (1, 3), (2, 3), (4, 3)]
            .iter()
            .map(|&(v, c)| Vertex::new(v, c))
            .collect();
        assert_eq!(f, want);
        assert_eq!(facet_of(&[1], &[2]).unwrap(), vec![Vertex::new(1, 1)]);
        assert!(facet_of(&[3], &[2]).is_err());
        let m = SimplicialComplex::m_complex(&box_of(&[2, 2])).unwrap();
        let mut fs = m.facets();
        fs.sort();
        fs.dedup();
        assert_eq!(fs.len(), 4);
    }

    #[test]
    fn m_complex_matches_facet_of() {
        let d = [3, 3, 4];
        let m = SimplicialComplex::m_complex(&box_of(&d)).unwrap();
        assert_eq!(m.num_facets(), 36);
        assert_eq!(m.dim(), 6);
        for (i, x) in m.labels().unwrap().iter().enumerate() {
            assert_eq!(m.facet_vertices(i), facet_of(x, &d).unwrap());
        }
        assert!(m.is_balanced(&m.coordinate_coloring(), &[2, 2, 3]));
        assert!(!m.is_balanced(&m.coordinate_coloring(), &[3, 2, 2]));
    }

    #[test]
    fn trivial_complexes() {
        let m = SimplicialComplex::m_complex(&box_of(&[1, 1, 1])).unwrap();
        assert_eq!(m.num_facets(), 1);
        assert_eq!(m.dim(), -1);
        assert_eq!(m.f_vector().unwrap(), vec![1]);
        assert_eq!(m.h_vector().unwrap(), vec![1]);
        let chk = m.verify_shelling(&[0]).unwrap();
        assert!(chk.is_shelling);
        assert_eq!(chk.h_vector, vec![1]);
        let m23 = SimplicialComplex::m_complex(&box_of(&[2, 3])).unwrap();
        assert_eq!((m23.dim(), m23.num_facets()), (2, 6));
    }

    #[test]
    fn triangle_boundary() {
        let t =
            SimplicialComplex::from_index_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(t.f_vector().unwrap(), vec![1, 3, 3]);
        assert_eq!(t.h_vector().unwrap(), vec![1, 1, 1]);
        assert!(!t.is_flag());
        assert_eq!(t.thinness().unwrap(), Thinness::Thin);
        let simplex = SimplicialComplex::from_index_facets(3, &[vec![0, 1, 2]]).unwrap();
        assert!(simplex.is_flag());
        assert!(simplex.is_vertex_decomposable().unwrap());
        assert_eq!(simplex.thinness(), Err(Error::SingleFacet));
    }

    #[test]
    fn two_disjoint_edges_are_not_vd() {
        let c = SimplicialComplex::from_index_facets(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!c.is_vertex_decomposable().unwrap());
        assert!(!c.verify_shelling(&[0, 1]).unwrap().is_shelling);
    }

    #[test]
    fn bad_order_on_a_path() {
        // path a-b-c-d: the order ab, cd, bc is not a shelling
        let c =
            SimplicialComplex::from_index_facets(4, &[vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let pos = |f: Vec<usize>| c.facets().iter().position(|g| *g == f).unwrap();
        let (ab, bc, cd) = (pos(vec![0, 1]), pos(vec![1, 2]), pos(vec![2, 3]));
        let bad = c.verify_shelling(&[ab, cd, bc]).unwrap();
        assert!(!bad.is_shelling);
        assert_eq!(bad.violation, Some(1));
        let good = c.verify_shelling(&[ab, bc, cd]).unwrap();
        assert!(good.is_shelling);
        assert_eq!(good.h_vector, vec![1, 2, 0]);
        assert_eq!(c.verify_shelling(&[ab, ab, cd]), Err(Error::BadFacetOrder));
        assert!(c.is_vertex_decomposable().unwrap());
    }

    #[test]
    fn non_pure_rejected() {
        let c = SimplicialComplex::from_index_facets(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(c.verify_shelling(&[0, 1]), Err(Error::NonPure));
        assert_eq!(c.thinness(), Err(Error::NonPure));
    }

    fn check_ideal(ideal: &OrderIdeal, all_extensions: bool) {
        let m = SimplicialComplex::m_complex_of_ideal(ideal).unwrap();
        let want = ideal.f_polynomial().unwrap();
        let want_vec: Vec<i64> = (0..=(m.dim() + 1) as usize)
            .map(|i| want.coeff(i))
            .collect();
        let f = m.f_vector().unwrap();
        assert_eq!(f, f_vector_oracle(&m));
        assert_eq!(h_from_f(&f), want_vec);
        let mut check = |ext: Vec<usize>| {
            let order = extension_to_facet_order(ideal, &ext).unwrap();
            let chk = m.verify_shelling(&order).unwrap();
            assert!(chk.is_shelling, "{ext:?}");
            assert_eq!(chk.h_vector, want_vec);
        };
        if all_extensions {
            ideal.linear_extensions().for_each(&mut check);
        } else {
            let mut rng = rand::thread_rng();
            for _ in 0..10 {
                check(ideal.random_linear_extension(&mut rng));
            }
        }
    }

    #[test]
    fn linear_extensions_shell_small_ideals() {
        for d in [vec![2, 3], vec![2, 2, 2], vec![2, 2]] {
            for ideal in order_ideals(&box_of(&d), false) {
                check_ideal(&ideal, true);
            }
        }
        let m23 = SimplicialComplex::m_complex(&box_of(&[2, 3])).unwrap();
        assert_eq!(m23.h_vector().unwrap(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn sampled_ideals_of_334() {
        use rand::SeedableRng;
        let amb = box_of(&[3, 3, 4]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..15 {
            let ideal = OrderIdeal::random(&amb, &mut rng);
            if !ideal.is_empty() {
                check_ideal(&ideal, false);
            }
        }
    }

    #[test]
    fn vertex_decomposable_ideals() {
        for d in [
            vec![2, 2],
            vec![2, 3],
            vec![4, 4],
            vec![2, 2, 2],
            vec![2, 2, 2, 2],
            vec![2, 2, 4],
        ] {
            for ideal in order_ideals(&box_of(&d), false) {
                let m = SimplicialComplex::m_complex_of_ideal(&ideal).unwrap();
                assert!(
                    m.is_vertex_decomposable().unwrap(),
                    "{d:?} {:?}",
                    ideal.points()
                );
            }
        }
    }

    #[test]
    fn vd_limit_is_an_error() {
        let m = SimplicialComplex::m_complex(&box_of(&[3, 3, 3])).unwrap();
        assert!(matches!(
            m.is_vertex_decomposable(),
            Err(Error::SizeLimit { size: 27, .. })
        ));
    }

    #[test]
    fn flag_equivalence_on_cube() {
        for k in 1..=3 {
            for ideal in order_ideals(&box_of(&vec![2; k]), false) {
                let m = SimplicialComplex::m_complex_of_ideal(&ideal).unwrap();
                assert_eq!(
                    m.is_flag(),
                    is_flag_ideal(&ideal).unwrap(),
                    "{:?}",
                    ideal.points()
                );
            }
        }
        let j = OrderIdeal::from_points(&box_of(&[2, 2, 2]), &[[1, 1, 0], [1, 0, 1], [0, 1, 1]])
            .unwrap();
        assert!(!is_flag_ideal(&j).unwrap());
        assert!(is_flag_ideal(&OrderIdeal::full(&box_of(&[3]))).is_err());
    }

    #[test]
    fn thin_iff_full_box() {
        for d in [vec![2, 3], vec![2, 2, 2], vec![3, 3]] {
            for ideal in order_ideals(&box_of(&d), false) {
                let m = SimplicialComplex::m_complex_of_ideal(&ideal).unwrap();
                let t = m.thinness();
                if ideal.len() == 1 {
                    assert_eq!(t, Err(Error::SingleFacet));
                } else if ideal.is_full() {
                    assert_eq!(t, Ok(Thinness::Thin));
                } else {
                    assert_eq!(t, Ok(Thinness::Subthin));
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let m = SimplicialComplex::m_complex(&box_of(&[2, 2])).unwrap();
        let v = m.to_json();
        assert_eq!(v["dim"], 1);
        assert_eq!(v["vertices"][0], serde_json::json!([1, 1]));
        assert_eq!(v["facets"].as_array().unwrap().len(), 4);
        assert_eq!(v["labels"][0], serde_json::json!([1, 1]));
    }

    proptest! {
        #[test]
        fn h_f_round_trip(f in proptest::collection::vec(-50i64..50, 1..9)) {
            prop_assert_eq!(f_from_h(&h_from_f(&f)), f.clone());
            prop_assert_eq!(h_from_f(&f_from_h(&f)), f);
        }
    }
}
