//! Finite multicomplexes, viewed as order ideals of a product of chains.
//!
//! Points are 0-based: the chain product with degrees `d` is
//! `{0..d_1-1} x ... x {0..d_k-1}` and the rank of a point is the sum of its
//! entries. Points are indexed in mixed radix with the last coordinate
//! varying fastest, so index order is a linear extension of the product order.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// The product of chains `[d_1] x ... x [d_k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ChainProduct {
    d: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
}

impl TryFrom<Vec<u32>> for ChainProduct {
    type Error = Error;
    fn try_from(d: Vec<u32>) -> Result<Self> {
        ChainProduct::new(d)
    }
}

impl From<ChainProduct> for Vec<u32> {
    fn from(c: ChainProduct) -> Self {
        c.d
    }
}

impl ChainProduct {
    pub fn new(d: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = d.iter().find(|&&x| x == 0) {
            return Err(Error::InvalidPartition {
                parts: d.clone(),
                reason: format!("chain length {bad} must be positive"),
            });
        }
        let mut strides = vec![1usize; d.len()];
        for i in (0..d.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * d[i + 1] as usize;
        }
        let size = d.iter().map(|&x| x as usize).product();
        Ok(Self { d, strides, size })
    }

    /// `{0..e_1} x ... x {0..e_k}`.
    pub fn from_exponents(e: &[u32]) -> Self {
        Self::new(e.iter().map(|&x| x + 1).collect()).expect("positive lengths")
    }

    pub fn degrees(&self) -> &[u32] {
        &self.d
    }

    /// Largest value of each coordinate, `d_i - 1`.
    pub fn exponents(&self) -> Vec<u32> {
        self.d.iter().map(|&x| x - 1).collect()
    }

    pub fn dim(&self) -> usize {
        self.d.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        x.len() == self.d.len() && x.iter().zip(&self.d).all(|(&a, &b)| a < b)
    }

    fn check(&self, x: &[u32]) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                point: x.to_vec(),
                bounds: self.d.clone(),
            })
        }
    }

    pub fn index(&self, x: &[u32]) -> Result<usize> {
        self.check(x)?;
        Ok(self.index_unchecked(x))
    }

    #[inline]
    pub(crate) fn index_unchecked(&self, x: &[u32]) -> usize {
        x.iter()
            .zip(&self.strides)
            .map(|(&a, &s)| a as usize * s)
            .sum()
    }

    pub fn point(&self, mut idx: usize) -> Vec<u32> {
        let mut x = vec![0; self.d.len()];
        for (i, &s) in self.strides.iter().enumerate() {
            x[i] = (idx / s) as u32;
            idx %= s;
        }
        x
    }

    /// Coordinate `i` of the point with index `idx`.
    #[inline]
    pub fn coord(&self, idx: usize, i: usize) -> u32 {
        ((idx / self.strides[i]) % self.d[i] as usize) as u32
    }

    pub fn rank_of_index(&self, idx: usize) -> u32 {
        (0..self.d.len()).map(|i| self.coord(idx, i)).sum()
    }

    pub fn top(&self) -> Vec<u32> {
        self.exponents()
    }

    /// Indices of the points covered by `idx`.
    pub fn lower_covers(&self, idx: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.d.len())
            .filter(move |&i| self.coord(idx, i) > 0)
            .map(move |i| idx - self.strides[i])
    }

    /// Indices of the points covering `idx`, with the raised coordinate.
    pub fn upper_covers(&self, idx: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.d.len())
            .filter(move |&i| self.coord(idx, i) + 1 < self.d[i])
            .map(move |i| (i, idx + self.strides[i]))
    }

    pub fn leq_index(&self, a: usize, b: usize) -> bool {
        (0..self.d.len()).all(|i| self.coord(a, i) <= self.coord(b, i))
    }

    /// `sum_x q^rank(x)` over the whole box, i.e. `prod [d_i]_q`.
    pub fn rank_polynomial(&self) -> IntPolynomial {
        IntPolynomial::q_analog_product(&self.exponents())
    }
}

/// Componentwise minimum, the meet in a product of chains.
pub fn meet(x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().zip(y).map(|(&a, &b)| a.min(b)).collect()
}

/// Componentwise maximum, the join in a product of chains.
pub fn join(x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().zip(y).map(|(&a, &b)| a.max(b)).collect()
}

pub fn leq(x: &[u32], y: &[u32]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

/// A downward closed subset of a [`ChainProduct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderIdeal {
    ambient: ChainProduct,
    member: Vec<bool>,
    indices: Vec<usize>,
}

impl OrderIdeal {
    /// Downward closure of `points`.
    pub fn from_points<P: AsRef<[u32]>>(ambient: &ChainProduct, points: &[P]) -> Result<Self> {
        let mut idx = Vec::with_capacity(points.len());
        for p in points {
            idx.push(ambient.index(p.as_ref())?);
        }
        Ok(Self::closure_of_indices(ambient, &idx))
    }

    pub(crate) fn closure_of_indices(ambient: &ChainProduct, seeds: &[usize]) -> Self {
        let mut member = vec![false; ambient.size()];
        let mut stack: Vec<usize> = Vec::new();
        for &s in seeds {
            if !member[s] {
                member[s] = true;
                stack.push(s);
            }
        }
        while let Some(x) = stack.pop() {
            for y in ambient.lower_covers(x) {
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        Self::from_membership(ambient.clone(), member)
    }

    fn from_membership(ambient: ChainProduct, member: Vec<bool>) -> Self {
        let indices = member
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
            .collect();
        Self {
            ambient,
            member,
            indices,
        }
    }

    /// The whole box.
    pub fn full(ambient: &ChainProduct) -> Self {
        Self::from_membership(ambient.clone(), vec![true; ambient.size()])
    }

    /// Checks downward closure without closing.
    pub fn is_order_ideal<P: AsRef<[u32]>>(ambient: &ChainProduct, points: &[P]) -> bool {
        let mut member = vec![false; ambient.size()];
        for p in points {
            match ambient.index(p.as_ref()) {
                Ok(i) => member[i] = true,
                Err(_) => return false,
            }
        }
        (0..ambient.size())
            .filter(|&i| member[i])
            .all(|i| ambient.lower_covers(i).all(|j| member[j]))
    }

    /// Wraps a membership set that is already known to be downward closed;
    /// returns `None` if it is not.
    pub fn from_indices_checked(ambient: &ChainProduct, indices: &[usize]) -> Option<Self> {
        let mut member = vec![false; ambient.size()];
        for &i in indices {
            if i >= ambient.size() {
                return None;
            }
            member[i] = true;
        }
        let closed = indices
            .iter()
            .all(|&i| ambient.lower_covers(i).all(|j| member[j]));
        closed.then(|| Self::from_membership(ambient.clone(), member))
    }

    pub fn ambient(&self) -> &ChainProduct {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.indices.len() == self.ambient.size()
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.ambient.contains(x) && self.member[self.ambient.index_unchecked(x)]
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        self.member[i]
    }

    /// Ambient indices of the points, increasing.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Points sorted lexicographically (index order).
    pub fn points(&self) -> Vec<Vec<u32>> {
        self.indices
            .iter()
            .map(|&i| self.ambient.point(i))
            .collect()
    }

    pub fn maxima_indices(&self) -> Vec<usize> {
        self.indices
            .iter()
            .copied()
            .filter(|&i| self.ambient.upper_covers(i).all(|(_, j)| !self.member[j]))
            .collect()
    }

    /// Points with no strictly larger point in the ideal.
    pub fn maxima(&self) -> Vec<Vec<u32>> {
        self.maxima_indices()
            .into_iter()
            .map(|i| self.ambient.point(i))
            .collect()
    }

    /// `sum_{x in J} q^rank(x)`.
    pub fn f_polynomial(&self) -> Result<IntPolynomial> {
        if self.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let mut c: Vec<i64> = Vec::new();
        for &i in &self.indices {
            let r = self.ambient.rank_of_index(i) as usize;
            if c.len() <= r {
                c.resize(r + 1, 0);
            }
            c[r] += 1;
        }
        Ok(IntPolynomial::from_coeffs(c))
    }

    /// True iff `order` lists every point exactly once and never puts a
    /// point after a larger one.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.len() {
            return false;
        }
        let mut seen = vec![false; self.ambient.size()];
        for &x in order {
            if x >= self.ambient.size() || !self.member[x] || seen[x] {
                return false;
            }
            if self.ambient.lower_covers(x).any(|y| !seen[y]) {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// Lazily enumerates every linear extension (as ambient indices).
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }

    /// Number of linear extensions, saturating at `u128::MAX`. Uses a
    /// dynamic program over the sub-ideals, so the cost is the number of
    /// order ideals of `J`, not the number of extensions.
    pub fn count_linear_extensions(&self) -> u128 {
        let n = self.len();
        if n > 128 {
            return u128::MAX;
        }
        let pos: HashMap<usize, usize> = self
            .indices
            .iter()
            .enumerate()
            .map(|(k, &i)| (i, k))
            .collect();
        let below: Vec<u128> = self
            .indices
            .iter()
            .map(|&i| {
                self.ambient
                    .lower_covers(i)
                    .fold(0u128, |m, j| m | 1 << pos[&j])
            })
            .collect();
        let full: u128 = if n == 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        };
        let mut memo: HashMap<u128, u128> = HashMap::new();
        fn go(set: u128, full: u128, below: &[u128], memo: &mut HashMap<u128, u128>) -> u128 {
            if set == full {
                return 1;
            }
            if let Some(&v) = memo.get(&set) {
                return v;
            }
            let mut total = 0u128;
            for (k, &b) in below.iter().enumerate() {
                if set >> k & 1 == 0 && b & !set == 0 {
                    total = total.saturating_add(go(set | 1 << k, full, below, memo));
                }
            }
            memo.insert(set, total);
            total
        }
        go(0, full, &below, &mut memo)
    }

    /// A random linear extension: repeatedly picks a uniformly random
    /// minimal element among the remaining points.
    pub fn random_linear_extension<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<usize> {
        let mut missing: HashMap<usize, usize> = self
            .indices
            .iter()
            .map(|&i| (i, self.ambient.lower_covers(i).count()))
            .collect();
        let mut ready: Vec<usize> = self
            .indices
            .iter()
            .copied()
            .filter(|i| missing[i] == 0)
            .collect();
        let mut order = Vec::with_capacity(self.len());
        while !ready.is_empty() {
            let k = rng.gen_range(0..ready.len());
            let x = ready.swap_remove(k);
            order.push(x);
            for (_, y) in self.ambient.upper_covers(x) {
                if let Some(c) = missing.get_mut(&y) {
                    *c -= 1;
                    if *c == 0 {
                        ready.push(y);
                    }
                }
            }
        }
        order
    }

    /// A random nonempty ideal: the closure of a few random points.
    pub fn random<R: Rng + ?Sized>(ambient: &ChainProduct, rng: &mut R) -> Self {
        let count = rng.gen_range(1..=ambient.dim().max(1) + 1);
        let mut all: Vec<usize> = (0..ambient.size()).collect();
        all.shuffle(rng);
        Self::closure_of_indices(ambient, &all[..count.min(all.len())])
    }
}

impl Serialize for OrderIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.points().serialize(s)
    }
}

/// Every order ideal of `ambient` (optionally including the empty one),
/// generated by deciding membership of points in index order.
pub fn order_ideals(ambient: &ChainProduct, include_empty: bool) -> Vec<OrderIdeal> {
    let n = ambient.size();
    let mut out = Vec::new();
    let mut member = vec![false; n];
    fn go(k: usize, ambient: &ChainProduct, member: &mut Vec<bool>, out: &mut Vec<OrderIdeal>) {
        if k == ambient.size() {
            out.push(OrderIdeal::from_membership(ambient.clone(), member.clone()));
            return;
        }
        go(k + 1, ambient, member, out);
        if ambient.lower_covers(k).all(|j| member[j]) {
            member[k] = true;
            go(k + 1, ambient, member, out);
            member[k] = false;
        }
    }
    go(0, ambient, &mut member, &mut out);
    if !include_empty {
        out.retain(|j| !j.is_empty());
    }
    out
}

/// Depth-first enumeration of the linear extensions of an ideal.
pub struct LinearExtensions<'a> {
    ideal: &'a OrderIdeal,
    missing: HashMap<usize, usize>,
    order: Vec<usize>,
    // candidate lists and the position tried at each depth
    stack: Vec<(Vec<usize>, usize)>,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    fn new(ideal: &'a OrderIdeal) -> Self {
        let missing: HashMap<usize, usize> = ideal
            .indices
            .iter()
            .map(|&i| (i, ideal.ambient.lower_covers(i).count()))
            .collect();
        let first: Vec<usize> = ideal
            .indices
            .iter()
            .copied()
            .filter(|i| missing[i] == 0)
            .collect();
        Self {
            ideal,
            missing,
            order: Vec::new(),
            stack: vec![(first, 0)],
            done: ideal.is_empty(),
        }
    }

    fn push(&mut self, x: usize) {
        self.order.push(x);
        for (_, y) in self.ideal.ambient.upper_covers(x) {
            if let Some(c) = self.missing.get_mut(&y) {
                *c -= 1;
            }
        }
    }

    fn pop(&mut self) {
        let x = self.order.pop().expect("nonempty");
        for (_, y) in self.ideal.ambient.upper_covers(x) {
            if let Some(c) = self.missing.get_mut(&y) {
                *c += 1;
            }
        }
    }

    fn ready_after(&self, prev: &[usize], chosen: usize) -> Vec<usize> {
        let mut next: Vec<usize> = prev.iter().copied().filter(|&y| y != chosen).collect();
        for (_, y) in self.ideal.ambient.upper_covers(chosen) {
            if self.missing.get(&y) == Some(&0) {
                next.push(y);
            }
        }
        next
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.stack.len();
            let (cands, pos) = self.stack.last().cloned()?;
            if pos >= cands.len() {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return None;
                }
                self.pop();
                continue;
            }
            self.stack.last_mut().unwrap().1 += 1;
            let x = cands[pos];
            self.push(x);
            if depth == self.ideal.len() {
                let out = self.order.clone();
                self.pop();
                return Some(out);
            }
            let next = self.ready_after(&cands, x);
            self.stack.push((next, 0));
        }
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// The `i`-th Macaulay representation `h = C(a_i, i) + C(a_(i-1), i-1) + ...`
/// with `a_i > a_(i-1) > ... >= j >= 1`, returned as `(a, k)` pairs.
pub fn macaulay_representation(h: u128, i: u32) -> Vec<(u128, u32)> {
    let mut rest = h;
    let mut out = Vec::new();
    let mut k = i;
    while rest > 0 && k >= 1 {
        let mut a = k as u128;
        while binomial(a + 1, k as u128).is_some_and(|b| b <= rest) {
            a += 1;
        }
        rest -= binomial(a, k as u128).expect("fits");
        out.push((a, k));
        k -= 1;
    }
    out
}

/// `h^<i>`: each binomial `C(a, k)` of the representation becomes `C(a+1, k+1)`.
pub fn macaulay_bound(h: u128, i: u32) -> Option<u128> {
    macaulay_representation(h, i)
        .into_iter()
        .try_fold(0u128, |acc, (a, k)| {
            acc.checked_add(binomial(a + 1, k as u128 + 1)?)
        })
}

/// Macaulay's criterion: `h_0 = 1` and `h_(i+1) <= h_i^<i>` for every `i >= 1`.
pub fn is_m_sequence(h: &[i64]) -> bool {
    if h.first() != Some(&1) || h.iter().any(|&x| x < 0) {
        return false;
    }
    for i in 1..h.len().saturating_sub(1) {
        match macaulay_bound(h[i] as u128, i as u32) {
            Some(b) if (h[i + 1] as u128) <= b => {}
            Some(_) => return false,
            None => {}
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn box_of(d: &[u32]) -> ChainProduct {
        ChainProduct::new(d.to_vec()).unwrap()
    }

    #[test]
    fn indexing_round_trips() {
        let c = box_of(&[3, 3, 4]);
        assert_eq!(c.size(), 36);
        for i in 0..c.size() {
            assert_eq!(c.index(&c.point(i)).unwrap(), i);
        }
        assert!(c.index(&[3, 0, 0]).is_err());
        assert!(ChainProduct::new(vec![2, 0]).is_err());
    }

    #[test]
    fn closures() {
        let c = box_of(&[2, 3]);
        let j = OrderIdeal::from_points(&c, &[[0u32, 0]]).unwrap();
        assert_eq!(j.points(), vec![vec![0, 0]]);
        let c22 = box_of(&[2, 2]);
        assert_eq!(
            OrderIdeal::from_points(&c22, &[[1u32, 1]]).unwrap().len(),
            4
        );
        let j = OrderIdeal::from_points(&c, &[[0u32, 2], [1, 1]]).unwrap();
        assert_eq!(j.len(), 5);
        assert_eq!(j.maxima(), vec![vec![0, 2], vec![1, 1]]);
        assert!(OrderIdeal::from_points(&c, &[[2u32, 0]]).is_err());
        assert!(OrderIdeal::is_order_ideal(&c, &[[0u32, 0], [0, 1]]));
        assert!(!OrderIdeal::is_order_ideal(&c, &[[0u32, 1]]));
    }

    #[test]
    fn maxima_and_polynomials() {
        let c = box_of(&[2, 3]);
        let full = OrderIdeal::full(&c);
        assert_eq!(full.maxima(), vec![vec![1, 2]]);
        assert_eq!(
            full.f_polynomial().unwrap(),
            IntPolynomial::q_analog_product(&[1, 2])
        );
        let zero = OrderIdeal::from_points(&c, &[[0u32, 0]]).unwrap();
        assert_eq!(zero.f_polynomial().unwrap(), IntPolynomial::one());
        let empty = OrderIdeal::from_points::<[u32; 2]>(&c, &[]).unwrap();
        assert_eq!(empty.f_polynomial(), Err(Error::EmptyIdeal));
        assert_eq!(meet(&[0, 2, 2], &[2, 0, 2]), vec![0, 0, 2]);
    }

    #[test]
    fn ideal_counts() {
        // [2]^k ideals are the antichains of the boolean lattice (Dedekind numbers)
        assert_eq!(order_ideals(&box_of(&[2, 2, 2, 2]), true).len(), 168);
        assert_eq!(order_ideals(&box_of(&[2, 2, 2]), true).len(), 20);
        // ideals of [a]x[b] are lattice paths: C(a+b, a)
        assert_eq!(order_ideals(&box_of(&[2, 3]), true).len(), 10);
        assert_eq!(order_ideals(&box_of(&[2, 2]), false).len(), 5);
    }

    #[test]
    fn linear_extension_counts() {
        let chain = OrderIdeal::full(&box_of(&[3]));
        assert_eq!(chain.linear_extensions().count(), 1);
        let diamond = OrderIdeal::full(&box_of(&[2, 2]));
        assert_eq!(diamond.linear_extensions().count(), 2);
        // standard Young tableaux of shape 3x2: 5
        let rect = OrderIdeal::full(&box_of(&[2, 3]));
        let all: Vec<_> = rect.linear_extensions().collect();
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|o| rect.is_linear_extension(o)));
        assert_eq!(rect.count_linear_extensions(), 5);
        // shape 3x3: hook length formula 9!/(5*4*3*4*3*2*3*2*1) = 42
        assert_eq!(
            OrderIdeal::full(&box_of(&[3, 3])).count_linear_extensions(),
            42
        );
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let big = OrderIdeal::full(&box_of(&[3, 3, 4]));
        for _ in 0..20 {
            let o = big.random_linear_extension(&mut rng);
            assert!(big.is_linear_extension(&o));
        }
        assert!(!rect.is_linear_extension(&[5, 0, 1, 2, 3, 4]));
    }

    #[test]
    fn macaulay_examples() {
        assert!(is_m_sequence(&[1]));
        assert!(!is_m_sequence(&[1, 0, 1]));
        assert!(is_m_sequence(&[1, 3, 5, 4, 1]));
        assert!(!is_m_sequence(&[2, 1]));
        assert!(!is_m_sequence(&[]));
        // 3 = C(3,2) so 3^<2> = C(4,3) = 4
        assert_eq!(macaulay_bound(3, 2), Some(4));
        // 5 = C(3,2) + C(2,1) so 5^<2> = C(4,3) + C(3,2) = 7
        assert_eq!(macaulay_representation(5, 2), vec![(3, 2), (2, 1)]);
        assert_eq!(macaulay_bound(5, 2), Some(7));
        assert!(is_m_sequence(&[1, 2, 3, 4]));
        assert!(!is_m_sequence(&[1, 2, 4]));
    }

    /// Largest possible number of degree i+1 monomials in a multicomplex
    /// with h monomials of degree i: take the first h monomials of degree i
    /// in reverse lex order and count the degree i+1 monomials whose degree i
    /// divisors all lie among them. With h + 1 variables nothing is cut off.
    fn lex_segment_growth(i: usize, h: usize) -> usize {
        fn monomials(n: usize, deg: usize) -> Vec<Vec<u32>> {
            if n == 1 {
                return vec![vec![deg as u32]];
            }
            let mut out = Vec::new();
            for a in (0..=deg).rev() {
                for mut rest in monomials(n - 1, deg - a) {
                    rest.insert(0, a as u32);
                    out.push(rest);
                }
            }
            out
        }
        let n = h + 1;
        let mut degree_i = monomials(n, i);
        degree_i.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        let segment: std::collections::HashSet<Vec<u32>> = degree_i.into_iter().take(h).collect();
        monomials(n, i + 1)
            .into_iter()
            .filter(|m| {
                (0..n).filter(|&v| m[v] > 0).all(|v| {
                    let mut d = m.clone();
                    d[v] -= 1;
                    segment.contains(&d)
                })
            })
            .count()
    }

    #[test]
    fn macaulay_bound_matches_lex_segments() {
        for i in 1..=4 {
            for h in 1..=9 {
                assert_eq!(
                    macaulay_bound(h as u128, i as u32),
                    Some(lex_segment_growth(i, h) as u128),
                    "i={i} h={h}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn meet_is_a_semilattice_operation(
            x in proptest::collection::vec(0u32..5, 3),
            y in proptest::collection::vec(0u32..5, 3),
            z in proptest::collection::vec(0u32..5, 3),
        ) {
            prop_assert_eq!(meet(&x, &x), x.clone());
            prop_assert_eq!(meet(&x, &y), meet(&y, &x));
            prop_assert_eq!(meet(&meet(&x, &y), &z), meet(&x, &meet(&y, &z)));
        }

        #[test]
        fn random_ideals_are_meet_closed_multicomplexes(seed in 0u64..500) {
            let c = box_of(&[3, 3, 4]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let j = OrderIdeal::random(&c, &mut rng);
            let pts = j.points();
            prop_assert!(OrderIdeal::is_order_ideal(&c, &pts));
            prop_assert_eq!(j.f_polynomial().unwrap().eval(1), j.len() as i64);
            for a in &pts {
                for b in &pts {
                    prop_assert!(j.contains(&meet(a, b)));
                }
            }
            let f = j.f_polynomial().unwrap();
            prop_assert!(is_m_sequence(f.coeffs()));
        }
    }
}
