use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Canonical, CoxeterSystem};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Default bound on `|W|` for enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 1_000_000;

/// Stable index of an element inside an enumerated [`Group`]. Indices are
/// assigned in breadth-first order, so they are sorted by length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i as u32)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A fully enumerated finite Coxeter group with multiplication tables.
#[derive(Debug)]
pub struct Group {
    system: CoxeterSystem,
    elements: Vec<Canonical>,
    index: HashMap<Canonical, ElementId>,
    lengths: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    inverse: Vec<u32>,
    words: Vec<Vec<u8>>,
    longest: ElementId,
}

impl Group {
    pub fn enumerate(system: CoxeterSystem) -> Result<Self> {
        Self::enumerate_with_limit(system, DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn enumerate_with_limit(system: CoxeterSystem, limit: usize) -> Result<Self> {
        let order = system.order();
        if order > limit {
            return Err(Error::LimitExceeded { order, limit });
        }
        let rank = system.rank();
        let e = system.identity();
        let mut elements = vec![e.clone()];
        let mut index = HashMap::with_capacity(order);
        index.insert(e, ElementId(0));
        let mut lengths = vec![0u32];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut right = Vec::with_capacity(order * rank);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in 0..rank {
                let next = system.multiply(&elements[i], &system.generators[s]);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = ElementId::from(elements.len());
                        if elements.len() >= order {
                            return Err(Error::InvalidSystem {
                                label: system.name(),
                                reason: format!("generated more than {order} elements"),
                            });
                        }
                        let mut w = words[i].clone();
                        w.push(s as u8);
                        words.push(w);
                        lengths.push(lengths[i] + 1);
                        index.insert(next.clone(), id);
                        elements.push(next);
                        queue.push_back(id.index());
                        id
                    }
                };
                right.push(id.0);
            }
        }
        if elements.len() != order {
            return Err(Error::InvalidSystem {
                label: system.name(),
                reason: format!("generated {} elements, expected {order}", elements.len()),
            });
        }
        let mut left = Vec::with_capacity(order * rank);
        for x in &elements {
            for s in 0..rank {
                let y = system.multiply(&system.generators[s], x);
                left.push(index[&y].0);
            }
        }
        let mut group = Self {
            system,
            elements,
            index,
            lengths,
            right,
            left,
            inverse: Vec::new(),
            words,
            longest: ElementId(0),
        };
        let inverse = (0..order)
            .map(|i| {
                let mut x = ElementId::IDENTITY;
                for &s in group.words[i].iter().rev() {
                    x = group.right_mul(x, s as usize);
                }
                x.0
            })
            .collect();
        group.inverse = inverse;
        group.longest = ElementId::from(order - 1);
        Ok(group)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = ElementId> + ExactSizeIterator {
        (0..self.elements.len() as u32).map(ElementId)
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    /// The longest element `w0`.
    pub fn longest(&self) -> ElementId {
        self.longest
    }

    pub fn canonical(&self, w: ElementId) -> &Canonical {
        &self.elements[w.index()]
    }

    pub fn lookup(&self, c: &Canonical) -> Option<ElementId> {
        self.index.get(c).copied()
    }

    #[inline]
    pub fn length(&self, w: ElementId) -> u32 {
        self.lengths[w.index()]
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    /// A reduced word (internal generator indices), shortlex-first in BFS order.
    pub fn word(&self, w: ElementId) -> &[u8] {
        &self.words[w.index()]
    }

    /// `w s`.
    #[inline]
    pub fn right_mul(&self, w: ElementId, s: usize) -> ElementId {
        ElementId(self.right[w.index() * self.rank() + s])
    }

    /// `s w`.
    #[inline]
    pub fn left_mul(&self, w: ElementId, s: usize) -> ElementId {
        ElementId(self.left[w.index() * self.rank() + s])
    }

    #[inline]
    pub fn inverse(&self, w: ElementId) -> ElementId {
        ElementId(self.inverse[w.index()])
    }

    pub fn multiply(&self, u: ElementId, v: ElementId) -> ElementId {
        self.words[v.index()]
            .iter()
            .fold(u, |x, &s| self.right_mul(x, s as usize))
    }

    pub fn generator(&self, s: usize) -> Result<ElementId> {
        if s >= self.rank() {
            return Err(Error::GeneratorOutOfRange {
                index: s,
                rank: self.rank(),
            });
        }
        Ok(self.right_mul(ElementId::IDENTITY, s))
    }

    /// Product of generators given by internal indices; the empty word is `e`.
    pub fn apply_word(&self, word: &[usize]) -> Result<ElementId> {
        let mut x = ElementId::IDENTITY;
        for &s in word {
            if s >= self.rank() {
                return Err(Error::GeneratorOutOfRange {
                    index: s,
                    rank: self.rank(),
                });
            }
            x = self.right_mul(x, s);
        }
        Ok(x)
    }

    /// Product of generators given by printed labels (`s0` exists only in type D).
    pub fn apply_labels(&self, labels: &[u32]) -> Result<ElementId> {
        let word = labels
            .iter()
            .map(|&l| {
                self.system
                    .index_of_label(l)
                    .ok_or(Error::GeneratorOutOfRange {
                        index: l as usize,
                        rank: self.rank(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        self.apply_word(&word)
    }

    /// Reduced word rendered with printed labels, e.g. `s2 s1 s3 s2`; `e` for the identity.
    pub fn word_string(&self, w: ElementId) -> String {
        if w == ElementId::IDENTITY {
            return "e".into();
        }
        self.word(w)
            .iter()
            .map(|&s| format!("s{}", self.system.label(s as usize)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Human-readable name: one-line notation for permutation types, the word otherwise.
    pub fn display(&self, w: ElementId) -> String {
        match self.canonical(w) {
            Canonical::Perm(v) if v.iter().all(|&x| x > 0) && v.len() < 10 => {
                v.iter().map(|x| x.to_string()).collect()
            }
            Canonical::Perm(v) => format!(
                "[{}]",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            _ => self.word_string(w),
        }
    }

    pub fn descents_left(&self, w: ElementId) -> Vec<usize> {
        (0..self.rank())
            .filter(|&s| self.length(self.left_mul(w, s)) < self.length(w))
            .collect()
    }

    pub fn descents_right(&self, w: ElementId) -> Vec<usize> {
        (0..self.rank())
            .filter(|&s| self.length(self.right_mul(w, s)) < self.length(w))
            .collect()
    }

    /// `w = w_J * jw` with `jw` having no left descent in `J`.
    pub fn parabolic_decompose(&self, w: ElementId, j: &[usize]) -> (ElementId, ElementId) {
        let mut x = w;
        let mut u = ElementId::IDENTITY;
        'strip: loop {
            for &s in j {
                let y = self.left_mul(x, s);
                if self.length(y) < self.length(x) {
                    x = y;
                    u = self.right_mul(u, s);
                    continue 'strip;
                }
            }
            break;
        }
        (u, x)
    }

    /// Factors `w = w(1) ... w(n)` with `w(i)` in the minimal left coset
    /// representatives of `W_{J(i-1)}` inside `W_{J(i)}`, where `J(i)` is the
    /// first `i` generators of `chain`. The last factor is peeled first.
    pub fn quotient_factorization(&self, w: ElementId, chain: &[usize]) -> Vec<ElementId> {
        let mut factors = vec![ElementId::IDENTITY; chain.len()];
        let mut rest = w;
        for i in (0..chain.len()).rev() {
            let (head, tail) = self.parabolic_decompose(rest, &chain[..i]);
            factors[i] = tail;
            rest = head;
        }
        debug_assert_eq!(rest, ElementId::IDENTITY);
        factors
    }

    /// Elements of the standard parabolic subgroup `W_J`, by BFS.
    pub fn parabolic_subgroup(&self, j: &[usize]) -> Vec<ElementId> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![ElementId::IDENTITY];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &s in j {
                let y = self.right_mul(x, s);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    out.push(y);
                }
            }
        }
        out.sort();
        out
    }

    /// Longest element `w0(J)` of `W_J`.
    pub fn max_parabolic_element(&self, j: &[usize]) -> ElementId {
        self.parabolic_subgroup(j)
            .into_iter()
            .max_by_key(|&x| self.length(x))
            .unwrap_or(ElementId::IDENTITY)
    }

    /// The minimal left coset representatives `^J W = { w : no left descent in J }`.
    pub fn left_quotient(&self, j: &[usize]) -> Vec<ElementId> {
        self.ids()
            .filter(|&w| {
                j.iter()
                    .all(|&s| self.length(self.left_mul(w, s)) > self.length(w))
            })
            .collect()
    }

    /// `W/V = { w : l(wv) = l(w) + l(v) for all v in V }`.
    pub fn generalized_quotient(&self, v: &[ElementId]) -> Vec<ElementId> {
        self.ids()
            .filter(|&w| {
                v.iter()
                    .all(|&x| self.length(self.multiply(w, x)) == self.length(w) + self.length(x))
            })
            .collect()
    }

    pub fn poincare_polynomial<I: IntoIterator<Item = ElementId>>(&self, xs: I) -> IntPolynomial {
        let mut counts: Vec<i64> = Vec::new();
        for x in xs {
            let l = self.length(x) as usize;
            if counts.len() <= l {
                counts.resize(l + 1, 0);
            }
            counts[l] += 1;
        }
        IntPolynomial::from_coeffs(counts)
    }

    /// `W(q)`.
    pub fn group_polynomial(&self) -> IntPolynomial {
        self.poincare_polynomial(self.ids())
    }

    /// The exponents `e_1 <= ... <= e_n` with `W(q) = prod [e_i + 1]_q`.
    pub fn exponents(&self) -> Result<Vec<u32>> {
        let mut p = self.group_polynomial();
        let mut exps = Vec::new();
        while p.degree().unwrap_or(0) > 0 {
            let deg = p.degree().unwrap() as u32;
            let divisor = (2..=deg + 1)
                .rev()
                .find_map(|d| p.div_q_analog(d).map(|q| (d, q)));
            match divisor {
                Some((d, q)) => {
                    exps.push(d - 1);
                    p = q;
                }
                None => {
                    return Err(Error::Factorization(format!(
                        "{} has no q-analog factor",
                        p
                    )))
                }
            }
        }
        if p != IntPolynomial::one() {
            return Err(Error::Factorization(format!("leftover factor {p}")));
        }
        exps.sort_unstable();
        Ok(exps)
    }

    /// `u <=_L w`: `l(w u^-1) + l(u) = l(w)`.
    pub fn left_weak_leq(&self, u: ElementId, w: ElementId) -> bool {
        let x = self.multiply(w, self.inverse(u));
        self.length(x) + self.length(u) == self.length(w)
    }

    /// `u <=_R w`: `l(u^-1 w) + l(u) = l(w)`.
    pub fn right_weak_leq(&self, u: ElementId, w: ElementId) -> bool {
        let x = self.multiply(self.inverse(u), w);
        self.length(x) + self.length(u) == self.length(w)
    }

    /// `[u, w]_L`.
    pub fn weak_left_interval(&self, u: ElementId, w: ElementId) -> Vec<ElementId> {
        self.ids()
            .filter(|&z| self.left_weak_leq(u, z) && self.left_weak_leq(z, w))
            .collect()
    }

    /// `[u, w]_R`.
    pub fn weak_right_interval(&self, u: ElementId, w: ElementId) -> Vec<ElementId> {
        self.ids()
            .filter(|&z| self.right_weak_leq(u, z) && self.right_weak_leq(z, w))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(g: &Group, w: ElementId) -> Vec<i8> {
        g.canonical(w).one_line().unwrap().to_vec()
    }

    fn inversions(v: &[i8]) -> u32 {
        let mut n = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn a3_word_and_lengths_match_inversions() {
        let g = Group::enumerate(CoxeterSystem::type_a(3)).unwrap();
        let w = g.apply_labels(&[2, 1, 3, 2]).unwrap();
        assert_eq!(perm(&g, w), vec![3, 4, 1, 2]);
        assert_eq!(g.length(w), 4);
        for x in g.ids() {
            assert_eq!(g.length(x), inversions(&perm(&g, x)));
        }
        assert_eq!(perm(&g, g.longest()), vec![4, 3, 2, 1]);
        assert_eq!(g.length(g.longest()), 6);
    }

    #[test]
    fn group_axioms_on_tables() {
        let g = Group::enumerate(CoxeterSystem::type_b(3)).unwrap();
        let s1 = g.generator(0).unwrap();
        assert_eq!(g.multiply(s1, s1), g.identity());
        for w in g.ids() {
            assert_eq!(g.multiply(w, g.identity()), w);
            assert_eq!(g.multiply(w, g.inverse(w)), g.identity());
            assert_eq!(g.length(g.inverse(w)), g.length(w));
        }
        assert_eq!(g.apply_word(&[]).unwrap(), g.identity());
        assert!(g.apply_word(&[3]).is_err());
    }

    #[test]
    fn lengths_of_longest_elements() {
        let h3 = Group::enumerate(CoxeterSystem::type_h3()).unwrap();
        assert_eq!(h3.order(), 120);
        assert_eq!(h3.length(h3.longest()), 15);
        let d4 = Group::enumerate(CoxeterSystem::type_d(4)).unwrap();
        assert_eq!(d4.order(), 192);
        assert_eq!(d4.length(d4.longest()), 12);
        assert_eq!(h3.descents_left(h3.longest()), vec![0, 1, 2]);
        assert!(h3.descents_left(h3.identity()).is_empty());
    }

    #[test]
    fn exponents_of_small_systems() {
        let cases: Vec<(CoxeterSystem, Vec<u32>)> = vec![
            (CoxeterSystem::type_a(3), vec![1, 2, 3]),
            (CoxeterSystem::type_b(3), vec![1, 3, 5]),
            (CoxeterSystem::type_d(4), vec![1, 3, 3, 5]),
            (CoxeterSystem::type_h3(), vec![1, 5, 9]),
            (CoxeterSystem::type_i2(7), vec![1, 6]),
        ];
        for (sys, e) in cases {
            let name = sys.name();
            let g = Group::enumerate(sys).unwrap();
            assert_eq!(g.exponents().unwrap(), e, "{name}");
        }
    }

    #[test]
    fn limit_is_enforced_with_the_order() {
        let err = Group::enumerate_with_limit(CoxeterSystem::type_b(6), 1000).unwrap_err();
        assert_eq!(
            err,
            Error::LimitExceeded {
                order: 46080,
                limit: 1000
            }
        );
    }

    #[test]
    fn parabolic_and_quotient_factorizations() {
        let g = Group::enumerate(CoxeterSystem::type_a(3)).unwrap();
        let w = g.apply_labels(&[3, 2, 1]).unwrap();
        assert_eq!(g.parabolic_decompose(w, &[0, 1]), (g.identity(), w));
        for x in g.ids() {
            assert_eq!(g.parabolic_decompose(x, &[]), (g.identity(), x));
            assert_eq!(g.parabolic_decompose(x, &[0, 1, 2]), (x, g.identity()));
        }
        let w = g.apply_labels(&[2, 1, 3, 2]).unwrap();
        let f = g.quotient_factorization(w, &[0, 1, 2]);
        assert_eq!(f[0], g.identity());
        assert_eq!(f[1], g.apply_labels(&[2, 1]).unwrap());
        assert_eq!(f[2], g.apply_labels(&[3, 2]).unwrap());

        let b3 = Group::enumerate(CoxeterSystem::type_b(3)).unwrap();
        for x in b3.ids() {
            let f = b3.quotient_factorization(x, &[0, 1, 2]);
            let total: u32 = f.iter().map(|&y| b3.length(y)).sum();
            assert_eq!(total, b3.length(x));
            let back = f.iter().fold(b3.identity(), |acc, &y| b3.multiply(acc, y));
            assert_eq!(back, x);
        }
    }

    #[test]
    fn generalized_quotient_extremes() {
        let g = Group::enumerate(CoxeterSystem::type_i2(5)).unwrap();
        assert_eq!(g.generalized_quotient(&[g.identity()]).len(), 10);
        assert_eq!(g.generalized_quotient(&[g.longest()]), vec![g.identity()]);
        assert_eq!(g.max_parabolic_element(&[0, 1]), g.longest());
    }

    #[test]
    fn weak_order_intervals() {
        let g = Group::enumerate(CoxeterSystem::type_a(2)).unwrap();
        assert_eq!(g.weak_left_interval(g.identity(), g.longest()).len(), 6);
        let s1 = g.generator(0).unwrap();
        let s2s1 = g.apply_word(&[1, 0]).unwrap();
        assert!(g.left_weak_leq(s1, s2s1));
        assert!(!g.right_weak_leq(s1, s2s1));
    }
}
