//! Permutations of `[n]`: pattern avoidance, smooth and unimodal
//! permutations, the permutation-graph posets `P_w` and their chain-count
//! partitions, Fubini words, and the bijection `Λ` between unimodal
//! permutations and partitions into distinct parts.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::codes::{code_a, code_a_inversions, LehmerCode};
use crate::coxeter::{BruhatPoset, Canonical, CoxeterSystem, ElementId};
use crate::error::{Error, Result};
use crate::intervals::{h_direct, CodedGroup};
use crate::poly::IntPolynomial;

const MAX_WITNESSES: usize = 10;

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
    inverse: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut inverse = vec![0u32; n];
        for (pos, &v) in values.iter().enumerate() {
            if v == 0 || v as usize > n || inverse[v as usize - 1] != 0 {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            inverse[v as usize - 1] = pos as u32 + 1;
        }
        Ok(Self { values, inverse })
    }

    pub fn identity(n: usize) -> Self {
        let values: Vec<u32> = (1..=n as u32).collect();
        Self {
            inverse: values.clone(),
            values,
        }
    }

    /// `w(i)`, 1-based.
    pub fn at(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    /// `w^-1(v)`, 1-based.
    pub fn inv_at(&self, v: usize) -> u32 {
        self.inverse[v - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        Permutation::new(self.inverse.clone()).expect("inverse is a permutation")
    }

    pub fn is_identity(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> u32 {
        let n = self.len();
        (0..n)
            .map(|i| {
                (i + 1..n)
                    .filter(|&j| self.values[j] < self.values[i])
                    .count() as u32
            })
            .sum()
    }

    /// `L_n(w)_k = |{ i < k : w^-1(i) > w^-1(k) }|`.
    pub fn code(&self) -> Vec<u32> {
        code_a_inversions(&self.values).0
    }

    /// The element of an enumerated type A group with this one-line notation.
    pub fn to_canonical(&self) -> Canonical {
        Canonical::Perm(self.values.iter().map(|&v| v as i8).collect())
    }

    pub fn from_canonical(c: &Canonical) -> Result<Self> {
        match c.one_line() {
            Some(v) if v.iter().all(|&x| x > 0) => Self::new(v.iter().map(|&x| x as u32).collect()),
            _ => Err(Error::InvalidPermutation(format!(
                "{c:?} is not an unsigned permutation"
            ))),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() < 10 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// `"3412"` for `n < 10`, otherwise comma or space separated values.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let values: Vec<u32> = if s.contains(',') || s.contains(' ') {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>().map_err(|_| Error::Parse {
                        position: s.find(t).unwrap_or(0),
                        message: format!("{t:?} is not a positive integer"),
                    })
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10).ok_or_else(|| Error::Parse {
                        position: i,
                        message: format!("{c:?} is not a digit"),
                    })
                })
                .collect::<Result<_>>()?
        };
        Self::new(values)
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation::identity(n)];
    loop {
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(Permutation::new(cur.clone()).expect("permutation"));
    }
}

/// No subsequence of `w` is order-isomorphic to `pattern`.
pub fn avoids(w: &Permutation, pattern: &Permutation) -> bool {
    let (n, k) = (w.len(), pattern.len());
    if k > n {
        return true;
    }
    let p = pattern.values();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let matches = (0..k)
            .all(|a| (a + 1..k).all(|b| (w.values[idx[a]] < w.values[idx[b]]) == (p[a] < p[b])));
        if matches {
            return false;
        }
        // next k-subset of 0..n
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn pattern(s: &str) -> Permutation {
    s.parse().expect("valid pattern")
}

/// Avoids `3412` and `4231`.
pub fn is_smooth(w: &Permutation) -> bool {
    avoids(w, &pattern("3412")) && avoids(w, &pattern("4231"))
}

pub fn smooth_set(n: usize) -> Vec<Permutation> {
    all_permutations(n).into_iter().filter(is_smooth).collect()
}

/// Rises then falls.
pub fn is_unimodal_perm(w: &Permutation) -> bool {
    let v = w.values();
    let peak = v.windows(2).take_while(|p| p[0] < p[1]).count();
    v[peak..].windows(2).all(|p| p[0] > p[1])
}

pub fn unimodal_perms(n: usize) -> Vec<Permutation> {
    all_permutations(n)
        .into_iter()
        .filter(is_unimodal_perm)
        .collect()
}

/// `i <_w j` iff `i < j` and `w^-1(j) < w^-1(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermPoset {
    n: usize,
    less: Vec<Vec<bool>>,
    hasse: Vec<(usize, usize)>,
}

impl PermPoset {
    pub fn new(w: &Permutation) -> Self {
        let n = w.len();
        let less: Vec<Vec<bool>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| i < j && w.inv_at(j) < w.inv_at(i))
                    .collect()
            })
            .collect();
        let mut hasse = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if less[i][j] && !(0..n).any(|k| less[i][k] && less[k][j]) {
                    hasse.push((i, j));
                }
            }
        }
        Self { n, less, hasse }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 1-based comparison.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i - 1][j - 1]
    }

    /// Cover relations `(i, j)`, 1-based.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.hasse.iter().map(|&(i, j)| (i + 1, j + 1)).collect()
    }

    /// The undirected Hasse diagram has no cycle.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b) in &self.hasse {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    /// `ρ_i` = number of saturated chains with `i + 1` elements, for
    /// `i = 0..=m_P`.
    pub fn chain_counts(&self) -> Vec<u64> {
        chain_counts(self.n, &self.hasse)
    }

    /// `max{ i >= 1 : ρ_i > 0 }`, or `None` for an antichain.
    pub fn m_p(&self) -> Option<usize> {
        let c = self.chain_counts();
        (c.len() > 1).then(|| c.len() - 1)
    }
}

/// Saturated chain counts of the poset on `0..n` with the given covers.
pub fn chain_counts(n: usize, covers: &[(usize, usize)]) -> Vec<u64> {
    let mut up = vec![Vec::new(); n];
    for &(a, b) in covers {
        up[a].push(b);
    }
    // paths[v] = number of cover paths of the current length starting at v
    let mut paths = vec![1u64; n];
    let mut out = Vec::new();
    while paths.iter().any(|&p| p > 0) {
        out.push(paths.iter().sum());
        paths = (0..n)
            .map(|v| up[v].iter().map(|&u| paths[u]).sum())
            .collect();
    }
    out
}

/// A partition in French notation: parts weakly increasing; `(0)` is the
/// empty partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts == [0] || parts.is_empty() {
            return Ok(Self::empty());
        }
        if parts.contains(&0) || parts.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive and weakly increasing".into(),
            });
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(vec![0])
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0]
    }

    /// The parts; `[0]` for the empty partition.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The positive parts.
    pub fn positive_parts(&self) -> &[u32] {
        if self.is_zero() {
            &[]
        } else {
            &self.0
        }
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|p| p[0] < p[1])
    }

    /// The conjugate partition: `m_k(λ*) = λ_(r-k+1) - λ_(r-k)`.
    pub fn dual(&self) -> Partition {
        let p = self.positive_parts();
        let r = p.len();
        let mut out = Vec::new();
        for k in 1..=r {
            let hi = p[r - k];
            let lo = if r > k { p[r - k - 1] } else { 0 };
            out.extend(std::iter::repeat_n(k as u32, (hi - lo) as usize));
        }
        Partition::new(out).expect("conjugate is a partition")
    }

    /// `Π [λ_i + 1]_q`; `1` for `(0)`.
    pub fn q_product(&self) -> IntPolynomial {
        IntPolynomial::q_analog_product(self.positive_parts())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `λ_w = (ρ_(m_P), ..., ρ_1)` for smooth `w`; `(0)` for the identity.
pub fn lambda_of(w: &Permutation) -> Result<Partition> {
    if !is_smooth(w) {
        return Err(Error::NotSmooth(w.to_string()));
    }
    if w.is_identity() {
        return Ok(Partition::empty());
    }
    let p = PermPoset::new(w);
    if !p.is_forest() {
        return Err(Error::InvalidPartition {
            parts: vec![],
            reason: format!("the Hasse diagram of P_{w} is not a forest"),
        });
    }
    let rho = p.chain_counts();
    let parts: Vec<u32> = rho[1..].iter().rev().map(|&x| x as u32).collect();
    Partition::new(parts)
}

/// `E(w) = λ_w*`.
pub fn exponents_of(w: &Permutation) -> Result<Partition> {
    Ok(lambda_of(w)?.dual())
}

/// `x` uses exactly the values `0..=max(x)`.
pub fn is_fubini(x: &[u32]) -> bool {
    let k = x.len();
    if x.iter().any(|&v| v as usize >= k.max(1)) {
        return false;
    }
    let max = x.iter().copied().max().unwrap_or(0);
    let present: BTreeSet<u32> = x.iter().copied().collect();
    present.len() == max as usize + 1
}

/// `x_1 = 0` and `x_(i+1) - x_i <= 1`.
pub fn is_lazy_fubini(x: &[u32]) -> bool {
    x.first().is_none_or(|&v| v == 0) && x.windows(2).all(|p| p[1] <= p[0] + 1)
}

pub fn is_weakly_increasing_fubini(x: &[u32]) -> bool {
    is_fubini(x) && x.windows(2).all(|p| p[0] <= p[1])
}

/// The lazy Fubini words of length `k`.
pub fn lazy_fubini_words(k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = vec![vec![0u32]];
    for _ in 1..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                let last = *w.last().expect("nonempty");
                (0..=last + 1).map(move |v| {
                    let mut x = w.clone();
                    x.push(v);
                    x
                })
            })
            .collect();
    }
    out
}

pub fn catalan(n: u64) -> u64 {
    (0..n).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// `Λ(u) = (n - u(j+1), ..., n - u(n))` with `j = u^-1(n)`; `(0)` for `e`.
pub fn lambda_bijection(u: &Permutation) -> Result<Partition> {
    if !is_unimodal_perm(u) {
        return Err(Error::NotUnimodal(u.to_string()));
    }
    let n = u.len();
    if u.is_identity() {
        return Ok(Partition::empty());
    }
    let j = u.inv_at(n) as usize;
    Partition::new((j + 1..=n).map(|i| n as u32 - u.at(i)).collect())
}

/// `Λ^-1(λ)`: the values not of the form `n - λ_i` increasing, then
/// `n - λ_1, ..., n - λ_r`.
pub fn lambda_inverse(lambda: &Partition, n: usize) -> Result<Permutation> {
    let parts = lambda.positive_parts();
    if !lambda.has_distinct_parts() || parts.iter().any(|&p| p as usize >= n) {
        return Err(Error::InvalidPartition {
            parts: parts.to_vec(),
            reason: format!("parts must be distinct and at most {}", n.saturating_sub(1)),
        });
    }
    let tail: Vec<u32> = parts.iter().map(|&p| n as u32 - p).collect();
    let mut values: Vec<u32> = (1..=n as u32).filter(|v| !tail.contains(v)).collect();
    values.extend(tail);
    Permutation::new(values)
}

/// `S_n` as a coded Bruhat poset.
pub struct SymmetricGroup {
    pub n: usize,
    pub poset: BruhatPoset,
    pub code: LehmerCode,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSystem {
                label: "S0".into(),
                reason: "n >= 1".into(),
            });
        }
        let poset = BruhatPoset::build(CoxeterSystem::type_a(n - 1))?;
        let code = code_a(&poset)?;
        Ok(Self { n, poset, code })
    }

    pub fn element(&self, w: &Permutation) -> Result<ElementId> {
        self.poset
            .group()
            .lookup(&w.to_canonical())
            .ok_or_else(|| Error::InvalidPermutation(format!("{w} is not in S{}", self.n)))
    }

    pub fn permutation(&self, w: ElementId) -> Permutation {
        Permutation::from_canonical(self.poset.group().canonical(w)).expect("type A")
    }

    pub fn h(&self, w: &Permutation) -> Result<IntPolynomial> {
        Ok(h_direct(&self.poset, self.element(w)?))
    }

    pub fn coded(&self) -> CodedGroup<'_> {
        CodedGroup::new(&self.poset, &self.code).expect("same system")
    }
}

/// Element-by-element comparison of principal elements, lazy Fubini codes
/// and `312`-avoidance.
#[derive(Debug, Clone, Serialize)]
pub struct CatalanReport {
    pub n: usize,
    pub principal: usize,
    pub lazy_fubini: usize,
    pub avoiding_312: usize,
    pub catalan: u64,
    pub witnesses: Vec<String>,
}

impl CatalanReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
            && [self.principal, self.lazy_fubini, self.avoiding_312]
                .iter()
                .all(|&c| c as u64 == self.catalan)
    }
}

pub fn verify_catalan_equivalence(s: &SymmetricGroup) -> CatalanReport {
    let cg = s.coded();
    let p312 = pattern("312");
    let mut r = CatalanReport {
        n: s.n,
        principal: 0,
        lazy_fubini: 0,
        avoiding_312: 0,
        catalan: catalan(s.n as u64),
        witnesses: Vec::new(),
    };
    for w in s.poset.group().ids() {
        let perm = s.permutation(w);
        let a = cg.is_principal(w);
        let b = is_lazy_fubini(&perm.code());
        let c = avoids(&perm, &p312);
        r.principal += a as usize;
        r.lazy_fubini += b as usize;
        r.avoiding_312 += c as usize;
        if !(a == b && b == c) && r.witnesses.len() < MAX_WITNESSES {
            r.witnesses
                .push(format!("{perm}: principal={a} lazy={b} avoids312={c}"));
        }
    }
    r
}

/// Element-by-element comparison of code-unimodal elements, weakly
/// increasing Fubini codes and unimodal permutations.
#[derive(Debug, Clone, Serialize)]
pub struct UnimodalReport {
    pub n: usize,
    pub unimodal: usize,
    pub expected: u64,
    pub witnesses: Vec<String>,
}

impl UnimodalReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty() && self.unimodal as u64 == self.expected
    }
}

pub fn verify_unimodal_equivalence(s: &SymmetricGroup) -> Result<UnimodalReport> {
    let cg = s.coded();
    let mut r = UnimodalReport {
        n: s.n,
        unimodal: 0,
        expected: 1 << (s.n - 1),
        witnesses: Vec::new(),
    };
    for w in s.poset.group().ids() {
        let perm = s.permutation(w);
        let a = cg.is_principal(w) && cg.is_unimodal(w)?;
        let b = is_weakly_increasing_fubini(&perm.code());
        let c = is_unimodal_perm(&perm);
        r.unimodal += c as usize;
        if !(a == b && b == c) && r.witnesses.len() < MAX_WITNESSES {
            r.witnesses.push(format!(
                "{perm}: code-unimodal={a} increasing-fubini={b} unimodal={c}"
            ));
        }
    }
    Ok(r)
}

/// `Λ(u) = λ_u` and `L_n(u) = (0^u(n), Λ(u)*)` over all of `U_n`, plus
/// `Λ^-1 ∘ Λ = id`.
#[derive(Debug, Clone, Serialize)]
pub struct AnnalsReport {
    pub n: usize,
    pub checked: usize,
    pub witnesses: Vec<String>,
}

impl AnnalsReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

pub fn verify_annals(n: usize) -> Result<AnnalsReport> {
    let mut r = AnnalsReport {
        n,
        checked: 0,
        witnesses: Vec::new(),
    };
    for u in unimodal_perms(n) {
        r.checked += 1;
        let lam = lambda_bijection(&u)?;
        let chains = lambda_of(&u)?;
        let mut expected = vec![0u32; u.at(n) as usize];
        expected.extend_from_slice(lam.dual().positive_parts());
        let back = lambda_inverse(&lam, n)?;
        if (lam != chains || u.code() != expected || back != u) && r.witnesses.len() < MAX_WITNESSES
        {
            r.witnesses.push(format!(
                "{u}: Λ={lam} λ_u={chains} code={:?} Λ^-1(Λ)={back}",
                u.code()
            ));
        }
    }
    Ok(r)
}

/// `{h_w : w smooth}` against `{h_w : w unimodal}`.
#[derive(Debug, Clone, Serialize)]
pub struct SmoothReport {
    pub n: usize,
    pub smooth: usize,
    pub smooth_polynomials: BTreeSet<IntPolynomial>,
    pub unimodal_polynomials: BTreeSet<IntPolynomial>,
    pub expected: u64,
    /// Smooth `w` whose interval polynomial is not `Π [E(w)_i + 1]_q`.
    pub witnesses: Vec<String>,
}

impl SmoothReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
            && self.smooth_polynomials == self.unimodal_polynomials
            && self.smooth_polynomials.len() as u64 == self.expected
    }
}

pub fn verify_smooth_classification(s: &SymmetricGroup) -> Result<SmoothReport> {
    let mut smooth_polys = BTreeSet::new();
    let mut uni_polys = BTreeSet::new();
    let mut witnesses = Vec::new();
    let mut smooth = 0;
    for w in s.poset.group().ids() {
        let perm = s.permutation(w);
        if !is_smooth(&perm) {
            continue;
        }
        smooth += 1;
        let h = h_direct(&s.poset, w);
        if exponents_of(&perm)?.q_product() != h && witnesses.len() < MAX_WITNESSES {
            witnesses.push(format!("{perm}: h={h}"));
        }
        if is_unimodal_perm(&perm) {
            uni_polys.insert(h.clone());
        }
        smooth_polys.insert(h);
    }
    Ok(SmoothReport {
        n: s.n,
        smooth,
        smooth_polynomials: smooth_polys,
        unimodal_polynomials: uni_polys,
        expected: 1 << (s.n - 1),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Every increasing index tuple, checked against the definition with `τ^-1`.
    fn contains_oracle(w: &Permutation, tau: &Permutation) -> bool {
        let (n, k) = (w.len(), tau.len());
        let tinv = tau.inverse();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .any(|m| {
                let idx: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
                (0..k - 1).all(|a| {
                    let x = idx[tinv.values()[a] as usize - 1];
                    let y = idx[tinv.values()[a + 1] as usize - 1];
                    w.values()[x] < w.values()[y]
                })
            })
    }

    #[test]
    fn parsing() {
        assert_eq!(p("3412").values(), &[3, 4, 1, 2]);
        assert_eq!(p("3,4,1,2"), p("3412"));
        assert!("3413".parse::<Permutation>().is_err());
        assert!(matches!(
            "34a2".parse::<Permutation>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert_eq!(
            p("10,1,2,3,4,5,6,7,8,9").to_string(),
            "[10,1,2,3,4,5,6,7,8,9]"
        );
        assert_eq!(p("2413").inverse(), p("3142"));
    }

    #[test]
    fn pattern_avoidance() {
        assert!(!avoids(&p("3412"), &p("3412")));
        assert!(avoids(&p("2413"), &p("3412")));
        assert!(avoids(&p("12345"), &p("21")));
        for n in 1..=6 {
            for w in all_permutations(n) {
                for pat in ["312", "3412", "4231", "213"] {
                    assert_eq!(avoids(&w, &p(pat)), !contains_oracle(&w, &p(pat)));
                }
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(all_permutations(5).len(), 120);
        assert!(smooth_set(3).len() == 6);
        assert_eq!(smooth_set(4).len(), 22);
        for n in 1..=7 {
            assert_eq!(unimodal_perms(n).len(), 1 << (n - 1));
        }
        assert!(is_unimodal_perm(&p("1342")));
        assert!(!is_unimodal_perm(&p("3142")));
        assert!(is_unimodal_perm(&p("1234")));
        // unimodal = avoids 312 and 213
        for w in all_permutations(6) {
            assert_eq!(
                is_unimodal_perm(&w),
                avoids(&w, &p("312")) && avoids(&w, &p("213"))
            );
        }
    }

    /// Saturated chains by brute force over all subsets.
    fn chain_counts_oracle(pp: &PermPoset) -> Vec<u64> {
        let n = pp.size();
        let covers = pp.hasse_edges();
        let mut counts = vec![0u64; n];
        for m in 1u32..1 << n {
            let mut elems: Vec<usize> = (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect();
            // a chain is totally ordered; sort by the order
            elems.sort_by(|&a, &b| {
                if pp.less(a, b) {
                    std::cmp::Ordering::Less
                } else if pp.less(b, a) {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            });
            if elems.windows(2).all(|x| covers.contains(&(x[0], x[1]))) {
                counts[elems.len() - 1] += 1;
            }
        }
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        counts
    }

    #[test]
    fn chain_counts_match_oracle() {
        for n in 1..=6 {
            for w in all_permutations(n) {
                let pp = PermPoset::new(&w);
                assert_eq!(pp.chain_counts(), chain_counts_oracle(&pp), "{w}");
            }
        }
        let id = PermPoset::new(&Permutation::identity(4));
        assert_eq!(id.chain_counts(), vec![4]);
        assert_eq!(id.m_p(), None);
        let pp = PermPoset::new(&p("3412"));
        assert_eq!(pp.hasse_edges(), vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
        assert!(!pp.is_forest());
    }

    #[test]
    fn forest_inequality_for_smooth() {
        for n in 1..=6 {
            for w in smooth_set(n) {
                let pp = PermPoset::new(&w);
                assert!(pp.is_forest(), "{w}");
                let rho = pp.chain_counts();
                assert!(rho.windows(2).all(|x| x[0] > x[1]), "{w} {rho:?}");
            }
        }
    }

    #[test]
    fn strict_decrease_fails_for_general_forests() {
        // 1 < 0, 6 < 0, 0 < 2 < 3, 0 < 4, and an isolated 5
        let covers = [(1, 0), (6, 0), (0, 2), (2, 3), (0, 4)];
        assert_eq!(chain_counts(7, &covers), vec![7, 5, 5, 2]);
    }

    proptest! {
        #[test]
        fn dual_is_involution(mut parts in proptest::collection::vec(1u32..8, 0..8)) {
            parts.sort();
            let lam = Partition::new(parts).unwrap();
            prop_assert_eq!(lam.dual().dual(), lam.clone());
            prop_assert_eq!(lam.dual().size(), lam.size());
        }
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::new(vec![1, 2]).unwrap().dual().parts(), &[1, 2]);
        assert_eq!(Partition::new(vec![3]).unwrap().dual().parts(), &[1, 1, 1]);
        assert_eq!(
            Partition::new(vec![1, 1, 4]).unwrap().dual().parts(),
            &[1, 1, 1, 3]
        );
        assert_eq!(Partition::empty().dual(), Partition::empty());
        assert!(Partition::new(vec![2, 1]).is_err());
        assert_eq!(
            lambda_of(&Permutation::identity(3)).unwrap(),
            Partition::empty()
        );
        assert_eq!(lambda_of(&p("321")).unwrap().parts(), &[1, 2]);
        assert!(matches!(lambda_of(&p("3412")), Err(Error::NotSmooth(_))));
    }

    #[test]
    fn smooth_exponent_products() {
        let s = SymmetricGroup::new(5).unwrap();
        for w in smooth_set(5) {
            let e = exponents_of(&w).unwrap();
            assert_eq!(e.q_product(), s.h(&w).unwrap(), "{w}");
            let mut word = vec![0];
            word.extend_from_slice(e.positive_parts());
            assert!(w.is_identity() || is_fubini(&word), "{w}");
        }
    }

    #[test]
    fn avoiding_312_codes() {
        let s = SymmetricGroup::new(6).unwrap();
        let pat = p("312");
        for w in all_permutations(6).into_iter().filter(|w| avoids(w, &pat)) {
            let code = w.code();
            let mut entries: BTreeSet<u32> = code.iter().copied().collect();
            let mut parts: BTreeSet<u32> = exponents_of(&w)
                .unwrap()
                .positive_parts()
                .iter()
                .copied()
                .collect();
            entries.insert(0);
            parts.insert(0);
            assert_eq!(entries, parts, "{w}");
            assert_eq!(s.h(&w).unwrap(), IntPolynomial::q_analog_product(&code));
        }
    }

    #[test]
    fn codes_agree_with_group_code() {
        let s = SymmetricGroup::new(5).unwrap();
        for w in s.poset.group().ids() {
            let perm = s.permutation(w);
            assert_eq!(&perm.code()[1..], s.code.encode(w));
            assert_eq!(s.element(&perm).unwrap(), w);
            assert_eq!(perm.length(), s.poset.group().length(w));
        }
    }

    #[test]
    fn fubini_words() {
        let mut f3 = lazy_fubini_words(3);
        f3.sort();
        let mut want = vec![
            vec![0, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![0, 1, 1],
            vec![0, 1, 2],
        ];
        want.sort();
        assert_eq!(f3, want);
        let f4 = lazy_fubini_words(4);
        assert_eq!(f4.len(), 14);
        for w in [
            [0, 1, 2, 0],
            [0, 1, 0, 1],
            [0, 0, 1, 2],
            [0, 1, 2, 3],
            [0, 1, 1, 0],
        ] {
            assert!(f4.contains(&w.to_vec()));
        }
        assert!(is_fubini(&[0, 2, 1, 1]) && !is_lazy_fubini(&[0, 2, 1, 1]));
        assert!(!is_fubini(&[0, 2, 2]));
        for k in 1..=8 {
            assert_eq!(lazy_fubini_words(k).len() as u64, catalan(k as u64));
            assert!(lazy_fubini_words(k)
                .iter()
                .all(|w| is_fubini(w) && is_lazy_fubini(w)));
        }
    }

    #[test]
    fn lambda_bijection_examples() {
        assert_eq!(
            lambda_bijection(&Permutation::identity(4)).unwrap(),
            Partition::empty()
        );
        let mut parts: Vec<Partition> = unimodal_perms(4)
            .iter()
            .map(|u| lambda_bijection(u).unwrap())
            .collect();
        parts.sort();
        let mut want: Vec<Partition> = [
            vec![1, 2, 3],
            vec![2, 3],
            vec![1, 3],
            vec![1, 2],
            vec![3],
            vec![2],
            vec![1],
            vec![0],
        ]
        .into_iter()
        .map(|x| Partition::new(x).unwrap())
        .collect();
        want.sort();
        assert_eq!(parts, want);
        let u = lambda_inverse(&Partition::new(vec![2, 3]).unwrap(), 4).unwrap();
        assert_eq!(u, p("3421"));
        assert_eq!(u.length(), 5);
        assert!(lambda_inverse(&Partition::new(vec![2, 2]).unwrap(), 4).is_err());
        assert!(lambda_bijection(&p("3142")).is_err());
        for n in 1..=8 {
            for u in unimodal_perms(n) {
                let lam = lambda_bijection(&u).unwrap();
                assert_eq!(lam.size(), u.length());
                assert_eq!(lambda_inverse(&lam, n).unwrap(), u);
            }
        }
    }

    #[test]
    fn reports_small_n() {
        for n in 2..=5 {
            let s = SymmetricGroup::new(n).unwrap();
            let c = verify_catalan_equivalence(&s);
            assert!(c.passed(), "{c:?}");
            let u = verify_unimodal_equivalence(&s).unwrap();
            assert!(u.passed(), "{u:?}");
            let a = verify_annals(n).unwrap();
            assert!(a.passed(), "{a:?}");
            let sm = verify_smooth_classification(&s).unwrap();
            assert!(sm.passed(), "{sm:?}");
        }
        assert_eq!(
            verify_catalan_equivalence(&SymmetricGroup::new(4).unwrap()).principal,
            14
        );
    }

    #[test]
    fn smooth_polynomials_of_s4() {
        let s = SymmetricGroup::new(4).unwrap();
        let r = verify_smooth_classification(&s).unwrap();
        let want: BTreeSet<IntPolynomial> = [
            vec![1, 2, 3],
            vec![1, 2, 2],
            vec![1, 1, 2],
            vec![1, 2],
            vec![1, 1, 1],
            vec![1, 1],
            vec![1],
            vec![],
        ]
        .iter()
        .map(|e| IntPolynomial::q_analog_product(e))
        .collect();
        assert_eq!(r.smooth_polynomials, want);
    }
}
