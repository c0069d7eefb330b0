//! Lower Bruhat intervals seen through a Lehmer code: the ideal `J_w`, the
//! Lehmer complexes, three ways to compute `h_w(q)`, the Lh order and the
//! principal, unimodal and palindromic classes.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{LehmerCode, LehmerVector};
use crate::coxeter::{BruhatPoset, ElementId, Group};
use crate::error::{Error, Result};
use crate::multicomplex::{ChainProduct, OrderIdeal};
use crate::poly::IntPolynomial;
use crate::simplicial::SimplicialComplex;

/// Default bound on the number of maxima for the inclusion-exclusion route.
pub const DEFAULT_MAXIMA_BOUND: usize = 20;

/// How `h_w(q)` is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HRoute {
    /// `Σ_{v <= w} q^l(v)` over the enumerated interval.
    Direct,
    /// Restriction sets of a rank-order shelling of `M_d(J_w)`.
    Complex,
    /// Inclusion-exclusion over the maxima of `J_w`.
    Maduro,
}

impl HRoute {
    pub const ALL: [HRoute; 3] = [HRoute::Direct, HRoute::Complex, HRoute::Maduro];
}

impl FromStr for HRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "direct" => Ok(HRoute::Direct),
            "complex" => Ok(HRoute::Complex),
            "maduro" | "maxima" => Ok(HRoute::Maduro),
            _ => Err(Error::Parse {
                position: 0,
                message: format!("unknown route {s:?}, expected direct, complex or maduro"),
            }),
        }
    }
}

impl std::fmt::Display for HRoute {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HRoute::Direct => "direct",
            HRoute::Complex => "complex",
            HRoute::Maduro => "maduro",
        })
    }
}

/// `Σ_{v <= w} q^l(v)`.
pub fn h_direct(poset: &BruhatPoset, w: ElementId) -> IntPolynomial {
    poset.group().poincare_polynomial(poset.lower_interval(w))
}

/// The Lehmer complex of the whole group: `M_d` with `d_i = e_i + 1`.
pub fn lehmer_complex_system(group: &Group) -> Result<SimplicialComplex> {
    let d = ChainProduct::from_exponents(&group.exponents()?);
    SimplicialComplex::m_complex(&d)
}

/// `Σ_{∅ ≠ X ⊆ maxima} (-1)^(|X|+1) Π_i [(∧X)_i + 1]_q` with `∧` the
/// componentwise minimum. Points are 0-based.
pub fn inclusion_exclusion(maxima: &[Vec<u32>], bound: usize) -> Result<IntPolynomial> {
    if maxima.len() > bound {
        return Err(Error::TooManyMaxima {
            count: maxima.len(),
            bound,
        });
    }
    if maxima.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    // signed multiplicity of each meet, collected before expanding products
    let mut weight: HashMap<Vec<u32>, i64> = HashMap::new();
    fn walk(
        pts: &[Vec<u32>],
        start: usize,
        meet: &[u32],
        size: usize,
        out: &mut HashMap<Vec<u32>, i64>,
    ) {
        for i in start..pts.len() {
            let m: Vec<u32> = meet.iter().zip(&pts[i]).map(|(&a, &b)| a.min(b)).collect();
            let sign = if size.is_multiple_of(2) { 1 } else { -1 };
            *out.entry(m.clone()).or_default() += sign;
            walk(pts, i + 1, &m, size + 1, out);
        }
    }
    let top = vec![u32::MAX; maxima[0].len()];
    walk(maxima, 0, &top, 0, &mut weight);
    let mut total = IntPolynomial::zero();
    for (m, c) in weight {
        if c != 0 {
            total = total + IntPolynomial::q_analog_product(&m).scalar(c);
        }
    }
    Ok(total)
}

/// Summary of one lower interval.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalAnalysis {
    pub element: String,
    pub length: u32,
    pub code: LehmerVector,
    /// `J_w`, 0-based.
    pub ideal: Vec<Vec<u32>>,
    pub maxima: Vec<Vec<u32>>,
    pub h: IntPolynomial,
    pub principal: bool,
    pub unimodal: bool,
    pub palindromic: bool,
}

/// Closure and distributivity of the principal elements under `⋏` and `⋎`.
#[derive(Debug, Clone, Serialize)]
pub struct LatticeReport {
    pub code: String,
    pub principal_count: usize,
    pub meet_closed: bool,
    pub join_closed: bool,
    pub distributive: bool,
    pub witnesses: Vec<String>,
}

impl LatticeReport {
    pub fn passed(&self) -> bool {
        self.meet_closed && self.join_closed && self.distributive
    }
}

const MAX_WITNESSES: usize = 10;

/// A Bruhat poset together with a Lehmer code on the same group.
pub struct CodedGroup<'a> {
    poset: &'a BruhatPoset,
    code: &'a LehmerCode,
    principal: OnceLock<Vec<bool>>,
}

impl<'a> CodedGroup<'a> {
    pub fn new(poset: &'a BruhatPoset, code: &'a LehmerCode) -> Result<Self> {
        if poset.group().system() != code.group().system() {
            return Err(Error::SystemMismatch);
        }
        Ok(Self {
            poset,
            code,
            principal: OnceLock::new(),
        })
    }

    pub fn poset(&self) -> &BruhatPoset {
        self.poset
    }

    pub fn code(&self) -> &LehmerCode {
        self.code
    }

    pub fn group(&self) -> &Group {
        self.poset.group()
    }

    /// `J_w = { L(v) : v <= w }`, 0-based. Fails if the image is not an
    /// order ideal, which means the code is invalid.
    pub fn ideal(&self, w: ElementId) -> Result<OrderIdeal> {
        let mut idx: Vec<usize> = self
            .poset
            .lower_interval(w)
            .into_iter()
            .map(|v| self.code.encode_index(v))
            .collect();
        idx.sort_unstable();
        idx.dedup();
        OrderIdeal::from_indices_checked(self.code.codomain(), &idx).ok_or_else(|| {
            Error::NotAnIdeal {
                element: self.group().display(w),
            }
        })
    }

    /// `M_d(J_w)`.
    pub fn complex(&self, w: ElementId) -> Result<SimplicialComplex> {
        SimplicialComplex::m_complex_of_ideal(&self.ideal(w)?)
    }

    /// The elements whose codes are the maxima of `J_w`.
    pub fn maxima(&self, w: ElementId) -> Result<Vec<ElementId>> {
        let ideal = self.ideal(w)?;
        ideal
            .maxima_indices()
            .into_iter()
            .map(|i| self.decode_index(i))
            .collect()
    }

    fn decode_index(&self, i: usize) -> Result<ElementId> {
        self.code.decode_index(i).ok_or_else(|| {
            Error::CodeMismatch(format!(
                "{:?} is not in the image of {}",
                self.code.codomain().point(i),
                self.code.name()
            ))
        })
    }

    pub fn h_poly(&self, w: ElementId, route: HRoute) -> Result<IntPolynomial> {
        self.h_poly_with_bound(w, route, DEFAULT_MAXIMA_BOUND)
    }

    pub fn h_poly_with_bound(
        &self,
        w: ElementId,
        route: HRoute,
        maxima_bound: usize,
    ) -> Result<IntPolynomial> {
        match route {
            HRoute::Direct => Ok(h_direct(self.poset, w)),
            HRoute::Complex => {
                let ideal = self.ideal(w)?;
                let complex = SimplicialComplex::m_complex_of_ideal(&ideal)?;
                let amb = ideal.ambient();
                let mut order: Vec<usize> = (0..ideal.len()).collect();
                order.sort_by_key(|&p| amb.rank_of_index(ideal.indices()[p]));
                let check = complex.verify_shelling(&order)?;
                if !check.is_shelling {
                    return Err(Error::NotShelling(format!(
                        "rank order of J_{}",
                        self.group().display(w)
                    )));
                }
                Ok(IntPolynomial::from_coeffs(check.h_vector))
            }
            HRoute::Maduro => inclusion_exclusion(&self.ideal(w)?.maxima(), maxima_bound),
        }
    }

    /// `u ⊑ v` iff `L(u) <= L(v)` componentwise.
    pub fn lh_leq(&self, u: ElementId, v: ElementId) -> bool {
        crate::multicomplex::leq(self.code.encode(u), self.code.encode(v))
    }

    /// `L^-1(L(u) ∧ L(v))`.
    pub fn curlywedge(&self, u: ElementId, v: ElementId) -> Result<ElementId> {
        let m = crate::multicomplex::meet(self.code.encode(u), self.code.encode(v));
        self.decode_index(self.code.codomain().index(&m)?)
    }

    /// `L^-1(L(u) ∨ L(v))`.
    pub fn curlyvee(&self, u: ElementId, v: ElementId) -> Result<ElementId> {
        let m = crate::multicomplex::join(self.code.encode(u), self.code.encode(v));
        self.decode_index(self.code.codomain().index(&m)?)
    }

    fn principal_flags(&self) -> &[bool] {
        self.principal.get_or_init(|| {
            let ids: Vec<ElementId> = self.group().ids().collect();
            ids.par_iter().map(|&w| self.compute_principal(w)).collect()
        })
    }

    fn compute_principal(&self, w: ElementId) -> bool {
        let lw = self.code.encode(w);
        let box_size: usize = lw.iter().map(|&x| x as usize + 1).product();
        let below = self.poset.lower_interval(w);
        below.len() == box_size
            && below
                .iter()
                .all(|&v| crate::multicomplex::leq(self.code.encode(v), lw))
    }

    /// `[e, w]_Lh = [e, w]` as sets.
    pub fn is_principal(&self, w: ElementId) -> bool {
        self.principal_flags()[w.index()]
    }

    pub fn principal_set(&self) -> Vec<ElementId> {
        let flags = self.principal_flags();
        self.group().ids().filter(|w| flags[w.index()]).collect()
    }

    /// Principal codes that are coordinate permutations of `L(w)`.
    pub fn orbit(&self, w: ElementId) -> Result<Vec<LehmerVector>> {
        if !self.is_principal(w) {
            return Err(Error::NotPrincipal(self.group().display(w)));
        }
        let mut perm = self.code.encode(w).to_vec();
        perm.sort_unstable();
        let mut out = Vec::new();
        loop {
            if let Some(u) = self.code.decode(&perm) {
                if self.is_principal(u) {
                    out.push(LehmerVector(perm.clone()));
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(out)
    }

    /// `L(w)` is the lexicographic minimum of its orbit. Requires `w`
    /// principal.
    pub fn is_unimodal(&self, w: ElementId) -> Result<bool> {
        let orbit = self.orbit(w)?;
        Ok(orbit.first().map(|x| x.entries()) == Some(self.code.encode(w)))
    }

    pub fn unimodal_set(&self) -> Vec<ElementId> {
        self.principal_set()
            .into_iter()
            .filter(|&w| self.is_unimodal(w).expect("principal"))
            .collect()
    }

    /// `{h_w : w ∈ set}` for the given elements.
    pub fn h_set(&self, set: &[ElementId]) -> BTreeSet<IntPolynomial> {
        set.iter().map(|&w| h_direct(self.poset, w)).collect()
    }

    /// Bruhat order and Lh order coincide on `set`; returns offending pairs.
    pub fn order_disagreements(&self, set: &[ElementId]) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for &u in set {
            for &v in set {
                if self.poset.leq(u, v) != self.lh_leq(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn analyze(&self, w: ElementId) -> Result<IntervalAnalysis> {
        let ideal = self.ideal(w)?;
        let h = h_direct(self.poset, w);
        let principal = self.is_principal(w);
        Ok(IntervalAnalysis {
            element: self.group().display(w),
            length: self.group().length(w),
            code: self.code.vector(w),
            ideal: ideal.points(),
            maxima: ideal.maxima(),
            palindromic: h.is_palindromic(self.group().length(w) as usize)?,
            h,
            principal,
            unimodal: principal && self.is_unimodal(w)?,
        })
    }

    /// Closure of the principal set under `⋏` and `⋎` and the distributive
    /// laws on all principal triples.
    pub fn lattice_report(&self) -> Result<LatticeReport> {
        let p = self.principal_set();
        let g = self.group();
        let mut witnesses = Vec::new();
        let note = |w: &mut Vec<String>, s: String| {
            if w.len() < MAX_WITNESSES {
                w.push(s);
            }
        };
        let (mut meet_closed, mut join_closed, mut distributive) = (true, true, true);
        for &a in &p {
            for &b in &p {
                if !self.is_principal(self.curlywedge(a, b)?) {
                    meet_closed = false;
                    note(
                        &mut witnesses,
                        format!("{} meet {}", g.display(a), g.display(b)),
                    );
                }
                if !self.is_principal(self.curlyvee(a, b)?) {
                    join_closed = false;
                    note(
                        &mut witnesses,
                        format!("{} join {}", g.display(a), g.display(b)),
                    );
                }
                for &c in &p {
                    let lhs = self.curlywedge(a, self.curlyvee(b, c)?)?;
                    let rhs = self.curlyvee(self.curlywedge(a, b)?, self.curlywedge(a, c)?)?;
                    if lhs != rhs {
                        distributive = false;
                        note(
                            &mut witnesses,
                            format!("{} {} {}", g.display(a), g.display(b), g.display(c)),
                        );
                    }
                }
            }
        }
        Ok(LatticeReport {
            code: self.code.name().to_string(),
            principal_count: p.len(),
            meet_closed,
            join_closed,
            distributive,
            witnesses,
        })
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `{h_w : h_w palindromic of degree l(w)}`.
pub fn pal_set(poset: &BruhatPoset) -> BTreeSet<IntPolynomial> {
    let g = poset.group();
    let ids: Vec<ElementId> = g.ids().collect();
    ids.par_iter()
        .filter_map(|&w| {
            let h = h_direct(poset, w);
            h.is_palindromic(g.length(w) as usize)
                .expect("nonzero")
                .then_some(h)
        })
        .collect::<HashSet<_>>()
        .into_iter()
        .collect()
}

/// Expected relation between a Pal set size and a unimodal count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Greater,
    Equal,
}

#[derive(Debug, Clone, Serialize)]
pub struct InclusionCheck {
    pub system: String,
    pub code: String,
    pub pal: usize,
    pub unimodal: usize,
    pub expected: Relation,
    pub holds: bool,
}

/// `|Pal(W)|` against `|U(L)|` for a system and code.
pub fn compare_pal_unimodal(
    poset: &BruhatPoset,
    code: &LehmerCode,
    expected: Relation,
) -> Result<InclusionCheck> {
    let cg = CodedGroup::new(poset, code)?;
    let pal = pal_set(poset).len();
    let unimodal = cg.unimodal_set().len();
    let holds = match expected {
        Relation::Greater => pal > unimodal,
        Relation::Equal => pal == unimodal,
    };
    Ok(InclusionCheck {
        system: poset.group().system().name(),
        code: code.name().to_string(),
        pal,
        unimodal,
        expected,
        holds,
    })
}

/// The comparisons for `B3`, `B4`, `D4` and `D5`.
pub fn verify_strict_inclusions() -> Result<Vec<InclusionCheck>> {
    use crate::codes::{code_b, code_b_variant, code_d};
    use crate::coxeter::CoxeterSystem;
    let b3 = BruhatPoset::build(CoxeterSystem::type_b(3))?;
    let b4 = BruhatPoset::build(CoxeterSystem::type_b(4))?;
    let d4 = BruhatPoset::build(CoxeterSystem::type_d(4))?;
    let d5 = BruhatPoset::build(CoxeterSystem::type_d(5))?;
    Ok(vec![
        compare_pal_unimodal(&b3, &code_b(&b3)?, Relation::Greater)?,
        compare_pal_unimodal(&b3, &code_b_variant(&b3)?, Relation::Equal)?,
        compare_pal_unimodal(&b4, &code_b_variant(&b4)?, Relation::Greater)?,
        compare_pal_unimodal(&d4, &code_d(&d4)?, Relation::Equal)?,
        compare_pal_unimodal(&d5, &code_d(&d5)?, Relation::Greater)?,
    ])
}
