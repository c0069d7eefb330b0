//! Lehmer codes: rank-compatible bijections from a finite Coxeter group onto
//! a product of chains whose inverse is order preserving into Bruhat order.
//!
//! Codes are materialized as lookup tables in both directions. The
//! constructors for the explicit codes live here; [`chains`] holds the chain
//! data used for types D and H3, and [`dihedral`] the exhaustive search over
//! dihedral codes.

pub mod chains;
pub mod dihedral;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coxeter::{BruhatPoset, ElementId, Group, TypeLabel};
use crate::error::{Error, Result};
use crate::multicomplex::ChainProduct;

/// A point of `{0..e_1} x ... x {0..e_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LehmerVector(pub Vec<u32>);

impl LehmerVector {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for LehmerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A map from an enumerated group into a product of chains, stored as
/// forward and inverse tables.
#[derive(Clone, Debug)]
pub struct LehmerCode {
    group: Arc<Group>,
    name: String,
    codomain: ChainProduct,
    forward: Vec<u32>,
    inverse: Vec<Option<ElementId>>,
}

impl LehmerCode {
    /// Builds a code from a table `w -> L(w)` indexed by element id. Values
    /// must lie in the box with the given exponents; bijectivity is not
    /// required here and is reported by [`verify_code`].
    pub fn from_table(
        group: Arc<Group>,
        name: impl Into<String>,
        exponents: &[u32],
        table: Vec<Vec<u32>>,
    ) -> Result<Self> {
        if table.len() != group.order() {
            return Err(Error::CodeMismatch(format!(
                "table has {} rows for a group of order {}",
                table.len(),
                group.order()
            )));
        }
        let codomain = ChainProduct::from_exponents(exponents);
        let k = exponents.len();
        let mut forward = Vec::with_capacity(group.order() * k);
        let mut inverse = vec![None; codomain.size()];
        for (w, row) in table.iter().enumerate() {
            let idx = codomain.index(row)?;
            forward.extend_from_slice(row);
            inverse[idx].get_or_insert(ElementId::from(w));
        }
        Ok(Self {
            group,
            name: name.into(),
            codomain,
            forward,
            inverse,
        })
    }

    fn require_bijective(self) -> Result<Self> {
        if self.codomain.size() != self.group.order() || self.inverse.iter().any(Option::is_none) {
            return Err(Error::ChainConstruction(format!(
                "{} on {} is not a bijection onto {:?}",
                self.name,
                self.group.system(),
                self.codomain.degrees()
            )));
        }
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<Group> {
        Arc::clone(&self.group)
    }

    pub fn codomain(&self) -> &ChainProduct {
        &self.codomain
    }

    /// The exponents `e_i`, i.e. the largest value of every coordinate.
    pub fn exponents(&self) -> Vec<u32> {
        self.codomain.exponents()
    }

    pub fn dim(&self) -> usize {
        self.codomain.dim()
    }

    /// `L(w)` as a slice.
    #[inline]
    pub fn encode(&self, w: ElementId) -> &[u32] {
        let k = self.dim();
        &self.forward[w.index() * k..(w.index() + 1) * k]
    }

    pub fn vector(&self, w: ElementId) -> LehmerVector {
        LehmerVector(self.encode(w).to_vec())
    }

    /// Box index of `L(w)`.
    pub fn encode_index(&self, w: ElementId) -> usize {
        self.codomain.index_unchecked(self.encode(w))
    }

    /// `L^-1(x)`, if `x` is in the image.
    pub fn decode(&self, x: &[u32]) -> Option<ElementId> {
        let idx = self.codomain.index(x).ok()?;
        self.inverse[idx]
    }

    pub fn decode_index(&self, idx: usize) -> Option<ElementId> {
        self.inverse.get(idx).copied().flatten()
    }

    /// Returns a copy with the values of `a` and `b` exchanged. Useful for
    /// negative controls of [`verify_code`].
    pub fn with_swapped(&self, a: ElementId, b: ElementId) -> Self {
        let rows: Vec<Vec<u32>> = self
            .group
            .ids()
            .map(|w| {
                let src = if w == a {
                    b
                } else if w == b {
                    a
                } else {
                    w
                };
                self.encode(src).to_vec()
            })
            .collect();
        Self::from_table(
            Arc::clone(&self.group),
            format!("{}-swapped", self.name),
            &self.exponents(),
            rows,
        )
        .expect("same values")
    }
}

/// Violations found by [`verify_code`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CodeViolation {
    /// Two elements share a code value.
    Collision {
        first: String,
        second: String,
        value: LehmerVector,
    },
    /// A point of the box has no preimage.
    Missing { value: LehmerVector },
    /// `sum L(w) != l(w)`.
    Rank {
        element: String,
        value: LehmerVector,
        length: u32,
    },
    /// `x <. y` in the box but `L^-1(x) </= L^-1(y)` in Bruhat order.
    Morphism {
        lower: LehmerVector,
        upper: LehmerVector,
        lower_element: String,
        upper_element: String,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeReport {
    pub code: String,
    pub system: String,
    pub elements: usize,
    pub box_covers_checked: usize,
    pub violations: Vec<CodeViolation>,
}

impl CodeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks bijectivity onto the box, `rank(L(w)) = l(w)`, and that
/// `L^-1(x) <= L^-1(y)` for every cover `x <. y` of the box.
pub fn verify_code(code: &LehmerCode, poset: &BruhatPoset) -> Result<CodeReport> {
    let g = code.group();
    if g.system() != poset.group().system() {
        return Err(Error::SystemMismatch);
    }
    let mut violations = Vec::new();
    let box_ = code.codomain();
    let mut owner: Vec<Option<ElementId>> = vec![None; box_.size()];
    for w in g.ids() {
        let v = code.vector(w);
        let idx = code.encode_index(w);
        match owner[idx] {
            Some(u) => violations.push(CodeViolation::Collision {
                first: g.display(u),
                second: g.display(w),
                value: v.clone(),
            }),
            None => owner[idx] = Some(w),
        }
        if v.rank() != g.length(w) {
            violations.push(CodeViolation::Rank {
                element: g.display(w),
                length: g.length(w),
                value: v,
            });
        }
    }
    for (idx, o) in owner.iter().enumerate() {
        if o.is_none() {
            violations.push(CodeViolation::Missing {
                value: LehmerVector(box_.point(idx)),
            });
        }
    }
    let mut checked = 0;
    for (x, &u) in owner.iter().enumerate() {
        let Some(u) = u else { continue };
        for (_, y) in box_.upper_covers(x) {
            let Some(v) = owner[y] else { continue };
            checked += 1;
            if !poset.leq(u, v) {
                violations.push(CodeViolation::Morphism {
                    lower: LehmerVector(box_.point(x)),
                    upper: LehmerVector(box_.point(y)),
                    lower_element: g.display(u),
                    upper_element: g.display(v),
                });
            }
        }
    }
    Ok(CodeReport {
        code: code.name().to_string(),
        system: g.system().name(),
        elements: g.order(),
        box_covers_checked: checked,
        violations,
    })
}

fn require_type(poset: &BruhatPoset, t: TypeLabel) -> Result<()> {
    let got = poset.group().system().type_label();
    if got != t {
        return Err(Error::WrongType {
            expected: t.to_string(),
            got: poset.group().system().name(),
        });
    }
    Ok(())
}

/// `w -> (l(w(1)), ..., l(w(n)))` for the quotient factorization along
/// `chain`; the exponents are the largest values reached per coordinate.
pub fn quotient_code(poset: &BruhatPoset, name: &str, chain: &[usize]) -> Result<LehmerCode> {
    let g = poset.group_arc();
    let rows: Vec<Vec<u32>> = g
        .ids()
        .map(|w| {
            g.quotient_factorization(w, chain)
                .into_iter()
                .map(|x| g.length(x))
                .collect()
        })
        .collect();
    let mut exps = vec![0u32; chain.len()];
    for r in &rows {
        for (e, &x) in exps.iter_mut().zip(r) {
            *e = (*e).max(x);
        }
    }
    LehmerCode::from_table(g, name, &exps, rows)?.require_bijective()
}

fn natural_chain(poset: &BruhatPoset) -> Vec<usize> {
    (0..poset.group().rank()).collect()
}

/// `L_{I2(m)}` with codomain `{0,1} x {0..m-1}`.
pub fn code_i2(poset: &BruhatPoset) -> Result<LehmerCode> {
    require_type(poset, TypeLabel::I2)?;
    quotient_code(poset, "LI2", &natural_chain(poset))
}

/// `L_{A_n}` with codomain `prod {0..i}`.
pub fn code_a(poset: &BruhatPoset) -> Result<LehmerCode> {
    require_type(poset, TypeLabel::A)?;
    quotient_code(poset, "LA", &natural_chain(poset))
}

/// `L_{B_n}` with codomain `prod {0..2i-1}`. Also checks that the maximal
/// quotient by `S \ {s_n}` is a Bruhat chain with `2n` elements.
pub fn code_b(poset: &BruhatPoset) -> Result<LehmerCode> {
    require_type(poset, TypeLabel::B)?;
    let g = poset.group();
    let n = g.rank();
    let j: Vec<usize> = (0..n - 1).collect();
    let mut q = g.left_quotient(&j);
    q.sort_by_key(|&w| g.length(w));
    let is_chain = q.len() == 2 * n
        && q.windows(2)
            .all(|p| g.length(p[1]) == g.length(p[0]) + 1 && poset.leq(p[0], p[1]));
    if !is_chain {
        return Err(Error::ChainConstruction(format!(
            "maximal quotient of {} has {} elements and is not a chain of length {}",
            g.system(),
            q.len(),
            2 * n
        )));
    }
    quotient_code(poset, "LB", &natural_chain(poset))
}

/// The variant of `L_{B_n}` obtained from the generator order
/// `s2, s1, s3, ..., sn`.
pub fn code_b_variant(poset: &BruhatPoset) -> Result<LehmerCode> {
    require_type(poset, TypeLabel::B)?;
    let mut chain = natural_chain(poset);
    chain.swap(0, 1);
    quotient_code(poset, "LB-variant", &chain)
}

/// `L_{D_n}`, built from the chains `X_1, ..., X_(n-1), Y_n`.
pub fn code_d(poset: &BruhatPoset) -> Result<LehmerCode> {
    require_type(poset, TypeLabel::D)?;
    chains::d_code(poset)
}

/// `L_{H3}`, built from the chains `X, Y, Z`.
pub fn code_h3(poset: &BruhatPoset) -> Result<LehmerCode> {
    require_type(poset, TypeLabel::H3)?;
    chains::h3_code(poset)
}

/// The standard code of an irreducible system.
pub fn standard_code(poset: &BruhatPoset) -> Result<LehmerCode> {
    match poset.group().system().type_label() {
        TypeLabel::A => code_a(poset),
        TypeLabel::B => code_b(poset),
        TypeLabel::D => code_d(poset),
        TypeLabel::H3 => code_h3(poset),
        TypeLabel::I2 => code_i2(poset),
        TypeLabel::Product => Err(Error::WrongType {
            expected: "an irreducible system".into(),
            got: poset.group().system().name(),
        }),
    }
}

/// Names accepted by [`code_by_name`] for a system of the given type.
pub fn code_names(label: TypeLabel) -> Vec<&'static str> {
    match label {
        TypeLabel::B => vec!["standard", "dual", "variant", "dual-variant"],
        TypeLabel::Product => vec![],
        _ => vec!["standard", "dual"],
    }
}

/// Looks up a shipped code: `standard`, `dual`, and for type B also
/// `variant` and `dual-variant`. The code's own name (e.g. `LA`) works too.
pub fn code_by_name(poset: &BruhatPoset, name: &str) -> Result<LehmerCode> {
    let label = poset.group().system().type_label();
    let std = || standard_code(poset);
    let code = match name {
        "standard" => Some(std()?),
        "dual" => Some(dual_code(&std()?)),
        "variant" if label == TypeLabel::B => Some(code_b_variant(poset)?),
        "dual-variant" if label == TypeLabel::B => Some(dual_code(&code_b_variant(poset)?)),
        _ => None,
    };
    if let Some(c) = code {
        return Ok(c);
    }
    if label != TypeLabel::Product {
        let s = std()?;
        let mut candidates = vec![dual_code(&s), s];
        if label == TypeLabel::B {
            let v = code_b_variant(poset)?;
            candidates.push(dual_code(&v));
            candidates.push(v);
        }
        if let Some(c) = candidates.into_iter().find(|c| c.name() == name) {
            return Ok(c);
        }
    }
    Err(Error::UnknownCode {
        name: name.to_string(),
        system: poset.group().system().name(),
        available: code_names(label).join(", "),
    })
}

/// `L*(w) = L(w^-1)`.
pub fn dual_code(code: &LehmerCode) -> LehmerCode {
    let g = code.group_arc();
    let rows: Vec<Vec<u32>> = g
        .ids()
        .map(|w| code.encode(g.inverse(w)).to_vec())
        .collect();
    let name = match code.name().strip_prefix("dual-of-") {
        Some(base) => base.to_string(),
        None => format!("dual-of-{}", code.name()),
    };
    LehmerCode::from_table(Arc::clone(&g), name, &code.exponents(), rows)
        .expect("inversion permutes the table")
}

/// The concatenated code `(w1, w2) -> (L1(w1), L2(w2))` on the product
/// group, whose system must be the product of the two code systems.
pub fn product_code(
    product: Arc<Group>,
    first: &LehmerCode,
    second: &LehmerCode,
) -> Result<LehmerCode> {
    let Some((s1, s2)) = product.system().factors() else {
        return Err(Error::CodeMismatch(format!(
            "{} is not a product system",
            product.system()
        )));
    };
    if s1 != first.group().system() || s2 != second.group().system() {
        return Err(Error::CodeMismatch(format!(
            "factors {} x {} do not match codes on {} and {}",
            s1,
            s2,
            first.group().system(),
            second.group().system()
        )));
    }
    let mut rows = Vec::with_capacity(product.order());
    for w in product.ids() {
        let crate::coxeter::Canonical::Pair(a, b) = product.canonical(w) else {
            return Err(Error::SystemMismatch);
        };
        let a = first.group().lookup(a).ok_or(Error::SystemMismatch)?;
        let b = second.group().lookup(b).ok_or(Error::SystemMismatch)?;
        let mut row = first.encode(a).to_vec();
        row.extend_from_slice(second.encode(b));
        rows.push(row);
    }
    let mut exps = first.exponents();
    exps.extend(second.exponents());
    let name = format!("product({},{})", first.name(), second.name());
    LehmerCode::from_table(product, name, &exps, rows)?.require_bijective()
}

/// `k -> |{ i < k : w^-1(i) > w^-1(k) }|` for a permutation in one-line
/// notation (values `1..=n`); the first entry is always 0.
pub fn code_a_inversions(w: &[u32]) -> LehmerVector {
    let n = w.len();
    let mut inv = vec![0usize; n + 1];
    for (pos, &v) in w.iter().enumerate() {
        inv[v as usize] = pos;
    }
    LehmerVector(
        (1..=n)
            .map(|k| (1..k).filter(|&i| inv[i] > inv[k]).count() as u32)
            .collect(),
    )
}

/// The classical Lehmer code `i -> |{ j > i : w(j) < w(i) }|`.
pub fn classic_lehmer(w: &[u32]) -> LehmerVector {
    LehmerVector(
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count() as u32)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;

    fn poset(sys: CoxeterSystem) -> BruhatPoset {
        BruhatPoset::build(sys).unwrap()
    }

    fn one_line(g: &Group, w: ElementId) -> Vec<u32> {
        g.canonical(w)
            .one_line()
            .unwrap()
            .iter()
            .map(|&x| x as u32)
            .collect()
    }

    #[test]
    fn type_a_examples() {
        let p = poset(CoxeterSystem::type_a(3));
        let l = code_a(&p).unwrap();
        let g = p.group();
        let w = g.apply_labels(&[2, 1, 3, 2]).unwrap();
        assert_eq!(l.vector(w), LehmerVector(vec![0, 2, 2]));
        assert_eq!(l.vector(g.identity()).0, vec![0, 0, 0]);
        assert_eq!(l.vector(g.longest()).0, vec![1, 2, 3]);
        assert_eq!(l.exponents(), vec![1, 2, 3]);
        assert_eq!(l.vector(w).to_string(), "(0,2,2)");
        assert_eq!(code_a_inversions(&one_line(g, w)).0, vec![0, 0, 2, 2]);
        assert!(verify_code(&l, &p).unwrap().passed());
    }

    #[test]
    fn inversion_formula_agrees_with_quotient_code() {
        for n in 2..=6 {
            let p = poset(CoxeterSystem::type_a(n - 1));
            let l = code_a(&p).unwrap();
            let g = p.group();
            for w in g.ids() {
                let mut expect = vec![0];
                expect.extend_from_slice(l.encode(w));
                assert_eq!(code_a_inversions(&one_line(g, w)).0, expect);
            }
        }
    }

    #[test]
    fn classic_lehmer_identity() {
        // classic(w)_i = L_n(w0 w^-1 w0)_(n-i+1)
        for n in 2..=5 {
            let p = poset(CoxeterSystem::type_a(n - 1));
            let g = p.group();
            let w0 = g.longest();
            for w in g.ids() {
                let c = classic_lehmer(&one_line(g, w));
                let x = g.multiply(g.multiply(w0, g.inverse(w)), w0);
                let ln = code_a_inversions(&one_line(g, x));
                for i in 0..n {
                    assert_eq!(c.0[i], ln.0[n - 1 - i]);
                }
            }
        }
        assert_eq!(classic_lehmer(&[4, 3, 2, 1]).0, vec![3, 2, 1, 0]);
        assert_eq!(classic_lehmer(&[1, 2, 3]).0, vec![0, 0, 0]);
    }

    #[test]
    fn type_b_and_dihedral_examples() {
        let p = poset(CoxeterSystem::type_b(2));
        let l = code_b(&p).unwrap();
        let g = p.group();
        let w = g.apply_labels(&[2, 1, 2]).unwrap();
        assert_eq!(l.encode(w), &[0, 3]);
        let p3 = poset(CoxeterSystem::type_b(3));
        let l3 = code_b(&p3).unwrap();
        assert_eq!(l3.exponents(), vec![1, 3, 5]);
        assert!(verify_code(&l3, &p3).unwrap().passed());

        let i4 = poset(CoxeterSystem::type_i2(4));
        let li = code_i2(&i4).unwrap();
        assert_eq!(li.encode(i4.group().longest()), &[1, 3]);
        assert_eq!(li.encode(i4.group().identity()), &[0, 0]);
        assert!(matches!(code_a(&i4), Err(Error::WrongType { .. })));
    }

    #[test]
    fn duals_and_products() {
        let p = poset(CoxeterSystem::type_a(3));
        let l = code_a(&p).unwrap();
        let d = dual_code(&l);
        assert_eq!(d.name(), "dual-of-LA");
        assert!(verify_code(&d, &p).unwrap().passed());
        let dd = dual_code(&d);
        assert_eq!(dd.name(), "LA");
        for w in p.group().ids() {
            assert_eq!(dd.encode(w), l.encode(w));
        }
        let w0 = p.group().longest();
        assert_eq!(d.encode(w0), l.encode(w0));

        let a2 = poset(CoxeterSystem::type_a(2));
        let a1 = poset(CoxeterSystem::type_a(1));
        let prod = poset(CoxeterSystem::product(
            CoxeterSystem::type_a(2),
            CoxeterSystem::type_a(1),
        ));
        let lp = product_code(
            prod.group_arc(),
            &code_a(&a2).unwrap(),
            &code_a(&a1).unwrap(),
        )
        .unwrap();
        assert_eq!(lp.exponents(), vec![1, 2, 1]);
        assert_eq!(lp.encode(prod.group().identity()), &[0, 0, 0]);
        assert!(verify_code(&lp, &prod).unwrap().passed());
        let wrong = product_code(
            prod.group_arc(),
            &code_a(&a1).unwrap(),
            &code_a(&a2).unwrap(),
        );
        assert!(matches!(wrong, Err(Error::CodeMismatch(_))));

        let a1a1 = poset(CoxeterSystem::product(
            CoxeterSystem::type_a(1),
            CoxeterSystem::type_a(1),
        ));
        let l11 = product_code(
            a1a1.group_arc(),
            &code_a(&a1).unwrap(),
            &code_a(&a1).unwrap(),
        )
        .unwrap();
        assert_eq!(l11.codomain().degrees(), &[2, 2]);
    }

    #[test]
    fn corrupted_table_is_caught() {
        let p = poset(CoxeterSystem::type_a(3));
        let l = code_a(&p).unwrap();
        let g = p.group();
        // exchanging the codes of s1 and s3 keeps ranks but breaks monotonicity
        let s1 = g.generator(0).unwrap();
        let s3 = g.generator(2).unwrap();
        let bad = l.with_swapped(s1, s3);
        let report = verify_code(&bad, &p).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, CodeViolation::Morphism { .. })));
    }

    #[test]
    fn variant_b_code_is_valid() {
        for n in 2..=4 {
            let p = poset(CoxeterSystem::type_b(n));
            let l = code_b_variant(&p).unwrap();
            assert!(verify_code(&l, &p).unwrap().passed(), "B{n}");
        }
    }

    #[test]
    fn codes_by_name() {
        let p = BruhatPoset::build(CoxeterSystem::type_b(3)).unwrap();
        assert_eq!(code_by_name(&p, "standard").unwrap().name(), "LB");
        assert_eq!(code_by_name(&p, "variant").unwrap().name(), "LB-variant");
        assert_eq!(
            code_by_name(&p, "dual-variant").unwrap().name(),
            "dual-of-LB-variant"
        );
        assert_eq!(code_by_name(&p, "dual-of-LB").unwrap().name(), "dual-of-LB");
        let a = BruhatPoset::build(CoxeterSystem::type_a(2)).unwrap();
        assert!(matches!(
            code_by_name(&a, "variant"),
            Err(Error::UnknownCode { available, .. }) if available == "standard, dual"
        ));
    }
}
