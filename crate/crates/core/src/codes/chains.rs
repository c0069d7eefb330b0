//! Bruhat chains used to build the codes of types D_n and H3.
//!
//! The words are stored in `data/chains.json` with printed generator labels
//! (`0` is `s0` in type D). [`generate_d_chains`] and [`generate_h3_chains`]
//! rebuild the same lists from their defining patterns; a test keeps the two
//! in sync.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::LehmerCode;
use crate::coxeter::{BruhatPoset, ElementId, Group};
use crate::error::{Error, Result};

pub const CHAINS_JSON: &str = include_str!("../../data/chains.json");

/// `system name -> chain name -> words`.
pub type ChainTable = BTreeMap<String, BTreeMap<String, Vec<Vec<u32>>>>;

pub fn stored_chains() -> Result<ChainTable> {
    serde_json::from_str(CHAINS_JSON).map_err(|e| Error::ChainConstruction(e.to_string()))
}

/// `X_1, ..., X_(n-1), Y_n` for D_n as label words, in that order.
///
/// `X_i` lists `e, s_i, s_i s_(i-1), ..., s_i ... s_1`, then
/// `s_i ... s_3 s0 s2 s1` followed by its right multiples by
/// `s3, s3 s4, ..., s3 ... s_i`. `Y_n` is `e, s0, s0 s2, ..., s0 s2 ... s_(n-1)`.
pub fn generate_d_chains(n: u32) -> Vec<(String, Vec<Vec<u32>>)> {
    let mut out = vec![("X1".to_string(), vec![vec![], vec![1]])];
    for i in 2..n {
        let mut chain: Vec<Vec<u32>> = vec![vec![]];
        for k in (1..=i).rev() {
            chain.push((k..=i).rev().collect());
        }
        let mut head: Vec<u32> = (3..=i).rev().collect();
        head.extend([0, 2, 1]);
        chain.push(head.clone());
        for k in 3..=i {
            let mut w = head.clone();
            w.extend(3..=k);
            chain.push(w);
        }
        out.push((format!("X{i}"), chain));
    }
    let mut y: Vec<Vec<u32>> = vec![vec![], vec![0]];
    for k in 2..n {
        let mut w = vec![0];
        w.extend(2..=k);
        y.push(w);
    }
    out.push((format!("Y{n}"), y));
    out
}

/// `X, Y, Z` for H3 as label words.
pub fn generate_h3_chains() -> Vec<(String, Vec<Vec<u32>>)> {
    let x_tail = [3, 2, 3, 2, 1, 2, 3, 2, 3];
    let x: Vec<Vec<u32>> = (0..=x_tail.len()).map(|k| x_tail[..k].to_vec()).collect();
    let y = vec![
        vec![],
        vec![2],
        vec![2, 1],
        vec![3, 2, 1],
        vec![2, 3, 2, 1],
        vec![1, 2, 3, 2, 1],
    ];
    let z = vec![
        vec![1],
        vec![1, 2],
        vec![1, 2, 1],
        vec![1, 3, 2, 1],
        vec![2, 1, 3, 2, 1],
        vec![1, 2, 1, 3, 2, 1],
    ];
    vec![("X".into(), x), ("Y".into(), y), ("Z".into(), z)]
}

/// Chain words for `system_name`, taken from the data file when present
/// and generated otherwise.
pub fn chain_words(system_name: &str) -> Result<Vec<(String, Vec<Vec<u32>>)>> {
    let generated = if system_name == "H3" {
        generate_h3_chains()
    } else if let Some(n) = system_name
        .strip_prefix('D')
        .and_then(|r| r.parse::<u32>().ok())
    {
        generate_d_chains(n)
    } else {
        return Err(Error::ChainConstruction(format!(
            "no chains are defined for {system_name}"
        )));
    };
    let stored = stored_chains()?;
    let Some(table) = stored.get(system_name) else {
        return Ok(generated);
    };
    generated
        .into_iter()
        .map(|(name, _)| {
            table
                .get(&name)
                .map(|w| (name.clone(), w.clone()))
                .ok_or_else(|| {
                    Error::ChainConstruction(format!(
                        "{system_name}: chain {name} missing from data"
                    ))
                })
        })
        .collect()
}

/// Resolves label words to elements and checks that consecutive entries are
/// Bruhat covers.
pub fn resolve_chain(
    poset: &BruhatPoset,
    name: &str,
    words: &[Vec<u32>],
) -> Result<Vec<ElementId>> {
    let g = poset.group();
    let elems = words
        .iter()
        .map(|w| {
            g.apply_labels(w)
                .map_err(|e| Error::ChainConstruction(format!("{name}: word {w:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    for (w, &x) in words.iter().zip(&elems) {
        if g.length(x) as usize != w.len() {
            return Err(Error::ChainConstruction(format!(
                "{name}: word {w:?} is not reduced"
            )));
        }
    }
    for p in elems.windows(2) {
        if g.length(p[1]) != g.length(p[0]) + 1 || !poset.leq(p[0], p[1]) {
            return Err(Error::ChainConstruction(format!(
                "{name}: {} is not covered by {}",
                g.word_string(p[0]),
                g.word_string(p[1])
            )));
        }
    }
    Ok(elems)
}

/// Result of multiplying out every tuple of a list of factor sets.
pub(crate) struct ProductTable {
    pub rows: Vec<Option<Vec<u32>>>,
    pub collisions: Vec<ElementId>,
    pub non_additive: Vec<ElementId>,
}

impl ProductTable {
    pub fn bijective(&self) -> bool {
        self.collisions.is_empty() && self.rows.iter().all(Option::is_some)
    }
}

/// Enumerates `f_1 f_2 ... f_r` over all choices of `f_i` from factor `i`,
/// recording the concatenated coordinates of each product.
pub(crate) fn product_table(g: &Group, factors: &[Vec<(Vec<u32>, ElementId)>]) -> ProductTable {
    let mut t = ProductTable {
        rows: vec![None; g.order()],
        collisions: Vec::new(),
        non_additive: Vec::new(),
    };
    fn go(
        g: &Group,
        factors: &[Vec<(Vec<u32>, ElementId)>],
        level: usize,
        prefix: ElementId,
        prefix_len: u32,
        coords: &mut Vec<u32>,
        t: &mut ProductTable,
    ) {
        if level == factors.len() {
            if g.length(prefix) != prefix_len {
                t.non_additive.push(prefix);
            }
            match &t.rows[prefix.index()] {
                Some(_) => t.collisions.push(prefix),
                None => t.rows[prefix.index()] = Some(coords.clone()),
            }
            return;
        }
        for (c, x) in &factors[level] {
            let n = coords.len();
            coords.extend_from_slice(c);
            go(
                g,
                factors,
                level + 1,
                g.multiply(prefix, *x),
                prefix_len + g.length(*x),
                coords,
                t,
            );
            coords.truncate(n);
        }
    }
    go(
        g,
        factors,
        0,
        ElementId::IDENTITY,
        0,
        &mut Vec::new(),
        &mut t,
    );
    t
}

fn positional(chain: &[ElementId]) -> Vec<(Vec<u32>, ElementId)> {
    chain
        .iter()
        .enumerate()
        .map(|(j, &x)| (vec![j as u32], x))
        .collect()
}

fn d_chains(poset: &BruhatPoset) -> Result<Vec<(String, Vec<ElementId>)>> {
    let name = poset.group().system().name();
    chain_words(&name)?
        .into_iter()
        .map(|(c, words)| Ok((c.clone(), resolve_chain(poset, &c, &words)?)))
        .collect()
}

fn table_into_code(
    poset: &BruhatPoset,
    name: &str,
    exps: &[u32],
    t: ProductTable,
) -> Result<LehmerCode> {
    let g = poset.group();
    if !t.non_additive.is_empty() {
        return Err(Error::ChainConstruction(format!(
            "{name}: lengths are not additive for {}",
            g.word_string(t.non_additive[0])
        )));
    }
    if !t.bijective() {
        return Err(Error::ChainConstruction(format!(
            "{name}: chain product is not a bijection onto {} ({} collisions)",
            g.system(),
            t.collisions.len()
        )));
    }
    let rows = t.rows.into_iter().map(|r| r.expect("bijective")).collect();
    LehmerCode::from_table(poset.group_arc(), name, exps, rows)
}

pub(crate) fn d_code(poset: &BruhatPoset) -> Result<LehmerCode> {
    let chains = d_chains(poset)?;
    let n = poset.group().rank();
    for (i, (name, c)) in chains.iter().enumerate() {
        let expect = if i + 1 < n { 2 * (i + 1) } else { n };
        if c.len() != expect {
            return Err(Error::ChainConstruction(format!(
                "{name} has {} elements, expected {expect}",
                c.len()
            )));
        }
    }
    let factors: Vec<_> = chains.iter().map(|(_, c)| positional(c)).collect();
    let exps: Vec<u32> = chains.iter().map(|(_, c)| c.len() as u32 - 1).collect();
    let t = product_table(poset.group(), &factors);
    table_into_code(poset, "LD", &exps, t)
}

struct H3Chains {
    x: Vec<ElementId>,
    y: Vec<ElementId>,
    z: Vec<ElementId>,
}

fn h3_chains(poset: &BruhatPoset) -> Result<H3Chains> {
    let words = chain_words("H3")?;
    let get = |n: &str| -> Result<Vec<ElementId>> {
        let (_, w) = words.iter().find(|(c, _)| c == n).expect("generated names");
        resolve_chain(poset, n, w)
    };
    Ok(H3Chains {
        x: get("X")?,
        y: get("Y")?,
        z: get("Z")?,
    })
}

fn h3_left_factor(c: &H3Chains) -> Vec<(Vec<u32>, ElementId)> {
    let mut out: Vec<(Vec<u32>, ElementId)> =
        c.y.iter()
            .enumerate()
            .map(|(j, &u)| (vec![0, j as u32], u))
            .collect();
    out.extend(c.z.iter().enumerate().map(|(j, &u)| (vec![1, j as u32], u)));
    out
}

pub(crate) fn h3_code(poset: &BruhatPoset) -> Result<LehmerCode> {
    let c = h3_chains(poset)?;
    let factors = vec![h3_left_factor(&c), positional(&c.x)];
    let t = product_table(poset.group(), &factors);
    table_into_code(poset, "LH3", &[1, 5, 9], t)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DFactorizationReport {
    pub n: usize,
    pub chain_sizes: Vec<(String, usize)>,
    pub chain_sizes_ok: bool,
    /// `|Y_(n-1)| * |^{S \ s_(n-1)} D_n|`
    pub lhs_size: usize,
    pub rhs_size: usize,
    pub lhs_products_distinct: bool,
    pub sets_equal: bool,
    pub only_in_lhs: Vec<String>,
    pub only_in_rhs: Vec<String>,
    pub factorization_bijective: bool,
    pub lengths_additive: bool,
}

impl DFactorizationReport {
    pub fn passed(&self) -> bool {
        self.chain_sizes_ok
            && self.lhs_products_distinct
            && self.sets_equal
            && self.factorization_bijective
            && self.lengths_additive
    }
}

/// Checks `Y_(n-1) * ^{S \ {s_(n-1)}} D_n = X_(n-1) Y_n` and that
/// `D_n = X_1 ... X_(n-1) Y_n` with unique factorizations and additive lengths.
pub fn verify_d_factorization(poset: &BruhatPoset) -> Result<DFactorizationReport> {
    super::require_type(poset, crate::coxeter::TypeLabel::D)?;
    let g = poset.group();
    let n = g.rank();
    let chains = d_chains(poset)?;
    let chain_sizes: Vec<(String, usize)> =
        chains.iter().map(|(c, x)| (c.clone(), x.len())).collect();
    let chain_sizes_ok = chain_sizes
        .iter()
        .enumerate()
        .all(|(i, (_, s))| *s == if i + 1 < n { 2 * (i + 1) } else { n });

    // Y_(n-1) inside D_n
    let y_prev: Vec<Vec<u32>> = generate_d_chains(n as u32 - 1).pop().expect("Y").1;
    let y_prev = resolve_chain(poset, &format!("Y{}", n - 1), &y_prev)?;
    let quotient = g.left_quotient(&(0..n - 1).collect::<Vec<_>>());
    let lhs_list: Vec<ElementId> = y_prev
        .iter()
        .flat_map(|&y| quotient.iter().map(move |&u| (y, u)))
        .map(|(y, u)| g.multiply(y, u))
        .collect();
    let lhs: BTreeSet<ElementId> = lhs_list.iter().copied().collect();
    let x_last = &chains[n - 2].1;
    let y_n = &chains[n - 1].1;
    let rhs: BTreeSet<ElementId> = x_last
        .iter()
        .flat_map(|&x| y_n.iter().map(move |&y| (x, y)))
        .map(|(x, y)| g.multiply(x, y))
        .collect();
    let only_in_lhs: Vec<String> = lhs
        .difference(&rhs)
        .take(10)
        .map(|&w| g.word_string(w))
        .collect();
    let only_in_rhs: Vec<String> = rhs
        .difference(&lhs)
        .take(10)
        .map(|&w| g.word_string(w))
        .collect();

    let factors: Vec<_> = chains.iter().map(|(_, c)| positional(c)).collect();
    let t = product_table(g, &factors);
    Ok(DFactorizationReport {
        n,
        chain_sizes,
        chain_sizes_ok,
        lhs_size: lhs_list.len(),
        rhs_size: rhs.len(),
        lhs_products_distinct: lhs.len() == lhs_list.len(),
        sets_equal: lhs == rhs,
        only_in_lhs,
        only_in_rhs,
        factorization_bijective: t.bijective(),
        lengths_additive: t.non_additive.is_empty(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct H3QuotientReport {
    pub chain_sizes: [usize; 3],
    pub y_z_disjoint: bool,
    pub union_size: usize,
    pub equals_weak_interval: bool,
    pub equals_parabolic_product: bool,
    pub equals_quotient_by_top_of_x: bool,
    pub equals_quotient_by_x: bool,
    pub top_product_is_longest: bool,
    pub max_quotient_size: usize,
    pub max_quotient_is_x_products: bool,
    pub factorization_bijective: bool,
    pub lengths_additive: bool,
}

impl H3QuotientReport {
    pub fn passed(&self) -> bool {
        self.chain_sizes == [10, 6, 6]
            && self.y_z_disjoint
            && self.equals_weak_interval
            && self.equals_parabolic_product
            && self.equals_quotient_by_top_of_x
            && self.equals_quotient_by_x
            && self.top_product_is_longest
            && self.max_quotient_size == 20
            && self.max_quotient_is_x_products
            && self.factorization_bijective
            && self.lengths_additive
    }
}

/// Checks that `Y + Z`, `[e, z0]_L`, `W_{s1,s2} {e, s3 s2 s1}`, `W/{x0}` and
/// `W/X` coincide in H3, and that `H3 = (H3/X) X` with additive lengths.
pub fn verify_h3_quotients(poset: &BruhatPoset) -> Result<H3QuotientReport> {
    super::require_type(poset, crate::coxeter::TypeLabel::H3)?;
    let g = poset.group();
    let c = h3_chains(poset)?;
    let ys: BTreeSet<ElementId> = c.y.iter().copied().collect();
    let zs: BTreeSet<ElementId> = c.z.iter().copied().collect();
    let union: BTreeSet<ElementId> = ys.union(&zs).copied().collect();
    let x0 = *c.x.last().expect("nonempty");
    let z0 = *c.z.last().expect("nonempty");

    let weak: BTreeSet<ElementId> = g.weak_left_interval(g.identity(), z0).into_iter().collect();
    let s3s2s1 = g.apply_labels(&[3, 2, 1])?;
    let parabolic: BTreeSet<ElementId> = g
        .parabolic_subgroup(&[0, 1])
        .into_iter()
        .flat_map(|u| [u, g.multiply(u, s3s2s1)])
        .collect();
    let by_top: BTreeSet<ElementId> = g.generalized_quotient(&[x0]).into_iter().collect();
    let by_x: BTreeSet<ElementId> = g.generalized_quotient(&c.x).into_iter().collect();

    let max_quotient: BTreeSet<ElementId> = g.left_quotient(&[0, 1]).into_iter().collect();
    let x_products: BTreeSet<ElementId> = [g.identity(), s3s2s1]
        .into_iter()
        .flat_map(|u| c.x.iter().map(move |&x| (u, x)))
        .map(|(u, x)| g.multiply(u, x))
        .collect();

    let left: Vec<(Vec<u32>, ElementId)> = by_x.iter().map(|&u| (vec![], u)).collect();
    let t = product_table(g, &[left, positional(&c.x)]);

    Ok(H3QuotientReport {
        chain_sizes: [c.x.len(), c.y.len(), c.z.len()],
        y_z_disjoint: ys.is_disjoint(&zs),
        union_size: union.len(),
        equals_weak_interval: union == weak,
        equals_parabolic_product: union == parabolic,
        equals_quotient_by_top_of_x: union == by_top,
        equals_quotient_by_x: union == by_x,
        top_product_is_longest: g.multiply(z0, x0) == g.longest(),
        max_quotient_size: max_quotient.len(),
        max_quotient_is_x_products: max_quotient == x_products,
        factorization_bijective: t.bijective(),
        lengths_additive: t.non_additive.is_empty(),
    })
}
