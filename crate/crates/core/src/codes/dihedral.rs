//! Exhaustive search for the Lehmer codes of a dihedral group.

use super::{verify_code, LehmerCode};
use crate::coxeter::{BruhatPoset, ElementId, TypeLabel};
use crate::error::{Error, Result};

/// Largest `m` for which [`enumerate_dihedral_codes`] runs.
pub const MAX_DIHEDRAL_M: u32 = 8;

/// Every Lehmer code of `I2(m)` onto `{0,1} x {0..m-1}`.
///
/// Rank compatibility forces the two elements of each length `1..m-1` onto
/// the two points `(0, r)` and `(1, r-1)`, so the candidates are indexed by
/// one bit per rank. Each candidate is kept iff it passes [`verify_code`].
pub fn enumerate_dihedral_codes(poset: &BruhatPoset) -> Result<Vec<LehmerCode>> {
    super::require_type(poset, TypeLabel::I2)?;
    let g = poset.group();
    let m = g.system().dihedral_m().expect("dihedral");
    if m > MAX_DIHEDRAL_M {
        return Err(Error::SizeLimit {
            what: "dihedral order m for exhaustive code search".into(),
            size: m as usize,
            limit: MAX_DIHEDRAL_M as usize,
        });
    }
    let mut by_rank: Vec<Vec<ElementId>> = vec![Vec::new(); m as usize + 1];
    for w in g.ids() {
        by_rank[g.length(w) as usize].push(w);
    }
    let mut codes = Vec::new();
    for mask in 0u32..1 << (m - 1) {
        let mut rows = vec![Vec::new(); g.order()];
        rows[by_rank[0][0].index()] = vec![0, 0];
        rows[by_rank[m as usize][0].index()] = vec![1, m - 1];
        for r in 1..m {
            let pair = &by_rank[r as usize];
            let flip = (mask >> (r - 1) & 1) as usize;
            rows[pair[flip].index()] = vec![0, r];
            rows[pair[1 - flip].index()] = vec![1, r - 1];
        }
        let code =
            LehmerCode::from_table(poset.group_arc(), format!("LI2#{mask}"), &[1, m - 1], rows)?;
        if verify_code(&code, poset)?.passed() {
            codes.push(code);
        }
    }
    Ok(codes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::code_i2;
    use crate::coxeter::{CoxeterSystem, Group};

    /// All automorphisms of the Bruhat order, by backtracking over
    /// length-preserving bijections.
    fn bruhat_automorphisms(p: &BruhatPoset) -> Vec<Vec<ElementId>> {
        let g: &Group = p.group();
        let n = g.order();
        let ids: Vec<ElementId> = g.ids().collect();
        let mut out = Vec::new();
        let mut image = vec![None; n];
        let mut used = vec![false; n];
        fn go(
            k: usize,
            ids: &[ElementId],
            p: &BruhatPoset,
            image: &mut Vec<Option<ElementId>>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<ElementId>>,
        ) {
            let g = p.group();
            if k == ids.len() {
                out.push(image.iter().map(|x| x.unwrap()).collect());
                return;
            }
            let u = ids[k];
            for &v in ids {
                if used[v.index()] || g.length(v) != g.length(u) {
                    continue;
                }
                let ok = ids[..k].iter().all(|&a| {
                    let b = image[a.index()].unwrap();
                    p.leq(a, u) == p.leq(b, v) && p.leq(u, a) == p.leq(v, b)
                });
                if ok {
                    image[u.index()] = Some(v);
                    used[v.index()] = true;
                    go(k + 1, ids, p, image, used, out);
                    used[v.index()] = false;
                    image[u.index()] = None;
                }
            }
        }
        go(0, &ids, p, &mut image, &mut used, &mut out);
        out
    }

    #[test]
    fn counts_and_automorphism_oracle() {
        for m in 3..=5u32 {
            let p = BruhatPoset::build(CoxeterSystem::type_i2(m)).unwrap();
            let codes = enumerate_dihedral_codes(&p).unwrap();
            assert_eq!(codes.len(), 1 << (m - 1));
            let base = code_i2(&p).unwrap();
            let autos = bruhat_automorphisms(&p);
            assert_eq!(autos.len(), 1 << (m - 1));
            // each code is L composed with an automorphism, and vice versa
            for c in &codes {
                let hit = autos.iter().any(|phi| {
                    p.group()
                        .ids()
                        .all(|w| c.encode(w) == base.encode(phi[w.index()]))
                });
                assert!(hit, "m={m} {}", c.name());
            }
        }
    }

    #[test]
    fn large_m_is_refused() {
        let p = BruhatPoset::build(CoxeterSystem::type_i2(9)).unwrap();
        assert!(matches!(
            enumerate_dihedral_codes(&p),
            Err(Error::SizeLimit { .. })
        ));
    }
}
