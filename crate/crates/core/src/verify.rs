//! Check suites shared by the command line tool and the acceptance tests.
//!
//! Every suite returns a [`VerificationReport`]. Instances inside a suite are
//! independent and run on the current rayon pool.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::chains::{verify_d_factorization, verify_h3_quotients};
use crate::codes::dihedral::enumerate_dihedral_codes;
use crate::codes::{code_b_variant, code_h3, dual_code, standard_code, verify_code, LehmerCode};
use crate::coxeter::{BruhatPoset, CoxeterSystem, Group, TypeLabel};
use crate::error::{Error, Result};
use crate::intervals::{compare_pal_unimodal, h_direct, pal_set, CodedGroup, HRoute, Relation};
use crate::multicomplex::{is_m_sequence, order_ideals, ChainProduct, OrderIdeal};
use crate::poly::IntPolynomial;
use crate::schubert::{
    verify_annals, verify_catalan_equivalence, verify_smooth_classification,
    verify_unimodal_equivalence, SymmetricGroup,
};
use crate::simplicial::{extension_to_facet_order, h_from_f, is_flag_ideal, SimplicialComplex};

pub const MAX_WITNESSES: usize = 10;
pub const DEFAULT_SEED: u64 = 20_240_611;
pub const DEFAULT_SAMPLES: usize = 100;
/// Linear extensions are enumerated exhaustively up to this count.
pub const EXHAUSTIVE_EXTENSIONS: u128 = 10_000;

/// The code triples of the unimodal elements of `H3`.
pub const H3_UNIMODAL_TRIPLES: [[u32; 3]; 17] = [
    [1, 5, 9],
    [1, 5, 4],
    [1, 4, 4],
    [1, 3, 4],
    [1, 2, 4],
    [1, 1, 4],
    [1, 2, 3],
    [0, 1, 4],
    [1, 1, 3],
    [1, 2, 2],
    [0, 1, 3],
    [1, 1, 2],
    [0, 1, 2],
    [1, 1, 1],
    [0, 1, 1],
    [0, 0, 1],
    [0, 0, 0],
];

/// Exponent lists `e` with `h_w = prod [e_i + 1]_q` for the smooth `w` in `S4`.
pub const S4_SMOOTH_EXPONENTS: [&[u32]; 8] = [
    &[1, 2, 3],
    &[1, 2, 2],
    &[1, 1, 2],
    &[1, 2],
    &[1, 1, 1],
    &[1, 1],
    &[1],
    &[],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Codes,
    Shellings,
    Vd,
    Flag,
    Maduro,
    Catalan,
    Unimodal,
    Smooth,
    H3Figure,
    DFactorization,
    H3Quotients,
    StrictInclusions,
    Msequence,
    Dihedral,
    Exponents,
    Lattice,
    All,
}

impl Suite {
    pub const ALL: [Suite; 17] = [
        Suite::Codes,
        Suite::Shellings,
        Suite::Vd,
        Suite::Flag,
        Suite::Maduro,
        Suite::Catalan,
        Suite::Unimodal,
        Suite::Smooth,
        Suite::H3Figure,
        Suite::DFactorization,
        Suite::H3Quotients,
        Suite::StrictInclusions,
        Suite::Msequence,
        Suite::Dihedral,
        Suite::Exponents,
        Suite::Lattice,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Codes => "codes",
            Suite::Shellings => "shellings",
            Suite::Vd => "vd",
            Suite::Flag => "flag",
            Suite::Maduro => "maduro",
            Suite::Catalan => "catalan",
            Suite::Unimodal => "unimodal",
            Suite::Smooth => "smooth",
            Suite::H3Figure => "h3-figure",
            Suite::DFactorization => "d-factorization",
            Suite::H3Quotients => "h3-quotients",
            Suite::StrictInclusions => "strict-inclusions",
            Suite::Msequence => "msequence",
            Suite::Dihedral => "dihedral",
            Suite::Exponents => "exponents",
            Suite::Lattice => "lattice",
            Suite::All => "all",
        }
    }

    pub fn names() -> Vec<&'static str> {
        Suite::ALL.iter().map(|s| s.name()).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite {
                name: s.to_string(),
                valid: Suite::names().join(", "),
            })
    }
}

/// Scope of a run. `max_rank` caps the rank of every system a suite builds;
/// `n` pins the symmetric group for the permutation suites.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub max_rank: usize,
    pub n: Option<usize>,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_rank: 6,
            n: None,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

impl VerifyConfig {
    fn s_range(&self, lo: usize, hi: usize) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (lo..=hi.min(self.max_rank + 1)).collect(),
        }
    }
}

/// Per-check totals inside a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check: String,
    pub instances: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub pass: bool,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub witnesses: Vec<String>,
    pub checks: Vec<CheckSummary>,
    /// Short per-instance facts such as counts.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub wall_ms: u64,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub parts: Vec<VerificationReport>,
}

impl VerificationReport {
    fn from_outcomes(suite: Suite, start: Instant, seed: Option<u64>, outs: Vec<Outcome>) -> Self {
        let mut checks: Vec<CheckSummary> = Vec::new();
        let mut witnesses = Vec::new();
        let mut notes = Vec::new();
        for o in outs {
            notes.extend(o.notes);
            match checks.iter_mut().find(|c| c.check == o.check) {
                Some(c) => {
                    c.instances += o.instances;
                    c.failed += o.failed;
                }
                None => checks.push(CheckSummary {
                    check: o.check.to_string(),
                    instances: o.instances,
                    failed: o.failed,
                }),
            }
            for w in o.witnesses {
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(format!("{}: {w}", o.check));
                }
            }
        }
        let instances = checks.iter().map(|c| c.instances).sum();
        let failed = checks.iter().map(|c| c.failed).sum();
        Self {
            suite: suite.name().to_string(),
            pass: failed == 0,
            instances,
            passed: instances - failed,
            failed,
            witnesses,
            checks,
            notes,
            seed,
            wall_ms: start.elapsed().as_millis() as u64,
            parts: Vec::new(),
        }
    }

    fn aggregate(start: Instant, seed: u64, parts: Vec<VerificationReport>) -> Self {
        let instances = parts.iter().map(|p| p.instances).sum();
        let failed = parts.iter().map(|p| p.failed).sum();
        let witnesses = parts
            .iter()
            .flat_map(|p| p.witnesses.iter().map(move |w| format!("{}: {w}", p.suite)))
            .take(MAX_WITNESSES)
            .collect();
        let checks = parts
            .iter()
            .map(|p| CheckSummary {
                check: p.suite.clone(),
                instances: p.instances,
                failed: p.failed,
            })
            .collect();
        Self {
            suite: Suite::All.name().to_string(),
            pass: failed == 0,
            instances,
            passed: instances - failed,
            failed,
            witnesses,
            checks,
            notes: Vec::new(),
            seed: Some(seed),
            wall_ms: start.elapsed().as_millis() as u64,
            parts,
        }
    }

    /// Instances counted under `check`.
    pub fn check(&self, check: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.check == check)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} instances, {} failed, {} ms)",
            self.suite,
            if self.pass { "pass" } else { "FAIL" },
            self.instances,
            self.failed,
            self.wall_ms
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "  {:<28} {:>8} {:>6} failed",
                c.check, c.instances, c.failed
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  {n}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness: {w}")?;
        }
        Ok(())
    }
}

struct Outcome {
    check: &'static str,
    instances: usize,
    failed: usize,
    witnesses: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new(check: &'static str) -> Self {
        Self {
            check,
            instances: 0,
            failed: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn note(mut self, n: String) -> Self {
        self.notes.push(n);
        self
    }

    fn single(check: &'static str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        let mut o = Self::new(check);
        o.record(ok, witness);
        o
    }

    fn error(check: &'static str, e: Error) -> Self {
        Self::single(check, false, || e.to_string())
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failed += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    fn from_result(check: &'static str, r: Result<Outcome>) -> Self {
        r.unwrap_or_else(|e| Self::error(check, e))
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> VerificationReport {
    let start = Instant::now();
    let (outs, seed) = match suite {
        Suite::All => {
            let parts = Suite::ALL[..Suite::ALL.len() - 1]
                .iter()
                .map(|&s| run(s, cfg))
                .collect();
            return VerificationReport::aggregate(start, cfg.seed, parts);
        }
        Suite::Codes => (codes(cfg), None),
        Suite::Shellings => (shellings(cfg), Some(cfg.seed)),
        Suite::Vd => (vertex_decomposability(cfg), None),
        Suite::Flag => (flag(cfg), None),
        Suite::Maduro => (maduro(cfg), None),
        Suite::Catalan => (catalan(cfg), None),
        Suite::Unimodal => (unimodal(cfg), None),
        Suite::Smooth => (smooth(cfg), None),
        Suite::H3Figure => (h3_triples(cfg), None),
        Suite::DFactorization => (d_factorization(cfg), None),
        Suite::H3Quotients => (h3_quotients(cfg), None),
        Suite::StrictInclusions => (strict_inclusions(cfg), None),
        Suite::Msequence => (msequence(cfg), None),
        Suite::Dihedral => (dihedral(cfg), None),
        Suite::Exponents => (exponents(cfg), None),
        Suite::Lattice => (lattice(cfg), None),
    };
    VerificationReport::from_outcomes(suite, start, seed, outs)
}

/// Runs a suite by name.
pub fn run_named(name: &str, cfg: &VerifyConfig) -> Result<VerificationReport> {
    Ok(run(name.parse()?, cfg))
}

fn build(sys: CoxeterSystem) -> Result<BruhatPoset> {
    BruhatPoset::build(sys)
}

fn rank_ok(sys: &CoxeterSystem, cfg: &VerifyConfig) -> bool {
    sys.rank() <= cfg.max_rank
}

/// A1..A5, B2..B4, D4, D5, H3 and I2(3..=10), filtered by rank.
pub fn code_systems(cfg: &VerifyConfig) -> Vec<CoxeterSystem> {
    let mut v: Vec<CoxeterSystem> = (1..=5).map(CoxeterSystem::type_a).collect();
    v.extend((2..=4).map(CoxeterSystem::type_b));
    v.extend([CoxeterSystem::type_d(4), CoxeterSystem::type_d(5)]);
    v.push(CoxeterSystem::type_h3());
    v.extend((3..=10).map(CoxeterSystem::type_i2));
    v.retain(|s| rank_ok(s, cfg));
    v
}

fn code_outcomes(sys: CoxeterSystem) -> Result<Vec<Outcome>> {
    let p = build(sys)?;
    let mut codes = vec![standard_code(&p)?];
    if p.group().system().type_label() == TypeLabel::B {
        codes.push(code_b_variant(&p)?);
    }
    let duals: Vec<LehmerCode> = codes.iter().map(dual_code).collect();
    codes.extend(duals);
    let mut out = Outcome::new("verify-code");
    for c in &codes {
        let r = verify_code(c, &p)?;
        out.record(r.passed(), || {
            format!("{} on {}: {:?}", r.code, r.system, r.violations.first())
        });
    }
    Ok(vec![out])
}

fn codes(cfg: &VerifyConfig) -> Vec<Outcome> {
    code_systems(cfg)
        .into_par_iter()
        .flat_map_iter(|s| {
            let name = s.name();
            code_outcomes(s).unwrap_or_else(|e| {
                vec![Outcome::single("verify-code", false, || {
                    format!("{name}: {e}")
                })]
            })
        })
        .collect()
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Shelling checks for one ideal over a set of its linear extensions.
fn shelling_outcomes(ideal: &OrderIdeal, seed: u64, samples: usize) -> Result<Vec<Outcome>> {
    let label = || format!("{:?}", ideal.maxima());
    let complex = SimplicialComplex::m_complex_of_ideal(ideal)?;
    let fpoly = ideal.f_polynomial()?.into_coeffs();
    let from_f = trim(h_from_f(&complex.f_vector()?));
    let mut shell = Outcome::new("shelling");
    let mut h_f = Outcome::new("h-equals-f-polynomial");
    let mut h_hf = Outcome::new("h-equals-h-from-f");
    let mut check = |ext: &[usize]| -> Result<()> {
        let order = extension_to_facet_order(ideal, ext)?;
        let c = complex.verify_shelling(&order)?;
        let h = trim(c.h_vector);
        shell.record(c.is_shelling, || format!("J={} order={ext:?}", label()));
        h_f.record(h == fpoly, || format!("J={} h={h:?} f={fpoly:?}", label()));
        h_hf.record(h == from_f, || {
            format!("J={} h={h:?} h(f)={from_f:?}", label())
        });
        Ok(())
    };
    if ideal.count_linear_extensions() <= EXHAUSTIVE_EXTENSIONS {
        for ext in ideal.linear_extensions() {
            check(&ext)?;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            check(&ideal.random_linear_extension(&mut rng))?;
        }
    }
    Ok(vec![shell, h_f, h_hf])
}

/// The exhaustive boxes and the sampled ideals of the shelling suite.
pub fn shelling_ideals(cfg: &VerifyConfig) -> Vec<OrderIdeal> {
    let mut ideals = Vec::new();
    for d in [vec![2, 3], vec![2, 2, 2]] {
        ideals.extend(order_ideals(&ChainProduct::new(d).expect("box"), false));
    }
    let big = ChainProduct::new(vec![3, 3, 4]).expect("box");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    ideals.extend((0..cfg.samples).map(|_| OrderIdeal::random(&big, &mut rng)));
    ideals
}

fn shellings(cfg: &VerifyConfig) -> Vec<Outcome> {
    let ideals = shelling_ideals(cfg);
    ideals
        .par_iter()
        .enumerate()
        .flat_map_iter(|(k, j)| {
            shelling_outcomes(j, cfg.seed.wrapping_add(k as u64 + 1), cfg.samples)
                .unwrap_or_else(|e| vec![Outcome::error("shelling", e)])
        })
        .collect()
}

/// Boxes `d` (sorted, every `d_i >= 2`) with `prod d_i <= bound`.
pub fn small_boxes(bound: u32) -> Vec<Vec<u32>> {
    fn go(min: u32, prod: u32, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        let mut d = min;
        while prod * d <= bound {
            cur.push(d);
            go(d, prod * d, bound, cur, out);
            cur.pop();
            d += 1;
        }
    }
    let mut out = Vec::new();
    go(2, 1, bound, &mut Vec::new(), &mut out);
    out
}

/// Facet bound used for the Lehmer complexes of `S4`.
pub const S4_VD_LIMIT: usize = 24;

fn vertex_decomposability(cfg: &VerifyConfig) -> Vec<Outcome> {
    let mut ideals = Vec::new();
    for d in small_boxes(16) {
        ideals.extend(order_ideals(&ChainProduct::new(d).expect("box"), false));
    }
    let mut out: Vec<Outcome> = ideals
        .par_iter()
        .map(|j| {
            let r =
                SimplicialComplex::m_complex_of_ideal(j).and_then(|c| c.is_vertex_decomposable());
            Outcome::single("box-ideal", matches!(r, Ok(true)), || {
                format!("{:?} in {:?}: {r:?}", j.maxima(), j.ambient().degrees())
            })
        })
        .collect();
    if cfg.max_rank >= 3 {
        out.push(Outcome::from_result("s4-lehmer-complex", s4_vd()));
    }
    out
}

fn s4_vd() -> Result<Outcome> {
    let p = build(CoxeterSystem::type_a(3))?;
    let c = standard_code(&p)?;
    let cg = CodedGroup::new(&p, &c)?;
    let g = p.group();
    let mut out = Outcome::new("s4-lehmer-complex");
    for w in g.ids() {
        let r = cg
            .complex(w)
            .and_then(|x| x.is_vertex_decomposable_with_limit(S4_VD_LIMIT));
        out.record(matches!(r, Ok(true)), || format!("{}: {r:?}", g.display(w)));
    }
    Ok(out)
}

fn flag(_cfg: &VerifyConfig) -> Vec<Outcome> {
    let mut ideals = Vec::new();
    for d in [vec![2, 2, 2], vec![2, 2, 2, 2]] {
        ideals.extend(order_ideals(&ChainProduct::new(d).expect("box"), false));
    }
    ideals
        .par_iter()
        .map(|j| {
            let r = is_flag_ideal(j)
                .and_then(|a| SimplicialComplex::m_complex_of_ideal(j).map(|c| (a, c.is_flag())));
            Outcome::single(
                "flag-equivalence",
                matches!(r, Ok((a, b)) if a == b),
                || format!("{:?}: {r:?}", j.maxima()),
            )
        })
        .collect()
}

fn coded_systems(cfg: &VerifyConfig, a: usize, b: usize, d4: bool, i2: u32) -> Vec<CoxeterSystem> {
    let mut v: Vec<CoxeterSystem> = (1..=a).map(CoxeterSystem::type_a).collect();
    v.extend((2..=b).map(CoxeterSystem::type_b));
    if d4 {
        v.push(CoxeterSystem::type_d(4));
    }
    v.push(CoxeterSystem::type_h3());
    v.extend((3..=i2).map(CoxeterSystem::type_i2));
    v.retain(|s| rank_ok(s, cfg));
    v
}

fn for_each_element(
    sys: CoxeterSystem,
    check: &'static str,
    f: impl Fn(&CodedGroup<'_>, crate::ElementId) -> Result<bool> + Sync,
) -> Outcome {
    Outcome::from_result(
        check,
        (|| {
            let p = build(sys)?;
            let c = standard_code(&p)?;
            let cg = CodedGroup::new(&p, &c)?;
            let g = p.group();
            let results: Vec<(crate::ElementId, Result<bool>)> = g
                .ids()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|w| (w, f(&cg, w)))
                .collect();
            let mut out = Outcome::new(check);
            for (w, r) in results {
                out.record(matches!(r, Ok(true)), || {
                    format!("{} {}: {r:?}", g.system().name(), g.display(w))
                });
            }
            Ok(out)
        })(),
    )
}

fn maduro(cfg: &VerifyConfig) -> Vec<Outcome> {
    coded_systems(cfg, 4, 3, true, 8)
        .into_iter()
        .map(|s| {
            for_each_element(s, "routes-agree", |cg, w| {
                let direct = cg.h_poly(w, HRoute::Direct)?;
                Ok(cg.h_poly(w, HRoute::Complex)? == direct
                    && cg.h_poly(w, HRoute::Maduro)? == direct)
            })
        })
        .collect()
}

fn msequence(cfg: &VerifyConfig) -> Vec<Outcome> {
    let mut systems = vec![
        CoxeterSystem::type_a(4),
        CoxeterSystem::type_b(3),
        CoxeterSystem::type_d(4),
        CoxeterSystem::type_h3(),
        CoxeterSystem::type_i2(8),
    ];
    systems.retain(|s| rank_ok(s, cfg));
    systems
        .into_iter()
        .map(|s| {
            for_each_element(s, "m-sequence", |cg, w| {
                Ok(is_m_sequence(h_direct(cg.poset(), w).coeffs()))
            })
        })
        .collect()
}

fn symmetric(n: usize) -> Result<SymmetricGroup> {
    SymmetricGroup::new(n)
}

fn catalan(cfg: &VerifyConfig) -> Vec<Outcome> {
    cfg.s_range(3, 7)
        .into_iter()
        .map(|n| {
            Outcome::from_result(
                "catalan-equivalence",
                (|| {
                    let r = verify_catalan_equivalence(&symmetric(n)?);
                    Ok(Outcome::single("catalan-equivalence", r.passed(), || {
                        format!("n={n}: {r:?}")
                    })
                    .note(format!(
                        "S{n}: {} principal, {} lazy Fubini codes, {} avoid 312, Catalan number {}",
                        r.principal, r.lazy_fubini, r.avoiding_312, r.catalan
                    )))
                })(),
            )
        })
        .collect()
}

fn unimodal(cfg: &VerifyConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for n in cfg.s_range(2, 6) {
        out.push(Outcome::from_result(
            "unimodal-equivalence",
            (|| {
                let r = verify_unimodal_equivalence(&symmetric(n)?)?;
                Ok(Outcome::single("unimodal-equivalence", r.passed(), || {
                    format!("n={n}: {r:?}")
                })
                .note(format!("S{n}: {} unimodal elements", r.unimodal)))
            })(),
        ));
        out.push(Outcome::from_result(
            "lambda-bijection",
            (|| {
                let r = verify_annals(n)?;
                Ok(Outcome::single("lambda-bijection", r.passed(), || {
                    format!("n={n}: {r:?}")
                }))
            })(),
        ));
    }
    out
}

/// `{prod [e_i + 1]_q}` over [`S4_SMOOTH_EXPONENTS`].
pub fn s4_smooth_polynomials() -> BTreeSet<IntPolynomial> {
    S4_SMOOTH_EXPONENTS
        .iter()
        .map(|e| IntPolynomial::q_analog_product(e))
        .collect()
}

fn smooth(cfg: &VerifyConfig) -> Vec<Outcome> {
    cfg.s_range(3, 6)
        .into_iter()
        .map(|n| {
            Outcome::from_result(
                "smooth-classification",
                (|| {
                    let r = verify_smooth_classification(&symmetric(n)?)?;
                    let explicit = n != 4 || r.smooth_polynomials == s4_smooth_polynomials();
                    Ok(
                        Outcome::single("smooth-classification", r.passed() && explicit, || {
                            format!("n={n}: smooth={} witnesses={:?}", r.smooth, r.witnesses)
                        })
                        .note(format!(
                            "S{n}: {} smooth elements, {} distinct polynomials",
                            r.smooth,
                            r.smooth_polynomials.len()
                        )),
                    )
                })(),
            )
        })
        .collect()
}

fn h3_triples(cfg: &VerifyConfig) -> Vec<Outcome> {
    if cfg.max_rank < 3 {
        return Vec::new();
    }
    let r = (|| {
        let p = build(CoxeterSystem::type_h3())?;
        let c = code_h3(&p)?;
        let cg = CodedGroup::new(&p, &c)?;
        let u = cg.unimodal_set();
        let got: BTreeSet<Vec<u32>> = u.iter().map(|&w| c.encode(w).to_vec()).collect();
        let want: BTreeSet<Vec<u32>> = H3_UNIMODAL_TRIPLES.iter().map(|t| t.to_vec()).collect();
        let pal = pal_set(&p);
        Ok(vec![
            Outcome::single("unimodal-triples", u.len() == 17 && got == want, || {
                format!("got {got:?}")
            })
            .note(format!("{} unimodal triples", u.len())),
            Outcome::single("pal-equals-unimodal", cg.h_set(&u) == pal, || {
                format!("|Pal|={} |h(U)|={}", pal.len(), cg.h_set(&u).len())
            }),
            Outcome::single(
                "pal-equals-principal",
                cg.h_set(&cg.principal_set()) == pal,
                || format!("|Pal|={}", pal.len()),
            ),
        ])
    })();
    r.unwrap_or_else(|e| vec![Outcome::error("unimodal-triples", e)])
}

fn d_factorization(cfg: &VerifyConfig) -> Vec<Outcome> {
    (4..=5.min(cfg.max_rank))
        .map(|n| {
            Outcome::from_result(
                "d-factorization",
                (|| {
                    let r = verify_d_factorization(&build(CoxeterSystem::type_d(n))?)?;
                    Ok(Outcome::single("d-factorization", r.passed(), || {
                        format!("{r:?}")
                    }))
                })(),
            )
        })
        .collect()
}

fn h3_quotients(cfg: &VerifyConfig) -> Vec<Outcome> {
    if cfg.max_rank < 3 {
        return Vec::new();
    }
    vec![Outcome::from_result(
        "h3-quotients",
        (|| {
            let r = verify_h3_quotients(&build(CoxeterSystem::type_h3())?)?;
            Ok(Outcome::single("h3-quotients", r.passed(), || {
                format!("{r:?}")
            }))
        })(),
    )]
}

fn strict_inclusions(cfg: &VerifyConfig) -> Vec<Outcome> {
    let cases: [(CoxeterSystem, bool, Relation); 5] = [
        (CoxeterSystem::type_b(3), false, Relation::Greater),
        (CoxeterSystem::type_b(3), true, Relation::Equal),
        (CoxeterSystem::type_b(4), true, Relation::Greater),
        (CoxeterSystem::type_d(4), false, Relation::Equal),
        (CoxeterSystem::type_d(5), false, Relation::Greater),
    ];
    cases
        .into_iter()
        .filter(|(s, _, _)| rank_ok(s, cfg))
        .map(|(s, variant, rel)| {
            Outcome::from_result(
                "pal-vs-unimodal",
                (|| {
                    let p = build(s)?;
                    let c = if variant {
                        code_b_variant(&p)?
                    } else {
                        standard_code(&p)?
                    };
                    let r = compare_pal_unimodal(&p, &c, rel)?;
                    Ok(
                        Outcome::single("pal-vs-unimodal", r.holds, || format!("{r:?}")).note(
                            format!(
                                "{} {}: |Pal| = {}, |U| = {}",
                                r.system, r.code, r.pal, r.unimodal
                            ),
                        ),
                    )
                })(),
            )
        })
        .collect()
}

fn dihedral(_cfg: &VerifyConfig) -> Vec<Outcome> {
    (3..=5u32)
        .map(|m| {
            Outcome::from_result(
                "dihedral-code-count",
                (|| {
                    let found = enumerate_dihedral_codes(&build(CoxeterSystem::type_i2(m))?)?.len();
                    Ok(
                        Outcome::single("dihedral-code-count", found == 1 << (m - 1), || {
                            format!("I2({m}): {found} codes")
                        })
                        .note(format!("I2({m}): {found} codes")),
                    )
                })(),
            )
        })
        .collect()
}

/// Every system the exponent suite covers, with its known exponents.
pub fn exponent_table(max_rank: usize) -> Vec<(CoxeterSystem, Vec<u32>)> {
    let mut v = Vec::new();
    for n in 1..=6 {
        v.push((CoxeterSystem::type_a(n), (1..=n as u32).collect()));
    }
    for n in 2..=5 {
        v.push((
            CoxeterSystem::type_b(n),
            (1..=n as u32).map(|i| 2 * i - 1).collect(),
        ));
    }
    for n in 4..=6u32 {
        let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
        e.push(n - 1);
        e.sort_unstable();
        v.push((CoxeterSystem::type_d(n as usize), e));
    }
    v.push((CoxeterSystem::type_h3(), vec![1, 5, 9]));
    for m in 2..=12 {
        v.push((CoxeterSystem::type_i2(m), vec![1, m - 1]));
    }
    v.push((
        CoxeterSystem::product(CoxeterSystem::type_a(2), CoxeterSystem::type_a(1)),
        vec![1, 1, 2],
    ));
    v.retain(|(s, _)| s.rank() <= max_rank);
    v
}

fn exponents(cfg: &VerifyConfig) -> Vec<Outcome> {
    exponent_table(cfg.max_rank)
        .into_par_iter()
        .map(|(s, e)| {
            let name = s.name();
            Outcome::from_result(
                "group-polynomial",
                (|| {
                    let g = Group::enumerate(s)?;
                    let w = g.group_polynomial();
                    let ok = w == IntPolynomial::q_analog_product(&e) && g.exponents()? == e;
                    Ok(Outcome::single("group-polynomial", ok, || {
                        format!("{name}: W(q)={w} expected exponents {e:?}")
                    }))
                })(),
            )
        })
        .collect()
}

fn lattice(cfg: &VerifyConfig) -> Vec<Outcome> {
    let mut systems = vec![CoxeterSystem::type_a(3), CoxeterSystem::type_h3()];
    systems.retain(|s| rank_ok(s, cfg));
    systems
        .into_iter()
        .map(|s| {
            Outcome::from_result(
                "principal-sublattice",
                (|| {
                    let p = build(s)?;
                    let c = standard_code(&p)?;
                    let r = CodedGroup::new(&p, &c)?.lattice_report()?;
                    Ok(Outcome::single("principal-sublattice", r.passed(), || {
                        format!("{r:?}")
                    }))
                })(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_rank: 3,
            samples: 5,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        match "nope".parse::<Suite>() {
            Err(Error::UnknownSuite { valid, .. }) => assert!(valid.contains("h3-figure")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn boxes_up_to_16() {
        let b = small_boxes(16);
        assert!(b.contains(&vec![2, 2, 2, 2]));
        assert!(b.contains(&vec![4, 4]));
        assert!(b.contains(&vec![16]));
        assert!(!b.contains(&vec![3, 6]));
        assert!(b.iter().all(|d| d.iter().product::<u32>() <= 16));
    }

    #[test]
    fn exponent_oracle_degrees() {
        for (s, e) in exponent_table(6) {
            let n: u64 = e.iter().map(|&x| x as u64 + 1).product();
            assert_eq!(n as usize, s.order(), "{}", s.name());
        }
    }

    #[test]
    fn witnesses_are_capped() {
        let mut o = Outcome::new("x");
        for _ in 0..50 {
            o.record(false, || "w".into());
        }
        let r = VerificationReport::from_outcomes(Suite::Codes, Instant::now(), None, vec![o]);
        assert_eq!(r.failed, 50);
        assert_eq!(r.witnesses.len(), MAX_WITNESSES);
        assert!(!r.pass);
    }

    #[test]
    fn small_suites_pass() {
        let cfg = small();
        for s in [
            Suite::Catalan,
            Suite::Dihedral,
            Suite::H3Quotients,
            Suite::Flag,
        ] {
            let r = run(s, &cfg);
            assert!(r.pass, "{r}");
            assert!(r.instances > 0);
        }
    }

    #[test]
    fn report_json_round_trip() {
        let r = run(Suite::Dihedral, &small());
        let s = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back.checks, r.checks);
        assert_eq!(back.instances, 3);
    }
}
