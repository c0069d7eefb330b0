//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use coxlehmer::codes::chains::{verify_d_factorization, verify_h3_quotients};
use coxlehmer::codes::dihedral::enumerate_dihedral_codes;
use coxlehmer::codes::{code_a_inversions, code_h3, standard_code};
use coxlehmer::coxeter::{BruhatPoset, CoxeterSystem, Group};
use coxlehmer::intervals::{pal_set, verify_strict_inclusions, CodedGroup, HRoute};
use coxlehmer::schubert::{
    verify_catalan_equivalence, verify_smooth_classification, Permutation, SymmetricGroup,
};
use coxlehmer::verify::{run, Suite, VerifyConfig};
use coxlehmer::{ElementId, IntPolynomial};

fn poset(sys: CoxeterSystem) -> BruhatPoset {
    BruhatPoset::build(sys).unwrap()
}

fn find(g: &Group, one_line: &str) -> ElementId {
    g.ids().find(|&w| g.display(w) == one_line).unwrap()
}

/// Plain coefficient-vector product, independent of `IntPolynomial`.
fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn q_product(e: &[u32]) -> Vec<i64> {
    e.iter()
        .fold(vec![1], |acc, &k| mul(&acc, &vec![1; k as usize + 1]))
}

fn suite(s: Suite) -> coxlehmer::verify::VerificationReport {
    let r = run(s, &VerifyConfig::default());
    assert!(r.pass, "{r}");
    r
}

fn code_example() {
    let p = poset(CoxeterSystem::type_a(3));
    let g = p.group();
    let c = standard_code(&p).unwrap();
    let w = g.apply_labels(&[2, 1, 3, 2]).unwrap();
    assert_eq!(g.display(w), "3412");
    assert_eq!(c.encode(w), &[0, 2, 2]);
    assert_eq!(code_a_inversions(&[3, 4, 1, 2]).entries(), &[0, 0, 2, 2]);
}

fn worked_interval() {
    let p = poset(CoxeterSystem::type_a(3));
    let c = standard_code(&p).unwrap();
    let cg = CodedGroup::new(&p, &c).unwrap();
    let g = p.group();
    let w = find(g, "3412");
    for r in HRoute::ALL {
        assert_eq!(cg.h_poly(w, r).unwrap().coeffs(), &[1, 3, 5, 4, 1], "{r}");
    }
    let got: BTreeSet<Vec<u32>> = cg.ideal(w).unwrap().maxima().into_iter().collect();
    let want: BTreeSet<Vec<u32>> = ["2413", "3214", "3412"]
        .iter()
        .map(|s| c.encode(find(g, s)).to_vec())
        .collect();
    assert_eq!(got, want);
    let (a, b, x) = (find(g, "2413"), find(g, "3214"), find(g, "3412"));
    let meet = |u, v| cg.curlywedge(u, v).unwrap();
    assert_eq!(g.display(meet(a, b)), "2134");
    assert_eq!(g.display(meet(a, x)), "1423");
    assert_eq!(g.display(meet(b, x)), "3124");
    assert_eq!(g.display(meet(meet(a, b), x)), "1234");
}

fn code_validity() {
    let r = suite(Suite::Codes);
    // A1..A5: 2 each, B2..B4: 4 each, D4, D5, H3: 2 each, I2(3..=10): 2 each
    assert_eq!(r.check("verify-code").unwrap().instances, 10 + 12 + 6 + 16);
}

fn catalan_classification() {
    for (n, cat) in [(3, 5), (4, 14), (5, 42), (6, 132), (7, 429)] {
        let r = verify_catalan_equivalence(&SymmetricGroup::new(n).unwrap());
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.principal, cat);
    }
}

fn smooth_classification() {
    for n in 3..=6 {
        let r = verify_smooth_classification(&SymmetricGroup::new(n).unwrap()).unwrap();
        assert!(r.passed(), "n={n}: {:?}", r.witnesses);
        assert_eq!(r.smooth_polynomials.len(), 1 << (n - 1));
        assert_eq!(r.smooth_polynomials, r.unimodal_polynomials);
        if n == 4 {
            let want: BTreeSet<Vec<i64>> = [
                &[1, 2, 3][..],
                &[1, 2, 2],
                &[1, 1, 2],
                &[1, 2],
                &[1, 1, 1],
                &[1, 1],
                &[1],
                &[],
            ]
            .iter()
            .map(|e| q_product(e))
            .collect();
            let got: BTreeSet<Vec<i64>> = r
                .smooth_polynomials
                .iter()
                .map(|h| h.coeffs().to_vec())
                .collect();
            assert_eq!(got, want);
        }
    }
}

fn h3_triples() {
    let p = poset(CoxeterSystem::type_h3());
    let c = code_h3(&p).unwrap();
    let cg = CodedGroup::new(&p, &c).unwrap();
    let u = cg.unimodal_set();
    let got: BTreeSet<Vec<u32>> = u.iter().map(|&w| c.encode(w).to_vec()).collect();
    let want: BTreeSet<Vec<u32>> = [
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
    ]
    .iter()
    .map(|t| t.to_vec())
    .collect();
    assert_eq!(u.len(), 17);
    assert_eq!(got, want);
    let pal = pal_set(&p);
    assert_eq!(cg.h_set(&u), pal);
    assert_eq!(cg.h_set(&cg.principal_set()), pal);
}

fn shelling_theorem() {
    let r = suite(Suite::Shellings);
    assert_eq!(r.seed, Some(VerifyConfig::default().seed));
    // one instance per (ideal, extension); at least one extension per ideal
    let per_ideal = r.check("h-equals-f-polynomial").unwrap().instances;
    assert!(per_ideal >= 9 + 19 + 100, "{r}");
    assert_eq!(r.check("shelling").unwrap().instances, per_ideal);
}

fn vertex_decomposability() {
    let r = suite(Suite::Vd);
    assert_eq!(r.check("s4-lehmer-complex").unwrap().instances, 24);
    assert!(r.check("box-ideal").unwrap().instances > 0);
}

fn flag_equivalence() {
    let r = suite(Suite::Flag);
    // nonempty ideals of [2]^3 and [2]^4
    assert_eq!(r.instances, 19 + 167);
}

fn m_sequences() {
    let r = suite(Suite::Msequence);
    assert_eq!(r.instances, 120 + 48 + 192 + 120 + 16);
}

fn d_structure() {
    for n in [4, 5] {
        let r = verify_d_factorization(&poset(CoxeterSystem::type_d(n))).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

fn h3_structure() {
    let r = verify_h3_quotients(&poset(CoxeterSystem::type_h3())).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.max_quotient_size, 20);
}

fn dihedral_count() {
    for m in 3..=5u32 {
        let codes = enumerate_dihedral_codes(&poset(CoxeterSystem::type_i2(m))).unwrap();
        assert_eq!(codes.len(), 1 << (m - 1), "m={m}");
    }
}

fn strict_inclusions() {
    let checks = verify_strict_inclusions().unwrap();
    assert_eq!(checks.len(), 5);
    for c in checks {
        assert!(c.holds, "{c:?}");
    }
}

fn exponent_products() {
    suite(Suite::Exponents);
    let g = Group::enumerate(CoxeterSystem::type_h3()).unwrap();
    assert_eq!(g.exponents().unwrap(), vec![1, 5, 9]);
    assert_eq!(
        g.group_polynomial().coeffs(),
        q_product(&[1, 5, 9]).as_slice()
    );
    let d4 = Group::enumerate(CoxeterSystem::type_d(4)).unwrap();
    assert_eq!(
        d4.group_polynomial(),
        IntPolynomial::from_coeffs(q_product(&[1, 3, 3, 5]))
    );
    let p: Permutation = "3412".parse().unwrap();
    assert_eq!(p.code(), vec![0, 0, 2, 2]);
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 15] = [
        ("code example s2s1s3s2", code_example),
        ("worked interval 3412", worked_interval),
        ("code validity", code_validity),
        ("catalan classification", catalan_classification),
        ("smooth classification", smooth_classification),
        ("H3 unimodal triples", h3_triples),
        ("shelling of ideal complexes", shelling_theorem),
        ("vertex decomposability", vertex_decomposability),
        ("flag equivalence", flag_equivalence),
        ("m-sequence property", m_sequences),
        ("D_n factorization", d_structure),
        ("H3 quotients", h3_structure),
        ("dihedral code count", dihedral_count),
        ("strict inclusions", strict_inclusions),
        ("exponent products", exponent_products),
    ];
    let _ = writeln!(std::io::stdout());
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        // written to the handle directly so the line survives output capture
        let _ = writeln!(
            std::io::stdout(),
            "{} {:>2} {name} ({:.2}s)",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            start.elapsed().as_secs_f64()
        );
        if !ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
