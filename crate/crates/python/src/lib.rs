//! Python bindings. Elements are passed around as integer ids of the
//! enumerated group; `display`, `word` and the parsers convert.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

use coxlehmer::codes::{code_by_name, code_names, LehmerCode};
use coxlehmer::coxeter::{BruhatPoset, CoxeterSystem, TypeLabel};
use coxlehmer::input::{element_from_one_line, element_from_word};
use coxlehmer::intervals::{pal_set, CodedGroup, HRoute};
use coxlehmer::multicomplex::is_m_sequence as m_sequence;
use coxlehmer::schubert::{self, Permutation};
use coxlehmer::verify::{self as suites, VerifyConfig};
use coxlehmer::{ElementId, Error, IntPolynomial};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite Coxeter group with its Bruhat order and a Lehmer code.
#[pyclass(module = "pycoxlehmer")]
struct CodedSystem {
    poset: BruhatPoset,
    code: LehmerCode,
}

impl CodedSystem {
    fn coded(&self) -> PyResult<CodedGroup<'_>> {
        CodedGroup::new(&self.poset, &self.code).map_err(err)
    }

    fn id(&self, w: u32) -> PyResult<ElementId> {
        if (w as usize) < self.poset.group().order() {
            Ok(ElementId(w))
        } else {
            Err(PyValueError::new_err(format!("no element with id {w}")))
        }
    }
}

fn ids(v: Vec<ElementId>) -> Vec<u32> {
    v.into_iter().map(|w| w.0).collect()
}

#[pymethods]
impl CodedSystem {
    /// `CodedSystem("A", 3)`, `CodedSystem("H3")`, `CodedSystem("I2", m=7)`,
    /// `CodedSystem("B", 3, code="variant")`.
    #[new]
    #[pyo3(signature = (type_label, rank=None, m=None, code="standard"))]
    fn new(type_label: &str, rank: Option<usize>, m: Option<u32>, code: &str) -> PyResult<Self> {
        let label: TypeLabel = type_label.parse().map_err(err)?;
        let sys = CoxeterSystem::build(label, rank.unwrap_or(0), m).map_err(err)?;
        let poset = BruhatPoset::build(sys).map_err(err)?;
        let code = code_by_name(&poset, code).map_err(err)?;
        Ok(Self { poset, code })
    }

    #[getter]
    fn name(&self) -> String {
        self.poset.group().system().name()
    }

    #[getter]
    fn code_name(&self) -> String {
        self.code.name().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.poset.group().rank()
    }

    #[getter]
    fn order(&self) -> usize {
        self.poset.group().order()
    }

    fn code_names(&self) -> Vec<&'static str> {
        code_names(self.poset.group().system().type_label())
    }

    fn exponents(&self) -> PyResult<Vec<u32>> {
        self.poset.group().exponents().map_err(err)
    }

    /// Coefficients of `W(q)`.
    fn group_polynomial(&self) -> Vec<i64> {
        self.poset.group().group_polynomial().into_coeffs()
    }

    fn identity(&self) -> u32 {
        self.poset.group().identity().0
    }

    fn longest(&self) -> u32 {
        self.poset.group().longest().0
    }

    fn elements(&self) -> Vec<u32> {
        ids(self.poset.group().ids().collect())
    }

    /// Element from a generator word such as `"s2 s1 s3 s2"`.
    fn element_from_word(&self, word: &str) -> PyResult<u32> {
        element_from_word(self.poset.group(), word)
            .map(|w| w.0)
            .map_err(err)
    }

    /// Element from one-line notation such as `"3412"` or `"-2,-1,3,4"`.
    fn element_from_one_line(&self, one_line: &str) -> PyResult<u32> {
        element_from_one_line(self.poset.group(), one_line)
            .map(|w| w.0)
            .map_err(err)
    }

    fn display(&self, w: u32) -> PyResult<String> {
        Ok(self.poset.group().display(self.id(w)?))
    }

    fn word(&self, w: u32) -> PyResult<String> {
        Ok(self.poset.group().word_string(self.id(w)?))
    }

    fn length(&self, w: u32) -> PyResult<u32> {
        Ok(self.poset.group().length(self.id(w)?))
    }

    fn multiply(&self, u: u32, v: u32) -> PyResult<u32> {
        Ok(self.poset.group().multiply(self.id(u)?, self.id(v)?).0)
    }

    fn inverse(&self, w: u32) -> PyResult<u32> {
        Ok(self.poset.group().inverse(self.id(w)?).0)
    }

    /// Bruhat order `u <= w`.
    fn leq(&self, u: u32, w: u32) -> PyResult<bool> {
        Ok(self.poset.leq(self.id(u)?, self.id(w)?))
    }

    fn lehmer(&self, w: u32) -> PyResult<Vec<u32>> {
        Ok(self.code.encode(self.id(w)?).to_vec())
    }

    fn decode(&self, x: Vec<u32>) -> Option<u32> {
        self.code.decode(&x).map(|w| w.0)
    }

    /// Coefficients of `h_w`; `route` is `direct`, `complex` or `maduro`.
    #[pyo3(signature = (w, route="direct"))]
    fn h_poly(&self, w: u32, route: &str) -> PyResult<Vec<i64>> {
        let r: HRoute = route.parse().map_err(err)?;
        let h = self.coded()?.h_poly(self.id(w)?, r).map_err(err)?;
        Ok(h.into_coeffs())
    }

    /// Codes of the maxima of `L([e, w])`.
    fn maxima(&self, w: u32) -> PyResult<Vec<Vec<u32>>> {
        Ok(self.coded()?.ideal(self.id(w)?).map_err(err)?.maxima())
    }

    fn is_principal(&self, w: u32) -> PyResult<bool> {
        Ok(self.coded()?.is_principal(self.id(w)?))
    }

    fn is_unimodal(&self, w: u32) -> PyResult<bool> {
        self.coded()?.is_unimodal(self.id(w)?).map_err(err)
    }

    fn principal_set(&self) -> PyResult<Vec<u32>> {
        Ok(ids(self.coded()?.principal_set()))
    }

    fn unimodal_set(&self) -> PyResult<Vec<u32>> {
        Ok(ids(self.coded()?.unimodal_set()))
    }

    /// The palindromic interval polynomials, as coefficient lists.
    fn pal_set(&self) -> Vec<Vec<i64>> {
        pal_set(&self.poset)
            .into_iter()
            .map(IntPolynomial::into_coeffs)
            .collect()
    }

    /// The complex of `L([e, w])` as a dict with `dim`, `vertices`, `facets`, `labels`.
    fn complex<'py>(&self, py: Python<'py>, w: u32) -> PyResult<Bound<'py, PyAny>> {
        let c = self.coded()?.complex(self.id(w)?).map_err(err)?;
        from_json(py, &c.to_json().to_string())
    }

    fn __repr__(&self) -> String {
        format!("CodedSystem({}, {})", self.name(), self.code.name())
    }
}

fn from_json<'py>(py: Python<'py>, s: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (s,))
}

fn perm(s: &str) -> PyResult<Permutation> {
    s.parse().map_err(err)
}

/// Runs a check suite and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (suite, max_rank=6, n=None, seed=suites::DEFAULT_SEED, samples=suites::DEFAULT_SAMPLES))]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    max_rank: usize,
    n: Option<usize>,
    seed: u64,
    samples: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = VerifyConfig {
        max_rank,
        n,
        seed,
        samples,
    };
    let report = py.detach(|| suites::run_named(suite, &cfg)).map_err(err)?;
    from_json(py, &serde_json::to_string(&report).expect("json"))
}

#[pyfunction]
fn suite_names() -> Vec<&'static str> {
    suites::Suite::names()
}

/// Coefficients of `prod [e_i + 1]_q`.
#[pyfunction]
fn q_analog_product(exponents: Vec<u32>) -> Vec<i64> {
    IntPolynomial::q_analog_product(&exponents).into_coeffs()
}

#[pyfunction]
fn is_m_sequence(h: Vec<i64>) -> bool {
    m_sequence(&h)
}

/// `L_n(w)` of a permutation in one-line notation.
#[pyfunction]
fn permutation_code(one_line: &str) -> PyResult<Vec<u32>> {
    Ok(perm(one_line)?.code())
}

#[pyfunction]
fn is_smooth(one_line: &str) -> PyResult<bool> {
    Ok(schubert::is_smooth(&perm(one_line)?))
}

#[pyfunction]
fn is_unimodal_permutation(one_line: &str) -> PyResult<bool> {
    Ok(schubert::is_unimodal_perm(&perm(one_line)?))
}

/// The partition `E(w)` of a smooth permutation.
#[pyfunction]
fn smooth_exponents(one_line: &str) -> PyResult<Vec<u32>> {
    Ok(schubert::exponents_of(&perm(one_line)?)
        .map_err(err)?
        .parts()
        .to_vec())
}

#[pymodule]
fn pycoxlehmer(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CodedSystem>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    m.add_function(wrap_pyfunction!(q_analog_product, m)?)?;
    m.add_function(wrap_pyfunction!(is_m_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(permutation_code, m)?)?;
    m.add_function(wrap_pyfunction!(is_smooth, m)?)?;
    m.add_function(wrap_pyfunction!(is_unimodal_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(smooth_exponents, m)?)?;
    Ok(())
}
