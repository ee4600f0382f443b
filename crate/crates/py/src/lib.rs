//! Python bindings: `import baxlab`.

use std::collections::{BTreeMap, BTreeSet};

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use baxlab_core::bijections;
use baxlab_core::harness::{self, Suite};
use baxlab_core::json;
use baxlab_core::laguerre::{self, LaguerreHistory};
use baxlab_core::lattice;
use baxlab_core::perm;
use baxlab_core::qseries;
use baxlab_core::render;
use baxlab_core::Error;

fn value_error(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sorted(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().copied().collect()
}

/// A permutation of `1..n` in one-line notation.
#[pyclass(module = "baxlab", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Permutation(perm::Permutation);

#[pymethods]
impl Permutation {
    /// Accepts a list of letters or a string such as `"2413"` or `"2,4,1,3"`.
    #[new]
    fn py_new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        let p = if let Ok(s) = value.extract::<String>() {
            s.parse()
        } else {
            perm::Permutation::new(value.extract::<Vec<usize>>()?)
        };
        p.map(Permutation).map_err(value_error)
    }

    #[getter]
    fn letters(&self) -> Vec<usize> {
        self.0.as_slice().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.as_slice())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn is_baxter(&self) -> bool {
        self.0.is_baxter()
    }

    fn inverse(&self) -> Self {
        Permutation(self.0.inverse())
    }

    /// All descent statistics of the permutation and of its inverse, as a dict.
    fn stat_profile<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = self.0.stat_profile();
        let d = PyDict::new(py);
        d.set_item("des_set", sorted(&s.des_set))?;
        d.set_item("db_set", sorted(&s.db_set))?;
        d.set_item("dt_set", sorted(&s.dt_set))?;
        d.set_item("dt_mod_set", sorted(&s.dt_mod_set))?;
        d.set_item("dt_hat_set", sorted(&s.dt_hat_set))?;
        d.set_item("ides_set", sorted(&s.ides_set))?;
        d.set_item("idb_set", sorted(&s.idb_set))?;
        d.set_item("idt_set", sorted(&s.idt_set))?;
        d.set_item("idt_mod_set", sorted(&s.idt_mod_set))?;
        d.set_item("des", s.des)?;
        d.set_item("maj", s.maj)?;
        d.set_item("imaj_b", s.imaj_b)?;
        d.set_item("imaj_t", s.imaj_t)?;
        Ok(d)
    }

    /// Classes of the letters `1..n` as a string over U, D, B, R.
    fn letter_classes(&self) -> String {
        let w = self.0.classify_letters();
        w.as_slice()
            .iter()
            .map(|&c| laguerre::ColoredStep::from(c).code())
            .collect()
    }

    fn is_alternating(&self) -> bool {
        self.0.shape_flags().alternating
    }

    fn is_reverse_alternating(&self) -> bool {
        self.0.shape_flags().reverse_alternating
    }

    fn is_genocchi(&self) -> bool {
        self.0.shape_flags().genocchi
    }
}

/// Three lattice paths starting at (2,0), (1,1) and (0,2).
#[pyclass(module = "baxlab", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PathTriple(lattice::PathTriple);

#[pymethods]
impl PathTriple {
    /// Builds a triple from the step words of the bottom, middle and top paths.
    #[new]
    fn py_new(bottom: &str, middle: &str, top: &str) -> PyResult<Self> {
        let path = |start, w| lattice::LatticePath::from_word(start, w).map_err(value_error);
        let t = lattice::PathTriple::new(
            path(lattice::BOTTOM_START, bottom)?,
            path(lattice::MIDDLE_START, middle)?,
            path(lattice::TOP_START, top)?,
        );
        t.check_shape().map_err(value_error)?;
        Ok(PathTriple(t))
    }

    /// Parses the JSON form; `strict` also requires vertex-disjoint paths.
    #[staticmethod]
    #[pyo3(signature = (text, strict = true))]
    fn from_json(text: &str, strict: bool) -> PyResult<Self> {
        let t = if strict {
            json::triple_from_json_strict(text)
        } else {
            json::from_json(text)
        };
        t.map(PathTriple).map_err(value_error)
    }

    fn to_json(&self) -> String {
        json::to_json(&self.0)
    }

    #[getter]
    fn words(&self) -> (String, String, String) {
        (
            self.0.bottom.word(),
            self.0.middle.word(),
            self.0.top.word(),
        )
    }

    /// The encoded index sets (bottom, middle, top).
    fn decode(&self) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let (b, m, t) = self.0.decode();
        (sorted(&b), sorted(&m), sorted(&t))
    }

    fn is_nonintersecting(&self) -> bool {
        self.0.is_nonintersecting()
    }

    /// `(n, k)` with the triple in `Tlp(n, k)`; raises otherwise.
    fn tlp_parameters(&self) -> PyResult<(usize, usize)> {
        self.0.tlp_parameters().map_err(value_error)
    }

    fn render_ascii(&self) -> String {
        render::render_ascii(&self.0)
    }

    fn __repr__(&self) -> String {
        let (b, m, t) = self.words();
        format!("PathTriple({b:?}, {m:?}, {t:?})")
    }
}

#[pyfunction]
fn generate_baxter(n: usize) -> Vec<Permutation> {
    perm::generate_baxter(n)
        .into_iter()
        .map(Permutation)
        .collect()
}

#[pyfunction]
#[pyo3(signature = (p, unchecked = false))]
fn gamma(p: &Permutation, unchecked: bool) -> PyResult<PathTriple> {
    if unchecked {
        return Ok(PathTriple(bijections::gamma_unchecked(&p.0)));
    }
    bijections::gamma(&p.0).map(PathTriple).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (p, unchecked = false))]
fn gamma_prime(p: &Permutation, unchecked: bool) -> PyResult<PathTriple> {
    if unchecked {
        return Ok(PathTriple(bijections::gamma_prime_unchecked(&p.0)));
    }
    bijections::gamma_prime(&p.0)
        .map(PathTriple)
        .map_err(value_error)
}

#[pyfunction]
fn psi(p: &Permutation) -> PyResult<PathTriple> {
    bijections::psi(&p.0).map(PathTriple).map_err(value_error)
}

#[pyfunction]
fn gamma_inverse(t: &PathTriple) -> PyResult<Permutation> {
    bijections::gamma_inverse(&t.0)
        .map(Permutation)
        .map_err(value_error)
}

#[pyfunction]
fn gamma_prime_inverse(t: &PathTriple) -> PyResult<Permutation> {
    bijections::gamma_prime_inverse(&t.0)
        .map(Permutation)
        .map_err(value_error)
}

#[pyfunction]
fn psi_inverse(t: &PathTriple) -> PyResult<Permutation> {
    bijections::psi_inverse(&t.0)
        .map(Permutation)
        .map_err(value_error)
}

/// The Laguerre history of `p` as `(word, weights)`.
#[pyfunction]
fn psi_fv(p: &Permutation) -> (String, Vec<usize>) {
    let h = laguerre::psi_fv(&p.0);
    (h.word().to_string(), h.weights().to_vec())
}

#[pyfunction]
fn psi_fv_inverse(word: &str, weights: Vec<usize>) -> PyResult<Permutation> {
    let h = LaguerreHistory::parse(word, weights).map_err(value_error)?;
    laguerre::psi_fv_inverse(&h)
        .map(Permutation)
        .map_err(value_error)
}

/// `(laguerre_ok, baxter_ok)` for a history.
#[pyfunction]
fn validate_history(word: &str, weights: Vec<usize>) -> PyResult<(bool, bool)> {
    let v = LaguerreHistory::parse(word, weights)
        .map_err(value_error)?
        .validate();
    Ok((v.laguerre_ok, v.baxter_ok))
}

#[pyfunction]
fn enumerate_tlp(n: usize, k: usize) -> Vec<PathTriple> {
    lattice::enumerate_tlp(n, k)
        .into_iter()
        .map(PathTriple)
        .collect()
}

#[pyfunction]
fn baxter_number(n: u64) -> num_bigint::BigUint {
    qseries::baxter_number(n).0
}

#[pyfunction]
fn tlp_count_formula(n: u64, k: u64) -> num_bigint::BigUint {
    qseries::tlp_count_formula(n, k).0
}

/// Coefficients of the `(t, q)`-Baxter polynomial as `{(i, j): c}` for `t^i q^j`.
#[pyfunction]
#[pyo3(signature = (n, from_statistics = false))]
fn baxter_polynomial(
    n: usize,
    from_statistics: bool,
) -> PyResult<BTreeMap<(u32, u32), num_bigint::BigInt>> {
    let p = if from_statistics {
        qseries::baxter_polynomial_lhs(n)
    } else {
        qseries::baxter_polynomial_rhs(n as u32).map_err(value_error)?
    };
    Ok(p.terms().map(|(k, c)| (k, c.clone())).collect())
}

/// Runs a verification suite and returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (suite, n, jobs = None))]
fn run_suite(py: Python<'_>, suite: &str, n: usize, jobs: Option<usize>) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(value_error)?;
    let report = py
        .detach(|| harness::run_suite(suite, n, jobs))
        .map_err(value_error)?;
    serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
fn baxlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Permutation>()?;
    m.add_class::<PathTriple>()?;
    m.add_function(wrap_pyfunction!(generate_baxter, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_prime, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_prime_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(psi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(psi_fv, m)?)?;
    m.add_function(wrap_pyfunction!(psi_fv_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(validate_history, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tlp, m)?)?;
    m.add_function(wrap_pyfunction!(baxter_number, m)?)?;
    m.add_function(wrap_pyfunction!(tlp_count_formula, m)?)?;
    m.add_function(wrap_pyfunction!(baxter_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("SUITES", Suite::NAMES.to_vec())?;
    Ok(())
}
