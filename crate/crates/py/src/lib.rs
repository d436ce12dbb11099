//! Python bindings: braids, associators, GT elements and the verification suite.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

use teich0::assoc::{dih_groupoid, i_phi_between, k_phi_between, per_degree, solve_associator};
use teich0::braid::{braid_eq, eq_mod_center, special, star_involution, BraidWord, SpecialKind};
use teich0::catcore::{cyc_groupoid, SmallCategory};
use teich0::exactalg::Rational;
use teich0::freegroup::FreeWord;
use teich0::gt::{check_grt, check_gt_relations, gt_act_on_associator, gt_mul, i_phi, solve_gt};
use teich0::liealg::{algebra, bch, free2, AlgKind};
use teich0::univcat::{teich_objects, ParenTree};
use teich0::verify as suite;

fn err(e: teich0::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(s: &str) -> PyResult<Rational> {
    s.parse().map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn from_py(obj: &Bound<'_, PyAny>) -> PyResult<Value> {
    let s: String = obj.py().import("json")?.call_method1("dumps", (obj,))?.extract()?;
    serde_json::from_str(&s).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// A braid word on `strands` strands; letters are `(i, +-1)` with `i` one-based.
#[pyclass(name = "Braid", module = "pyteich0", frozen)]
struct PyBraid {
    inner: BraidWord,
}

#[pymethods]
impl PyBraid {
    #[new]
    fn new(strands: usize, letters: Vec<(usize, i64)>) -> PyResult<Self> {
        Ok(PyBraid { inner: BraidWord::new(strands, letters).map_err(err)? })
    }

    /// `half_twist`, `full_twist`, `rho`, `sphere_relator`, `braiding_block` (args `[m]`) or `pure_gen` (args `[i, j]`).
    #[staticmethod]
    #[pyo3(signature = (kind, n, args = Vec::new()))]
    fn special(kind: &str, n: usize, args: Vec<usize>) -> PyResult<Self> {
        let k = SpecialKind::parse(kind, &args).map_err(err)?;
        Ok(PyBraid { inner: special(k, n).map_err(err)? })
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<(usize, i64)> {
        self.inner.letters().to_vec()
    }

    fn __mul__(&self, other: &PyBraid) -> PyResult<Self> {
        Ok(PyBraid { inner: self.inner.mul(&other.inner).map_err(err)? })
    }

    fn inverse(&self) -> Self {
        PyBraid { inner: self.inner.inv() }
    }

    fn __pow__(&self, k: i64, _modulo: Option<i64>) -> Self {
        PyBraid { inner: self.inner.pow(k) }
    }

    /// One-based images of the underlying permutation.
    fn perm(&self) -> Vec<usize> {
        self.inner.perm().images().iter().map(|i| i + 1).collect()
    }

    fn star(&self) -> Self {
        PyBraid { inner: star_involution(&self.inner) }
    }

    /// Equality in the braid group.
    fn equals(&self, other: &PyBraid) -> PyResult<bool> {
        braid_eq(&self.inner, &other.inner).map_err(err)
    }

    /// Equality modulo the full twist.
    fn equals_mod_center(&self, other: &PyBraid) -> PyResult<bool> {
        eq_mod_center(&self.inner, &other.inner).map_err(err)
    }

    fn __eq__(&self, other: &PyBraid) -> PyResult<bool> {
        self.equals(other)
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &serde_json::to_value(&self.inner).expect("serializable"))
    }

    fn __repr__(&self) -> String {
        format!("Braid({}, {:?})", self.inner.strands(), self.inner.letters())
    }
}

/// A truncated associator `(mu, Phi)`.
#[pyclass(name = "Associator", module = "pyteich0", frozen)]
struct PyAssociator {
    inner: teich0::assoc::Associator,
}

#[pymethods]
impl PyAssociator {
    #[staticmethod]
    #[pyo3(signature = (degree = 4, mu = "1"))]
    fn solve(py: Python<'_>, degree: usize, mu: &str) -> PyResult<Self> {
        let mu = rational(mu)?;
        let a = py.detach(|| solve_associator(degree, &mu)).map_err(err)?;
        Ok(PyAssociator { inner: a.as_ref().clone() })
    }

    #[staticmethod]
    fn from_dict(d: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyAssociator { inner: teich0::assoc::Associator::from_json(&from_py(d)?).map_err(err)? })
    }

    #[getter]
    fn mu(&self) -> String {
        self.inner.mu.to_string()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree
    }

    /// Coordinates of `log Phi` grouped by degree, as strings.
    #[getter]
    fn log_phi(&self) -> Vec<Vec<String>> {
        per_degree(&free2(self.inner.degree), &self.inner.log_phi).into_iter().map(|d| d.iter().map(Rational::to_string).collect()).collect()
    }

    fn is_valid(&self) -> PyResult<bool> {
        self.inner.is_valid().map_err(err)
    }

    /// Image of a braid between two parenthesizations (dot notation, e.g. `"(..)."`).
    #[pyo3(signature = (braid, tree, target = None, project = false))]
    fn eval<'py>(&self, py: Python<'py>, braid: &PyBraid, tree: &str, target: Option<&str>, project: bool) -> PyResult<Bound<'py, PyAny>> {
        let src = ParenTree::parse_dots(tree).map_err(err)?;
        let tgt = match target {
            Some(t) => ParenTree::parse_dots(t).map_err(err)?,
            None => src.clone(),
        };
        let g = if project { k_phi_between(&src, &tgt, &self.inner, &braid.inner) } else { i_phi_between(&src, &tgt, &self.inner, &braid.inner) };
        to_py(py, &g.map_err(err)?.to_json())
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner.to_json())
    }

    fn __repr__(&self) -> String {
        format!("Associator(mu={}, N={})", self.inner.mu, self.inner.degree)
    }
}

/// An element of GT: discrete `(lambda, f)` with `f` in `F_2`, or truncated prounipotent.
#[pyclass(name = "GtElement", module = "pyteich0", frozen)]
struct PyGtElement {
    inner: teich0::gt::GtElement,
}

#[pymethods]
impl PyGtElement {
    #[staticmethod]
    #[pyo3(signature = (lam, f = Vec::new()))]
    fn discrete(lam: i64, f: Vec<(usize, i64)>) -> PyResult<Self> {
        let f = FreeWord::from_runs(2, &f).map_err(err)?;
        Ok(PyGtElement { inner: teich0::gt::GtElement::discrete(lam, f).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (lam, degree = 4, seed = 0))]
    fn solve(py: Python<'_>, lam: &str, degree: usize, seed: u64) -> PyResult<Self> {
        let lam = rational(lam)?;
        Ok(PyGtElement { inner: py.detach(|| solve_gt(&lam, degree, seed)).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (d, degree = 4))]
    fn from_dict(d: &Bound<'_, PyAny>, degree: usize) -> PyResult<Self> {
        Ok(PyGtElement { inner: teich0::gt::GtElement::from_json(&from_py(d)?, degree).map_err(err)? })
    }

    #[getter]
    fn lam(&self) -> String {
        self.inner.lambda().to_string()
    }

    /// Duality, hexagon and pentagon.
    fn check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &check_gt_relations(&self.inner).map_err(err)?.to_json())
    }

    fn __mul__(&self, other: &PyGtElement) -> PyResult<Self> {
        Ok(PyGtElement { inner: gt_mul(&self.inner, &other.inner).map_err(err)? })
    }

    /// `e * Phi`.
    fn act(&self, a: &PyAssociator) -> PyResult<PyAssociator> {
        Ok(PyAssociator { inner: gt_act_on_associator(&self.inner, &a.inner).map_err(err)? })
    }

    /// `i_Phi(e)` in GRT with its relation check.
    fn to_grt<'py>(&self, py: Python<'py>, a: &PyAssociator) -> PyResult<Bound<'py, PyAny>> {
        let h = i_phi(&self.inner, &a.inner).map_err(err)?;
        let rel = check_grt(&h).map_err(err)?;
        to_py(py, &serde_json::json!({ "grt": h.to_json(), "relations": rel.to_json() }))
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner.to_json())
    }

    fn __repr__(&self) -> String {
        format!("GtElement({})", self.inner.to_json())
    }
}

/// Dimensions per degree of `t_n`, `p_n` or the free Lie algebra on `n` generators.
#[pyfunction]
#[pyo3(signature = (name, n = 2, degree = 4))]
fn lie_dims(name: &str, n: usize, degree: usize) -> PyResult<Vec<usize>> {
    Ok(algebra(AlgKind::parse(name, n).map_err(err)?, degree).dims())
}

/// `log(exp(x) exp(y))` in `f_2`; elements are per-degree coordinate lists.
#[pyfunction]
#[pyo3(signature = (x, y, degree = 4))]
fn bch_free2<'py>(py: Python<'py>, x: &Bound<'py, PyAny>, y: &Bound<'py, PyAny>, degree: usize) -> PyResult<Bound<'py, PyAny>> {
    let f = free2(degree);
    let x = teich0::assoc::from_per_degree(&f, &from_py(x)?).map_err(err)?;
    let y = teich0::assoc::from_per_degree(&f, &from_py(y)?).map_err(err)?;
    let z = per_degree(&f, &bch(&f, &x, &y));
    to_py(py, &serde_json::to_value(z).expect("serializable"))
}

/// Objects of `Cyc_S` or `Dih_S`.
#[pyfunction]
#[pyo3(signature = (group, letters, degree = 2))]
fn quotient_objects(group: &str, letters: Vec<String>, degree: usize) -> PyResult<Vec<Vec<String>>> {
    match group {
        "cyc" => Ok(cyc_groupoid(letters).map_err(err)?.objects()),
        "dih" => Ok(dih_groupoid(letters, degree).map_err(err)?.objects()),
        _ => Err(PyValueError::new_err(format!("unknown groupoid `{group}`"))),
    }
}

/// Objects of `T_{0,S}` (dihedral) or `T'_{0,S}` (cyclic).
#[pyfunction]
#[pyo3(signature = (letters, cyclic = false))]
fn teichmuller_objects<'py>(py: Python<'py>, letters: Vec<String>, cyclic: bool) -> PyResult<Bound<'py, PyAny>> {
    let objs = teich_objects(&letters, !cyclic).map_err(err)?;
    let v: Vec<Value> = objs.iter().map(|(t, s)| serde_json::json!({ "tree": t, "seq": s })).collect();
    to_py(py, &Value::Array(v))
}

/// Runs a verification section; returns `(all_passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (section = "all", degree = 4, mu = "1", seed = 0))]
fn verify(py: Python<'_>, section: &str, degree: usize, mu: &str, seed: u64) -> PyResult<(bool, String)> {
    let cfg = suite::Config { degree, mu: rational(mu)?, seed };
    let r = py.detach(|| suite::run(section, &cfg)).map_err(err)?;
    Ok((r.all_pass(), r.to_text()))
}

#[pymodule]
pub fn pyteich0(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraid>()?;
    m.add_class::<PyAssociator>()?;
    m.add_class::<PyGtElement>()?;
    m.add_function(wrap_pyfunction!(lie_dims, m)?)?;
    m.add_function(wrap_pyfunction!(bch_free2, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_objects, m)?)?;
    m.add_function(wrap_pyfunction!(teichmuller_objects, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
