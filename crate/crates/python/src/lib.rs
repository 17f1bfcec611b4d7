//! Python module `codeal`: linear codes, binomials and the bases of their
//! code ideals. Variable and column indices are 0-based.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use codeal::render::{from_json, render, to_json};
use codeal::{BasisKind, BinomialIdealPresentation, Error, MonomialOrder, VariableNames};

create_exception!(
    codeal,
    TooLargeError,
    PyException,
    "Enumeration would exceed the configured cap."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::TooLarge { .. } => TooLargeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn names(aliases: bool) -> VariableNames {
    if aliases {
        VariableNames::Alphabetic
    } else {
        VariableNames::Indexed
    }
}

/// A linear code over a prime field, given by the rows of a generator matrix.
#[pyclass(name = "LinearCode", module = "codeal", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyLinearCode(codeal::LinearCode);

#[pymethods]
impl PyLinearCode {
    #[new]
    #[pyo3(signature = (rows, p, cap=None))]
    fn new(rows: Vec<Vec<u64>>, p: u64, cap: Option<u64>) -> PyResult<Self> {
        let code = codeal::LinearCode::from_rows(&rows, p).map_err(to_py)?;
        Ok(Self(match cap {
            Some(c) => code.with_enumeration_cap(c),
            None => code,
        }))
    }

    /// Parses the text format: a `p k n` header, then `k` rows.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        codeal::parse_code_file(text).map(Self).map_err(to_py)
    }

    #[getter]
    fn p(&self) -> u64 {
        self.0.p()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.length()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.dimension()
    }

    fn generator(&self) -> Vec<Vec<u64>> {
        self.0.generator().row_vecs()
    }

    fn parity_check(&self) -> Vec<Vec<u64>> {
        self.0.parity_check().row_vecs()
    }

    fn contains(&self, word: Vec<u64>) -> bool {
        self.0.contains(&word)
    }

    fn codewords(&self) -> PyResult<Vec<Vec<u64>>> {
        Ok(self
            .0
            .codewords()
            .map_err(to_py)?
            .map(|w| w.coords().to_vec())
            .collect())
    }

    fn weight_distribution(&self) -> PyResult<Vec<u64>> {
        Ok(self
            .0
            .weight_distribution()
            .map_err(to_py)?
            .counts()
            .to_vec())
    }

    fn minimum_distance(&self) -> PyResult<usize> {
        self.0.minimum_distance().map_err(to_py)
    }

    fn is_information_set(&self, columns: Vec<usize>) -> PyResult<bool> {
        self.0.is_information_set(&columns).map_err(to_py)
    }

    fn information_sets(&self) -> Vec<Vec<usize>> {
        self.0.information_sets()
    }

    fn to_text(&self) -> String {
        self.0.to_code_file()
    }

    fn __repr__(&self) -> String {
        format!("<LinearCode {}>", self.0)
    }
}

/// `x^plus - x^minus` with disjoint exponent supports.
#[pyclass(
    name = "Binomial",
    module = "codeal",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyBinomial(codeal::Binomial);

#[pymethods]
impl PyBinomial {
    #[new]
    fn new(plus: Vec<u64>, minus: Vec<u64>) -> PyResult<Self> {
        codeal::Binomial::from_vecs(plus, minus)
            .map(Self)
            .map_err(to_py)
    }

    /// Parses `x1^2*x3 - x2` or, with letters, `a^2*c - b`.
    #[staticmethod]
    fn parse(text: &str, n: usize) -> PyResult<Self> {
        codeal::Binomial::parse(text, n).map(Self).map_err(to_py)
    }

    #[getter]
    fn plus(&self) -> Vec<u64> {
        self.0.plus().as_slice().to_vec()
    }

    #[getter]
    fn minus(&self) -> Vec<u64> {
        self.0.minus().as_slice().to_vec()
    }

    /// Orientation-free representative.
    fn canonical(&self) -> Self {
        Self(self.0.canonical())
    }

    #[pyo3(signature = (aliases=false))]
    fn display(&self, aliases: bool) -> String {
        self.0.display(names(aliases)).to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("<Binomial {}>", self.0)
    }
}

/// A set of binomials of a code ideal: circuits, Graver basis, universal or
/// reduced Gröbner basis.
#[pyclass(name = "BasisSet", module = "codeal", frozen)]
struct PyBasisSet(codeal::BasisSet);

#[pymethods]
impl PyBasisSet {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        from_json(text).map(Self).map_err(to_py)
    }

    #[getter]
    fn kind(&self) -> String {
        self.0.kind().to_string()
    }

    #[getter]
    fn elements(&self) -> Vec<PyBinomial> {
        self.0.elements().iter().cloned().map(PyBinomial).collect()
    }

    #[getter]
    fn unordered_count(&self) -> usize {
        self.0.unordered_count()
    }

    #[getter]
    fn oriented_count(&self) -> usize {
        self.0.oriented_count()
    }

    fn to_json(&self) -> String {
        to_json(&self.0)
    }

    #[pyo3(signature = (aliases=false))]
    fn render(&self, aliases: bool) -> String {
        render(&self.0, false, names(aliases))
    }

    fn __len__(&self) -> usize {
        self.0.unordered_count()
    }

    fn __contains__(&self, b: &PyBinomial) -> bool {
        self.0.contains(&b.0)
    }

    fn __repr__(&self) -> String {
        format!(
            "<BasisSet {} with {} elements ({} oriented)>",
            self.0.kind(),
            self.0.unordered_count(),
            self.0.oriented_count()
        )
    }
}

fn order_from(name: &str, n: usize, priority: Option<Vec<usize>>) -> PyResult<MonomialOrder> {
    let priority = priority.unwrap_or_else(|| (0..n).collect());
    match name {
        "lex" => MonomialOrder::lex_with(priority),
        "grlex" => MonomialOrder::grlex_with(priority),
        "grevlex" => MonomialOrder::grevlex_with(priority),
        other => Err(Error::InvalidOrder(other.to_string())),
    }
    .map_err(to_py)
}

/// Reduced Gröbner basis by the Buchberger engine. `order` is `lex`, `grlex`
/// or `grevlex`; `priority` lists the variables from largest to smallest.
#[pyfunction]
#[pyo3(signature = (code, order="grevlex", priority=None))]
fn groebner_basis(
    code: &PyLinearCode,
    order: &str,
    priority: Option<Vec<usize>>,
) -> PyResult<PyBasisSet> {
    let order = order_from(order, code.0.length(), priority)?;
    let gb =
        codeal::buchberger(&BinomialIdealPresentation::of_code(&code.0), &order).map_err(to_py)?;
    Ok(PyBasisSet(codeal::BasisSet::from_oriented(
        BasisKind::Reduced,
        &code.0,
        gb.elements().to_vec(),
    )))
}

/// Reduced lex basis read off an information set, in the given order.
#[pyfunction]
fn closed_form_gb(code: &PyLinearCode, info_set: Vec<usize>) -> PyResult<PyBasisSet> {
    let gb = codeal::closed_form_gb(&code.0, &info_set).map_err(to_py)?;
    Ok(PyBasisSet(codeal::BasisSet::from_oriented(
        BasisKind::Reduced,
        &code.0,
        gb.elements().to_vec(),
    )))
}

#[pyfunction]
fn circuits(code: &PyLinearCode) -> PyResult<PyBasisSet> {
    codeal::circuits(&code.0).map(PyBasisSet).map_err(to_py)
}

#[pyfunction]
fn graver(code: &PyLinearCode) -> PyResult<PyBasisSet> {
    codeal::graver(&code.0).map(PyBasisSet).map_err(to_py)
}

#[pyfunction]
fn universal_gb(code: &PyLinearCode) -> PyResult<PyBasisSet> {
    codeal::universal_gb_binary(&code.0)
        .map(PyBasisSet)
        .map_err(to_py)
}

#[pyfunction]
fn is_member(b: &PyBinomial, code: &PyLinearCode) -> bool {
    codeal::is_member(&b.0, &code.0)
}

#[pyfunction]
fn is_primitive(b: &PyBinomial, code: &PyLinearCode) -> PyResult<bool> {
    codeal::is_primitive(&b.0, &code.0).map_err(to_py)
}

/// `(is_singleton, witness)` for a binary code; `witness` is a codeword
/// violating the rank condition, or `None`.
#[pyfunction]
fn is_singleton(code: &PyLinearCode) -> PyResult<(bool, Option<Vec<u64>>)> {
    let v = codeal::is_singleton_code(&code.0).map_err(to_py)?;
    Ok((v.is_singleton, v.witness.map(|w| w.coords().to_vec())))
}

/// `(holds, report)` for the inclusion chain circuits ⊆ universal ⊆ Graver.
#[pyfunction]
fn verify_chain(code: &PyLinearCode) -> PyResult<(bool, String)> {
    let r = codeal::verify_chain(&code.0).map_err(to_py)?;
    Ok((r.holds(), r.to_string()))
}

#[pymodule]
#[pyo3(name = "codeal")]
pub fn codeal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLinearCode>()?;
    m.add_class::<PyBinomial>()?;
    m.add_class::<PyBasisSet>()?;
    m.add("TooLargeError", m.py().get_type::<TooLargeError>())?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_gb, m)?)?;
    m.add_function(wrap_pyfunction!(circuits, m)?)?;
    m.add_function(wrap_pyfunction!(graver, m)?)?;
    m.add_function(wrap_pyfunction!(universal_gb, m)?)?;
    m.add_function(wrap_pyfunction!(is_member, m)?)?;
    m.add_function(wrap_pyfunction!(is_primitive, m)?)?;
    m.add_function(wrap_pyfunction!(is_singleton, m)?)?;
    m.add_function(wrap_pyfunction!(verify_chain, m)?)?;
    Ok(())
}
