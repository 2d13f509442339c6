//! Python bindings for the dbseq library.
//!
//! Exposes the `Word` value type, the shift-rule successors, the slow
//! reference oracles and the two streaming generators as a native module
//! named `dbseq_py`. Validation failures surface as `ValueError`.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dbseq::{oracles, Letter, SequenceOrder};

fn to_value_error(err: dbseq::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_order(order: &str) -> PyResult<SequenceOrder> {
    order.parse::<SequenceOrder>().map_err(to_value_error)
}

fn convert_letters(letters: Vec<i64>) -> PyResult<Vec<Letter>> {
    letters
        .into_iter()
        .map(|value| {
            Letter::try_from(value).map_err(|_| {
                PyValueError::new_err(format!("letter {value} out of range for any alphabet"))
            })
        })
        .collect()
}

/// An immutable word over the alphabet [k] = {0, ..., k-1}.
#[pyclass(name = "Word", frozen, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyWord {
    inner: dbseq::Word,
}

impl PyWord {
    fn wrap(inner: dbseq::Word) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyWord {
    #[new]
    fn new(letters: Vec<i64>, k: u32) -> PyResult<Self> {
        let letters = convert_letters(letters)?;
        Ok(Self::wrap(
            dbseq::Word::new(letters, k).map_err(to_value_error)?,
        ))
    }

    /// Parse the text encoding: digits for k <= 10, comma-separated values
    /// otherwise.
    #[staticmethod]
    fn parse(text: &str, k: u32) -> PyResult<Self> {
        Ok(Self::wrap(
            dbseq::Word::parse(text, k).map_err(to_value_error)?,
        ))
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k()
    }

    #[getter]
    fn letters(&self) -> Vec<u32> {
        self.inner.letters().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut hasher);
        hasher.finish()
    }

    /// Three-way comparison: -1, 0 or 1.
    fn lex_compare(&self, other: &Self) -> PyResult<i32> {
        let ordering = self
            .inner
            .lex_compare(&other.inner)
            .map_err(to_value_error)?;
        Ok(ordering as i32)
    }

    fn rotate(&self, i: i64) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.rotate(i).map_err(to_value_error)?))
    }

    fn complement(&self) -> Self {
        Self::wrap(self.inner.complement())
    }

    fn cyclic_order(&self) -> PyResult<usize> {
        self.inner.cyclic_order().map_err(to_value_error)
    }

    fn primitive_root(&self) -> PyResult<Self> {
        Ok(Self::wrap(
            self.inner.primitive_root().map_err(to_value_error)?,
        ))
    }

    fn is_lyndon(&self) -> PyResult<bool> {
        dbseq::is_lyndon(&self.inner).map_err(to_value_error)
    }

    fn is_expanded_lyndon(&self) -> PyResult<bool> {
        dbseq::is_expanded_lyndon(&self.inner).map_err(to_value_error)
    }

    fn is_prenecklace(&self) -> PyResult<bool> {
        dbseq::is_prenecklace(&self.inner).map_err(to_value_error)
    }

    /// Chen-Fox-Lyndon factorization as a list of words.
    fn cfl(&self) -> PyResult<Vec<PyWord>> {
        let factorization = dbseq::cfl_factorize(&self.inner).map_err(to_value_error)?;
        Ok(factorization
            .factor_words()
            .into_iter()
            .map(PyWord::wrap)
            .collect())
    }

    /// Fractional-power decomposition u^m v as (root, exponent, remainder).
    fn fractional_power(&self) -> PyResult<(PyWord, usize, PyWord)> {
        let fp = dbseq::fractional_power_decompose(&self.inner).map_err(to_value_error)?;
        Ok((PyWord::wrap(fp.root), fp.exponent, PyWord::wrap(fp.remainder)))
    }
}

/// Lazy iterator over the register-generated sequence; wraps cyclically.
#[pyclass(name = "FsrStream")]
struct PyFsrStream {
    inner: dbseq::FsrStream,
}

#[pymethods]
impl PyFsrStream {
    fn __iter__(slf: PyRef<'_, Self>) -> PyRef<'_, Self> {
        slf
    }

    fn __next__(mut slf: PyRefMut<'_, Self>) -> Option<u32> {
        slf.inner.next()
    }

    #[getter]
    fn emitted(&self) -> u128 {
        self.inner.emitted()
    }

    /// Current register content.
    fn state(&self) -> PyWord {
        PyWord::wrap(self.inner.state())
    }
}

/// Finite iterator over the concatenation of primitive roots; exactly k^n
/// letters.
#[pyclass(name = "FkmStream")]
struct PyFkmStream {
    inner: dbseq::FkmStream,
}

#[pymethods]
impl PyFkmStream {
    fn __iter__(slf: PyRef<'_, Self>) -> PyRef<'_, Self> {
        slf
    }

    fn __next__(mut slf: PyRefMut<'_, Self>) -> Option<u32> {
        slf.inner.next()
    }

    #[getter]
    fn emitted(&self) -> u128 {
        self.inner.emitted()
    }
}

/// Necklace-head predicate.
#[pyfunction]
fn head(word: &PyWord) -> PyResult<bool> {
    dbseq::head(&word.inner).map_err(to_value_error)
}

/// Successor along the prefer-min cycle.
#[pyfunction]
fn next_min(state: &PyWord) -> PyResult<PyWord> {
    Ok(PyWord::wrap(
        dbseq::next_min(&state.inner).map_err(to_value_error)?,
    ))
}

/// Successor along the prefer-max cycle.
#[pyfunction]
fn next_max(state: &PyWord) -> PyResult<PyWord> {
    Ok(PyWord::wrap(
        dbseq::next_max(&state.inner).map_err(to_value_error)?,
    ))
}

/// Definition-literal head test (slow reference).
#[pyfunction]
fn head_naive(word: &PyWord) -> PyResult<bool> {
    oracles::head_naive(&word.inner).map_err(to_value_error)
}

/// Definition-literal successor (slow reference).
#[pyfunction]
fn next_naive(state: &PyWord) -> PyResult<PyWord> {
    Ok(PyWord::wrap(
        oracles::next_naive(&state.inner).map_err(to_value_error)?,
    ))
}

/// Exact number of necklaces of length n over [k].
#[pyfunction]
fn necklace_count(n: u32, k: u32) -> PyResult<BigUint> {
    dbseq::necklace_count(n, k).map_err(to_value_error)
}

/// k^n as an exact integer.
#[pyfunction]
fn sequence_length(n: u32, k: u32) -> BigUint {
    BigUint::from(k).pow(n)
}

/// Greedy reference construction of the whole sequence.
#[pyfunction]
#[pyo3(signature = (n, k, order = "min"))]
fn greedy_sequence(n: u32, k: u32, order: &str) -> PyResult<PyWord> {
    let order = parse_order(order)?;
    Ok(PyWord::wrap(
        oracles::greedy_sequence(n, k, order).map_err(to_value_error)?,
    ))
}

/// All expanded Lyndon words of length n over [k] in increasing order.
#[pyfunction]
fn enumerate_expanded_lyndon(n: u32, k: u32) -> PyResult<Vec<PyWord>> {
    Ok(oracles::enumerate_expanded_lyndon(n, k)
        .map_err(to_value_error)?
        .into_iter()
        .map(PyWord::wrap)
        .collect())
}

/// Streaming letters from the feedback shift register.
#[pyfunction]
#[pyo3(signature = (n, k, order = "min"))]
fn fsr_stream(n: u32, k: u32, order: &str) -> PyResult<PyFsrStream> {
    let order = parse_order(order)?;
    Ok(PyFsrStream {
        inner: dbseq::fsr_stream(n, k, order).map_err(to_value_error)?,
    })
}

/// Streaming letters from the root concatenation.
#[pyfunction]
#[pyo3(signature = (n, k, order = "min"))]
fn fkm_sequence(n: u32, k: u32, order: &str) -> PyResult<PyFkmStream> {
    let order = parse_order(order)?;
    Ok(PyFkmStream {
        inner: dbseq::fkm_sequence(n, k, order).map_err(to_value_error)?,
    })
}

/// Check that all cyclic n-windows are distinct. Returns None when the
/// sequence is valid, otherwise the first pair of colliding positions.
#[pyfunction]
fn verify_debruijn(sequence: &PyWord, n: u32) -> PyResult<Option<(u64, u64)>> {
    match dbseq::verify_debruijn(&sequence.inner, n).map_err(to_value_error)? {
        dbseq::VerificationReport::Valid => Ok(None),
        dbseq::VerificationReport::DuplicateWindow { first, second } => {
            Ok(Some((first, second)))
        }
    }
}

#[pymodule]
fn dbseq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyFsrStream>()?;
    m.add_class::<PyFkmStream>()?;
    m.add_function(wrap_pyfunction!(head, m)?)?;
    m.add_function(wrap_pyfunction!(next_min, m)?)?;
    m.add_function(wrap_pyfunction!(next_max, m)?)?;
    m.add_function(wrap_pyfunction!(head_naive, m)?)?;
    m.add_function(wrap_pyfunction!(next_naive, m)?)?;
    m.add_function(wrap_pyfunction!(necklace_count, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_length, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_expanded_lyndon, m)?)?;
    m.add_function(wrap_pyfunction!(fsr_stream, m)?)?;
    m.add_function(wrap_pyfunction!(fkm_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(verify_debruijn, m)?)?;
    Ok(())
}
