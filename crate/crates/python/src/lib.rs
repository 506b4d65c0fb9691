//! Python bindings. Values cross the boundary in their text encoding, so
//! every semiring is handled by the same classes.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList};
use semistar::bench::bench_star;
use semistar::io::RawEntry;
use semistar::matrix::{mat_add, mat_mul, BlockStarOptions, Side};
use semistar::{
    check_equivalence, star_with, with_semiring, Automaton as Decoded, AutomatonFile, ClosureStrategy,
    EpsilonAutomaton, Error, MatrixFile, OpCounter, Semiring, SemiringKind, Value, Variant, Word,
};

create_exception!(
    semistar_py,
    StarUndefined,
    PyValueError,
    "The star does not exist or did not settle."
);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Star(_) => StarUndefined::new_err(e.to_string()),
        Error::Io(_) => PyIOError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn kind(id: &str) -> PyResult<SemiringKind> {
    id.parse().map_err(py_err)
}

fn entry_text(obj: &Bound<'_, PyAny>) -> PyResult<String> {
    if obj.is_instance_of::<PyBool>() {
        Ok(if obj.is_truthy()? { "1" } else { "0" }.to_string())
    } else {
        Ok(obj.str()?.to_string())
    }
}

fn counters(ctr: &OpCounter) -> BTreeMap<&'static str, u64> {
    BTreeMap::from([
        ("adds", ctr.adds),
        ("muls", ctr.muls),
        ("stars", ctr.stars),
        ("temp_cells", ctr.temp_cells),
        ("products", ctr.products),
    ])
}

fn parse_side(side: &str) -> PyResult<Side> {
    match side {
        "right" => Ok(Side::Right),
        "left" => Ok(Side::Left),
        _ => Err(PyValueError::new_err(format!(
            "side must be 'right' or 'left', not {side:?}"
        ))),
    }
}

fn parse_method(method: &str) -> PyResult<ClosureStrategy> {
    match method {
        "auto" => Ok(ClosureStrategy::Auto),
        "block" => Ok(ClosureStrategy::Block),
        "iterative" => Ok(ClosureStrategy::Iterative),
        "nilpotent" => Ok(ClosureStrategy::Nilpotent),
        _ => Err(PyValueError::new_err(format!("unknown method {method:?}"))),
    }
}

fn parse_variant(variant: &str) -> PyResult<Variant> {
    match variant {
        "left" => Ok(Variant::LeftClosure),
        "right" => Ok(Variant::RightClosure),
        _ => Err(PyValueError::new_err(format!(
            "variant must be 'left' or 'right', not {variant:?}"
        ))),
    }
}

/// `a ⊕ b` in the named semiring.
#[pyfunction]
fn add(semiring: &str, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<String> {
    let k = kind(semiring)?;
    let x = Value::parse(k, &entry_text(a)?).map_err(py_err)?;
    let y = Value::parse(k, &entry_text(b)?).map_err(py_err)?;
    Ok(x.add(&y).map_err(py_err)?.encode())
}

/// `a ⊗ b` in the named semiring.
#[pyfunction]
fn mul(semiring: &str, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<String> {
    let k = kind(semiring)?;
    let x = Value::parse(k, &entry_text(a)?).map_err(py_err)?;
    let y = Value::parse(k, &entry_text(b)?).map_err(py_err)?;
    Ok(x.mul(&y).map_err(py_err)?.encode())
}

/// `a*`, or `None` where the star is undefined.
#[pyfunction]
fn star(semiring: &str, a: &Bound<'_, PyAny>) -> PyResult<Option<String>> {
    let x = Value::parse(kind(semiring)?, &entry_text(a)?).map_err(py_err)?;
    Ok(x.star().map(|s| s.encode()))
}

/// Block-star counter records, one dict per size and trial.
#[pyfunction(name = "bench")]
#[pyo3(signature = (sizes, semiring, trials=1, seed=0))]
fn bench_records<'py>(
    py: Python<'py>,
    sizes: Vec<usize>,
    semiring: &str,
    trials: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyList>> {
    let records =
        with_semiring!(kind(semiring)?, S => bench_star::<S>(&sizes, trials, seed, BlockStarOptions::default()))
            .map_err(py_err)?;
    let out = PyList::empty(py);
    for r in records {
        let d = PyDict::new(py);
        d.set_item("n", r.n)?;
        d.set_item("adds", r.adds)?;
        d.set_item("muls", r.muls)?;
        d.set_item("stars", r.stars)?;
        d.set_item("temp_cells", r.temp_cells)?;
        d.set_item("wall_time", r.wall_time)?;
        out.append(d)?;
    }
    Ok(out)
}

/// A matrix over one of the semirings, entries held in canonical text form.
#[pyclass(module = "semistar_py", frozen)]
struct Matrix {
    file: MatrixFile,
}

impl Matrix {
    fn canonical(file: MatrixFile) -> PyResult<Self> {
        let file = with_semiring!(file.kind().map_err(py_err)?, S => {
            MatrixFile::encode(&file.decode::<S>().map_err(py_err)?)
        });
        Ok(Matrix { file })
    }

    fn same_semiring(&self, other: &Matrix) -> PyResult<SemiringKind> {
        if self.file.semiring != other.file.semiring {
            return Err(PyValueError::new_err(format!(
                "semirings differ ({} and {})",
                self.file.semiring, other.file.semiring
            )));
        }
        kind(&self.file.semiring)
    }
}

#[pymethods]
impl Matrix {
    #[new]
    fn new(semiring: &str, rows: &Bound<'_, PyList>) -> PyResult<Self> {
        let mut entries = Vec::new();
        let mut cols = None;
        for row in rows.iter() {
            let row = row
                .cast_into::<PyList>()
                .map_err(|_| PyValueError::new_err("rows must be lists"))?;
            if *cols.get_or_insert(row.len()) != row.len() {
                return Err(PyValueError::new_err("rows have different lengths"));
            }
            for x in row.iter() {
                entries.push(RawEntry::Text(entry_text(&x)?));
            }
        }
        Matrix::canonical(MatrixFile {
            semiring: semiring.to_string(),
            rows: rows.len(),
            cols: cols.unwrap_or(0),
            entries,
        })
    }

    #[staticmethod]
    fn identity(semiring: &str, n: usize) -> PyResult<Self> {
        let file = with_semiring!(kind(semiring)?, S => MatrixFile::encode(&semistar::Matrix::<S>::identity(n)));
        Ok(Matrix { file })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Matrix::canonical(MatrixFile::from_json(text).map_err(py_err)?)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Matrix::canonical(MatrixFile::read(path).map_err(py_err)?)
    }

    fn to_json(&self) -> String {
        self.file.to_json()
    }

    fn save(&self, path: &str) -> PyResult<()> {
        self.file.write(path).map_err(py_err)
    }

    #[getter]
    fn semiring(&self) -> &str {
        &self.file.semiring
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.file.rows, self.file.cols)
    }

    fn to_rows(&self) -> Vec<Vec<String>> {
        let text: Vec<String> = self
            .file
            .entries
            .iter()
            .map(|e| match e {
                RawEntry::Text(s) => s.clone(),
                other => format!("{other:?}"),
            })
            .collect();
        if self.file.cols == 0 {
            return vec![Vec::new(); self.file.rows];
        }
        text.chunks(self.file.cols).map(<[String]>::to_vec).collect()
    }

    /// Star and its operation counts. Raises `StarUndefined` when it fails.
    #[pyo3(signature = (side="right", method="auto"))]
    fn star(&self, side: &str, method: &str) -> PyResult<(Matrix, BTreeMap<&'static str, u64>)> {
        let (side, strategy) = (parse_side(side)?, parse_method(method)?);
        let mut ctr = OpCounter::new();
        let file = with_semiring!(kind(&self.file.semiring)?, S => {
            let m = self.file.decode::<S>().map_err(py_err)?;
            MatrixFile::encode(&star_with(&m, strategy, side, &mut ctr).map_err(py_err)?)
        });
        Ok((Matrix { file }, counters(&ctr)))
    }

    fn __add__(&self, other: &Matrix) -> PyResult<Matrix> {
        let file = with_semiring!(self.same_semiring(other)?, S => {
            let (a, b) = (self.file.decode::<S>().map_err(py_err)?, other.file.decode::<S>().map_err(py_err)?);
            MatrixFile::encode(&mat_add(&a, &b, &mut OpCounter::new()).map_err(py_err)?)
        });
        Ok(Matrix { file })
    }

    fn __mul__(&self, other: &Matrix) -> PyResult<Matrix> {
        let file = with_semiring!(self.same_semiring(other)?, S => {
            let (a, b) = (self.file.decode::<S>().map_err(py_err)?, other.file.decode::<S>().map_err(py_err)?);
            MatrixFile::encode(&mat_mul(&a, &b, &mut OpCounter::new()).map_err(py_err)?)
        });
        Ok(Matrix { file })
    }

    fn __eq__(&self, other: &Matrix) -> bool {
        self.file == other.file
    }

    fn __repr__(&self) -> String {
        format!("Matrix({:?}, {:?})", self.file.semiring, self.to_rows())
    }
}

/// A weighted automaton, with or without ε̃-transitions.
#[pyclass(module = "semistar_py", frozen)]
struct Automaton {
    file: AutomatonFile,
}

impl Automaton {
    fn canonical(file: AutomatonFile) -> PyResult<Self> {
        let file = with_semiring!(file.kind().map_err(py_err)?, S => {
            match file.decode::<S>().map_err(py_err)? {
                Decoded::Plain(a) => AutomatonFile::encode_linear(&a),
                Decoded::Epsilon(ae) => AutomatonFile::encode_epsilon(&ae),
            }
        });
        Ok(Automaton { file })
    }
}

#[pymethods]
impl Automaton {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Automaton::canonical(AutomatonFile::from_json(text).map_err(py_err)?)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Automaton::canonical(AutomatonFile::read(path).map_err(py_err)?)
    }

    fn to_json(&self) -> String {
        self.file.to_json()
    }

    fn save(&self, path: &str) -> PyResult<()> {
        self.file.write(path).map_err(py_err)
    }

    #[getter]
    fn semiring(&self) -> &str {
        &self.file.semiring
    }

    #[getter]
    fn alphabet(&self) -> Vec<String> {
        self.file.alphabet.clone()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.file.dim
    }

    #[getter]
    fn has_epsilon(&self) -> bool {
        self.file.has_epsilon()
    }

    /// Weight of a word; "@" is ε̃ and "" the empty word.
    fn weight(&self, word: &str) -> PyResult<String> {
        with_semiring!(kind(&self.file.semiring)?, S => {
            let value = match self.file.decode::<S>().map_err(py_err)? {
                Decoded::Plain(a) => Word::parse(word, a.alphabet()).and_then(|u| a.weight(&u)),
                Decoded::Epsilon(ae) => Word::parse(word, ae.alphabet()).and_then(|u| ae.weight(&u)),
            };
            Ok(value.map_err(py_err)?.encode())
        })
    }

    /// Nonzero coefficients of the behaviour on words up to `max_len`.
    fn behaviour(&self, max_len: usize) -> PyResult<BTreeMap<String, String>> {
        with_semiring!(kind(&self.file.semiring)?, S => {
            let p = match self.file.decode::<S>().map_err(py_err)? {
                Decoded::Plain(a) => a.behaviour_truncated(max_len),
                Decoded::Epsilon(ae) => ae.behaviour_truncated(max_len),
            };
            Ok(p.terms().map(|(w, c)| (w.literal(), c.encode())).collect())
        })
    }

    /// Equivalent ε-free automaton. Raises `StarUndefined` when the
    /// ε̃-closure does not exist.
    #[pyo3(signature = (variant="left"))]
    fn eliminate(&self, variant: &str) -> PyResult<Automaton> {
        let variant = parse_variant(variant)?;
        let file = with_semiring!(kind(&self.file.semiring)?, S => {
            let ae = self.file.decode_epsilon::<S>().map_err(py_err)?;
            AutomatonFile::encode_linear(&ae.eliminate(variant, &mut OpCounter::new()).map_err(py_err)?)
        });
        Ok(Automaton { file })
    }

    /// Compare this ε-free automaton with Φ of `other` on every word up to
    /// `max_len`. Returns `(verdict, rows)`; the verdict is `None` when the
    /// oracle only has partial sums.
    #[pyo3(signature = (other, max_len=3, eps_bound=4))]
    fn check<'py>(
        &self,
        py: Python<'py>,
        other: &Automaton,
        max_len: usize,
        eps_bound: usize,
    ) -> PyResult<(Option<bool>, Bound<'py, PyList>)> {
        if self.file.has_epsilon() {
            return Err(PyValueError::new_err("check must be called on an ε-free automaton"));
        }
        if self.file.semiring != other.file.semiring {
            return Err(PyValueError::new_err("semirings differ"));
        }
        let rows = PyList::empty(py);
        let verdict = with_semiring!(kind(&self.file.semiring)?, S => {
            let a = self.file.decode_base::<S>().map_err(py_err)?;
            let ae: EpsilonAutomaton<S> = match other.file.decode::<S>().map_err(py_err)? {
                Decoded::Plain(b) => b.into(),
                Decoded::Epsilon(ae) => ae,
            };
            let report = check_equivalence(&a, &ae, max_len, eps_bound).map_err(py_err)?;
            for row in &report.rows {
                let d = PyDict::new(py);
                d.set_item("word", row.word.literal())?;
                d.set_item("weight", row.weight.encode())?;
                d.set_item("oracle", row.oracle.encode())?;
                d.set_item("gap", row.gap.as_ref().map(|g| g.encode()))?;
                d.set_item("agrees", row.agrees())?;
                rows.append(d)?;
            }
            report.verdict()
        });
        Ok((verdict, rows))
    }

    fn __eq__(&self, other: &Automaton) -> bool {
        self.file == other.file
    }

    fn __repr__(&self) -> String {
        format!(
            "Automaton(semiring={:?}, alphabet={:?}, dim={}, epsilon={})",
            self.file.semiring,
            self.file.alphabet,
            self.file.dim,
            self.file.has_epsilon()
        )
    }
}

#[pymodule]
pub fn semistar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("StarUndefined", m.py().get_type::<StarUndefined>())?;
    m.add_class::<Matrix>()?;
    m.add_class::<Automaton>()?;
    m.add_function(wrap_pyfunction!(add, m)?)?;
    m.add_function(wrap_pyfunction!(mul, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(bench_records, m)?)?;
    Ok(())
}
