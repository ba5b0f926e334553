//! Python bindings. Weights are given as strings like `"3/2,1/2"` or as
//! sequences of ints and strings; groups and pairs use the CLI syntax
//! (`"C2"`, `"B2:D2"`).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyString};

use weylbranch as wb;
use weylbranch::{BranchingPair, DominantWeight, GroupFamily, PairKind, PieriInput};

fn err(e: wb::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn group(s: &str) -> PyResult<GroupFamily> {
    s.parse().map_err(err)
}

fn pair(s: &str) -> PyResult<BranchingPair> {
    s.parse().map_err(err)
}

fn weight(g: GroupFamily, w: &Bound<'_, PyAny>) -> PyResult<DominantWeight> {
    let text = if let Ok(s) = w.cast::<PyString>() {
        s.to_str()?.to_owned()
    } else {
        let parts: PyResult<Vec<String>> =
            w.try_iter()?.map(|x| Ok(x?.str()?.to_string())).collect();
        parts?.join(",")
    };
    DominantWeight::parse(g, &text).map_err(err)
}

fn strings(w: &DominantWeight) -> Vec<String> {
    w.entries().to_strings()
}

/// Laurent polynomial with integer coefficients in ½-integral powers.
#[pyclass(
    name = "LaurentPoly",
    module = "weylbranch",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyLaurent(wb::LaurentPoly);

#[pymethods]
impl PyLaurent {
    #[staticmethod]
    fn var(nvars: usize, i: usize) -> PyResult<Self> {
        if i >= nvars {
            return Err(err(wb::Error::IndexOutOfRange { index: i, nvars }));
        }
        Ok(PyLaurent(wb::LaurentPoly::var(nvars, i)))
    }

    #[staticmethod]
    fn constant(nvars: usize, c: i64) -> Self {
        PyLaurent(wb::LaurentPoly::constant(nvars, c))
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    fn __len__(&self) -> usize {
        self.0.num_terms()
    }

    /// `[(exponents, coefficient)]`, decreasing lex order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Vec<String>, Bound<'py, PyAny>)>> {
        self.0
            .terms()
            .rev()
            .map(|(e, c)| Ok((e.to_strings(), c.clone().into_pyobject(py)?.into_any())))
            .collect()
    }

    fn dimension(&self) -> PyResult<i64> {
        wb::oracle::dimension(&self.0).map_err(err)
    }

    fn div_exact(&self, other: &Self) -> PyResult<Self> {
        self.0.div_exact(&other.0).map(PyLaurent).map_err(err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(PyLaurent).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_sub(&other.0).map(PyLaurent).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(PyLaurent).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly({})", self.0)
    }
}

/// Virtual `Sp(2)` character `Σ m_k S^(k)`.
#[pyclass(
    name = "SL2Module",
    module = "weylbranch",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PySl2(wb::SL2Module);

#[pymethods]
impl PySl2 {
    /// From a `{k: multiplicity}` dict.
    #[new]
    #[pyo3(signature = (mults = None))]
    fn new(mults: Option<&Bound<'_, PyDict>>) -> PyResult<Self> {
        let mut pairs = Vec::new();
        if let Some(d) = mults {
            for (k, m) in d.iter() {
                pairs.push((k.extract::<u32>()?, m.extract::<i64>()?));
            }
        }
        Ok(PySl2(wb::SL2Module::from_pairs(pairs)))
    }

    #[staticmethod]
    fn irrep(k: u32) -> Self {
        PySl2(wb::SL2Module::irrep(i64::from(k)))
    }

    fn mults(&self) -> Vec<(u32, i64)> {
        self.0.iter().collect()
    }

    fn dim(&self) -> i64 {
        self.0.dim()
    }

    fn char_poly(&self) -> PyLaurent {
        PyLaurent(self.0.char_poly())
    }

    #[staticmethod]
    fn decompose(p: &PyLaurent) -> PyResult<Self> {
        wb::SL2Module::decompose(&p.0).map(PySl2).map_err(err)
    }

    fn __add__(&self, other: &Self) -> Self {
        PySl2(self.0.add(&other.0))
    }

    fn __sub__(&self, other: &Self) -> Self {
        PySl2(self.0.sub(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        PySl2(self.0.mul(&other.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SL2Module({})", self.0)
    }
}

fn mult_obj<'py>(py: Python<'py>, m: &wb::Multiplicity) -> PyResult<Bound<'py, PyAny>> {
    Ok(match m {
        wb::Multiplicity::Int(c) => c.into_pyobject(py)?.into_any(),
        wb::Multiplicity::Sl2(s) => Bound::new(py, PySl2(s.clone()))?.into_any(),
    })
}

#[pyfunction]
fn character(g: &str, w: &Bound<'_, PyAny>) -> PyResult<PyLaurent> {
    let w = weight(group(g)?, w)?;
    wb::character(&w).map(PyLaurent).map_err(err)
}

#[pyfunction]
fn weyl_denominator(g: &str) -> PyResult<PyLaurent> {
    Ok(PyLaurent(wb::weyl_denominator_product(group(g)?)))
}

/// `[(weight, multiplicity)]` in decreasing order; multiplicities are ints,
/// or `SL2Module`s for symplectic pairs.
#[pyfunction]
fn branch<'py>(
    py: Python<'py>,
    p: &str,
    w: &Bound<'py, PyAny>,
) -> PyResult<Vec<(Vec<String>, Bound<'py, PyAny>)>> {
    let p = pair(p)?;
    let t = wb::branch(&weight(p.big_group(), w)?, p).map_err(err)?;
    t.iter()
        .map(|(mu, m)| Ok((strings(mu), mult_obj(py, m)?)))
        .collect()
}

fn pieri_input(p: BranchingPair, w: &Bound<'_, PyAny>, k: u32) -> PyResult<PieriInput> {
    let w = weight(p.small_group(), w)?;
    match p.kind() {
        PairKind::GlToGl => Ok(PieriInput::Gl(w)),
        PairKind::BToD => Ok(PieriInput::Spin(w)),
        PairKind::CToC1xC => Ok(PieriInput::Sp(k, w)),
        PairKind::DToB => Err(PyValueError::new_err(format!("no Pieri rule for {p}"))),
    }
}

type PieriTerm<'py> = (i8, Bound<'py, PyAny>, Vec<String>);

/// `[(sign, grade, weight)]` where grade is `None`, a power of `t`, or an
/// `SL2Module`.
#[pyfunction]
#[pyo3(signature = (p, w, k = 0, straightened = false))]
fn rel_pieri<'py>(
    py: Python<'py>,
    p: &str,
    w: &Bound<'py, PyAny>,
    k: u32,
    straightened: bool,
) -> PyResult<Vec<PieriTerm<'py>>> {
    let sum = match pieri_input(pair(p)?, w, k)? {
        PieriInput::Gl(w) => wb::rel_pieri_gl(&w),
        PieriInput::Spin(w) => wb::rel_pieri_spin(&w),
        PieriInput::Sp(k, w) if straightened => wb::rel_pieri_sp_straightened(k, &w),
        PieriInput::Sp(k, w) => wb::rel_pieri_sp(k, &w),
    }
    .map_err(err)?;
    sum.terms
        .iter()
        .map(|t| {
            let g = match &t.grade {
                wb::Grade::Unit => py.None().into_bound(py),
                wb::Grade::TPow(r) => r.into_pyobject(py)?.into_any(),
                wb::Grade::Sl2(m) => Bound::new(py, PySl2(m.clone()))?.into_any(),
            };
            Ok((t.sign, g, strings(&t.weight)))
        })
        .collect()
}

#[pyfunction]
fn verify_branching(p: &str, w: &Bound<'_, PyAny>) -> PyResult<bool> {
    let p = pair(p)?;
    wb::verify_branching(&weight(p.big_group(), w)?, p).map_err(err)
}

#[pyfunction]
fn verify_rel_weyl(g: &str, w: &Bound<'_, PyAny>) -> PyResult<bool> {
    wb::verify_rel_weyl(&weight(group(g)?, w)?).map_err(err)
}

/// Compares the (unstraightened) relative Pieri expansion with the brute-force product.
#[pyfunction]
#[pyo3(signature = (p, w, k = 0))]
fn verify_pieri(p: &str, w: &Bound<'_, PyAny>, k: u32) -> PyResult<bool> {
    wb::verify_pieri(&pieri_input(pair(p)?, w, k)?).map_err(err)
}

#[pyfunction]
fn shift_count(g: &str, w: &Bound<'_, PyAny>, nu: Vec<i64>, k: usize) -> PyResult<i64> {
    wb::shift_count(&weight(group(g)?, w)?, &nu, k).map_err(err)
}

#[pymodule]
#[pyo3(name = "weylbranch")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurent>()?;
    m.add_class::<PySl2>()?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_denominator, m)?)?;
    m.add_function(wrap_pyfunction!(branch, m)?)?;
    m.add_function(wrap_pyfunction!(rel_pieri, m)?)?;
    m.add_function(wrap_pyfunction!(verify_branching, m)?)?;
    m.add_function(wrap_pyfunction!(verify_rel_weyl, m)?)?;
    m.add_function(wrap_pyfunction!(verify_pieri, m)?)?;
    m.add_function(wrap_pyfunction!(shift_count, m)?)?;
    Ok(())
}
