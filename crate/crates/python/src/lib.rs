//! Python bindings. Subcubes and configurations cross the boundary as
//! strings in the `x1 x2 ... xn` layout, e.g. `"1*0"`.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use trapspaces::generators::{
    long_transient_trapping, random_commutative, random_constant, random_negation, random_network,
};
use trapspaces::netio::{
    export_dot, parse_expression_network, parse_truth_table, write_truth_table, NetworkDocument,
};
use trapspaces::verify::{exhaustive_population, run_suites, sampled_population, Suite};
use trapspaces::{
    build_graph, classify_network, enumerate_trapspaces, min_trapping_extension,
    min_trapspace_equivalent, minimal_trapspaces, principal_trapspace, trapping_closure,
    trapping_graph, trapspace_equivalent, transient_and_period, BooleanNetwork, Configuration,
    Error, GraphKind,
};

fn err(e: Error) -> PyErr {
    match e {
        Error::PeriodOverflow => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn config(n: usize, s: &str) -> PyResult<Configuration> {
    let x: Configuration = s.parse().map_err(err)?;
    if x.dimension() != n {
        return Err(PyValueError::new_err(format!("`{s}` has width {}, expected {n}", x.dimension())));
    }
    Ok(x)
}

/// A Boolean network `B^n -> B^n` held as an explicit image table.
#[pyclass(name = "Network", module = "trapspaces_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyNetwork {
    inner: BooleanNetwork,
}

impl From<BooleanNetwork> for PyNetwork {
    fn from(inner: BooleanNetwork) -> Self {
        PyNetwork { inner }
    }
}

#[pymethods]
impl PyNetwork {
    /// `table[x]` is the image of the configuration whose bit `i - 1` holds `x_i`.
    #[new]
    fn new(n: usize, table: Vec<u32>) -> PyResult<Self> {
        Ok(BooleanNetwork::from_table(n, table).map_err(err)?.into())
    }

    #[staticmethod]
    fn from_truth_table(text: &str) -> PyResult<Self> {
        Ok(parse_truth_table(text).map_err(err)?.network.into())
    }

    #[staticmethod]
    fn from_expressions(text: &str) -> PyResult<Self> {
        Ok(parse_expression_network(text).map_err(err)?.network.into())
    }

    #[staticmethod]
    fn fixture(label: &str) -> PyResult<Self> {
        Ok(trapspaces::fixtures::named(label).map_err(err)?.into())
    }

    #[staticmethod]
    #[pyo3(signature = (kind, n, seed = 0, parts = 2))]
    fn generate(kind: &str, n: usize, seed: u64, parts: usize) -> PyResult<Self> {
        let f = match kind {
            "random" => random_network(n, seed),
            "commutative" => random_commutative(n, seed, parts),
            "negation" => random_negation(n, seed, parts),
            "constant" => random_constant(n, seed, parts),
            "long-transient" => long_transient_trapping(n),
            other => return Err(PyValueError::new_err(format!("unknown generator `{other}`"))),
        };
        Ok(f.map_err(err)?.into())
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn table(&self) -> Vec<u32> {
        self.inner.table().to_vec()
    }

    fn apply(&self, x: &str) -> PyResult<String> {
        let x = config(self.inner.dimension(), x)?;
        Ok(self.inner.apply(x).map_err(err)?.to_string())
    }

    fn to_truth_table(&self) -> String {
        write_truth_table(&NetworkDocument::new(self.inner.clone()))
    }

    fn principal_trapspace(&self, x: &str) -> PyResult<String> {
        let x = config(self.inner.dimension(), x)?;
        Ok(principal_trapspace(&self.inner, x).map_err(err)?.to_string())
    }

    fn trapspaces(&self) -> PyResult<Vec<String>> {
        let all = enumerate_trapspaces(&self.inner).map_err(err)?;
        Ok(all.iter().map(|t| t.to_string()).collect())
    }

    fn minimal_trapspaces(&self) -> Vec<String> {
        minimal_trapspaces(&self.inner).0.iter().map(|t| t.to_string()).collect()
    }

    fn trapping_closure(&self) -> Self {
        trapping_closure(&self.inner).into()
    }

    fn min_trapping_extension(&self) -> Self {
        min_trapping_extension(&self.inner).into()
    }

    /// `f ⊑ g` in the interval order.
    fn order_leq(&self, other: &PyNetwork) -> PyResult<bool> {
        self.inner.order_leq(&other.inner).map_err(err)
    }

    fn transient_and_period(&self) -> PyResult<(usize, u128)> {
        transient_and_period(&self.inner).map_err(err)
    }

    /// Class flags as a `dict[str, bool]`.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = classify_network(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        for (k, v) in report.entries() {
            d.set_item(k, v)?;
        }
        Ok(d)
    }

    /// DOT text for `kind` in `async`, `ga`, `tg`; `layered` stacks the
    /// smaller graphs underneath.
    #[pyo3(signature = (kind = "async", layered = false))]
    fn dot(&self, kind: &str, layered: bool) -> PyResult<String> {
        let order = ["async", "ga", "tg"];
        let top = order
            .iter()
            .position(|k| *k == kind)
            .ok_or_else(|| PyValueError::new_err(format!("unknown graph kind `{kind}`")))?;
        let kinds = if layered { &order[..=top] } else { &order[top..=top] };
        let layers = kinds
            .iter()
            .map(|k| match *k {
                "async" => build_graph(&self.inner, GraphKind::Asynchronous),
                "ga" => build_graph(&self.inner, GraphKind::General),
                _ => trapping_graph(&self.inner),
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        export_dot(&layers, kinds).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Network(n={}, table={:?})", self.inner.dimension(), self.inner.table())
    }
}

/// The five trapspace-equivalence conditions for `f` and `g`.
#[pyfunction]
fn trapspace_equivalence(f: &PyNetwork, g: &PyNetwork) -> PyResult<Vec<bool>> {
    trapspace_equivalent(&f.inner, &g.inner).map_err(err)
}

/// The four minimal-trapspace equivalence conditions for `f` and `g`.
#[pyfunction]
fn min_trapspace_equivalence(f: &PyNetwork, g: &PyNetwork) -> PyResult<Vec<bool>> {
    min_trapspace_equivalent(&f.inner, &g.inner).map_err(err)
}

/// A failed check and the table of the network it failed on.
type Finding = (String, Vec<u32>);

/// Runs the verification suites; `samples = None` means the exhaustive
/// population. Returns `(networks, checks, findings)` with each finding as
/// `(check, table)`.
#[pyfunction]
#[pyo3(signature = (n, samples = None, seed = 0, suite = "all"))]
fn verify(
    py: Python<'_>,
    n: usize,
    samples: Option<usize>,
    seed: u64,
    suite: &str,
) -> PyResult<(usize, usize, Vec<Finding>)> {
    let suites = Suite::parse_list(suite).map_err(err)?;
    let report = py
        .detach(|| {
            let population = match samples {
                None => exhaustive_population(n)?,
                Some(m) => sampled_population(n, m, seed)?,
            };
            run_suites(&population, &suites)
        })
        .map_err(err)?;
    let findings = report
        .findings
        .iter()
        .map(|f| (f.to_string(), f.network.clone()))
        .collect();
    Ok((report.networks, report.checks, findings))
}

#[pymodule]
fn trapspaces_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyNetwork>()?;
    m.add_function(wrap_pyfunction!(trapspace_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(min_trapspace_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
