//! Python bindings for `plane_decomp`.

use std::collections::BTreeSet;

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use plane_decomp::decompose::{self, CaseBContext, DecomposeError, PrescribedSet};
use plane_decomp::io as pio;
use plane_decomp::plane_graph::{EdgeId, VertexId};
use plane_decomp::{classes, generators, verify};

create_exception!(plane_decomp_py, PreconditionError, PyException);
create_exception!(plane_decomp_py, InternalAssertionError, PyException);

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn decompose_err(e: DecomposeError) -> PyErr {
    match e {
        DecomposeError::InternalAssertion { .. } => InternalAssertionError::new_err(e.to_string()),
        _ => PreconditionError::new_err(e.to_string()),
    }
}

/// Converts a serializable value into plain Python objects via JSON.
fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn edge_set(edges: &[u32]) -> BTreeSet<EdgeId> {
    edges.iter().map(|&e| EdgeId(e)).collect()
}

fn ids(set: &BTreeSet<EdgeId>) -> Vec<u32> {
    set.iter().map(|e| e.0).collect()
}

/// A connected plane multigraph given by clockwise rotations.
#[pyclass(name = "PlaneGraph", module = "plane_decomp_py", skip_from_py_object)]
#[derive(Clone)]
struct PyPlaneGraph {
    inner: plane_decomp::PlaneGraph,
}

#[pymethods]
impl PyPlaneGraph {
    /// Parses rotation-system text or graph6, guessing the format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyPlaneGraph { inner: pio::parse_graph(text, None).map_err(value_err)? })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyPlaneGraph { inner: pio::parse_graph(text, Some(pio::Format::Graph6)).map_err(value_err)? })
    }

    /// A named generator, as accepted by `plane-decomp gen`.
    #[staticmethod]
    #[pyo3(signature = (name, params = "", seed = 0))]
    fn generate(name: &str, params: &str, seed: u64) -> PyResult<Self> {
        Ok(PyPlaneGraph { inner: generators::by_name(name, params, seed).map_err(value_err)? })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// `(edge, u, v)` triples.
    fn edges(&self) -> Vec<(u32, u32, u32)> {
        self.inner.edges().map(|(e, [u, v])| (e.0, u.0, v.0)).collect()
    }

    /// Edge ids around `v` in clockwise order.
    fn rotation(&self, v: u32) -> PyResult<Vec<u32>> {
        if !self.inner.has_vertex(VertexId(v)) {
            return Err(value_err(format!("unknown vertex {v}")));
        }
        Ok(self.inner.rotation(VertexId(v)).iter().map(|e| e.0).collect())
    }

    /// Each face as the list of edges along its walk.
    fn faces(&self) -> Vec<Vec<u32>> {
        self.inner.faces().iter().map(|f| f.boundary.iter().map(|d| d.edge.0).collect()).collect()
    }

    fn outer_face(&self) -> Vec<u32> {
        self.inner.outer_face().boundary.iter().map(|d| d.edge.0).collect()
    }

    fn with_outer_face(&self, face: usize) -> PyResult<Self> {
        Ok(PyPlaneGraph { inner: self.inner.set_outer_face(face).map_err(value_err)?.detached() })
    }

    fn to_rot(&self) -> String {
        pio::emit_rot(&self.inner)
    }

    fn to_graph6(&self) -> String {
        pio::encode_graph6(&self.inner)
    }

    /// Class membership report as a dict.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &classes::classify(&self.inner))
    }

    fn is_sep(&self) -> bool {
        classes::is_sep(&self.inner)
    }

    fn two_decompose(&self, py: Python<'_>) -> PyResult<TwoDecomposition> {
        let g = self.inner.clone();
        let d = py.detach(move || decompose::two_decompose(&g)).map_err(decompose_err)?;
        Ok(d.into())
    }

    /// A decomposition whose forest contains `edge`.
    fn e_two_decompose(&self, py: Python<'_>, edge: u32) -> PyResult<TwoDecomposition> {
        let g = self.inner.clone();
        let d = py.detach(move || decompose::e_two_decompose(&g, EdgeId(edge))).map_err(decompose_err)?;
        Ok(d.into())
    }

    /// A decomposition whose forest contains the prescribed outer edges.
    #[pyo3(signature = (prescribed, ctx = None))]
    fn b_two_decompose(&self, py: Python<'_>, prescribed: Vec<u32>, ctx: Option<(u32, u32)>) -> PyResult<TwoDecomposition> {
        let g = self.inner.clone();
        let b = PrescribedSet::new(edge_set(&prescribed));
        let ctx = ctx.map(|(v, w)| CaseBContext { v: VertexId(v), w: VertexId(w) });
        let d = py.detach(move || decompose::b_two_decompose(&g, &b, ctx)).map_err(decompose_err)?;
        Ok(d.into())
    }

    fn three_decompose(&self, py: Python<'_>) -> PyResult<ThreeDecomposition> {
        let g = self.inner.clone();
        let d = py.detach(move || decompose::three_decompose(&g)).map_err(decompose_err)?;
        Ok(d.into())
    }

    /// Validity report of a two-decomposition as a dict.
    #[pyo3(signature = (d, prescribed = None))]
    fn check_2d<'py>(&self, py: Python<'py>, d: &TwoDecomposition, prescribed: Option<Vec<u32>>) -> PyResult<Bound<'py, PyAny>> {
        let b = prescribed.map(|p| edge_set(&p));
        to_py(py, &verify::check_2d(&self.inner, &d.to_core(), b.as_ref()))
    }

    fn check_3d<'py>(&self, py: Python<'py>, d: &ThreeDecomposition) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &verify::check_3d(&self.inner, &d.to_core()))
    }

    /// Exhaustive search for a decomposition with `prescribed` in the
    /// forest; `None` when there is none.
    fn oracle_b2d(&self, prescribed: Vec<u32>) -> PyResult<Option<TwoDecomposition>> {
        let d = verify::oracle_b2d(&self.inner, &edge_set(&prescribed)).map_err(value_err)?;
        Ok(d.map(Into::into))
    }

    fn __repr__(&self) -> String {
        format!("PlaneGraph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

#[pyclass(module = "plane_decomp_py", get_all, skip_from_py_object)]
#[derive(Clone)]
struct TwoDecomposition {
    forest: Vec<u32>,
    matching: Vec<u32>,
}

impl From<decompose::TwoDecomposition> for TwoDecomposition {
    fn from(d: decompose::TwoDecomposition) -> Self {
        TwoDecomposition { forest: ids(&d.forest), matching: ids(&d.matching) }
    }
}

impl TwoDecomposition {
    fn to_core(&self) -> decompose::TwoDecomposition {
        decompose::TwoDecomposition { forest: edge_set(&self.forest), matching: edge_set(&self.matching) }
    }
}

#[pymethods]
impl TwoDecomposition {
    #[new]
    fn new(forest: Vec<u32>, matching: Vec<u32>) -> Self {
        TwoDecomposition { forest, matching }
    }

    fn __repr__(&self) -> String {
        format!("TwoDecomposition(forest={:?}, matching={:?})", self.forest, self.matching)
    }
}

#[pyclass(module = "plane_decomp_py", get_all, skip_from_py_object)]
#[derive(Clone)]
struct ThreeDecomposition {
    tree: Vec<u32>,
    two_regular: Vec<u32>,
    matching: Vec<u32>,
}

impl From<decompose::ThreeDecomposition> for ThreeDecomposition {
    fn from(d: decompose::ThreeDecomposition) -> Self {
        ThreeDecomposition { tree: ids(&d.tree), two_regular: ids(&d.two_regular), matching: ids(&d.matching) }
    }
}

impl ThreeDecomposition {
    fn to_core(&self) -> decompose::ThreeDecomposition {
        decompose::ThreeDecomposition {
            tree: edge_set(&self.tree),
            two_regular: edge_set(&self.two_regular),
            matching: edge_set(&self.matching),
        }
    }
}

#[pymethods]
impl ThreeDecomposition {
    #[new]
    fn new(tree: Vec<u32>, two_regular: Vec<u32>, matching: Vec<u32>) -> Self {
        ThreeDecomposition { tree, two_regular, matching }
    }

    fn __repr__(&self) -> String {
        format!(
            "ThreeDecomposition(tree={:?}, two_regular={:?}, matching={:?})",
            self.tree, self.two_regular, self.matching
        )
    }
}

#[pymodule]
fn plane_decomp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPlaneGraph>()?;
    m.add_class::<TwoDecomposition>()?;
    m.add_class::<ThreeDecomposition>()?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add("InternalAssertionError", m.py().get_type::<InternalAssertionError>())?;
    Ok(())
}
