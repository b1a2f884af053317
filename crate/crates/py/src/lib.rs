//! Python bindings.
//!
//! Vertices and permutation points are 0-indexed; cycle strings are
//! 1-indexed, as in the Rust API. Structured results come back as plain
//! dicts and lists.

use doublestar::action::{NamedGroup, VertexAction};
use doublestar::construct::{self, DoubleStarGraph};
use doublestar::graph::catalog::{catalog, CatalogName, DEFAULT_VERTEX_CAP};
use doublestar::graph::io::{from_graph6, to_dot, to_graph6};
use doublestar::graph::{are_isomorphic, Graph, DEFAULT_ISO_CAP};
use doublestar::instance::{self, InstanceSpec};
use doublestar::perm::{PermGroup, Permutation, DEFAULT_GROUP_CAP};
use doublestar::quotient::{self, SeriesOptions};
use doublestar::stars::{self, Star, StarParams};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Permutation", module = "doublestar", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(Permutation);

#[pymethods]
impl PyPermutation {
    /// Parses cycle notation such as `"(1 2 3)(4 5)"` on `degree` points.
    #[new]
    fn new(cycles: &str, degree: usize) -> PyResult<Self> {
        Permutation::parse(cycles, degree).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_images(images: Vec<usize>) -> PyResult<Self> {
        Permutation::from_images(images).map(Self).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn images(&self) -> Vec<usize> {
        (0..self.0.degree()).map(|p| self.0.apply(p)).collect()
    }

    fn apply(&self, point: usize) -> PyResult<usize> {
        if point >= self.0.degree() {
            return Err(err(format!("point {point} out of range")));
        }
        Ok(self.0.apply(point))
    }

    /// `self` first, then `other`.
    fn then(&self, other: &PyPermutation) -> Self {
        Self(self.0.then(&other.0))
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn __mul__(&self, other: &PyPermutation) -> Self {
        self.then(other)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}', {})", self.0, self.0.degree())
    }
}

#[pyclass(name = "Group", module = "doublestar", frozen)]
struct PyGroup(PermGroup);

#[pymethods]
impl PyGroup {
    /// Closure of `generators` (cycle strings) on `degree` points.
    #[new]
    #[pyo3(signature = (degree, generators, cap = DEFAULT_GROUP_CAP))]
    fn new(degree: usize, generators: Vec<String>, cap: usize) -> PyResult<Self> {
        let gens = generators
            .iter()
            .map(|g| Permutation::parse(g, degree))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        PermGroup::closure(degree, gens, cap).map(Self).map_err(err)
    }

    /// `"alternating 5"`, `"symmetric 4"`, `"wreath 3"`, `"dihedral 6"`, ...
    #[staticmethod]
    #[pyo3(signature = (name, cap = DEFAULT_GROUP_CAP))]
    fn named(name: &str, cap: usize) -> PyResult<Self> {
        let g: NamedGroup = name.parse().map_err(err)?;
        g.closure(cap).map(Self).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __contains__(&self, p: &PyPermutation) -> bool {
        self.0.contains(&p.0)
    }

    fn elements(&self) -> Vec<PyPermutation> {
        self.0.elements().iter().cloned().map(PyPermutation).collect()
    }

    fn orbit_of_point(&self, point: usize) -> PyResult<Vec<usize>> {
        let mut o = self.0.orbit(&point).map_err(err)?;
        o.sort_unstable();
        Ok(o)
    }

    fn point_stabilizer(&self, point: usize) -> PyResult<PyGroup> {
        self.0.stabilizer(&point).map(PyGroup).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Group(degree={}, order={})", self.0.degree(), self.0.order())
    }
}

#[pyclass(name = "Graph", module = "doublestar", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (vertices, edges, labels = None))]
    fn new(vertices: usize, edges: Vec<(usize, usize)>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let g = Graph::from_edges(vertices, &edges).map_err(err)?;
        let g = match labels {
            Some(l) => g.with_labels(l).map_err(err)?,
            None => g,
        };
        Ok(Self(g))
    }

    /// `"complete 5"`, `"complete-bipartite 3"`, `"cycle 6"`, `"odd 3"`.
    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        let name: CatalogName = name.parse().map_err(err)?;
        Ok(Self(catalog(name, DEFAULT_VERTEX_CAP).map_err(err)?.graph))
    }

    /// The group the catalog pairs with `name`, on points.
    #[staticmethod]
    #[pyo3(signature = (name, cap = DEFAULT_GROUP_CAP))]
    fn catalog_group(name: &str, cap: usize) -> PyResult<PyGroup> {
        let name: CatalogName = name.parse().map_err(err)?;
        let entry = catalog(name, DEFAULT_VERTEX_CAP).map_err(err)?;
        entry.group.closure(cap).map(PyGroup).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        from_graph6(text.trim()).map(Self).map_err(err)
    }

    fn to_graph6(&self) -> String {
        to_graph6(&self.0)
    }

    #[pyo3(signature = (name = "G"))]
    fn to_dot(&self, name: &str) -> String {
        to_dot(&self.0, name)
    }

    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.vertex_count() {
            return Err(err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn labels(&self) -> Vec<String> {
        (0..self.0.vertex_count()).map(|v| self.0.label(v)).collect()
    }

    fn valency(&self) -> Option<usize> {
        self.0.valency()
    }

    fn girth(&self) -> Option<usize> {
        self.0.girth()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_bipartite(&self) -> bool {
        self.0.is_bipartite()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.0.components().components
    }

    fn bipartite_double_cover(&self) -> Self {
        Self(self.0.bipartite_double_cover())
    }

    /// A verified isomorphism `self → other` as a vertex list, or None.
    #[pyo3(signature = (other, cap = DEFAULT_ISO_CAP))]
    fn isomorphism(&self, other: &PyGraph, cap: usize) -> PyResult<Option<Vec<usize>>> {
        let iso = are_isomorphic(&self.0, &other.0, cap).map_err(err)?;
        Ok(iso.filter(|w| w.verify(&self.0, &other.0)).map(|w| w.mapping))
    }

    fn __repr__(&self) -> String {
        format!("Graph(vertices={}, edges={})", self.0.vertex_count(), self.0.edge_count())
    }
}

#[pyclass(name = "DoubleStarGraph", module = "doublestar", frozen)]
struct PyDoubleStarGraph(DoubleStarGraph);

#[pymethods]
impl PyDoubleStarGraph {
    /// Π(Σ, Θ) with Θ the orbit of `(S, T)`. Stars are lists of arcs given
    /// by vertex labels, `group` acts on the points behind the labels.
    #[new]
    fn new(graph: &PyGraph, group: &PyGroup, r: usize, s: Vec<Vec<String>>, t: Vec<Vec<String>>) -> PyResult<Self> {
        let g = &graph.0;
        let action = VertexAction::new(g, group.0.clone()).map_err(err)?;
        let s = Star::from_labels(g, r, &s).map_err(err)?;
        let t = Star::from_labels(g, r, &t).map_err(err)?;
        let theta = stars::theta_orbit(g, action.vertices(), &s, &t).map_err(err)?;
        construct::double_star_graph(g, &theta).map(Self).map_err(err)
    }

    fn graph(&self) -> PyGraph {
        PyGraph(self.0.graph().clone())
    }

    fn base(&self) -> PyGraph {
        PyGraph(self.0.base().clone())
    }

    fn theta_size(&self) -> usize {
        self.0.theta().len()
    }

    fn self_paired(&self) -> bool {
        self.0.theta().self_paired()
    }

    fn is_x_symmetric(&self) -> bool {
        self.0.theta().is_x_symmetric()
    }

    fn level(&self) -> usize {
        self.0.theta().level()
    }

    fn pairing_witness(&self) -> Option<PyPermutation> {
        self.0.theta().pairing_witness().cloned().map(PyPermutation)
    }

    /// Stars of Π in vertex order, as strings over vertex labels.
    fn stars(&self) -> Vec<String> {
        let base = self.0.base();
        self.0.stars().iter().map(|s| s.display(base).to_string()).collect()
    }

    fn center_partition(&self) -> Vec<Vec<usize>> {
        self.0.center_partition().blocks().to_vec()
    }

    /// `{v, k, r, b, d, c}` for the center partition.
    fn params<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let p = quotient::params(self.0.graph(), self.0.action(), self.0.center_partition()).map_err(err)?;
        json_to_py(py, &p)
    }

    /// The refinement series from the center partition: levels, m, h, bound
    /// and checks.
    fn refinement_series<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let s = quotient::refinement_series(
            self.0.graph(),
            self.0.action(),
            self.0.center_partition(),
            SeriesOptions::default(),
        )
        .map_err(err)?;
        let levels: Vec<_> = s.levels.iter().map(|l| l.params).collect();
        let value = serde_json::json!({
            "levels": levels,
            "m": s.m,
            "h": s.h,
            "bound": s.bound,
            "terminal": s.terminal,
            "checks": s.checks,
        });
        json_to_py(py, &value)
    }

    /// Verified isomorphism with Cos(X, X_S, X_S z X_S), or None.
    fn coset_isomorphism(&self) -> PyResult<Option<Vec<usize>>> {
        let iso = construct::coset_oracle(&self.0, DEFAULT_ISO_CAP).map_err(err)?;
        Ok(iso.map(|w| w.mapping))
    }

    fn __repr__(&self) -> String {
        let g = self.0.graph();
        format!(
            "DoubleStarGraph(vertices={}, valency={:?}, theta={})",
            g.vertex_count(),
            g.valency(),
            self.0.theta().len()
        )
    }
}

/// X-symmetric (l, r)-double-star orbits on `graph`, one dict per orbit.
#[pyfunction]
fn search<'py>(py: Python<'py>, graph: &PyGraph, group: &PyGroup, l: usize, r: usize) -> PyResult<Bound<'py, PyAny>> {
    let g = &graph.0;
    let action = VertexAction::new(g, group.0.clone()).map_err(err)?;
    let orbits = stars::enumerate_double_star_orbits(g, action.vertices(), StarParams::new(l, r), Default::default())
        .map_err(err)?;
    let rows: Vec<serde_json::Value> = orbits
        .iter()
        .map(|t| {
            let rep = t.representative();
            serde_json::json!({
                "size": t.len(),
                "self_paired": t.self_paired(),
                "x_symmetric": t.is_x_symmetric(),
                "level": t.level(),
                "s": rep.left.display(g).to_string(),
                "t": rep.right.display(g).to_string(),
            })
        })
        .collect();
    json_to_py(py, &rows)
}

/// Runs the worked examples; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (examples = "all"))]
fn verify_paper<'py>(py: Python<'py>, examples: &str) -> PyResult<Bound<'py, PyAny>> {
    let report = instance::run(&InstanceSpec::verify_paper(examples));
    py.import("json")?.call_method1("loads", (report.to_json(),))
}

/// Runs a JSON instance; returns `(exit_code, report_dict)`.
#[pyfunction]
fn run_instance<'py>(py: Python<'py>, text: &str) -> PyResult<(i32, Bound<'py, PyAny>)> {
    let spec = InstanceSpec::from_json(text).map_err(err)?;
    let report = instance::run(&spec);
    let dict = py.import("json")?.call_method1("loads", (report.to_json(),))?;
    Ok((report.exit_code(), dict))
}

#[pymodule]
#[pyo3(name = "doublestar")]
fn doublestar_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDoubleStarGraph>()?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    m.add_function(wrap_pyfunction!(run_instance, m)?)?;
    Ok(())
}
