//! Finite simple undirected graphs.
//!
//! Vertices are `0..n`; adjacency lists are kept sorted so that iteration
//! order, and therefore every derived enumeration, is deterministic.

pub mod catalog;
pub mod io;
pub mod iso;

use std::collections::VecDeque;

use thiserror::Error;

pub use catalog::{catalog, CatalogEntry, CatalogName};
pub use iso::{are_isomorphic, Isomorphism, DEFAULT_ISO_CAP};

pub type Vertex = usize;

/// An l-arc: a vertex sequence `(v0, ..., vl)` with consecutive vertices
/// adjacent and no immediate backtracking.
pub type LArc = Vec<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("size {size} exceeds cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelMismatch { labels: usize, n: usize },
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
    /// When present, vertex `i` stands for a subset of an underlying point set
    /// (odd graphs), which lets a group on points act on vertices.
    point_sets: Option<Vec<Vec<usize>>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            labels: None,
            point_sets: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adjacency,
            labels: None,
            point_sets: None,
        })
    }

    /// Builds a graph from an adjacency predicate over all unordered pairs.
    pub fn from_predicate<F: Fn(Vertex, Vertex) -> bool>(n: usize, adjacent: F) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        Graph {
            adjacency,
            labels: None,
            point_sets: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count() {
            return Err(GraphError::LabelMismatch {
                labels: labels.len(),
                n: self.vertex_count(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn with_point_sets(mut self, sets: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(sets.len(), self.vertex_count());
        self.point_sets = Some(sets);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn point_sets(&self) -> Option<&[Vec<usize>]> {
        self.point_sets.as_deref()
    }

    /// Display name of a vertex: its label, or its 1-indexed number.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Result<Vertex, GraphError> {
        match &self.labels {
            Some(l) => l
                .iter()
                .position(|x| x == label)
                .ok_or_else(|| GraphError::UnknownLabel(label.to_string())),
            None => label
                .parse::<usize>()
                .ok()
                .filter(|&i| i >= 1 && i <= self.vertex_count())
                .map(|i| i - 1)
                .ok_or_else(|| GraphError::UnknownLabel(label.to_string())),
        }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Common degree if the graph is regular (and nonempty).
    pub fn valency(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|l| l.len() == first)
            .then_some(first)
    }

    pub fn is_regular(&self) -> bool {
        self.valency().is_some()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v >= self.vertex_count() {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }

    pub fn is_l_arc(&self, arc: &[Vertex]) -> bool {
        if arc.is_empty() || arc.iter().any(|&v| v >= self.vertex_count()) {
            return false;
        }
        arc.windows(2).all(|w| self.adjacent(w[0], w[1]))
            && arc.windows(3).all(|w| w[0] != w[2])
    }

    /// All l-arcs starting at `v`, in lexicographic order.
    pub fn l_arcs_from(&self, l: usize, v: Vertex) -> Result<Vec<LArc>, GraphError> {
        self.check_vertex(v)?;
        let mut out = Vec::new();
        let mut path = vec![v];
        self.extend_arcs(l, &mut path, &mut out);
        Ok(out)
    }

    fn extend_arcs(&self, l: usize, path: &mut Vec<Vertex>, out: &mut Vec<LArc>) {
        if path.len() == l + 1 {
            out.push(path.clone());
            return;
        }
        let last = *path.last().unwrap();
        let prev = if path.len() >= 2 {
            Some(path[path.len() - 2])
        } else {
            None
        };
        for &w in &self.adjacency[last] {
            if Some(w) == prev {
                continue;
            }
            path.push(w);
            self.extend_arcs(l, path, out);
            path.pop();
        }
    }

    /// All l-arcs of the graph.
    pub fn l_arcs(&self, l: usize) -> Vec<LArc> {
        (0..self.vertex_count())
            .flat_map(|v| self.l_arcs_from(l, v).unwrap())
            .collect()
    }

    pub fn components(&self) -> ComponentDecomposition {
        let n = self.vertex_count();
        let mut component_of = vec![usize::MAX; n];
        let mut components = Vec::new();
        for start in 0..n {
            if component_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            component_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if component_of[w] == usize::MAX {
                        component_of[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        ComponentDecomposition {
            components,
            component_of,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().count() == 1
    }

    /// A proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Length of a shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adjacency[v] {
                if index[w] != usize::MAX {
                    adjacency[i].push(index[w]);
                }
            }
            adjacency[i].sort_unstable();
        }
        Graph {
            adjacency,
            labels: self
                .labels
                .as_ref()
                .map(|l| vertices.iter().map(|&v| l[v].clone()).collect()),
            point_sets: None,
        }
    }

    /// Bipartite double cover: vertex `(v, s)` is `2v + s`, and `(u,0) ~ (v,1)`
    /// whenever `u ~ v`.
    pub fn bipartite_double_cover(&self) -> Graph {
        let n = self.vertex_count();
        let mut adjacency = vec![Vec::new(); 2 * n];
        for u in 0..n {
            for &v in &self.adjacency[u] {
                adjacency[2 * u].push(2 * v + 1);
                adjacency[2 * u + 1].push(2 * v);
            }
        }
        for l in adjacency.iter_mut() {
            l.sort_unstable();
        }
        let labels = (0..2 * n)
            .map(|i| format!("{}.{}", self.label(i / 2), i % 2))
            .collect();
        Graph {
            adjacency,
            labels: Some(labels),
            point_sets: None,
        }
    }

    /// Image of the graph under a vertex relabeling; `map[v]` is the new name
    /// of `v`. Used to compare graphs up to an explicit bijection.
    pub fn edge_set_under(&self, map: &[Vertex]) -> Vec<(Vertex, Vertex)> {
        let mut e: Vec<(Vertex, Vertex)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (map[u], map[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        e
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Vec<Vertex>>,
    pub component_of: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn arcs_of_triangle() {
        let k3 = cycle(3);
        assert_eq!(k3.l_arcs_from(1, 0).unwrap().len(), 2);
        assert_eq!(k3.l_arcs_from(0, 2).unwrap(), vec![vec![2]]);
        assert!(k3.l_arcs_from(1, 3).is_err());
        // non-backtracking: (0,1,0) is not a 2-arc
        assert!(k3
            .l_arcs_from(2, 0)
            .unwrap()
            .iter()
            .all(|a| a[0] != a[2]));
    }

    #[test]
    fn components_and_girth() {
        let mut edges = Vec::new();
        for c in 0..6 {
            for i in 0..5 {
                edges.push((5 * c + i, 5 * c + (i + 1) % 5));
            }
        }
        let g = Graph::from_edges(30, &edges).unwrap();
        let comps = g.components();
        assert_eq!(comps.count(), 6);
        assert!(comps.components.iter().all(|c| c.len() == 5));
        assert_eq!(g.girth(), Some(5));
        assert_eq!(Graph::empty(4).components().count(), 4);
        assert_eq!(Graph::empty(4).girth(), None);
    }

    #[test]
    fn double_cover_of_odd_cycle_is_even_cycle() {
        let c10 = cycle(5).bipartite_double_cover();
        assert_eq!(c10.vertex_count(), 10);
        assert!(c10.is_connected());
        assert!(c10.is_bipartite());
        assert_eq!(c10.valency(), Some(2));
    }

    #[test]
    fn double_cover_of_k2_is_two_edges() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let d = k2.bipartite_double_cover();
        assert_eq!(d.edge_count(), 2);
        assert_eq!(d.components().count(), 2);
    }
}
