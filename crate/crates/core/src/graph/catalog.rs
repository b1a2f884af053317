//! Named graphs with the groups the double-star examples are built over.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};
use crate::action::NamedGroup;

/// Default vertex cap for catalog graphs.
pub const DEFAULT_VERTEX_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogName {
    Complete(usize),
    CompleteBipartite(usize),
    Cycle(usize),
    Odd(usize),
}

impl FromStr for CatalogName {
    type Err = GraphError;

    /// Accepts `"complete 5"`, `"complete-bipartite 3"`, `"cycle 5"`, `"odd 4"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split_whitespace();
        let name = parts.next().unwrap_or_default();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::UnknownName(s.to_string()))?;
        if parts.next().is_some() {
            return Err(GraphError::UnknownName(s.to_string()));
        }
        match name {
            "complete" | "K" => Ok(CatalogName::Complete(n)),
            "complete-bipartite" | "Knn" => Ok(CatalogName::CompleteBipartite(n)),
            "cycle" | "C" => Ok(CatalogName::Cycle(n)),
            "odd" | "O" => Ok(CatalogName::Odd(n)),
            _ => Err(GraphError::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::Complete(n) => write!(f, "complete {n}"),
            CatalogName::CompleteBipartite(n) => write!(f, "complete-bipartite {n}"),
            CatalogName::Cycle(n) => write!(f, "cycle {n}"),
            CatalogName::Odd(n) => write!(f, "odd {n}"),
        }
    }
}

/// A catalog graph together with its natural symmetry group.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub graph: Graph,
    /// The group used for this graph in the worked examples: `A_n` on `K_n`,
    /// `A_{2n-1}` on `O_n`, `Sym(n) wr Sym(2)` on `K_{n,n}`, dihedral on `C_n`.
    pub group: NamedGroup,
}

pub fn catalog(name: CatalogName, vertex_cap: usize) -> Result<CatalogEntry, GraphError> {
    let (graph, group) = match name {
        CatalogName::Complete(n) => (complete(n, vertex_cap)?, NamedGroup::Alternating(n)),
        CatalogName::CompleteBipartite(n) => {
            (complete_bipartite(n, vertex_cap)?, NamedGroup::Wreath(n))
        }
        CatalogName::Cycle(n) => (cycle(n, vertex_cap)?, NamedGroup::Dihedral(n)),
        CatalogName::Odd(n) => (odd_graph(n, vertex_cap)?, NamedGroup::Alternating(2 * n - 1)),
    };
    Ok(CatalogEntry { name, graph, group })
}

fn check_cap(size: usize, cap: usize) -> Result<(), GraphError> {
    if size > cap {
        Err(GraphError::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}

pub fn complete(n: usize, cap: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter(format!("complete graph needs n >= 2, got {n}")));
    }
    check_cap(n, cap)?;
    Graph::from_predicate(n, |_, _| true).with_labels((1..=n).map(|i| i.to_string()).collect())
}

/// `K_{n,n}` with sides `i1..in` (vertices `0..n`) and `g1..gn` (`n..2n`).
pub fn complete_bipartite(n: usize, cap: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter("complete bipartite graph needs n >= 1".into()));
    }
    check_cap(2 * n, cap)?;
    let labels = (1..=n)
        .map(|i| format!("i{i}"))
        .chain((1..=n).map(|i| format!("g{i}")))
        .collect();
    Graph::from_predicate(2 * n, |u, v| (u < n) != (v < n)).with_labels(labels)
}

pub fn cycle(n: usize, cap: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    check_cap(n, cap)?;
    Graph::from_predicate(n, |u, v| (v - u) == 1 || (v - u) == n - 1)
        .with_labels((1..=n).map(|i| i.to_string()).collect())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Compact subset label: `{0,1,2}` becomes `"123"` (1-indexed digits when
/// every point is a single digit, comma-separated otherwise).
pub fn subset_label(set: &[usize], points: usize) -> String {
    if points <= 9 {
        set.iter().map(|p| (p + 1).to_string()).collect()
    } else {
        set.iter()
            .map(|p| (p + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The odd graph `O_n`: vertices are the `(n-1)`-subsets of a `(2n-1)`-set,
/// adjacent when disjoint.
pub fn odd_graph(n: usize, cap: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter(format!("odd graph needs n >= 2, got {n}")));
    }
    let points = 2 * n - 1;
    check_cap(binomial(points, n - 1), cap)?;
    let sets = k_subsets(points, n - 1);
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &p| m | (1 << p)))
        .collect();
    let labels = sets.iter().map(|s| subset_label(s, points)).collect();
    let g = Graph::from_predicate(sets.len(), |u, v| masks[u] & masks[v] == 0);
    Ok(g.with_labels(labels)?.with_point_sets(sets))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_graph_sizes() {
        let o2 = odd_graph(2, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!((o2.vertex_count(), o2.valency()), (3, Some(2)));
        let o3 = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!((o3.vertex_count(), o3.valency()), (10, Some(3)));
        assert_eq!(o3.girth(), Some(5));
        let o4 = odd_graph(4, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!((o4.vertex_count(), o4.valency()), (35, Some(4)));
        assert_eq!(o4.edge_count(), 70);
        assert_eq!(o4.label(0), "123");
        assert!(matches!(odd_graph(4, 10), Err(GraphError::CapExceeded { size: 35, cap: 10 })));
    }

    #[test]
    fn names_parse() {
        assert_eq!("odd 4".parse::<CatalogName>().unwrap(), CatalogName::Odd(4));
        assert_eq!(
            "complete-bipartite 3".parse::<CatalogName>().unwrap(),
            CatalogName::CompleteBipartite(3)
        );
        assert!("petersen".parse::<CatalogName>().is_err());
        assert!("wheel 5".parse::<CatalogName>().is_err());
    }

    #[test]
    fn catalog_sizes() {
        let k5 = catalog(CatalogName::Complete(5), DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(k5.graph.edge_count(), 10);
        let k33 = catalog(CatalogName::CompleteBipartite(3), DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(k33.graph.edge_count(), 9);
        assert_eq!(k33.graph.label(3), "g1");
    }
}
