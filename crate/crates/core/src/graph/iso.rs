//! Graph isomorphism by colour refinement with individualization and
//! backtracking. Disconnected graphs are matched component by component.

use std::collections::HashMap;

use super::{Graph, GraphError, Vertex};

/// Default cap on the size of a connected component handed to the search.
pub const DEFAULT_ISO_CAP: usize = 256;

/// A witness bijection: `mapping[v]` in the second graph is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub mapping: Vec<Vertex>,
}

impl Isomorphism {
    /// Checks exhaustively that the mapping is a bijection carrying the edge
    /// set of `g1` onto the edge set of `g2`.
    pub fn verify(&self, g1: &Graph, g2: &Graph) -> bool {
        let n = g1.vertex_count();
        if n != g2.vertex_count() || self.mapping.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &w in &self.mapping {
            if w >= n || hit[w] {
                return false;
            }
            hit[w] = true;
        }
        g1.edge_set_under(&self.mapping) == g2.edges()
    }
}

pub fn are_isomorphic(
    g1: &Graph,
    g2: &Graph,
    cap: usize,
) -> Result<Option<Isomorphism>, GraphError> {
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(None);
    }
    let c1 = g1.components();
    let c2 = g2.components();
    if c1.count() != c2.count() {
        return Ok(None);
    }
    if c1.count() == 1 {
        if g1.is_bipartite() != g2.is_bipartite() || g1.girth() != g2.girth() {
            return Ok(None);
        }
        if g1.vertex_count() > cap {
            return Err(GraphError::CapExceeded {
                size: g1.vertex_count(),
                cap,
            });
        }
        return Ok(connected_search(g1, g2));
    }

    let subs1: Vec<Graph> = c1.components.iter().map(|c| g1.induced_subgraph(c)).collect();
    let subs2: Vec<Graph> = c2.components.iter().map(|c| g2.induced_subgraph(c)).collect();
    let mut used = vec![false; subs2.len()];
    let mut mapping = vec![usize::MAX; g1.vertex_count()];
    for (i, s1) in subs1.iter().enumerate() {
        let mut found = None;
        for (j, s2) in subs2.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(w) = are_isomorphic(s1, s2, cap)? {
                found = Some((j, w));
                break;
            }
        }
        let (j, witness) = match found {
            Some(x) => x,
            None => return Ok(None),
        };
        used[j] = true;
        for (local, &v) in c1.components[i].iter().enumerate() {
            mapping[v] = c2.components[j][witness.mapping[local]];
        }
    }
    let iso = Isomorphism { mapping };
    debug_assert!(iso.verify(g1, g2));
    Ok(Some(iso))
}

/// Joint refinement state over the disjoint union of both graphs; vertex
/// `v` of the second graph sits at `n + v`.
struct Union<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    n: usize,
}

impl Union<'_> {
    fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let (g, off) = if u < self.n {
            (self.g1, 0)
        } else {
            (self.g2, self.n)
        };
        g.neighbors(u - off).iter().map(move |&w| w + off)
    }

    /// Refines to an equitable colouring. Returns `None` when the two sides
    /// disagree on some colour class size.
    fn refine(&self, mut colors: Vec<u32>) -> Option<Vec<u32>> {
        let total = 2 * self.n;
        let mut classes = count_classes(&colors);
        loop {
            let mut sigs: Vec<(u32, Vec<u32>)> = (0..total)
                .map(|u| {
                    let mut nb: Vec<u32> = self.neighbors(u).map(|w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[u], nb)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
            distinct.sort();
            distinct.dedup();
            let ids: HashMap<&(u32, Vec<u32>), u32> = distinct
                .into_iter()
                .enumerate()
                .map(|(i, s)| (s, i as u32))
                .collect();
            let next: Vec<u32> = sigs.iter().map(|s| ids[s]).collect();
            sigs.clear();
            let next_classes = count_classes(&next);
            colors = next;
            if !self.balanced(&colors) {
                return None;
            }
            if next_classes == classes {
                return Some(colors);
            }
            classes = next_classes;
        }
    }

    fn balanced(&self, colors: &[u32]) -> bool {
        let mut count: HashMap<u32, i64> = HashMap::new();
        for (u, &c) in colors.iter().enumerate() {
            *count.entry(c).or_default() += if u < self.n { 1 } else { -1 };
        }
        count.values().all(|&x| x == 0)
    }

    fn search(&self, colors: Vec<u32>) -> Option<Vec<Vertex>> {
        let n = self.n;
        let mut size: HashMap<u32, usize> = HashMap::new();
        for &c in &colors[..n] {
            *size.entry(c).or_default() += 1;
        }
        let target = (0..n)
            .filter(|&u| size[&colors[u]] > 1)
            .min_by_key(|&u| (size[&colors[u]], u));
        match target {
            None => {
                let mut by_color: HashMap<u32, usize> = HashMap::new();
                for w in 0..n {
                    by_color.insert(colors[n + w], w);
                }
                let mapping: Vec<Vertex> = (0..n).map(|u| by_color[&colors[u]]).collect();
                let iso = Isomorphism { mapping };
                iso.verify(self.g1, self.g2).then_some(iso.mapping)
            }
            Some(u) => {
                let fresh = colors.iter().copied().max().unwrap_or(0) + 1;
                for w in n..2 * n {
                    if colors[w] != colors[u] {
                        continue;
                    }
                    let mut next = colors.clone();
                    next[u] = fresh;
                    next[w] = fresh;
                    if let Some(refined) = self.refine(next) {
                        if let Some(m) = self.search(refined) {
                            return Some(m);
                        }
                    }
                }
                None
            }
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn connected_search(g1: &Graph, g2: &Graph) -> Option<Isomorphism> {
    let n = g1.vertex_count();
    if n == 0 {
        return Some(Isomorphism { mapping: vec![] });
    }
    let union = Union { g1, g2, n };
    let start = union.refine(vec![0; 2 * n])?;
    union.search(start).map(|mapping| Isomorphism { mapping })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog::{complete_bipartite, cycle, odd_graph, DEFAULT_VERTEX_CAP};

    #[test]
    fn cycles() {
        let c5 = cycle(5, 100).unwrap();
        let w = are_isomorphic(&c5, &c5, DEFAULT_ISO_CAP).unwrap().unwrap();
        assert!(w.verify(&c5, &c5));
        let c10 = cycle(10, 100).unwrap();
        let p = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
        assert!(are_isomorphic(&p, &c10, DEFAULT_ISO_CAP).unwrap().is_none());
    }

    #[test]
    fn c6_is_k33_minus_matching() {
        let k33 = complete_bipartite(3, 100).unwrap();
        let edges: Vec<_> = k33
            .edges()
            .into_iter()
            .filter(|&(u, v)| v != u + 3)
            .collect();
        let crown = Graph::from_edges(6, &edges).unwrap();
        let c6 = cycle(6, 100).unwrap();
        let w = are_isomorphic(&c6, &crown, DEFAULT_ISO_CAP).unwrap().unwrap();
        assert!(w.verify(&c6, &crown));
    }

    #[test]
    fn petersen_double_cover_is_desargues_like() {
        let p = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
        let d = p.bipartite_double_cover();
        assert_eq!(d.vertex_count(), 20);
        assert!(d.is_bipartite() && d.is_connected());
        assert_eq!(d.girth(), Some(6));
        assert_eq!(d.valency(), Some(3));
        // relabel randomly and recover
        let perm: Vec<usize> = (0..20).map(|i| (i * 7 + 3) % 20).collect();
        let shuffled = Graph::from_edges(20, &d.edge_set_under(&perm)).unwrap();
        let w = are_isomorphic(&d, &shuffled, DEFAULT_ISO_CAP).unwrap().unwrap();
        assert!(w.verify(&d, &shuffled));
    }

    #[test]
    fn disjoint_unions() {
        let c5 = cycle(5, 100).unwrap();
        let mut edges = Vec::new();
        for k in 0..3 {
            for (u, v) in c5.edges() {
                edges.push((u + 5 * k, v + 5 * k));
            }
        }
        let three = Graph::from_edges(15, &edges).unwrap();
        let perm: Vec<usize> = (0..15).map(|i| (i * 4 + 1) % 15).collect();
        let shuffled = Graph::from_edges(15, &three.edge_set_under(&perm)).unwrap();
        let w = are_isomorphic(&three, &shuffled, 10).unwrap().unwrap();
        assert!(w.verify(&three, &shuffled));
    }

    #[test]
    fn cap_applies_per_component() {
        let c10 = cycle(10, 100).unwrap();
        assert!(matches!(
            are_isomorphic(&c10, &c10, 5),
            Err(GraphError::CapExceeded { size: 10, cap: 5 })
        ));
    }
}
