//! Groups on points and their induced actions on graph vertices.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::graph::Graph;
use crate::perm::{PermError, PermGroup, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGroup {
    Alternating(usize),
    Symmetric(usize),
    /// `Sym(n) wr Sym(2)` on `2n` points: `1..n` and `n+1..2n` are the sides.
    Wreath(usize),
    Cyclic(usize),
    Dihedral(usize),
}

impl NamedGroup {
    pub fn degree(&self) -> usize {
        match *self {
            NamedGroup::Wreath(n) => 2 * n,
            NamedGroup::Alternating(n)
            | NamedGroup::Symmetric(n)
            | NamedGroup::Cyclic(n)
            | NamedGroup::Dihedral(n) => n,
        }
    }

    pub fn generators(&self) -> Vec<Permutation> {
        let cyc = |n: usize, pts: Vec<usize>| Permutation::from_cycles(n, &[pts]).unwrap();
        match *self {
            NamedGroup::Symmetric(n) if n >= 2 => {
                vec![cyc(n, vec![0, 1]), cyc(n, (0..n).collect())]
            }
            NamedGroup::Alternating(n) if n >= 3 => {
                let long = if n % 2 == 1 {
                    (0..n).collect()
                } else {
                    (1..n).collect()
                };
                vec![cyc(n, vec![0, 1, 2]), cyc(n, long)]
            }
            NamedGroup::Wreath(n) if n >= 1 => {
                let d = 2 * n;
                let swap: Vec<Vec<usize>> = (0..n).map(|i| vec![i, n + i]).collect();
                let mut gens = vec![Permutation::from_cycles(d, &swap).unwrap()];
                if n >= 2 {
                    gens.push(cyc(d, vec![0, 1]));
                    gens.push(cyc(d, (0..n).collect()));
                }
                gens
            }
            NamedGroup::Cyclic(n) if n >= 2 => vec![cyc(n, (0..n).collect())],
            NamedGroup::Dihedral(n) if n >= 3 => {
                let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
                vec![
                    cyc(n, (0..n).collect()),
                    Permutation::from_images(reflection).unwrap(),
                ]
            }
            other => vec![Permutation::identity(other.degree())],
        }
    }

    pub fn closure(&self, cap: usize) -> Result<PermGroup, PermError> {
        PermGroup::closure(self.degree(), self.generators(), cap)
    }
}

impl FromStr for NamedGroup {
    type Err = String;

    /// Accepts `"alternating 5"`, `"symmetric 7"`, `"wreath 3"`, `"cyclic 5"`,
    /// `"dihedral 5"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split_whitespace();
        let name = parts.next().unwrap_or_default();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| format!("unknown group {s:?}"))?;
        match name {
            "alternating" | "A" => Ok(NamedGroup::Alternating(n)),
            "symmetric" | "S" => Ok(NamedGroup::Symmetric(n)),
            "wreath" => Ok(NamedGroup::Wreath(n)),
            "cyclic" => Ok(NamedGroup::Cyclic(n)),
            "dihedral" => Ok(NamedGroup::Dihedral(n)),
            _ => Err(format!("unknown group {s:?}")),
        }
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::Alternating(n) => write!(f, "alternating {n}"),
            NamedGroup::Symmetric(n) => write!(f, "symmetric {n}"),
            NamedGroup::Wreath(n) => write!(f, "wreath {n}"),
            NamedGroup::Cyclic(n) => write!(f, "cyclic {n}"),
            NamedGroup::Dihedral(n) => write!(f, "dihedral {n}"),
        }
    }
}

/// A group given on points together with its faithful action on the vertices
/// of a graph. Element `i` of `vertices` is induced by element `i` of
/// `points`, so stabilizers computed on vertices can be printed in point
/// notation.
#[derive(Clone, Debug)]
pub struct VertexAction {
    points: PermGroup,
    vertices: PermGroup,
}

impl VertexAction {
    /// Lifts `points` to the vertices of `graph`: through the graph's point
    /// sets when it has them, otherwise vertices are the points themselves.
    pub fn new(graph: &Graph, points: PermGroup) -> Result<Self, PermError> {
        let n = graph.vertex_count();
        let vertices = match graph.point_sets() {
            Some(sets) => {
                let index: HashMap<&[usize], usize> =
                    sets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
                points.induced(n, |p| {
                    let images = sets
                        .iter()
                        .map(|s| {
                            let mut img: Vec<usize> = s.iter().map(|&x| p.apply(x)).collect();
                            img.sort_unstable();
                            index.get(img.as_slice()).copied().ok_or(PermError::NotABijection(n))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Permutation::from_images(images)
                })?
            }
            None => {
                if points.degree() != n {
                    return Err(PermError::DegreeMismatch {
                        expected: n,
                        found: points.degree(),
                    });
                }
                points.clone()
            }
        };
        if vertices.order() != points.order() {
            return Err(PermError::NotFaithful);
        }
        Ok(VertexAction { points, vertices })
    }

    pub fn points(&self) -> &PermGroup {
        &self.points
    }

    pub fn vertices(&self) -> &PermGroup {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.order()
    }

    /// Point-level form of a vertex permutation in this group.
    pub fn point_form(&self, vertex_perm: &Permutation) -> Option<&Permutation> {
        self.vertices
            .position(vertex_perm)
            .map(|i| self.points.element(i))
    }

    /// Point-level cycle strings of a subgroup of `vertices`, sorted.
    pub fn point_strings(&self, subgroup: &PermGroup) -> Vec<String> {
        let mut v: Vec<String> = subgroup
            .elements()
            .iter()
            .filter_map(|e| self.point_form(e))
            .map(|p| p.to_string())
            .collect();
        v.sort();
        v
    }

    /// Vertex-level form of a point permutation.
    pub fn vertex_form(&self, point_perm: &Permutation) -> Option<&Permutation> {
        self.points
            .position(point_perm)
            .map(|i| self.vertices.element(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog::{odd_graph, DEFAULT_VERTEX_CAP};

    #[test]
    fn named_orders() {
        assert_eq!(NamedGroup::Alternating(5).closure(1000).unwrap().order(), 60);
        assert_eq!(NamedGroup::Alternating(4).closure(1000).unwrap().order(), 12);
        assert_eq!(NamedGroup::Alternating(7).closure(10000).unwrap().order(), 2520);
        assert_eq!(NamedGroup::Symmetric(5).closure(1000).unwrap().order(), 120);
        assert_eq!(NamedGroup::Wreath(3).closure(1000).unwrap().order(), 72);
        assert_eq!(NamedGroup::Wreath(4).closure(10000).unwrap().order(), 1152);
        assert_eq!(NamedGroup::Dihedral(5).closure(100).unwrap().order(), 10);
        assert_eq!(NamedGroup::Cyclic(5).closure(100).unwrap().order(), 5);
    }

    #[test]
    fn lift_to_odd_graph() {
        let o3 = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
        let a5 = NamedGroup::Alternating(5).closure(1000).unwrap();
        let act = VertexAction::new(&o3, a5).unwrap();
        assert_eq!(act.vertices().degree(), 10);
        assert_eq!(act.order(), 60);
        // every induced permutation is an automorphism
        for p in act.vertices().elements() {
            for (u, v) in o3.edges() {
                assert!(o3.adjacent(p.apply(u), p.apply(v)));
            }
        }
    }
}
