//! (l,r)-stars and double-stars of a graph, and X-orbits of double-stars.
//!
//! A star is a set of l-arcs sharing a first vertex (its center) whose
//! one-step layer has `r` arcs and in which every proper prefix extends in
//! exactly `r - 1` ways. All vertex indices refer to a fixed [`Graph`]; the
//! group acts on vertices.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, LArc, Vertex};
use crate::perm::{Action, PermError, PermGroup, Permutation};

pub const DEFAULT_STAR_CAP: usize = 100_000;
pub const DEFAULT_ORBIT_CAP: usize = 1_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error("not an ({l},{r})-star: {reason}")]
    NotAStar { l: usize, r: usize, reason: String },
    #[error("not a double-star: {0}")]
    NotADoubleStar(String),
    #[error("{0:?} is not a prefix of any arc of the star")]
    NotAPrefix(Vec<Vertex>),
    #[error("index {index} out of range for arcs of length {l}")]
    IndexOutOfRange { index: usize, l: usize },
    #[error("vertex {0} is not a neighbor of the center inside the star")]
    NotANeighborInStar(Vertex),
    #[error("the group is not transitive on the arcs of the graph")]
    NotArcTransitive,
    #[error("{what} exceeded cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Arc length `l` and branching `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StarParams {
    pub l: usize,
    pub r: usize,
}

impl StarParams {
    pub fn new(l: usize, r: usize) -> Self {
        StarParams { l, r }
    }

    /// `|S(i)|` forced by the recursive definition.
    pub fn layer_size(&self, i: usize) -> usize {
        match i {
            0 => 1,
            _ => self.r * (self.r - 1).pow(i as u32 - 1),
        }
    }
}

/// A star in canonical form: arcs sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Star {
    center: Vertex,
    params: StarParams,
    arcs: Vec<LArc>,
}

impl Star {
    /// Validates `arcs` against the recursive star definition.
    pub fn new(
        graph: &Graph,
        center: Vertex,
        params: StarParams,
        arcs: Vec<LArc>,
    ) -> Result<Star, StarError> {
        let star = Star::from_arcs(center, params, arcs);
        check_star(graph, &star)?;
        Ok(star)
    }

    /// Canonicalizes without validating.
    pub fn from_arcs(center: Vertex, params: StarParams, mut arcs: Vec<LArc>) -> Star {
        arcs.sort();
        arcs.dedup();
        Star {
            center,
            params,
            arcs,
        }
    }

    /// Parses arcs given as vertex labels, e.g. `[["123","456","127"], ...]`.
    pub fn from_labels(graph: &Graph, r: usize, arcs: &[Vec<String>]) -> Result<Star, StarError> {
        let first = arcs.first().ok_or_else(|| StarError::NotAStar {
            l: 0,
            r,
            reason: "no arcs".into(),
        })?;
        let l = first.len().saturating_sub(1);
        let parsed = arcs
            .iter()
            .map(|a| a.iter().map(|s| graph.vertex_by_label(s)).collect())
            .collect::<Result<Vec<LArc>, GraphError>>()?;
        let center = parsed[0][0];
        Star::new(graph, center, StarParams::new(l, r), parsed)
    }

    pub fn center(&self) -> Vertex {
        self.center
    }

    pub fn params(&self) -> StarParams {
        self.params
    }

    pub fn arcs(&self) -> &[LArc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, arc: &[Vertex]) -> bool {
        self.arcs.binary_search_by(|a| a.as_slice().cmp(arc)).is_ok()
    }

    /// `S(i)`: every arc truncated to its first `i` steps.
    pub fn project(&self, i: usize) -> Result<Star, StarError> {
        if i > self.params.l {
            return Err(StarError::IndexOutOfRange {
                index: i,
                l: self.params.l,
            });
        }
        let arcs = self.arcs.iter().map(|a| a[..=i].to_vec()).collect();
        Ok(Star::from_arcs(
            self.center,
            StarParams::new(i, self.params.r),
            arcs,
        ))
    }

    /// `S_α`: the arcs of `S` extending `α`.
    pub fn residual(&self, alpha: &[Vertex]) -> Result<Vec<LArc>, StarError> {
        let out: Vec<LArc> = self
            .arcs
            .iter()
            .filter(|a| a.len() >= alpha.len() && a[..alpha.len()] == *alpha)
            .cloned()
            .collect();
        if out.is_empty() || alpha.is_empty() {
            return Err(StarError::NotAPrefix(alpha.to_vec()));
        }
        Ok(out)
    }

    /// `S_τ`: forward continuations through `τ` together with the arcs of
    /// `S(l-2)` reflected back through the center. For `l = 1` this is
    /// `{(τ)}`.
    pub fn branch(&self, graph: &Graph, tau: Vertex) -> Result<Vec<LArc>, StarError> {
        let l = self.params.l;
        if l == 0 || !self.contains_step(tau) {
            return Err(StarError::NotANeighborInStar(tau));
        }
        if l == 1 {
            return Ok(vec![vec![tau]]);
        }
        let mut out: BTreeSet<LArc> = self
            .arcs
            .iter()
            .filter(|a| a[1] == tau)
            .map(|a| a[1..].to_vec())
            .collect();
        for prefix in self.project(l - 2)?.arcs {
            let mut arc = Vec::with_capacity(l);
            arc.push(tau);
            arc.extend_from_slice(&prefix);
            if graph.is_l_arc(&arc) {
                out.insert(arc);
            }
        }
        Ok(out.into_iter().collect())
    }

    fn contains_step(&self, tau: Vertex) -> bool {
        self.arcs.iter().any(|a| a.len() > 1 && a[1] == tau)
    }

    /// Neighbors `τ` with `(σ, τ) ∈ S(1)`, ascending.
    pub fn first_steps(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self
            .arcs
            .iter()
            .filter(|a| a.len() > 1)
            .map(|a| a[1])
            .collect();
        v.dedup();
        v
    }

    /// Compact rendering with vertex labels, e.g. `{(1,5), (1,4)}`.
    pub fn display<'a>(&'a self, graph: &'a Graph) -> StarDisplay<'a> {
        StarDisplay { star: self, graph }
    }
}

impl Action for Star {
    fn act(&self, p: &Permutation) -> Self {
        let arcs = self
            .arcs
            .iter()
            .map(|a| a.iter().map(|&v| p.apply(v)).collect())
            .collect();
        Star::from_arcs(p.apply(self.center), self.params, arcs)
    }

    fn max_point(&self) -> Option<usize> {
        self.arcs.iter().flatten().copied().max()
    }
}

pub struct StarDisplay<'a> {
    star: &'a Star,
    graph: &'a Graph,
}

impl fmt::Display for StarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self
            .star
            .arcs
            .iter()
            .map(|a| arc_string(self.graph, a))
            .collect();
        write!(f, "{{{}}}", arcs.join(", "))
    }
}

pub fn arc_string(graph: &Graph, arc: &[Vertex]) -> String {
    let parts: Vec<String> = arc.iter().map(|&v| graph.label(v)).collect();
    format!("({})", parts.join(","))
}

fn check_star(graph: &Graph, star: &Star) -> Result<(), StarError> {
    let StarParams { l, r } = star.params;
    let fail = |reason: String| StarError::NotAStar { l, r, reason };
    if r == 0 {
        return Err(fail("r must be at least 1".into()));
    }
    for a in &star.arcs {
        if a.len() != l + 1 || a[0] != star.center || !graph.is_l_arc(a) {
            return Err(fail(format!("{} is not an {l}-arc from the center", arc_string(graph, a))));
        }
    }
    match l {
        0 => {
            if star.arcs != [vec![star.center]] {
                return Err(fail("a 0-star is the single arc (center)".into()));
            }
        }
        1 => {
            if star.arcs.len() != r {
                return Err(fail(format!("has {} arcs", star.arcs.len())));
            }
        }
        _ => {
            let prefix = star.project(l - 1)?;
            check_star(graph, &prefix)?;
            for alpha in &prefix.arcs {
                let n = star.residual(alpha)?.len();
                if n != r - 1 {
                    return Err(fail(format!(
                        "prefix {} extends in {n} ways",
                        arc_string(graph, alpha)
                    )));
                }
            }
        }
    }
    Ok(())
}

pub fn is_star(graph: &Graph, center: Vertex, params: StarParams, arcs: &[LArc]) -> bool {
    Star::new(graph, center, params, arcs.to_vec()).is_ok()
}

/// An ordered pair of stars at adjacent centers with interlocking branches.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleStar {
    pub left: Star,
    pub right: Star,
}

impl DoubleStar {
    pub fn new(graph: &Graph, left: Star, right: Star) -> Result<DoubleStar, StarError> {
        check_double_star(graph, &left, &right)?;
        Ok(DoubleStar { left, right })
    }

    pub fn pair(&self) -> (Star, Star) {
        (self.left.clone(), self.right.clone())
    }

    pub fn reversed(&self) -> DoubleStar {
        DoubleStar {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

fn check_double_star(graph: &Graph, s: &Star, t: &Star) -> Result<(), StarError> {
    let fail = |m: &str| StarError::NotADoubleStar(m.to_string());
    if s.params != t.params {
        return Err(fail("the stars have different parameters"));
    }
    check_star(graph, s)?;
    check_star(graph, t)?;
    let l = s.params.l;
    if l == 0 {
        return Err(fail("double-stars need l >= 1"));
    }
    let (sigma, tau) = (s.center, t.center);
    if !s.project(1)?.contains(&[sigma, tau]) {
        return Err(fail("(σ, τ) is not in S(1)"));
    }
    if !t.project(1)?.contains(&[tau, sigma]) {
        return Err(fail("(τ, σ) is not in T(1)"));
    }
    if s.branch(graph, tau)? != t.project(l - 1)?.arcs {
        return Err(fail("S_τ differs from T(l-1)"));
    }
    if t.branch(graph, sigma)? != s.project(l - 1)?.arcs {
        return Err(fail("T_σ differs from S(l-1)"));
    }
    Ok(())
}

pub fn is_double_star(graph: &Graph, s: &Star, t: &Star) -> bool {
    check_double_star(graph, s, t).is_ok()
}

/// An X-orbit of double-stars with its flags.
#[derive(Clone, Debug)]
pub struct ThetaOrbit {
    group: PermGroup,
    representative: DoubleStar,
    /// Sorted list of member pairs.
    members: Vec<(Star, Star)>,
    self_paired: bool,
    level: usize,
    pairing_witness: Option<Permutation>,
}

impl ThetaOrbit {
    pub fn params(&self) -> StarParams {
        self.representative.left.params
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn representative(&self) -> &DoubleStar {
        &self.representative
    }

    pub fn members(&self) -> &[(Star, Star)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, pair: &(Star, Star)) -> bool {
        self.members.binary_search(pair).is_ok()
    }

    pub fn self_paired(&self) -> bool {
        self.self_paired
    }

    /// Largest `s ≤ l` with every member star `(X_S, s)`-arc-transitive;
    /// `0` when even `s = 1` fails.
    pub fn level(&self) -> usize {
        self.level
    }

    /// Self-paired and (X,1)-arc-transitive.
    pub fn is_x_symmetric(&self) -> bool {
        self.self_paired && self.level >= 1
    }

    /// First group element (in element order) swapping the representative.
    pub fn pairing_witness(&self) -> Option<&Permutation> {
        self.pairing_witness.as_ref()
    }
}

/// Builds the orbit `{(S, T)^x | x ∈ X}` and its flags.
pub fn theta_orbit(
    graph: &Graph,
    group: &PermGroup,
    s: &Star,
    t: &Star,
) -> Result<ThetaOrbit, StarError> {
    check_double_star(graph, s, t)?;
    let seed = (s.clone(), t.clone());
    let mut members = group.orbit(&seed)?;
    members.sort();
    let reversed = (t.clone(), s.clone());
    let self_paired = members.binary_search(&reversed).is_ok();
    let pairing_witness = if self_paired {
        group.find_mapping(&seed, &reversed).cloned()
    } else {
        None
    };
    let level = star_level(group, s)?.min(star_level(group, t)?);
    Ok(ThetaOrbit {
        group: group.clone(),
        representative: DoubleStar {
            left: s.clone(),
            right: t.clone(),
        },
        members,
        self_paired,
        level,
        pairing_witness,
    })
}

/// Largest `s ≤ l` such that `X_S` is transitive on `S(1), …, S(s)`.
pub fn star_level(group: &PermGroup, star: &Star) -> Result<usize, StarError> {
    let stab = group.stabilizer(star)?;
    let mut level = 0;
    for s in 1..=star.params.l {
        if is_arc_transitive_star(&stab, star, s)? {
            level = s;
        } else {
            break;
        }
    }
    Ok(level)
}

/// Whether `stab` acts transitively on `S(s)`.
pub fn is_arc_transitive_star(stab: &PermGroup, star: &Star, s: usize) -> Result<bool, StarError> {
    let layer: Vec<crate::perm::Tuple> = star
        .project(s)?
        .arcs
        .into_iter()
        .map(crate::perm::Tuple)
        .collect();
    Ok(stab.is_transitive_on(&layer)?)
}

/// `St(Θ)`: all stars appearing in a member pair, sorted.
pub fn st_of(theta: &ThetaOrbit) -> Vec<Star> {
    let set: BTreeSet<&Star> = theta
        .members
        .iter()
        .flat_map(|(a, b)| [a, b])
        .collect();
    set.into_iter().cloned().collect()
}

/// Caps for [`enumerate_double_star_orbits`].
#[derive(Clone, Copy, Debug)]
pub struct EnumerationCaps {
    pub stars: usize,
    pub orbits: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            stars: DEFAULT_STAR_CAP,
            orbits: DEFAULT_ORBIT_CAP,
        }
    }
}

/// True iff `group` is transitive on the arcs (ordered adjacent pairs).
pub fn is_arc_transitive(graph: &Graph, group: &PermGroup) -> Result<bool, StarError> {
    let arcs: Vec<crate::perm::Tuple> = graph
        .l_arcs(1)
        .into_iter()
        .map(crate::perm::Tuple)
        .collect();
    if arcs.is_empty() {
        return Ok(false);
    }
    Ok(group.is_transitive_on(&arcs)?)
}

/// All `(l, r)`-stars centered at `center`, sorted.
pub fn stars_at(
    graph: &Graph,
    center: Vertex,
    params: StarParams,
    cap: usize,
) -> Result<Vec<Star>, StarError> {
    let StarParams { l, r } = params;
    if l == 0 {
        return Ok(vec![Star::from_arcs(center, params, vec![vec![center]])]);
    }
    if r == 0 || r > graph.degree(center) {
        return Ok(Vec::new());
    }
    let mut layer: Vec<Vec<LArc>> = subsets(graph.neighbors(center), r)
        .into_iter()
        .map(|ns| ns.into_iter().map(|n| vec![center, n]).collect())
        .collect();
    if layer.len() > cap {
        return Err(StarError::CapExceeded { what: "stars per vertex", cap });
    }
    for _ in 1..l {
        let mut next = Vec::new();
        for arcs in &layer {
            extend_all(graph, arcs, r - 1, &mut next, cap)?;
        }
        layer = next;
    }
    let mut out: Vec<Star> = layer
        .into_iter()
        .map(|arcs| Star::from_arcs(center, params, arcs))
        .collect();
    out.sort();
    Ok(out)
}

/// Every way of extending each arc of `arcs` by `k` distinct non-backtracking
/// steps; results pushed to `out`.
fn extend_all(
    graph: &Graph,
    arcs: &[LArc],
    k: usize,
    out: &mut Vec<Vec<LArc>>,
    cap: usize,
) -> Result<(), StarError> {
    let choices: Vec<Vec<Vec<Vertex>>> = arcs
        .iter()
        .map(|a| {
            let last = a[a.len() - 1];
            let prev = a[a.len() - 2];
            let ext: Vec<Vertex> = graph
                .neighbors(last)
                .iter()
                .copied()
                .filter(|&w| w != prev)
                .collect();
            subsets(&ext, k)
        })
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(());
    }
    let mut idx = vec![0usize; arcs.len()];
    loop {
        let mut star = Vec::with_capacity(arcs.len() * k);
        for (a, (c, &i)) in arcs.iter().zip(choices.iter().zip(&idx)) {
            for &w in &c[i] {
                let mut e = a.clone();
                e.push(w);
                star.push(e);
            }
        }
        out.push(star);
        if out.len() > cap {
            return Err(StarError::CapExceeded { what: "stars per vertex", cap });
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(());
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn subsets(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    crate::graph::catalog::k_subsets(items.len(), k)
        .into_iter()
        .map(|s| s.into_iter().map(|i| items[i]).collect())
        .collect()
}

/// All stars `T` centered at `tau` with `(S, T)` a double-star.
pub fn partners(
    graph: &Graph,
    s: &Star,
    tau: Vertex,
    cap: usize,
) -> Result<Vec<Star>, StarError> {
    let params = s.params;
    let l = params.l;
    let sigma = s.center;
    let candidates: Vec<Vec<LArc>> = if l == 1 {
        let others: Vec<Vertex> = graph
            .neighbors(tau)
            .iter()
            .copied()
            .filter(|&w| w != sigma)
            .collect();
        if params.r == 0 {
            return Ok(Vec::new());
        }
        subsets(&others, params.r - 1)
            .into_iter()
            .map(|ns| {
                std::iter::once(vec![tau, sigma])
                    .chain(ns.into_iter().map(|n| vec![tau, n]))
                    .collect()
            })
            .collect()
    } else {
        let base = s.branch(graph, tau)?;
        let base_star = Star::from_arcs(tau, StarParams::new(l - 1, params.r), base.clone());
        if check_star(graph, &base_star).is_err() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        extend_all(graph, &base, params.r - 1, &mut out, cap)?;
        out
    };
    let mut found: Vec<Star> = candidates
        .into_iter()
        .map(|arcs| Star::from_arcs(tau, params, arcs))
        .filter(|t| check_double_star(graph, s, t).is_ok())
        .collect();
    found.sort();
    Ok(found)
}

/// Every X-orbit of `(l, r)`-double-stars, up to equality of orbits, in a
/// deterministic order.
pub fn enumerate_double_star_orbits(
    graph: &Graph,
    group: &PermGroup,
    params: StarParams,
    caps: EnumerationCaps,
) -> Result<Vec<ThetaOrbit>, StarError> {
    if graph.vertex_count() == 0 || !is_arc_transitive(graph, group)? {
        return Err(StarError::NotArcTransitive);
    }
    if params.l == 0 {
        return Ok(Vec::new());
    }
    let base = 0;
    let vertex_stab = group.stabilizer(&base)?;
    let mut seen: HashSet<Star> = HashSet::new();
    let mut reps = Vec::new();
    for s in stars_at(graph, base, params, caps.stars)? {
        if seen.contains(&s) {
            continue;
        }
        for img in vertex_stab.orbit(&s)? {
            seen.insert(img);
        }
        reps.push(s);
    }
    let mut out = Vec::new();
    for s in reps {
        let stab = group.stabilizer(&s)?;
        let mut covered: HashSet<Star> = HashSet::new();
        for tau in s.first_steps() {
            for t in partners(graph, &s, tau, caps.stars)? {
                if covered.contains(&t) {
                    continue;
                }
                for img in stab.orbit(&t)? {
                    covered.insert(img);
                }
                if out.len() >= caps.orbits {
                    return Err(StarError::CapExceeded {
                        what: "double-star orbits",
                        cap: caps.orbits,
                    });
                }
                out.push(theta_orbit(graph, group, &s, &t)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{NamedGroup, VertexAction};
    use crate::graph::catalog::{complete, odd_graph, DEFAULT_VERTEX_CAP};

    fn labels(rows: &[&[&str]]) -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    fn o4_s(g: &Graph) -> Star {
        Star::from_labels(
            g,
            3,
            &labels(&[
                &["123", "456", "127"],
                &["123", "456", "137"],
                &["123", "457", "126"],
                &["123", "457", "136"],
                &["123", "567", "124"],
                &["123", "567", "134"],
            ]),
        )
        .unwrap()
    }

    #[test]
    fn k5_star_orbit() {
        let g = complete(5, 10).unwrap();
        let x = NamedGroup::Alternating(5).closure(100).unwrap();
        let s = Star::from_labels(&g, 3, &labels(&[&["1", "5"], &["1", "4"], &["1", "3"]])).unwrap();
        let t = Star::from_labels(&g, 3, &labels(&[&["5", "1"], &["5", "2"], &["5", "3"]])).unwrap();
        assert_eq!(x.orbit(&s).unwrap().len(), 20);
        assert_eq!(s.branch(&g, 4).unwrap(), vec![vec![4]]);
        assert!(is_double_star(&g, &s, &t));
        assert!(!is_double_star(&g, &s, &s));
        let theta = theta_orbit(&g, &x, &s, &t).unwrap();
        assert!(theta.self_paired());
        assert!(theta.level() >= 1);
        assert_eq!(st_of(&theta).len(), 20);
    }

    #[test]
    fn o4_projection_residual_branch() {
        let g = odd_graph(4, DEFAULT_VERTEX_CAP).unwrap();
        let s = o4_s(&g);
        let v = |l: &str| g.vertex_by_label(l).unwrap();
        let s1 = s.project(1).unwrap();
        let expected: Vec<LArc> = vec![
            vec![v("123"), v("456")],
            vec![v("123"), v("457")],
            vec![v("123"), v("567")],
        ];
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(s1.arcs(), expected_sorted.as_slice());
        let res = s.residual(&[v("123"), v("456")]).unwrap();
        assert_eq!(res.len(), 2);
        assert!(s.residual(&[v("123"), v("124")]).is_err());
        let mut br = s.branch(&g, v("456")).unwrap();
        br.sort();
        let mut want = vec![
            vec![v("456"), v("127")],
            vec![v("456"), v("137")],
            vec![v("456"), v("123")],
        ];
        want.sort();
        assert_eq!(br, want);
    }

    #[test]
    fn deleting_a_row_breaks_the_star() {
        let g = odd_graph(4, DEFAULT_VERTEX_CAP).unwrap();
        let s = o4_s(&g);
        let mut arcs = s.arcs().to_vec();
        arcs.remove(0);
        assert!(!is_star(&g, s.center(), s.params(), &arcs));
    }

    #[test]
    fn layer_sizes_match_enumeration() {
        let g = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
        for l in 1..=3 {
            for s in stars_at(&g, 0, StarParams::new(l, 2), DEFAULT_STAR_CAP).unwrap() {
                for i in 0..=l {
                    assert_eq!(s.project(i).unwrap().len(), s.params().layer_size(i));
                }
            }
        }
    }

    #[test]
    fn enumeration_finds_k5_orbit() {
        let g = complete(5, 10).unwrap();
        let x = NamedGroup::Alternating(5).closure(100).unwrap();
        let orbits = enumerate_double_star_orbits(&g, &x, StarParams::new(1, 3), EnumerationCaps::default())
            .unwrap();
        assert!(!orbits.is_empty());
        assert!(orbits.iter().any(|o| o.is_x_symmetric() && o.len() == 60));
        let trivial = PermGroup::trivial(5);
        assert!(matches!(
            enumerate_double_star_orbits(&g, &trivial, StarParams::new(1, 3), EnumerationCaps::default()),
            Err(StarError::NotArcTransitive)
        ));
    }

    #[test]
    fn o3_lifted_group_is_used() {
        let g = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
        let act = VertexAction::new(&g, NamedGroup::Alternating(5).closure(100).unwrap()).unwrap();
        assert!(is_arc_transitive(&g, act.vertices()).unwrap());
    }
}
