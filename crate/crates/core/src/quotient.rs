//! Invariant partitions, quotient graphs, parameter vectors and the
//! refinement series B₀ > B₁ > ⋯ > B_m.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::construct::{self, ConstructError, DoubleStarGraph};
use crate::graph::{are_isomorphic, Graph, GraphError, Isomorphism, LArc, Vertex};
use crate::perm::{PermError, PermGroup, Permutation, PointSet};
use crate::report::Check;
use crate::stars::{theta_orbit, Star, StarError, StarParams, ThetaOrbit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("partition is not invariant: {0}")]
    NotInvariant(String),
    #[error("block {0} is not an independent set")]
    BlockNotIndependent(usize),
    #[error("the quotient graph has no edges")]
    EmptyQuotient,
    #[error("not a star of the quotient: {0}")]
    NotAQuotientStar(String),
    #[error("triple is not in 𝒢: {0}")]
    NotInScriptG(String),
    #[error("refinement level {0} has not been computed")]
    LevelNotComputed(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Star(#[from] StarError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Disjoint nonempty blocks covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<Vertex>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Blocks kept in the given order, each sorted.
    pub fn new(n: usize, mut blocks: Vec<Vec<Vertex>>) -> Result<Partition, QuotientError> {
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in blocks.iter_mut().enumerate() {
            if b.is_empty() {
                return Err(QuotientError::NotAPartition(format!("block {i} is empty")));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v >= n {
                    return Err(QuotientError::NotAPartition(format!("vertex {v} out of range")));
                }
                if block_of[v] != usize::MAX {
                    return Err(QuotientError::NotAPartition(format!("vertex {v} in two blocks")));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(QuotientError::NotAPartition(format!("vertex {v} uncovered")));
        }
        Ok(Partition { blocks, block_of })
    }

    /// Blocks sorted by their least vertex.
    pub fn canonical(n: usize, mut blocks: Vec<Vec<Vertex>>) -> Result<Partition, QuotientError> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        Partition::new(n, blocks)
    }

    /// `block_of[v]` names the block of `v`; block ids must be `0..k`.
    pub fn from_block_of(block_of: Vec<usize>) -> Result<Partition, QuotientError> {
        let k = block_of.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (v, &b) in block_of.iter().enumerate() {
            blocks[b].push(v);
        }
        Partition::new(block_of.len(), blocks)
    }

    pub fn singletons(n: usize) -> Partition {
        Partition {
            blocks: (0..n).map(|v| vec![v]).collect(),
            block_of: (0..n).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.block_of.len()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[Vertex] {
        &self.blocks[i]
    }

    pub fn block_of(&self, v: Vertex) -> usize {
        self.block_of[v]
    }

    /// Common block size, if uniform.
    pub fn block_size(&self) -> Option<usize> {
        let v = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == v).then_some(v)
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.blocks.iter().all(|b| {
            let c = coarser.block_of(b[0]);
            b.iter().all(|&v| coarser.block_of(v) == c)
        })
    }

    /// Same blocks, in any order.
    pub fn same_blocks(&self, other: &Partition) -> bool {
        let a: BTreeSet<&Vec<Vertex>> = self.blocks.iter().collect();
        let b: BTreeSet<&Vec<Vertex>> = other.blocks.iter().collect();
        a == b
    }

    /// The block permutation induced by `x`, if `x` maps blocks to blocks.
    pub fn block_image(&self, x: &Permutation) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let target = self.block_of[x.apply(b[0])];
            if self.blocks[target].len() != b.len()
                || b.iter().any(|&v| self.block_of[x.apply(v)] != target)
            {
                return None;
            }
            out.push(target);
        }
        Some(out)
    }

    pub fn is_invariant(&self, group: &PermGroup) -> bool {
        group.generators().iter().all(|x| self.block_image(x).is_some())
    }

    /// `self / finer`: the blocks of `finer` grouped by the block of `self`
    /// containing them, as a partition of `finer`'s block indices.
    pub fn over(&self, finer: &Partition) -> Result<Partition, QuotientError> {
        if !finer.refines(self) {
            return Err(QuotientError::NotAPartition("not a refinement".into()));
        }
        let block_of = finer.blocks.iter().map(|b| self.block_of(b[0])).collect();
        Partition::from_block_of(block_of)
    }

    pub fn point_sets(&self) -> Vec<PointSet> {
        self.blocks.iter().map(|b| PointSet(b.clone())).collect()
    }
}

/// The group acting on blocks; element order follows `group`, with repeats
/// from a kernel dropped.
pub fn induced_on_blocks(group: &PermGroup, p: &Partition) -> Result<PermGroup, QuotientError> {
    if !p.is_invariant(group) {
        return Err(QuotientError::NotInvariant("blocks are not permuted".into()));
    }
    Ok(group.induced(p.len(), |x| {
        Permutation::from_images(p.block_image(x).ok_or(PermError::NotClosed)?)
    })?)
}

/// (v, k, r, b, d) with `c`, the number of components of Γ[B, C].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamVector {
    pub v: usize,
    pub k: usize,
    pub r: usize,
    pub b: usize,
    pub d: usize,
    pub c: usize,
}

impl ParamVector {
    pub fn is_trivial(&self) -> bool {
        self.v == 1
    }

    pub fn is_multicover(&self) -> bool {
        self.v >= 2 && self.v == self.k
    }

    pub fn is_cover(&self) -> bool {
        self.is_multicover() && self.d == 1
    }

    /// Nontrivial and not a multicover.
    pub fn in_script_g(&self) -> bool {
        self.v >= 2 && self.k < self.v
    }
}

pub fn quotient_graph(g: &Graph, p: &Partition) -> Graph {
    let mut edges = BTreeSet::new();
    for (u, v) in g.edges() {
        let (a, b) = (p.block_of(u), p.block_of(v));
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
    Graph::from_edges(p.len(), &edges).expect("block edges are simple")
}

/// Γ[B, C]: the bipartite graph between `B ∩ Γ(C)` and `Γ(B) ∩ C`, as a
/// subgraph on its own vertices.
pub fn cross_graph(g: &Graph, p: &Partition, b: usize, c: usize) -> (Vec<Vertex>, Graph) {
    let touches = |v: Vertex, other: usize| g.neighbors(v).iter().any(|&w| p.block_of(w) == other);
    let mut verts: Vec<Vertex> = p.block(b).iter().copied().filter(|&v| touches(v, c)).collect();
    verts.extend(p.block(c).iter().copied().filter(|&v| touches(v, b)));
    verts.sort_unstable();
    let sub = g.induced_subgraph(&verts);
    (verts, sub)
}

/// The parameter vector, checked to be the same at every vertex and every
/// quotient arc.
pub fn params(g: &Graph, group: &PermGroup, p: &Partition) -> Result<ParamVector, QuotientError> {
    if !p.is_invariant(group) {
        return Err(QuotientError::NotInvariant("blocks are not permuted".into()));
    }
    let q = quotient_graph(g, p);
    if q.edge_count() == 0 {
        return Err(QuotientError::EmptyQuotient);
    }
    for (u, v) in g.edges() {
        if p.block_of(u) == p.block_of(v) {
            return Err(QuotientError::BlockNotIndependent(p.block_of(u)));
        }
    }
    let uneven = |what: &str| QuotientError::NotInvariant(format!("{what} is not constant"));
    let v = p.block_size().ok_or_else(|| uneven("block size"))?;
    let b = q.valency().ok_or_else(|| uneven("quotient valency"))?;
    let mut r = None;
    for s in 0..g.vertex_count() {
        let blocks: BTreeSet<usize> = g.neighbors(s).iter().map(|&w| p.block_of(w)).collect();
        if *r.get_or_insert(blocks.len()) != blocks.len() {
            return Err(uneven("r"));
        }
    }
    let mut kdc = None;
    for (x, y) in q.edges() {
        for (bb, cc) in [(x, y), (y, x)] {
            let (verts, sub) = cross_graph(g, p, bb, cc);
            let k = verts.iter().filter(|&&w| p.block_of(w) == cc).count();
            let d = sub.valency().ok_or_else(|| uneven("d"))?;
            let c = sub.components().count();
            if *kdc.get_or_insert((k, d, c)) != (k, d, c) {
                return Err(uneven("(k, d, c)"));
            }
        }
    }
    let (k, d, c) = kdc.expect("quotient has an arc");
    Ok(ParamVector {
        v,
        k,
        r: r.unwrap_or(0),
        b,
        d,
        c,
    })
}

/// Nontrivial, nonempty quotient, not a multicover.
pub fn in_script_g(g: &Graph, group: &PermGroup, p: &Partition) -> Result<bool, QuotientError> {
    match params(g, group, p) {
        Ok(pv) => Ok(pv.in_script_g()),
        Err(QuotientError::EmptyQuotient) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Γ_B[σ]: the quotient arcs from the block of σ to blocks holding its
/// neighbors, as a star of Γ_B.
pub fn quotient_star(g: &Graph, p: &Partition, sigma: Vertex) -> Star {
    let b = p.block_of(sigma);
    let arcs: Vec<LArc> = g
        .neighbors(sigma)
        .iter()
        .map(|&w| p.block_of(w))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(|c| vec![b, c])
        .collect();
    Star::from_arcs(b, StarParams::new(1, arcs.len()), arcs)
}

/// 𝔠_Γ(S) = ⋂ over (B, C) ∈ S of B ∩ Γ(C).
pub fn center_intersection(g: &Graph, p: &Partition, star: &Star) -> Result<Vec<Vertex>, QuotientError> {
    let bad = |m: &str| QuotientError::NotAQuotientStar(m.to_string());
    if star.params().l != 1 || star.is_empty() {
        return Err(bad("needs a nonempty star of length 1"));
    }
    let b = star.center();
    if b >= p.len() {
        return Err(bad("center is not a block"));
    }
    let mut out: Vec<Vertex> = p.block(b).to_vec();
    for arc in star.arcs() {
        let c = arc[1];
        if arc[0] != b || c >= p.len() || c == b {
            return Err(bad("arc does not leave the center block"));
        }
        let meets: Vec<Vertex> = p
            .block(b)
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().any(|&w| p.block_of(w) == c))
            .collect();
        if meets.is_empty() {
            return Err(bad("arc is not an arc of the quotient"));
        }
        out.retain(|v| meets.binary_search(v).is_ok());
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RefineCase {
    /// `v₁ = k₁ = 1`.
    A,
    /// `v₁ = k₁ ≥ 2`.
    B,
    /// `v₁ > k₁`.
    C,
}

#[derive(Clone, Debug)]
pub struct Refinement {
    pub partition: Partition,
    pub params: ParamVector,
    pub refined: ParamVector,
    pub case: RefineCase,
    pub checks: Vec<Check>,
}

/// B₁ = {𝔠_Γ(Γ_B[τ]) | τ ∈ V(Γ)} with its divisibility checks.
pub fn refine_once(g: &Graph, group: &PermGroup, p: &Partition) -> Result<Refinement, QuotientError> {
    let pv = params(g, group, p)?;
    if !pv.in_script_g() {
        return Err(QuotientError::NotInScriptG(format!("{pv:?}")));
    }
    let mut sets = BTreeSet::new();
    for tau in 0..g.vertex_count() {
        sets.insert(center_intersection(g, p, &quotient_star(g, p, tau))?);
    }
    let b1 = Partition::canonical(g.vertex_count(), sets.into_iter().collect())?;
    let p1 = params(g, group, &b1)?;
    let case = if p1.v == 1 && p1.k == 1 {
        RefineCase::A
    } else if p1.v == p1.k {
        RefineCase::B
    } else {
        RefineCase::C
    };
    let val = g.valency().unwrap_or(0);
    let gvk = gcd(pv.v, pv.k);
    let checks = vec![
        Check::new(
            "B > B1",
            b1.refines(p) && b1.len() > p.len(),
            format!("{} blocks to {}", p.len(), b1.len()),
        ),
        Check::new(
            "v1 | gcd(v, k)",
            gvk.is_multiple_of(p1.v),
            format!("v1 = {}, gcd = {gvk}", p1.v),
        ),
        Check::new(
            "r | gcd(r1, b1)",
            gcd(p1.r, p1.b).is_multiple_of(pv.r),
            format!("r = {}, r1 = {}, b1 = {}", pv.r, p1.r, p1.b),
        ),
        Check::new("d1 | d", pv.d % p1.d == 0, format!("d = {}, d1 = {}", pv.d, p1.d)),
        Check::new(
            "v1 r1 = b1 k1",
            p1.v * p1.r == p1.b * p1.k,
            format!("{} = {}", p1.v * p1.r, p1.b * p1.k),
        ),
        Check::new(
            "r1 d1 = r d = val",
            p1.r * p1.d == pv.r * pv.d && pv.r * pv.d == val,
            format!("{} {} {val}", p1.r * p1.d, pv.r * pv.d),
        ),
    ];
    Ok(Refinement {
        partition: b1,
        params: pv,
        refined: p1,
        case,
        checks,
    })
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Σ nᵢ for `n = ∏ pᵢ^nᵢ`.
pub fn prime_exponent_sum(mut n: usize) -> usize {
    let mut total = 0;
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            n /= p;
            total += 1;
        }
        p += 1;
    }
    if n > 1 {
        total += 1;
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Terminal {
    /// B_m is trivial.
    Trivial,
    /// Γ is a multicover of Γ_{B_m}.
    Multicover,
}

#[derive(Clone, Copy, Debug)]
pub struct SeriesOptions {
    pub iso_cap: usize,
    /// Compare Γ_{B_{i+1}} with Π(Γ_{B_i}, Θ_{(i,i+1)}) at every level.
    pub check_isomorphisms: bool,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            iso_cap: crate::graph::DEFAULT_ISO_CAP,
            check_isomorphisms: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Level {
    pub partition: Partition,
    pub params: ParamVector,
}

#[derive(Clone, Debug)]
pub struct RefinementSeries {
    /// B₀, …, B_m.
    pub levels: Vec<Level>,
    pub m: usize,
    pub terminal: Terminal,
    /// Largest `1 ≤ h ≤ m` with `d_{h-1} = d`.
    pub h: usize,
    /// Σ nᵢ + 1 for gcd(v, k).
    pub bound: usize,
    pub checks: Vec<Check>,
}

impl RefinementSeries {
    /// B_i, with B_i = B_m past the end.
    pub fn partition(&self, i: usize) -> &Partition {
        &self.levels[i.min(self.m)].partition
    }

    pub fn params(&self, i: usize) -> &ParamVector {
        &self.levels[i.min(self.m)].params
    }
}

/// The double-star orbit Θ on a quotient Γ_B with the group acting there.
#[derive(Clone, Debug)]
pub struct LevelTheta {
    pub quotient: Graph,
    pub group: PermGroup,
    pub theta: ThetaOrbit,
    /// Γ_B[τ] for every vertex τ of Γ.
    pub stars: Vec<Star>,
    /// Θ equals {(Γ_B[τ], Γ_B[σ]) | (τ, σ) ∈ Arc(Γ)}.
    pub covers_all_arcs: bool,
}

pub fn level_theta(g: &Graph, group: &PermGroup, p: &Partition) -> Result<LevelTheta, QuotientError> {
    let quotient = quotient_graph(g, p);
    let induced = induced_on_blocks(group, p)?;
    let stars: Vec<Star> = (0..g.vertex_count()).map(|t| quotient_star(g, p, t)).collect();
    theta_from_arcs(g, quotient, induced, stars)
}

fn theta_from_arcs(
    g: &Graph,
    quotient: Graph,
    group: PermGroup,
    stars: Vec<Star>,
) -> Result<LevelTheta, QuotientError> {
    let (a, b) = *g.edges().first().ok_or(QuotientError::EmptyQuotient)?;
    let theta = theta_orbit(&quotient, &group, &stars[a], &stars[b])?;
    let mut pairs = BTreeSet::new();
    for (u, v) in g.edges() {
        pairs.insert((stars[u].clone(), stars[v].clone()));
        pairs.insert((stars[v].clone(), stars[u].clone()));
    }
    let covers_all_arcs = pairs.len() == theta.len() && pairs.iter().all(|pr| theta.contains(pr));
    Ok(LevelTheta {
        quotient,
        group,
        theta,
        stars,
        covers_all_arcs,
    })
}

/// Iterates `refine_once` from `p` until B_m is trivial or a multicover
/// quotient, checking every arithmetic and structural identity on the way.
pub fn refinement_series(
    g: &Graph,
    group: &PermGroup,
    p: &Partition,
    opts: SeriesOptions,
) -> Result<RefinementSeries, QuotientError> {
    let p0 = params(g, group, p)?;
    if !p0.in_script_g() {
        return Err(QuotientError::NotInScriptG(format!("{p0:?}")));
    }
    let mut levels = vec![Level {
        partition: p.clone(),
        params: p0,
    }];
    let mut checks = Vec::new();
    let terminal = loop {
        let i = levels.len() - 1;
        let step = refine_once(g, group, &levels[i].partition)?;
        for c in step.checks {
            checks.push(Check {
                name: format!("level {i}: {}", c.name),
                ..c
            });
        }
        levels.push(Level {
            partition: step.partition,
            params: step.refined,
        });
        match step.case {
            RefineCase::A => break Terminal::Trivial,
            RefineCase::B => break Terminal::Multicover,
            RefineCase::C if levels.len() > g.vertex_count() => {
                return Err(QuotientError::HypothesisViolated("series does not terminate".into()))
            }
            RefineCase::C => {}
        }
    };
    let m = levels.len() - 1;
    let val = g.valency().unwrap_or(0);
    let bound = prime_exponent_sum(gcd(p0.v, p0.k)) + 1;
    checks.push(Check::new(
        "1 <= m <= Σn_i + 1",
        (1..=bound).contains(&m),
        format!("m = {m}, gcd(v, k) = {}, bound = {bound}", gcd(p0.v, p0.k)),
    ));
    for (i, lv) in levels.iter().enumerate() {
        let q = lv.params;
        checks.push(Check::new(
            format!("level {i}: v r = k b and r d = val"),
            q.v * q.r == q.k * q.b && q.r * q.d == val,
            format!("{q:?}"),
        ));
        if i < m {
            checks.push(Check::new(
                format!("level {i}: in 𝒢 with 1 <= k <= v - 1"),
                q.in_script_g() && q.k >= 1,
                format!("v = {}, k = {}", q.v, q.k),
            ));
            let n = levels[i + 1].params;
            checks.push(Check::new(
                format!("level {i}: v_(i+1) | v_i"),
                q.v % n.v == 0 && n.v < q.v,
                format!("{} then {}", q.v, n.v),
            ));
        }
    }
    for j in 1..=m {
        let qj = quotient_graph(g, &levels[j].partition);
        let xj = induced_on_blocks(group, &levels[j].partition)?;
        for i in 0..j {
            let pij = levels[i].partition.over(&levels[j].partition)?;
            let (a, b) = (levels[i].params, levels[j].params);
            let want = (a.v / b.v, a.k / b.v, a.r, a.b, b.b / a.r);
            let ok = match params(&qj, &xj, &pij) {
                Ok(got) => {
                    (got.v, got.k, got.r, got.b, got.d) == want
                        && a.v % b.v == 0
                        && a.k % b.v == 0
                        && b.b % a.r == 0
                        && got.in_script_g()
                }
                Err(_) => false,
            };
            checks.push(Check::new(
                format!("(Γ_B{j}, X, B{i}/B{j}) parameters"),
                ok,
                format!("expected {want:?}"),
            ));
        }
    }
    if opts.check_isomorphisms {
        for i in 0..m {
            let lt = level_theta(g, group, &levels[i].partition)?;
            checks.push(Check::new(
                format!("level {i}: Θ is an X-symmetric orbit over all arcs"),
                lt.covers_all_arcs && lt.theta.is_x_symmetric(),
                format!("|Θ| = {}", lt.theta.len()),
            ));
            let pi = construct::double_star_graph(&lt.quotient, &lt.theta)?;
            let target = quotient_graph(g, &levels[i + 1].partition);
            let iso = are_isomorphic(pi.graph(), &target, opts.iso_cap)?;
            checks.push(Check::new(
                format!("level {i}: Γ_B{} ≅ Π(Γ_B{i}, Θ)", i + 1),
                iso.is_some(),
                format!("{} vertices", target.vertex_count()),
            ));
        }
    }
    let kernel = |part: &Partition| group.kernel_on(&part.point_sets());
    let kernels: Vec<PermGroup> = levels
        .iter()
        .map(|lv| kernel(&lv.partition))
        .collect::<Result<_, _>>()?;
    let faithful_ok = match terminal {
        Terminal::Trivial => {
            let kv = kernel(&Partition::singletons(g.vertex_count()))?;
            kernels.iter().all(|k| *k == kv)
        }
        Terminal::Multicover => kernels.iter().all(|k| *k == kernels[0]),
    };
    checks.push(Check::new(
        "kernels agree across levels",
        faithful_ok,
        format!(
            "kernel orders {:?}",
            kernels.iter().map(PermGroup::order).collect::<Vec<_>>()
        ),
    ));
    let d0 = p0.d;
    let h = (1..=m).rev().find(|&h| levels[h - 1].params.d == d0).unwrap_or(1);
    Ok(RefinementSeries {
        levels,
        m,
        terminal,
        h,
        bound,
        checks,
    })
}

/// Arc_i(Γ_B, σ): images of the i-arcs of Γ from σ that stay i-arcs of Γ_B.
pub fn block_arcs(g: &Graph, p: &Partition, sigma: Vertex, i: usize) -> Result<Vec<LArc>, QuotientError> {
    let mut out = BTreeSet::new();
    for arc in g.l_arcs_from(i, sigma)? {
        let img: LArc = arc.iter().map(|&v| p.block_of(v)).collect();
        if img.windows(3).all(|w| w[0] != w[2]) {
            out.insert(img);
        }
    }
    Ok(out.into_iter().collect())
}

fn block_arcs_image(p: &Partition, arcs: &[LArc], x: &Permutation) -> Option<Vec<LArc>> {
    let perm = p.block_image(x)?;
    let mut out: Vec<LArc> = arcs
        .iter()
        .map(|a| a.iter().map(|&b| perm[b]).collect())
        .collect();
    out.sort();
    Some(out)
}

/// Equality of Arc_i(Γ_{B_j}, ·) against blocks of B_{i+j}, and the
/// matching stabilizers, for `i ≤ max_i` and every level `j`.
pub fn block_arc_checks(
    g: &Graph,
    group: &PermGroup,
    series: &RefinementSeries,
    max_i: usize,
) -> Result<Vec<Check>, QuotientError> {
    let mut checks = Vec::new();
    let base = 0;
    for j in 0..=series.m {
        let pj = series.partition(j);
        for i in 0..=max_i {
            let target = series.partition(i + j);
            let a0 = block_arcs(g, pj, base, i)?;
            let mut ok = true;
            for iota in 0..g.vertex_count() {
                let same = block_arcs(g, pj, iota, i)? == a0;
                ok &= same == (target.block_of(iota) == target.block_of(base));
            }
            let block = PointSet(target.block(target.block_of(base)).to_vec());
            let stab_block = group.stabilizer(&block)?;
            let stab_arcs: Vec<&Permutation> = group
                .elements()
                .iter()
                .filter(|x| block_arcs_image(pj, &a0, x).as_deref() == Some(&a0[..]))
                .collect();
            let stab_ok = stab_arcs.len() == stab_block.order()
                && stab_arcs.iter().all(|x| stab_block.contains(x));
            checks.push(Check::new(
                format!("Arc_{i}(Γ_B{j}, ·) separates B{} blocks", i + j),
                ok && stab_ok,
                format!("|stabilizer| = {}", stab_block.order()),
            ));
        }
    }
    Ok(checks)
}

/// For `j ≥ 1` with `d_{j-1} = d`: a cross arc (ι, γ) of Γ[B(σ), B(τ)] with
/// ι ∈ B_j(σ) has γ ∈ B_{j-1}(τ).
pub fn block_valency_checks(g: &Graph, series: &RefinementSeries) -> Vec<Check> {
    let b0 = series.partition(0);
    let d = series.params(0).d;
    let mut checks = Vec::new();
    for j in 1..=series.m {
        if series.params(j - 1).d != d {
            continue;
        }
        let (bj, bj1) = (series.partition(j), series.partition(j - 1));
        let mut ok = true;
        for sigma in 0..g.vertex_count() {
            for &tau in g.neighbors(sigma) {
                for &iota in bj.block(bj.block_of(sigma)) {
                    for &gamma in g.neighbors(iota) {
                        if b0.block_of(gamma) == b0.block_of(tau) {
                            ok &= bj1.block_of(gamma) == bj1.block_of(tau);
                        }
                    }
                }
            }
        }
        checks.push(Check::new(
            format!("cross arcs from B{j}(σ) land in B{}(τ)", j - 1),
            ok,
            "",
        ));
    }
    checks
}

fn cross_components(g: &Graph, p: &Partition, s: Vertex, t: Vertex) -> BTreeSet<Vec<Vertex>> {
    let (verts, sub) = cross_graph(g, p, p.block_of(s), p.block_of(t));
    sub.components()
        .components
        .iter()
        .map(|c| {
            let mut vs: Vec<Vertex> = c.iter().map(|&i| verts[i]).collect();
            vs.sort_unstable();
            vs
        })
        .collect()
}

/// Com(Γ[B_i(σ), B_i(τ)]) ⊋ Com(Γ[B_{i+1}(σ), B_{i+1}(τ)]) for
/// `i + 1 ≤ h - 1`, over every edge.
pub fn component_nesting_check(g: &Graph, series: &RefinementSeries) -> Check {
    let mut ok = true;
    for (s, t) in g.edges() {
        for i in 0..series.h.saturating_sub(1) {
            let outer = cross_components(g, series.partition(i), s, t);
            let inner = cross_components(g, series.partition(i + 1), s, t);
            ok &= inner.is_subset(&outer) && inner.len() < outer.len();
        }
    }
    Check::new("component nesting through h-1", ok, format!("h = {}", series.h))
}

/// A double-star graph rebuilt from Γ and B, compared with its target.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub l: usize,
    pub theta: ThetaOrbit,
    pub pi: DoubleStarGraph,
    pub target: Graph,
    pub isomorphism: Option<Isomorphism>,
    pub checks: Vec<Check>,
}

/// `s = 1`: Θ from the stars Γ_B[σ], compared with Γ_{B₁}.
/// `s ≥ 2`: Θ from Arc_l(Γ_B, σ) with `l = max(s, m)`, compared with
/// Γ_{B_m}; needs `r ≥ 2`, `d = 1` and Γ (X, s)-arc-transitive.
pub fn reconstruct(
    g: &Graph,
    group: &PermGroup,
    p: &Partition,
    s: usize,
    iso_cap: usize,
) -> Result<Reconstruction, QuotientError> {
    let opts = SeriesOptions {
        iso_cap,
        check_isomorphisms: false,
    };
    let series = refinement_series(g, group, p, opts)?;
    let mut checks = Vec::new();
    let (l, lt, target) = if s <= 1 {
        let lt = level_theta(g, group, p)?;
        (1, lt, quotient_graph(g, series.partition(1)))
    } else {
        let pv = series.params(0);
        if pv.r < 2 || pv.d != 1 {
            return Err(QuotientError::HypothesisViolated(format!(
                "needs r >= 2 and d = 1, got r = {} and d = {}",
                pv.r, pv.d
            )));
        }
        if !construct::is_s_arc_transitive(g, group, s)? {
            return Err(QuotientError::HypothesisViolated(format!(
                "Γ is not (X, {s})-arc-transitive"
            )));
        }
        let l = s.max(series.m);
        let quotient = quotient_graph(g, p);
        let induced = induced_on_blocks(group, p)?;
        let stars = (0..g.vertex_count())
            .map(|v| {
                Ok(Star::new(
                    &quotient,
                    p.block_of(v),
                    StarParams::new(l, pv.r),
                    block_arcs(g, p, v, l)?,
                )?)
            })
            .collect::<Result<Vec<_>, QuotientError>>()?;
        let lt = theta_from_arcs(g, quotient, induced, stars)?;
        let rep = lt.theta.representative();
        let eq = construct::stabilizer_equality(&lt.group, &rep.left, &rep.right)?;
        checks.push(Check::new("X_S ∩ X_B(τ) = X_T ∩ X_B(σ)", eq, ""));
        checks.push(Check::new(
            "Θ is (X, s)-arc-transitive",
            lt.theta.level() >= s,
            format!("level {}", lt.theta.level()),
        ));
        (l, lt, quotient_graph(g, series.partition(series.m)))
    };
    checks.push(Check::new(
        "Θ covers every arc and is self-paired",
        lt.covers_all_arcs && lt.theta.self_paired(),
        format!("|Θ| = {}", lt.theta.len()),
    ));
    let pi = construct::double_star_graph(&lt.quotient, &lt.theta)?;
    let isomorphism = are_isomorphic(pi.graph(), &target, iso_cap)?;
    checks.push(Check::new(
        "Π is isomorphic to the target quotient",
        isomorphism.is_some(),
        format!("{} vertices", target.vertex_count()),
    ));
    Ok(Reconstruction {
        l,
        theta: lt.theta,
        pi,
        target,
        isomorphism,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::NamedGroup;
    use crate::graph::catalog::{cycle, odd_graph, DEFAULT_VERTEX_CAP};

    #[test]
    fn singletons_quotient_is_the_graph() {
        let g = cycle(6, 10).unwrap();
        let q = quotient_graph(&g, &Partition::singletons(6));
        assert_eq!(q.edges(), g.edges());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        let p = Partition::from_block_of(vec![1, 0, 1]).unwrap();
        assert_eq!(p.block(1), &[0, 2]);
    }

    #[test]
    fn double_cover_fibres_are_a_cover() {
        let pet = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
        let d = pet.bipartite_double_cover();
        let fibres = Partition::from_block_of((0..20).map(|v| v / 2).collect()).unwrap();
        let x = PermGroup::closure(
            20,
            NamedGroup::Alternating(5)
                .closure(100)
                .unwrap()
                .generators()
                .iter()
                .map(|g| {
                    let a = crate::action::VertexAction::new(&pet, PermGroup::closure(5, vec![g.clone()], 100).unwrap())
                        .unwrap();
                    let v = a.vertex_form(g).unwrap().clone();
                    Permutation::from_images((0..20).map(|w| 2 * v.apply(w / 2) + w % 2).collect()).unwrap()
                })
                .collect(),
            10_000,
        )
        .unwrap();
        let pv = params(&d, &x, &fibres).unwrap();
        assert_eq!((pv.v, pv.k, pv.d), (2, 2, 1));
        assert!(pv.is_cover());
        assert!(!in_script_g(&d, &x, &fibres).unwrap());
    }

    #[test]
    fn cycle_residues_are_covers() {
        let g = cycle(10, 20).unwrap();
        let x = NamedGroup::Dihedral(10).closure(100).unwrap();
        let p = Partition::from_block_of((0..10).map(|v| v % 5).collect()).unwrap();
        let pv = params(&g, &x, &p).unwrap();
        assert_eq!((pv.v, pv.k, pv.r, pv.b, pv.d), (2, 2, 2, 2, 1));
        assert!(pv.is_cover());
        assert!(matches!(
            refinement_series(&g, &x, &p, SeriesOptions::default()),
            Err(QuotientError::NotInScriptG(_))
        ));
    }

    #[test]
    fn adjacent_pairs_are_rejected() {
        let g = cycle(6, 20).unwrap();
        let x = NamedGroup::Cyclic(6).closure(100).unwrap();
        let p = Partition::from_block_of(vec![0, 0, 1, 1, 2, 2]).unwrap();
        assert!(params(&g, &x, &p).is_err());
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(prime_exponent_sum(1), 0);
        assert_eq!(prime_exponent_sum(4), 2);
        assert_eq!(prime_exponent_sum(12), 3);
        assert_eq!(gcd(12, 18), 6);
    }
}
