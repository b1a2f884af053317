//! Double-star graphs Π(Σ, Θ), star growth, stabilizer chains and coset
//! graphs.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{are_isomorphic, Graph, GraphError, Isomorphism, LArc, Vertex};
use crate::perm::{Action, PermError, PermGroup, Permutation, Tuple};
use crate::quotient::{self, Partition, QuotientError, SeriesOptions, Terminal};
use crate::report::Check;
use crate::stars::{st_of, theta_orbit, Star, StarError, StarParams, ThetaOrbit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("the double-star orbit is not self-paired")]
    NotSelfPaired,
    #[error("the double-star orbit is not (X,1)-arc-transitive")]
    NotArcTransitiveOrbit,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("growing stars needs r >= 2")]
    RTooSmall,
    #[error("the star is not a vertex of the double-star graph")]
    NotInOrbit,
    #[error("G is not a subgroup of X")]
    NotSubgroup,
    #[error("improper coset data: {0}")]
    ImproperSubgroup(String),
    #[error("GzG differs from Gz^-1G")]
    AsymmetricDoubleCoset,
    #[error(transparent)]
    Star(#[from] StarError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Π(Σ, Θ) together with its stars, its center partition and the action of
/// X on its vertices.
#[derive(Clone, Debug)]
pub struct DoubleStarGraph {
    base: Graph,
    graph: Graph,
    stars: Vec<Star>,
    theta: ThetaOrbit,
    action: PermGroup,
    partition: Partition,
}

impl DoubleStarGraph {
    /// Σ.
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Π.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Star at each vertex of Π.
    pub fn stars(&self) -> &[Star] {
        &self.stars
    }

    pub fn index_of(&self, star: &Star) -> Option<Vertex> {
        self.stars.binary_search(star).ok()
    }

    pub fn theta(&self) -> &ThetaOrbit {
        &self.theta
    }

    /// X on V(Π); element `i` is induced by element `i` of the group of Θ.
    pub fn action(&self) -> &PermGroup {
        &self.action
    }

    /// 𝒮: block `σ` holds the stars centered at `σ`.
    pub fn center_partition(&self) -> &Partition {
        &self.partition
    }

    /// `{T ∈ St(Θ) | T(i) = S(i)}` as a partition of V(Π).
    pub fn projection_partition(&self, i: usize) -> Result<Partition, ConstructError> {
        let mut key: HashMap<Star, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(self.stars.len());
        for s in &self.stars {
            let p = s.project(i)?;
            let next = key.len();
            block_of.push(*key.entry(p).or_insert(next));
        }
        Partition::from_block_of(block_of)
            .map_err(|e| ConstructError::HypothesisViolated(e.to_string()))
    }
}

/// Builds Π(Σ, Θ) for an X-symmetric orbit Θ.
pub fn double_star_graph(base: &Graph, theta: &ThetaOrbit) -> Result<DoubleStarGraph, ConstructError> {
    if !theta.self_paired() {
        return Err(ConstructError::NotSelfPaired);
    }
    if theta.level() < 1 {
        return Err(ConstructError::NotArcTransitiveOrbit);
    }
    let stars = st_of(theta);
    let index = |s: &Star| stars.binary_search(s).expect("member star is in St");
    let mut edges = BTreeSet::new();
    for (l, r) in theta.members() {
        let (a, b) = (index(l), index(r));
        edges.insert((a.min(b), a.max(b)));
    }
    let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
    let mut seen_in_block: HashMap<Vertex, usize> = HashMap::new();
    let labels: Vec<String> = stars
        .iter()
        .map(|s| {
            let k = seen_in_block.entry(s.center()).or_default();
            *k += 1;
            format!("{}:{}", base.label(s.center()), *k)
        })
        .collect();
    let graph = Graph::from_edges(stars.len(), &edges)?.with_labels(labels)?;
    let n = stars.len();
    let action = theta.group().induced(n, |x| {
        let images = stars
            .iter()
            .map(|s| stars.binary_search(&s.act(x)).map_err(|_| PermError::NotClosed))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::from_images(images)
    })?;
    let centers: Vec<usize> = stars.iter().map(|s| s.center()).collect();
    let covered: HashSet<usize> = centers.iter().copied().collect();
    if covered.len() != base.vertex_count() {
        return Err(ConstructError::HypothesisViolated(
            "St(Θ) does not meet every vertex of Σ".into(),
        ));
    }
    let partition = Partition::from_block_of(centers)
        .map_err(|e| ConstructError::HypothesisViolated(e.to_string()))?;
    Ok(DoubleStarGraph {
        base: base.clone(),
        graph,
        stars,
        theta: theta.clone(),
        action,
        partition,
    })
}

/// Θ⁺(S), Θ⁻(S) and the grown arc sets Θ⁺[S], Θ⁻[S].
#[derive(Clone, Debug)]
pub struct GrowthResult {
    pub star: Star,
    pub theta_plus: Vec<Star>,
    pub theta_minus: Vec<Star>,
    pub extended_plus: Vec<LArc>,
    pub extended_minus: Vec<LArc>,
    pub plus_is_star: bool,
    pub minus_is_star: bool,
    /// Some `T ∈ Θ±(S)` has `X_S ∩ X_τ = X_T ∩ X_σ`.
    pub criterion: bool,
    pub criterion_partner: Option<Star>,
}

impl GrowthResult {
    /// Θ⁺[S] as a star when it is one.
    pub fn grown_plus(&self) -> Option<Star> {
        self.plus_is_star.then(|| self.as_star(&self.extended_plus))
    }

    /// Θ⁻[S] as a star when it is one.
    pub fn grown_minus(&self) -> Option<Star> {
        self.minus_is_star.then(|| self.as_star(&self.extended_minus))
    }

    fn as_star(&self, arcs: &[LArc]) -> Star {
        let p = self.star.params();
        Star::from_arcs(
            self.star.center(),
            StarParams::new(p.l + 1, p.r),
            arcs.to_vec(),
        )
    }
}

pub fn grow(base: &Graph, theta: &ThetaOrbit, s: &Star) -> Result<GrowthResult, ConstructError> {
    let params = s.params();
    if params.r < 2 {
        return Err(ConstructError::RTooSmall);
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (l, r) in theta.members() {
        if l == s {
            plus.push(r.clone());
        }
        if r == s {
            minus.push(l.clone());
        }
    }
    if plus.is_empty() && minus.is_empty() {
        return Err(ConstructError::NotInOrbit);
    }
    plus.sort();
    plus.dedup();
    minus.sort();
    minus.dedup();
    let extended_plus = extend(base, s, &plus);
    let extended_minus = extend(base, s, &minus);
    let grown = |arcs: &[LArc]| {
        Star::new(
            base,
            s.center(),
            StarParams::new(params.l + 1, params.r),
            arcs.to_vec(),
        )
        .is_ok()
    };
    let group = theta.group();
    let mut criterion_partner = None;
    for t in plus.iter().chain(&minus) {
        if stabilizer_equality(group, s, t)? {
            criterion_partner = Some(t.clone());
            break;
        }
    }
    Ok(GrowthResult {
        star: s.clone(),
        plus_is_star: grown(&extended_plus),
        minus_is_star: grown(&extended_minus),
        theta_plus: plus,
        theta_minus: minus,
        extended_plus,
        extended_minus,
        criterion: criterion_partner.is_some(),
        criterion_partner,
    })
}

/// `X_S ∩ X_τ = X_T ∩ X_σ` where σ, τ are the centers of S, T.
pub fn stabilizer_equality(group: &PermGroup, s: &Star, t: &Star) -> Result<bool, ConstructError> {
    let left = group.stabilizer(s)?.stabilizer(&t.center())?;
    let right = group.stabilizer(t)?.stabilizer(&s.center())?;
    Ok(left == right)
}

fn extend(base: &Graph, s: &Star, partners: &[Star]) -> Vec<LArc> {
    let l = s.params().l;
    let mut out = BTreeSet::new();
    for t in partners {
        for a in s.arcs().iter().filter(|a| a[1] == t.center()) {
            for b in t.arcs().iter().filter(|b| b[..l] == a[1..]) {
                let mut arc = a.clone();
                arc.push(b[l]);
                if base.is_l_arc(&arc) {
                    out.insert(arc);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Θ² from Θ: the orbit of `(Θ⁺[S], Θ⁻[T])`, or `None` when growth fails.
pub fn grow_orbit(base: &Graph, theta: &ThetaOrbit) -> Result<Option<ThetaOrbit>, ConstructError> {
    let rep = theta.representative();
    let gs = grow(base, theta, &rep.left)?;
    let gt = grow(base, theta, &rep.right)?;
    match (gs.grown_plus(), gt.grown_minus()) {
        (Some(s), Some(t)) => Ok(Some(theta_orbit(base, theta.group(), &s, &t)?)),
        _ => Ok(None),
    }
}

/// `|X_{S(i)}|` for `i = 0..=l` and the index where the chain settles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerChain {
    pub orders: Vec<usize>,
    pub h: usize,
    /// `X_{S(i)} ∩ X_τ = X_{T(i)} ∩ X_σ` for `i = 1..=l`.
    pub criterion: Vec<bool>,
}

impl StabilizerChain {
    /// Strictly decreasing through `h`, constant after, and `X_S > 1`.
    pub fn is_well_formed(&self) -> bool {
        let strict = self.orders[..=self.h].windows(2).all(|w| w[0] > w[1]);
        let flat = self.orders[self.h..].windows(2).all(|w| w[0] == w[1]);
        strict && flat && *self.orders.last().unwrap() > 1
    }
}

pub fn stabilizer_chain(base: &Graph, theta: &ThetaOrbit) -> Result<StabilizerChain, ConstructError> {
    let b = base
        .valency()
        .ok_or_else(|| ConstructError::HypothesisViolated("Σ is not regular".into()))?;
    let StarParams { l, r } = theta.params();
    if b < 3 || r < 2 {
        return Err(ConstructError::HypothesisViolated(format!(
            "needs valency >= 3 and r >= 2, got valency {b} and r = {r}"
        )));
    }
    let group = theta.group();
    let rep = theta.representative();
    let (s, t) = (&rep.left, &rep.right);
    let chain: Vec<PermGroup> = (0..=l)
        .map(|i| Ok(group.stabilizer(&s.project(i)?)?))
        .collect::<Result<_, ConstructError>>()?;
    let last = &chain[l];
    let h = (1..=l).find(|&i| chain[i] == *last).unwrap_or(l);
    let criterion = (1..=l)
        .map(|i| stabilizer_equality(group, &s.project(i)?, &t.project(i)?))
        .collect::<Result<_, _>>()?;
    Ok(StabilizerChain {
        orders: chain.iter().map(PermGroup::order).collect(),
        h,
        criterion,
    })
}

/// Θ(i): the orbit of `(S(i), T(i))`.
pub fn truncate(base: &Graph, theta: &ThetaOrbit, i: usize) -> Result<ThetaOrbit, ConstructError> {
    let l = theta.params().l;
    if i == 0 || i > l {
        return Err(StarError::IndexOutOfRange { index: i, l }.into());
    }
    let rep = theta.representative();
    Ok(theta_orbit(
        base,
        theta.group(),
        &rep.left.project(i)?,
        &rep.right.project(i)?,
    )?)
}

/// Cos(X, G, GzG) on right cosets `Gx`.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    pub graph: Graph,
    /// One representative per coset, in first-seen element order.
    pub representatives: Vec<Permutation>,
    coset_of: HashMap<Permutation, usize>,
}

impl CosetGraph {
    /// Right multiplication `Gx ↦ Gxa` as a group on cosets, aligned with
    /// the element order of `x`.
    pub fn action(&self, x: &PermGroup) -> Result<PermGroup, ConstructError> {
        let n = self.representatives.len();
        Ok(x.induced(n, |a| {
            let images = self
                .representatives
                .iter()
                .map(|rep| self.coset_of[&rep.then(a)])
                .collect();
            Permutation::from_images(images)
        })?)
    }
}

pub fn coset_graph(x: &PermGroup, g: &PermGroup, z: &Permutation) -> Result<CosetGraph, ConstructError> {
    if !g.is_subgroup_of(x) {
        return Err(ConstructError::NotSubgroup);
    }
    if g.order() == x.order() {
        return Err(ConstructError::ImproperSubgroup("G = X".into()));
    }
    if !x.contains(z) {
        return Err(ConstructError::ImproperSubgroup("z is not in X".into()));
    }
    if g.contains(z) {
        return Err(ConstructError::ImproperSubgroup("z lies in G".into()));
    }
    let mut coset_of: HashMap<Permutation, usize> = HashMap::with_capacity(x.order());
    let mut representatives = Vec::new();
    for e in x.elements() {
        if coset_of.contains_key(e) {
            continue;
        }
        let idx = representatives.len();
        for h in g.elements() {
            coset_of.insert(h.then(e), idx);
        }
        representatives.push(e.clone());
    }
    let double = |w: &Permutation| -> HashSet<Permutation> {
        let mut out = HashSet::new();
        for a in g.elements() {
            let aw = a.then(w);
            for b in g.elements() {
                out.insert(aw.then(b));
            }
        }
        out
    };
    let gzg = double(z);
    if gzg != double(&z.inverse()) {
        return Err(ConstructError::AsymmetricDoubleCoset);
    }
    let n = representatives.len();
    let inverses: Vec<Permutation> = representatives.iter().map(Permutation::inverse).collect();
    let mut edges = Vec::new();
    for (i, rep) in representatives.iter().enumerate() {
        for (j, inv) in inverses.iter().enumerate().skip(i + 1) {
            if gzg.contains(&rep.then(inv)) {
                edges.push((i, j));
            }
        }
    }
    Ok(CosetGraph {
        graph: Graph::from_edges(n, &edges)?,
        representatives,
        coset_of,
    })
}

/// X transitive on the s-arcs of `graph`.
pub fn is_s_arc_transitive(graph: &Graph, group: &PermGroup, s: usize) -> Result<bool, PermError> {
    let arcs: Vec<Tuple> = graph.l_arcs(s).into_iter().map(Tuple).collect();
    if arcs.is_empty() {
        return Ok(false);
    }
    group.is_transitive_on(&arcs)
}

/// Transitive on arcs with trivial arc stabilizer.
pub fn is_arc_regular(graph: &Graph, group: &PermGroup) -> Result<bool, PermError> {
    Ok(is_s_arc_transitive(graph, group, 1)? && group.order() == 2 * graph.edge_count())
}

/// Evidence for the structure of Π with respect to 𝒮.
#[derive(Clone, Debug)]
pub struct CenterStructure {
    /// σ ↦ S_σ as a map from Σ onto Π_𝒮.
    pub quotient_witness: Option<Isomorphism>,
    /// `|𝔠_Π(Π_𝒮[S])|` per vertex of Π.
    pub center_sizes: Vec<usize>,
    pub checks: Vec<Check>,
}

pub fn center_structure(pi: &DoubleStarGraph) -> Result<CenterStructure, QuotientError> {
    let g = pi.graph();
    let part = pi.center_partition();
    let mut checks = Vec::new();
    let q = quotient::quotient_graph(g, part);
    let witness = Isomorphism {
        mapping: (0..pi.base().vertex_count()).collect(),
    };
    let ok = witness.verify(pi.base(), &q);
    checks.push(Check::new(
        "quotient by centers is Σ",
        ok,
        format!("σ ↦ S_σ on {} vertices", q.vertex_count()),
    ));
    let mut images_ok = true;
    let mut center_sizes = Vec::with_capacity(g.vertex_count());
    for (v, s) in pi.stars().iter().enumerate() {
        let qs = quotient::quotient_star(g, part, v);
        let s1 = s.project(1).map_err(QuotientError::Star)?;
        images_ok &= qs.arcs() == s1.arcs();
        center_sizes.push(quotient::center_intersection(g, part, &qs)?.len());
    }
    checks.push(Check::new(
        "Π_𝒮[S] is S(1) read on blocks",
        images_ok,
        format!("{} vertices", g.vertex_count()),
    ));
    let singletons = center_sizes.iter().filter(|&&c| c == 1).count();
    checks.push(Check::new(
        "𝔠_Π(Π_𝒮[S]) = {S}",
        singletons == center_sizes.len(),
        format!(
            "{singletons} of {} vertices; sizes seen {:?}",
            center_sizes.len(),
            center_sizes.iter().collect::<BTreeSet<_>>()
        ),
    ));
    let in_g = quotient::in_script_g(g, pi.action(), part)?;
    checks.push(Check::new("(Π, X, 𝒮) ∈ 𝒢", in_g, ""));
    Ok(CenterStructure {
        quotient_witness: ok.then_some(witness),
        center_sizes,
        checks,
    })
}

/// Which structural alternative holds for Π.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StructureCase {
    /// `d ≥ 2`, `h = l`, stabilizer inequality.
    Spread,
    /// `d = 1`, stabilizer equality.
    Matching,
    Neither,
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub case: StructureCase,
    pub d: usize,
    pub chain: StabilizerChain,
    pub series: quotient::RefinementSeries,
    pub checks: Vec<Check>,
}

/// Structure of Π with the center partition: the case split, the
/// projection partitions 𝒮_i against the refinement series, `k/c`
/// invariance and s-arc-transitivity.
pub fn structure(pi: &DoubleStarGraph, iso_cap: usize) -> Result<StructureReport, QuotientError> {
    let g = pi.graph();
    let x = pi.action();
    let theta = pi.theta();
    let l = theta.params().l;
    let chain = stabilizer_chain(pi.base(), theta)?;
    let p = quotient::params(g, x, pi.center_partition())?;
    let rep = theta.representative();
    let equal = stabilizer_equality(theta.group(), &rep.left, &rep.right)?;
    let case = if p.d >= 2 && chain.h == l && !equal {
        StructureCase::Spread
    } else if p.d == 1 && chain.h <= l && equal {
        StructureCase::Matching
    } else {
        StructureCase::Neither
    };
    let mut checks = vec![
        Check::new(
            "stabilizer chain",
            chain.is_well_formed(),
            format!("orders {:?}, h = {}", chain.orders, chain.h),
        ),
        Check::new(
            "structure case",
            case != StructureCase::Neither,
            format!("{case:?} with d = {}, h = {}, l = {l}", p.d, chain.h),
        ),
    ];
    let series = quotient::refinement_series(
        g,
        x,
        pi.center_partition(),
        SeriesOptions {
            iso_cap,
            check_isomorphisms: false,
        },
    )?;
    let h = chain.h;
    let mut same = true;
    for i in 1..=h {
        let si = pi.projection_partition(i)?;
        same &= series.partition(i).same_blocks(&si);
    }
    checks.push(Check::new(
        "𝒮_i follows the refinement series",
        same && series.m == h && series.terminal == Terminal::Trivial,
        format!("m = {}, h = {h}", series.m),
    ));
    let val = g.valency().unwrap_or(0);
    let per_level = series.levels.iter().take(h + 1).skip(1);
    let d_ok = per_level
        .clone()
        .all(|lv| lv.params.r == p.r && lv.params.d * p.r == val);
    checks.push(Check::new(
        "r_i = r and d_i = val(Π)/r",
        d_ok,
        format!("r = {}, val = {val}", p.r),
    ));
    let kc: Vec<(usize, usize)> = series
        .levels
        .iter()
        .take(h)
        .map(|lv| (lv.params.k, lv.params.c))
        .collect();
    let (k0, c0) = kc[0];
    let kc_ok = kc.iter().all(|&(k, c)| k * c0 == k0 * c) && k0 >= p.d * c0;
    checks.push(Check::new(
        "k/c constant through h-1 and at least d",
        kc_ok,
        format!("(k, c) per level {kc:?}"),
    ));
    if case == StructureCase::Matching {
        let s = theta.level();
        let ok = is_s_arc_transitive(g, x, s)?;
        checks.push(Check::new(
            "Π is (X, s)-arc-transitive",
            ok,
            format!("s = {s}"),
        ));
    } else {
        let ok = is_s_arc_transitive(g, x, 1)?;
        checks.push(Check::new("Π is (X, 1)-arc-transitive", ok, ""));
    }
    Ok(StructureReport {
        case,
        d: p.d,
        chain,
        series,
        checks,
    })
}

/// Π(Σ, Θ) ≅ Cos(X, X_S, X_S z X_S) with z the pairing witness.
pub fn coset_oracle(pi: &DoubleStarGraph, iso_cap: usize) -> Result<Option<Isomorphism>, ConstructError> {
    let theta = pi.theta();
    let z = theta
        .pairing_witness()
        .ok_or(ConstructError::NotSelfPaired)?;
    let stab = theta.group().stabilizer(&theta.representative().left)?;
    let cos = coset_graph(theta.group(), &stab, z)?;
    Ok(are_isomorphic(pi.graph(), &cos.graph, iso_cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{NamedGroup, VertexAction};
    use crate::graph::catalog::{complete, cycle, odd_graph, DEFAULT_VERTEX_CAP};
    use crate::graph::DEFAULT_ISO_CAP;

    fn k5() -> (Graph, PermGroup, ThetaOrbit) {
        let g = complete(5, 10).unwrap();
        let x = NamedGroup::Alternating(5).closure(100).unwrap();
        let s = Star::new(&g, 0, StarParams::new(1, 3), vec![vec![0, 4], vec![0, 3], vec![0, 2]]).unwrap();
        let t = Star::new(&g, 4, StarParams::new(1, 3), vec![vec![4, 0], vec![4, 1], vec![4, 2]]).unwrap();
        let theta = theta_orbit(&g, &x, &s, &t).unwrap();
        (g, x, theta)
    }

    #[test]
    fn k5_double_star_graph() {
        let (g, _, theta) = k5();
        let pi = double_star_graph(&g, &theta).unwrap();
        assert_eq!(pi.graph().vertex_count(), 20);
        assert_eq!(pi.graph().valency(), Some(3));
        assert!(pi.graph().is_connected());
        assert!(is_arc_regular(pi.graph(), pi.action()).unwrap());
        assert_eq!(pi.center_partition().len(), 5);
    }

    #[test]
    fn k5_structure_is_one_step() {
        let (g, _, theta) = k5();
        let pi = double_star_graph(&g, &theta).unwrap();
        let rep = structure(&pi, DEFAULT_ISO_CAP).unwrap();
        let p = rep.series.levels[0].params;
        assert_eq!((p.v, p.k, p.r, p.b, p.d), (4, 3, 3, 4, 1));
        assert_eq!(rep.series.m, 1);
        assert_eq!(rep.case, StructureCase::Matching);
        assert!(rep.checks.iter().all(Check::passed), "{:?}", rep.checks);
        assert!(rep.series.checks.iter().all(Check::passed), "{:?}", rep.series.checks);
        let t = center_structure(&pi).unwrap();
        assert!(t.checks.iter().all(Check::passed), "{:?}", t.checks);
    }

    #[test]
    fn coset_graph_matches_k5_construction() {
        let (g, x, theta) = k5();
        let pi = double_star_graph(&g, &theta).unwrap();
        let z = theta.pairing_witness().unwrap();
        let stab = x.stabilizer(&theta.representative().left).unwrap();
        let cos = coset_graph(&x, &stab, z).unwrap();
        assert_eq!(cos.graph.vertex_count(), 20);
        let act = cos.action(&x).unwrap();
        assert!(is_s_arc_transitive(&cos.graph, &act, 1).unwrap());
        assert!(are_isomorphic(pi.graph(), &cos.graph, DEFAULT_ISO_CAP).unwrap().is_some());
        assert!(matches!(
            coset_graph(&x, &x, z),
            Err(ConstructError::ImproperSubgroup(_))
        ));
    }

    #[test]
    fn truncation_of_full_length_is_identity() {
        let (g, _, theta) = k5();
        let t = truncate(&g, &theta, 1).unwrap();
        assert_eq!(t.members(), theta.members());
        assert!(truncate(&g, &theta, 2).is_err());
    }

    #[test]
    fn petersen_growth_keeps_prefixes() {
        let g = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
        let act = VertexAction::new(&g, NamedGroup::Alternating(5).closure(100).unwrap()).unwrap();
        let x = act.vertices();
        let orbits = crate::stars::enumerate_double_star_orbits(
            &g,
            x,
            StarParams::new(1, 2),
            Default::default(),
        )
        .unwrap();
        for theta in orbits.iter().filter(|o| o.is_x_symmetric()) {
            let s = &theta.representative().left;
            let grown = grow(&g, theta, s).unwrap();
            for arcs in [&grown.extended_plus, &grown.extended_minus] {
                let star = Star::from_arcs(s.center(), StarParams::new(2, 2), arcs.clone());
                assert_eq!(star.project(1).unwrap(), *s);
            }
            assert_eq!(grown.plus_is_star || grown.minus_is_star, grown.criterion);
        }
    }

    #[test]
    fn chain_needs_valency_three() {
        let g = cycle(6, 10).unwrap();
        let x = NamedGroup::Dihedral(6).closure(100).unwrap();
        let s = Star::new(&g, 0, StarParams::new(1, 1), vec![vec![0, 1]]).unwrap();
        let t = Star::new(&g, 1, StarParams::new(1, 1), vec![vec![1, 0]]).unwrap();
        let theta = theta_orbit(&g, &x, &s, &t).unwrap();
        assert!(matches!(
            stabilizer_chain(&g, &theta),
            Err(ConstructError::HypothesisViolated(_))
        ));
        assert!(matches!(grow(&g, &theta, &s), Err(ConstructError::RTooSmall)));
    }
}
