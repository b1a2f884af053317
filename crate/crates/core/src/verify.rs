//! The four worked examples, rebuilt end to end and checked.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::action::{NamedGroup, VertexAction};
use crate::construct::{self, ConstructError, DoubleStarGraph};
use crate::graph::catalog::{complete, complete_bipartite, cycle, odd_graph, DEFAULT_VERTEX_CAP};
use crate::graph::{are_isomorphic, Graph, GraphError, Vertex, DEFAULT_ISO_CAP};
use crate::perm::{PermError, PermGroup, Permutation, PointSet, DEFAULT_GROUP_CAP};
use crate::quotient::{self, ParamVector, QuotientError, SeriesOptions};
use crate::report::Check;
use crate::stars::{
    is_arc_transitive_star, is_double_star, star_level, theta_orbit, Star, StarError, StarParams,
    ThetaOrbit,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown example {0:?}; expected example-1 .. example-4 or all")]
    UnknownExample(String),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Star(#[from] StarError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl VerifyError {
    /// A configured limit was hit rather than a check failing.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            VerifyError::Perm(PermError::ClosureCapExceeded { .. })
                | VerifyError::Graph(GraphError::CapExceeded { .. })
                | VerifyError::Star(StarError::CapExceeded { .. })
                | VerifyError::Star(StarError::Perm(PermError::ClosureCapExceeded { .. }))
                | VerifyError::Quotient(QuotientError::Graph(GraphError::CapExceeded { .. }))
                | VerifyError::Construct(ConstructError::Graph(GraphError::CapExceeded { .. }))
        )
    }
}

/// Limits on group closure, star enumeration and isomorphism search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub group: usize,
    pub stars: usize,
    pub iso: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group: DEFAULT_GROUP_CAP,
            stars: crate::stars::EnumerationCaps::default().stars,
            iso: DEFAULT_ISO_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WorkedExample {
    /// K₅ under A₅.
    One,
    /// The Petersen graph under A₅.
    Two,
    /// O₄ under A₇.
    Three,
    /// K_{n,n} under Sym(n) wr Sym(2).
    Four(usize),
}

impl WorkedExample {
    pub fn all() -> Vec<WorkedExample> {
        vec![
            WorkedExample::One,
            WorkedExample::Two,
            WorkedExample::Three,
            WorkedExample::Four(3),
            WorkedExample::Four(4),
        ]
    }

    /// Comma-separated `example-1` … `example-4` (n = 3 and 4),
    /// `example-4:n`, or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<WorkedExample>, VerifyError> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim) {
            match item {
                "all" => out.extend(WorkedExample::all()),
                "example-4" => out.extend([WorkedExample::Four(3), WorkedExample::Four(4)]),
                other => out.push(other.parse()?),
            }
        }
        Ok(out)
    }

    pub fn run(self, caps: Caps) -> Result<ExampleReport, VerifyError> {
        match self {
            WorkedExample::One => example_1(caps),
            WorkedExample::Two => example_2(caps),
            WorkedExample::Three => example_3(caps),
            WorkedExample::Four(n) => example_4(n, caps),
        }
    }
}

impl FromStr for WorkedExample {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "example-1" => Ok(WorkedExample::One),
            "example-2" => Ok(WorkedExample::Two),
            "example-3" => Ok(WorkedExample::Three),
            _ => s
                .strip_prefix("example-4:")
                .and_then(|n| n.parse().ok())
                .filter(|&n| n >= 3)
                .map(WorkedExample::Four)
                .ok_or_else(|| VerifyError::UnknownExample(s.to_string())),
        }
    }
}

impl fmt::Display for WorkedExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WorkedExample::One => f.write_str("example-1"),
            WorkedExample::Two => f.write_str("example-2"),
            WorkedExample::Three => f.write_str("example-3"),
            WorkedExample::Four(n) => write!(f, "example-4:{n}"),
        }
    }
}

/// Shape of a graph at a glance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub valency: Option<usize>,
    pub components: usize,
    /// Distinct component sizes, ascending.
    pub component_sizes: Vec<usize>,
    pub bipartite: bool,
    pub girth: Option<usize>,
}

pub fn summarize(g: &Graph) -> GraphSummary {
    let comps = g.components();
    GraphSummary {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        valency: g.valency(),
        components: comps.count(),
        component_sizes: comps
            .components
            .iter()
            .map(Vec::len)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
        bipartite: g.is_bipartite(),
        girth: g.girth(),
    }
}

/// Checks grouped by the statement they exercise.
#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub example: String,
    pub pi: GraphSummary,
    pub x_order: usize,
    pub stabilizer_order: usize,
    /// Parameters of B₀ … B_m on Π with the center partition.
    pub levels: Vec<ParamVector>,
    pub m: usize,
    pub h: usize,
    /// Statements made in the example itself.
    pub example_checks: Vec<Check>,
    /// Π_𝒮 ≅ Σ, the center of Π_𝒮[S], membership of 𝒢.
    pub quotient_checks: Vec<Check>,
    /// Refinement series arithmetic, bound, kernels and isomorphisms.
    pub series_checks: Vec<Check>,
    /// Structure case, 𝒮_i against B_i, block arcs, block valency.
    pub structure_checks: Vec<Check>,
    /// Rebuilding Π from (Π, X, 𝒮).
    pub reconstruction_checks: Vec<Check>,
    /// Star growth, truncation and the stabilizer chain.
    pub growth_checks: Vec<Check>,
    /// Π against Cos(X, X_S, X_S z X_S).
    pub coset_checks: Vec<Check>,
    /// Π with its stars, center partition and X-action.
    #[serde(skip)]
    pub double_star: DoubleStarGraph,
}

impl ExampleReport {
    pub fn all_checks(&self) -> impl Iterator<Item = &Check> {
        self.example_checks
            .iter()
            .chain(&self.quotient_checks)
            .chain(&self.series_checks)
            .chain(&self.structure_checks)
            .chain(&self.reconstruction_checks)
            .chain(&self.growth_checks)
            .chain(&self.coset_checks)
    }
}

fn labels(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn point_group_is(act: &VertexAction, sub: &PermGroup, expected: &[&str]) -> Result<bool, PermError> {
    let degree = act.points().degree();
    let want = expected
        .iter()
        .map(|s| Permutation::parse(s, degree))
        .collect::<Result<BTreeSet<_>, _>>()?;
    let got: BTreeSet<Permutation> = sub
        .elements()
        .iter()
        .filter_map(|e| act.point_form(e).cloned())
        .collect();
    Ok(got.len() == sub.order() && got == want)
}

fn components_like(g: &Graph, target: &Graph, cap: usize) -> Result<(usize, bool), GraphError> {
    let comps = g.components();
    let mut all = true;
    for c in &comps.components {
        all &= are_isomorphic(&g.induced_subgraph(c), target, cap)?.is_some();
    }
    Ok((comps.count(), all))
}

fn stab_meet(group: &PermGroup, s: &Star, v: Vertex) -> Result<PermGroup, PermError> {
    group.stabilizer(s)?.stabilizer(&v)
}

fn empty_report(example: String, pi: &DoubleStarGraph) -> ExampleReport {
    let rep = pi.theta().representative();
    ExampleReport {
        example,
        pi: summarize(pi.graph()),
        x_order: pi.theta().group().order(),
        stabilizer_order: pi
            .theta()
            .group()
            .stabilizer(&rep.left)
            .map(|g| g.order())
            .unwrap_or(0),
        levels: Vec::new(),
        m: 0,
        h: 0,
        example_checks: Vec::new(),
        quotient_checks: Vec::new(),
        series_checks: Vec::new(),
        structure_checks: Vec::new(),
        reconstruction_checks: Vec::new(),
        growth_checks: Vec::new(),
        coset_checks: Vec::new(),
        double_star: pi.clone(),
    }
}

/// Runs every structural statement on Π with its center partition.
pub fn analyze_double_star_graph(
    example: String,
    pi: &DoubleStarGraph,
    caps: Caps,
) -> Result<ExampleReport, VerifyError> {
    let mut report = empty_report(example, pi);
    let g = pi.graph();
    let x = pi.action();
    let part = pi.center_partition();

    report.quotient_checks = construct::center_structure(pi)?.checks;

    let series = quotient::refinement_series(
        g,
        x,
        part,
        SeriesOptions {
            iso_cap: caps.iso,
            check_isomorphisms: true,
        },
    )?;
    report.levels = series.levels.iter().map(|l| l.params).collect();
    report.m = series.m;
    report.h = series.h;
    report.series_checks = series.checks.clone();

    let st = construct::structure(pi, caps.iso)?;
    report.structure_checks = st.checks;
    let l = pi.theta().params().l;
    report
        .structure_checks
        .extend(quotient::block_arc_checks(g, x, &series, l.max(series.m))?);
    report
        .structure_checks
        .extend(quotient::block_valency_checks(g, &series));
    report
        .structure_checks
        .push(quotient::component_nesting_check(g, &series));

    let rec = quotient::reconstruct(g, x, part, 1, caps.iso)?;
    report.reconstruction_checks = rec.checks;
    if series.m == 1 && series.terminal == quotient::Terminal::Trivial {
        let back = are_isomorphic(rec.pi.graph(), g, caps.iso)?;
        report.reconstruction_checks.push(Check::new(
            "decompose then reconstruct gives Π",
            back.is_some(),
            format!("{} vertices", g.vertex_count()),
        ));
    }
    let p0 = series.params(0);
    let s = pi.theta().level();
    if s >= 2 && p0.r >= 2 && p0.d == 1 {
        let rec = quotient::reconstruct(g, x, part, s, caps.iso)?;
        report.reconstruction_checks.extend(
            rec.checks
                .into_iter()
                .map(|c| Check {
                    name: format!("s = {s}: {}", c.name),
                    ..c
                }),
        );
    }

    let coset = construct::coset_oracle(pi, caps.iso)?;
    report.coset_checks.push(Check::new(
        "Π ≅ Cos(X, X_S, X_S z X_S)",
        coset.is_some(),
        format!(
            "z = {}",
            pi.theta()
                .pairing_witness()
                .map(|z| z.to_string())
                .unwrap_or_default()
        ),
    ));
    Ok(report)
}

/// Growth of one star of Θ: prefixes kept, stabilizer kept, and the
/// stabilizer criterion matching the outcome.
pub fn growth_checks(base: &Graph, theta: &ThetaOrbit, s: &Star) -> Result<Vec<Check>, VerifyError> {
    let gr = construct::grow(base, theta, s)?;
    let group = theta.group();
    let stab = group.stabilizer(s)?;
    let l = s.params().l;
    let mut checks = vec![Check::new(
        "growth criterion ⟺ Θ±[S] is a star",
        gr.criterion == (gr.plus_is_star || gr.minus_is_star),
        format!(
            "criterion {}, Θ⁺[S] star {}, Θ⁻[S] star {}",
            gr.criterion, gr.plus_is_star, gr.minus_is_star
        ),
    )];
    for grown in [gr.grown_plus(), gr.grown_minus()].into_iter().flatten() {
        let mut prefixes = true;
        for i in 1..=l {
            prefixes &= grown.project(i)? == s.project(i)?;
        }
        checks.push(Check::new(
            "Θ*[S](i) = S(i)",
            prefixes,
            format!("i = 1..{l}"),
        ));
        checks.push(Check::new(
            "X_{Θ*[S]} = X_S",
            group.stabilizer(&grown)? == stab,
            format!("order {}", stab.order()),
        ));
    }
    Ok(checks)
}

/// Example 1: K₅ with A₅ and S = {(1,5),(1,4),(1,3)}.
pub fn example_1(caps: Caps) -> Result<ExampleReport, VerifyError> {
    let g = complete(5, DEFAULT_VERTEX_CAP)?;
    let x = NamedGroup::Alternating(5).closure(caps.group)?;
    let s = Star::from_labels(&g, 3, &labels(&[&["1", "5"], &["1", "4"], &["1", "3"]]))?;
    let t = Star::from_labels(&g, 3, &labels(&[&["5", "1"], &["5", "2"], &["5", "3"]]))?;
    let theta = theta_orbit(&g, &x, &s, &t)?;
    let pi = construct::double_star_graph(&g, &theta)?;
    let mut report = analyze_double_star_graph("example-1".into(), &pi, caps)?;
    let z = Permutation::parse("(1 5)(2 4)", 5)?;
    let pg = pi.graph();
    let two_arcs = g.l_arcs(2).len();
    let meet_s = stab_meet(&x, &s, t.center())?;
    let meet_t = stab_meet(&x, &t, s.center())?;
    report.example_checks = vec![
        Check::new(
            "Σ is (X,2)-arc-regular",
            construct::is_s_arc_transitive(&g, &x, 2)? && two_arcs == x.order(),
            format!("{two_arcs} 2-arcs, |X| = {}", x.order()),
        ),
        Check::new("(S, T) is a double-star", is_double_star(&g, &s, &t), ""),
        Check::new(
            "(S, T)^z = (T, S) for z = (1 5)(2 4)",
            crate::perm::Action::act(&(s.clone(), t.clone()), &z) == (t.clone(), s.clone()),
            "",
        ),
        Check::new(
            "Θ is an X-symmetric orbit on DSt³",
            theta.is_x_symmetric() && s.len() == 3,
            format!("|Θ| = {}", theta.len()),
        ),
        Check::new(
            "X_S ∩ X_5 = X_T ∩ X_1 = 1",
            meet_s == meet_t && meet_s.order() == 1,
            "",
        ),
        Check::new("Π has 20 vertices", pg.vertex_count() == 20, pg.vertex_count().to_string()),
        Check::new("Π is cubic", pg.valency() == Some(3), format!("{:?}", pg.valency())),
        Check::new("Π is connected", pg.is_connected(), ""),
        Check::new(
            "Π is (X,1)-arc-regular",
            construct::is_arc_regular(pg, pi.action())?,
            format!("{} arcs", 2 * pg.edge_count()),
        ),
    ];
    report.growth_checks = growth_checks(&g, &theta, &s)?;
    Ok(report)
}

fn petersen_star(
    g: &Graph,
    act: &VertexAction,
    center: &[usize],
    x: &Permutation,
    i: usize,
) -> Result<Star, VerifyError> {
    let c = g.vertex_by_label(&center.iter().map(|p| p.to_string()).collect::<String>())?;
    let mut arcs = Vec::new();
    for y in [x.clone(), x.inverse()] {
        let yv = act
            .vertex_form(&y)
            .ok_or(PermError::NotClosed)?
            .clone();
        let mut arc = vec![c];
        for _ in 0..i {
            arc.push(yv.apply(*arc.last().unwrap()));
        }
        arcs.push(arc);
    }
    Ok(Star::new(g, c, StarParams::new(i, 2), arcs)?)
}

/// Example 2: the Petersen graph with A₅ and x = (13524).
pub fn example_2(caps: Caps) -> Result<ExampleReport, VerifyError> {
    const DEPTH: usize = 3;
    let g = odd_graph(3, DEFAULT_VERTEX_CAP)?;
    let act = VertexAction::new(&g, NamedGroup::Alternating(5).closure(caps.group)?)?;
    let xv = act.vertices().clone();
    let x = Permutation::parse("(13524)", 5)?;
    let sigma = g.vertex_by_label("12")?;
    let tau = g.vertex_by_label("34")?;
    let mut checks = vec![
        Check::new(
            "Σ is (X,2)-arc-regular",
            construct::is_s_arc_transitive(&g, &xv, 2)? && g.l_arcs(2).len() == xv.order(),
            format!("|X| = {}", xv.order()),
        ),
        Check::new(
            "X_σ = {(1), (345), (543), (12)(34), (12)(35), (12)(45)}",
            point_group_is(
                &act,
                &xv.stabilizer(&sigma)?,
                &["(1)", "(345)", "(543)", "(12)(34)", "(12)(35)", "(12)(45)"],
            )?,
            act.point_strings(&xv.stabilizer(&sigma)?).join(", "),
        ),
        Check::new(
            "X_τ = {(1), (125), (521), (34)(12), (34)(15), (34)(25)}",
            point_group_is(
                &act,
                &xv.stabilizer(&tau)?,
                &["(1)", "(125)", "(521)", "(34)(12)", "(34)(15)", "(34)(25)"],
            )?,
            act.point_strings(&xv.stabilizer(&tau)?).join(", "),
        ),
    ];
    let mut thetas = Vec::new();
    for i in 1..=DEPTH {
        let s = petersen_star(&g, &act, &[1, 2], &x, i)?;
        let t = petersen_star(&g, &act, &[3, 4], &x, i)?;
        let xs = xv.stabilizer(&s)?;
        let xt = xv.stabilizer(&t)?;
        checks.push(Check::new(
            format!("X_S{i} = {{(1), (12)(35)}}"),
            point_group_is(&act, &xs, &["(1)", "(12)(35)"])?,
            act.point_strings(&xs).join(", "),
        ));
        checks.push(Check::new(
            format!("X_T{i} = {{(1), (34)(25)}}"),
            point_group_is(&act, &xt, &["(1)", "(34)(25)"])?,
            act.point_strings(&xt).join(", "),
        ));
        checks.push(Check::new(
            format!("S{i}, T{i} are (X_S{i}, {i})-arc-transitive"),
            is_arc_transitive_star(&xs, &s, i)? && is_arc_transitive_star(&xt, &t, i)?,
            "",
        ));
        let theta = theta_orbit(&g, &xv, &s, &t)?;
        checks.push(Check::new(
            format!("Θ{i} is a self-paired (X, {i})-arc-transitive orbit"),
            theta.self_paired() && theta.level() >= i,
            format!("level {}", theta.level()),
        ));
        thetas.push(theta);
    }
    let psi = ["12", "34", "15", "23", "45", "12"]
        .iter()
        .map(|l| g.vertex_by_label(l))
        .collect::<Result<Vec<_>, _>>()?;
    checks.push(Check::new(
        "Ψ is a 5-cycle of Σ",
        psi.windows(2).all(|w| g.adjacent(w[0], w[1]))
            && psi[..5].iter().collect::<BTreeSet<_>>().len() == 5,
        "",
    ));

    let pi = construct::double_star_graph(&g, &thetas[0])?;
    let mut report = analyze_double_star_graph("example-2".into(), &pi, caps)?;
    let pg = pi.graph();
    let (count, all_c5) = components_like(pg, &cycle(5, DEFAULT_VERTEX_CAP)?, caps.iso)?;
    checks.push(Check::new(
        "Π has 30 vertices",
        pg.vertex_count() == 30,
        pg.vertex_count().to_string(),
    ));
    checks.push(Check::new(
        "Π ≅ 6Ψ",
        count == 6 && all_c5,
        format!("{count} components, all C5: {all_c5}"),
    ));
    for s in 1..=DEPTH {
        checks.push(Check::new(
            format!("Π is (X, {s})-arc-transitive"),
            construct::is_s_arc_transitive(pg, pi.action(), s)?,
            "",
        ));
    }
    report.example_checks = checks;

    let mut growth = Vec::new();
    for w in thetas.windows(2) {
        let grown = construct::grow_orbit(&g, &w[0])?;
        let l = w[0].params().l;
        growth.push(Check::new(
            format!("growing Θ{l} gives Θ{}", l + 1),
            grown.as_ref().map(|t| t.members()) == Some(w[1].members()),
            "",
        ));
        let rep = w[0].representative();
        growth.extend(growth_checks(&g, &w[0], &rep.left)?);
        growth.extend(growth_checks(&g, &w[0], &rep.right)?);
    }
    let chain = construct::stabilizer_chain(&g, &thetas[DEPTH - 1])?;
    let mut expected = vec![6];
    expected.extend(std::iter::repeat_n(2, DEPTH));
    growth.push(Check::new(
        "stabilizer chain (6, 2, 2, …) with h = 1",
        chain.orders == expected && chain.h == 1 && chain.is_well_formed(),
        format!("orders {:?}, h = {}", chain.orders, chain.h),
    ));
    growth.push(Check::new(
        "stabilizer criterion at every level",
        chain.criterion.iter().all(|&c| c),
        format!("{:?}", chain.criterion),
    ));
    report.growth_checks = growth;
    Ok(report)
}

/// Rows of S in Example 3.
pub const EXAMPLE_3_S: [[&str; 3]; 6] = [
    ["123", "456", "127"],
    ["123", "456", "137"],
    ["123", "457", "126"],
    ["123", "457", "136"],
    ["123", "567", "124"],
    ["123", "567", "134"],
];

/// Rows of T in Example 3 as listed.
pub const EXAMPLE_3_T_LISTED: [[&str; 3]; 6] = [
    ["456", "123", "457"],
    ["456", "123", "567"],
    ["456", "127", "345"],
    ["456", "123", "356"],
    ["456", "137", "245"],
    ["456", "137", "256"],
];

/// Rows of T with the fourth row read as (456, 127, 356).
pub const EXAMPLE_3_T: [[&str; 3]; 6] = [
    ["456", "123", "457"],
    ["456", "123", "567"],
    ["456", "127", "345"],
    ["456", "127", "356"],
    ["456", "137", "245"],
    ["456", "137", "256"],
];

fn rows(r: &[[&str; 3]]) -> Vec<Vec<String>> {
    r.iter()
        .map(|a| a.iter().map(|s| s.to_string()).collect())
        .collect()
}

/// Example 3: O₄ with A₇.
pub fn example_3(caps: Caps) -> Result<ExampleReport, VerifyError> {
    let g = odd_graph(4, DEFAULT_VERTEX_CAP)?;
    let act = VertexAction::new(&g, NamedGroup::Alternating(7).closure(caps.group)?)?;
    let xv = act.vertices().clone();
    let s = Star::from_labels(&g, 3, &rows(&EXAMPLE_3_S))?;
    let listed = Star::from_labels(&g, 3, &rows(&EXAMPLE_3_T_LISTED));
    let t = Star::from_labels(&g, 3, &rows(&EXAMPLE_3_T))?;
    let xs = xv.stabilizer(&s)?;
    let xt = xv.stabilizer(&t)?;
    let theta = theta_orbit(&g, &xv, &s, &t)?;
    let pi = construct::double_star_graph(&g, &theta)?;
    let mut report = analyze_double_star_graph("example-3".into(), &pi, caps)?;
    let pg = pi.graph();
    let target = odd_graph(3, DEFAULT_VERTEX_CAP)?.bipartite_double_cover();
    let (count, all_like) = components_like(pg, &target, caps.iso)?;
    let b456 = PointSet::new(vec![3, 4, 5]);
    let b123 = PointSet::new(vec![0, 1, 2]);
    let left = act.points().stabilizer(&b456)?;
    let right = act.points().stabilizer(&b123)?;
    let point_meet = |vs: &PermGroup, blocks: &PermGroup| -> BTreeSet<Permutation> {
        vs.elements()
            .iter()
            .filter_map(|e| act.point_form(e).cloned())
            .filter(|p| blocks.contains(p))
            .collect()
    };
    let want: BTreeSet<Permutation> = ["(1)", "(23)(46)"]
        .iter()
        .map(|p| Permutation::parse(p, 7))
        .collect::<Result<_, _>>()?;
    let meet_l = point_meet(&xs, &left);
    let meet_r = point_meet(&xt, &right);
    let total = xv.order() / xs.order();
    report.example_checks = vec![
        Check::new(
            "O₄ is (X,3)-arc-transitive",
            construct::is_s_arc_transitive(&g, &xv, 3)?,
            "",
        ),
        Check::new(
            "X_S = {(1), (467), (764), (46)(23), (47)(23), (67)(23)}",
            point_group_is(
                &act,
                &xs,
                &["(1)", "(467)", "(764)", "(46)(23)", "(47)(23)", "(67)(23)"],
            )?,
            act.point_strings(&xs).join(", "),
        ),
        Check::new("S is a (2,3)-star", s.params() == StarParams::new(2, 3), ""),
        Check::new(
            "S is (X_S,2)-arc-transitive",
            star_level(&xv, &s)? >= 2,
            "",
        ),
        Check::claim(
            "T as listed is a (2,3)-star",
            listed.is_ok(),
            match &listed {
                Ok(_) => "valid".to_string(),
                Err(e) => format!("{e}; row (456, 123, 356) read as (456, 127, 356)"),
            },
        ),
        Check::new("(S, T) is a double-star", is_double_star(&g, &s, &t), ""),
        Check::new(
            "Θ is a self-paired (X,2)-arc-transitive orbit",
            theta.self_paired() && theta.level() >= 2,
            format!(
                "z = {}",
                theta
                    .pairing_witness()
                    .and_then(|z| act.point_form(z))
                    .map(|p| p.to_string())
                    .unwrap_or_default()
            ),
        ),
        Check::new(
            "X_S ∩ X_{4,5,6} = X_T ∩ X_{1,2,3} = {(1), (23)(46)}",
            meet_l == want && meet_r == want,
            format!(
                "{} / {}",
                meet_l.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "),
                meet_r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
            ),
        ),
        Check::new(
            "|V(Π)| = |A₇| / |X_S| = 420",
            pg.vertex_count() == total && total == 420,
            pg.vertex_count().to_string(),
        ),
        Check::new(
            "every component of Π is the double cover of O₃",
            all_like && target.vertex_count() == 20 && target.girth() == Some(6),
            format!("{count} components"),
        ),
        Check::claim(
            "Π ≅ 12 Γ̃",
            count == 12,
            format!("computed {count} components"),
        ),
        Check::new(
            "Π is (X,2)-arc-transitive",
            construct::is_s_arc_transitive(pg, pi.action(), 2)?,
            "",
        ),
    ];

    let mut growth = Vec::new();
    let theta1 = construct::truncate(&g, &theta, 1)?;
    growth.push(Check::new(
        "Θ(1) is self-paired",
        theta1.self_paired(),
        format!("|Θ(1)| = {}", theta1.len()),
    ));
    let rep1 = theta1.representative();
    growth.extend(growth_checks(&g, &theta1, &rep1.left)?);
    growth.extend(growth_checks(&g, &theta1, &rep1.right)?);
    growth.extend(growth_checks(&g, &theta, &s)?);
    let chain = construct::stabilizer_chain(&g, &theta)?;
    growth.push(Check::new(
        "stabilizer chain is strictly decreasing to h",
        chain.is_well_formed(),
        format!("orders {:?}, h = {}", chain.orders, chain.h),
    ));
    report.growth_checks = growth;
    Ok(report)
}

/// S, T and z of Example 4 on K_{n,n}; `i1..in` are vertices `0..n` and
/// `g1..gn` are `n..2n`.
pub fn example_4_data(n: usize) -> (Vec<Vec<Vertex>>, Vec<Vec<Vertex>>, Permutation) {
    let iota = |k: usize| k - 1;
    let gamma = |k: usize| n + k - 1;
    let mut s = Vec::new();
    let mut t = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != 1 && j != 1 && j != i {
                s.push(vec![iota(1), gamma(i), iota(j)]);
            }
            if i != 2 && j != 2 && j != i {
                t.push(vec![gamma(2), iota(i), gamma(j)]);
            }
        }
    }
    let mut cycles = vec![vec![iota(1), gamma(2)], vec![iota(2), gamma(1)]];
    cycles.extend((3..=n).map(|k| vec![iota(k), gamma(k)]));
    let z = Permutation::from_cycles(2 * n, &cycles).expect("disjoint transpositions");
    (s, t, z)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Example 4: K_{n,n} with Sym(n) wr Sym(2).
pub fn example_4(n: usize, caps: Caps) -> Result<ExampleReport, VerifyError> {
    let g = complete_bipartite(n, DEFAULT_VERTEX_CAP)?;
    let x = NamedGroup::Wreath(n).closure(caps.group)?;
    let (sa, ta, z) = example_4_data(n);
    let params = StarParams::new(2, n - 1);
    let s = Star::new(&g, 0, params, sa)?;
    let t = Star::new(&g, n + 1, params, ta)?;
    let theta = theta_orbit(&g, &x, &s, &t)?;
    let pi = construct::double_star_graph(&g, &theta)?;
    let mut report = analyze_double_star_graph(format!("example-4:{n}"), &pi, caps)?;
    let pg = pi.graph();
    let xs = x.stabilizer(&s)?;
    let diagonal = xs.elements().iter().all(|e| {
        e.apply(0) == 0 && (0..n).all(|k| e.apply(k) < n && e.apply(n + k) == n + e.apply(k))
    });
    let meet_s = stab_meet(&x, &s, 1)?;
    let meet_t = stab_meet(&x, &t, n)?;
    let mut target = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v {
                target.push((u, n + v));
            }
        }
    }
    let target = Graph::from_edges(2 * n, &target)?;
    let (count, all_like) = components_like(pg, &target, caps.iso)?;
    let total = 2 * factorial(n) * n;
    report.example_checks = vec![
        Check::new("(S, T) is a double-star", is_double_star(&g, &s, &t), ""),
        Check::new(
            "X_S is the diagonal Sym([n] ∖ {1})",
            diagonal && xs.order() == factorial(n - 1),
            format!("|X_S| = {}", xs.order()),
        ),
        Check::new(
            "S is (X_S,2)-arc-transitive",
            star_level(&x, &s)? >= 2,
            "",
        ),
        Check::new(
            "(S, T)^z = (T, S)",
            crate::perm::Action::act(&(s.clone(), t.clone()), &z) == (t.clone(), s.clone()),
            format!("z = {z}"),
        ),
        Check::new(
            "Θ is a self-paired (X,2)-arc-transitive orbit",
            theta.self_paired() && theta.level() >= 2,
            "",
        ),
        Check::new(
            "X_S ∩ X_ι2 = X_T ∩ X_γ1 ≅ Sym([n] ∖ {1, 2})",
            meet_s == meet_t && meet_s.order() == factorial(n - 2),
            format!("order {}", meet_s.order()),
        ),
        Check::new(
            "|V(Π)| = 2·n!·n",
            pg.vertex_count() == total,
            format!("{} against {total}", pg.vertex_count()),
        ),
        Check::new(
            "every component of Π is K_{n,n} − nK₂",
            all_like,
            format!("{count} components"),
        ),
        Check::claim(
            "Π ≅ n(K_{n,n} − nK₂)",
            count == n,
            format!("computed {count} components against {n}"),
        ),
        Check::new(
            "Π is (X,2)-arc-transitive",
            construct::is_s_arc_transitive(pg, pi.action(), 2)?,
            "",
        ),
    ];
    report.growth_checks = growth_checks(&g, &construct::truncate(&g, &theta, 1)?, &s.project(1)?)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_names_round_trip() {
        for e in WorkedExample::all() {
            assert_eq!(e.to_string().parse::<WorkedExample>().unwrap(), e);
        }
        assert_eq!(WorkedExample::parse_list("example-4").unwrap().len(), 2);
        assert_eq!(WorkedExample::parse_list("example-1, example-4:5").unwrap().len(), 2);
        assert!("example-5".parse::<WorkedExample>().is_err());
    }

    #[test]
    fn example_4_data_shapes() {
        let (s, t, z) = example_4_data(3);
        assert_eq!((s.len(), t.len()), (2, 2));
        assert_eq!(z.to_string(), "(1 5)(2 4)(3 6)");
    }
}
