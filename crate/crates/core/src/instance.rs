//! Instance files and the task dispatcher behind the command line.

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::action::{NamedGroup, VertexAction};
use crate::construct::{self, ConstructError};
use crate::graph::catalog::{catalog, CatalogName, DEFAULT_VERTEX_CAP};
use crate::graph::{Graph, GraphError};
use crate::perm::{PermError, PermGroup, Permutation};
use crate::quotient::{self, Partition, QuotientError, SeriesOptions};
use crate::report::{AnalysisReport, Check, ErrorKind, Section};
use crate::stars::{self, EnumerationCaps, Star, StarError, StarParams};
use crate::verify::{self, summarize, Caps, ExampleReport, WorkedExample, VerifyError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSpec {
    /// `{"catalog": "odd 4"}`.
    Catalog { catalog: String },
    /// `{"vertices": 5, "edges": [[0, 1], ...], "labels": [...]}` with
    /// 0-indexed endpoints.
    Explicit {
        vertices: usize,
        edges: Vec<(usize, usize)>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    /// `{"named": "alternating 5"}`.
    Named { named: String },
    /// `{"degree": 5, "generators": ["(1 2 3 4 5)", "(1 2 3)"]}`.
    Generators { degree: usize, generators: Vec<String> },
}

/// A double-star seed given by vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedSpec {
    pub r: usize,
    pub s: Vec<Vec<String>>,
    pub t: Vec<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Analyze,
    Construct,
    Decompose,
    Search,
    VerifyPaper,
}

impl std::str::FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_value(json!(s)).map_err(|_| format!("unknown task {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapSpec {
    pub group: Option<usize>,
    pub stars: Option<usize>,
    pub iso: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub task: Task,
    #[serde(default)]
    pub graph: Option<GraphSpec>,
    /// Defaults to the catalog group of a catalog graph.
    #[serde(default)]
    pub group: Option<GroupSpec>,
    #[serde(default)]
    pub seeds: Option<SeedSpec>,
    /// Blocks of vertex labels, for `decompose`.
    #[serde(default)]
    pub partition: Option<Vec<Vec<String>>>,
    /// Star shape for `search`.
    #[serde(default)]
    pub params: Option<StarParams>,
    /// Which examples `verify-paper` runs; defaults to `all`.
    #[serde(default)]
    pub examples: Option<String>,
    #[serde(default)]
    pub caps: CapSpec,
}

impl InstanceSpec {
    pub fn from_json(text: &str) -> Result<InstanceSpec, InstanceError> {
        serde_json::from_str(text).map_err(|e| InstanceError::Parse(e.to_string()))
    }

    pub fn verify_paper(examples: &str) -> InstanceSpec {
        InstanceSpec {
            task: Task::VerifyPaper,
            graph: None,
            group: None,
            seeds: None,
            partition: None,
            params: None,
            examples: Some(examples.to_string()),
            caps: CapSpec::default(),
        }
    }

    pub fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            group: self.caps.group.unwrap_or(d.group),
            stars: self.caps.stars.unwrap_or(d.stars),
            iso: self.caps.iso.unwrap_or(d.iso),
        }
    }
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("missing field {0:?} for this task")]
    Missing(&'static str),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl From<PermError> for InstanceError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::Parse { .. } => InstanceError::Parse(e.to_string()),
            e => InstanceError::Verify(e.into()),
        }
    }
}

impl From<GraphError> for InstanceError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::UnknownName(_) | GraphError::UnknownLabel(_) | GraphError::Malformed(_) => {
                InstanceError::Parse(e.to_string())
            }
            e => InstanceError::Verify(e.into()),
        }
    }
}

impl From<StarError> for InstanceError {
    fn from(e: StarError) -> Self {
        match e {
            StarError::Graph(g) => g.into(),
            e => InstanceError::Verify(e.into()),
        }
    }
}

impl From<ConstructError> for InstanceError {
    fn from(e: ConstructError) -> Self {
        InstanceError::Verify(e.into())
    }
}

impl From<QuotientError> for InstanceError {
    fn from(e: QuotientError) -> Self {
        InstanceError::Verify(e.into())
    }
}

impl InstanceError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            InstanceError::Parse(_) | InstanceError::Missing(_) => ErrorKind::Parse,
            InstanceError::Verify(v) if v.is_cap() => ErrorKind::Cap,
            InstanceError::Verify(
                VerifyError::Construct(
                    ConstructError::NotSelfPaired
                    | ConstructError::NotArcTransitiveOrbit
                    | ConstructError::HypothesisViolated(_)
                    | ConstructError::RTooSmall,
                )
                | VerifyError::Quotient(
                    QuotientError::HypothesisViolated(_) | QuotientError::NotInScriptG(_),
                )
                | VerifyError::Star(StarError::NotArcTransitive | StarError::NotADoubleStar(_)),
            ) => ErrorKind::HypothesisViolated,
            InstanceError::Verify(_) => ErrorKind::Other,
        }
    }
}

/// The graph and the group acting on its vertices.
pub struct Setting {
    pub graph: Graph,
    pub action: VertexAction,
}

pub fn build_setting(spec: &InstanceSpec, caps: Caps) -> Result<Setting, InstanceError> {
    let gspec = spec.graph.as_ref().ok_or(InstanceError::Missing("graph"))?;
    let (graph, default_group) = match gspec {
        GraphSpec::Catalog { catalog: name } => {
            let entry = catalog(name.parse::<CatalogName>()?, DEFAULT_VERTEX_CAP)?;
            (entry.graph, Some(entry.group))
        }
        GraphSpec::Explicit {
            vertices,
            edges,
            labels,
        } => {
            let g = Graph::from_edges(*vertices, edges)?;
            let g = match labels {
                Some(l) => g.with_labels(l.clone())?,
                None => g,
            };
            (g, None)
        }
    };
    let points = match &spec.group {
        Some(GroupSpec::Named { named }) => named
            .parse::<NamedGroup>()
            .map_err(InstanceError::Parse)?
            .closure(caps.group)?,
        Some(GroupSpec::Generators { degree, generators }) => {
            let gens = generators
                .iter()
                .map(|g| Permutation::parse(g, *degree))
                .collect::<Result<Vec<_>, _>>()?;
            PermGroup::closure(*degree, gens, caps.group)?
        }
        None => default_group
            .ok_or(InstanceError::Missing("group"))?
            .closure(caps.group)?,
    };
    let action = VertexAction::new(&graph, points)?;
    Ok(Setting { graph, action })
}

fn seed_stars(graph: &Graph, seeds: &SeedSpec) -> Result<(Star, Star), InstanceError> {
    Ok((
        Star::from_labels(graph, seeds.r, &seeds.s)?,
        Star::from_labels(graph, seeds.r, &seeds.t)?,
    ))
}

/// Runs an instance. Errors are recorded in the report rather than returned.
pub fn run(spec: &InstanceSpec) -> AnalysisReport {
    let inputs = serde_json::to_value(spec).expect("spec serializes");
    let task = serde_json::to_value(spec.task).expect("task serializes");
    let mut report = AnalysisReport::new(task.as_str().unwrap_or_default(), inputs);
    if let Err(e) = dispatch(spec, &mut report) {
        report.fail(e.kind(), e.to_string());
    }
    report
}

fn dispatch(spec: &InstanceSpec, report: &mut AnalysisReport) -> Result<(), InstanceError> {
    let caps = spec.caps();
    match spec.task {
        Task::VerifyPaper => {
            let which = spec.examples.as_deref().unwrap_or("all");
            for ex in WorkedExample::parse_list(which)? {
                push_example(report, ex.run(caps)?);
            }
            Ok(())
        }
        Task::Analyze => analyze(spec, caps, report),
        Task::Construct => {
            let set = build_setting(spec, caps)?;
            let seeds = spec.seeds.as_ref().ok_or(InstanceError::Missing("seeds"))?;
            let (s, t) = seed_stars(&set.graph, seeds)?;
            let theta = stars::theta_orbit(&set.graph, set.action.vertices(), &s, &t)?;
            let pi = construct::double_star_graph(&set.graph, &theta)?;
            let ex = verify::analyze_double_star_graph("Π(Σ, Θ)".into(), &pi, caps)?;
            push_example(report, ex);
            Ok(())
        }
        Task::Decompose => decompose(spec, caps, report),
        Task::Search => search(spec, caps, report),
    }
}

fn push_example(report: &mut AnalysisReport, ex: ExampleReport) {
    let data = serde_json::to_value(&ex).expect("example serializes");
    let checks: Vec<Check> = ex.all_checks().cloned().collect();
    report
        .artifacts
        .push((format!("{}-pi", stem(&ex.example)), ex.double_star.graph().clone()));
    report.push(Section::new(ex.example.clone(), data).with_checks(checks));
}

/// A file-name stem for a section name; `construct` when nothing ASCII is left.
fn stem(name: &str) -> String {
    let words: Vec<String> = name
        .split(|c: char| !c.is_ascii_alphanumeric())
        .filter(|w| !w.is_empty())
        .map(str::to_string)
        .collect();
    if words.is_empty() {
        "construct".into()
    } else {
        words.join("-")
    }
}

fn analyze(spec: &InstanceSpec, caps: Caps, report: &mut AnalysisReport) -> Result<(), InstanceError> {
    let set = build_setting(spec, caps)?;
    let (g, x) = (&set.graph, set.action.vertices());
    let arc_transitive = stars::is_arc_transitive(g, x)?;
    let mut level = 0;
    if arc_transitive {
        while level < 3 && construct::is_s_arc_transitive(g, x, level + 1)? {
            level += 1;
        }
    }
    let mut checks = vec![Check::new(
        "X is transitive on the arcs of Σ",
        arc_transitive,
        if arc_transitive {
            format!("(X, {level})-arc-transitive, checked up to 3")
        } else {
            StarError::NotArcTransitive.to_string()
        },
    )];
    let mut data = json!({
        "graph": summarize(g),
        "group_order": x.order(),
        "arc_transitivity": level,
    });
    if let Some(seeds) = &spec.seeds {
        let (s, t) = seed_stars(g, seeds)?;
        let theta = stars::theta_orbit(g, x, &s, &t)?;
        let stab = x.stabilizer(&s)?;
        data["theta"] = json!({
            "size": theta.len(),
            "self_paired": theta.self_paired(),
            "level": theta.level(),
            "x_symmetric": theta.is_x_symmetric(),
            "stabilizer": set.action.point_strings(&stab),
            "pairing_witness": theta
                .pairing_witness()
                .and_then(|z| set.action.point_form(z))
                .map(|p| p.to_string()),
        });
        checks.push(Check::new(
            "Θ is X-symmetric",
            theta.is_x_symmetric(),
            format!("self-paired {}, level {}", theta.self_paired(), theta.level()),
        ));
    }
    report.push(Section::new("analyze", data).with_checks(checks));
    Ok(())
}

fn decompose(spec: &InstanceSpec, caps: Caps, report: &mut AnalysisReport) -> Result<(), InstanceError> {
    let set = build_setting(spec, caps)?;
    let (graph, group, partition) = match (&spec.partition, &spec.seeds) {
        (Some(blocks), _) => {
            let g = &set.graph;
            let blocks = blocks
                .iter()
                .map(|b| b.iter().map(|l| g.vertex_by_label(l)).collect())
                .collect::<Result<Vec<Vec<usize>>, _>>()?;
            let p = Partition::new(g.vertex_count(), blocks)?;
            (set.graph.clone(), set.action.vertices().clone(), p)
        }
        (None, Some(seeds)) => {
            let (s, t) = seed_stars(&set.graph, seeds)?;
            let theta = stars::theta_orbit(&set.graph, set.action.vertices(), &s, &t)?;
            let pi = construct::double_star_graph(&set.graph, &theta)?;
            (
                pi.graph().clone(),
                pi.action().clone(),
                pi.center_partition().clone(),
            )
        }
        (None, None) => return Err(InstanceError::Missing("partition")),
    };
    let series = quotient::refinement_series(
        &graph,
        &group,
        &partition,
        SeriesOptions {
            iso_cap: caps.iso,
            check_isomorphisms: true,
        },
    )?;
    let levels: Vec<_> = series.levels.iter().map(|l| l.params).collect();
    let data = json!({
        "graph": summarize(&graph),
        "levels": levels,
        "m": series.m,
        "h": series.h,
        "bound": series.bound,
        "terminal": series.terminal,
    });
    let mut checks = series.checks.clone();
    checks.extend(quotient::block_valency_checks(&graph, &series));
    checks.push(quotient::component_nesting_check(&graph, &series));
    let rec = quotient::reconstruct(&graph, &group, &partition, 1, caps.iso)?;
    checks.extend(rec.checks);
    for (i, lv) in series.levels.iter().enumerate() {
        report.artifacts.push((
            format!("quotient-{i}"),
            quotient::quotient_graph(&graph, &lv.partition),
        ));
    }
    report.artifacts.push(("reconstructed".into(), rec.pi.graph().clone()));
    report.push(Section::new("decompose", data).with_checks(checks));
    Ok(())
}

fn search(spec: &InstanceSpec, caps: Caps, report: &mut AnalysisReport) -> Result<(), InstanceError> {
    let set = build_setting(spec, caps)?;
    let params = spec.params.ok_or(InstanceError::Missing("params"))?;
    let (g, x) = (&set.graph, set.action.vertices());
    let orbits = stars::enumerate_double_star_orbits(
        g,
        x,
        params,
        EnumerationCaps {
            stars: caps.stars,
            orbits: EnumerationCaps::default().orbits,
        },
    )?;
    let mut rows = Vec::new();
    for (i, theta) in orbits.iter().enumerate() {
        let rep = theta.representative();
        let mut row = json!({
            "s": rep.left.display(g).to_string(),
            "t": rep.right.display(g).to_string(),
            "size": theta.len(),
            "self_paired": theta.self_paired(),
            "level": theta.level(),
            "x_symmetric": theta.is_x_symmetric(),
        });
        if theta.is_x_symmetric() {
            let pi = construct::double_star_graph(g, theta)?;
            row["pi"] = serde_json::to_value(summarize(pi.graph())).expect("summary serializes");
            report.artifacts.push((format!("orbit-{i}-pi"), pi.graph().clone()));
        }
        rows.push(row);
    }
    let symmetric = orbits.iter().filter(|t| t.is_x_symmetric()).count();
    report.push(Section::new("search", json!({ "params": params, "orbits": rows })).with_checks(
        vec![Check::new(
            "orbits enumerated",
            true,
            format!("{} orbits, {symmetric} X-symmetric", orbits.len()),
        )],
    ));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_catalog_instance() {
        let spec = InstanceSpec::from_json(
            r#"{"task": "analyze", "graph": {"catalog": "complete 5"}, "caps": {"iso": 64}}"#,
        )
        .unwrap();
        assert_eq!(spec.task, Task::Analyze);
        assert_eq!(spec.caps().iso, 64);
        let report = run(&spec);
        assert_eq!(report.exit_code(), 0, "{:?}", report.error);
    }

    #[test]
    fn trivial_group_is_not_arc_transitive() {
        let spec = InstanceSpec::from_json(
            r#"{"task": "analyze", "graph": {"catalog": "complete 5"},
                "group": {"degree": 5, "generators": ["(1)"]}}"#,
        )
        .unwrap();
        let report = run(&spec);
        assert_eq!(report.exit_code(), 2);
    }

    #[test]
    fn malformed_input_is_a_parse_error() {
        assert!(InstanceSpec::from_json(r#"{"task": "dance"}"#).is_err());
        let spec = InstanceSpec::from_json(r#"{"task": "analyze", "graph": {"catalog": "moebius 3"}}"#)
            .unwrap();
        assert_eq!(run(&spec).exit_code(), 4);
    }
}
