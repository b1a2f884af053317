use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use doublestar::graph::io::{to_dot, to_graph6};
use doublestar::instance::{self, InstanceSpec, Task};
use doublestar::report::{AnalysisReport, ErrorKind, Status};

/// Stars, double-star graphs and block refinement for symmetric graphs.
#[derive(Parser, Debug)]
#[command(name = "doublestar", version)]
struct Cli {
    /// Instance file (JSON).
    #[arg(long)]
    instance: Option<PathBuf>,
    /// analyze, construct, decompose, search or verify-paper; overrides the
    /// instance file.
    #[arg(long)]
    task: Option<Task>,
    /// Examples for verify-paper: example-1 .. example-4, example-4:n, all.
    #[arg(long)]
    examples: Option<String>,
    /// Directory for report.json and graph dumps; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    cap_group: Option<usize>,
    #[arg(long)]
    cap_stars: Option<usize>,
    #[arg(long)]
    cap_iso: Option<usize>,
    /// Comma-separated outputs: json, dot, graph6.
    #[arg(long, value_delimiter = ',', default_value = "json")]
    emit: Vec<String>,
}

fn load(cli: &Cli) -> Result<InstanceSpec, String> {
    let mut spec = match &cli.instance {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            InstanceSpec::from_json(&text).map_err(|e| e.to_string())?
        }
        None => match cli.task {
            Some(Task::VerifyPaper) | None => InstanceSpec::verify_paper("all"),
            Some(t) => return Err(format!("task {t:?} needs --instance")),
        },
    };
    if let Some(t) = cli.task {
        spec.task = t;
    }
    if let Some(e) = &cli.examples {
        spec.examples = Some(e.clone());
    }
    spec.caps.group = cli.cap_group.or(spec.caps.group);
    spec.caps.stars = cli.cap_stars.or(spec.caps.stars);
    spec.caps.iso = cli.cap_iso.or(spec.caps.iso);
    Ok(spec)
}

fn write_outputs(cli: &Cli, report: &AnalysisReport) -> std::io::Result<()> {
    let json = report.to_json();
    let Some(dir) = &cli.out else {
        let mut out = std::io::stdout().lock();
        return match writeln!(out, "{json}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => r,
        };
    };
    fs::create_dir_all(dir)?;
    if cli.emit.iter().any(|e| e == "json") {
        fs::write(dir.join("report.json"), json + "\n")?;
    }
    for (name, g) in &report.artifacts {
        if cli.emit.iter().any(|e| e == "graph6") {
            fs::write(dir.join(format!("{name}.g6")), to_graph6(g) + "\n")?;
        }
        if cli.emit.iter().any(|e| e == "dot") {
            fs::write(dir.join(format!("{name}.dot")), to_dot(g, name))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(bad) = cli.emit.iter().find(|e| !["json", "dot", "graph6"].contains(&e.as_str())) {
        eprintln!("unknown --emit format {bad:?}");
        return ExitCode::from(4);
    }
    let start = Instant::now();
    let report = match load(&cli) {
        Ok(spec) => instance::run(&spec),
        Err(e) => {
            let mut r = AnalysisReport::new("load", serde_json::Value::Null);
            r.fail(ErrorKind::Parse, e);
            r
        }
    };
    for section in &report.sections {
        for c in section.checks.iter().filter(|c| c.status != Status::Pass) {
            eprintln!("{}: {c}", section.name);
        }
        let passed = section.checks.iter().filter(|c| c.passed()).count();
        eprintln!("{}: {passed}/{} checks passed", section.name, section.checks.len());
    }
    if let Some(e) = &report.error {
        eprintln!("error: {e}");
    }
    eprintln!("status {} in {:.2?}", report.status, start.elapsed());
    if let Err(e) = write_outputs(&cli, &report) {
        eprintln!("cannot write outputs: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code() as u8)
}
