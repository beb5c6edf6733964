//! Library side of the `leflab` binary: argument types, command dispatch,
//! rendering and the corpus scanner with its cache.

pub mod args;
mod render;
pub mod scan;

use std::fs;
use std::path::{Path, PathBuf};

use leflab_core::arrangement::{analyze, AnalysisOptions, Arrangement, CorpusSpec};
use leflab_core::gin::{gin_is_saturated, regularity, rgin};
use leflab_core::hilbert::hilbert_function;
use leflab_core::lefschetz::{aci_analyze, cross_validate, decide, Property};
use leflab_core::polyring::parse_polynomial;
use leflab_core::{Error, Ideal};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use args::{AnalysisArgs, ArrCommand, Cli, Command, Format, PropertyArg, RunConfig};
use scan::{scan, Cache};

/// Version tag of the structured output and of cache entries.
pub const SCHEMA: &str = "leflab/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Holds = 0,
    Fails = 1,
    Parse = 2,
    Randomization = 3,
    TheoremViolation = 4,
    DimensionGuard = 5,
}

impl Exit {
    pub fn for_error(e: &Error) -> Exit {
        match e {
            Error::Parse { .. }
            | Error::TooManyVariables(_)
            | Error::VariableCountMismatch { .. }
            | Error::NotHomogeneous(_)
            | Error::ZeroPolynomial
            | Error::InvalidArrangement(_) => Exit::Parse,
            Error::GinNonConvergence { .. } | Error::SaturationCertification(_) | Error::SingularChange => Exit::Randomization,
            Error::DimensionGuard { .. } => Exit::DimensionGuard,
            Error::NotStronglyStable | Error::Invariant(_) => Exit::TheoremViolation,
        }
    }
}

/// Everything a run prints, plus its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit: Exit,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new(exit: Exit, stdout: String) -> Self {
        Outcome { exit, stdout, stderr: String::new() }
    }

    fn failure(exit: Exit, message: String) -> Self {
        Outcome { exit, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.config.jobs {
        pool = pool.num_threads(j as usize);
    }
    match pool.build() {
        Ok(pool) => pool.install(|| dispatch(cli)),
        Err(e) => Outcome::failure(Exit::Randomization, format!("cannot start worker threads: {e}")),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let cfg = &cli.config;
    let result = match &cli.command {
        Command::Gin { file, nvars } => cmd_gin(cfg, file, *nvars),
        Command::Lefschetz { file, property, nvars, cross_validate } => {
            cmd_lefschetz(cfg, file, *property, *nvars, *cross_validate)
        }
        Command::Arr { action: ArrCommand::Analyze { file, analysis } } => cmd_arr_analyze(cfg, file, analysis),
        Command::Arr { action: ArrCommand::Scan { count, nvars, min_d, max_d, all, analysis } } => {
            let spec = CorpusSpec {
                count: *count,
                nvars: *nvars,
                min_d: min_d.unwrap_or(*nvars),
                max_d: *max_d,
                seed: cfg.seed,
                bound: 3,
                essential_only: !*all,
            };
            cmd_arr_scan(cfg, &spec, analysis)
        }
        Command::Aci { f0, f1, f2 } => cmd_aci(cfg, [f0, f1, f2]),
    };
    result.unwrap_or_else(|(exit, message)| Outcome::failure(exit, message))
}

type CmdResult = std::result::Result<Outcome, (Exit, String)>;

fn core_err(e: Error) -> (Exit, String) {
    (Exit::for_error(&e), e.to_string())
}

fn read(path: &Path) -> std::result::Result<String, (Exit, String)> {
    fs::read_to_string(path).map_err(|e| (Exit::Parse, format!("cannot read {}: {e}", path.display())))
}

fn document(cfg: &RunConfig, command: &str, result: Value) -> String {
    let doc = json!({
        "schema": SCHEMA,
        "command": command,
        "config": cfg.summary(),
        "result": result,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("documents serialize");
    s.push('\n');
    s
}

fn cmd_gin(cfg: &RunConfig, file: &Path, nvars: Option<usize>) -> CmdResult {
    let ideal = Ideal::parse_file(&read(file)?, nvars).map_err(core_err)?;
    let cert = rgin(&ideal, &cfg.gin_options()).map_err(core_err)?;
    let reg = regularity(&cert.result).map_err(core_err)?;
    let saturated = gin_is_saturated(&cert.result);
    let hf: Vec<usize> = (0..=reg + 2).map(|d| hilbert_function(&cert.result, d)).collect();
    let out = match cfg.format {
        Format::Text => render::gin(&cert, reg, saturated, &hf),
        Format::Structured => document(
            cfg,
            "gin",
            json!({ "certificate": cert, "regularity": reg, "saturated": saturated, "hilbert_function": hf }),
        ),
    };
    Ok(Outcome::new(Exit::Holds, out))
}

fn cmd_lefschetz(cfg: &RunConfig, file: &Path, property: PropertyArg, nvars: Option<usize>, validate: bool) -> CmdResult {
    let ideal = Ideal::parse_file(&read(file)?, nvars).map_err(core_err)?;
    let property = match property {
        PropertyArg::Wlp => Property::Wlp,
        PropertyArg::Slp => Property::Slp,
    };
    let opts = cfg.gin_options();
    let report = if validate { cross_validate(&ideal, property, &opts) } else { decide(&ideal, property, &opts) }
        .map_err(core_err)?;
    let out = match cfg.format {
        Format::Text => render::lefschetz(&report),
        Format::Structured => document(cfg, "lefschetz", serde_json::to_value(&report).expect("reports serialize")),
    };
    Ok(Outcome::new(if report.holds { Exit::Holds } else { Exit::Fails }, out))
}

fn analysis_options(cfg: &RunConfig, a: &AnalysisArgs) -> AnalysisOptions {
    AnalysisOptions { gin: cfg.gin_options(), include_q: a.include_q, cross_validate: a.cross_validate }
}

/// Writes `body` under a content-derived name and returns the path.
fn write_reproducer(cfg: &RunConfig, body: &str) -> std::result::Result<PathBuf, (Exit, String)> {
    let digest = hex::encode(Sha256::digest(body.as_bytes()));
    let path = cfg.reproducer_dir.join(format!("leflab-reproducer-{}.txt", &digest[..16]));
    fs::create_dir_all(&cfg.reproducer_dir)
        .and_then(|_| fs::write(&path, body))
        .map_err(|e| (Exit::TheoremViolation, format!("cannot write reproducer {}: {e}", path.display())))?;
    Ok(path)
}

fn arrangement_reproducer(cfg: &RunConfig, a: &Arrangement, violations: &[String]) -> String {
    let mut body = String::new();
    for v in violations {
        body.push_str(&format!("# violated: {v}\n"));
    }
    body.push_str(&format!("# seed {:#x}, bound {}, retries {}\n", cfg.seed, cfg.bound, cfg.retries));
    body.push_str(&a.clone().unnamed().to_text());
    body
}

fn cmd_arr_analyze(cfg: &RunConfig, file: &Path, analysis: &AnalysisArgs) -> CmdResult {
    let a = Arrangement::parse(&read(file)?).map_err(core_err)?;
    let report = analyze(&a, &analysis_options(cfg, analysis)).map_err(core_err)?;
    let value = serde_json::to_value(&report).expect("reports serialize");
    let violations = scan::violations(&value);
    let mut out = Outcome::new(
        Exit::Holds,
        match cfg.format {
            Format::Text => render::arrangement(&value),
            Format::Structured => document(cfg, "arr analyze", value),
        },
    );
    if !violations.is_empty() {
        let path = write_reproducer(cfg, &arrangement_reproducer(cfg, &a, &violations))?;
        out.exit = Exit::TheoremViolation;
        out.stderr = format!("error: theorem check failed: {}; reproducer written to {}\n", violations.join("; "), path.display());
    }
    Ok(out)
}

fn cmd_arr_scan(cfg: &RunConfig, spec: &CorpusSpec, analysis: &AnalysisArgs) -> CmdResult {
    let cache = match &cfg.cache_dir {
        Some(dir) => Some(Cache::open(dir).map_err(|e| (Exit::Parse, format!("cannot open cache {}: {e}", dir.display())))?),
        None => None,
    };
    let opts = analysis_options(cfg, analysis);
    let entries = scan(spec, &opts, cache.as_ref()).map_err(core_err)?;
    let hits = entries.iter().filter(|e| e.cached).count();
    let out = match cfg.format {
        Format::Text => render::scan_table(spec, &entries),
        Format::Structured => {
            let reports: Vec<Value> = entries
                .iter()
                .map(|e| json!({ "index": e.index, "violations": scan::violations(&e.report), "report": e.report }))
                .collect();
            document(cfg, "arr scan", json!({ "corpus": spec, "summary": render::scan_summary(&entries), "reports": reports }))
        }
    };
    let mut outcome = Outcome::new(Exit::Holds, out);
    outcome.stderr = format!("cache: {hits} of {} reports reused\n", entries.len());
    let mut written = Vec::new();
    for e in &entries {
        let v = scan::violations(&e.report);
        if !v.is_empty() {
            let path = write_reproducer(cfg, &arrangement_reproducer(cfg, &e.arrangement, &v))?;
            written.push(format!("error: arrangement {} fails {}; reproducer written to {}\n", e.index, v.join("; "), path.display()));
        }
    }
    if !written.is_empty() {
        outcome.exit = Exit::TheoremViolation;
        outcome.stderr.push_str(&written.concat());
    }
    Ok(outcome)
}

fn cmd_aci(cfg: &RunConfig, forms: [&String; 3]) -> CmdResult {
    let mut polys = Vec::with_capacity(3);
    for (k, f) in forms.iter().enumerate() {
        polys.push(parse_polynomial(f, 3).map_err(|e| match e {
            Error::Parse { column, message, .. } => (Exit::Parse, format!("form {}: column {column}: {message}", k + 1)),
            other => core_err(other),
        })?);
    }
    let report = aci_analyze(&polys[0], &polys[1], &polys[2], &cfg.gin_options()).map_err(core_err)?;
    let out = match cfg.format {
        Format::Text => render::aci(&report),
        Format::Structured => document(cfg, "aci", serde_json::to_value(&report).expect("reports serialize")),
    };
    let mut outcome = Outcome::new(if report.wlp.holds { Exit::Holds } else { Exit::Fails }, out);
    if !report.consistent() {
        let mut body: String = report.violations.iter().map(|v| format!("# violated: {v}\n")).collect();
        body.push_str("3\n");
        for p in &polys {
            body.push_str(&format!("{p}\n"));
        }
        let path = write_reproducer(cfg, &body)?;
        outcome.exit = Exit::TheoremViolation;
        outcome.stderr = format!("error: theorem check failed; reproducer written to {}\n", path.display());
    }
    Ok(outcome)
}
