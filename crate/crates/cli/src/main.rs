use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use k0rep_cli::golden::{self, CrossOutcome, Engine};
use k0rep_cli::json::{group_value, report_value};
use k0rep_cli::sweep::{self, SweepSpec};
use k0rep_cli::{dot, parse_range};
use k0rep_core::ar::{build_orbit_quiver, k0_via_ar, orbit_vertex_count};
use k0rep_core::closed_forms::{ArOutcome, Method, DEFAULT_MAX_VERTICES};
use k0rep_core::{k0_repetitive, predict, verify, DynkinSpec, Family, K0Job};
use serde_json::json;

const VERIFY_FAILED: u8 = 1;
const USAGE: u8 = 2;
const INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "k0rep",
    version,
    about = "Grothendieck groups of repetitive cluster categories of type A and D"
)]
struct Cli {
    /// Largest orbit quiver the AR route will build.
    #[arg(long, global = true, env = "K0REP_MAX_VERTICES", default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComputeMethod {
    Snf,
    Ar,
    Predict,
    Both,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMethod {
    Snf,
    Ar,
    Predict,
}

impl From<SweepMethod> for Method {
    fn from(m: SweepMethod) -> Method {
        match m {
            SweepMethod::Snf => Method::Snf,
            SweepMethod::Ar => Method::Ar,
            SweepMethod::Predict => Method::Predict,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CsvOrJson {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Paper,
    Cross,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// K₀ of a single category.
    Compute {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "snf")]
        method: ComputeMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Run the golden examples and/or the SNF-vs-AR grid.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        max_p: u64,
    },
    /// Tabulate K₀ over ranges of n and p.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Inclusive, e.g. 2..4
        #[arg(long, value_parser = parse_range)]
        n_range: std::ops::RangeInclusive<u64>,
        /// Inclusive, e.g. 1..8
        #[arg(long, value_parser = parse_range)]
        p_range: std::ops::RangeInclusive<u64>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "snf")]
        method: Vec<SweepMethod>,
        #[arg(long, value_enum, default_value = "csv")]
        format: CsvOrJson,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Export the orbit quiver as Graphviz DOT.
    Quiver {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn job(family: FamilyArg, n: usize, p: u64) -> Result<K0Job, Failure> {
    let spec = DynkinSpec::new(family.into(), n).map_err(|e| fail(USAGE, e.to_string()))?;
    K0Job::new(spec, p).map_err(|e| fail(USAGE, e.to_string()))
}

fn open_out(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    match path {
        Some(p) => File::create(p)
            .map(|f| Box::new(BufWriter::new(f)) as Box<dyn Write>)
            .map_err(|e| fail(USAGE, format!("cannot write {}: {e}", p.display()))),
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn io_err(e: impl std::fmt::Display) -> Failure {
    fail(USAGE, format!("write failed: {e}"))
}

fn compute(
    job: K0Job,
    method: ComputeMethod,
    format: TextOrJson,
    budget: u64,
) -> Result<u8, Failure> {
    let spec = job.spec;
    let p = job.p;
    let over_budget = || {
        let v = orbit_vertex_count(&spec, p);
        (v > budget).then_some(v)
    };
    let mut out = io::stdout().lock();
    let mut code = 0;
    match method {
        ComputeMethod::Snf | ComputeMethod::Ar => {
            let g = if method == ComputeMethod::Snf {
                k0_repetitive(&job)
            } else {
                if let Some(v) = over_budget() {
                    return Err(fail(
                        USAGE,
                        format!("orbit quiver has {v} vertices, over the budget of {budget}"),
                    ));
                }
                k0_via_ar(&spec, p).map_err(|e| fail(INCONSISTENT, e.to_string()))?
            };
            match format {
                TextOrJson::Text => writeln!(out, "{g}"),
                TextOrJson::Json => writeln!(out, "{}", group_value(&g)),
            }
            .map_err(io_err)?;
        }
        ComputeMethod::Predict => {
            let pr = predict(&spec, p);
            let g = pr.resolved_group();
            match format {
                TextOrJson::Text => {
                    let shown = g
                        .as_ref()
                        .map_or("not covered".to_string(), ToString::to_string);
                    writeln!(out, "{shown} [{}]", pr.source())
                }
                TextOrJson::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "group": g.as_ref().map(group_value),
                        "presentation": pr.explicit_presentation().map(ToString::to_string),
                        "source": pr.source(),
                    })
                ),
            }
            .map_err(io_err)?;
        }
        ComputeMethod::Both => {
            let snf = k0_repetitive(&job);
            let ar = match over_budget() {
                Some(vertices) => ArOutcome::SkippedBudget { vertices, budget },
                None => match k0_via_ar(&spec, p) {
                    Ok(g) => ArOutcome::Computed(g),
                    Err(e) => ArOutcome::Failed(e),
                },
            };
            let agree = match &ar {
                ArOutcome::Computed(g) => *g == snf,
                ArOutcome::SkippedBudget { .. } => true,
                ArOutcome::Failed(_) => false,
            };
            match format {
                TextOrJson::Text if agree => writeln!(out, "{snf}"),
                TextOrJson::Text => writeln!(out, "snf: {snf}\nar: {}", ar_text(&ar)),
                TextOrJson::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "snf": group_value(&snf),
                        "ar": k0rep_cli::json::ar_value(&ar),
                        "agree": agree,
                    })
                ),
            }
            .map_err(io_err)?;
            if let ArOutcome::SkippedBudget { vertices, .. } = ar {
                eprintln!("ar skipped: {vertices} vertices over the budget of {budget}");
            }
            if !agree {
                code = INCONSISTENT;
            }
        }
        ComputeMethod::All => {
            let r = verify(&spec, p, budget).map_err(|e| fail(USAGE, e.to_string()))?;
            let snf_ar_clash = match &r.ar {
                ArOutcome::Computed(g) => *g != r.snf,
                ArOutcome::Failed(_) => true,
                ArOutcome::SkippedBudget { .. } => false,
            };
            match format {
                TextOrJson::Text => {
                    let pred = r
                        .predicted_group
                        .as_ref()
                        .map_or("not covered".to_string(), ToString::to_string);
                    writeln!(
                        out,
                        "snf: {}\nar: {}\npredict: {pred} [{}]\n{}",
                        r.snf,
                        ar_text(&r.ar),
                        r.prediction.source(),
                        if r.pass { "PASS" } else { "FAIL" }
                    )
                }
                TextOrJson::Json => writeln!(out, "{}", report_value(&r)),
            }
            .map_err(io_err)?;
            code = if snf_ar_clash {
                INCONSISTENT
            } else if r.pass {
                0
            } else {
                VERIFY_FAILED
            };
        }
    }
    Ok(code)
}

fn ar_text(ar: &ArOutcome) -> String {
    match ar {
        ArOutcome::Computed(g) => g.to_string(),
        ArOutcome::SkippedBudget { .. } => "skipped(budget)".into(),
        ArOutcome::Failed(e) => format!("error: {e}"),
    }
}

fn run_verify(suite: Suite, max_n: usize, max_p: u64, budget: u64) -> Result<u8, Failure> {
    let mut out = io::stdout().lock();
    let mut failures = Vec::new();
    let (mut passed, mut skipped) = (0usize, 0usize);
    if suite != Suite::Cross {
        for o in golden::run_golden(&Engine::default()) {
            writeln!(
                out,
                "{} golden {}",
                if o.pass { "PASS" } else { "FAIL" },
                o.name
            )
            .map_err(io_err)?;
            if o.pass {
                passed += 1;
            } else {
                failures.push(format!(
                    "{}\n  - expected: {}\n  + got:      {}",
                    o.name, o.expected, o.got
                ));
            }
        }
    }
    if suite != Suite::Paper {
        for c in golden::run_cross(max_n, max_p, budget) {
            let name = format!("{} p={}", c.spec, c.p);
            let line = match &c.outcome {
                CrossOutcome::Agree(g) => {
                    passed += 1;
                    format!("PASS cross {name}: {g}")
                }
                CrossOutcome::Skipped { vertices } => {
                    skipped += 1;
                    format!("SKIP cross {name}: skipped(budget), {vertices} vertices")
                }
                CrossOutcome::Disagree { snf, ar } => {
                    failures.push(format!("{name}\n  - snf: {snf}\n  + ar:  {ar}"));
                    format!("FAIL cross {name}")
                }
                CrossOutcome::Failed(e) => {
                    failures.push(format!("{name}\n  ar error: {e}"));
                    format!("FAIL cross {name}")
                }
            };
            writeln!(out, "{line}").map_err(io_err)?;
        }
    }
    writeln!(
        out,
        "{passed} passed, {} failed, {skipped} skipped",
        failures.len()
    )
    .map_err(io_err)?;
    if failures.is_empty() {
        return Ok(0);
    }
    writeln!(out, "\nfailures:").map_err(io_err)?;
    for f in &failures {
        writeln!(out, "{f}").map_err(io_err)?;
    }
    Ok(VERIFY_FAILED)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let budget = cli.max_vertices;
    match cli.command {
        Command::Compute {
            family,
            n,
            p,
            method,
            format,
        } => compute(job(family, n, p)?, method, format, budget),
        Command::Verify {
            suite,
            max_n,
            max_p,
        } => run_verify(suite, max_n, max_p, budget),
        Command::Sweep {
            family,
            n_range,
            p_range,
            method,
            format,
            out,
            jobs,
        } => {
            let spec = SweepSpec {
                family: family.into(),
                n_range,
                p_range,
                methods: method.into_iter().map(Method::from).collect(),
            };
            spec.validate().map_err(|e| fail(USAGE, e))?;
            let mut w = open_out(out.as_ref())?;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                pool = pool.num_threads(j);
            }
            let pool = pool.build().map_err(|e| fail(USAGE, e.to_string()))?;
            let rows = pool.install(|| sweep::run(&spec, budget));
            match format {
                CsvOrJson::Csv => sweep::write_csv(&rows, &mut w).map_err(io_err)?,
                CsvOrJson::Json => sweep::write_json(&rows, &mut w).map_err(io_err)?,
            }
            w.flush().map_err(io_err)?;
            Ok(0)
        }
        Command::Quiver { family, n, p, out } => {
            let job = job(family, n, p)?;
            let v = orbit_vertex_count(&job.spec, p);
            if v > budget {
                return Err(fail(
                    USAGE,
                    format!("orbit quiver has {v} vertices, over the budget of {budget}"),
                ));
            }
            let q =
                build_orbit_quiver(&job.spec, p).map_err(|e| fail(INCONSISTENT, e.to_string()))?;
            let mut w = open_out(out.as_ref())?;
            w.write_all(dot::to_dot(&q).as_bytes()).map_err(io_err)?;
            w.flush().map_err(io_err)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
