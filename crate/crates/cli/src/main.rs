use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use magarr_core::arrangement::catalog;
use magarr_core::golden;
use magarr_core::homology::CheckStatus;
use magarr_core::report::{self, JobSpec, Task};

/// Magnitude and magnitude homology of real central hyperplane arrangements.
#[derive(Parser, Debug)]
#[command(name = "magarr", version)]
struct Cli {
    /// lattice, mag, homology, conjectures, verify (comma-separated to combine),
    /// golden, or catalog
    task: String,

    /// Catalog name (e.g. braid:4, u34, coxeter:B3) or a JSON / matrix file
    source: Option<String>,

    /// Largest length l for magnitude homology
    #[arg(long)]
    lmax: Option<usize>,

    /// Abort when a single length has more proper chains than this
    #[arg(long)]
    budget: Option<u64>,

    /// Number of series coefficients to report, minus one
    #[arg(long)]
    series: Option<usize>,

    /// Compare det V_q with the product formula, however many chambers
    #[arg(long)]
    det_check: bool,

    /// Skip the face-decomposition cross-checks
    #[arg(long)]
    no_face_check: bool,

    /// Skip the order-complex computation of geodesic homology
    #[arg(long)]
    no_geodesic_check: bool,

    /// Write the JSON report here ("-" for stdout)
    #[arg(long)]
    json: Option<PathBuf>,

    /// Write the Betti table as TSV here
    #[arg(long)]
    tsv: Option<PathBuf>,

    /// Lattice cache directory (defaults to $MAGARR_CACHE when set)
    #[arg(long)]
    cache: Option<PathBuf>,

    /// Include wall-clock timings in the report
    #[arg(long)]
    timings: bool,

    /// For golden: NAME=PATH supplies normals for a fixture without a catalog entry
    #[arg(long = "normals", value_name = "NAME=PATH")]
    normals: Vec<String>,

    /// For golden: run only these fixtures
    #[arg(long)]
    only: Vec<String>,
}

fn parse_tasks(s: &str) -> Result<Vec<Task>> {
    s.split(',')
        .map(|t| match t.trim() {
            "lattice" => Ok(Task::Lattice),
            "mag" => Ok(Task::Mag),
            "homology" => Ok(Task::Homology),
            "conjectures" => Ok(Task::Conjectures),
            "verify" => Ok(Task::Verify),
            other => Err(anyhow!("unknown task {other:?}")),
        })
        .collect()
}

fn write_out(path: &PathBuf, text: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        print!("{text}");
        return Ok(());
    }
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run_golden(cli: &Cli) -> Result<bool> {
    let mut normals = BTreeMap::new();
    for spec in &cli.normals {
        let (name, path) = spec.split_once('=').ok_or_else(|| anyhow!("--normals expects NAME=PATH, got {spec:?}"))?;
        normals.insert(name.to_string(), PathBuf::from(path));
    }
    let outcomes = golden::verify_all(&normals, &cli.only)?;
    let mut ok = true;
    for o in &outcomes {
        let line = match &o.status {
            CheckStatus::Pass => "ok".to_string(),
            CheckStatus::Fail(d) => {
                ok = false;
                format!("FAIL {d}")
            }
            CheckStatus::Skipped(d) => format!("skipped ({d})"),
        };
        println!("{:<10} {:<9} {line}", o.name, o.kind);
    }
    if let Some(path) = &cli.json {
        write_out(path, &serde_json::to_string_pretty(&outcomes)?)?;
    }
    Ok(ok)
}

fn run(cli: &Cli) -> Result<bool> {
    match cli.task.as_str() {
        "golden" => return run_golden(cli),
        "catalog" => {
            for name in catalog::STANDARD {
                println!("{name}");
            }
            return Ok(true);
        }
        _ => {}
    }
    let source = cli.source.clone().ok_or_else(|| anyhow!("missing arrangement source"))?;
    let mut job = JobSpec::new(source, parse_tasks(&cli.task)?);
    job.max_length = cli.lmax;
    if let Some(b) = cli.budget {
        job.budget = b;
    }
    if let Some(s) = cli.series {
        job.series_order = s;
    }
    job.det_check = cli.det_check;
    job.face_check = !cli.no_face_check;
    job.geodesic_check = !cli.no_geodesic_check;
    job.cache_dir = cli.cache.clone();
    job.timings = cli.timings;

    let bundle = report::run(&job)?;
    let to_stdout = cli.json.as_ref().is_some_and(|p| p.as_os_str() == "-");
    if !to_stdout {
        print!("{}", report::render_text(&bundle));
    }
    if let Some(path) = &cli.json {
        write_out(path, &(bundle.to_json() + "\n"))?;
    }
    if let Some(path) = &cli.tsv {
        let Some(h) = &bundle.homology else {
            bail!("--tsv needs the homology task");
        };
        write_out(path, &h.table.to_tsv())?;
    }
    Ok(bundle.failed_checks().is_empty())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
