//! `wpi`: presentations, oracles and numeric experiments from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

mod config;
mod source;
mod verify;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use wpi_core::group::{abelianization, todd_coxeter, CosetOutcome};
use wpi_core::hl::{closed_form_values, CriticalValueTable, HLParams, TableEntry};
use wpi_core::lattice::build_graph;
use wpi_core::numerology::degrees;
use wpi_core::polyalg::weierstrass_slice_zdegree;
use wpi_core::presentation::{serialize, Format as PresentationFormat};
use wpi_core::{BigInt, Complex64, Presentation};

use config::{Config, DEFAULT_MAX_COSETS};
use source::{parse_word, SourceArgs};
use verify::VerifyArgs;

#[derive(Parser, Debug)]
#[command(name = "wpi", version, about = "Braid monodromy presentations and their oracles")]
struct Cli {
    /// TOML file with default parameters; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
    Gap,
    Magma,
    Dot,
    Csv,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OutputFormat::Json => "json",
            OutputFormat::Text => "text",
            OutputFormat::Gap => "gap",
            OutputFormat::Magma => "magma",
            OutputFormat::Dot => "dot",
            OutputFormat::Csv => "csv",
        };
        f.write_str(name)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a presentation (json, gap, magma or text).
    Present(SourceArgs),
    /// Run a verification suite; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// The lattice graph Γ_{n,d} (json or dot).
    Graph(DimArgs),
    /// Abelian invariants of a presentation.
    Abelianize(SourceArgs),
    /// Coset enumeration over a subgroup (trivial by default).
    ToddCoxeter(ToddCoxeterArgs),
    /// Closed-form critical values of the perturbed Brieskorn-Pham polynomial.
    Hl(HlArgs),
    /// Exact z-degree of the discriminant on a random Weierstrass slice.
    Slice(SliceArgs),
    /// Degree bookkeeping for the discriminant and bifurcation polynomials.
    Formulas(FormulaArgs),
}

#[derive(Args, Debug)]
struct DimArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<u32>,
}

#[derive(Args, Debug)]
struct ToddCoxeterArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    max_cosets: Option<usize>,
    /// Subgroup generator such as `t_1_1*t_1_2^-1`; repeatable.
    #[arg(long = "subgroup")]
    subgroup: Vec<String>,
}

#[derive(Args, Debug)]
struct HlArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<u32>,
    /// Positive coefficients v_0,…,v_n; defaults to v_κ = 0.01^κ.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    v: Option<Vec<f64>>,
}

#[derive(Args, Debug)]
struct SliceArgs {
    #[arg(long)]
    d: Option<u32>,
    /// Falls back to the config file, then WPI_SEED, then 42.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    d_max: Option<u32>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(wpi_core::Error),
    /// Checks ran and at least one failed; carries the rendered report.
    Failed(String),
}

impl From<wpi_core::Error> for CliError {
    fn from(e: wpi_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Failed(_) => f.write_str("verification failed"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(out)) => {
            print!("{out}");
            eprintln!("wpi: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("wpi: {e}");
            ExitCode::from(2)
        }
    }
}

fn resolve_format(cli: &Cli, cfg: &Config) -> Result<OutputFormat, CliError> {
    if let Some(f) = cli.format {
        return Ok(f);
    }
    match &cfg.format {
        Some(name) => OutputFormat::from_str(name, true)
            .map_err(|_| CliError::Usage(format!("unknown format `{name}` in config"))),
        None => Ok(OutputFormat::Json),
    }
}

fn unsupported(command: &str, format: OutputFormat) -> CliError {
    CliError::Usage(format!("`{command}` does not support --format {format}"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let cfg = Config::load(cli.config.as_deref())?;
    let format = resolve_format(cli, &cfg)?;
    match &cli.command {
        Command::Present(src) => present(src, &cfg, format),
        Command::Verify(args) => {
            let report = verify::run(args, &cfg)?;
            let out = match format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Text => report.to_text(),
                other => return Err(unsupported("verify", other)),
            };
            if report.passed {
                Ok(out)
            } else {
                Err(CliError::Failed(out))
            }
        }
        Command::Graph(args) => {
            let n = args.n.or(cfg.n).unwrap_or(1);
            let d = args.d.or(cfg.d).unwrap_or(1);
            let g = build_graph(n, d)?;
            match format {
                OutputFormat::Json => Ok(g.to_json() + "\n"),
                OutputFormat::Dot => Ok(g.to_dot()),
                other => Err(unsupported("graph", other)),
            }
        }
        Command::Abelianize(src) => {
            let p = src.load(&cfg)?;
            let inv = abelianization(&p);
            match format {
                OutputFormat::Json => Ok(to_json(&json!({
                    "variant": p.meta.variant,
                    "generators": p.generators.len(),
                    "relations": p.relations.len(),
                    "invariants": inv,
                }))),
                OutputFormat::Text => Ok(abelian_text(&inv.factors) + "\n"),
                other => Err(unsupported("abelianize", other)),
            }
        }
        Command::ToddCoxeter(args) => todd_coxeter_cmd(args, &cfg, format),
        Command::Hl(args) => hl(args, &cfg, format),
        Command::Slice(args) => {
            let d = args.d.or(cfg.d).unwrap_or(2);
            let seed = cfg.seed(args.seed)?;
            let r = weierstrass_slice_zdegree(d, seed)?;
            match format {
                OutputFormat::Json => Ok(to_json(&r)),
                OutputFormat::Text => Ok(format!(
                    "d = {d}, seed = {seed}\nB = {:?}\nC = {:?}\nz-degree = {}\nraw z-degree = {}\ncontact z-degree = {}\nsquarefree z-degree = {}\n",
                    r.b,
                    r.c,
                    show(r.z_degree),
                    show(r.raw_z_degree),
                    show(r.contact_z_degree),
                    show(r.squarefree_z_degree),
                )),
                other => Err(unsupported("slice", other)),
            }
        }
        Command::Formulas(args) => {
            let n_max = args.n_max.or(cfg.n_max).unwrap_or(6);
            let d_max = args.d_max.or(cfg.d_max).unwrap_or(6);
            let mut rows = Vec::new();
            for n in 1..=n_max {
                for d in 1..=d_max {
                    rows.push(degrees(n, d)?);
                }
            }
            match format {
                OutputFormat::Json => Ok(to_json(&rows)),
                OutputFormat::Text => Ok(rows.iter().map(|r| format!("{r}\n")).collect()),
                OutputFormat::Csv => {
                    let mut out = String::from("n,d,deg_p,deg_z_p,deg_q,wdeg_p,wdeg_q,deg_v_q,deg_c\n");
                    for r in &rows {
                        out.push_str(&format!(
                            "{},{},{},{},{},{},{},{},{}\n",
                            r.n, r.d, r.deg_p, r.deg_z_p, r.deg_q, r.wdeg_p, r.wdeg_q, r.deg_v_q, r.deg_c
                        ));
                    }
                    Ok(out)
                }
                other => Err(unsupported("formulas", other)),
            }
        }
    }
}

fn show(x: Option<u32>) -> String {
    x.map_or_else(|| "undefined".into(), |v| v.to_string())
}

fn abelian_text(factors: &[BigInt]) -> String {
    if factors.is_empty() {
        return "trivial".into();
    }
    factors
        .iter()
        .map(|f| if *f == BigInt::from(0) { "Z".to_string() } else { format!("Z/{f}") })
        .collect::<Vec<_>>()
        .join(" x ")
}

fn present(src: &SourceArgs, cfg: &Config, format: OutputFormat) -> Result<String, CliError> {
    let mut src = src.clone();
    if src.variant.is_none() && cfg.variant.is_none() && src.n.or(cfg.n) == Some(0) {
        src.variant = Some("elliptic".into());
    }
    let p: Presentation = src.load(cfg)?;
    let target = match format {
        OutputFormat::Json => PresentationFormat::Json,
        OutputFormat::Gap => PresentationFormat::Gap,
        OutputFormat::Magma => PresentationFormat::Magma,
        OutputFormat::Text => PresentationFormat::Text,
        other => return Err(unsupported("present", other)),
    };
    let mut out = serialize(&p, target);
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

fn todd_coxeter_cmd(
    args: &ToddCoxeterArgs,
    cfg: &Config,
    format: OutputFormat,
) -> Result<String, CliError> {
    let p = args.source.load(cfg)?;
    let subgroup = args
        .subgroup
        .iter()
        .map(|w| parse_word(&p, w))
        .collect::<Result<Vec<_>, _>>()?;
    let cap = args.max_cosets.or(cfg.max_cosets).unwrap_or(DEFAULT_MAX_COSETS);
    let outcome = todd_coxeter(&p, &subgroup, cap);
    let (closed, index, defined) = match &outcome {
        CosetOutcome::Closed(t) => (true, Some(t.index()), t.index()),
        CosetOutcome::Exceeded { defined } => (false, None, *defined),
    };
    match format {
        OutputFormat::Json => Ok(to_json(&json!({
            "closed": closed,
            "index": index,
            "max_cosets": cap,
            "cosets_defined": defined,
        }))),
        OutputFormat::Text => Ok(match index {
            Some(i) => format!("index {i}\n"),
            None => format!("not closed within {cap} cosets\n"),
        }),
        other => Err(unsupported("todd-coxeter", other)),
    }
}

fn hl(args: &HlArgs, cfg: &Config, format: OutputFormat) -> Result<String, CliError> {
    let n = args.n.or(cfg.n).unwrap_or(1);
    let d = args.d.or(cfg.d).unwrap_or(1);
    let params = match args.v.as_ref().or(cfg.v.as_ref()) {
        Some(v) => {
            if v.iter().any(|&x| !(x > 0.0 && x.is_finite())) {
                return Err(CliError::Usage("--v needs positive reals".into()));
            }
            HLParams::new(n, d, v.iter().map(|&x| Complex64::new(x, 0.0)).collect())?
        }
        None => HLParams::canonical(n, d)?,
    };
    let table: CriticalValueTable = closed_form_values(&params)?;
    match format {
        OutputFormat::Json => Ok(to_json(&json!({"params": params, "table": table}))),
        OutputFormat::Csv => Ok(table.to_csv()),
        OutputFormat::Text => Ok(table
            .entries
            .iter()
            .map(|TableEntry { index, value }| {
                format!("{} {:+.12e} {:+.12e}i\n", index.dotted(), value.re, value.im)
            })
            .collect()),
        other => Err(unsupported("hl", other)),
    }
}
