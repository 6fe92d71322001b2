//! `nlclass`: demos, randomized trials and fixture inspection.
//!
//! Exit codes: 0 ok, 1 internal failure, 2 an `--expect` mismatch,
//! 3 degenerate input (singular surface, indeterminate class), 4 usage.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nlclass::geometry::{catalog, lattice_scan, CatalogName};
use nlclass::report::fixture::Fixture;
use nlclass::report::table::{render_run, render_trials};
use nlclass::report::{
    attach_cross_prime, inspect, lattice_report, run_pipeline, run_trials, Demo, Expectation, PipelineConfig,
    RunReport, SurfaceSource,
};
use nlclass::ring::{PrimeField, DEFAULT_PRIME};
use nlclass::Error;

#[derive(Parser)]
#[command(name = "nlclass", version, about = "Annihilator ideals of curve classes on surfaces in P^3")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Working prime
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    /// Second prime; every run is repeated over it and compared
    #[arg(long, global = true)]
    check_prime: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Include wall-clock timings (makes output run-dependent)
    #[arg(long, global = true)]
    timings: bool,
    /// Expected verdict, e.g. `perfect=no` or `alpha_dim.2=3` (repeatable)
    #[arg(long, global = true)]
    expect: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Jsonl,
}

#[derive(Args, Clone)]
struct Levels {
    /// Reconstruction level m
    #[arg(long)]
    level: Option<usize>,
    /// Top degree of the perfectness ledger
    #[arg(long)]
    perfect_level: Option<usize>,
    /// Largest linking degree for the liaison pool
    #[arg(long)]
    link_degree: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    TwistedCubic,
    RationalQuartic,
    AcmCi,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline on a named example
    Demo {
        #[arg(value_enum)]
        name: DemoName,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        d1: usize,
        #[arg(long, default_value_t = 2)]
        d2: usize,
        /// Surface degree for acm-ci
        #[arg(long, default_value_t = 6)]
        s: usize,
        #[command(flatten)]
        levels: Levels,
    },
    /// Independent seeded trials of one catalog curve
    Trials {
        /// Catalog curve, e.g. twisted_cubic or complete_intersection(2,2)
        curve: String,
        #[arg(long, default_value_t = 4)]
        s: usize,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        levels: Levels,
    },
    /// Invariants of a curve ideal read from a fixture file
    Inspect {
        file: PathBuf,
        /// File holding the surface equation
        #[arg(long, conflicts_with = "s")]
        surface: Option<PathBuf>,
        /// Degree of a random surface through the curve
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Print a catalog curve as a fixture
    Catalog { curve: String },
    /// Integer classification of classes D with pH + mC + nD ~ 0
    Lattice {
        #[arg(long, default_value_t = 6)]
        max_deg: i64,
        /// List every solution with its rejection reason
        #[arg(long)]
        all: bool,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Argument(_) | Error::Parse { .. } => 4,
        Error::Singular | Error::SmoothnessNotAchieved { .. } | Error::IndeterminateClass { .. } => 3,
        _ => 1,
    }
}

fn field(p: u32) -> Result<PrimeField, Error> {
    PrimeField::new(p)
}

fn apply_levels(mut cfg: PipelineConfig, l: &Levels) -> PipelineConfig {
    cfg.level = l.level.unwrap_or(cfg.level);
    cfg.perfect_level = l.perfect_level.unwrap_or(cfg.perfect_level);
    cfg.max_link_degree = l.link_degree.unwrap_or(cfg.max_link_degree);
    cfg
}

fn emit_run(g: &Global, r: &RunReport) {
    match g.format {
        Format::Table => print!("{}", render_run(r)),
        Format::Jsonl => println!("{}", r.to_json()),
    }
}

/// Parses, runs, prints; returns whether every expectation held.
fn run(cli: Cli) -> Result<bool, Error> {
    let g = &cli.global;
    let k = field(g.prime)?;
    let check = g.check_prime.map(field).transpose()?;
    let expect: Vec<Expectation> = g.expect.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    match &cli.command {
        Command::Demo { name, seed, d1, d2, s, levels } => {
            let demo = match name {
                DemoName::TwistedCubic => Demo::TwistedCubic,
                DemoName::RationalQuartic => Demo::RationalQuartic,
                DemoName::AcmCi => Demo::AcmCi { d1: *d1, d2: *d2, s: *s },
            };
            let mut cfg = apply_levels(demo.config(k, *seed)?, levels);
            cfg.timings = g.timings;
            let mut r = run_pipeline(k, &cfg, &format!("demo {}", demo.name()))?;
            if let Some(check) = check {
                attach_cross_prime(&mut r, &cfg, check)?;
            }
            let ok = r.check_expectations(&expect)?;
            emit_run(g, &r);
            Ok(ok)
        }
        Command::Trials { curve, s, count, seed, levels } => {
            let name: CatalogName = curve.parse()?;
            let mut cfg = apply_levels(PipelineConfig::for_curve(k, name, *s, *seed)?, levels);
            cfg.timings = g.timings;
            let t = run_trials(k, &cfg, *count, check, &expect)?;
            match g.format {
                Format::Table => print!("{}", render_trials(&t)),
                Format::Jsonl => {
                    for o in &t.outcomes {
                        match &o.report {
                            Some(r) => println!("{}", r.to_json()),
                            None => println!(
                                "{}",
                                serde_json::json!({"kind": "error", "seed": o.seed, "error": o.error})
                            ),
                        }
                    }
                    println!("{}", t.to_json());
                }
            }
            Ok(t.expectations.iter().all(|e| e.ok))
        }
        Command::Inspect { file, surface, s, seed, level } => {
            let fx = Fixture::parse(&read(file)?, k)?;
            let source = match (surface, s) {
                (Some(path), _) => {
                    let sf = Fixture::parse(&read(path)?, k)?;
                    match sf.polys.as_slice() {
                        [f] => SurfaceSource::Given(f.clone()),
                        _ => return Err(Error::Argument("surface file must hold exactly one polynomial".into())),
                    }
                }
                (None, Some(s)) => SurfaceSource::Random { s: *s, seed: *seed },
                (None, None) => SurfaceSource::None,
            };
            let mut r = inspect(k, &fx, source, *level)?;
            let ok = r.check_expectations(&expect)?;
            emit_run(g, &r);
            Ok(ok)
        }
        Command::Catalog { curve } => {
            let c = catalog(k, curve.parse()?)?;
            print!("{}", Fixture::for_curve(&c).to_text());
            Ok(true)
        }
        Command::Lattice { max_deg, all } => {
            if *max_deg < 1 {
                return Err(Error::Argument("--max-deg must be at least 1".into()));
            }
            let rep = lattice_report(*max_deg, None, &[]);
            match g.format {
                Format::Jsonl => {
                    if *all {
                        for c in lattice_scan(*max_deg, 10 * max_deg + 10) {
                            println!("{}", serde_json::to_string(&c).expect("candidate serializes"));
                        }
                    }
                    println!("{}", serde_json::to_string(&rep).expect("report serializes"));
                }
                Format::Table => {
                    if *all {
                        for c in lattice_scan(*max_deg, 10 * max_deg + 10) {
                            let s = c.solution;
                            let why = c.rejection.map_or("survives".to_string(), |r| format!("{r:?}"));
                            println!("x={} y={} q={} (p,m,n)=({},{},{}) {why}", s.x, s.y, s.q, s.p, s.m, s.n);
                        }
                    }
                    println!("{} solutions, {} survivors", rep.scanned, rep.survivors.len());
                    for s in &rep.survivors {
                        let a = s.a.map_or("-".to_string(), |a| a.to_string());
                        println!("  (x,y,q)=({},{},{}) a={a} (p,m,n)=({},{},{})", s.x, s.y, s.q, s.p, s.m, s.n);
                    }
                }
            }
            Ok(true)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Argument(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
