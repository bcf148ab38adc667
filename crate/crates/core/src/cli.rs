//! The `bichrome` command line.
//!
//! Exit status: 0 on success or agreement, 1 on a solver/oracle mismatch
//! or a certificate that fails to re-validate, 2 on invalid input. Errors
//! go to stderr as one JSON object `{"error": kind, "message": text}`.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::harness::{gen_instance, oracle_objective, render_svg, solve, verify, GenParams, InstanceFile, Problem, SolutionFile};
use crate::range_count::CounterKind;

#[derive(Parser, Debug)]
#[command(name = "bichrome", version, about = "Red/blue rectangle and pair-coloring solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Mrr,
    MrrAxis,
    Maxcol,
}

impl From<Which> for Problem {
    fn from(w: Which) -> Problem {
        match w {
            Which::Mrr => Problem::Mrr,
            Which::MrrAxis => Problem::MrrAxis,
            Which::Maxcol => Problem::MaxCol,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value = "naive", value_parser = parse_counter)]
    counter: CounterKind,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Red points, or pairs for maxcol.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Blue points.
    #[arg(long, default_value_t = 8)]
    m: usize,
    #[arg(long, default_value_t = 1000)]
    coord_max: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Maximum red rectangle of any orientation.
    Mrr(SolveArgs),
    /// Maximum axis-parallel red rectangle.
    MrrAxis(SolveArgs),
    /// Maximum coloring of point pairs.
    Maxcol(SolveArgs),
    /// Run a brute-force oracle on an instance.
    Oracle {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Write a seeded random instance.
    Gen {
        #[command(flatten)]
        params: GenArgs,
        /// Problem whose validity rules the instance must satisfy.
        #[arg(long, value_enum, default_value = "mrr")]
        problem: Which,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Draw an instance and its certificate as SVG.
    Render {
        #[arg(long)]
        input: PathBuf,
        /// Solution file to draw; solved on the fly when absent.
        #[arg(long)]
        solution: Option<PathBuf>,
        #[arg(long, value_enum)]
        problem: Option<Which>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare a solver with its oracle on random instances.
    Verify {
        #[arg(value_enum)]
        which: Which,
        #[command(flatten)]
        params: GenArgs,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value = "naive", value_parser = parse_counter)]
        counter: CounterKind,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_counter(s: &str) -> std::result::Result<CounterKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn report_error(e: &Error) {
    let obj = json!({ "error": e.kind(), "message": e.to_string() });
    eprintln!("{obj}");
}

/// Parses `argv` (program name first) and runs it; returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return 0;
        }
        Err(e) => {
            let obj = json!({ "error": "usage", "message": e.to_string().trim_end() });
            eprintln!("{obj}");
            return 2;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            report_error(&e);
            match e {
                Error::InvalidCertificate(_) => 1,
                _ => 2,
            }
        }
    }
}

fn solve_command(problem: Problem, args: SolveArgs) -> Result<i32> {
    let instance = InstanceFile::load(&args.input)?;
    let sol = solve(problem, &instance, args.counter)?;
    sol.validate(&instance)?;
    let text = match args.format {
        Format::Json => sol.to_json(),
        Format::Text => format!("{} objective {}\n", problem.name(), sol.objective),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(0)
}

fn default_problem(instance: &InstanceFile) -> Problem {
    match instance {
        InstanceFile::Mrr(_) => Problem::Mrr,
        InstanceFile::MaxCol(_) => Problem::MaxCol,
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Mrr(args) => solve_command(Problem::Mrr, args),
        Command::MrrAxis(args) => solve_command(Problem::MrrAxis, args),
        Command::Maxcol(args) => solve_command(Problem::MaxCol, args),
        Command::Oracle {
            which,
            input,
            output,
            format,
        } => {
            let instance = InstanceFile::load(&input)?;
            let problem = Problem::from(which);
            let value = oracle_objective(problem, &instance)?;
            let text = match format {
                Format::Json => format!("{}\n", json!({ "oracle": problem, "objective": value })),
                Format::Text => format!("{} oracle {value}\n", problem.name()),
            };
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Gen {
            params,
            problem,
            output,
            format,
        } => {
            let instance = gen_instance(GenParams::new(problem.into(), params.seed, params.n, params.m, params.coord_max))?;
            let text = match format {
                Format::Json => instance.to_json(),
                Format::Text => format!("{:?}\n", instance.points()),
            };
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Render {
            input,
            solution,
            problem,
            output,
        } => {
            let instance = InstanceFile::load(&input)?;
            let sol = match solution {
                Some(path) => SolutionFile::from_json(&std::fs::read_to_string(path)?)?,
                None => {
                    let problem = problem.map_or_else(|| default_problem(&instance), Problem::from);
                    solve(problem, &instance, CounterKind::Naive)?
                }
            };
            sol.validate(&instance)?;
            emit(output.as_deref(), &render_svg(&instance, Some(&sol)))?;
            Ok(0)
        }
        Command::Verify {
            which,
            params,
            count,
            counter,
            output,
            format,
        } => {
            let gp = GenParams::new(which.into(), params.seed, params.n, params.m, params.coord_max);
            let report = verify(gp, count, counter)?;
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report)?;
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for c in report.cases.iter().filter(|c| !c.ok) {
                        s += &format!("case {} (seed {}): solver {} oracle {}\n", c.index, c.seed, c.solver, c.oracle);
                    }
                    s += &format!("{} cases, {} mismatches\n", report.count, report.mismatches);
                    s
                }
            };
            emit(output.as_deref(), &text)?;
            Ok(if report.mismatches == 0 { 0 } else { 1 })
        }
    }
}
