use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use staride_core::harness::{self, RunOptions, ScenarioReport, Status};
use staride_core::suites::{self, PropsReport, SuiteReport};
use staride_core::Error;

#[derive(Parser)]
#[command(name = "staride", version, about = "v- and t-operation checks for monomial ideals of semigroup rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one of the two built-in examples.
    RunExample {
        #[arg(value_parser = ["3.1", "3.2"])]
        which: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check every assertion of a scenario file.
    Check {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a property suite.
    Suite {
        #[arg(value_parser = ["props"])]
        name: String,
        /// Fixture catalog; defaults to the built-in one.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Total-degree bound for bounded searches.
    #[arg(long)]
    degree_bound: Option<u32>,
    /// Largest family index enumerated by bounded searches.
    #[arg(long)]
    family_window: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    report: Format,
    #[arg(long, default_value_t = harness::DEFAULT_SEED)]
    seed: u64,
    /// Record wall-clock times; the report is then no longer reproducible.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

impl RunArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            degree: self.degree_bound,
            window: self.family_window,
            seed: self.seed,
            timings: self.timings,
            ..RunOptions::default()
        }
    }
}

const INPUT_ERROR: u8 = 3;

fn exit_code(outcomes: impl IntoIterator<Item = Status>) -> u8 {
    outcomes.into_iter().fold(0, |code, s| match s {
        Status::Fail | Status::Error => 1,
        Status::Inconclusive if code == 0 => 2,
        _ => code,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("staride: {e}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn run(command: Command) -> Result<(String, u8), Error> {
    match command {
        Command::RunExample { which, run } => {
            let opts = run.options();
            let r = match which.as_str() {
                "3.1" => harness::run_example_3_1(&opts)?,
                _ => harness::run_example_3_2(&opts)?,
            };
            let code = exit_code([r.outcome]);
            Ok((render_one(&r, run.report), code))
        }
        Command::Check { file, run } => {
            let name = file.display().to_string();
            let src = std::fs::read_to_string(&file).map_err(|e| Error::Input(format!("{name}: {e}")))?;
            let reports = harness::run_source(&name, &src, &run.options())?;
            let code = exit_code(reports.iter().map(|r| r.outcome));
            let out = match run.report {
                Format::Json => json_line(&reports),
                Format::Text => reports.iter().map(ScenarioReport::to_text).collect::<Vec<_>>().join("\n"),
            };
            Ok((out, code))
        }
        Command::Suite { fixtures, run, .. } => {
            let fixtures = match &fixtures {
                Some(path) => {
                    let name = path.display().to_string();
                    let src = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{name}: {e}")))?;
                    suites::load_fixtures(&name, &src)?
                }
                None => suites::default_fixtures()?,
            };
            let r = suites::run_props(&fixtures, &run.options())?;
            let code = if r.passed() { 0 } else { 1 };
            let out = match run.report {
                Format::Json => json_line(&r),
                Format::Text => props_text(&r),
            };
            Ok((out, code))
        }
    }
}

fn render_one(r: &ScenarioReport, f: Format) -> String {
    match f {
        Format::Json => r.to_json() + "\n",
        Format::Text => r.to_text(),
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn suite_text(r: &SuiteReport) -> String {
    let mut out = format!(
        "{}: {} cases, {} checks, {} inconclusive, {} violations\n",
        r.suite,
        r.cases,
        r.checks,
        r.inconclusive,
        r.violations.len()
    );
    for v in &r.violations {
        out += &format!("  violation: {v}\n");
    }
    out
}

fn props_text(r: &PropsReport) -> String {
    let mut out = suite_text(&r.star_axioms) + &suite_text(&r.chain_inclusion) + &suite_text(&r.vtmax.suite);
    out += &format!("sentinel hits: {}\n", r.vtmax.sentinel_hits);
    for c in &r.vtmax.fixtures {
        out += &format!(
            "  {}: v-finite {}, maximal divisorial {}, t-maximal {}\n",
            c.fixture,
            c.v_finite.label(),
            c.maximal_divisorial.label(),
            c.t_maximal.label()
        );
    }
    out += &format!("outcome: {}\n", if r.passed() { "pass" } else { "fail" });
    out
}
