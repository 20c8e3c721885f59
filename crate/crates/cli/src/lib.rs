//! Command-line front end. All decisions come from `nichols_core`; this crate
//! only parses arguments and renders results.

mod render;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nichols_core::criteria::{self, CriteriaError, RepSpec, Table};
use nichols_core::nichols::{self, budget_from_env, NicholsError, RankRoute};
use nichols_core::perm::{CycleType, PermError};
use nichols_core::reps::{resolve_label, CharacterLabel, RepError};
use nichols_core::ydmod::{braiding, YdModule};

pub use render::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nichols", version, about = "Nichols algebras over conjugacy classes of symmetric groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide dim B(O_s, ρ) for one class and representation.
    Verdict {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide a class for every ρ at once; scans all classes of S_n without -t.
    Orbit {
        #[arg(short = 'n', long)]
        degree: usize,
        #[arg(short = 't', long = "type")]
        cycle_type: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dump the braiding of the Yetter-Drinfeld module M(O_s, ρ).
    Braiding {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Graded dimensions of B(O_s, ρ) up to degree --dmax.
    Hilbert {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 3)]
        dmax: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Rank by dense fraction-free elimination instead of sparse.
        #[arg(long)]
        dense: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reproduce the classification table for S3 or S4.
    Table {
        #[arg(value_enum)]
        which: TableArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Centralizer of the class representative and its resolvable irreducibles.
    Centralizer {
        #[arg(short = 'n', long)]
        degree: usize,
        #[arg(short = 't', long = "type")]
        cycle_type: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Degree n of S_n.
    #[arg(short = 'n', long)]
    degree: usize,
    /// Cycle type such as "2^2 3"; fixed points are inferred from n.
    #[arg(short = 't', long = "type")]
    cycle_type: String,
    /// Representation label: eps, sgn, chi4^2, d4:(1,-1), d4:rho2, a*b.
    #[arg(short = 'r', long = "rep")]
    rep: String,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Largest number of basis tensors; defaults to $NICHOLS_BUDGET or 10^6.
    #[arg(long)]
    budget: Option<u64>,
}

impl BudgetArgs {
    fn resolve(&self) -> u64 {
        self.budget.unwrap_or_else(budget_from_env)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableArg {
    S3,
    S4,
}

/// What a run printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Bad input exits with 2; exceeded budgets and failed constructions with 3.
fn exit_code(e: &CriteriaError) -> i32 {
    match e {
        CriteriaError::Perm(_) => EXIT_USAGE,
        CriteriaError::Rep(RepError::UnknownLabel(_) | RepError::LabelMismatch { .. } | RepError::Perm(_)) => {
            EXIT_USAGE
        }
        _ => EXIT_LIMIT,
    }
}

fn parse_type(text: &str, n: usize) -> Result<CycleType, Output> {
    CycleType::parse(text, n).map_err(|e: PermError| Output::fail(EXIT_USAGE, e))
}

fn parse_label(text: &str) -> Result<CharacterLabel, Output> {
    text.parse().map_err(|e: RepError| Output::fail(EXIT_USAGE, e))
}

fn build_module(pair: &PairArgs, budget: u64) -> Result<(CycleType, CharacterLabel, YdModule), Output> {
    let t = parse_type(&pair.cycle_type, pair.degree)?;
    let label = parse_label(&pair.rep)?;
    let s = t.representative();
    let rho = resolve_label(&label, &s).map_err(|e| Output::fail(exit_code(&e.clone().into()), e))?;
    let size = u64::try_from(&(t.class_size() * rho.dim())).unwrap_or(u64::MAX);
    if size > budget {
        return Err(Output::fail(
            EXIT_LIMIT,
            format!("the module has dimension {size}, over the budget of {budget}"),
        ));
    }
    let m = YdModule::for_pair(&s, rho).map_err(|e| Output::fail(EXIT_LIMIT, e))?;
    Ok((t, label, m))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: text }
            } else {
                Output::ok(text)
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(|out| out)
}

fn dispatch(command: Command) -> Result<Output, Output> {
    match command {
        Command::Verdict { pair, format } => {
            let t = parse_type(&pair.cycle_type, pair.degree)?;
            let label = parse_label(&pair.rep)?;
            let v = criteria::pair_verdict(pair.degree, &t, &RepSpec::Label(label.clone()))
                .map_err(|e| Output::fail(exit_code(&e), e))?;
            Ok(Output::ok(render::verdict(pair.degree, &t, &label, &v, format)))
        }
        Command::Orbit { degree, cycle_type, format } => {
            let types = match cycle_type {
                Some(text) => vec![parse_type(&text, degree)?],
                None => CycleType::all(degree),
            };
            let verdicts: Vec<_> = types.iter().map(|t| (t.clone(), criteria::orbit_verdict(degree, t))).collect();
            Ok(Output::ok(render::orbits(degree, &verdicts, format)))
        }
        Command::Braiding { pair, budget, format } => {
            let (t, label, m) = build_module(&pair, budget.resolve())?;
            let dim = m.dim() as u64;
            if dim * dim > budget.resolve() {
                return Err(Output::fail(
                    EXIT_LIMIT,
                    format!("the braiding has {} basis pairs, over the budget of {}", dim * dim, budget.resolve()),
                ));
            }
            Ok(Output::ok(render::braiding(pair.degree, &t, &label, &braiding(&m), format)))
        }
        Command::Hilbert { pair, dmax, budget, dense, format } => {
            let (t, label, m) = build_module(&pair, budget.resolve())?;
            let route = if dense { RankRoute::Dense } else { RankRoute::Sparse };
            let dims = nichols::hilbert_prefix(&m, dmax, budget.resolve(), route)
                .map_err(|e: NicholsError| Output::fail(EXIT_LIMIT, e))?;
            Ok(Output::ok(render::hilbert(pair.degree, &t, &label, m.dim(), &dims, format)))
        }
        Command::Table { which, format } => {
            let which = match which {
                TableArg::S3 => Table::S3,
                TableArg::S4 => Table::S4,
            };
            let lines = criteria::evaluate_table(which).map_err(|e| Output::fail(EXIT_LIMIT, e))?;
            Ok(Output::ok(render::table(which, &lines, format)))
        }
        Command::Centralizer { degree, cycle_type, format } => {
            let t = parse_type(&cycle_type, degree)?;
            Ok(Output::ok(render::centralizer_report(degree, &t, format)))
        }
    }
}
