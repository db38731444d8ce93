mod alexander;
mod error;
mod jones;
mod knot;
mod table;
mod verify;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser)]
#[command(name = "pretzel", version, about = "Alexander, elementary-ideal and Jones invariants of pretzel knots")]
struct Cli {
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial of a three-tassel pretzel knot.
    Alexander(AlexanderArgs),
    /// Jones polynomial by closed form, skein recurrence or state sum.
    Jones(JonesArgs),
    /// Run a verification sweep and print a pass/fail table.
    Verify(VerifyArgs),
    /// One row of invariants per member of a family.
    Table(TableArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PretzelChoice {
    /// Tassels, e.g. `-3,3,7`.
    #[arg(long, allow_hyphen_values = true, value_name = "P,Q,R")]
    pretzel: Option<String>,
    /// Family member P(-(2s+1), 2s+1, 2i+1), e.g. `s=2,i=4`.
    #[arg(long, value_name = "s=S,i=I")]
    family: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct KnotChoice {
    /// Tassels, e.g. `-3,3,7`.
    #[arg(long, allow_hyphen_values = true, value_name = "P,Q,R")]
    pretzel: Option<String>,
    /// Family member P(-(2s+1), 2s+1, 2i+1), e.g. `s=2,i=4`.
    #[arg(long, value_name = "s=S,i=I")]
    family: Option<String>,
    /// Torus link T(2,n) with n even, e.g. `2,4`.
    #[arg(long, value_name = "2,N")]
    torus: Option<String>,
}

#[derive(Args)]
struct AlexanderArgs {
    #[command(flatten)]
    knot: PretzelChoice,
    /// Also print the Seifert and presentation matrices.
    #[arg(long)]
    show_matrices: bool,
    /// Also print the planar diagram code of the generated diagram.
    #[arg(long)]
    dump_pd: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Skein,
    Bracket,
    All,
}

#[derive(Args)]
struct JonesArgs {
    #[command(flatten)]
    knot: KnotChoice,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
    /// Largest diagram the state sum will enumerate (2^n states).
    #[arg(long, default_value_t = pretzel_invariants::bracket::DEFAULT_MAX_CROSSINGS)]
    max_crossings: usize,
    /// Also print the planar diagram code of the generated diagram.
    #[arg(long)]
    dump_pd: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    #[value(name = "2.1")]
    Constancy,
    #[value(name = "3.1")]
    FirstFamilyJones,
    #[value(name = "4.1")]
    FamilyIdeals,
    #[value(name = "4.2")]
    FamilyJones,
    #[value(name = "lemma3.1")]
    TorusJones,
    #[value(name = "cor-distinct")]
    Distinct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RowFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    /// Range of s, e.g. `1..5` (inclusive).
    #[arg(long, value_name = "A..B")]
    s: Option<String>,
    /// Range of i, e.g. `3..30` (inclusive); overrides --i-extent.
    #[arg(long, value_name = "A..B")]
    i: Option<String>,
    /// Number of i values per s, starting at the smallest valid i.
    #[arg(long, value_name = "N")]
    i_extent: Option<i64>,
    /// Range of k for T(2,2k).
    #[arg(long, value_name = "A..B")]
    k: Option<String>,
    #[arg(long, value_enum, default_value_t = RowFormat::Text)]
    format: RowFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// Family parameter s.
    #[arg(long, value_name = "S")]
    family: i64,
    /// Range of i (inclusive).
    #[arg(long, value_name = "A..B")]
    i: String,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

fn pretzel_of(choice: &PretzelChoice) -> Result<pretzel_invariants::alexander::PretzelSpec, CliError> {
    match (&choice.pretzel, &choice.family) {
        (Some(p), _) => knot::parse_pretzel(p),
        (_, Some(f)) => knot::parse_family(f),
        _ => Err(CliError::Usage("one of --pretzel or --family is required".into())),
    }
}

fn knot_of(choice: &KnotChoice) -> Result<knot::Knot, CliError> {
    match (&choice.pretzel, &choice.family, &choice.torus) {
        (Some(p), _, _) => knot::parse_pretzel(p).map(knot::Knot::Pretzel),
        (_, Some(f), _) => knot::parse_family(f).map(knot::Knot::Pretzel),
        (_, _, Some(t)) => knot::parse_torus(t).map(knot::Knot::Torus),
        _ => Err(CliError::Usage("one of --pretzel, --family or --torus is required".into())),
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Alexander(a) => alexander::run(&pretzel_of(&a.knot)?, a.show_matrices, a.dump_pd, out),
        Command::Jones(j) => jones::run(&knot_of(&j.knot)?, j.method, j.max_crossings, j.dump_pd, out),
        Command::Verify(v) => {
            let sweep =
                verify::Sweep::from_flags(v.theorem, v.s.as_deref(), v.i.as_deref(), v.i_extent, v.k.as_deref())?;
            verify::run(&sweep, v.format, out)
        }
        Command::Table(t) => {
            let range = knot::parse_range(&t.i, "--i")?;
            table::run(t.family, range, t.format, t.out.as_deref(), out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    if cli.timing {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
