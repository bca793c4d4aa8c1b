//! The `symstruct` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or round trip fails,
//! 2 on usage and input errors.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::decomp::{decompose, recompose, Decomposition};
use crate::error::Error;
use crate::monomial::Monomial;
use crate::oracle;
use crate::ordering::glm;
use crate::parser::{parse_monomial, parse_polynomial};
use crate::perm::{stabilizer_order, transversal, PermutationJson, MAX_ENUMERATED_DEGREE};
use crate::poly::{elementary_symmetric, Polynomial, PolynomialJson};
use crate::reduction::{classify_reduced, reduce};
use crate::structure::{e_prime, module_dimension, IndexSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "symstruct", version, about = "Structure of polynomial rings under the symmetric group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Expression to read; overrides --input.
    expr: Option<String>,
    /// Read the expression from a file, or `-` for stdin.
    #[arg(long, value_name = "FILE|-")]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose a polynomial (text or JSON) and re-verify the round trip.
    Decompose {
        /// Number of variables; taken from the JSON when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the graded, series, dimension and round-trip checks.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List every index set containing n with its module data.
    Modules {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reduced form of a monomial and its classification.
    Reduce {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Greatest leading monomials of a polynomial.
    Glm {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expand the i-th elementary symmetric polynomial.
    Es {
        #[arg(long)]
        n: usize,
        /// Index i in 1..=n.
        i: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Outcome of a command other than a hard error.
enum Outcome {
    Pass,
    Fail,
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Pass) => EXIT_OK,
        Ok(Outcome::Fail) => EXIT_FAILED,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Io(io::Error),
    Domain(Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult = std::result::Result<Outcome, CliError>;

fn read_input(input: &InputArgs) -> Result<String, CliError> {
    match (&input.expr, &input.input) {
        (Some(expr), _) => Ok(expr.clone()),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
        (None, Some(path)) => Ok(std::fs::read_to_string(path)?),
        (None, None) => Err(Error::InvalidArgument(
            "no input: pass an expression or --input <file|->".into(),
        )
        .into()),
    }
}

fn require_n(n: usize) -> Result<usize, CliError> {
    if n == 0 {
        return Err(Error::InvalidArgument("--n must be at least 1".into()).into());
    }
    Ok(n)
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(value).expect("plain data serializes"))
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Decompose { n, input, format } => cmd_decompose(n, &input, format, out),
        Command::Verify {
            n,
            max_degree,
            seed,
            trials,
            format,
        } => cmd_verify(require_n(n)?, max_degree, seed, trials, format, out),
        Command::Modules { n, format } => cmd_modules(require_n(n)?, format, out),
        Command::Reduce { n, input, format } => cmd_reduce(require_n(n)?, &input, format, out),
        Command::Glm { n, input, format } => cmd_glm(require_n(n)?, &input, format, out),
        Command::Es { n, i, format } => cmd_es(require_n(n)?, i, format, out),
    }
}

fn cmd_decompose(n: Option<usize>, input: &InputArgs, format: Format, out: &mut dyn Write) -> CliResult {
    let text = read_input(input)?;
    let u: Polynomial = if text.trim_start().starts_with('{') {
        let u = Polynomial::from_json(&text)?;
        if let Some(n) = n {
            crate::error::check_dims(n, u.n())?;
        }
        u
    } else {
        let n = n.ok_or_else(|| Error::InvalidArgument("--n is required for text input".into()))?;
        parse_polynomial(&text, require_n(n)?)?
    };
    let d: Decomposition = decompose(&u, None)?;
    let back = recompose(&d);
    if back != u {
        writeln!(out, "round trip mismatch: {u} decomposed back to {back}")?;
        return Ok(Outcome::Fail);
    }
    if format == Format::Text {
        writeln!(out, "{}", d.render())?;
    }
    writeln!(out, "{}", d.to_json())?;
    Ok(Outcome::Pass)
}

fn cmd_verify(n: usize, max_degree: u32, seed: u64, trials: u64, format: Format, out: &mut dyn Write) -> CliResult {
    let report = oracle::verify(n, max_degree, seed, trials)?;
    match format {
        Format::Json => print_json(out, &report)?,
        Format::Text => {
            writeln!(out, "n = {n}, max degree = {max_degree}, seed = {seed}, trials = {trials}")?;
            for g in &report.graded {
                writeln!(
                    out,
                    "graded degree {:>2}: expected {}, candidates {}, rank {} .. {:?}",
                    g.degree, g.expected_dim, g.candidate_count, g.rank, g.status
                )?;
            }
            writeln!(out, "hilbert series: {:?}", report.hilbert.status)?;
            if let Some(dims) = &report.dimensions {
                writeln!(out, "dimension audit: {:?}", dims.status)?;
            }
            writeln!(
                out,
                "round trip: {}/{} random, {} fixed .. {:?}",
                report.roundtrip.passed, trials, report.roundtrip.fixed_cases, report.roundtrip.status
            )?;
            for f in &report.roundtrip.failures {
                writeln!(out, "  failed trial {} (seed {}): {}", f.trial, f.seed, f.input)?;
            }
            writeln!(out, "overall: {:?}", report.status)?;
        }
    }
    Ok(if report.status.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

#[derive(Serialize)]
struct ModuleRow {
    #[serde(rename = "I")]
    index_set: Vec<usize>,
    e_prime: Vec<u32>,
    dim: String,
    stabilizer_order: String,
    transversal_size: usize,
}

fn cmd_modules(n: usize, format: Format, out: &mut dyn Write) -> CliResult {
    if n > MAX_ENUMERATED_DEGREE {
        return Err(Error::Capacity(format!(
            "modules enumerates transversals and is limited to n <= {MAX_ENUMERATED_DEGREE}"
        ))
        .into());
    }
    let rows: Vec<(IndexSet, Monomial, ModuleRow)> = IndexSet::all(n)
        .into_iter()
        .map(|s| {
            let lead = e_prime(&s);
            let row = ModuleRow {
                index_set: s.members().to_vec(),
                e_prime: lead.exps().to_vec(),
                dim: module_dimension(&s).to_string(),
                stabilizer_order: stabilizer_order(&lead).to_string(),
                transversal_size: transversal(&lead).len(),
            };
            (s, lead, row)
        })
        .collect();
    match format {
        Format::Json => {
            let rows: Vec<_> = rows.iter().map(|(_, _, r)| r).collect();
            print_json(out, &json!({ "n": n, "modules": rows }))?;
        }
        Format::Text => {
            writeln!(out, "{:<16} {:<24} {:>8} {:>10} {:>12}", "I", "e'_I", "dim", "|stab|", "transversal")?;
            for (s, lead, row) in &rows {
                writeln!(
                    out,
                    "{:<16} {:<24} {:>8} {:>10} {:>12}",
                    s.to_string(),
                    lead.to_string(),
                    row.dim,
                    row.stabilizer_order,
                    row.transversal_size
                )?;
            }
        }
    }
    Ok(Outcome::Pass)
}

fn cmd_reduce(n: usize, input: &InputArgs, format: Format, out: &mut dyn Write) -> CliResult {
    let m = parse_monomial(read_input(input)?.trim(), n)?;
    let red = reduce(&m);
    let class = classify_reduced(&red)?;
    match format {
        Format::Json => print_json(
            out,
            &json!({
                "input": m.exps(),
                "reduced": red.exps(),
                "g": PermutationJson::from(&class.g),
                "I": class.index_set.members(),
            }),
        )?,
        Format::Text => {
            writeln!(out, "{red}")?;
            writeln!(out, "g = {}", class.g)?;
            writeln!(out, "I = {}", class.index_set)?;
        }
    }
    Ok(Outcome::Pass)
}

fn cmd_glm(n: usize, input: &InputArgs, format: Format, out: &mut dyn Write) -> CliResult {
    let u: Polynomial = parse_polynomial(&read_input(input)?, n)?;
    let lead = glm(&u);
    match format {
        Format::Json => {
            let exps: Vec<&[u32]> = lead.iter().map(Monomial::exps).collect();
            print_json(out, &json!({ "n": n, "glm": exps }))?;
        }
        Format::Text => {
            let shown: Vec<String> = lead.iter().map(Monomial::to_string).collect();
            writeln!(out, "{{{}}}", shown.join(", "))?;
        }
    }
    Ok(Outcome::Pass)
}

fn cmd_es(n: usize, i: usize, format: Format, out: &mut dyn Write) -> CliResult {
    let d: Polynomial = elementary_symmetric(n, i)?;
    match format {
        Format::Json => print_json(out, &PolynomialJson::from(&d))?,
        Format::Text => writeln!(out, "{d}")?,
    }
    Ok(Outcome::Pass)
}
