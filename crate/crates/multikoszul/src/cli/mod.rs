//! Command-line front end, reports and the shipped corpus.

mod corpus;
mod report;
mod suite;
mod text;

use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use corpus::{corpus_text, expected_multikoszul, CORPUS};
pub use suite::{run_suite, SuiteEntry, SuiteReport};

use crate::linalg::Field;
use crate::presentation::{parse_presentation_in, Presentation};
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "multikoszul", version, about = "J spaces, multi-Koszul complexes, Tor and A-infinity structures of graded algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Presentation file, or the name of a shipped corpus algebra.
    pub input: String,
    /// Homological degree bound H.
    #[arg(long, default_value_t = 6)]
    pub hdeg: usize,
    /// Adams degree bound D.
    #[arg(long, default_value_t = 12)]
    pub adeg: usize,
    /// `Q` or `F <p>`; overrides the field declared in the file.
    #[arg(long, num_args = 1..=2, value_name = "FIELD")]
    pub field: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Include bases of the J spaces in the report.
    #[arg(long)]
    pub basis_dump: bool,
    /// Recompute with alternative formulas and compare.
    #[arg(long)]
    pub debug_crosscheck: bool,
    /// Add wall-clock time to the report (makes output run-dependent).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert series of the algebra up to the Adams bound.
    Hilbert(Common),
    /// Dimensions (and optionally bases) of the J spaces.
    Jspaces(Common),
    /// Tor(k, k) from a minimal free resolution.
    Tor(Common),
    /// Tor(k, k) from the bar complex, compared with the resolution.
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Bounds `H,D` for the bar complex.
        #[arg(long, default_value = "4,8", value_parser = parse_bounds)]
        oracle_bounds: (usize, usize),
    },
    /// Decide multi-Koszulity up to the bounds.
    Check {
        #[command(flatten)]
        common: Common,
        /// Exit with status 1 unless the verdict is multi-Koszul.
        #[arg(long)]
        expect_koszul: bool,
    },
    /// Yoneda product tables and the K2 generation check.
    Yoneda {
        #[command(flatten)]
        common: Common,
        /// Produce tables for input that is not multi-Koszul.
        #[arg(long)]
        formal: bool,
    },
    /// Higher coproducts, Stasheff identities and the twisted tensor product.
    Ainfty {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[arg(long)]
        formal: bool,
    },
    /// Run the property suite over the shipped corpus.
    Corpus {
        #[arg(long, default_value_t = 6)]
        hdeg: usize,
        #[arg(long, default_value_t = 12)]
        adeg: usize,
        #[arg(long, num_args = 1..=2, value_name = "FIELD")]
        field: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value = "4,8", value_parser = parse_bounds)]
        oracle_bounds: (usize, usize),
    },
}

fn parse_bounds(s: &str) -> Result<(usize, usize), String> {
    let (h, d) = s.split_once(',').ok_or("expected H,D")?;
    let h = h.trim().parse().map_err(|_| format!("bad H in `{s}`"))?;
    let d = d.trim().parse().map_err(|_| format!("bad D in `{s}`"))?;
    Ok((h, d))
}

/// Result of one invocation: exit status and the text for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) => 2,
        Error::Cap(_) => 3,
        Error::Internal(_) => 4,
    }
}

fn field_arg(parts: &[String]) -> Result<Option<Field>, Error> {
    if parts.is_empty() {
        return Ok(None);
    }
    Field::parse(&parts.join(" ")).map(Some)
}

/// Reads a presentation from a file, falling back to the corpus by name.
pub fn load(input: &str, field: Option<Field>) -> Result<Presentation, Error> {
    let path = Path::new(input);
    let text = if path.exists() {
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{input}: {e}")))?
    } else {
        let stem = input.strip_suffix(".alg").unwrap_or(input);
        corpus_text(stem)
            .ok_or_else(|| Error::Input(format!("{input}: no such file or corpus algebra")))?
            .to_string()
    };
    parse_presentation_in(&text, field)
}

fn validate(c: &Common) -> Result<(), Error> {
    if c.hdeg < 1 || c.adeg < 2 {
        return Err(Error::Input(format!("bounds must satisfy H ≥ 1 and D ≥ 2, got H = {}, D = {}", c.hdeg, c.adeg)));
    }
    Ok(())
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok((code, value, format)) => {
            let stdout = match format {
                Format::Json => serde_json::to_string_pretty(&value).unwrap() + "\n",
                Format::Text => text::render(&value),
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cmd: &Command) -> Result<(i32, Value, Format), Error> {
    let start = Instant::now();
    let (code, mut value, common) = match cmd {
        Command::Corpus { hdeg, adeg, field, format, oracle_bounds } => {
            let f = field_arg(field)?;
            let r = run_suite(*hdeg, *adeg, f, *oracle_bounds)?;
            let code = if r.ok() { 0 } else { 4 };
            return Ok((code, report::suite(&r), *format));
        }
        Command::Hilbert(c) => (0, report::hilbert(&setup(c)?, c)?, c),
        Command::Jspaces(c) => (0, report::jspaces(&setup(c)?, c)?, c),
        Command::Tor(c) => (0, report::tor(&setup(c)?, c)?, c),
        Command::Oracle { common, oracle_bounds } => (0, report::oracle(&setup(common)?, common, *oracle_bounds)?, common),
        Command::Check { common, expect_koszul } => {
            let (v, code) = report::check(&setup(common)?, common, *expect_koszul)?;
            (code, v, common)
        }
        Command::Yoneda { common, formal } => (0, report::yoneda(&setup(common)?, common, *formal)?, common),
        Command::Ainfty { common, nmax, formal } => (0, report::ainfty(&setup(common)?, common, *nmax, *formal)?, common),
    };
    if common.timing {
        value["timing_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    Ok((code, value, common.format))
}

fn setup(c: &Common) -> Result<Presentation, Error> {
    validate(c)?;
    load(&c.input, field_arg(&c.field)?)
}
