//! The `fock-canon` command line.
//!
//! Exit status: 0 on success, 1 when a verification suite finds a failure,
//! 2 on usage errors and malformed input.

pub mod matrix_file;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::canonical::{a_matrix, adjoint_matrix, canonical_lower, canonical_upper, MatrixKind, TransitionMatrix};
use crate::fock::{self, FockVector};
use crate::partition::{n_core_quotient, Partition};
use matrix_file::{cache_load, cache_store, CacheError, MatrixFile};
use verify::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fock-canon", version, about = "Canonical bases of the q-deformed Fock space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Pretty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a transition matrix (A, D, E or C) for the partitions of m.
    Matrix {
        #[arg(long, value_parser = parse_kind)]
        kind: MatrixKind,
        #[arg(short = 'n', value_parser = parse_modulus)]
        n: u32,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
        /// Only rows and columns with this n-core, e.g. `2,1` (empty for the empty core).
        #[arg(long, value_parser = parse_partition)]
        block: Option<Partition>,
        #[arg(long, env = "FOCK_CANON_CACHE", default_value = ".fock-cache")]
        cache_dir: PathBuf,
        /// Neither read nor write the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Apply an operator to a vector and print the result.
    ///
    /// Operators: f I, e I, V K, U K, B K (signed; negative raises), S ALPHA, bar.
    Apply {
        op: Operator,
        #[arg(allow_hyphen_values = true)]
        arg: Option<String>,
        #[arg(short = 'n', value_parser = parse_modulus)]
        n: u32,
        /// A partition such as `31` or `[3,1]`, or a JSON vector.
        #[arg(long, default_value = "[]")]
        vector: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(short = 'n', value_parser = parse_modulus, default_value = "2")]
        n: u32,
        #[arg(long, default_value = "6")]
        max_m: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    F,
    E,
    #[value(name = "V")]
    V,
    #[value(name = "U")]
    U,
    #[value(name = "B")]
    B,
    #[value(name = "S")]
    S,
    Bar,
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_modulus(s: &str) -> Result<u32, String> {
    let n: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if n < 2 {
        return Err("n must be at least 2".into());
    }
    Ok(n)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_vector(s: &str) -> Result<FockVector, String> {
    if let Ok(p) = s.parse::<Partition>() {
        return Ok(FockVector::basis(p));
    }
    serde_json::from_str(s).map_err(|e| format!("not a partition or JSON vector: {e}"))
}

struct UsageError(String);

fn compute(kind: MatrixKind, n: u32, m: usize) -> Result<TransitionMatrix, String> {
    let r = match kind {
        MatrixKind::A => Ok(a_matrix(n, m)),
        MatrixKind::D => canonical_upper(n, m),
        MatrixKind::E => canonical_lower(n, m),
        MatrixKind::C => canonical_upper(n, m).map(|d| adjoint_matrix(&d)),
    };
    r.map_err(|e| e.to_string())
}

fn load_or_compute(
    kind: MatrixKind,
    n: u32,
    m: usize,
    cache: Option<&PathBuf>,
    err: &mut dyn Write,
) -> Result<TransitionMatrix, String> {
    if let Some(dir) = cache {
        match cache_load(dir, kind, n, m) {
            Ok(f) => return f.to_matrix(),
            Err(CacheError::CacheMiss(_)) => {}
            Err(e) => {
                let _ = writeln!(err, "warning: ignoring cache entry: {e}");
            }
        }
    }
    let t = compute(kind, n, m)?;
    if let Some(dir) = cache {
        if let Err(e) = cache_store(dir, &MatrixFile::from_matrix(&t)) {
            let _ = writeln!(err, "warning: could not write cache: {e}");
        }
    }
    Ok(t)
}

#[allow(clippy::too_many_arguments)]
fn cmd_matrix(
    kind: MatrixKind,
    n: u32,
    m: usize,
    format: Format,
    block: Option<Partition>,
    cache: Option<&PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, UsageError> {
    if let Some(core) = &block {
        if n_core_quotient(core, n).weight() != 0 {
            return Err(UsageError(format!("{core} is not an {n}-core")));
        }
    }
    let full = load_or_compute(kind, n, m, cache, err).map_err(UsageError)?;
    let (t, rows) = match &block {
        Some(core) => {
            let rows: Vec<usize> = full
                .order
                .iter()
                .enumerate()
                .filter(|(_, p)| n_core_quotient(p, n).core == *core)
                .map(|(i, _)| i)
                .collect();
            (full.restrict_to_core(core), Some(rows))
        }
        None => (full, None),
    };
    let text = match format {
        Format::Json => MatrixFile::from_matrix(&t).to_json(),
        Format::Csv => matrix_file::to_csv(&t, rows.as_deref()),
        Format::Latex => matrix_file::to_latex(&t, rows.as_deref()),
        Format::Pretty => matrix_file::to_pretty(&t, rows.as_deref()),
    };
    out.write_all(text.as_bytes()).map_err(|e| UsageError(e.to_string()))?;
    Ok(EXIT_OK)
}

fn required<T: std::str::FromStr>(arg: &Option<String>, what: &str) -> Result<T, UsageError>
where
    T::Err: std::fmt::Display,
{
    let s = arg
        .as_deref()
        .ok_or_else(|| UsageError(format!("missing {what}")))?;
    s.parse::<T>().map_err(|e| UsageError(format!("bad {what} {s:?}: {e}")))
}

fn cmd_apply(
    op: Operator,
    arg: &Option<String>,
    n: u32,
    vector: &str,
    out: &mut dyn Write,
) -> Result<i32, UsageError> {
    let v = parse_vector(vector).map_err(UsageError)?;
    let residue = |arg: &Option<String>| -> Result<u32, UsageError> {
        let i: u32 = required(arg, "residue")?;
        if i >= n {
            return Err(UsageError(format!("residue {i} out of range for n={n}")));
        }
        Ok(i)
    };
    let result = match op {
        Operator::F => fock::f_action(residue(arg)?, &v, n),
        Operator::E => fock::e_action(residue(arg)?, &v, n),
        Operator::V => fock::v_op(required(arg, "k")?, &v, n),
        Operator::U => fock::u_op(required(arg, "k")?, &v, n),
        Operator::B => {
            let k: i32 = required(arg, "k")?;
            if k == 0 {
                return Err(UsageError("B needs a nonzero k".into()));
            }
            fock::b_op(k, &v, n)
        }
        Operator::S => fock::s_alpha(&required::<Partition>(arg, "partition")?, &v, n),
        Operator::Bar => fock::bar(&v, n),
    };
    writeln!(out, "{result}").map_err(|e| UsageError(e.to_string()))?;
    Ok(EXIT_OK)
}

fn cmd_verify(suite: Suite, n: u32, max_m: usize, out: &mut dyn Write) -> Result<i32, UsageError> {
    let reports = suite.run(n, max_m);
    let mut status = EXIT_OK;
    for r in &reports {
        writeln!(out, "{r}").map_err(|e| UsageError(e.to_string()))?;
        if !r.passed() {
            status = EXIT_FAILURE;
        }
    }
    let verdict = if status == EXIT_OK { "PASS" } else { "FAIL" };
    writeln!(out, "{verdict} {suite}").map_err(|e| UsageError(e.to_string()))?;
    Ok(status)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Matrix {
            kind,
            n,
            m,
            format,
            block,
            cache_dir,
            no_cache,
        } => {
            let cache = (!no_cache).then_some(&cache_dir);
            cmd_matrix(kind, n, m, format, block, cache, out, err)
        }
        Command::Apply { op, arg, n, vector } => cmd_apply(op, &arg, n, &vector, out),
        Command::Verify { suite, n, max_m } => cmd_verify(suite, n, max_m, out),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
