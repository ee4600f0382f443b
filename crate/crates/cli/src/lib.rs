//! The `baxlab` command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use baxlab_core::bijections::{
    gamma, gamma_inverse, gamma_prime, gamma_prime_inverse, gamma_prime_unchecked, gamma_unchecked,
    psi, psi_inverse,
};
use baxlab_core::harness::{run_suite, Suite};
use baxlab_core::json::{to_json, triple_from_json_strict};
use baxlab_core::laguerre::psi_fv;
use baxlab_core::lattice::{enumerate_tlp, PathTriple};
use baxlab_core::qseries::{baxter_polynomial_lhs, baxter_polynomial_rhs};
use baxlab_core::render::render_ascii;
use baxlab_core::{Error, Permutation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser)]
#[command(name = "baxlab")]
#[command(about = "Baxter permutations, path triples and the bijections between them")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the non-intersecting path triples of Tlp(n,k) (all k if omitted)
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: EnumFormat,
    },
    /// Apply a map to a permutation
    Map {
        /// Permutation as digits (n <= 9), a JSON array, or comma-separated letters
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum)]
        to: MapTarget,
        #[arg(long, value_enum, default_value = "json")]
        render: Render,
        /// Allow non-Baxter input for gamma / gamma-prime; the paths may intersect
        #[arg(long)]
        unchecked: bool,
    },
    /// Recover the permutation from a path triple (JSON file, `-` for stdin)
    Invert {
        #[arg(long, value_enum)]
        from: InvertSource,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print the (t,q)-Baxter polynomial as a JSON term list
    Poly {
        #[arg(long)]
        n: usize,
        /// Closed form, or the statistic sum over the Baxter permutations
        #[arg(long, value_enum, default_value = "formula")]
        from: PolySource,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Worker threads (0 = all cores)
        #[arg(long, env = "BAXLAB_JOBS")]
        jobs: Option<usize>,
        /// Print the full report as JSON instead of one line per check
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFormat {
    Json,
    Csv,
    Count,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapTarget {
    Gamma,
    GammaPrime,
    Psi,
    Laguerre,
}

#[derive(Clone, Copy, ValueEnum)]
enum Render {
    Ascii,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvertSource {
    Gamma,
    GammaPrime,
    Psi,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolySource {
    Formula,
    Statistics,
}

/// Failure of a subcommand: the exit code and a message for stderr.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_INVALID, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(EXIT_INVALID, e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Enum { n, k, format } => enumerate(n, k, format, out),
        Command::Map {
            perm,
            to,
            render,
            unchecked,
        } => map(&perm, to, render, unchecked, out),
        Command::Invert { from, input } => invert(from, &input, out),
        Command::Poly { n, from } => poly(n, from, out),
        Command::Verify {
            suite,
            n,
            jobs,
            json,
        } => verify(&suite, n, jobs, json, out),
    }
}

fn enumerate(
    n: usize,
    k: Option<usize>,
    format: EnumFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()).into());
    }
    let ks = match k {
        Some(k) if k >= n => {
            return Err(
                Error::Domain(format!("k must satisfy 0 <= k <= n-1, got k={k}, n={n}")).into(),
            )
        }
        Some(k) => k..k + 1,
        None => 0..n,
    };
    let triples: Vec<PathTriple> = ks.flat_map(|k| enumerate_tlp(n, k)).collect();
    match format {
        EnumFormat::Count => writeln!(out, "{}", triples.len())?,
        EnumFormat::Json => writeln!(out, "{}", to_json(&triples))?,
        EnumFormat::Csv => {
            writeln!(out, "bottom,middle,top")?;
            for t in &triples {
                writeln!(
                    out,
                    "{},{},{}",
                    t.bottom.word(),
                    t.middle.word(),
                    t.top.word()
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn map(
    perm: &str,
    to: MapTarget,
    render: Render,
    unchecked: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let p: Permutation = perm.parse()?;
    let triple = match to {
        MapTarget::Laguerre => {
            let h = psi_fv(&p);
            match render {
                Render::Json => writeln!(out, "{}", to_json(&h))?,
                Render::Ascii => writeln!(out, "{h}")?,
            }
            return Ok(EXIT_OK);
        }
        MapTarget::Gamma if unchecked => gamma_unchecked(&p),
        MapTarget::GammaPrime if unchecked => gamma_prime_unchecked(&p),
        MapTarget::Gamma => gamma(&p)?,
        MapTarget::GammaPrime => gamma_prime(&p)?,
        MapTarget::Psi => psi(&p)?,
    };
    match render {
        Render::Json => writeln!(out, "{}", to_json(&triple))?,
        Render::Ascii => write!(out, "{}", render_ascii(&triple))?,
    }
    Ok(EXIT_OK)
}

fn invert(from: InvertSource, input: &PathBuf, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = if input.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(input).map_err(|e| {
            Failure(
                EXIT_INVALID,
                format!("cannot read {}: {e}", input.display()),
            )
        })?
    };
    let t = triple_from_json_strict(&text)?;
    let p = match from {
        InvertSource::Gamma => gamma_inverse(&t)?,
        InvertSource::GammaPrime => gamma_prime_inverse(&t)?,
        InvertSource::Psi => psi_inverse(&t)?,
    };
    writeln!(out, "{}", to_json(&p))?;
    Ok(EXIT_OK)
}

fn poly(n: usize, from: PolySource, out: &mut dyn Write) -> Result<i32, Failure> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()).into());
    }
    let p = match from {
        PolySource::Formula => baxter_polynomial_rhs(n as u32)
            .map_err(|e| Failure(EXIT_VERIFY_FAILED, e.to_string()))?,
        PolySource::Statistics => baxter_polynomial_lhs(n),
    };
    writeln!(out, "{}", to_json(&p.to_terms()))?;
    Ok(EXIT_OK)
}

fn verify(
    suite: &str,
    n: usize,
    jobs: Option<usize>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, n, jobs)?;
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report)
                .map_err(|e| Failure(EXIT_INVALID, e.to_string()))?
        )?;
    } else {
        for c in &report.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{tag}  {}  [{}]", c.label, c.detail)?;
        }
        let failed = report.failures().count();
        writeln!(
            out,
            "{}: {} checks, {} failed, {} ms",
            report.suite,
            report.checks.len(),
            failed,
            report.elapsed_ms
        )?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}
