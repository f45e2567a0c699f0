//! Command-line front end: argument model, input files, and report assembly.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 input or parse error,
//! 3 capacity exceeded, 4 singular system.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::combinadics::enumerate_subsets;
use crate::cramer::{solve, solve_by_cross, LinearSystem};
use crate::error::{Error, Result};
use crate::matrix::{
    det, dot, matrix_from_parsed, parse_line, parse_matrix, parse_rows, Matrix, Vector,
};
use crate::report::{matrix_rows_value, scalar_value, vector_value, Report};
use crate::reversing::{classify, classify_vector, reverse_matrix, Palindromy};
use crate::scalar::{Mode, Rational, Scalar, REL_TOL};
use crate::verify::{
    parse_size_range, run_suite, SuiteConfig, SuiteId, DEFAULT_SEED, DEFAULT_TRIALS,
};
use crate::wedge::{cross_matrix, wedge_matrix_with_cap, DEFAULT_COMPONENT_CAP};

pub const CAP_ENV: &str = "WEDGEKIT_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_SINGULAR: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "wedgekit",
    version,
    about = "Generalized vector products, exterior maps and reversal identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ModeArg {
    /// Scalar arithmetic: exact rationals or binary64 floats.
    #[arg(long, default_value = "exact")]
    pub mode: Mode,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exterior product of the rows of a k x n matrix.
    Wedge {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArg,
        #[command(flatten)]
        output: Output,
        /// Also emit lexicographic, unsigned Plücker coordinates.
        #[arg(long)]
        plucker: bool,
        /// Maximum number of components (overrides WEDGEKIT_CAP).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Vector product of the n-1 rows of an (n-1) x n matrix.
    Cross {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArg,
        #[command(flatten)]
        output: Output,
    },
    /// Solve a square system; the last line holds the right-hand side as `b: ...`.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArg,
        #[command(flatten)]
        output: Output,
    },
    /// Palindromic / antipalindromic classification of a matrix.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArg,
        #[command(flatten)]
        output: Output,
    },
    /// Run a seeded verification suite in exact arithmetic.
    Verify {
        /// prop1, prop2, prop3, palindromic-vanish, wedge-props, cramer-equiv or final-remarks.
        suite: String,
        /// Inclusive size range, `a..b` or a single `n`.
        #[arg(long)]
        sizes: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Component cap for the exterior-product suite.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Domain(_) | Error::Shape { .. } => EXIT_INPUT,
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Singular { .. } => EXIT_SINGULAR,
        Error::Invariant(_) => EXIT_CHECK_FAILED,
    }
}

/// Component cap: the flag wins over the environment, which wins over the
/// default.
pub fn resolve_cap(flag: Option<usize>, env: Option<&str>) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match env {
        Some(raw) => raw
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("{CAP_ENV}='{raw}' is not a component count"))),
        None => Ok(DEFAULT_COMPONENT_CAP),
    }
}

pub fn run(cli: &Cli, env_cap: Option<&str>) -> Outcome {
    let format = match &cli.command {
        Command::Wedge { output, .. }
        | Command::Cross { output, .. }
        | Command::Solve { output, .. }
        | Command::Classify { output, .. }
        | Command::Verify { output, .. } => output.format,
    };
    match execute(&cli.command, env_cap) {
        Ok(report) => Outcome {
            stdout: match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            },
            stderr: String::new(),
            code: if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            },
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

pub fn execute(cmd: &Command, env_cap: Option<&str>) -> Result<Report> {
    match cmd {
        Command::Wedge {
            file,
            mode,
            plucker,
            cap,
            ..
        } => {
            let text = read(file)?;
            let cap = resolve_cap(*cap, env_cap)?;
            match mode.mode {
                Mode::Exact => wedge_report::<Rational>(&text, *plucker, cap),
                Mode::Float => wedge_report::<f64>(&text, *plucker, cap),
            }
        }
        Command::Cross { file, mode, .. } => {
            let text = read(file)?;
            match mode.mode {
                Mode::Exact => cross_report::<Rational>(&text),
                Mode::Float => cross_report::<f64>(&text),
            }
        }
        Command::Solve { file, mode, .. } => {
            let text = read(file)?;
            match mode.mode {
                Mode::Exact => solve_report::<Rational>(&text),
                Mode::Float => solve_report::<f64>(&text),
            }
        }
        Command::Classify { file, mode, .. } => {
            let text = read(file)?;
            match mode.mode {
                Mode::Exact => classify_report::<Rational>(&text),
                Mode::Float => classify_report::<f64>(&text),
            }
        }
        Command::Verify {
            suite,
            sizes,
            trials,
            seed,
            cap,
            ..
        } => {
            let id: SuiteId = suite.parse()?;
            let mut cfg = SuiteConfig::defaults(id);
            if let Some(s) = sizes {
                cfg.sizes = parse_size_range(s)?;
            }
            cfg.trials = *trials;
            cfg.seed = *seed;
            cfg.cap = resolve_cap(*cap, env_cap)?;
            Ok(verify_report(id, &cfg)?)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

pub fn wedge_report<S: Scalar>(text: &str, plucker: bool, cap: usize) -> Result<Report> {
    let u: Matrix<S> = parse_matrix(text)?;
    let (k, n) = (u.rows(), u.cols());
    let mut r = Report::new("wedge", S::MODE);
    r.input("matrix", matrix_rows_value(&u))
        .input("cap", cap)
        .input("plucker", plucker);
    let w = wedge_matrix_with_cap(&u, cap)?;
    r.output("n", n)
        .output("k", k)
        .output("convention", w.convention().tag())
        .output("wedge", vector_value(w.components()));
    if plucker {
        let subsets: Vec<Value> = enumerate_subsets(n, k)?
            .iter()
            .map(|s| Value::String(s.to_string()))
            .collect();
        r.output("plucker", vector_value(&w.to_plucker()))
            .output("plucker_subsets", Value::Array(subsets));
    }
    if k == n {
        let d = det(&u)?;
        r.output("det", scalar_value(&d));
        let single = w.components().get(0);
        r.check(
            "k=n: wedge equals det",
            single.approx_eq(&d),
            Some(format!("{} vs {}", single.render(), d.render())),
        );
    }
    if n >= 2 && k == n - 1 {
        let c = cross_matrix(&u)?;
        r.check(
            "k=n-1: wedge equals cross",
            w.components().approx_eq(&c),
            Some(format!("{} vs {c}", w.components())),
        );
    }
    Ok(r)
}

pub fn cross_report<S: Scalar>(text: &str) -> Result<Report> {
    let m: Matrix<S> = parse_matrix(text)?;
    let mut r = Report::new("cross", S::MODE);
    r.input("matrix", matrix_rows_value(&m));
    let c = cross_matrix(&m)?;
    r.output("cross", vector_value(&c));
    if c.is_zero() {
        let reason = match classify(&m) {
            Palindromy::Palindromic if m.cols() >= 4 => "palindromic",
            Palindromy::Antipalindromic if m.cols() >= 4 => "antipalindromic",
            _ => "linearly dependent rows",
        };
        r.output("degenerate", reason);
    }
    for (j, row) in m.row_vectors().iter().enumerate() {
        let d = dot(row, &c)?;
        r.check(
            format!("dot(A_{}, cross) = 0", j + 1),
            d.is_zero_value(),
            Some(d.render()),
        );
    }
    Ok(r)
}

/// Reads a system file: `n` coefficient rows, then a final `b: …` line.
pub fn parse_system<S: Scalar>(text: &str) -> Result<LinearSystem<S>> {
    let mut body = Vec::new();
    let mut rhs: Option<(usize, Vec<S>)> = None;
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some((line_no, _)) = &rhs {
            return Err(Error::Parse {
                line: idx + 1,
                column: 1,
                message: format!("content after the right-hand side on line {line_no}"),
            });
        }
        if let Some(rest) = trimmed.strip_prefix("b:") {
            // blank out the prefix so reported columns match the file
            let offset = line.len() - rest.len();
            let masked = format!("{}{rest}", " ".repeat(offset));
            rhs = Some((idx + 1, parse_line(&masked, idx + 1)?));
        } else {
            body.push((idx, line));
        }
    }
    let Some((b_line, b)) = rhs else {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: "missing right-hand side line 'b: ...'".into(),
        });
    };
    let a = matrix_from_parsed(parse_rows::<S>(body.into_iter())?)?;
    if !a.is_square() {
        return Err(Error::shape(
            "square coefficient matrix",
            format!("{}x{}", a.rows(), a.cols()),
        ));
    }
    if b.len() != a.rows() {
        return Err(Error::Parse {
            line: b_line,
            column: 1,
            message: format!(
                "right-hand side has {} entries, expected {}",
                b.len(),
                a.rows()
            ),
        });
    }
    LinearSystem::from_matrix(&a, Vector::new(b)?)
}

/// Echo of a system in the file format it was read from.
pub fn system_rows<S: Scalar>(sys: &LinearSystem<S>) -> Vec<String> {
    let mut rows = sys.coefficient_matrix().to_text_rows();
    let b: Vec<String> = sys.rhs().entries().iter().map(Scalar::render).collect();
    rows.push(format!("b: {}", b.join(" ")));
    rows
}

pub fn solve_report<S: Scalar>(text: &str) -> Result<Report> {
    let sys: LinearSystem<S> = parse_system(text)?;
    let mut r = Report::new("solve", S::MODE);
    r.input("system", system_rows(&sys));
    let x = solve(&sys)?;
    let residual = sys.residual(&x)?;
    r.output("x", vector_value(&x))
        .output("det", scalar_value(&det(&sys.coefficient_matrix())?))
        .output("residual", vector_value(&residual));

    let residual_ok = match S::MODE {
        Mode::Exact => residual.is_zero(),
        Mode::Float => {
            let a = sys.coefficient_matrix();
            let abs_max = |v: &[S]| {
                v.iter()
                    .map(|e| e.render().parse::<f64>().unwrap_or(f64::INFINITY).abs())
                    .fold(0.0, f64::max)
            };
            let a_norm = (0..a.rows())
                .map(|i| {
                    a.row(i)
                        .iter()
                        .map(|e| e.render().parse::<f64>().unwrap_or(f64::INFINITY).abs())
                        .sum::<f64>()
                })
                .fold(0.0, f64::max);
            let bound = REL_TOL * (a_norm * abs_max(x.entries()) + abs_max(sys.rhs().entries()));
            abs_max(residual.entries()) <= bound
        }
    };
    r.check(
        "residual sum x_i A_i - B vanishes",
        residual_ok,
        Some(residual.to_string()),
    );
    let by_cross = solve_by_cross(&sys)?;
    for i in 0..sys.n() {
        let (a, b) = (x.get(i), by_cross.get(i));
        r.check(
            format!("x_{}: cross quotient equals det ratio", i + 1),
            a.approx_eq(b),
            Some(format!("{} vs {}", a.render(), b.render())),
        );
    }
    Ok(r)
}

pub fn classify_report<S: Scalar>(text: &str) -> Result<Report> {
    let m: Matrix<S> = parse_matrix(text)?;
    let mut r = Report::new("classify", S::MODE);
    r.input("matrix", matrix_rows_value(&m));
    let class = classify(&m);
    let rows: Vec<Value> = m
        .row_vectors()
        .iter()
        .map(|v| Value::String(classify_vector(v).to_string()))
        .collect();
    r.output("class", class.to_string())
        .output("rows", Value::Array(rows))
        .output("reversed", matrix_rows_value(&reverse_matrix(&m)));
    if m.row_vectors().iter().all(Vector::is_zero) {
        r.output(
            "note",
            "zero matrix is both palindromic and antipalindromic; reported as palindromic",
        );
    }
    Ok(r)
}

pub fn verify_report(id: SuiteId, cfg: &SuiteConfig) -> Result<Report> {
    let outcome = run_suite(id, cfg)?;
    let mut r = Report::new("verify", Mode::Exact);
    r.input("suite", id.name())
        .input(
            "sizes",
            format!("{}..{}", cfg.sizes.start(), cfg.sizes.end()),
        )
        .input("trials", cfg.trials)
        .input("seed", cfg.seed);
    let passed = outcome.checks.iter().filter(|c| c.passed).count();
    r.output(
        "summary",
        format!("{passed}/{} checks passed", outcome.checks.len()),
    );
    for (k, v) in &outcome.values {
        r.output(k, v.as_str());
    }
    r.checks = outcome.checks.into_iter().map(Into::into).collect();
    Ok(r)
}
