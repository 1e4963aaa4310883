//! Command-line front end for the backward pentadiagonal solver.
//!
//! Commands write results to stdout and one-line diagnostics to stderr.
//! Exit codes: 0 success, 1 usage or input error, 2 zero pivot in float or
//! exact mode, 3 singular system or pole at `x = 0`, 4 `check` mismatch.

use std::ffi::OsString;
use std::fmt::{Display, Write as _};
use std::path::{Path, PathBuf};

use backpenta::oracle::{dense_solve, generate, BandPosition, GeneratorConfig, RhsKind};
use backpenta::system_file::{parse_system, write_system};
use backpenta::{
    solve_symbolic_unevaluated, solve_traced, solve_with_tolerance, BigRational, ExactSystem,
    LUFactors, Mode, SolveError, SolveReport,
};
use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_ZERO_PIVOT: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "backpenta",
    version,
    about = "Solve backward pentadiagonal linear systems in O(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Float,
    Exact,
    Symbolic,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve A X = Y and print one solution component per line.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        /// Append `det(A1) = <value>`.
        #[arg(long)]
        det: bool,
        /// Also treat pivots with |beta| < TOL as zero (float and exact modes).
        #[arg(long)]
        tol: Option<f64>,
        /// Print alpha, beta, gamma and z before the solution.
        #[arg(long)]
        dump_factors: bool,
    },
    /// Print det(A1) and det(A).
    Det {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
    },
    /// Print the factor vectors alpha, beta and gamma.
    Factor {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
    },
    /// Compare the banded solve against a dense exact elimination.
    Check { path: PathBuf },
    /// Write a random system with a planted integer solution.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        /// Entries are drawn from [-RANGE, RANGE].
        #[arg(long, default_value_t = 9)]
        range: u64,
        /// Force an entry to zero, e.g. `d_n`, `a_3`, `b_tilde_n-1`. Repeatable.
        #[arg(long = "zero")]
        zero: Vec<BandPosition>,
        /// Draw Y directly instead of planting a solution.
        #[arg(long)]
        random_rhs: bool,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Captured result of one command.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn fail(code: i32, msg: impl Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code,
        }
    }

    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
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
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    match cli.command {
        Command::Solve {
            path,
            mode,
            det,
            tol,
            dump_factors,
        } => cmd_solve(&path, mode, det, tol, dump_factors),
        Command::Det { path, mode } => cmd_det(&path, mode),
        Command::Factor { path, mode } => cmd_factor(&path, mode),
        Command::Check { path } => cmd_check(&path),
        Command::Gen {
            seed,
            n,
            range,
            zero,
            random_rhs,
            out,
        } => cmd_gen(seed, n, range, zero, random_rhs, out.as_deref()),
    }
}

fn load(path: &Path) -> Result<ExactSystem, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))?;
    parse_system(&text).map_err(|e| Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn solve_error(e: SolveError) -> Outcome {
    let code = match e {
        SolveError::ZeroPivot(_) => EXIT_ZERO_PIVOT,
        SolveError::PoleAtZero { .. } | SolveError::Singular => EXIT_SINGULAR,
    };
    Outcome::fail(code, e)
}

fn join<T: Display>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn dump<T: Display>(out: &mut String, f: &LUFactors<T>, z: &[T]) {
    let _ = writeln!(out, "alpha = {}", join(&f.alpha));
    let _ = writeln!(out, "beta = {}", join(&f.beta));
    let _ = writeln!(out, "gamma = {}", join(&f.gamma));
    let _ = writeln!(out, "z = {}", join(z));
}

fn print_report<T: Display>(out: &mut String, r: &SolveReport<T>, with_det: bool) {
    for v in &r.x {
        let _ = writeln!(out, "{v}");
    }
    if with_det {
        let _ = writeln!(out, "det(A1) = {}", r.det);
    }
}

fn numeric<T>(
    sys: &ExactSystem,
    tol: Option<f64>,
) -> Result<(SolveReport<T>, backpenta::Trace<T>), SolveError>
where
    T: backpenta::Scalar + num_traits::ToPrimitive,
{
    let lifted = sys.map(T::from_rational);
    match tol {
        Some(tol) => solve_with_tolerance(&lifted, tol),
        None => solve_traced(&lifted),
    }
}

pub fn cmd_solve_system(
    sys: &ExactSystem,
    mode: Mode,
    det: bool,
    tol: Option<f64>,
    dump_factors: bool,
) -> Outcome {
    let mut out = String::new();
    match mode {
        Mode::Float => match numeric::<f64>(sys, tol) {
            Ok((r, t)) => {
                if dump_factors {
                    dump(&mut out, &t.factors, &t.z);
                }
                print_report(&mut out, &r, det);
            }
            Err(e) => return solve_error(e),
        },
        Mode::Exact => match numeric::<BigRational>(sys, tol) {
            Ok((r, t)) => {
                if dump_factors {
                    dump(&mut out, &t.factors, &t.z);
                }
                print_report(&mut out, &r, det);
            }
            Err(e) => return solve_error(e),
        },
        Mode::Symbolic => {
            if tol.is_some() {
                return Outcome::fail(EXIT_USAGE, "--tol does not apply to symbolic mode");
            }
            let sol = solve_symbolic_unevaluated(sys);
            if dump_factors {
                dump(&mut out, &sol.factors, &sol.z);
                let _ = writeln!(out, "X(x) = {}", join(&sol.x));
                let _ = writeln!(out, "replaced = {}", join(&sol.pivot_replacements));
            }
            match sol.substitute_zero() {
                Ok(r) => print_report(&mut out, &r, det),
                Err(e) => return solve_error(e),
            }
        }
    }
    Outcome::ok(out)
}

fn to_mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Float => Mode::Float,
        ModeArg::Exact => Mode::Exact,
        ModeArg::Symbolic => Mode::Symbolic,
    }
}

fn cmd_solve(
    path: &Path,
    mode: ModeArg,
    det: bool,
    tol: Option<f64>,
    dump_factors: bool,
) -> Outcome {
    match load(path) {
        Ok(sys) => cmd_solve_system(&sys, to_mode(mode), det, tol, dump_factors),
        Err(o) => o,
    }
}

fn cmd_det(path: &Path, mode: ModeArg) -> Outcome {
    let sys = match load(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let lines =
        |det: String, orig: String| Outcome::ok(format!("det(A1) = {det}\ndet(A) = {orig}\n"));
    match to_mode(mode) {
        Mode::Float => match numeric::<f64>(&sys, None) {
            Ok((r, _)) => lines(r.det.to_string(), r.det_original().to_string()),
            Err(e) => solve_error(e),
        },
        Mode::Exact => match numeric::<BigRational>(&sys, None) {
            Ok((r, _)) => lines(r.det.to_string(), r.det_original().to_string()),
            Err(e) => solve_error(e),
        },
        Mode::Symbolic => match backpenta::solve_symbolic(&sys) {
            Ok(r) => lines(r.det.to_string(), r.det_original().to_string()),
            Err(e) => solve_error(e),
        },
    }
}

fn cmd_factor(path: &Path, mode: ModeArg) -> Outcome {
    let sys = match load(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let mut out = String::new();
    match to_mode(mode) {
        Mode::Float => match numeric::<f64>(&sys, None) {
            Ok((_, t)) => dump(&mut out, &t.factors, &t.z),
            Err(e) => return solve_error(e),
        },
        Mode::Exact => match numeric::<BigRational>(&sys, None) {
            Ok((_, t)) => dump(&mut out, &t.factors, &t.z),
            Err(e) => return solve_error(e),
        },
        Mode::Symbolic => {
            let sol = solve_symbolic_unevaluated(&sys);
            dump(&mut out, &sol.factors, &sol.z);
            let _ = writeln!(out, "replaced = {}", join(&sol.pivot_replacements));
        }
    }
    Outcome::ok(out)
}

pub fn cmd_check_system(sys: &ExactSystem) -> Outcome {
    let (banded, path) = match backpenta::solve(sys) {
        Ok(r) => (Ok(r), Mode::Exact),
        Err(SolveError::ZeroPivot(_)) => (backpenta::solve_symbolic(sys), Mode::Symbolic),
        Err(e) => (Err(e), Mode::Exact),
    };
    let oracle = dense_solve(&sys.densify(), sys.y());
    let mut out = format!("path: {path}\n");
    let verdict = match (&banded, &oracle) {
        (Ok(r), Ok(x)) => {
            let _ = writeln!(out, "banded: {}", join(&r.x));
            let _ = writeln!(out, "oracle: {}", join(x));
            if r.x == *x {
                "MATCH"
            } else {
                "MISMATCH"
            }
        }
        (Err(e), Err(o)) => {
            let _ = writeln!(out, "banded: {e}");
            let _ = writeln!(out, "oracle: {o}");
            out.push_str("SINGULAR\n");
            return Outcome {
                stdout: out,
                stderr: "error: system is singular\n".into(),
                code: EXIT_SINGULAR,
            };
        }
        (Ok(r), Err(o)) => {
            let _ = writeln!(out, "banded: {}", join(&r.x));
            let _ = writeln!(out, "oracle: {o}");
            "MISMATCH"
        }
        (Err(e), Ok(x)) => {
            let _ = writeln!(out, "banded: {e}");
            let _ = writeln!(out, "oracle: {}", join(x));
            "MISMATCH"
        }
    };
    let _ = writeln!(out, "{verdict}");
    let code = if verdict == "MATCH" {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    Outcome {
        stdout: out,
        stderr: String::new(),
        code,
    }
}

fn cmd_check(path: &Path) -> Outcome {
    match load(path) {
        Ok(sys) => cmd_check_system(&sys),
        Err(o) => o,
    }
}

pub fn gen_text(
    seed: u64,
    n: usize,
    range: u64,
    zero: Vec<BandPosition>,
    random_rhs: bool,
) -> Result<String, String> {
    if n < backpenta::banded::MIN_SIZE {
        return Err(format!("--n must be at least 5, got {n}"));
    }
    if range == 0 {
        return Err("--range must be at least 1".into());
    }
    if let Some(bad) = zero.iter().find(|p| p.resolve(n).is_none()) {
        return Err(format!("position {bad} is outside a system of size {n}"));
    }
    let mut header = format!("generated: seed={seed} n={n} range={range}");
    for p in &zero {
        let _ = write!(header, " zero={p}");
    }
    let rhs = if random_rhs {
        RhsKind::Random
    } else {
        RhsKind::PlantedSolution
    };
    let cfg = GeneratorConfig {
        seed,
        n,
        entry_range: range,
        force_zero: zero,
        rhs,
    };
    let g = generate::<BigRational>(&cfg);
    let mut comments = vec![header];
    if let Some(x) = &g.solution {
        comments.push(format!("solution: {}", join(x)));
    }
    let refs: Vec<&str> = comments.iter().map(String::as_str).collect();
    Ok(write_system(&g.system, &refs))
}

fn cmd_gen(
    seed: u64,
    n: usize,
    range: u64,
    zero: Vec<BandPosition>,
    random_rhs: bool,
    out: Option<&Path>,
) -> Outcome {
    let text = match gen_text(seed, n, range, zero, random_rhs) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    match out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome::ok(text),
    }
}
