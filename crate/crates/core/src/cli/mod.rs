//! Command-line front end. Every subcommand prints one JSON report per case
//! on stdout, in case order, and a summary line on stderr.

pub mod expr;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::closedform::{verify_theorem, TheoremCase};
use crate::detengine::Engine;
use crate::exactalg::MPoly;
use crate::factorid::proof_steps;
use crate::hyper::{hyper_suite, DEFAULT_SEED};
use crate::luwitness::{build_witness, verify_lu, LuTheorem};
use crate::matrix::RingMatrix;
use crate::recmatrix::{genfun_matched, AMode, PascalFamily};
use crate::report::{elapsed_millis, report_emit, Report, Status};

pub use expr::{parse_expr, parse_poly, ExprAST, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "pascal-det",
    version,
    about = "Exact verification of Pascal-type determinant evaluations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare each determinant with its closed form for n = 1..=n-max.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        theorem: u8,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Engine::Bareiss)]
        engine: Engine,
        /// Integer value for `a` (theorems 4, 5); symbolic when omitted.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        /// Integer point `X,Y` for the factorial form of theorem 6.
        #[arg(long, value_parser = parse_xy)]
        xy: Option<(u64, u64)>,
    },
    /// Identification-of-factors checks for every n = 1..=N.
    ProofSteps {
        #[arg(long)]
        n: usize,
    },
    /// Seeded random instances of the hypergeometric identities.
    HyperSuite {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Check the explicit LU factorization for n = 1..=n-max.
    Lu {
        #[arg(long, value_parser = parse_lu_theorem)]
        theorem: LuTheorem,
        #[arg(long)]
        n_max: usize,
    },
    /// Check the generating function on the truncation window.
    Genfun {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        theorem: u8,
        #[arg(long)]
        order: usize,
    },
    /// Determinant of a JSON matrix of expression strings, by both engines.
    Det {
        #[arg(long)]
        file: PathBuf,
    },
}

fn parse_xy(s: &str) -> Result<(u64, u64), String> {
    let (x, y) = s.split_once(',').ok_or("expected X,Y")?;
    let p = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("`{t}`: {e}"));
    Ok((p(x)?, p(y)?))
}

fn parse_lu_theorem(s: &str) -> Result<LuTheorem, String> {
    match s {
        "1" => Ok(LuTheorem::T1),
        "2" => Ok(LuTheorem::T2),
        "4" => Ok(LuTheorem::T4),
        "5" => Ok(LuTheorem::T5),
        _ => Err("LU witnesses exist for theorems 1, 2, 4, 5".into()),
    }
}

fn theorem_case(theorem: u8, n: usize, a: Option<i64>, xy: Option<(u64, u64)>) -> TheoremCase {
    let a = a.map_or(AMode::Symbolic, AMode::Int);
    match (theorem, xy) {
        (1, _) => TheoremCase::T1 { n },
        (2, _) => TheoremCase::T2 { n },
        (3, _) => TheoremCase::T3 { n },
        (4, _) => TheoremCase::T4 { n, a },
        (5, _) => TheoremCase::T5 { n, a },
        (_, None) => TheoremCase::T6Prefactored { n },
        (_, Some((x, y))) => TheoremCase::T6Factorial { n, x, y },
    }
}

fn family(theorem: u8) -> PascalFamily {
    match theorem {
        1 => PascalFamily::T1,
        2 => PascalFamily::T2,
        _ => PascalFamily::T3,
    }
}

/// Reads a JSON array of equal-length arrays of expression strings.
pub fn read_matrix(text: &str) -> Result<RingMatrix, String> {
    let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| format!("invalid matrix JSON: {e}"))?;
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| parse_poly(s).map_err(|e| format!("entry ({i}, {j}): {e}")))
                .collect::<Result<Vec<MPoly>, String>>()
        })
        .collect::<Result<Vec<_>, String>>()?;
    RingMatrix::from_rows(parsed).ok_or_else(|| "matrix rows differ in length".into())
}

fn det_report(m: &RingMatrix) -> Report {
    let start = Instant::now();
    let (b, c) = (Engine::Bareiss.det(m), Engine::Condensation.det(m));
    match (b, c) {
        (Ok(b), Ok(c)) => {
            let ok = b == c;
            Report::compare(
                "det",
                m.rows(),
                "bareiss|condensation",
                b.to_string(),
                c.to_string(),
                ok,
                elapsed_millis(start),
            )
        }
        (Err(e), _) | (_, Err(e)) => Report::error(
            "det",
            m.rows(),
            "bareiss|condensation",
            e.to_string(),
            elapsed_millis(start),
        ),
    }
}

fn collect_reports(command: Command) -> Result<Vec<Report>, String> {
    Ok(match command {
        Command::Verify {
            theorem,
            n_max,
            engine,
            a,
            xy,
        } => (1..=n_max)
            .into_par_iter()
            .map(|n| verify_theorem(&theorem_case(theorem, n, a, xy), engine))
            .collect(),
        Command::ProofSteps { n } => (1..=n).flat_map(proof_steps).collect(),
        Command::HyperSuite { samples, seed } => hyper_suite(samples, seed),
        Command::Lu { theorem, n_max } => (1..=n_max)
            .into_par_iter()
            .map(|n| verify_lu(&build_witness(theorem, n)))
            .collect(),
        Command::Genfun { theorem, order } => {
            let start = Instant::now();
            let total = (order + 1) * (order + 1);
            let matched = genfun_matched(family(theorem), order);
            vec![Report::compare(
                format!("genfun_T{theorem}"),
                order,
                "series",
                format!("{matched}/{total}"),
                format!("{total}/{total}"),
                true,
                elapsed_millis(start),
            )]
        }
        Command::Det { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            vec![det_report(&read_matrix(&text)?)]
        }
    })
}

/// Runs one invocation; `args` includes the program name. Returns the exit
/// code: 0 if every case passed, 1 if any failed, 2 on usage or input errors.
pub fn run_command<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let reports = match collect_reports(cli.command) {
        Ok(r) => r,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    for r in &reports {
        let _ = writeln!(out, "{}", report_emit(r));
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, error) = (count(Status::Pass), count(Status::Fail), count(Status::Error));
    let _ = writeln!(err, "{} cases: {pass} pass, {fail} fail, {error} error", reports.len());
    if pass == reports.len() {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["pascal-det"];
        full.extend_from_slice(args);
        let code = run_command(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_theorem4() {
        let (code, out, err) = run(&["verify", "--theorem", "4", "--n-max", "3"]);
        assert_eq!(code, 0, "{err}");
        let lines: Vec<Report> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(Report::passed));
        assert_eq!(lines.iter().map(|r| r.n).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(lines[2].rhs, "8");
        assert!(err.contains("3 cases: 3 pass"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["verify", "--theorem", "7", "--n-max", "2"]).0, 2);
        assert_eq!(run(&["lu", "--theorem", "3", "--n-max", "2"]).0, 2);
        assert_eq!(run(&["bogus"]).0, 2);
        assert_eq!(run(&["det", "--file", "/nonexistent/m.json"]).0, 2);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn matrix_input() {
        let m = read_matrix(r#"[["0","-1"],["1","0"]]"#).unwrap();
        assert_eq!(det_report(&m).lhs, "1");
        assert!(read_matrix(r#"[["1","2"],["3"]]"#).is_err());
        assert!(read_matrix(r#"[["x^(-1)"]]"#)
            .unwrap_err()
            .contains("negative exponent"));
        assert!(read_matrix("not json").is_err());
    }

    #[test]
    fn xy_and_a_flags() {
        let (code, out, _) = run(&["verify", "--theorem", "6", "--n-max", "2", "--xy", "3,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("T6_factorial[X=3,Y=1]"));
        let (code, out, _) = run(&[
            "verify",
            "--theorem",
            "5",
            "--n-max",
            "3",
            "--a",
            "-2",
            "--engine",
            "condensation",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("T5[a=-2]") && out.contains("condensation"));
    }

    #[test]
    fn genfun_lu_hyper_commands() {
        let (code, out, _) = run(&["genfun", "--theorem", "2", "--order", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"lhs\":\"25/25\""));
        assert_eq!(run(&["lu", "--theorem", "2", "--n-max", "2"]).0, 0);
        let (code, out, _) = run(&["hyper-suite", "--samples", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 25);
    }
}
