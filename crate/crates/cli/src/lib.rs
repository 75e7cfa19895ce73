//! Command-line surface for `ordkit`. [`run_command`] does all the work and
//! returns the exit code with captured output, so it can be tested without
//! spawning a process.

use std::cmp::Ordering;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ordkit::bounds::{theorem1_trace, theorem2_trace, BoundState};
use ordkit::check::{self, SuiteReport};
use ordkit::formula::{classify, rank};
use ordkit::hull::{in_hull, HullQuery};
use ordkit::mahlo::abgam;
use ordkit::order::{cmp, enumerate_below};
use ordkit::syntax::{parse_formula, parse_term, print_term, ParseError};
use ordkit::{arith, Error, Term, ThetaSet};

pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ordkit", version, about = "Ordinal notation toolkit")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare two terms: prints LT, EQ or GT.
    Cmp { left: String, right: String },
    /// Normal form of a term.
    Nf { term: String },
    /// Rank of a formula.
    Rank { formula: String },
    /// Class membership of a formula over λ.
    Classify {
        formula: String,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Membership of a term in H_{α,n}[Θ](β).
    Hull {
        term: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        /// Comma-separated parameters.
        #[arg(long)]
        theta: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// b_n, a_n, γ_{k,n} and ᾱ_{k,n}.
    Abgam {
        #[arg(long)]
        n: u32,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Normal-form terms below a bound, in increasing order.
    Enum {
        #[arg(long)]
        below: String,
        #[arg(long)]
        size: usize,
    },
    /// Bound bookkeeping of a collapsing chain.
    Trace {
        which: Chain,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long = "N", default_value_t = 2)]
        big_n: usize,
    },
    /// Run the full property suite.
    Check,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Chain {
    Thm1,
    Thm2,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse(ParseError),
    Op(Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Op(e)
    }
}

type Run = Result<(i32, String), Failure>;

pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => {
            let (code, msg, detail) = match f {
                Failure::Parse(e) => (
                    EXIT_INVALID,
                    e.to_string(),
                    json!({"kind": "parse", "line": e.line, "col": e.col, "expected": e.expected, "message": e.message}),
                ),
                Failure::Op(e) => {
                    let code = if matches!(e, Error::SizeLimitExceeded { .. }) { EXIT_CAP } else { EXIT_INVALID };
                    (code, e.to_string(), json!({"kind": "error", "message": e.to_string()}))
                }
            };
            if cli.json {
                Outcome {
                    code,
                    stdout: format!("{}\n", json!({"error": detail})),
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("error: {msg}\n"),
                }
            }
        }
    }
}

fn ord_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn term_json(t: &Term) -> Value {
    serde_json::to_value(t).expect("terms serialize")
}

fn emit(json_mode: bool, value: Value, text: String) -> Run {
    Ok((0, render(json_mode, value, text)))
}

fn render(json_mode: bool, value: Value, text: String) -> String {
    if json_mode {
        format!("{}\n", serde_json::to_string_pretty(&value).expect("values serialize"))
    } else {
        text
    }
}

/// Splits at commas outside brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().filter(|p| !p.trim().is_empty()).collect()
}

fn dispatch(cli: &Cli) -> Run {
    let j = cli.json;
    match &cli.command {
        Command::Cmp { left, right } => {
            let (a, b) = (parse_term(left)?, parse_term(right)?);
            let o = ord_name(cmp(&a, &b)?);
            emit(j, json!({"result": o}), format!("{o}\n"))
        }
        Command::Nf { term } => {
            let t = arith::normalize(&parse_term(term)?)?;
            emit(j, term_json(&t), format!("{t}\n"))
        }
        Command::Rank { formula } => {
            let f = parse_formula(formula)?;
            let r = rank(&f)?;
            emit(j, json!({"rank": term_json(&r), "text": r.to_string()}), format!("{r}\n"))
        }
        Command::Classify { formula, lambda, n } => {
            let f = parse_formula(formula)?;
            let lam = parse_term(lambda)?;
            let c = classify(&f, &lam, *n)?;
            let level = c.pi1_level.map_or("none".to_string(), |k| k.to_string());
            let text = format!(
                "delta0: {}\nsigma-sigma: {}\npi1-level: {level}\npi20: {}\n",
                c.is_delta0_lambda, c.is_sigma_sigma, c.pi20
            );
            emit(j, serde_json::to_value(&c).expect("serializable"), text)
        }
        Command::Hull {
            term,
            alpha,
            beta,
            theta,
            n,
        } => {
            let t = parse_term(term)?;
            let elems = theta
                .as_deref()
                .map(split_top_level)
                .unwrap_or_default()
                .into_iter()
                .map(parse_term)
                .collect::<Result<Vec<_>, _>>()?;
            let q = HullQuery::new(parse_term(alpha)?, *n, parse_term(beta)?).with_theta(ThetaSet::new(elems)?);
            let member = in_hull(&t, &q)?;
            emit(j, json!({"member": member}), format!("{member}\n"))
        }
        Command::Abgam { n, big_n } => {
            let ab = abgam(*n, *big_n)?;
            let mut text = format!("b = {}\na = {}\n", ab.b, ab.a);
            for (k, g) in ab.gamma.iter().enumerate() {
                let _ = writeln!(text, "gamma_{k} = {g}");
            }
            for (k, s) in ab.alpha_vec.iter().enumerate() {
                let items: Vec<String> = s.0.iter().map(print_term).collect();
                let _ = writeln!(text, "alpha_{k} = ({})", items.join(", "));
            }
            emit(j, serde_json::to_value(&ab).expect("serializable"), text)
        }
        Command::Enum { below, size } => {
            let terms = enumerate_below(&parse_term(below)?, *size)?;
            let text: String = terms.iter().map(|t| format!("{t}\n")).collect();
            let value = Value::Array(terms.iter().map(term_json).collect());
            emit(j, value, text)
        }
        Command::Trace { which, m, p, big_n } => {
            let trace = match which {
                Chain::Thm1 => theorem1_trace(*m, *p, *big_n)?,
                Chain::Thm2 => theorem2_trace(*m, *p, *big_n)?,
            };
            let ok = trace.iter().all(BoundState::all_conditions_hold);
            let text = trace_text(&trace);
            let out = render(j, serde_json::to_value(&trace).expect("serializable"), text);
            Ok((if ok { 0 } else { EXIT_VIOLATION }, out))
        }
        Command::Check => {
            let reports = check::run_all();
            let ok = reports.iter().all(SuiteReport::passed);
            let text = check_text(&reports);
            let value = json!({
                "passed": ok,
                "suites": reports.iter().map(|r| json!({
                    "name": r.name,
                    "checked": r.checked,
                    "failures": r.failure_count,
                    "examples": r.failures,
                })).collect::<Vec<_>>(),
            });
            let out = render(j, value, text);
            Ok((if ok { 0 } else { EXIT_VIOLATION }, out))
        }
    }
}

fn trace_text(trace: &[BoundState]) -> String {
    let mut out = String::new();
    for (i, s) in trace.iter().enumerate() {
        let _ = writeln!(out, "[{i}] {}", s.note);
        let _ = writeln!(out, "    height     {}", s.height);
        let _ = writeln!(out, "    cut rank   {}", s.cut_rank);
        let _ = writeln!(out, "    hull stage {}", s.hull_stage);
        let _ = writeln!(out, "    theory {} subscript {}", s.theory, s.n);
        for c in &s.side_conditions {
            let _ = writeln!(out, "    {} {}", if c.holds { "ok  " } else { "FAIL" }, c.label);
        }
    }
    out
}

/// Timings are left out so that repeated runs print the same bytes.
fn check_text(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(out, "{status} {} ({} checks, {} failures)", r.name, r.checked, r.failure_count);
        for f in &r.failures {
            let _ = writeln!(out, "    {f}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_command(std::iter::once("ordkit").chain(args.iter().copied()))
    }

    #[test]
    fn compare() {
        let o = run(&["cmp", "tower(2, I+1)", "tower(1, I*2)"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "GT\n"));
    }

    #[test]
    fn parse_failure_exits_one() {
        let o = run(&["nf", "phi(w1, 0) + K"]);
        assert_eq!(o.code, EXIT_INVALID);
        assert!(o.stderr.contains("1:1"), "{}", o.stderr);
    }

    #[test]
    fn usage_error_exits_one() {
        assert_eq!(run(&["frobnicate"]).code, EXIT_INVALID);
        assert_eq!(run(&["--help"]).code, 0);
    }

    #[test]
    fn theta_splitting() {
        assert_eq!(split_top_level("phi(1, 0), K"), vec!["phi(1, 0)", " K"]);
        assert!(split_top_level("").is_empty());
    }

    #[test]
    fn hull_membership() {
        let o = run(&["hull", "psi(w1; 1; 0)", "--alpha", "1", "--beta", "0"]);
        assert_eq!(o.stdout, "true\n");
        let o = run(&["hull", "psi(w1; 1; 0)", "--alpha", "0", "--beta", "0", "--theta", "1,w"]);
        assert_eq!(o.stdout, "false\n");
    }
}
