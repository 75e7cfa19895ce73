//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use ordkit::check::{self, SuiteReport, CORPUS_DEPTH, CORPUS_SEED, CORPUS_SIZE};
use ordkit::order::enumerate_below;
use ordkit::Term;

struct Verdict {
    passed: bool,
    detail: String,
}

fn within(r: &SuiteReport, limit: Option<Duration>) -> Verdict {
    let mut detail = format!("{} checks, {} failures, {:.2}s", r.checked, r.failure_count, r.elapsed.as_secs_f64());
    if let Some(l) = limit {
        detail.push_str(&format!(" (limit {}s)", l.as_secs()));
    }
    for f in &r.failures {
        detail.push_str(&format!("\n      {f}"));
    }
    Verdict {
        passed: r.passed() && limit.is_none_or(|l| r.elapsed <= l),
        detail,
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn order_axioms() -> Verdict {
    let pool = enumerate_below(&Term::BigI, 6).map(|v| v.len()).unwrap_or(0);
    let mut v = within(&check::order_axioms(6), secs(120));
    let sized = (1_000..=100_000).contains(&pool);
    v.detail = format!("pool {pool} terms; {}", v.detail);
    v.passed &= sized;
    v
}

fn rank_suite() -> Verdict {
    let start = Instant::now();
    let corpus = check::formula_corpus(CORPUS_SEED, CORPUS_SIZE, CORPUS_DEPTH);
    let mut r = check::rank_suite(&corpus);
    r.elapsed = start.elapsed();
    let mut v = within(&r, secs(60));
    v.passed &= corpus.len() >= 10_000 && CORPUS_DEPTH <= 4;
    v.detail = format!("{} formulas of depth <= {CORPUS_DEPTH}; {}", corpus.len(), v.detail);
    v
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_ordkit"))
        .args(args)
        .output()
        .expect("the ordkit binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn round_trips() -> Verdict {
    let mut v = within(&check::round_trip_suite(6), None);
    let invocations: &[&[&str]] = &[
        &["cmp", "tower(2, I+1)", "tower(1, I*2)"],
        &["abgam", "--n", "1", "--N", "2", "--json"],
        &["enum", "--below", "K", "--size", "4", "--json"],
        &["trace", "thm2", "--m", "1", "--N", "2", "--json"],
        &["rank", "EX X<K. R(b#0, K; 0)"],
        &["check"],
    ];
    let mut differing = Vec::new();
    for args in invocations {
        let first = cli(args);
        let second = cli(args);
        if first != second || first.0 != 0 {
            differing.push(args.join(" "));
        }
    }
    v.passed &= differing.is_empty();
    v.detail = format!(
        "{}; {} CLI invocations byte-identical across two runs{}",
        v.detail,
        invocations.len() - differing.len(),
        if differing.is_empty() { String::new() } else { format!(", differing or failing: {differing:?}") }
    );
    v
}

type Criterion = (&'static str, Box<dyn Fn() -> Verdict>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("order axioms", Box::new(order_axioms)),
        ("exact identities", Box::new(|| within(&check::paper_identities(), secs(5)))),
        ("strict inequalities", Box::new(|| within(&check::paper_inequalities(), secs(5)))),
        ("formula ranks", Box::new(rank_suite)),
        ("hulls", Box::new(|| within(&check::hull_suite(5), secs(60)))),
        ("pipelines", Box::new(|| within(&check::pipeline_suite(), secs(5)))),
        ("round trips and determinism", Box::new(round_trips)),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        all &= v.passed;
        println!("[{}] criterion {} {name}: {}", if v.passed { "PASS" } else { "FAIL" }, i + 1, v.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
