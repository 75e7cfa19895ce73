//! Property suites over enumerated terms and a seeded formula corpus. Each
//! suite returns a [`SuiteReport`]; the CLI `check` command and the test
//! targets share them.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{add, mul_nat, omega_mul, omega_tower};
use crate::bounds::{lower_mahlo, theorem1_trace, theorem2_trace, BoundState};
use crate::error::Result;
use crate::formula::{
    assign_shape, classify, components, k_all, p_shape, rank, relativize,
    relativize_side_conditions, Bound, FTerm, Formula, IndexDescriptor, EMPTY_TAG,
};
use crate::hull::{in_hull_nf, nf_valid_nf, HullQuery};
use crate::mahlo::abgam;
use crate::order::{cmp, cmp_nf, enumerate_below, enumerate_by_size, EnumOptions};
use crate::syntax::{parse_term, print_term};
use crate::term::{Term, ThetaSet};

const MAX_RECORDED: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<String>,
    #[serde(serialize_with = "ser_secs")]
    pub elapsed: Duration,
}

fn ser_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

struct Tally {
    name: &'static str,
    start: Instant,
    checked: u64,
    failure_count: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            start: Instant::now(),
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(msg);
        }
    }

    /// Records an error from an operation as a failure.
    fn ok<T>(&mut self, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {e}", ctx()));
                None
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            checked: self.checked,
            failure_count: self.failure_count,
            failures: self.failures,
            elapsed: self.start.elapsed(),
        }
    }
}

fn i_plus(k: usize) -> Term {
    let mut parts = vec![Term::BigI];
    parts.extend(std::iter::repeat_n(Term::One, k));
    if parts.len() == 1 {
        Term::BigI
    } else {
        Term::sum(parts)
    }
}

/// Trichotomy, irreflexivity and transitivity over all normal-form terms
/// below I of size at most `max_size`.
///
/// The pool is sorted by the order under test and every pair is compared in
/// both directions against its sorted position. A relation that agrees with
/// a strict linear arrangement on every pair is that arrangement, so this
/// covers transitivity over all triples.
pub fn order_axioms(max_size: usize) -> SuiteReport {
    let mut t = Tally::new("order axioms");
    let Some(pool) = t.ok(enumerate_below(&Term::BigI, max_size), || "enumeration".into()) else {
        return t.finish();
    };
    for s in &pool {
        t.check(cmp_nf(s, s).ok() == Some(Ordering::Equal), || format!("cmp({s}, {s}) is not EQ"));
        t.check(cmp_nf(s, &Term::BigI).ok() == Some(Ordering::Less), || format!("{s} is not below I"));
    }
    for i in 0..pool.len() {
        let a = &pool[i];
        for b in &pool[i + 1..] {
            let fwd = cmp_nf(a, b);
            let back = cmp_nf(b, a);
            t.check(
                matches!((&fwd, &back), (Ok(Ordering::Less), Ok(Ordering::Greater))),
                || format!("{a} vs {b}: {fwd:?} / {back:?}"),
            );
        }
    }
    // A descending chain inside the pool is at most as long as the pool.
    let mut chain = 0usize;
    for w in pool.windows(2).rev() {
        if cmp_nf(&w[1], &w[0]).ok() == Some(Ordering::Greater) {
            chain += 1;
        }
    }
    t.check(chain < pool.len().max(1), || format!("descending chain of length {chain}"));
    t.finish()
}

/// The absorption identities γ_{k,n}+a_n = γ_{k−1,n} and K+ω·a_n = a_n, the
/// sequence law ᾱ_{k,n}(i) = γ_{k+i,n}, and the fixed point of lowering at K.
pub fn paper_identities() -> SuiteReport {
    let mut t = Tally::new("paper identities");
    for n in 1..=4u32 {
        for big_n in 1..=3usize {
            let Some(ab) = t.ok(abgam(n, big_n), || format!("abgam({n}, {big_n})")) else {
                continue;
            };
            for k in 1..=big_n {
                let lhs = add(&ab.gamma[k], &ab.a);
                t.check(
                    lhs.as_ref().ok().is_some_and(|l| cmp(l, &ab.gamma[k - 1]).ok() == Some(Ordering::Equal)),
                    || format!("gamma_{k},{n} + a_{n} != gamma_{},{n} (N={big_n})", k - 1),
                );
            }
            let absorbed = omega_mul(&ab.a).and_then(|w| add(&Term::BigK, &w));
            t.check(
                absorbed.as_ref().ok().is_some_and(|x| cmp(x, &ab.a).ok() == Some(Ordering::Equal)),
                || format!("K + w*a_{n} != a_{n}"),
            );
            for k in 0..=big_n {
                let seq = &ab.alpha_vec[k];
                t.check(seq.0.len() == big_n - k, || format!("lh(alpha_{k},{n}) != {}", big_n - k));
                for (i, c) in seq.0.iter().enumerate() {
                    t.check(cmp(c, &ab.gamma[k + i]).ok() == Some(Ordering::Equal), || {
                        format!("alpha_{k},{n}({i}) != gamma_{},{n}", k + i)
                    });
                }
            }
            for k in 1..=big_n {
                t.check(cmp(&ab.gamma[k], &ab.gamma[k - 1]).ok() == Some(Ordering::Less), || {
                    format!("gamma_{k},{n} is not below gamma_{},{n}", k - 1)
                });
            }
            let mut s = BoundState {
                height: ab.a.clone(),
                cut_rank: Term::BigK,
                hull_stage: ab.gamma[big_n].clone(),
                theory: big_n as i32,
                n,
                note: String::new(),
                side_conditions: Vec::new(),
            };
            for k in (0..big_n).rev() {
                let Some(next) = t.ok(lower_mahlo(&s, &Term::BigK, big_n), || format!("lowering n={n} N={big_n}")) else {
                    break;
                };
                t.check(cmp(&next.height, &ab.a).ok() == Some(Ordering::Equal), || {
                    format!("height after lowering to {k} is {} (n={n}, N={big_n})", next.height)
                });
                t.check(cmp(&next.hull_stage, &ab.gamma[k]).ok() == Some(Ordering::Equal), || {
                    format!("hull after lowering to {k} is {} (n={n}, N={big_n})", next.hull_stage)
                });
                s = next;
            }
        }
    }
    t.finish()
}

fn expect(t: &mut Tally, a: &Term, b: &Term, want: &[Ordering], what: &str) {
    let got = cmp(a, b);
    t.check(got.as_ref().is_ok_and(|o| want.contains(o)), || {
        format!("{what}: cmp({a}, {b}) = {got:?}")
    });
}

/// The strict inequalities of the collapsing chains and cross-subscript
/// monotonicity of the K-collapses.
pub fn paper_inequalities() -> SuiteReport {
    let mut t = Tally::new("paper inequalities");
    let i2 = Term::sum(vec![Term::BigI, Term::BigI]);
    for m in 0..=4u32 {
        for p in 0..=4usize {
            let hi = omega_tower(m + 2, &i_plus(1));
            let lo = add(&i2, &Term::nat(p)).and_then(|x| omega_tower(m + 1, &x));
            if let (Some(hi), Some(lo)) = (t.ok(hi, || "tower".into()), t.ok(lo, || "tower".into())) {
                expect(&mut t, &hi, &lo, &[Ordering::Greater], &format!("m={m}, p={p}"));
            }
        }
    }
    let Some(i2w) = t.ok(add(&i2, &Term::omega()), || "I*2+w".into()) else {
        return t.finish();
    };
    for n in 1..=6u32 {
        for m in 0..n.saturating_sub(2) {
            let top = omega_tower(n - 1, &i_plus(1)).map(|x| Term::psi_reg(Term::Omega1, n, x));
            let low = omega_tower(m + 1, &i2w).map(|x| Term::psi_reg(Term::Omega1, n, x));
            if let (Some(top), Some(low)) = (t.ok(top, || "tower".into()), t.ok(low, || "tower".into())) {
                expect(&mut t, &top, &low, &[Ordering::Greater], &format!("w1-collapse n={n}, m={m}"));
            }
        }
    }
    for big_n in 1..=3usize {
        let collapse = |n: u32| {
            abgam(n, big_n).map(|ab| {
                Term::psi_k(n, ab.alpha_vec[0].clone(), ThetaSet::empty(), ab.gamma[0].clone())
            })
        };
        for n0 in 1..=4u32 {
            for n in n0 + 1..=4 {
                let (Some(lo), Some(hi)) = (
                    t.ok(collapse(n0), || format!("collapse n={n0}")),
                    t.ok(collapse(n), || format!("collapse n={n}")),
                ) else {
                    continue;
                };
                expect(
                    &mut t,
                    &lo,
                    &hi,
                    &[Ordering::Less, Ordering::Equal],
                    &format!("K-collapse n0={n0}, n={n}, N={big_n}"),
                );
                expect(&mut t, &hi, &Term::BigK, &[Ordering::Less], "K-collapse below K");
            }
        }
    }
    t.finish()
}

/// Constants of the formula corpus.
pub fn corpus_pool() -> Vec<Term> {
    vec![
        Term::Zero,
        Term::One,
        Term::Omega1,
        Term::BigK,
        Term::k_plus(),
        Term::BigI,
    ]
}

const CORPUS_TAGS: &[&str] = &[EMPTY_TAG, "B"];

struct Gen {
    rng: ChaCha8Rng,
    pool: Vec<Term>,
}

impl Gen {
    fn constant(&mut self) -> Term {
        self.pool.choose(&mut self.rng).unwrap().clone()
    }

    fn fterm(&mut self, vars: &[String]) -> FTerm {
        if !vars.is_empty() && self.rng.gen_bool(0.5) {
            FTerm::Var(vars.choose(&mut self.rng).unwrap().clone())
        } else {
            FTerm::Const(self.constant())
        }
    }

    fn literal(&mut self, vars: &[String], preds: &[u32]) -> Formula {
        let pos = self.rng.gen_bool(0.7);
        match self.rng.gen_range(0..10) {
            0..=4 => Formula::In {
                a: self.fterm(vars),
                b: self.fterm(vars),
                pos,
            },
            5 => Formula::P {
                args: [self.fterm(vars), self.fterm(vars), self.fterm(vars)],
                pos,
            },
            6 => Formula::PI {
                n: self.rng.gen_range(1..=2),
                t: self.fterm(vars),
                pos,
            },
            7 => Formula::Reg {
                t: self.fterm(vars),
                pos,
            },
            8 => Formula::R {
                tag: CORPUS_TAGS.choose(&mut self.rng).unwrap().to_string(),
                kappa: [Term::Omega1, Term::BigK, Term::k_plus()]
                    .choose(&mut self.rng)
                    .unwrap()
                    .clone(),
                t: self.fterm(vars),
                pos,
            },
            _ => match preds.choose(&mut self.rng) {
                Some(&i) => Formula::X {
                    i,
                    t: self.fterm(vars),
                    pos,
                },
                None => Formula::In {
                    a: self.fterm(vars),
                    b: self.fterm(vars),
                    pos,
                },
            },
        }
    }

    fn bound(&mut self) -> Bound {
        if self.rng.gen_bool(0.15) {
            Bound::LI
        } else {
            Bound::Term(self.constant())
        }
    }

    /// A formula of height at most `depth`; literals have height 1.
    fn formula(&mut self, depth: usize, vars: &mut Vec<String>, preds: &mut Vec<u32>) -> Formula {
        if depth <= 1 || self.rng.gen_bool(0.25) {
            return self.literal(vars, preds);
        }
        match self.rng.gen_range(0..9) {
            0 | 1 => Formula::or(self.formula(depth - 1, vars, preds), self.formula(depth - 1, vars, preds)),
            2 | 3 => Formula::and(self.formula(depth - 1, vars, preds), self.formula(depth - 1, vars, preds)),
            4..=6 => {
                let var = format!("x{}", vars.len());
                let bound = self.bound();
                vars.push(var.clone());
                let body = self.formula(depth - 1, vars, preds);
                vars.pop();
                if self.rng.gen_bool(0.5) {
                    Formula::ex(&var, bound, body)
                } else {
                    Formula::all(&var, bound, body)
                }
            }
            _ => {
                let i = preds.len() as u32;
                preds.push(i);
                let body = self.formula(depth - 1, vars, preds);
                preds.pop();
                if self.rng.gen_bool(0.5) {
                    Formula::ex2(i, Term::BigK, body)
                } else {
                    Formula::all2(i, Term::BigK, body)
                }
            }
        }
    }

    fn special(&mut self) -> Formula {
        let b = self.constant();
        let f = if self.rng.gen_bool(0.5) {
            Formula::ex(
                "x",
                Bound::Term(Term::BigI),
                Formula::and(
                    Formula::In {
                        a: FTerm::Const(b),
                        b: FTerm::Var("x".into()),
                        pos: true,
                    },
                    Formula::PI {
                        n: self.rng.gen_range(1..=2),
                        t: FTerm::Var("x".into()),
                        pos: true,
                    },
                ),
            )
        } else {
            let lambda = [Term::Omega1, Term::k_plus()].choose(&mut self.rng).unwrap().clone();
            Formula::ex(
                "x",
                Bound::Term(lambda.clone()),
                Formula::ex(
                    "y",
                    Bound::Term(lambda.clone()),
                    Formula::and(
                        Formula::In {
                            a: FTerm::Const(b),
                            b: FTerm::Var("x".into()),
                            pos: true,
                        },
                        Formula::P {
                            args: [
                                FTerm::Const(lambda),
                                FTerm::Var("x".into()),
                                FTerm::Var("y".into()),
                            ],
                            pos: true,
                        },
                    ),
                ),
            )
        };
        if self.rng.gen_bool(0.5) {
            f.negate()
        } else {
            f
        }
    }
}

/// `count` sentences of height at most `depth` over [`corpus_pool`],
/// reproducible from `seed`. About one in twenty is one of the two
/// special rank shapes.
pub fn formula_corpus(seed: u64, count: usize, depth: usize) -> Vec<Formula> {
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        pool: corpus_pool(),
    };
    (0..count)
        .map(|_| {
            if g.rng.gen_ratio(1, 20) {
                g.special()
            } else {
                g.formula(depth, &mut Vec::new(), &mut Vec::new())
            }
        })
        .collect()
}

fn height(a: &Formula) -> usize {
    match a {
        Formula::Or { l, r } | Formula::And { l, r } => 1 + height(l).max(height(r)),
        Formula::ExB { body, .. }
        | Formula::AllB { body, .. }
        | Formula::Ex2 { body, .. }
        | Formula::All2 { body, .. } => 1 + height(body),
        _ => 1,
    }
}

pub const CORPUS_SEED: u64 = 0x5eed_0f0d;
pub const CORPUS_SIZE: usize = 12_000;
pub const CORPUS_DEPTH: usize = 4;

/// Rank bounds, coefficient bounds, rank descent, class promotion,
/// component stability and the relativization class law over the corpus.
pub fn rank_suite(corpus: &[Formula]) -> SuiteReport {
    let mut t = Tally::new("formula ranks");
    let pool = corpus_pool();
    let lambdas = [Term::Omega1, Term::BigK, Term::k_plus(), Term::BigI];
    let kappa0 = abgam(1, 1).map(|ab| {
        Term::psi_k(1, ab.alpha_vec[0].clone(), ThetaSet::empty(), ab.gamma[0].clone())
    });
    let Some(kappa0) = t.ok(kappa0, || "K-collapse".into()) else {
        return t.finish();
    };
    let rel_pairs = [
        (kappa0, Term::BigK),
        (Term::BigK, Term::k_plus()),
        (Term::BigK, Term::BigI),
        (Term::k_plus(), Term::BigI),
    ];
    for a in corpus {
        let Some(rk) = t.ok(rank(a), || format!("rank of {a}")) else {
            continue;
        };
        let cap = i_plus(height(a));
        t.check(cmp(&rk, &cap).ok() == Some(Ordering::Less), || {
            format!("rank {rk} of {a} is not below {cap}")
        });
        for c in &k_all(a) {
            t.check(cmp(c, &rk).is_ok_and(|o| o.is_le()), || format!("coefficient {c} above rank {rk} in {a}"));
        }

        let shape = assign_shape(a, 1).ok();
        let descends = matches!(
            shape.as_ref().map(|s| &s.index),
            Some(IndexDescriptor::Finite(2) | IndexDescriptor::ElementsBelow(_))
        );
        let comps = t.ok(components(a, 1, &pool, CORPUS_TAGS), || format!("components of {a}"));
        if let Some(comps) = &comps {
            if descends && p_shape(a).is_none() {
                for c in comps {
                    let r = rank(c);
                    t.check(r.as_ref().is_ok_and(|r| cmp(r, &rk).ok() == Some(Ordering::Less)), || {
                        format!("component {c} of {a}: rank {r:?} not below {rk}")
                    });
                }
            }
        }

        for lambda in &lambdas {
            for n in 1..=2u32 {
                let Some(cl) = t.ok(classify(a, lambda, n), || format!("classify {a} at {lambda}")) else {
                    continue;
                };
                if cmp(&rk, lambda).ok() == Some(Ordering::Less) {
                    t.check(cl.is_delta0_lambda, || format!("{a} has rank {rk} < {lambda} but is not D0({lambda})"));
                    t.check(cl.is_sigma_sigma, || format!("{a} has rank {rk} < {lambda} but is not SS_{}({lambda})", n + 1));
                }
                if cl.is_sigma_sigma {
                    for c in comps.iter().flatten() {
                        let ok = classify(c, lambda, n).is_ok_and(|x| x.is_sigma_sigma);
                        t.check(ok, || format!("component {c} of {a} leaves SS_{}({lambda})", n + 1));
                    }
                }
            }
        }

        for (kappa, lambda) in &rel_pairs {
            let Ok(level) = classify(a, lambda, 1).map(|c| c.pi1_level) else {
                continue;
            };
            let Some(level) = level else { continue };
            if !relativize_side_conditions(a, kappa, lambda).unwrap_or(false) {
                continue;
            }
            let Ok(rel) = relativize(a, kappa, lambda) else {
                continue;
            };
            let got = classify(&rel, kappa, 1).map(|c| c.pi1_level);
            t.check(got.as_ref().ok() == Some(&Some(level)), || {
                format!("relativizing {a} from {lambda} to {kappa}: level {level} became {got:?}")
            });
        }
    }
    t.finish()
}

fn collapse_family(t: &Term) -> Option<(u8, Option<&Term>, u32)> {
    match t {
        Term::PsiReg { kappa, n, .. } => Some((0, Some(kappa), *n)),
        Term::PsiI { n, .. } => Some((1, None, *n)),
        Term::PsiK { n, .. } => Some((2, None, *n)),
        _ => None,
    }
}

fn collapse_arg(t: &Term) -> &Term {
    match t {
        Term::PsiReg { arg, .. } | Term::PsiI { arg, .. } | Term::PsiK { arg, .. } => arg,
        _ => t,
    }
}

/// Hull monotonicity in α and Θ, collapse bounds and Ψ-argument
/// monotonicity over every term of size at most `max_size`.
pub fn hull_suite(max_size: usize) -> SuiteReport {
    let mut t = Tally::new("hulls");
    let opts = EnumOptions::default();
    let Some(levels) = t.ok(enumerate_by_size(max_size, &opts), || "enumeration".into()) else {
        return t.finish();
    };
    let pool: Vec<Term> = levels.into_iter().flatten().collect();
    let mut alphas: Vec<Term> = pool.iter().filter(|x| x.size() <= 3).cloned().collect();
    alphas.sort_by(|a, b| cmp_nf(a, b).unwrap_or(Ordering::Equal));
    let thresholds = [Term::Zero, Term::omega(), Term::Omega1];
    let base_theta = [Term::One, Term::omega(), Term::Omega1, Term::BigK];
    let thetas: Vec<ThetaSet> = (0u32..16)
        .map(|mask| {
            ThetaSet::new(
                base_theta
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, x)| x.clone()),
            )
            .expect("theta elements are at most K")
        })
        .collect();

    for x in &pool {
        for beta in &thresholds {
            let mut seen_member: Option<&Term> = None;
            for alpha in &alphas {
                let q = HullQuery::new(alpha.clone(), 1, beta.clone());
                let Some(m) = t.ok(in_hull_nf(x, &q), || format!("in_hull {x}")) else {
                    break;
                };
                if let Some(prev) = seen_member {
                    t.check(m, || format!("{x} in hull at alpha={prev} but not at {alpha} (beta={beta})"));
                } else if m {
                    seen_member = Some(alpha);
                }
            }
        }
        for alpha in [Term::One, Term::omega(), Term::BigK] {
            let member: Vec<bool> = thetas
                .iter()
                .map(|th| {
                    let q = HullQuery::new(alpha.clone(), 1, Term::Zero).with_theta(th.clone());
                    in_hull_nf(x, &q).unwrap_or(false)
                })
                .collect();
            for (i, small) in thetas.iter().enumerate() {
                for (j, big) in thetas.iter().enumerate() {
                    if i != j && small.is_subset(big) && member[i] {
                        t.check(member[j], || format!("{x} leaves the hull when Theta grows to {big:?}"));
                    }
                }
            }
        }
        if let Some((fam, kappa, _)) = collapse_family(x) {
            let big_n = match x {
                Term::PsiK { seq, .. } => seq.0.len(),
                _ => opts.big_n,
            };
            if nf_valid_nf(x, big_n).unwrap_or(false) {
                let ceiling = match (fam, kappa) {
                    (0, Some(k)) => k.clone(),
                    (1, _) => Term::BigI,
                    _ => Term::BigK,
                };
                t.check(cmp_nf(x, &ceiling).ok() == Some(Ordering::Less), || format!("{x} is not below {ceiling}"));
                if fam == 2 {
                    t.check(cmp_nf(&Term::Omega1, x).ok() == Some(Ordering::Less), || format!("{x} is not above w1"));
                }
            }
        }
    }

    let collapses: Vec<&Term> = pool.iter().filter(|x| collapse_family(x).is_some()).collect();
    for (i, a) in collapses.iter().enumerate() {
        for b in &collapses[i + 1..] {
            let (fa, fb) = (collapse_family(a), collapse_family(b));
            let same = match (a, b) {
                (Term::PsiK { seq: s1, theta: t1, .. }, Term::PsiK { seq: s2, theta: t2, .. }) => {
                    s1 == s2 && t1 == t2
                }
                _ => fa == fb,
            };
            if !same || fa.map(|f| f.2) != fb.map(|f| f.2) {
                continue;
            }
            let (ga, gb) = (collapse_arg(a), collapse_arg(b));
            let (lo, hi) = match cmp_nf(ga, gb) {
                Ok(Ordering::Less) => (a, b),
                Ok(Ordering::Greater) => (b, a),
                _ => continue,
            };
            let r = cmp_nf(lo, hi);
            t.check(r.as_ref().is_ok_and(|o| o.is_le()), || format!("collapse of smaller argument {lo} exceeds {hi}"));
        }
    }
    t.finish()
}

/// The collapsing chains: Σ-chain end state, ω₁-chain end state and every
/// logged side condition.
pub fn pipeline_suite() -> SuiteReport {
    let mut t = Tally::new("pipelines");
    for m in 0..=2usize {
        for p in 0..=2usize {
            for big_n in 1..=3usize {
                let tag = format!("m={m}, p={p}, N={big_n}");
                if let Some(trace) = t.ok(theorem1_trace(m, p, big_n), || format!("first chain {tag}")) {
                    t.check(trace.len() == 4 + big_n, || format!("first chain {tag}: {} states", trace.len()));
                    let last = trace.last().unwrap();
                    let ab = abgam(last.n, big_n).expect("abgam of a traced subscript");
                    t.check(last.theory == 0, || format!("first chain {tag}: theory {}", last.theory));
                    t.check(last.cut_rank == Term::BigK, || format!("first chain {tag}: cut {}", last.cut_rank));
                    t.check(cmp(&last.hull_stage, &ab.gamma[0]).ok() == Some(Ordering::Equal), || {
                        format!("first chain {tag}: hull {}", last.hull_stage)
                    });
                    t.check(cmp(&last.height, &ab.a).ok() == Some(Ordering::Equal), || {
                        format!("first chain {tag}: height {}", last.height)
                    });
                    for s in &trace {
                        for c in &s.side_conditions {
                            t.check(c.holds, || format!("first chain {tag}: {} ({})", c.label, s.note));
                        }
                    }
                }
                if let Some(trace) = t.ok(theorem2_trace(m, p, big_n), || format!("second chain {tag}")) {
                    let last = trace.last().unwrap();
                    let ok = matches!(&last.height, Term::PsiReg { kappa, n, .. } if **kappa == Term::Omega1 && *n == last.n);
                    t.check(ok, || format!("second chain {tag}: height {}", last.height));
                    for s in &trace {
                        for c in &s.side_conditions {
                            t.check(c.holds, || format!("second chain {tag}: {} ({})", c.label, s.note));
                        }
                    }
                }
            }
        }
    }
    t.finish()
}

/// parse ∘ print and JSON re-import are the identity on every enumerated
/// term of size at most `max_size`.
pub fn round_trip_suite(max_size: usize) -> SuiteReport {
    let mut t = Tally::new("round trips");
    let Some(levels) = t.ok(enumerate_by_size(max_size, &EnumOptions::default()), || "enumeration".into()) else {
        return t.finish();
    };
    for x in levels.iter().flatten() {
        let text = print_term(x);
        let back = parse_term(&text);
        t.check(back.as_ref() == Ok(x), || format!("{text} parsed as {back:?}"));
        let json = serde_json::to_string(x).expect("terms serialize");
        let again: std::result::Result<Term, _> = serde_json::from_str(&json);
        t.check(again.as_ref().ok() == Some(x), || format!("JSON {json} re-imported as {again:?}"));
    }
    t.finish()
}

/// Arithmetic laws over small enumerated terms.
pub fn arith_suite(max_size: usize) -> SuiteReport {
    let mut t = Tally::new("arithmetic");
    let Some(pool) = t.ok(enumerate_below(&Term::BigI, max_size), || "enumeration".into()) else {
        return t.finish();
    };
    for a in &pool {
        for b in &pool {
            let Some(ab) = t.ok(add(a, b), || format!("{a} + {b}")) else { continue };
            for c in &pool {
                let l = add(&ab, c);
                let r = add(b, c).and_then(|bc| add(a, &bc));
                t.check(l.is_ok() && l.as_ref().ok() == r.as_ref().ok(), || format!("({a}+{b})+{c} != {a}+({b}+{c})"));
                if cmp_nf(b, c).ok() == Some(Ordering::Less) {
                    let rc = add(a, c);
                    t.check(
                        rc.as_ref().is_ok_and(|rc| cmp(&ab, rc).ok() == Some(Ordering::Less)),
                        || format!("{a}+{b} is not below {a}+{c}"),
                    );
                }
            }
        }
        if !a.is_zero() {
            for m in 0..3u32 {
                let lo = omega_tower(m, a);
                let hi = omega_tower(m + 1, a);
                if let (Ok(lo), Ok(hi)) = (lo, hi) {
                    // Equality happens exactly at fixed points of ω^·.
                    let fixed = crate::arith::wexp(&lo).is_ok_and(|w| w == lo);
                    let want = if fixed { Ordering::Equal } else { Ordering::Less };
                    t.check(cmp(&lo, &hi).ok() == Some(want), || {
                        format!("tower {m} of {a} vs tower {}: expected {want:?}", m + 1)
                    });
                }
            }
        }
        let doubled = mul_nat(a, 2);
        t.check(doubled.as_ref().is_ok_and(|d| a.is_zero() || cmp(a, d).ok() == Some(Ordering::Less)), || {
            format!("{a}*2 is not above {a}")
        });
    }
    t.finish()
}

/// Every suite at acceptance scale.
pub fn run_all() -> Vec<SuiteReport> {
    let corpus = formula_corpus(CORPUS_SEED, CORPUS_SIZE, CORPUS_DEPTH);
    vec![
        order_axioms(6),
        paper_identities(),
        paper_inequalities(),
        rank_suite(&corpus),
        hull_suite(5),
        pipeline_suite(),
        round_trip_suite(6),
        arith_suite(3),
    ]
}
