//! The structured enumerator against a brute-force one: build every
//! syntactic tree up to a size, keep the valid normal forms below the bound.

use std::collections::HashSet;

use ordkit::order::{enumerate_below, is_normal_form, lt};
use ordkit::term::validate;
use ordkit::{OrdSeq, Term, ThetaSet};

const BIG_N: usize = 2;

/// All lists of trees whose sizes add up to exactly `total`, with at least
/// `min_len` entries.
fn lists(by_size: &[Vec<Term>], total: usize, min_len: usize) -> Vec<Vec<Term>> {
    if total == 0 {
        return if min_len == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for head in &by_size[first] {
            for mut tail in lists(by_size, total - first, min_len.saturating_sub(1)) {
                tail.insert(0, head.clone());
                out.push(tail);
            }
        }
    }
    out
}

fn raw_trees(max_size: usize) -> Vec<Vec<Term>> {
    let mut by_size: Vec<Vec<Term>> = vec![Vec::new()];
    by_size.push(vec![Term::Zero, Term::One, Term::Omega1, Term::BigK, Term::BigI]);
    for s in 2..=max_size {
        let mut level = Vec::new();
        for t in &by_size[s - 1] {
            level.push(Term::wexp(t.clone()));
            level.push(Term::reg_succ(t.clone()));
            level.push(Term::psi_i(1, t.clone()));
        }
        for left in 1..s - 1 {
            for a in &by_size[left] {
                for b in &by_size[s - 1 - left] {
                    level.push(Term::veblen(a.clone(), b.clone()));
                    level.push(Term::psi_reg(a.clone(), 1, b.clone()));
                }
            }
        }
        for parts in lists(&by_size, s - 1, 2) {
            level.push(Term::sum(parts));
        }
        for arg_size in 1..s {
            for seq_size in BIG_N..s - arg_size {
                let theta_size = s - 1 - arg_size - seq_size;
                for seq in lists(&by_size, seq_size, BIG_N).into_iter().filter(|v| v.len() == BIG_N) {
                    for theta in lists(&by_size, theta_size, 0) {
                        for arg in &by_size[arg_size] {
                            level.push(Term::psi_k(
                                1,
                                OrdSeq(seq.clone()),
                                ThetaSet::from_vec_unchecked(theta.clone()),
                                arg.clone(),
                            ));
                        }
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size
}

fn brute_force_below(bound: &Term, max_size: usize) -> HashSet<Term> {
    raw_trees(max_size)
        .into_iter()
        .flatten()
        .filter(|t| validate(t, BIG_N).is_ok() && is_normal_form(t, BIG_N))
        .filter(|t| lt(t, bound).unwrap())
        .collect()
}

#[test]
fn matches_brute_force_below_i() {
    for size in 1..=5 {
        let fast = enumerate_below(&Term::BigI, size).unwrap();
        let fast_set: HashSet<Term> = fast.iter().cloned().collect();
        assert_eq!(fast.len(), fast_set.len(), "duplicates at size {size}");
        let slow = brute_force_below(&Term::BigI, size);
        let missing: Vec<_> = slow.difference(&fast_set).take(5).collect();
        let extra: Vec<_> = fast_set.difference(&slow).take(5).collect();
        assert!(missing.is_empty() && extra.is_empty(), "size {size}: missing {missing:?}, extra {extra:?}");
    }
}

#[test]
fn frozen_count_below_i() {
    assert_eq!(enumerate_below(&Term::BigI, 5).unwrap().len(), 1166);
}

#[test]
fn output_is_strictly_increasing() {
    let v = enumerate_below(&Term::BigI, 5).unwrap();
    for w in v.windows(2) {
        assert!(lt(&w[0], &w[1]).unwrap(), "{} !< {}", w[0], w[1]);
    }
}
