//! The ordinal order on terms, the normal-form predicate and bounded
//! exhaustive enumeration.
//!
//! Every atom (ω₁, K, I, successor chains and all collapses) is treated as
//! strongly critical, so principal terms compare by the usual Veblen rules
//! over a linearly ordered set of atoms.

use std::cell::RefCell;
use std::cmp::Ordering;

use crate::arith::{normalize, veblen_nf, wexp_nf};
use crate::error::{Error, Result};
use crate::limits::limits;
use crate::term::{check_node, regular_designated, OrdSeq, Term, ThetaSet, ZERO};

/// Compares two terms, normalizing both first.
pub fn cmp(s: &Term, t: &Term) -> Result<Ordering> {
    cmp_nf(&normalize(s)?, &normalize(t)?)
}

pub fn lt(s: &Term, t: &Term) -> Result<bool> {
    Ok(cmp(s, t)?.is_lt())
}

pub fn le(s: &Term, t: &Term) -> Result<bool> {
    Ok(cmp(s, t)?.is_le())
}

/// Compares two terms already in normal form.
pub fn cmp_nf(s: &Term, t: &Term) -> Result<Ordering> {
    let (ps, pt) = (s.parts(), t.parts());
    for (p, q) in ps.iter().zip(pt) {
        let o = cmp_principal(p, q)?;
        if o.is_ne() {
            return Ok(o);
        }
    }
    Ok(ps.len().cmp(&pt.len()))
}

enum View<'a> {
    Atom(&'a Term),
    Phi(&'a Term, &'a Term),
}

fn view(p: &Term) -> View<'_> {
    match p {
        Term::One => View::Phi(&ZERO, &ZERO),
        Term::WExp { exponent } => View::Phi(&ZERO, exponent),
        Term::Veblen { index, arg } => View::Phi(index, arg),
        _ => View::Atom(p),
    }
}

fn cmp_principal(p: &Term, q: &Term) -> Result<Ordering> {
    if p == q {
        return Ok(Ordering::Equal);
    }
    match (view(p), view(q)) {
        (View::Atom(_), View::Atom(_)) => cmp_atom(p, q),
        (View::Atom(s), View::Phi(a, b)) => Ok(phi_vs_atom(a, b, s)?.reverse()),
        (View::Phi(a, b), View::Atom(s)) => phi_vs_atom(a, b, s),
        (View::Phi(a1, b1), View::Phi(a2, b2)) => match cmp_nf(a1, a2)? {
            Ordering::Equal => cmp_nf(b1, b2),
            Ordering::Less => Ok(if cmp_nf(b1, q)?.is_lt() {
                Ordering::Less
            } else {
                Ordering::Greater
            }),
            Ordering::Greater => Ok(if cmp_nf(p, b2)?.is_lt() {
                Ordering::Less
            } else {
                Ordering::Greater
            }),
        },
    }
}

fn phi_vs_atom(a: &Term, b: &Term, s: &Term) -> Result<Ordering> {
    if cmp_nf(a, s)?.is_lt() && cmp_nf(b, s)?.is_lt() {
        Ok(Ordering::Less)
    } else {
        Ok(Ordering::Greater)
    }
}

/// The cardinal an atom sits at or directly below.
enum Card<'a> {
    /// ω₁ and (invalid) successor chains over it.
    W1(usize),
    /// K with d successors.
    K(usize),
    /// A `PsiI` collapse with d successors.
    IChain(&'a Term, usize),
    I,
}

impl Card<'_> {
    fn tier(&self) -> u8 {
        match self {
            Card::W1(_) => 0,
            Card::K(_) => 1,
            Card::IChain(..) => 2,
            Card::I => 3,
        }
    }
}

fn cmp_card(x: &Card<'_>, y: &Card<'_>) -> Result<Ordering> {
    Ok(match (x, y) {
        (Card::W1(d), Card::W1(e)) | (Card::K(d), Card::K(e)) => d.cmp(e),
        (Card::IChain(p, d), Card::IChain(q, e)) => {
            if p == q {
                d.cmp(e)
            } else {
                cmp_collapse(p, q)?
            }
        }
        _ => x.tier().cmp(&y.tier()),
    })
}

fn chain_card(t: &Term) -> Card<'_> {
    let mut d = 0;
    let mut cur = t;
    while let Term::RegSucc { base } = cur {
        d += 1;
        cur = base;
    }
    match cur {
        Term::BigK => Card::K(d),
        Term::PsiI { .. } => Card::IChain(cur, d),
        Term::BigI => Card::I,
        _ => Card::W1(d),
    }
}

/// (card, exact): collapses are below their card, cardinals sit exactly on it.
fn atom_key(t: &Term) -> (Card<'_>, bool) {
    match t {
        Term::PsiReg { kappa, .. } => (chain_card(kappa), false),
        Term::PsiK { .. } => (Card::K(0), false),
        _ => (chain_card(t), true),
    }
}

fn cmp_atom(p: &Term, q: &Term) -> Result<Ordering> {
    let (cp, ep) = atom_key(p);
    let (cq, eq) = atom_key(q);
    let o = cmp_card(&cp, &cq)?.then(ep.cmp(&eq));
    if o.is_ne() || ep {
        return Ok(o);
    }
    cmp_collapse(p, q)
}

fn lex(a: &[Term], b: &[Term]) -> Result<Ordering> {
    for (x, y) in a.iter().zip(b) {
        let o = cmp_nf(x, y)?;
        if o.is_ne() {
            return Ok(o);
        }
    }
    Ok(a.len().cmp(&b.len()))
}

fn all_le(a: &[&Term], b: &[&Term]) -> Result<bool> {
    for (x, y) in a.iter().zip(b) {
        if cmp_nf(x, y)?.is_gt() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Comparison of two collapses over the same cardinal.
fn cmp_collapse(p: &Term, q: &Term) -> Result<Ordering> {
    type Parts<'a> = (u32, Vec<&'a Term>, Option<&'a ThetaSet>);
    fn parts(t: &Term) -> Parts<'_> {
        match t {
            Term::PsiReg { n, arg, .. } | Term::PsiI { n, arg } => (*n, vec![&**arg], None),
            Term::PsiK {
                n,
                seq: OrdSeq(seq),
                theta,
                arg,
            } => {
                let mut comps = vec![&**arg];
                comps.extend(seq.iter());
                (*n, comps, Some(theta))
            }
            _ => (0, vec![t], None),
        }
    }
    let (n1, c1, th1) = parts(p);
    let (n2, c2, th2) = parts(q);
    if n1 == n2 {
        for (x, y) in c1.iter().zip(&c2) {
            let o = cmp_nf(x, y)?;
            if o.is_ne() {
                return Ok(o);
            }
        }
        let o = c1.len().cmp(&c2.len());
        if o.is_ne() {
            return Ok(o);
        }
        return match (th1, th2) {
            (Some(a), Some(b)) => lex(a.elements(), b.elements()),
            _ => Ok(Ordering::Equal),
        };
    }
    if c1.len() == c2.len() && th1 == th2 {
        if n1 < n2 && all_le(&c1, &c2)? {
            return Ok(Ordering::Less);
        }
        if n2 < n1 && all_le(&c2, &c1)? {
            return Ok(Ordering::Greater);
        }
    }
    Err(Error::incomparable(p, q))
}

/// Sorts normal-form terms ascending, failing on the first incomparable pair.
pub fn sort_nf(v: &mut [Term]) -> Result<()> {
    let err = RefCell::new(None);
    v.sort_by(|a, b| match cmp_nf(a, b) {
        Ok(o) => o,
        Err(e) => {
            err.borrow_mut().get_or_insert(e);
            Ordering::Equal
        }
    });
    match err.into_inner() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Valid and canonical: normalization is the identity.
pub fn is_normal_form(t: &Term, big_n: usize) -> bool {
    crate::term::validate(t, big_n).is_ok() && normalize(t).is_ok_and(|nf| nf == *t)
}

#[derive(Debug, Clone)]
pub struct EnumOptions {
    /// Collapse subscripts to generate.
    pub subscripts: Vec<u32>,
    /// Sequence length for `PsiK` terms.
    pub big_n: usize,
    /// Maximum number of candidate terms kept across all sizes.
    pub cap: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            subscripts: vec![1],
            big_n: 2,
            cap: limits().enum_cap,
        }
    }
}

/// All normal-form terms of size ≤ `max_size` below `bound`, ascending.
pub fn enumerate_below(bound: &Term, max_size: usize) -> Result<Vec<Term>> {
    enumerate_below_with(bound, max_size, &EnumOptions::default())
}

pub fn enumerate_below_with(bound: &Term, max_size: usize, opts: &EnumOptions) -> Result<Vec<Term>> {
    let bound = normalize(bound)?;
    let pool = Enumerator::new(opts.clone()).run(max_size)?;
    let mut out = Vec::new();
    for t in pool {
        if cmp_nf(&t, &bound)?.is_lt() {
            out.push(t);
        }
    }
    sort_nf(&mut out)?;
    Ok(out)
}

/// All normal-form terms of size ≤ `max_size`, bucketed by size.
pub fn enumerate_by_size(max_size: usize, opts: &EnumOptions) -> Result<Vec<Vec<Term>>> {
    let mut e = Enumerator::new(opts.clone());
    e.fill(max_size)?;
    Ok(e.by_size)
}

struct Enumerator {
    opts: EnumOptions,
    by_size: Vec<Vec<Term>>,
    total: usize,
    ceiling: Term,
}

impl Enumerator {
    fn new(opts: EnumOptions) -> Self {
        Enumerator {
            opts,
            by_size: vec![Vec::new()],
            total: 0,
            ceiling: crate::arith::ceiling(),
        }
    }

    fn run(mut self, max_size: usize) -> Result<Vec<Term>> {
        self.fill(max_size)?;
        Ok(self.by_size.into_iter().flatten().collect())
    }

    fn fill(&mut self, max_size: usize) -> Result<()> {
        for s in 1..=max_size {
            let level = self.level(s)?;
            self.by_size.push(level);
        }
        Ok(())
    }

    fn terms(&self, size: usize) -> &[Term] {
        self.by_size.get(size).map_or(&[], Vec::as_slice)
    }

    fn push(&mut self, out: &mut Vec<Term>, t: Term) -> Result<()> {
        if check_node(&t, self.opts.big_n, true).is_err() {
            return Ok(());
        }
        if !cmp_nf(&t, &self.ceiling)?.is_lt() {
            return Ok(());
        }
        self.total += 1;
        if self.total > self.opts.cap {
            return Err(Error::SizeLimitExceeded {
                cap: self.opts.cap,
            });
        }
        out.push(t);
        Ok(())
    }

    fn level(&mut self, s: usize) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        if s == 1 {
            for t in [Term::Zero, Term::One, Term::Omega1, Term::BigK, Term::BigI] {
                self.push(&mut out, t)?;
            }
            return Ok(out);
        }
        let mut cands = Vec::new();
        for e in self.terms(s - 1) {
            let w = wexp_nf(e);
            if matches!(w, Term::WExp { .. }) {
                cands.push(w);
            }
            if successor_candidate(e) {
                cands.push(Term::reg_succ(e.clone()));
            }
            for &n in &self.opts.subscripts {
                cands.push(Term::psi_i(n, e.clone()));
            }
        }
        for sa in 1..s - 1 {
            for a in self.terms(sa) {
                for b in self.terms(s - 1 - sa) {
                    if !a.is_zero() {
                        let v = Term::veblen(a.clone(), b.clone());
                        if veblen_nf(a, b)? == v {
                            cands.push(v);
                        }
                    }
                    if regular_designated(a) {
                        for &n in &self.opts.subscripts {
                            cands.push(Term::psi_reg(a.clone(), n, b.clone()));
                        }
                    }
                }
            }
        }
        self.sums(s - 1, &mut Vec::new(), &mut cands)?;
        self.psi_ks(s - 1, &mut cands)?;
        for t in cands {
            self.push(&mut out, t)?;
        }
        Ok(out)
    }

    /// Non-increasing lists of ≥ 2 principal terms with total size `budget`.
    fn sums(&self, budget: usize, acc: &mut Vec<Term>, out: &mut Vec<Term>) -> Result<()> {
        if budget == 0 {
            if acc.len() >= 2 {
                out.push(Term::sum(acc.clone()));
            }
            return Ok(());
        }
        for size in 1..=budget {
            for p in self.terms(size) {
                if !p.is_principal() {
                    continue;
                }
                if let Some(prev) = acc.last() {
                    if cmp_nf(prev, p)?.is_lt() {
                        continue;
                    }
                }
                if acc.is_empty() && size == budget {
                    continue;
                }
                acc.push(p.clone());
                self.sums(budget - size, acc, out)?;
                acc.pop();
            }
        }
        Ok(())
    }

    fn psi_ks(&self, budget: usize, out: &mut Vec<Term>) -> Result<()> {
        let big_n = self.opts.big_n;
        if budget < big_n + 1 {
            return Ok(());
        }
        for sa in 1..=budget - big_n {
            for arg in self.terms(sa) {
                let mut seqs = Vec::new();
                self.tuples(budget - sa, big_n, arg, &mut Vec::new(), &mut seqs)?;
                for (seq, rest) in seqs {
                    let mut thetas = Vec::new();
                    self.theta_lists(rest, &mut Vec::new(), &mut thetas)?;
                    for theta in thetas {
                        for &n in &self.opts.subscripts {
                            out.push(Term::psi_k(
                                n,
                                OrdSeq(seq.clone()),
                                ThetaSet::from_vec_unchecked(theta.clone()),
                                arg.clone(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Tuples of `len` terms each ≤ `cap`, of total size ≤ `budget`, paired
    /// with the unused budget.
    fn tuples(
        &self,
        budget: usize,
        len: usize,
        cap: &Term,
        acc: &mut Vec<Term>,
        out: &mut Vec<(Vec<Term>, usize)>,
    ) -> Result<()> {
        if len == 0 {
            out.push((acc.clone(), budget));
            return Ok(());
        }
        for size in 1..=budget.saturating_sub(len - 1) {
            for c in self.terms(size) {
                if cmp_nf(c, cap)?.is_gt() {
                    continue;
                }
                acc.push(c.clone());
                self.tuples(budget - size, len - 1, cap, acc, out)?;
                acc.pop();
            }
        }
        Ok(())
    }

    /// Strictly increasing lists of terms ≤ K with total size exactly `budget`.
    fn theta_lists(&self, budget: usize, acc: &mut Vec<Term>, out: &mut Vec<Vec<Term>>) -> Result<()> {
        if budget == 0 {
            out.push(acc.clone());
            return Ok(());
        }
        for size in 1..=budget {
            for e in self.terms(size) {
                if cmp_nf(e, &Term::BigK)?.is_gt() {
                    continue;
                }
                if let Some(prev) = acc.last() {
                    if !cmp_nf(prev, e)?.is_lt() {
                        continue;
                    }
                }
                acc.push(e.clone());
                self.theta_lists(budget - size, acc, out)?;
                acc.pop();
            }
        }
        Ok(())
    }
}

fn successor_candidate(t: &Term) -> bool {
    crate::term::successor_base_ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{omega_tower, tower_over_i_plus_one};

    #[test]
    fn zero_is_least() {
        assert_eq!(cmp(&Term::Zero, &Term::Omega1).unwrap(), Ordering::Less);
    }

    #[test]
    fn tower_inequality() {
        let i2 = Term::sum(vec![Term::BigI, Term::BigI]);
        let lhs = tower_over_i_plus_one(2);
        let rhs = omega_tower(1, &i2).unwrap();
        assert_eq!(cmp(&lhs, &rhs).unwrap(), Ordering::Greater);
    }

    #[test]
    fn epsilon_zero_above_omega_tower() {
        let eps0 = Term::veblen(Term::One, Term::Zero);
        let www = Term::wexp(Term::wexp(Term::omega()));
        assert_eq!(cmp(&eps0, &www).unwrap(), Ordering::Greater);
    }

    #[test]
    fn constant_layout() {
        let chain = [
            Term::Zero,
            Term::nat(2),
            Term::psi_reg(Term::Omega1, 1, Term::Zero),
            Term::Omega1,
            Term::BigK,
            Term::psi_reg(Term::k_plus(), 1, Term::Zero),
            Term::k_plus(),
            Term::psi_i(1, Term::Zero),
            Term::BigI,
            tower_over_i_plus_one(1),
        ];
        for w in chain.windows(2) {
            assert_eq!(cmp(&w[0], &w[1]).unwrap(), Ordering::Less, "{} < {}", w[0], w[1]);
        }
    }

    #[test]
    fn cross_subscript_needs_monotone_args() {
        let a = Term::psi_i(1, Term::One);
        let b = Term::psi_i(2, Term::Zero);
        assert!(matches!(cmp(&a, &b), Err(Error::IncomparableSubscript { .. })));
        let c = Term::psi_i(2, Term::One);
        assert_eq!(cmp(&a, &c).unwrap(), Ordering::Less);
    }

    #[test]
    fn normal_form_examples() {
        assert!(!is_normal_form(&Term::wexp(Term::Zero), 2));
        assert!(is_normal_form(&Term::sum(vec![Term::Omega1, Term::One]), 2));
        assert!(is_normal_form(&Term::nat(3), 2));
    }

    #[test]
    fn finite_enumeration() {
        let got = enumerate_below(&Term::omega(), 4).unwrap();
        let want: Vec<Term> = (0..4).map(Term::nat).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn single_node_below_omega1() {
        let got = enumerate_below(&Term::Omega1, 1).unwrap();
        assert_eq!(got, vec![Term::Zero, Term::One]);
    }

    #[test]
    fn cap_is_enforced() {
        let opts = EnumOptions {
            cap: 10,
            ..EnumOptions::default()
        };
        let r = enumerate_below_with(&Term::BigI, 4, &opts);
        assert!(matches!(r, Err(Error::SizeLimitExceeded { cap: 10 })));
    }
}
