//! The ordinal term algebra: constructors, structural validity, subterm
//! parameters and regular designation.

use std::fmt;
use std::sync::Arc;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{arith, hull, order};

/// An ordinal term. Children are shared behind `Arc`, so cloning is cheap.
///
/// Equality, hashing and `Eq` are structural; the ordinal order lives in
/// [`crate::order`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "t")]
pub enum Term {
    Zero,
    /// ω^0.
    One,
    Omega1,
    BigK,
    BigI,
    /// At least two additively principal parts in non-increasing order.
    Sum { parts: Vec<Term> },
    /// ω^exponent.
    WExp { exponent: Arc<Term> },
    /// Binary Veblen φ(index)(arg).
    Veblen { index: Arc<Term>, arg: Arc<Term> },
    /// κ⁺ for a base K, Ψ_{I,n}γ or a regular-designated term.
    RegSucc { base: Arc<Term> },
    /// Ψ_{κ,n}γ for regular-designated κ.
    PsiReg { kappa: Arc<Term>, n: u32, arg: Arc<Term> },
    /// Ψ_{I,n}γ.
    PsiI { n: u32, arg: Arc<Term> },
    /// Ψ^{seq,theta}_{K,n}(arg).
    PsiK {
        n: u32,
        seq: OrdSeq,
        theta: ThetaSet,
        arg: Arc<Term>,
    },
}

pub(crate) static ZERO: Term = Term::Zero;

/// A finite sequence of ordinal terms.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrdSeq(pub Vec<Term>);

/// A finite set of terms ≤ K, kept sorted ascending and duplicate-free.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThetaSet(Vec<Term>);

impl ThetaSet {
    pub fn empty() -> Self {
        ThetaSet(Vec::new())
    }

    /// Sorts, deduplicates and checks that every element is ≤ K.
    pub fn new(elems: impl IntoIterator<Item = Term>) -> Result<Self> {
        let mut out: Vec<Term> = Vec::new();
        for e in elems {
            let e = arith::normalize(&e)?;
            if order::cmp_nf(&e, &Term::BigK)?.is_gt() {
                return Err(Error::InvalidTerm(format!("theta element {e} exceeds K")));
            }
            out.push(e);
        }
        order::sort_nf(&mut out)?;
        out.dedup();
        Ok(ThetaSet(out))
    }

    /// Wraps elements without checking; `validate` reports any violation.
    pub fn from_vec_unchecked(elems: Vec<Term>) -> Self {
        ThetaSet(elems)
    }

    pub fn elements(&self) -> &[Term] {
        &self.0
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.0.contains(t)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_subset(&self, other: &ThetaSet) -> bool {
        self.0.iter().all(|t| other.contains(t))
    }

    pub fn union(&self, other: &ThetaSet) -> Result<ThetaSet> {
        ThetaSet::new(self.0.iter().chain(other.0.iter()).cloned())
    }
}

impl Term {
    pub fn nat(k: usize) -> Term {
        match k {
            0 => Term::Zero,
            1 => Term::One,
            _ => Term::Sum {
                parts: vec![Term::One; k],
            },
        }
    }

    /// ω = ω^1.
    pub fn omega() -> Term {
        Term::WExp {
            exponent: Arc::new(Term::One),
        }
    }

    pub fn wexp(exponent: Term) -> Term {
        Term::WExp {
            exponent: Arc::new(exponent),
        }
    }

    pub fn veblen(index: Term, arg: Term) -> Term {
        Term::Veblen {
            index: Arc::new(index),
            arg: Arc::new(arg),
        }
    }

    pub fn reg_succ(base: Term) -> Term {
        Term::RegSucc {
            base: Arc::new(base),
        }
    }

    /// K⁺.
    pub fn k_plus() -> Term {
        Term::reg_succ(Term::BigK)
    }

    pub fn psi_reg(kappa: Term, n: u32, arg: Term) -> Term {
        Term::PsiReg {
            kappa: Arc::new(kappa),
            n,
            arg: Arc::new(arg),
        }
    }

    pub fn psi_i(n: u32, arg: Term) -> Term {
        Term::PsiI {
            n,
            arg: Arc::new(arg),
        }
    }

    pub fn psi_k(n: u32, seq: OrdSeq, theta: ThetaSet, arg: Term) -> Term {
        Term::PsiK {
            n,
            seq,
            theta,
            arg: Arc::new(arg),
        }
    }

    pub fn sum(parts: Vec<Term>) -> Term {
        Term::Sum { parts }
    }

    /// Additive parts: empty for zero, the parts of a sum, otherwise the term itself.
    pub fn parts(&self) -> &[Term] {
        match self {
            Term::Zero => &[],
            Term::Sum { parts } => parts,
            _ => std::slice::from_ref(self),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Term::Zero)
    }

    pub fn is_principal(&self) -> bool {
        !matches!(self, Term::Zero | Term::Sum { .. })
    }

    pub fn is_collapse(&self) -> bool {
        matches!(
            self,
            Term::PsiReg { .. } | Term::PsiI { .. } | Term::PsiK { .. }
        )
    }

    /// Collapses and the designated cardinals: the strongly critical atoms.
    pub fn is_atom(&self) -> bool {
        matches!(
            self,
            Term::Omega1
                | Term::BigK
                | Term::BigI
                | Term::RegSucc { .. }
                | Term::PsiReg { .. }
                | Term::PsiI { .. }
                | Term::PsiK { .. }
        )
    }

    /// The natural number this term denotes, if it is one.
    pub fn as_nat(&self) -> Option<usize> {
        match self {
            Term::Zero => Some(0),
            Term::One => Some(1),
            Term::Sum { parts } if parts.iter().all(|p| *p == Term::One) => Some(parts.len()),
            _ => None,
        }
    }

    /// Node count; subscripts are not nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Omega1 | Term::BigK | Term::BigI => 1,
            Term::Sum { parts } => 1 + parts.iter().map(Term::size).sum::<usize>(),
            Term::WExp { exponent } => 1 + exponent.size(),
            Term::Veblen { index, arg } => 1 + index.size() + arg.size(),
            Term::RegSucc { base } => 1 + base.size(),
            Term::PsiReg { kappa, arg, .. } => 1 + kappa.size() + arg.size(),
            Term::PsiI { arg, .. } => 1 + arg.size(),
            Term::PsiK {
                seq, theta, arg, ..
            } => {
                1 + seq.0.iter().map(Term::size).sum::<usize>()
                    + theta.0.iter().map(Term::size).sum::<usize>()
                    + arg.size()
            }
        }
    }

    /// Direct children in a fixed order.
    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Zero | Term::One | Term::Omega1 | Term::BigK | Term::BigI => Vec::new(),
            Term::Sum { parts } => parts.iter().collect(),
            Term::WExp { exponent } => vec![exponent],
            Term::Veblen { index, arg } => vec![index, arg],
            Term::RegSucc { base } => vec![base],
            Term::PsiReg { kappa, arg, .. } => vec![kappa, arg],
            Term::PsiI { arg, .. } => vec![arg],
            Term::PsiK {
                seq, theta, arg, ..
            } => seq
                .0
                .iter()
                .chain(theta.0.iter())
                .chain(std::iter::once(&**arg))
                .collect(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_term(self))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_term(self))
    }
}

impl fmt::Debug for OrdSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Debug for ThetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// All parameters occurring in `t`, including `t` itself, in preorder.
pub fn kset(t: &Term) -> IndexSet<Term> {
    let mut out = IndexSet::new();
    collect_kset(t, &mut out);
    out
}

fn collect_kset(t: &Term, out: &mut IndexSet<Term>) {
    if !out.insert(t.clone()) {
        return;
    }
    for c in t.children() {
        collect_kset(c, out);
    }
}

/// Syntactic regular designation: ω₁ and successor chains over K or Ψ_{I,n}γ.
pub fn regular_designated(t: &Term) -> bool {
    match t {
        Term::Omega1 => true,
        Term::RegSucc { base } => successor_base_ok(base),
        _ => false,
    }
}

/// Successors start above K, so ω₁ is not a base.
pub(crate) fn successor_base_ok(base: &Term) -> bool {
    match base {
        Term::BigK | Term::PsiI { .. } => true,
        Term::RegSucc { base } => successor_base_ok(base),
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// The offending subterm, printed in surface syntax.
    pub at: String,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at {})", self.reason, self.at)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violations.into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidTerm(v.to_string())),
        }
    }
}

/// Checks every structural invariant and the normal-form hull condition of
/// each collapse. `big_n` is the required length of `PsiK` sequences.
///
/// Violations are listed top-down, so the first entry names the outermost
/// failing clause.
pub fn validate(t: &Term, big_n: usize) -> ValidityReport {
    let mut report = ValidityReport::default();
    walk_validate(t, big_n, &mut report);
    if report.is_ok() {
        match arith::check_ceiling_lenient(t) {
            Ok(()) => {}
            Err(reason) => report.violations.push(Violation {
                at: t.to_string(),
                reason,
            }),
        }
    }
    report
}

fn walk_validate(t: &Term, big_n: usize, report: &mut ValidityReport) {
    if let Err(reason) = check_node(t, big_n, false) {
        report.violations.push(Violation {
            at: t.to_string(),
            reason,
        });
    }
    for c in t.children() {
        walk_validate(c, big_n, report);
    }
}

fn cmp_with(
    a: &Term,
    b: &Term,
    normalized: bool,
) -> std::result::Result<std::cmp::Ordering, String> {
    let r = if normalized {
        order::cmp_nf(a, b)
    } else {
        order::cmp(a, b)
    };
    r.map_err(|e| e.to_string())
}

/// Checks the clauses owned by the outermost node of `t`, assuming its
/// children have been (or will be) checked separately. With `normalized`
/// the children are known to be in normal form and comparisons skip
/// renormalization.
pub(crate) fn check_node(t: &Term, big_n: usize, normalized: bool) -> std::result::Result<(), String> {
    match t {
        Term::Zero | Term::One | Term::Omega1 | Term::BigK | Term::BigI => Ok(()),
        Term::Sum { parts } => {
            if parts.len() < 2 {
                return Err("sum needs at least two parts".into());
            }
            if let Some(p) = parts.iter().find(|p| !p.is_principal()) {
                return Err(format!("sum part {p} not additively principal"));
            }
            for w in parts.windows(2) {
                if cmp_with(&w[0], &w[1], normalized)?.is_lt() {
                    return Err("parts not non-increasing".into());
                }
            }
            Ok(())
        }
        Term::WExp { exponent } => {
            if exponent.is_zero() {
                Err("w^0 is stored as 1".into())
            } else {
                Ok(())
            }
        }
        Term::Veblen { index, .. } => {
            if index.is_zero() {
                Err("phi(0, b) is stored as w^b".into())
            } else {
                Ok(())
            }
        }
        Term::RegSucc { base } => {
            if successor_base_ok(base) {
                Ok(())
            } else {
                Err("successor base is not K, psiI or regular-designated".into())
            }
        }
        Term::PsiReg { kappa, n, arg } => {
            if !regular_designated(kappa) {
                return Err("collapse cardinal not regular-designated".into());
            }
            check_subscript_and_arg(*n, arg, normalized)?;
            check_nf_valid(t, big_n, normalized)
        }
        Term::PsiI { n, arg } => {
            check_subscript_and_arg(*n, arg, normalized)?;
            check_nf_valid(t, big_n, normalized)
        }
        Term::PsiK {
            n, seq, theta, arg, ..
        } => {
            if seq.0.len() != big_n {
                return Err(format!("lh(seq)≠N ({} vs {big_n})", seq.0.len()));
            }
            for c in &seq.0 {
                if cmp_with(c, arg, normalized)?.is_gt() {
                    return Err("sequence component exceeds argument".into());
                }
            }
            for e in &theta.0 {
                if cmp_with(e, &Term::BigK, normalized)?.is_gt() {
                    return Err("theta element exceeds K".into());
                }
            }
            for w in theta.0.windows(2) {
                if !cmp_with(&w[0], &w[1], normalized)?.is_lt() {
                    return Err("theta not sorted and duplicate-free".into());
                }
            }
            check_subscript_and_arg(*n, arg, normalized)?;
            check_nf_valid(t, big_n, normalized)
        }
    }
}

fn check_subscript_and_arg(n: u32, arg: &Term, normalized: bool) -> std::result::Result<(), String> {
    if n == 0 {
        return Err("collapse subscript must be positive".into());
    }
    let bound = arith::tower_over_i_plus_one(n + 1);
    if !cmp_with(arg, &bound, normalized)?.is_lt() {
        return Err(format!("collapse argument not below w_{}(I+1)", n + 1));
    }
    Ok(())
}

fn check_nf_valid(t: &Term, big_n: usize, normalized: bool) -> std::result::Result<(), String> {
    let ok = if normalized {
        hull::nf_valid_nf(t, big_n)
    } else {
        hull::nf_valid(t, big_n)
    };
    match ok {
        Ok(true) => Ok(()),
        Ok(false) => Err("collapse fails the normal-form hull condition".into()),
        Err(e) => Err(e.to_string()),
    }
}
