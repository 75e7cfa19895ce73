//! The formula language over ordinal constants: coefficient sets, rank,
//! class membership, relativization and the disjunction/conjunction
//! assignment.
//!
//! Negation is not a connective. `~` is pushed to the literals, whose
//! `pos` flag records the polarity, and quantifiers and connectives are
//! dualized on the way.

use std::cmp::Ordering;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

use crate::arith::{add, omega_mul};
use crate::error::{Error, Result};
use crate::order::cmp;
use crate::term::{regular_designated, Term};

/// Label of the empty subset in `R` literals.
pub const EMPTY_TAG: &str = "0";

/// An individual term: an ordinal constant or a bound variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FTerm {
    Const(Term),
    Var(String),
}

impl FTerm {
    fn as_const(&self) -> Option<&Term> {
        match self {
            FTerm::Const(t) => Some(t),
            FTerm::Var(_) => None,
        }
    }
}

impl From<Term> for FTerm {
    fn from(t: Term) -> Self {
        FTerm::Const(t)
    }
}

/// The bound of an individual quantifier; `LI` is the unbounded universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Bound {
    Term(Term),
    LI,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "f")]
pub enum Formula {
    In { a: FTerm, b: FTerm, pos: bool },
    P { args: [FTerm; 3], pos: bool },
    PI { n: u32, t: FTerm, pos: bool },
    Reg { t: FTerm, pos: bool },
    R { tag: String, kappa: Term, t: FTerm, pos: bool },
    X { i: u32, t: FTerm, pos: bool },
    Or { l: Box<Formula>, r: Box<Formula> },
    And { l: Box<Formula>, r: Box<Formula> },
    ExB { var: String, bound: Bound, body: Box<Formula> },
    AllB { var: String, bound: Bound, body: Box<Formula> },
    Ex2 { var: u32, kappa: Term, body: Box<Formula> },
    All2 { var: u32, kappa: Term, body: Box<Formula> },
}

pub fn lit_in(a: impl Into<FTerm>, b: impl Into<FTerm>) -> Formula {
    Formula::In {
        a: a.into(),
        b: b.into(),
        pos: true,
    }
}

pub fn var(name: &str) -> FTerm {
    FTerm::Var(name.to_string())
}

impl Formula {
    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or {
            l: Box::new(l),
            r: Box::new(r),
        }
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And {
            l: Box::new(l),
            r: Box::new(r),
        }
    }

    pub fn ex(var: &str, bound: Bound, body: Formula) -> Formula {
        Formula::ExB {
            var: var.to_string(),
            bound,
            body: Box::new(body),
        }
    }

    pub fn all(var: &str, bound: Bound, body: Formula) -> Formula {
        Formula::AllB {
            var: var.to_string(),
            bound,
            body: Box::new(body),
        }
    }

    pub fn ex2(var: u32, kappa: Term, body: Formula) -> Formula {
        Formula::Ex2 {
            var,
            kappa,
            body: Box::new(body),
        }
    }

    pub fn all2(var: u32, kappa: Term, body: Formula) -> Formula {
        Formula::All2 {
            var,
            kappa,
            body: Box::new(body),
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(
            self,
            Formula::In { .. }
                | Formula::P { .. }
                | Formula::PI { .. }
                | Formula::Reg { .. }
                | Formula::R { .. }
                | Formula::X { .. }
        )
    }

    /// The negation, pushed through to the literals.
    pub fn negate(&self) -> Formula {
        use Formula::*;
        match self {
            In { a, b, pos } => In {
                a: a.clone(),
                b: b.clone(),
                pos: !pos,
            },
            P { args, pos } => P {
                args: args.clone(),
                pos: !pos,
            },
            PI { n, t, pos } => PI {
                n: *n,
                t: t.clone(),
                pos: !pos,
            },
            Reg { t, pos } => Reg {
                t: t.clone(),
                pos: !pos,
            },
            R {
                tag,
                kappa,
                t,
                pos,
            } => R {
                tag: tag.clone(),
                kappa: kappa.clone(),
                t: t.clone(),
                pos: !pos,
            },
            X { i, t, pos } => X {
                i: *i,
                t: t.clone(),
                pos: !pos,
            },
            Or { l, r } => Formula::and(l.negate(), r.negate()),
            And { l, r } => Formula::or(l.negate(), r.negate()),
            ExB { var, bound, body } => Formula::all(var, bound.clone(), body.negate()),
            AllB { var, bound, body } => Formula::ex(var, bound.clone(), body.negate()),
            Ex2 { var, kappa, body } => Formula::all2(*var, kappa.clone(), body.negate()),
            All2 { var, kappa, body } => Formula::ex2(*var, kappa.clone(), body.negate()),
        }
    }

    /// Replaces free occurrences of the individual variable `name`.
    pub fn subst_var(&self, name: &str, value: &Term) -> Formula {
        let st = |t: &FTerm| match t {
            FTerm::Var(v) if v == name => FTerm::Const(value.clone()),
            _ => t.clone(),
        };
        use Formula::*;
        match self {
            In { a, b, pos } => In {
                a: st(a),
                b: st(b),
                pos: *pos,
            },
            P { args, pos } => P {
                args: [st(&args[0]), st(&args[1]), st(&args[2])],
                pos: *pos,
            },
            PI { n, t, pos } => PI {
                n: *n,
                t: st(t),
                pos: *pos,
            },
            Reg { t, pos } => Reg { t: st(t), pos: *pos },
            R {
                tag,
                kappa,
                t,
                pos,
            } => R {
                tag: tag.clone(),
                kappa: kappa.clone(),
                t: st(t),
                pos: *pos,
            },
            X { i, t, pos } => X {
                i: *i,
                t: st(t),
                pos: *pos,
            },
            Or { l, r } => Formula::or(l.subst_var(name, value), r.subst_var(name, value)),
            And { l, r } => Formula::and(l.subst_var(name, value), r.subst_var(name, value)),
            ExB { var, .. } | AllB { var, .. } if var == name => self.clone(),
            ExB { var, bound, body } => Formula::ex(var, bound.clone(), body.subst_var(name, value)),
            AllB { var, bound, body } => Formula::all(var, bound.clone(), body.subst_var(name, value)),
            Ex2 { var, kappa, body } => Formula::ex2(*var, kappa.clone(), body.subst_var(name, value)),
            All2 { var, kappa, body } => {
                Formula::all2(*var, kappa.clone(), body.subst_var(name, value))
            }
        }
    }

    /// Replaces free X_i(t) by R_{tag,kappa}(t).
    pub fn subst_pred(&self, i: u32, tag: &str, kappa: &Term) -> Formula {
        use Formula::*;
        match self {
            X { i: j, t, pos } if *j == i => R {
                tag: tag.to_string(),
                kappa: kappa.clone(),
                t: t.clone(),
                pos: *pos,
            },
            Or { l, r } => Formula::or(l.subst_pred(i, tag, kappa), r.subst_pred(i, tag, kappa)),
            And { l, r } => Formula::and(l.subst_pred(i, tag, kappa), r.subst_pred(i, tag, kappa)),
            ExB { var, bound, body } => Formula::ex(var, bound.clone(), body.subst_pred(i, tag, kappa)),
            AllB { var, bound, body } => {
                Formula::all(var, bound.clone(), body.subst_pred(i, tag, kappa))
            }
            Ex2 { var, .. } | All2 { var, .. } if *var == i => self.clone(),
            Ex2 { var, kappa: k, body } => Formula::ex2(*var, k.clone(), body.subst_pred(i, tag, kappa)),
            All2 { var, kappa: k, body } => {
                Formula::all2(*var, k.clone(), body.subst_pred(i, tag, kappa))
            }
            _ => self.clone(),
        }
    }

    /// Uses only ∈ literals and individual quantifiers.
    pub fn is_pure_in(&self) -> bool {
        match self {
            Formula::In { .. } => true,
            Formula::Or { l, r } | Formula::And { l, r } => l.is_pure_in() && r.is_pure_in(),
            Formula::ExB { body, .. } | Formula::AllB { body, .. } => body.is_pure_in(),
            _ => false,
        }
    }
}

fn insert_const(set: &mut IndexSet<Term>, t: &FTerm) {
    if let Some(c) = t.as_const() {
        set.insert(c.clone());
    }
}

fn collect_ke(a: &Formula, skip: Option<&Term>, out: &mut IndexSet<Term>) {
    use Formula::*;
    let skipped = |t: &Term| skip.is_some_and(|s| cmp(t, s).is_ok_and(|o| o.is_eq()));
    match a {
        In { a, b, .. } => {
            insert_const(out, a);
            insert_const(out, b);
        }
        P { args, .. } => args.iter().for_each(|t| insert_const(out, t)),
        PI { t, .. } | Reg { t, .. } | R { t, .. } | X { t, .. } => insert_const(out, t),
        Or { l, r } | And { l, r } => {
            collect_ke(l, skip, out);
            collect_ke(r, skip, out);
        }
        ExB { bound, body, .. } | AllB { bound, body, .. } => {
            if let Bound::Term(t) = bound {
                if !skipped(t) {
                    out.insert(t.clone());
                }
            }
            collect_ke(body, skip, out);
        }
        Ex2 { kappa, body, .. } | All2 { kappa, body, .. } => {
            if !skipped(kappa) {
                out.insert(kappa.clone());
            }
            collect_ke(body, skip, out);
        }
    }
}

fn collect_kr(a: &Formula, out: &mut IndexSet<Term>) {
    use Formula::*;
    match a {
        R { kappa, .. } => {
            out.insert(kappa.clone());
        }
        Or { l, r } | And { l, r } => {
            collect_kr(l, out);
            collect_kr(r, out);
        }
        ExB { body, .. } | AllB { body, .. } | Ex2 { body, .. } | All2 { body, .. } => {
            collect_kr(body, out)
        }
        _ => {}
    }
}

/// Constants occurring in A, including quantifier bounds other than L_I.
pub fn k_e(a: &Formula) -> IndexSet<Term> {
    let mut out = IndexSet::new();
    out.insert(Term::Zero);
    collect_ke(a, None, &mut out);
    out
}

/// The κ of every R_{B,κ} occurring in A.
pub fn k_r(a: &Formula) -> IndexSet<Term> {
    let mut out = IndexSet::new();
    out.insert(Term::Zero);
    collect_kr(a, &mut out);
    out
}

pub fn k_all(a: &Formula) -> IndexSet<Term> {
    let mut out = k_e(a);
    out.extend(k_r(a));
    out
}

/// L-rank of a quantifier bound.
pub fn rk_l_bound(b: &Bound) -> Term {
    match b {
        Bound::Term(t) => t.clone(),
        Bound::LI => Term::BigI,
    }
}

fn max_term(a: Term, b: Term) -> Result<Term> {
    Ok(if cmp(&a, &b)? == Ordering::Less { b } else { a })
}

fn max_of<'a>(it: impl IntoIterator<Item = &'a Term>) -> Result<Term> {
    it.into_iter()
        .try_fold(Term::Zero, |acc, t| max_term(acc, t.clone()))
}

/// ∃x<I[b<x ∧ P_{I,n}(x)] with b < I, or its dual, returning b.
fn i_shape(a: &Formula) -> Option<&Term> {
    let (var, bound, body, exist) = match a {
        Formula::ExB { var, bound, body } => (var, bound, body, true),
        Formula::AllB { var, bound, body } => (var, bound, body, false),
        _ => return None,
    };
    if *bound != Bound::Term(Term::BigI) {
        return None;
    }
    let (l, r) = match (&**body, exist) {
        (Formula::And { l, r }, true) | (Formula::Or { l, r }, false) => (l, r),
        _ => return None,
    };
    match (&**l, &**r) {
        (
            Formula::In {
                a: FTerm::Const(b),
                b: FTerm::Var(x),
                pos: p1,
            },
            Formula::PI {
                t: FTerm::Var(y),
                pos: p2,
                ..
            },
        ) if x == var && y == var && *p1 == exist && *p2 == exist && lt(b, &Term::BigI).unwrap_or(false) => {
            Some(b)
        }
        _ => None,
    }
}

/// ∃x<λ∃y<λ[b<x ∧ P(λ,x,y)] for designated λ, or its dual; returns (λ, b).
pub fn p_shape(a: &Formula) -> Option<(&Term, &Term)> {
    let (x, bx, inner, exist) = match a {
        Formula::ExB { var, bound, body } => (var, bound, body, true),
        Formula::AllB { var, bound, body } => (var, bound, body, false),
        _ => return None,
    };
    let (y, by, body) = match (&**inner, exist) {
        (Formula::ExB { var, bound, body }, true) | (Formula::AllB { var, bound, body }, false) => {
            (var, bound, body)
        }
        _ => return None,
    };
    let Bound::Term(lambda) = bx else { return None };
    if bx != by || x == y || !regular_designated(lambda) {
        return None;
    }
    let (l, r) = match (&**body, exist) {
        (Formula::And { l, r }, true) | (Formula::Or { l, r }, false) => (l, r),
        _ => return None,
    };
    match (&**l, &**r) {
        (
            Formula::In {
                a: FTerm::Const(b),
                b: FTerm::Var(v),
                pos: p1,
            },
            Formula::P {
                args: [FTerm::Const(lam), FTerm::Var(v1), FTerm::Var(v2)],
                pos: p2,
            },
        ) if v == x && v1 == x && v2 == y && lam == lambda && *p1 == exist && *p2 == exist => {
            Some((lambda, b))
        }
        _ => None,
    }
}

/// The rank of a sentence. Free variables count as 0.
pub fn rank(a: &Formula) -> Result<Term> {
    use Formula::*;
    if i_shape(a).is_some() {
        return Ok(Term::BigI);
    }
    if let Some((lambda, b)) = p_shape(a) {
        return max_term(add(lambda, &Term::One)?, b.clone());
    }
    match a {
        _ if a.is_literal() => max_of(&k_all(a)),
        Or { l, r } | And { l, r } => add(&max_term(rank(l)?, rank(r)?)?, &Term::One),
        ExB { var, bound, body } | AllB { var, bound, body } => {
            let scaled = omega_mul(&rk_l_bound(bound))?;
            let inner = add(&rank(&body.subst_var(var, &Term::Zero))?, &Term::One)?;
            max_term(scaled, inner)
        }
        Ex2 { var, kappa, body } | All2 { var, kappa, body } => {
            let inner = rank(&body.subst_pred(*var, EMPTY_TAG, kappa))?;
            max_term(kappa.clone(), add(&inner, &Term::One)?)
        }
        _ => unreachable!("literals handled above"),
    }
}

/// Δ₀: ∈ literals, connectives and quantifiers bounded by constants.
pub fn is_delta0(a: &Formula) -> bool {
    match a {
        Formula::In { .. } => true,
        Formula::Or { l, r } | Formula::And { l, r } => is_delta0(l) && is_delta0(r),
        Formula::ExB { bound, body, .. } | Formula::AllB { bound, body, .. } => {
            matches!(bound, Bound::Term(_)) && is_delta0(body)
        }
        _ => false,
    }
}

/// Least (m, m') with A ∈ Σ_m and A ∈ Π_m', for prenex pure-∈ formulas.
pub fn sigma_pi_levels(a: &Formula) -> Option<(u32, u32)> {
    if is_delta0(a) {
        return Some((0, 0));
    }
    match a {
        Formula::ExB {
            bound: Bound::LI,
            body,
            ..
        } => {
            let (s, p) = sigma_pi_levels(body)?;
            let s2 = s.min(p + 1).max(1);
            Some((s2, s2 + 1))
        }
        Formula::AllB {
            bound: Bound::LI,
            body,
            ..
        } => {
            let (s, p) = sigma_pi_levels(body)?;
            let p2 = p.min(s + 1).max(1);
            Some((p2 + 1, p2))
        }
        _ => None,
    }
}

pub fn is_sigma(a: &Formula, m: u32) -> bool {
    sigma_pi_levels(a).is_some_and(|(s, _)| s <= m)
}

pub fn is_pi(a: &Formula, m: u32) -> bool {
    sigma_pi_levels(a).is_some_and(|(_, p)| p <= m)
}

fn lt(a: &Term, b: &Term) -> Result<bool> {
    Ok(cmp(a, b)?.is_lt())
}

fn le(a: &Term, b: &Term) -> Result<bool> {
    Ok(cmp(a, b)?.is_le())
}

fn has_unbounded(a: &Formula) -> bool {
    match a {
        Formula::Or { l, r } | Formula::And { l, r } => has_unbounded(l) || has_unbounded(r),
        Formula::ExB { bound, body, .. } | Formula::AllB { bound, body, .. } => {
            *bound == Bound::LI || has_unbounded(body)
        }
        Formula::Ex2 { body, .. } | Formula::All2 { body, .. } => has_unbounded(body),
        _ => false,
    }
}

/// Δ₀(λ): no unbounded quantifiers, k^R ≤ λ and k^E < λ.
pub fn is_delta0_lambda(a: &Formula, lambda: &Term) -> Result<bool> {
    if has_unbounded(a) {
        return Ok(false);
    }
    for t in &k_r(a) {
        if !le(t, lambda)? {
            return Ok(false);
        }
    }
    for t in &k_e(a) {
        if !lt(t, lambda)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in Σ^{Σ_{n+1}}(λ).
pub fn is_sigma_sigma(a: &Formula, lambda: &Term, n: u32) -> Result<bool> {
    use Formula::*;
    if is_sigma(a, n + 1) {
        return Ok(true);
    }
    Ok(match a {
        In { .. } | P { .. } | PI { .. } | Reg { .. } | X { .. } => true,
        R { kappa, .. } => lt(kappa, lambda)?,
        Or { l, r } | And { l, r } => is_sigma_sigma(l, lambda, n)? && is_sigma_sigma(r, lambda, n)?,
        AllB { var, bound, body } => {
            is_sigma_sigma(&body.subst_var(var, &Term::Zero), lambda, n)?
                && lt(&rk_l_bound(bound), lambda)?
        }
        ExB { var, bound, body } => {
            is_sigma_sigma(&body.subst_var(var, &Term::Zero), lambda, n)?
                && le(&rk_l_bound(bound), lambda)?
        }
        Ex2 { var, kappa, body } | All2 { var, kappa, body } => {
            is_sigma_sigma(&body.subst_pred(*var, EMPTY_TAG, kappa), lambda, n)? && lt(kappa, lambda)?
        }
    })
}

/// Σ¹/Π¹ levels over λ: (m, m') with A ∈ Σ¹_m(λ) and A ∈ Π¹_m'(λ).
fn second_order_levels(a: &Formula, lambda: &Term) -> Result<Option<(u32, u32)>> {
    use Formula::*;
    if is_delta0_lambda(a, lambda)? {
        return Ok(Some((0, 0)));
    }
    Ok(match a {
        Or { l, r } | And { l, r } => {
            match (second_order_levels(l, lambda)?, second_order_levels(r, lambda)?) {
                (Some((s1, p1)), Some((s2, p2))) => Some((s1.max(s2), p1.max(p2))),
                _ => None,
            }
        }
        ExB { bound, body, .. } | AllB { bound, body, .. } => match bound {
            Bound::Term(b) if le(b, lambda)? => second_order_levels(body, lambda)?,
            _ => None,
        },
        Ex2 { kappa, body, .. } | All2 { kappa, body, .. } => {
            let Some((s, p)) = second_order_levels(body, lambda)? else {
                return Ok(None);
            };
            match cmp(kappa, lambda)? {
                Ordering::Less => Some((s, p)),
                Ordering::Equal if matches!(a, Ex2 { .. }) => {
                    let s2 = s.min(p + 1).max(1);
                    Some((s2, s2 + 1))
                }
                Ordering::Equal => {
                    let p2 = p.min(s + 1).max(1);
                    Some((p2 + 1, p2))
                }
                Ordering::Greater => None,
            }
        }
        _ => None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_delta0_lambda: bool,
    pub is_sigma_sigma: bool,
    /// Least k with A ∈ Π¹_k(λ).
    pub pi1_level: Option<u32>,
    /// A ∈ Π²_0(λ).
    pub pi20: bool,
}

pub fn classify(a: &Formula, lambda: &Term, n: u32) -> Result<Classification> {
    let levels = second_order_levels(a, lambda)?;
    Ok(Classification {
        is_delta0_lambda: is_delta0_lambda(a, lambda)?,
        is_sigma_sigma: is_sigma_sigma(a, lambda, n)?,
        pi1_level: levels.map(|(_, p)| p),
        pi20: levels.is_some(),
    })
}

/// Whether A^{(κ,λ)} is guaranteed to keep its Π¹ level: k^R below λ is
/// ≤ κ and k^E is < κ, where quantifiers bounded by λ itself do not
/// contribute to k^E.
pub fn relativize_side_conditions(a: &Formula, kappa: &Term, lambda: &Term) -> Result<bool> {
    for t in &k_r(a) {
        if lt(t, lambda)? && !le(t, kappa)? {
            return Ok(false);
        }
    }
    let mut ke = IndexSet::new();
    ke.insert(Term::Zero);
    collect_ke(a, Some(lambda), &mut ke);
    for t in &ke {
        if !lt(t, kappa)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A^{(κ,λ)}: λ-bounded quantifiers and R_{B,λ} rebounded to κ.
pub fn relativize(a: &Formula, kappa: &Term, lambda: &Term) -> Result<Formula> {
    if !lt(kappa, lambda)? {
        return Err(Error::NotRelativizable(format!("{kappa} is not below {lambda}")));
    }
    if !lt(&Term::Omega1, kappa)? {
        return Err(Error::NotRelativizable(format!("{kappa} is not above w1")));
    }
    if has_unbounded(a) {
        return Err(Error::NotRelativizable("unbounded quantifier".into()));
    }
    rebound(a, kappa, lambda)
}

fn rebound(a: &Formula, kappa: &Term, lambda: &Term) -> Result<Formula> {
    use Formula::*;
    let swap = |t: &Term| -> Result<Term> {
        Ok(if cmp(t, lambda)?.is_eq() { kappa.clone() } else { t.clone() })
    };
    Ok(match a {
        R { tag, kappa: k, t, pos } => R {
            tag: tag.clone(),
            kappa: swap(k)?,
            t: t.clone(),
            pos: *pos,
        },
        Or { l, r } => Formula::or(rebound(l, kappa, lambda)?, rebound(r, kappa, lambda)?),
        And { l, r } => Formula::and(rebound(l, kappa, lambda)?, rebound(r, kappa, lambda)?),
        ExB { var, bound, body } | AllB { var, bound, body } => {
            let bound = match bound {
                Bound::Term(t) => Bound::Term(swap(t)?),
                Bound::LI => Bound::LI,
            };
            let body = rebound(body, kappa, lambda)?;
            if matches!(a, ExB { .. }) {
                Formula::ex(var, bound, body)
            } else {
                Formula::all(var, bound, body)
            }
        }
        Ex2 { var, kappa: k, body } => Formula::ex2(*var, swap(k)?, rebound(body, kappa, lambda)?),
        All2 { var, kappa: k, body } => Formula::all2(*var, swap(k)?, rebound(body, kappa, lambda)?),
        _ => a.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    Disj,
    Conj,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IndexDescriptor {
    Finite(usize),
    /// The single witness μz∈b θ[z], left symbolic.
    SymbolicMu(Bound),
    /// Subsets of K in L_{K⁺}.
    SymbolicPowerset,
    ElementsBelow(Bound),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shape {
    pub direction: Direction,
    pub index: IndexDescriptor,
}

fn literal_truth(a: &Formula) -> Result<bool> {
    let (truth, pos) = match a {
        Formula::In {
            a: FTerm::Const(x),
            b: FTerm::Const(y),
            pos,
        } => (lt(x, y)?, *pos),
        Formula::Reg {
            t: FTerm::Const(t),
            pos,
        } => {
            let nf = crate::arith::normalize(t)?;
            if matches!(nf, Term::PsiI { .. }) {
                return Err(Error::UndecidableLiteral);
            }
            (regular_designated(&nf), *pos)
        }
        _ => return Err(Error::UndecidableLiteral),
    };
    Ok(truth == pos)
}

pub fn assign_shape(a: &Formula, n: u32) -> Result<Shape> {
    use Formula::*;
    let shape = |direction, index| Shape { direction, index };
    Ok(match a {
        _ if a.is_literal() => {
            if literal_truth(a)? {
                shape(Direction::Conj, IndexDescriptor::Finite(0))
            } else {
                shape(Direction::Disj, IndexDescriptor::Finite(0))
            }
        }
        Or { .. } => shape(Direction::Disj, IndexDescriptor::Finite(2)),
        And { .. } => shape(Direction::Conj, IndexDescriptor::Finite(2)),
        Ex2 { .. } => shape(Direction::Disj, IndexDescriptor::SymbolicPowerset),
        All2 { .. } => shape(Direction::Conj, IndexDescriptor::SymbolicPowerset),
        ExB { bound, .. } => {
            let index = if a.is_pure_in() && is_sigma(a, n) {
                IndexDescriptor::SymbolicMu(bound.clone())
            } else {
                IndexDescriptor::ElementsBelow(bound.clone())
            };
            shape(Direction::Disj, index)
        }
        AllB { bound, .. } => {
            let index = if a.is_pure_in() && is_pi(a, n) {
                IndexDescriptor::SymbolicMu(bound.clone())
            } else {
                IndexDescriptor::ElementsBelow(bound.clone())
            };
            shape(Direction::Conj, index)
        }
        _ => unreachable!("literals handled above"),
    })
}

/// The components A_ι that can be written down from the constants in
/// `pool`: both sides of a connective, instances A(c) for pool constants
/// below a quantifier bound, and θ[R_{B,κ}] for the given subset labels.
/// Symbolic μ-witnesses have no listed components.
pub fn components(a: &Formula, n: u32, pool: &[Term], tags: &[&str]) -> Result<Vec<Formula>> {
    use Formula::*;
    Ok(match a {
        Or { l, r } | And { l, r } => vec![(**l).clone(), (**r).clone()],
        ExB { var, bound, body } | AllB { var, bound, body } => {
            if matches!(assign_shape(a, n)?.index, IndexDescriptor::SymbolicMu(_)) {
                return Ok(Vec::new());
            }
            let mut out = Vec::new();
            for c in pool {
                let below = lt(c, &rk_l_bound(bound))?;
                if below {
                    out.push(body.subst_var(var, c));
                }
            }
            out
        }
        Ex2 { var, kappa, body } | All2 { var, kappa, body } => tags
            .iter()
            .map(|tag| body.subst_pred(*var, tag, kappa))
            .collect(),
        _ => Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(tag: &str, kappa: Term, t: Term) -> Formula {
        Formula::R {
            tag: tag.into(),
            kappa,
            t: FTerm::Const(t),
            pos: true,
        }
    }

    #[test]
    fn coefficient_sets() {
        let f = r("b", Term::Omega1, Term::Zero);
        let kr: Vec<Term> = k_r(&f).into_iter().collect();
        assert_eq!(kr.len(), 2);
        assert!(kr.contains(&Term::Omega1) && kr.contains(&Term::Zero));
        let g = lit_in(Term::One, Term::BigK);
        assert_eq!(k_r(&g).into_iter().collect::<Vec<_>>(), vec![Term::Zero]);
        let h = Formula::ex("x", Bound::Term(Term::BigK), lit_in(var("x"), Term::One));
        let ke = k_e(&h);
        assert!(ke.contains(&Term::BigK) && ke.contains(&Term::One));
        let u = Formula::ex("x", Bound::LI, lit_in(var("x"), Term::One));
        assert!(!k_e(&u).contains(&Term::BigI));
    }

    #[test]
    fn special_rank_shapes() {
        let f = Formula::ex(
            "x",
            Bound::Term(Term::BigI),
            Formula::and(
                lit_in(Term::BigK, var("x")),
                Formula::PI {
                    n: 1,
                    t: var("x"),
                    pos: true,
                },
            ),
        );
        assert_eq!(rank(&f).unwrap(), Term::BigI);
        assert_eq!(rank(&f.negate()).unwrap(), Term::BigI);
    }

    #[test]
    fn predicate_ranks() {
        let c = Term::nat(3);
        assert_eq!(rank(&r("b", Term::BigK, c)).unwrap(), Term::BigK);
        let f = Formula::ex2(0, Term::BigK, r(EMPTY_TAG, Term::BigK, Term::Zero));
        assert_eq!(rank(&f).unwrap(), Term::sum(vec![Term::BigK, Term::One]));
    }

    #[test]
    fn delta0_lambda_examples() {
        let f = lit_in(Term::Zero, Term::One);
        assert!(classify(&f, &Term::Omega1, 1).unwrap().is_delta0_lambda);
        let g = Formula::ex("x", Bound::LI, lit_in(var("x"), Term::One));
        assert!(!classify(&g, &Term::BigK, 1).unwrap().is_delta0_lambda);
    }

    #[test]
    fn second_order_below_lambda_is_sigma_sigma() {
        let body = Formula::X {
            i: 0,
            t: FTerm::Const(Term::Zero),
            pos: true,
        };
        let f = Formula::ex2(0, Term::BigK, body);
        assert!(classify(&f, &Term::k_plus(), 1).unwrap().is_sigma_sigma);
        assert!(!classify(&f, &Term::BigK, 1).unwrap().is_sigma_sigma);
    }

    #[test]
    fn relativize_examples() {
        let kappa = Term::BigK;
        let lambda = Term::k_plus();
        let body = Formula::X {
            i: 0,
            t: FTerm::Const(Term::Zero),
            pos: true,
        };
        let f = Formula::all2(0, lambda.clone(), body.clone());
        assert_eq!(
            relativize(&f, &kappa, &lambda).unwrap(),
            Formula::all2(0, kappa.clone(), body)
        );
        let g = lit_in(Term::Zero, Term::One);
        assert_eq!(relativize(&g, &kappa, &lambda).unwrap(), g);
        assert!(relativize(&g, &lambda, &kappa).is_err());
        let u = Formula::ex("x", Bound::LI, g);
        assert!(matches!(
            relativize(&u, &kappa, &lambda),
            Err(Error::NotRelativizable(_))
        ));
    }

    #[test]
    fn shapes() {
        let a0 = lit_in(Term::Zero, Term::One);
        let s = assign_shape(&Formula::or(a0.clone(), a0.clone()), 1).unwrap();
        assert_eq!(s.direction, Direction::Disj);
        assert_eq!(s.index, IndexDescriptor::Finite(2));
        let s = assign_shape(&Formula::ex2(0, Term::BigK, a0.clone()), 1).unwrap();
        assert_eq!(s.index, IndexDescriptor::SymbolicPowerset);
        let s = assign_shape(&a0, 1).unwrap();
        assert_eq!((s.direction, s.index), (Direction::Conj, IndexDescriptor::Finite(0)));
        let p = Formula::PI {
            n: 1,
            t: FTerm::Const(Term::Zero),
            pos: true,
        };
        assert!(matches!(assign_shape(&p, 1), Err(Error::UndecidableLiteral)));
    }
}
