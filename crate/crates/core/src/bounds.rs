//! Ordinal bookkeeping of the cut-elimination pipeline: each transformer
//! maps the annotations (height, cut rank, hull stage, theory level) of a
//! derivation to those of the transformed one.

use serde::Serialize;

use crate::arith::{add, omega_mul, omega_tower, principal_mul, veblen, wexp};
use crate::error::{Error, Result};
use crate::mahlo::abgam;
use crate::order::{cmp, le, lt};
use crate::term::{regular_designated, Term, ThetaSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideCondition {
    pub label: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundState {
    pub height: Term,
    pub cut_rank: Term,
    pub hull_stage: Term,
    /// Mahlo level k of the theory, between −2 and N.
    pub theory: i32,
    /// Collapse subscript of the hull operator.
    pub n: u32,
    pub note: String,
    pub side_conditions: Vec<SideCondition>,
}

impl BoundState {
    fn step(&self, note: impl Into<String>) -> BoundState {
        BoundState {
            note: note.into(),
            side_conditions: Vec::new(),
            ..self.clone()
        }
    }

    fn log(&mut self, label: impl Into<String>, holds: bool) {
        self.side_conditions.push(SideCondition {
            label: label.into(),
            holds,
        });
    }

    pub fn all_conditions_hold(&self) -> bool {
        self.side_conditions.iter().all(|c| c.holds)
    }
}

fn nat(k: usize) -> Term {
    Term::nat(k)
}

/// I·2 + p.
fn i_two_plus(p: usize) -> Result<Term> {
    add(&Term::sum(vec![Term::BigI, Term::BigI]), &nat(p))
}

fn i_plus_one() -> Term {
    Term::sum(vec![Term::BigI, Term::One])
}

/// The embedded axioms: height I·2+p, cut rank I+m, empty hull stage.
pub fn embedding_bound(m: usize, p: usize, big_n: i32, n: u32) -> Result<BoundState> {
    Ok(BoundState {
        height: i_two_plus(p)?,
        cut_rank: add(&Term::BigI, &nat(m))?,
        hull_stage: Term::Zero,
        theory: big_n,
        n,
        note: format!("embedding, m={m}, p={p}"),
        side_conditions: Vec::new(),
    })
}

/// Removes the cuts in [c, c+ω^a): height b ↦ φ(a)(b). Dropping the last
/// cut rank above I or a successor regular λ+1 instead gives ω^b and
/// raises the hull stage by b.
pub fn predicative_elim(s: &BoundState, a: &Term, c: &Term) -> Result<BoundState> {
    let expect = add(c, &wexp(a)?)?;
    if cmp(&s.cut_rank, &expect)?.is_ne() {
        return Err(Error::ShapeMismatch(format!(
            "cut rank {} is not {c} + w^{a}",
            s.cut_rank
        )));
    }
    let at_regular_step = a.is_zero() && (*c == Term::BigI || successor_of_regular(c));
    let mut out = s.step(format!("predicative elimination to {c}"));
    out.cut_rank = c.clone();
    if at_regular_step {
        out.hull_stage = add(&s.hull_stage, &s.height)?;
        out.height = wexp(&s.height)?;
    } else {
        out.height = veblen(a, &s.height)?;
        let clear = !(le(c, &Term::BigI)? && lt(&Term::BigI, &expect)?);
        out.log(format!("I not in [{c}, {expect})"), clear);
    }
    Ok(out)
}

fn successor_of_regular(c: &Term) -> bool {
    match c.parts() {
        [lambda, Term::One] => regular_designated(lambda),
        _ => false,
    }
}

/// m-fold predicative elimination from cut rank I+m down to I.
pub fn eliminate_to_i(s: &BoundState, m: usize) -> Result<BoundState> {
    let mut cur = s.clone();
    let mut log = Vec::new();
    for j in (0..m).rev() {
        cur = predicative_elim(&cur, &Term::Zero, &add(&Term::BigI, &nat(j))?)?;
        log.append(&mut cur.side_conditions);
    }
    cur.note = format!("{m}-fold predicative elimination to I");
    cur.side_conditions = log;
    Ok(cur)
}

/// Collapses into λ: â = γ + ω^{σ·(1+a)} and height, cut rank Ψ_{λ,n}â.
pub fn collapse_step(s: &BoundState, sigma: &Term, lambda: &Term, n: u32) -> Result<BoundState> {
    if !regular_designated(lambda) {
        return Err(Error::InvalidRegular(lambda.to_string()));
    }
    let factor = add(&Term::One, &s.height)?;
    let hat = add(&s.hull_stage, &wexp(&principal_mul(sigma, &factor)?)?)?;
    let psi = Term::psi_reg(lambda.clone(), n, hat.clone());
    let mut out = s.step(format!("collapse into {lambda}"));
    out.log(
        format!("{psi} is a valid term"),
        crate::term::validate(&psi, 1).is_ok(),
    );
    out.height = psi.clone();
    out.cut_rank = psi;
    out.hull_stage = add(&hat, &Term::One)?;
    out.n = n;
    Ok(out)
}

/// Raises the collapse argument to `target` and the hull stage to target+1.
pub fn weaken_collapse(s: &BoundState, lambda: &Term, target: &Term) -> Result<BoundState> {
    let Term::PsiReg { arg, n, .. } = &s.height else {
        return Err(Error::ShapeMismatch(format!("{} is not a collapse", s.height)));
    };
    let mut out = s.step(format!("weaken to {lambda}-collapse of {target}"));
    out.log(format!("{arg} <= {target}"), le(arg, target)?);
    let psi = Term::psi_reg(lambda.clone(), *n, target.clone());
    out.height = psi.clone();
    out.cut_rank = psi;
    out.hull_stage = add(target, &Term::One)?;
    Ok(out)
}

/// One Mahlo lowering at κ: γ ↦ γ+a, height a ↦ κ+ω·a, cut rank κ.
pub fn lower_mahlo(s: &BoundState, kappa: &Term, big_n: usize) -> Result<BoundState> {
    if s.theory <= 0 {
        return Err(Error::TheoryFloor(s.theory));
    }
    if s.cut_rank != Term::BigK {
        return Err(Error::ShapeMismatch(format!("cut rank {} is not K", s.cut_rank)));
    }
    let a_n = abgam(s.n, big_n)?.a;
    if !le(&s.height, &a_n)? {
        return Err(Error::BoundViolated(format!("{} exceeds a_{}", s.height, s.n)));
    }
    let mut out = s.step(format!("lowering at {kappa}"));
    out.theory = s.theory - 1;
    out.hull_stage = add(&s.hull_stage, &s.height)?;
    out.height = add(kappa, &omega_mul(&s.height)?)?;
    out.cut_rank = kappa.clone();
    out.log(format!("height <= a_{}", s.n), true);
    Ok(out)
}

/// rk_L(ι) < σ ⇒ rk_L(ι) < a.
pub fn side_condition_vee(rk_l: &Term, sigma: &Term, a: &Term) -> Result<bool> {
    Ok(!lt(rk_l, sigma)? || lt(rk_l, a)?)
}

/// The gap condition a₀ < a for a caller-supplied a₀.
pub fn mahlo_gap_ok(a0: &Term, a: &Term) -> Result<bool> {
    lt(a0, a)
}

/// The embedded cut rank is raised to at least I+1: with m = 0 the
/// collapsing argument would exceed ω_{m+2}(I+1).
fn effective_m(m: usize) -> usize {
    m.max(1)
}

/// Embedding through the collapse at K⁺, ending at height b_n with hull γ_{N,n}.
fn run_to_k_plus(m: usize, p: usize, big_n: usize) -> Result<(Vec<BoundState>, u32)> {
    let m_eff = effective_m(m);
    let n = u32::try_from(m_eff + 3).expect("small subscript");
    let ab = abgam(n, big_n)?;
    let mut trace = Vec::new();
    let start = embedding_bound(m_eff, p, big_n as i32, n)?;
    trace.push(start.clone());
    let elim = eliminate_to_i(&start, m_eff)?;
    trace.push(elim.clone());

    let c = omega_tower(n - 1, &i_plus_one())?;
    let low = omega_tower(u32::try_from(m_eff + 1).unwrap(), &i_two_plus(p)?)?;
    let collapsed = collapse_step(&elim, &Term::BigI, &Term::k_plus(), n)?;
    let mut weak = weaken_collapse(&collapsed, &Term::k_plus(), &c)?;
    weak.side_conditions.splice(0..0, collapsed.side_conditions.clone());
    weak.log(format!("{c} > {low}"), lt(&low, &c)?);
    weak.log("height = b_n".to_string(), weak.height == ab.b);
    weak.log("hull = gamma_N,n".to_string(), cmp(&weak.hull_stage, &ab.gamma[big_n])?.is_eq());
    weak.note = format!("collapse into K+ and weaken to b_{n}");
    trace.push(weak.clone());

    let mut to_k = predicative_elim(&weak, &ab.b, &Term::BigK)?;
    to_k.log(format!("height = a_{n}"), to_k.height == ab.a);
    trace.push(to_k);
    Ok((trace, n))
}

fn lower_repeatedly(trace: &mut Vec<BoundState>, times: usize, big_n: usize) -> Result<()> {
    let n = trace.last().expect("non-empty trace").n;
    let ab = abgam(n, big_n)?;
    for _ in 0..times {
        let mut next = lower_mahlo(trace.last().unwrap(), &Term::BigK, big_n)?;
        let k = usize::try_from(next.theory).unwrap_or(0);
        next.log(format!("height = a_{n}"), next.height == ab.a);
        next.log(format!("hull = gamma_{k},{n}"), cmp(&next.hull_stage, &ab.gamma[k])?.is_eq());
        trace.push(next);
    }
    Ok(())
}

/// Σ¹_{k+2}-conservation chain: ends at theory 0, cut rank K, hull stage
/// γ_{0,n} and height a_n, with 4+N states.
pub fn theorem1_trace(m: usize, p: usize, big_n: usize) -> Result<Vec<BoundState>> {
    let (mut trace, _) = run_to_k_plus(m, p, big_n)?;
    lower_repeatedly(&mut trace, big_n, big_n)?;
    Ok(trace)
}

/// The ω₁-reflection chain: the first part lowers to κ = Ψ^{ᾱ_{0,n₀},∅}_{K,n₀}(γ_{0,n₀}),
/// the second collapses a theory −2 derivation into ω₁ and ends at
/// height Ψ_{ω₁,n}(ω_{m+1}(I·2+ω)).
pub fn theorem2_trace(m: usize, p: usize, big_n: usize) -> Result<Vec<BoundState>> {
    let (mut trace, n0) = run_to_k_plus(m, p, big_n)?;
    lower_repeatedly(&mut trace, big_n - 1, big_n)?;
    let ab0 = abgam(n0, big_n)?;
    let kappa0 = Term::psi_k(
        n0,
        ab0.alpha_vec[0].clone(),
        ThetaSet::empty(),
        ab0.gamma[0].clone(),
    );
    let mut last = lower_mahlo(trace.last().unwrap(), &kappa0, big_n)?;
    last.log(format!("{kappa0} is a valid term"), crate::term::validate(&kappa0, big_n).is_ok());
    last.log("kappa < K".to_string(), lt(&kappa0, &Term::BigK)?);
    last.log(format!("height = a_{n0}"), last.height == ab0.a);
    last.log(format!("hull = gamma_0,{n0}"), cmp(&last.hull_stage, &ab0.gamma[0])?.is_eq());
    trace.push(last);

    // ω₁ part; m ≥ 2 keeps â below ω_{m+1}(I·2+ω).
    let m_b = m.max(2);
    let n = u32::try_from(m_b + 2).unwrap().max(n0) + 1;
    let start = embedding_bound(m_b, p, -2, n)?;
    trace.push(start.clone());
    let elim = eliminate_to_i(&start, m_b)?;
    trace.push(elim.clone());
    let i2w = add(&Term::sum(vec![Term::BigI, Term::BigI]), &Term::omega())?;
    let b = omega_tower(u32::try_from(m_b + 1).unwrap(), &i2w)?;
    let collapsed = collapse_step(&elim, &Term::BigI, &Term::Omega1, n)?;
    let mut fin = weaken_collapse(&collapsed, &Term::Omega1, &b)?;
    fin.side_conditions.splice(0..0, collapsed.side_conditions.clone());
    fin.note = format!("collapse into w1 and weaken to subscript {n}");

    let top = Term::psi_reg(Term::Omega1, n, omega_tower(n - 1, &i_plus_one())?);
    fin.log(format!("{top} > {}", fin.height), lt(&fin.height, &top)?);
    let ab = abgam(n, big_n)?;
    let kappa = Term::psi_k(n, ab.alpha_vec[0].clone(), ThetaSet::empty(), ab.gamma[0].clone());
    fin.log(format!("{kappa0} <= {kappa}"), le(&kappa0, &kappa)?);
    fin.log(format!("b_{n0} <= b_{n}"), le(&ab0.b, &ab.b)?);
    fin.log(format!("gamma_0,{n0} < gamma_0,{n}"), lt(&ab0.gamma[0], &ab.gamma[0])?);
    trace.push(fin);
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_veblen_case() {
        let s = BoundState {
            height: Term::BigK,
            cut_rank: add(&Term::Omega1, &Term::One).unwrap(),
            hull_stage: Term::Zero,
            theory: 0,
            n: 1,
            note: String::new(),
            side_conditions: Vec::new(),
        };
        let out = predicative_elim(&s, &Term::Zero, &Term::Omega1).unwrap();
        assert_eq!(out.cut_rank, Term::Omega1);
        assert_eq!(out.height, Term::BigK);
        assert_eq!(out.hull_stage, Term::Zero);
    }

    #[test]
    fn shape_mismatch() {
        let s = embedding_bound(2, 0, 2, 5).unwrap();
        assert!(matches!(
            predicative_elim(&s, &Term::Zero, &Term::BigI),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn cut_i_plus_one_step() {
        let s = embedding_bound(1, 0, 2, 4).unwrap();
        let out = predicative_elim(&s, &Term::Zero, &Term::BigI).unwrap();
        assert_eq!(out.cut_rank, Term::BigI);
        assert_eq!(out.height, Term::wexp(s.height.clone()));
    }

    #[test]
    fn iterated_elimination_builds_a_tower() {
        let s = embedding_bound(3, 1, 2, 6).unwrap();
        let out = eliminate_to_i(&s, 3).unwrap();
        assert_eq!(out.height, omega_tower(3, &s.height).unwrap());
    }

    #[test]
    fn embedding_shapes() {
        let s = embedding_bound(0, 0, 2, 3).unwrap();
        assert_eq!(s.height, Term::sum(vec![Term::BigI, Term::BigI]));
        assert_eq!(s.cut_rank, Term::BigI);
        let s = embedding_bound(3, 0, 2, 3).unwrap();
        assert_eq!(s.cut_rank, add(&Term::BigI, &nat(3)).unwrap());
    }

    #[test]
    fn lowering_floor() {
        let mut s = embedding_bound(0, 0, 0, 1).unwrap();
        s.cut_rank = Term::BigK;
        assert!(matches!(lower_mahlo(&s, &Term::BigK, 2), Err(Error::TheoryFloor(0))));
    }

    #[test]
    fn collapse_requires_designated_cardinal() {
        let s = embedding_bound(0, 0, 0, 1).unwrap();
        assert!(matches!(
            collapse_step(&s, &Term::BigI, &Term::BigK, 1),
            Err(Error::InvalidRegular(_))
        ));
    }

    #[test]
    fn vee_condition() {
        let w = Term::omega();
        assert!(side_condition_vee(&Term::One, &w, &Term::nat(2)).unwrap());
        assert!(!side_condition_vee(&Term::nat(3), &w, &Term::nat(2)).unwrap());
        assert!(side_condition_vee(&Term::BigK, &w, &Term::Zero).unwrap());
        assert!(mahlo_gap_ok(&Term::One, &w).unwrap());
    }

    #[test]
    fn theorem1_small() {
        let trace = theorem1_trace(1, 0, 2).unwrap();
        assert_eq!(trace.len(), 6);
        let last = trace.last().unwrap();
        let ab = abgam(4, 2).unwrap();
        assert_eq!(last.theory, 0);
        assert_eq!(last.cut_rank, Term::BigK);
        assert_eq!(last.height, ab.a);
        assert_eq!(last.hull_stage, ab.gamma[0]);
        assert!(trace.iter().all(BoundState::all_conditions_hold));
    }
}
