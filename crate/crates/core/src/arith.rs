//! Normal-form builders and checked ordinal arithmetic.
//!
//! The `*_nf` builders assume normal-form inputs and never check the
//! ceiling. The public operations normalize their inputs and reject results
//! at or above ω_{max_tower}(I+1).

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::limits::limits;
use crate::order::cmp_nf;
use crate::term::Term;

fn from_parts(mut parts: Vec<Term>) -> Term {
    match parts.len() {
        0 => Term::Zero,
        1 => parts.pop().unwrap(),
        _ => Term::Sum { parts },
    }
}

/// s + t for normal-form s and t.
pub fn add_nf(s: &Term, t: &Term) -> Result<Term> {
    let Some(lead) = t.parts().first() else {
        return Ok(s.clone());
    };
    let mut parts: Vec<Term> = s.parts().to_vec();
    while let Some(last) = parts.last() {
        if cmp_nf(last, lead)? == Ordering::Less {
            parts.pop();
        } else {
            break;
        }
    }
    parts.extend_from_slice(t.parts());
    Ok(from_parts(parts))
}

/// Principal terms that are fixed points of ξ ↦ ω^ξ.
pub(crate) fn is_epsilon(t: &Term) -> bool {
    t.is_atom() || matches!(t, Term::Veblen { .. })
}

/// ω^e for normal-form e.
pub fn wexp_nf(e: &Term) -> Term {
    match e {
        Term::Zero => Term::One,
        _ if is_epsilon(e) => e.clone(),
        _ => Term::wexp(e.clone()),
    }
}

/// φ(a)(b) for normal-form a and b.
pub fn veblen_nf(a: &Term, b: &Term) -> Result<Term> {
    if a.is_zero() {
        return Ok(wexp_nf(b));
    }
    if b.is_zero() && a.is_atom() {
        return Ok(a.clone());
    }
    let fixed = match b {
        _ if b.is_atom() => cmp_nf(a, b)?.is_lt(),
        Term::Veblen { index, .. } => cmp_nf(a, index)?.is_lt(),
        _ => false,
    };
    if fixed {
        Ok(b.clone())
    } else {
        Ok(Term::veblen(a.clone(), b.clone()))
    }
}

/// Rebuilds `t` bottom-up through the normal-form builders.
pub fn normalize(t: &Term) -> Result<Term> {
    Ok(match t {
        Term::Zero | Term::One | Term::Omega1 | Term::BigK | Term::BigI => t.clone(),
        Term::Sum { parts } => {
            let mut acc = Term::Zero;
            for p in parts {
                acc = add_nf(&acc, &normalize(p)?)?;
            }
            acc
        }
        Term::WExp { exponent } => wexp_nf(&normalize(exponent)?),
        Term::Veblen { index, arg } => veblen_nf(&normalize(index)?, &normalize(arg)?)?,
        Term::RegSucc { base } => Term::reg_succ(normalize(base)?),
        Term::PsiReg { kappa, n, arg } => Term::psi_reg(normalize(kappa)?, *n, normalize(arg)?),
        Term::PsiI { n, arg } => Term::psi_i(*n, normalize(arg)?),
        Term::PsiK {
            n,
            seq,
            theta,
            arg,
        } => {
            let seq = seq.0.iter().map(normalize).collect::<Result<Vec<_>>>()?;
            let theta = theta
                .elements()
                .iter()
                .map(normalize)
                .collect::<Result<Vec<_>>>()?;
            Term::psi_k(
                *n,
                crate::OrdSeq(seq),
                crate::ThetaSet::from_vec_unchecked(theta),
                normalize(arg)?,
            )
        }
    })
}

/// ω_k(I+1), built without a ceiling check.
pub fn tower_over_i_plus_one(k: u32) -> Term {
    let mut t = Term::sum(vec![Term::BigI, Term::One]);
    for _ in 0..k {
        t = wexp_nf(&t);
    }
    t
}

pub(crate) fn ceiling() -> Term {
    tower_over_i_plus_one(limits().max_tower)
}

fn check_ceiling(t: Term) -> Result<Term> {
    if cmp_nf(&t, &ceiling())?.is_lt() {
        Ok(t)
    } else {
        Err(Error::CeilingExceeded {
            max_tower: limits().max_tower,
        })
    }
}

/// Ceiling check used by `validate`, reporting a reason instead of an error.
pub(crate) fn check_ceiling_lenient(t: &Term) -> std::result::Result<(), String> {
    let nf = normalize(t).map_err(|e| e.to_string())?;
    check_ceiling(nf).map(drop).map_err(|e| e.to_string())
}

pub fn add(s: &Term, t: &Term) -> Result<Term> {
    check_ceiling(add_nf(&normalize(s)?, &normalize(t)?)?)
}

/// t·m as an iterated sum.
pub fn mul_nat(t: &Term, m: usize) -> Result<Term> {
    let t = normalize(t)?;
    let mut acc = Term::Zero;
    for _ in 0..m {
        acc = add_nf(&acc, &t)?;
    }
    check_ceiling(acc)
}

/// The exponent x of a principal p = ω^x.
fn log_principal(p: &Term) -> Result<Term> {
    match p {
        Term::One => Ok(Term::Zero),
        Term::WExp { exponent } => Ok((**exponent).clone()),
        _ if is_epsilon(p) => Ok(p.clone()),
        _ => Err(Error::InvalidTerm(format!(
            "{p} is not additively principal"
        ))),
    }
}

/// p·t for an additively principal normal-form p, distributing over the
/// parts of t: ω^x·ω^y = ω^(x+y).
pub fn principal_mul_nf(p: &Term, t: &Term) -> Result<Term> {
    let x = log_principal(p)?;
    let mut acc = Term::Zero;
    for q in t.parts() {
        let y = log_principal(q)?;
        acc = add_nf(&acc, &wexp_nf(&add_nf(&x, &y)?))?;
    }
    Ok(acc)
}

pub fn principal_mul(p: &Term, t: &Term) -> Result<Term> {
    check_ceiling(principal_mul_nf(&normalize(p)?, &normalize(t)?)?)
}

/// ω·t.
pub fn omega_mul(t: &Term) -> Result<Term> {
    principal_mul(&Term::omega(), t)
}

/// ω_m(t): ω_0(t) = t, ω_{m+1}(t) = ω^{ω_m(t)}.
pub fn omega_tower(m: u32, t: &Term) -> Result<Term> {
    let mut acc = normalize(t)?;
    for _ in 0..m {
        acc = check_ceiling(wexp_nf(&acc))?;
    }
    check_ceiling(acc)
}

pub fn veblen(a: &Term, b: &Term) -> Result<Term> {
    check_ceiling(veblen_nf(&normalize(a)?, &normalize(b)?)?)
}

pub fn wexp(e: &Term) -> Result<Term> {
    check_ceiling(wexp_nf(&normalize(e)?))
}
