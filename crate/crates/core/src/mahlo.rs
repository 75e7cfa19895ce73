//! Finite ordinal sequences, Mh-class descriptors and the a_n, b_n, γ_{k,n}
//! bookkeeping.

use indexmap::IndexSet;
use serde::Serialize;

use crate::arith::{add, mul_nat, omega_tower, veblen};
use crate::error::{Error, Result};
use crate::order::{cmp, le, lt};
use crate::term::{OrdSeq, Term, ThetaSet};

impl OrdSeq {
    pub fn new(items: Vec<Term>) -> Self {
        OrdSeq(items)
    }

    pub fn empty() -> Self {
        OrdSeq(Vec::new())
    }

    pub fn items(&self) -> &[Term] {
        &self.0
    }
}

pub fn lh(s: &OrdSeq) -> usize {
    s.0.len()
}

pub fn component(s: &OrdSeq, i: usize) -> Result<&Term> {
    s.0.get(i).ok_or(Error::IndexOutOfRange {
        index: i,
        len: s.0.len(),
    })
}

/// The end segment (s_i, …, s_{lh−1}).
pub fn end_segment(s: &OrdSeq, i: usize) -> Result<OrdSeq> {
    if i > s.0.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: s.0.len(),
        });
    }
    Ok(OrdSeq(s.0[i..].to_vec()))
}

/// The set of components.
pub fn kset_seq(s: &OrdSeq) -> IndexSet<Term> {
    s.0.iter().cloned().collect()
}

/// (ν_i, α_{i+1}, …, α_{lh−1}).
pub fn bullet_sub(nu: &OrdSeq, alpha: &OrdSeq, i: usize) -> Result<OrdSeq> {
    if nu.0.len() != alpha.0.len() {
        return Err(Error::LengthMismatch {
            left: nu.0.len(),
            right: alpha.0.len(),
        });
    }
    let head = component(nu, i)?.clone();
    let mut out = vec![head];
    out.extend_from_slice(&alpha.0[i + 1..]);
    Ok(OrdSeq(out))
}

/// Componentwise strict inequality.
pub fn seq_less(nu: &OrdSeq, alpha: &OrdSeq) -> Result<bool> {
    if nu.0.len() != alpha.0.len() {
        return Err(Error::LengthMismatch {
            left: nu.0.len(),
            right: alpha.0.len(),
        });
    }
    for (a, b) in nu.0.iter().zip(&alpha.0) {
        if !lt(a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every component is ≤ beta.
pub fn seq_leq_ord(alpha: &OrdSeq, beta: &Term) -> Result<bool> {
    for a in &alpha.0 {
        if !le(a, beta)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The singleton sequence (α).
pub fn lift(t: Term) -> OrdSeq {
    OrdSeq(vec![t])
}

/// The single component of a singleton sequence.
pub fn unlift(s: &OrdSeq) -> Result<Term> {
    match s.0.as_slice() {
        [t] => Ok(t.clone()),
        _ => Err(Error::LengthMismatch {
            left: s.0.len(),
            right: 1,
        }),
    }
}

/// The symbolic class Mh_{k,n}(seq)[Θ] within a hierarchy of height N.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MhDescriptor {
    pub k: usize,
    pub n: u32,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub seq: OrdSeq,
    pub theta: ThetaSet,
}

impl MhDescriptor {
    pub fn new(k: usize, n: u32, big_n: usize, seq: OrdSeq, theta: ThetaSet) -> Result<Self> {
        if k > big_n || seq.0.len() != big_n - k {
            return Err(Error::LengthMismatch {
                left: seq.0.len(),
                right: big_n.saturating_sub(k),
            });
        }
        Ok(MhDescriptor {
            k,
            n,
            big_n,
            seq,
            theta,
        })
    }
}

/// Whether d1 and d2 meet the hypothesis under which Mh(d1) ⊆ Mh(d2):
/// same level, subscript and parameters, with d2's sequence componentwise
/// ≤ d1's.
pub fn mh_subsumes(d1: &MhDescriptor, d2: &MhDescriptor) -> Result<bool> {
    if d1.k != d2.k || d1.n != d2.n || d1.theta != d2.theta || d1.seq.0.len() != d2.seq.0.len() {
        return Ok(false);
    }
    for (a, b) in d1.seq.0.iter().zip(&d2.seq.0) {
        if cmp(b, a)?.is_gt() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// b_n, a_n, γ_{k,n} and ᾱ_{k,n} for 0 ≤ k ≤ N.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abgam {
    pub n: u32,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub b: Term,
    pub a: Term,
    pub gamma: Vec<Term>,
    pub alpha_vec: Vec<OrdSeq>,
}

pub fn abgam(n: u32, big_n: usize) -> Result<Abgam> {
    if n == 0 {
        return Err(Error::InvalidTerm("subscript n must be positive".into()));
    }
    let i1 = Term::sum(vec![Term::BigI, Term::One]);
    let base = omega_tower(n - 1, &i1)?;
    let b = Term::psi_reg(Term::k_plus(), n, base.clone());
    let a = veblen(&b, &b)?;
    let head = add(&base, &Term::One)?;
    let gamma = (0..=big_n)
        .map(|k| add(&head, &mul_nat(&a, big_n - k)?))
        .collect::<Result<Vec<_>>>()?;
    let alpha_vec = (0..=big_n)
        .map(|k| OrdSeq(gamma[k..big_n].to_vec()))
        .collect();
    Ok(Abgam {
        n,
        big_n,
        b,
        a,
        gamma,
        alpha_vec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> OrdSeq {
        OrdSeq(v.iter().map(|&k| Term::nat(k)).collect())
    }

    #[test]
    fn segments() {
        assert_eq!(end_segment(&s(&[10, 20, 30]), 1).unwrap(), s(&[20, 30]));
        assert_eq!(end_segment(&s(&[10]), 1).unwrap(), OrdSeq::empty());
        assert!(end_segment(&s(&[10]), 2).is_err());
        assert_eq!(kset_seq(&s(&[5, 5, 7])).len(), 2);
    }

    #[test]
    fn bullet() {
        let nu = s(&[5, 7, 9]);
        let alpha = s(&[10, 20, 30]);
        assert_eq!(bullet_sub(&nu, &alpha, 1).unwrap(), s(&[7, 30]));
        assert_eq!(bullet_sub(&nu, &alpha, 0).unwrap(), s(&[5, 20, 30]));
        assert!(matches!(
            bullet_sub(&s(&[1]), &alpha, 0),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            bullet_sub(&nu, &alpha, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn strict_componentwise() {
        assert!(seq_less(&s(&[1, 2]), &s(&[2, 3])).unwrap());
        assert!(!seq_less(&s(&[1, 3]), &s(&[2, 3])).unwrap());
    }

    #[test]
    fn abgam_small() {
        let r = abgam(1, 2).unwrap();
        let i_plus_2 = Term::sum(vec![Term::BigI, Term::One, Term::One]);
        assert_eq!(r.gamma[2], i_plus_2);
        assert!(seq_leq_ord(&r.alpha_vec[0], &r.gamma[0]).unwrap());
        assert_eq!(r.alpha_vec[2], OrdSeq::empty());
    }

    #[test]
    fn subsumption() {
        let th = ThetaSet::empty();
        let d1 = MhDescriptor::new(0, 1, 2, s(&[10, 20]), th.clone()).unwrap();
        let d2 = MhDescriptor::new(0, 1, 2, s(&[10, 19]), th.clone()).unwrap();
        let d3 = MhDescriptor::new(1, 1, 2, s(&[10]), th).unwrap();
        assert!(mh_subsumes(&d1, &d2).unwrap());
        assert!(!mh_subsumes(&d2, &d1).unwrap());
        assert!(!mh_subsumes(&d1, &d3).unwrap());
        let bigger = ThetaSet::new([Term::Zero]).unwrap();
        let d4 = MhDescriptor::new(0, 1, 2, s(&[10, 20]), bigger).unwrap();
        assert!(!mh_subsumes(&d1, &d4).unwrap());
    }

    #[test]
    fn lift_round_trip() {
        assert_eq!(unlift(&lift(Term::BigK)).unwrap(), Term::BigK);
        assert!(unlift(&OrdSeq::empty()).is_err());
    }
}
