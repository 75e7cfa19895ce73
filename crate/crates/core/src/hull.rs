//! Term-level Skolem hulls H_{α,n}[Θ](β), the normal-form condition for
//! collapses, and resolvent-class descriptors.

use serde::Serialize;

use crate::arith::{normalize, tower_over_i_plus_one};
use crate::error::{Error, Result};
use crate::mahlo::{bullet_sub, seq_less, MhDescriptor};
use crate::order::cmp_nf;
use crate::term::{OrdSeq, Term, ThetaSet};

/// A hull H_{alpha,n}[theta ∪ {kappa_ctx}](threshold), where the threshold
/// stands for the set of all terms below it.
#[derive(Debug, Clone)]
pub struct HullQuery {
    pub alpha: Term,
    pub n: u32,
    pub threshold: Term,
    pub theta: ThetaSet,
    pub kappa_ctx: Option<Term>,
}

impl HullQuery {
    pub fn new(alpha: Term, n: u32, threshold: Term) -> Self {
        HullQuery {
            alpha,
            n,
            threshold,
            theta: ThetaSet::empty(),
            kappa_ctx: None,
        }
    }

    pub fn with_theta(mut self, theta: ThetaSet) -> Self {
        self.theta = theta;
        self
    }

    pub fn with_kappa(mut self, kappa: Term) -> Self {
        self.kappa_ctx = Some(kappa);
        self
    }

    fn normalized(&self) -> Result<HullQuery> {
        Ok(HullQuery {
            alpha: normalize(&self.alpha)?,
            n: self.n,
            threshold: normalize(&self.threshold)?,
            theta: ThetaSet::new(self.theta.elements().iter().cloned())?,
            kappa_ctx: self.kappa_ctx.as_ref().map(normalize).transpose()?,
        })
    }
}

/// Decides t ∈ H_{α,n}[Θ](β) by structural recursion.
pub fn in_hull(t: &Term, q: &HullQuery) -> Result<bool> {
    in_hull_nf(&normalize(t)?, &q.normalized()?)
}

/// As [`in_hull`], for a normal-form term and query.
pub fn in_hull_nf(t: &Term, q: &HullQuery) -> Result<bool> {
    let exp_bound = tower_over_i_plus_one(q.n);
    Walker { q, exp_bound: &exp_bound }.member(t)
}

struct Walker<'a> {
    q: &'a HullQuery,
    exp_bound: &'a Term,
}

impl Walker<'_> {
    fn member(&self, t: &Term) -> Result<bool> {
        if matches!(
            t,
            Term::Zero | Term::One | Term::Omega1 | Term::BigK | Term::BigI
        ) {
            return Ok(true);
        }
        if self.q.theta.contains(t) || self.q.kappa_ctx.as_ref() == Some(t) {
            return Ok(true);
        }
        if cmp_nf(t, &self.q.threshold)?.is_lt() {
            return Ok(true);
        }
        match t {
            Term::Sum { parts } => self.all(parts.iter()),
            Term::WExp { exponent } => {
                Ok(self.member(exponent)? && cmp_nf(exponent, self.exp_bound)?.is_lt())
            }
            Term::Veblen { index, arg } => Ok(self.member(index)? && self.member(arg)?),
            Term::RegSucc { base } => self.member(base),
            Term::PsiI { n, arg } => self.collapse(*n, std::iter::empty(), arg),
            Term::PsiReg { kappa, n, arg } => self.collapse(*n, std::iter::once(&**kappa), arg),
            Term::PsiK {
                n,
                seq,
                theta,
                arg,
            } => self.collapse(*n, seq.0.iter().chain(theta.elements()), arg),
            _ => Ok(false),
        }
    }

    fn all<'t>(&self, mut it: impl Iterator<Item = &'t Term>) -> Result<bool> {
        it.try_fold(true, |ok, t| Ok(ok && self.member(t)?))
    }

    fn collapse<'t>(&self, n: u32, params: impl Iterator<Item = &'t Term>, arg: &Term) -> Result<bool> {
        if n != self.q.n || !cmp_nf(arg, &self.q.alpha)?.is_lt() {
            return Ok(false);
        }
        Ok(self.all(params)? && self.member(arg)?)
    }
}

/// The normal-form hull condition of a collapse term.
pub fn nf_valid(t: &Term, big_n: usize) -> Result<bool> {
    nf_valid_nf(&normalize(t)?, big_n)
}

/// As [`nf_valid`], for a term whose children are in normal form.
pub fn nf_valid_nf(t: &Term, big_n: usize) -> Result<bool> {
    let (arg, query) = match t {
        Term::PsiReg { kappa, n, arg } => (
            arg,
            HullQuery::new((**arg).clone(), *n, t.clone()).with_kappa((**kappa).clone()),
        ),
        Term::PsiI { n, arg } => (
            arg,
            HullQuery::new((**arg).clone(), *n, t.clone()).with_kappa(Term::BigI),
        ),
        Term::PsiK {
            n,
            seq,
            theta,
            arg,
        } => {
            if seq.0.len() != big_n {
                return Ok(false);
            }
            for c in &seq.0 {
                if cmp_nf(c, arg)?.is_gt() {
                    return Ok(false);
                }
            }
            (
                arg,
                HullQuery::new((**arg).clone(), *n, t.clone()).with_theta(theta.clone()),
            )
        }
        _ => return Err(Error::NotACollapse),
    };
    if same_family(t, arg) && cmp_nf(arg, t)?.is_lt() {
        return Ok(false);
    }
    in_hull_nf(arg, &query)
}

/// Collapses into the same cardinal.
fn same_family(a: &Term, b: &Term) -> bool {
    match (a, b) {
        (Term::PsiReg { kappa: k1, .. }, Term::PsiReg { kappa: k2, .. }) => k1 == k2,
        (Term::PsiI { .. }, Term::PsiI { .. }) | (Term::PsiK { .. }, Term::PsiK { .. }) => true,
        _ => false,
    }
}

/// One component class Mh_{k,n}(seq)[Θ] of a resolvent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolventClass {
    pub descriptor: MhDescriptor,
    /// Whether the class carries the extra parameter π alongside Θ.
    pub adjoins_pi: bool,
}

/// The resolvent class for π: the ρ lying in every listed class with
/// H_{gamma,n}[Θ ∪ {π}](ρ) ∩ π ⊆ ρ. Nothing here decides membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolventDescriptor {
    pub base_level: usize,
    pub n: u32,
    pub classes: Vec<ResolventClass>,
    pub hull_stage: Term,
    pub theta: ThetaSet,
}

pub fn resolvent_descriptor(
    i: usize,
    seq: &OrdSeq,
    nu: &OrdSeq,
    gamma: &Term,
    theta: &ThetaSet,
    n: u32,
) -> Result<ResolventDescriptor> {
    if !seq_less(nu, seq)? {
        let index = nu
            .0
            .iter()
            .zip(&seq.0)
            .position(|(a, b)| !crate::order::lt(a, b).unwrap_or(false))
            .unwrap_or(0);
        return Err(Error::NotComponentwiseLess { index });
    }
    let total = i + seq.0.len();
    let classes = (0..seq.0.len())
        .map(|j| {
            Ok(ResolventClass {
                descriptor: MhDescriptor {
                    k: i + j,
                    n,
                    big_n: total,
                    seq: bullet_sub(nu, seq, j)?,
                    theta: theta.clone(),
                },
                adjoins_pi: true,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ResolventDescriptor {
        base_level: i,
        n,
        classes,
        hull_stage: normalize(gamma)?,
        theta: theta.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi0() -> Term {
        Term::psi_reg(Term::Omega1, 1, Term::Zero)
    }

    #[test]
    fn constants_are_members() {
        let q = HullQuery::new(Term::Zero, 1, Term::Zero);
        assert!(in_hull(&Term::BigK, &q).unwrap());
    }

    #[test]
    fn empty_stage_has_no_collapses() {
        let q = HullQuery::new(Term::Zero, 1, Term::Zero);
        assert!(!in_hull(&psi0(), &q).unwrap());
        let q = HullQuery::new(Term::One, 1, Term::Zero);
        assert!(in_hull(&psi0(), &q).unwrap());
    }

    #[test]
    fn nf_examples() {
        assert!(nf_valid(&psi0(), 2).unwrap());
        let nested = Term::psi_reg(Term::Omega1, 1, psi0());
        assert!(!nf_valid(&nested, 2).unwrap());
        assert!(matches!(nf_valid(&Term::BigK, 2), Err(Error::NotACollapse)));
    }

    #[test]
    fn resolvent_errors() {
        let s = |v: &[usize]| OrdSeq(v.iter().map(|&k| Term::nat(k)).collect());
        let theta = ThetaSet::empty();
        assert!(matches!(
            resolvent_descriptor(0, &s(&[10, 20]), &s(&[5]), &Term::Zero, &theta, 1),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            resolvent_descriptor(0, &s(&[10, 20]), &s(&[11, 7]), &Term::Zero, &theta, 1),
            Err(Error::NotComponentwiseLess { index: 0 })
        ));
        let d = resolvent_descriptor(0, &s(&[10, 20]), &s(&[5, 7]), &Term::Zero, &theta, 1).unwrap();
        assert_eq!(d.classes.len(), 2);
        assert_eq!(d.classes[0].descriptor.k, 0);
        assert_eq!(d.classes[0].descriptor.seq, s(&[5, 20]));
        assert_eq!(d.classes[1].descriptor.k, 1);
        assert_eq!(d.classes[1].descriptor.seq, s(&[7]));
    }
}
