//! Concrete values of the collapsing bookkeeping, checked against terms
//! assembled by hand from raw constructors.

use ordkit::arith::{add, veblen};
use ordkit::bounds::{lower_mahlo, predicative_elim, theorem1_trace, theorem2_trace, BoundState};
use ordkit::hull::resolvent_descriptor;
use ordkit::mahlo::abgam;
use ordkit::order::{cmp, lt};
use ordkit::syntax::parse_term;
use ordkit::{Error, OrdSeq, Term, ThetaSet};

fn i_plus_1() -> Term {
    Term::sum(vec![Term::BigI, Term::One])
}

fn tower_by_hand(m: usize, base: Term) -> Term {
    (0..m).fold(base, |t, _| Term::wexp(t))
}

fn b_by_hand(n: u32) -> Term {
    Term::psi_reg(
        Term::reg_succ(Term::BigK),
        n,
        tower_by_hand(n as usize - 1, i_plus_1()),
    )
}

#[test]
fn abgam_one_two() {
    let ab = abgam(1, 2).unwrap();
    let b = b_by_hand(1);
    let a = Term::veblen(b.clone(), b.clone());
    assert_eq!(ab.b, b);
    assert_eq!(ab.a, a);
    assert_eq!(ab.gamma[2], Term::sum(vec![Term::BigI, Term::One, Term::One]));
    // a is additively principal, so I+2+a = I+a.
    assert_eq!(ab.gamma[1], Term::sum(vec![Term::BigI, a.clone()]));
    assert_eq!(ab.gamma[0], Term::sum(vec![Term::BigI, a.clone(), a]));
    assert_eq!(ab.alpha_vec[0], OrdSeq(vec![ab.gamma[0].clone(), ab.gamma[1].clone()]));
}

#[test]
fn veblen_of_b_absorbs_k() {
    for n in 1..=4 {
        let b = b_by_hand(n);
        let a = veblen(&b, &b).unwrap();
        assert!(cmp(&a, &b).unwrap().is_gt());
        assert_eq!(add(&Term::BigK, &a).unwrap(), a);
        assert!(lt(&b, &Term::k_plus()).unwrap());
        assert!(lt(&Term::BigK, &b).unwrap());
    }
}

#[test]
fn lowering_composes_to_gamma_zero() {
    for n in 1..=4 {
        for big_n in 1..=3usize {
            let ab = abgam(n, big_n).unwrap();
            let mut s = BoundState {
                height: ab.a.clone(),
                cut_rank: Term::BigK,
                hull_stage: ab.gamma[big_n].clone(),
                theory: big_n as i32,
                n,
                note: String::new(),
                side_conditions: Vec::new(),
            };
            for _ in 0..big_n {
                s = lower_mahlo(&s, &Term::BigK, big_n).unwrap();
            }
            assert_eq!(s.theory, 0);
            assert_eq!(s.height, ab.a);
            assert_eq!(s.hull_stage, ab.gamma[0]);
            assert!(matches!(lower_mahlo(&s, &Term::BigK, big_n), Err(Error::TheoryFloor(0))));
        }
    }
}

#[test]
fn first_chain_end_state() {
    let trace = theorem1_trace(1, 0, 2).unwrap();
    let last = trace.last().unwrap();
    let b4 = b_by_hand(4);
    assert_eq!(last.n, 4);
    assert_eq!(last.theory, 0);
    assert_eq!(last.cut_rank, Term::BigK);
    assert_eq!(last.height, Term::veblen(b4.clone(), b4));
    assert_eq!(trace.len(), 6);
}

#[test]
fn second_chain_ends_at_w1_collapse() {
    let trace = theorem2_trace(2, 0, 2).unwrap();
    let last = trace.last().unwrap();
    let i2w = Term::sum(vec![Term::BigI, Term::BigI, Term::omega()]);
    let expected = Term::psi_reg(Term::Omega1, last.n, tower_by_hand(3, i2w));
    assert_eq!(last.height, expected);
    assert!(trace.iter().all(BoundState::all_conditions_hold));
}

#[test]
fn regular_elimination_step() {
    let s = BoundState {
        height: Term::sum(vec![Term::BigI, Term::BigI]),
        cut_rank: i_plus_1(),
        hull_stage: Term::Zero,
        theory: 2,
        n: 4,
        note: String::new(),
        side_conditions: Vec::new(),
    };
    let out = predicative_elim(&s, &Term::Zero, &Term::BigI).unwrap();
    assert_eq!(out.height, Term::wexp(s.height.clone()));
    assert_eq!(out.cut_rank, Term::BigI);
}

#[test]
fn parsed_collapse_is_b_one() {
    assert_eq!(parse_term("psi(K+;1; tower(0, I+1))").unwrap(), b_by_hand(1));
}

#[test]
fn resolvent_shape() {
    let s = |v: &[usize]| OrdSeq(v.iter().map(|&k| Term::nat(k)).collect());
    let d = resolvent_descriptor(1, &s(&[10, 20]), &s(&[5, 7]), &Term::omega(), &ThetaSet::empty(), 2).unwrap();
    assert_eq!(d.base_level, 1);
    assert_eq!(d.classes[0].descriptor.k, 1);
    assert_eq!(d.classes[0].descriptor.big_n, 3);
    assert_eq!(d.classes[1].descriptor.seq, s(&[7]));
}
