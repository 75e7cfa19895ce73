use std::sync::OnceLock;

use proptest::prelude::*;

use ordkit::arith::{add, normalize};
use ordkit::check::formula_corpus;
use ordkit::mahlo::{bullet_sub, end_segment, mh_subsumes, seq_less, MhDescriptor};
use ordkit::order::{cmp, enumerate_below};
use ordkit::syntax::{parse_formula, parse_term, print_formula, print_term};
use ordkit::term::{kset, validate};
use ordkit::{OrdSeq, Term, ThetaSet};

fn pool() -> &'static [Term] {
    static POOL: OnceLock<Vec<Term>> = OnceLock::new();
    POOL.get_or_init(|| enumerate_below(&Term::BigI, 4).unwrap())
}

fn pool_term() -> impl Strategy<Value = Term> {
    (0..pool().len()).prop_map(|i| pool()[i].clone())
}

fn raw_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        Just(Term::Omega1),
        Just(Term::BigK),
        Just(Term::BigI),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::wexp),
            inner.clone().prop_map(Term::reg_succ),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::veblen(a, b)),
            (inner.clone(), 1..3u32, inner.clone()).prop_map(|(k, n, a)| Term::psi_reg(k, n, a)),
            (1..3u32, inner.clone()).prop_map(|(n, a)| Term::psi_i(n, a)),
            prop::collection::vec(inner.clone(), 2..4).prop_map(Term::sum),
            (prop::collection::vec(inner.clone(), 0..3), inner.clone(), inner).prop_map(|(th, s, a)| {
                Term::psi_k(1, OrdSeq(vec![s.clone(), s]), ThetaSet::from_vec_unchecked(th), a)
            }),
        ]
    })
}

fn nat_seq(len: usize) -> impl Strategy<Value = OrdSeq> {
    prop::collection::vec(0..6usize, len).prop_map(|v| OrdSeq(v.into_iter().map(Term::nat).collect()))
}

proptest! {
    #[test]
    fn validate_is_total_and_deterministic(t in raw_term()) {
        let a = validate(&t, 2);
        let b = validate(&t, 2);
        prop_assert_eq!(a.is_ok(), b.is_ok());
        prop_assert_eq!(a.first().map(|v| v.reason.clone()), b.first().map(|v| v.reason.clone()));
    }

    #[test]
    fn kset_is_closed_under_parameters(t in raw_term()) {
        let ks = kset(&t);
        for s in &ks {
            for u in &kset(s) {
                prop_assert!(ks.contains(u));
            }
        }
    }

    #[test]
    fn valid_terms_normalize_idempotently(t in raw_term()) {
        if validate(&t, 2).is_ok() {
            if let Ok(n) = normalize(&t) {
                prop_assert_eq!(normalize(&n).unwrap(), n.clone());
                prop_assert!(cmp(&t, &n).unwrap().is_eq());
            }
        }
    }

    #[test]
    fn comparison_is_antisymmetric(a in pool_term(), b in pool_term()) {
        let ab = cmp(&a, &b).unwrap();
        prop_assert_eq!(ab.reverse(), cmp(&b, &a).unwrap());
        prop_assert_eq!(ab.is_eq(), a == b);
    }

    #[test]
    fn addition_is_associative(a in pool_term(), b in pool_term(), c in pool_term()) {
        let l = add(&add(&a, &b).unwrap(), &c).unwrap();
        let r = add(&a, &add(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn addition_is_right_monotone(a in pool_term(), b in pool_term(), c in pool_term()) {
        if cmp(&b, &c).unwrap().is_lt() {
            prop_assert!(cmp(&add(&a, &b).unwrap(), &add(&a, &c).unwrap()).unwrap().is_lt());
        }
    }

    #[test]
    fn printing_round_trips(t in pool_term()) {
        prop_assert_eq!(parse_term(&print_term(&t)).unwrap(), t.clone());
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<Term>(&json).unwrap(), t);
    }

    #[test]
    fn end_segments_compose(s in nat_seq(5), i in 0..=5usize, j in 0..=5usize) {
        prop_assume!(i + j <= 5);
        let once = end_segment(&end_segment(&s, i).unwrap(), j).unwrap();
        prop_assert_eq!(once, end_segment(&s, i + j).unwrap());
    }

    #[test]
    fn bullet_keeps_length(nu in nat_seq(4), alpha in nat_seq(4), i in 0..4usize) {
        prop_assert_eq!(bullet_sub(&nu, &alpha, i).unwrap().0.len(), 4 - i);
    }

    #[test]
    fn seq_less_is_a_strict_order(a in nat_seq(3), b in nat_seq(3), c in nat_seq(3)) {
        prop_assert!(!seq_less(&a, &a).unwrap());
        if seq_less(&a, &b).unwrap() && seq_less(&b, &c).unwrap() {
            prop_assert!(seq_less(&a, &c).unwrap());
        }
    }

    #[test]
    fn subsumption_is_a_preorder(a in nat_seq(2), b in nat_seq(2), c in nat_seq(2)) {
        let d = |s: OrdSeq| MhDescriptor::new(0, 1, 2, s, ThetaSet::empty()).unwrap();
        let (da, db, dc) = (d(a), d(b), d(c));
        prop_assert!(mh_subsumes(&da, &da).unwrap());
        if mh_subsumes(&da, &db).unwrap() && mh_subsumes(&db, &dc).unwrap() {
            prop_assert!(mh_subsumes(&da, &dc).unwrap());
        }
    }

    #[test]
    fn formulas_round_trip(seed in any::<u64>()) {
        for f in formula_corpus(seed, 5, 4) {
            let text = print_formula(&f);
            prop_assert_eq!(parse_formula(&text).unwrap(), f, "{}", text);
        }
    }
}
