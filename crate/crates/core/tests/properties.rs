use std::sync::OnceLock;

use counit_core::freealg::{NCPoly, Word};
use counit_core::linalg::{SparseVec, Echelon};
use counit_core::scalar::{QPoly, Zero};
use counit_core::{BilinearFormHopf, Field, FieldMatrix, RatFunc, Rational};
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

fn symplectic() -> &'static BilinearFormHopf<Rational> {
    static H: OnceLock<BilinearFormHopf<Rational>> = OnceLock::new();
    H.get_or_init(|| {
        let e = FieldMatrix::from_rows(vec![
            vec![Rational::from_i64(0), Rational::from_i64(1)],
            vec![Rational::from_i64(-1), Rational::from_i64(0)],
        ])
        .unwrap();
        BilinearFormHopf::build(e, 8).unwrap()
    })
}

fn orthogonal() -> &'static BilinearFormHopf<Rational> {
    static H: OnceLock<BilinearFormHopf<Rational>> = OnceLock::new();
    H.get_or_init(|| BilinearFormHopf::build(FieldMatrix::identity(2), 8).unwrap())
}

fn hopf(which: bool) -> &'static BilinearFormHopf<Rational> {
    if which {
        symplectic()
    } else {
        orthogonal()
    }
}

fn poly(max_len: usize) -> impl Strategy<Value = NCPoly<Rational>> {
    prop::collection::vec((prop::collection::vec(0u8..4, 0..=max_len), -3i64..=3), 0..4).prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (letters, c) in terms {
            p.add_scaled(&NCPoly::word(Word::from_slice(&letters)), &Rational::from_i64(c));
        }
        p
    })
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| QPoly::from_coeffs(c.into_iter().map(Rational::from_i64).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent(which: bool, p in poly(4)) {
        let alg = hopf(which).algebra();
        let r = alg.reduce(&p);
        prop_assert_eq!(alg.reduce(&r), r.clone());
        for (w, _) in r.terms() {
            prop_assert!(!alg.is_reducible(w));
        }
    }

    #[test]
    fn normal_form_is_multiplicative(which: bool, p in poly(3), q in poly(3)) {
        let alg = hopf(which).algebra();
        prop_assert_eq!(alg.reduce(&p.mul(&q)), alg.mul(&alg.reduce(&p), &alg.reduce(&q)));
    }

    #[test]
    fn reduction_order_does_not_matter(which: bool, p in poly(4), seed: u64) {
        let alg = hopf(which).algebra();
        let mut rng = StdRng::seed_from_u64(seed);
        let mut choose = |n: usize| rng.gen_range(0..n.max(1));
        prop_assert_eq!(alg.reduce_with_strategy(&p, &mut choose), alg.reduce(&p));
    }

    #[test]
    fn comultiplication_and_counit_are_multiplicative(which: bool, p in poly(2), q in poly(2)) {
        let h = hopf(which);
        let alg = h.algebra();
        let pq = alg.mul(&p, &q);
        let lhs = h.comultiply(&pq).unwrap();
        let rhs = h.comultiply(&p).unwrap().mul_in(&h.comultiply(&q).unwrap(), alg);
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(h.counit(&pq), h.counit(&p) * h.counit(&q));
    }

    #[test]
    fn antipode_is_a_convolution_inverse(which: bool, p in poly(3)) {
        let h = hopf(which);
        let alg = h.algebra();
        let expected = alg.reduce(&NCPoly::constant(h.counit(&p)));
        let t = h.comultiply(&p).unwrap();
        let mut left = NCPoly::zero();
        let mut right = NCPoly::zero();
        for (legs, c) in t.terms() {
            let (a, b) = (NCPoly::word(legs[0].clone()), NCPoly::word(legs[1].clone()));
            left.add_scaled(&alg.mul(&h.antipode(&a).unwrap(), &b), c);
            right.add_scaled(&alg.mul(&a, &h.antipode(&b).unwrap()), c);
        }
        prop_assert_eq!(left, expected.clone());
        prop_assert_eq!(right, expected);
    }

    #[test]
    fn echelon_rank_matches_dense_rank(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 1..6)) {
        let dense = FieldMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect()).unwrap();
        let mut ech = Echelon::new();
        for r in &rows {
            ech.insert(SparseVec::from_entries(r.iter().enumerate().map(|(i, &x)| (i, Rational::from_i64(x))).collect()));
        }
        prop_assert_eq!(ech.rank(), dense.rank());
        let pivots = ech.pivots();
        prop_assert_eq!(ech.rank_below(6), ech.rank());
        prop_assert_eq!(ech.rank_below(0), 0);
        prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rational_functions_form_a_field(a in qpoly(), b in qpoly(), c in qpoly()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let x = RatFunc::new(a, b.clone()).unwrap();
        let y = RatFunc::new(c, b).unwrap();
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() + y.clone()) - y.clone(), x.clone());
        prop_assert_eq!(x.div(&y).unwrap() * y.clone(), x.clone());
        prop_assert_eq!(RatFunc::parse(&x.to_string()).unwrap(), x);
        prop_assert!(!y.is_zero());
    }
}
