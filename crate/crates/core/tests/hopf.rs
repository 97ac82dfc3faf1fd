use counit_core::freealg::{Alphabet, NCPoly, PresentedAlgebra, Word};
use counit_core::hopf::{bilinear_relations, BilinearFormHopf};
use counit_core::{Error, Field, FieldMatrix, RatFunc, Rational};

fn e_q() -> FieldMatrix<RatFunc> {
    FieldMatrix::parse(&[vec!["0", "1"], vec!["-1/q", "0"]]).unwrap()
}

fn identity(n: usize) -> FieldMatrix<Rational> {
    FieldMatrix::identity(n)
}

#[test]
fn slq2_slice_dims() {
    let h = BilinearFormHopf::build(e_q(), 3).unwrap();
    assert_eq!(&h.algebra().filtration_dims()[..3], &[1, 4, 9]);
    assert_eq!(h.algebra().filtration_basis(1).unwrap().len(), 4);
    assert_eq!(h.algebra().filtration_basis(2).unwrap().len(), 9);
    let low = BilinearFormHopf::build(e_q(), 2).unwrap();
    assert_eq!(low.algebra().filtration_dims(), [1, 4, 9]);
}

#[test]
fn orthogonal_dims_match_q_minus_one() {
    let a = BilinearFormHopf::build(identity(2), 4).unwrap();
    let e_minus = FieldMatrix::<Rational>::parse(&[vec!["0", "1"], vec!["1", "0"]]).unwrap();
    let b = BilinearFormHopf::build(e_minus, 4).unwrap();
    assert_eq!(a.algebra().filtration_dims(), b.algebra().filtration_dims());
}

#[test]
fn slq2_dims_are_squares() {
    let h = BilinearFormHopf::build(e_q(), 6).unwrap();
    let dims: Vec<usize> = (0..=5).map(|d| (d + 1) * (d + 1)).collect();
    assert_eq!(&h.algebra().filtration_dims()[..=5], dims.as_slice());
}

#[test]
fn relations_reduce_to_zero() {
    let h = BilinearFormHopf::build(e_q(), 4).unwrap();
    for r in h.algebra().relations() {
        assert!(h.algebra().normal_form(r).unwrap().is_zero());
    }
}

#[test]
fn antipode_on_slq2_generators() {
    let h = BilinearFormHopf::build(e_q(), 3).unwrap();
    let q = RatFunc::q();
    let (a, b, c, d) = (h.u(0, 0), h.u(0, 1), h.u(1, 0), h.u(1, 1));
    assert_eq!(h.antipode(&a).unwrap(), d);
    assert_eq!(h.antipode(&b).unwrap(), b.scale(&-q.clone()));
    assert_eq!(h.antipode(&c).unwrap(), c.scale(&-q.inv().unwrap()));
    assert_eq!(h.antipode(&d).unwrap(), a);
    assert_eq!(h.antipode(&NCPoly::one()).unwrap(), NCPoly::one());
}

#[test]
fn orthogonal_antipode_is_transpose() {
    let h = BilinearFormHopf::build(identity(2), 3).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(h.antipode(&h.u(i, j)).unwrap(), h.u(j, i));
            let expected = if i == j { Rational::from_i64(1) } else { Rational::from_i64(0) };
            assert_eq!(h.counit(&h.u(i, j)), expected);
        }
    }
}

#[test]
fn coproduct_of_generator() {
    let h = BilinearFormHopf::build(e_q(), 3).unwrap();
    let delta = h.comultiply(&h.u(0, 0)).unwrap();
    let (a, b, c) = (Word::letter(0), Word::letter(1), Word::letter(2));
    assert_eq!(delta.len(), 2);
    assert_eq!(delta.coeff(&[a.clone(), a]), RatFunc::from_i64(1));
    assert_eq!(delta.coeff(&[b, c]), RatFunc::from_i64(1));
    let unit = h.comultiply(&NCPoly::one()).unwrap();
    assert_eq!(unit.coeff(&[Word::empty(), Word::empty()]), RatFunc::from_i64(1));
}

#[test]
fn hopf_axioms_slq2() {
    let h = BilinearFormHopf::build(e_q(), 4).unwrap();
    let report = h.verify_hopf_axioms(2).unwrap();
    assert!(report.all_passed(), "{report:?}");
    assert!(h.s_squared_is_conjugation());
}

#[test]
fn hopf_axioms_orthogonal_three() {
    let h = BilinearFormHopf::build(identity(3), 3).unwrap();
    let report = h.verify_hopf_axioms(2).unwrap();
    assert!(report.all_passed(), "{report:?}");
}

#[test]
fn corrupted_antipode_fails() {
    let h = BilinearFormHopf::build(e_q(), 4).unwrap();
    let transpose: Vec<NCPoly<RatFunc>> = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| h.u(j, i))
        .collect();
    let bad = h.with_antipode_images(transpose);
    let report = bad.verify_hopf_axioms(2).unwrap();
    assert!(!report.get("antipode-left").unwrap().passed);
}

#[test]
fn characters() {
    let h = BilinearFormHopf::build(e_q(), 3).unwrap();
    let phi = h.character(FieldMatrix::parse(&[vec!["-q", "0"], vec!["0", "-1/q"]]).unwrap()).unwrap();
    assert_eq!(phi, h.sovereign());
    assert_eq!(h.char_mul(&phi, &h.char_inv(&phi)), h.counit_character());
    assert_eq!(h.char_mul(&h.counit_character(), &phi), phi);
    let not = h.character(FieldMatrix::parse(&[vec!["2", "0"], vec!["0", "1"]]).unwrap());
    assert!(matches!(not, Err(Error::NotACharacter(_))));
    let o = BilinearFormHopf::build(identity(3), 2).unwrap();
    assert_eq!(o.sovereign(), o.counit_character());
}

#[test]
fn modular_maps_slq2() {
    let h = BilinearFormHopf::build(e_q(), 4).unwrap();
    let m = h.modular_maps();
    assert!(m.s_theta_is_sigma);
    let q2 = RatFunc::q_pow(2);
    assert_eq!(m.sigma[0], h.u(0, 0).scale(&q2));
    assert_eq!(m.sigma[1], h.u(0, 1));
    assert_eq!(m.sigma[2], h.u(1, 0));
    assert_eq!(m.sigma[3], h.u(1, 1).scale(&RatFunc::q_pow(-2)));
    let o = BilinearFormHopf::build(identity(2), 3).unwrap();
    let mo = o.modular_maps();
    assert!((0..4).all(|k| mo.sigma[k] == NCPoly::letter(k as u8)));
}

#[test]
fn build_errors() {
    assert!(matches!(BilinearFormHopf::build(identity(1), 2), Err(Error::SizeTooSmall(1))));
    let singular = FieldMatrix::<Rational>::parse(&[vec!["1", "1"], vec!["1", "1"]]).unwrap();
    assert!(matches!(BilinearFormHopf::build(singular, 2), Err(Error::SingularMatrix)));
}

#[test]
fn relations_are_entries_of_both_matrices() {
    let rels = bilinear_relations(&identity(3), &identity(3)).unwrap();
    assert_eq!(rels.len(), 18);
    let alg = PresentedAlgebra::complete(Alphabet::matrix("u", 3, 3), rels, 2).unwrap();
    assert_eq!(alg.filtration_dims()[1], 9);
}
