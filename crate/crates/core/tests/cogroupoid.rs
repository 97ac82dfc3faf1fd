use counit_core::cogroupoid::*;
use counit_core::freealg::NCPoly;
use counit_core::{Error, Field, FieldMatrix, RatFunc, Rational};

fn mat(rows: &[&[i64]]) -> FieldMatrix<Rational> {
    FieldMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect()).unwrap()
}

fn swap() -> FieldMatrix<Rational> {
    mat(&[&[0, 1], &[1, 0]])
}

#[test]
fn precheck() {
    let i2 = FieldMatrix::<Rational>::identity(2);
    assert!(nonvanishing_precheck(&i2, &swap()).unwrap());
    assert!(!nonvanishing_precheck(&i2, &FieldMatrix::identity(3)).unwrap());
    assert!(!nonvanishing_precheck(&i2, &mat(&[&[0, 1], &[-1, 0]])).unwrap());
    let eq = FieldMatrix::<RatFunc>::parse(&[vec!["0", "1"], vec!["-1/q", "0"]]).unwrap();
    let other = FieldMatrix::<RatFunc>::parse(&[vec!["0", "1"], vec!["-q", "0"]]).unwrap();
    assert!(nonvanishing_precheck(&eq, &other).unwrap());
}

#[test]
fn mismatched_sizes_collapse() {
    let a = BEFAlgebra::build(FieldMatrix::<Rational>::identity(2), FieldMatrix::identity(3), 3).unwrap();
    assert!(a.is_zero());
    let b = BEFAlgebra::build(FieldMatrix::<Rational>::identity(2), swap(), 4).unwrap();
    assert!(!b.is_zero());
    assert_eq!((b.rows(), b.cols()), (2, 2));
}

#[test]
fn rejects_small_forms() {
    let one = FieldMatrix::<Rational>::identity(1);
    assert!(matches!(BEFAlgebra::build(one, swap(), 2), Err(Error::SizeTooSmall(1))));
}

#[test]
fn axioms_for_identity_and_swap() {
    let cg = Cogroupoid::build(vec![FieldMatrix::identity(2), swap()], 6).unwrap();
    let report = cg.verify_axioms(2).unwrap();
    for c in &report.checks {
        assert!(c.passed, "{}: {:?}", c.name, c.detail);
        assert!(c.checked > 0, "{}", c.name);
    }
    assert!(report.get("coassociativity").is_some());
}

#[test]
fn axioms_with_a_collapsed_pair() {
    let cg = Cogroupoid::build(vec![FieldMatrix::<Rational>::identity(2), FieldMatrix::identity(3)], 4).unwrap();
    assert!(cg.algebra(0, 1).is_zero() && cg.algebra(1, 0).is_zero());
    let r = cg.verify_axioms(1).unwrap();
    assert!(r.all_passed(), "{:?}", r.checks);
}

#[test]
fn antipode_on_generators() {
    let cg = Cogroupoid::build(vec![FieldMatrix::identity(2), swap()], 4).unwrap();
    // S_{I,P}(u) = (u^{PI})^t P, so S(u_11) = u_12^{PI}... entry (1,1) of u^t P is u_21.
    let s = cg.antipode(0, 1, &cg.algebra(0, 1).u(0, 0)).unwrap();
    assert_eq!(s, cg.algebra(1, 0).u(1, 0));
    let one = cg.antipode(0, 1, &NCPoly::one()).unwrap();
    assert_eq!(one, NCPoly::one());
}

#[test]
fn transport_diagrams_commute() {
    let cg = Cogroupoid::build(vec![FieldMatrix::identity(2), swap()], 8).unwrap();
    for (e, f) in [(0, 1), (1, 0), (0, 0)] {
        let report = check_transport_diagrams(&cg, e, f, 1).unwrap();
        assert_eq!(report.checks.len(), 4);
        for c in &report.checks {
            assert!(c.passed, "({e},{f}) {}: {:?}", c.name, c.detail);
        }
    }
}

#[test]
fn transport_needs_equal_traces() {
    let cg = Cogroupoid::build(vec![FieldMatrix::identity(2), mat(&[&[0, 1], &[-1, 0]])], 4).unwrap();
    assert!(matches!(check_transport_diagrams(&cg, 0, 1, 1), Err(Error::TraceMismatch(_, _))));
}

#[test]
fn transport_between_q_forms() {
    let eq = FieldMatrix::<RatFunc>::parse(&[vec!["0", "1"], vec!["-1/q", "0"]]).unwrap();
    let other = FieldMatrix::<RatFunc>::parse(&[vec!["0", "1"], vec!["-q", "0"]]).unwrap();
    let cg = Cogroupoid::build(vec![eq, other], 6).unwrap();
    assert!(!cg.algebra(0, 1).is_zero());
    assert!(cg.verify_axioms(1).unwrap().all_passed());
    assert!(check_transport_diagrams(&cg, 0, 1, 1).unwrap().all_passed());
}
