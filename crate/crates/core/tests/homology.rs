use counit_core::homology::*;
use counit_core::resolution::{build_counit_resolution, FreeYDComplex};
use counit_core::scalar::Zero;
use counit_core::{BilinearFormHopf, Character, Error, Field, FieldMatrix, RatFunc, Rational};

fn slq2() -> BilinearFormHopf<RatFunc> {
    BilinearFormHopf::build(FieldMatrix::parse(&[vec!["0", "1"], vec!["-1/q", "0"]]).unwrap(), 4).unwrap()
}

fn rational(rows: &[&[i64]]) -> BilinearFormHopf<Rational> {
    let m = FieldMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect()).unwrap();
    BilinearFormHopf::build(m, 4).unwrap()
}

fn resolution<F: Field>(h: &BilinearFormHopf<F>) -> FreeYDComplex<F> {
    build_counit_resolution(h).unwrap()
}

fn phi_squared<F: Field>(h: &BilinearFormHopf<F>) -> Character<F> {
    h.char_mul(&h.sovereign(), &h.sovereign())
}

#[test]
fn twists() {
    let h = slq2();
    let eps = h.counit_character();
    let phi = h.sovereign();
    assert_eq!(twist_gamma(&h, &eps, &eps).unwrap(), eps);
    assert_eq!(twist_gamma(&h, &phi, &eps).unwrap(), phi);
    let expected = FieldMatrix::parse(&[vec!["-1/q", "0"], vec!["0", "-q"]]).unwrap();
    assert_eq!(twist_gamma(&h, &eps, &phi).unwrap().matrix(), &expected);
}

#[test]
fn left_action_of_twisted_module_is_gamma() {
    // a → x = a_(2) x S(a_(1)) on _α k_β is scalar multiplication by γ.
    let h = slq2();
    let alpha = phi_squared(&h);
    let beta = h.sovereign();
    let gamma = twist_gamma(&h, &alpha, &beta).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            let co = h.comultiply(&h.u(i, j)).unwrap();
            let mut acc = RatFunc::zero();
            for (legs, c) in co.terms() {
                let s = h.antipode(&counit_core::NCPoly::word(legs[0].clone())).unwrap();
                let mut t = beta.eval(&s);
                t *= &alpha.eval_word(&legs[1]);
                t *= c;
                acc += &t;
            }
            assert_eq!(acc, gamma.matrix()[(i, j)]);
        }
    }
}

#[test]
fn specialized_boundaries() {
    let o = rational(&[&[1, 0], &[0, 1]]);
    let fc = specialize_resolution(&resolution(&o), &o.counit_character()).unwrap();
    assert!(fc.maps[0].is_zero());
    assert_eq!(fc.dims(), [1, 4, 4, 1]);

    let h = slq2();
    let fc = specialize_resolution(&resolution(&h), &h.counit_character()).unwrap();
    assert!(!fc.maps[0].is_zero());
    assert!(fc.composites_vanish().unwrap());
    let fc = specialize_resolution(&resolution(&h), &phi_squared(&h)).unwrap();
    assert!(fc.composites_vanish().unwrap());
}

#[test]
fn worked_homology_dimensions() {
    let o = rational(&[&[1, 0], &[0, 1]]);
    let eps = CharacterBimodule::new(o.counit_character(), o.counit_character());
    assert_eq!(homology_dims(&o, &resolution(&o), &eps).unwrap().dims, [1, 1, 1, 1]);
    assert_eq!(closed_form_dims(&o, &eps).unwrap().dims, [1, 1, 1, 1]);

    let h = slq2();
    let c = resolution(&h);
    let eps = CharacterBimodule::new(h.counit_character(), h.counit_character());
    assert_eq!(homology_dims(&h, &c, &eps).unwrap().dims, [1, 1, 0, 0]);
    let m = CharacterBimodule::new(phi_squared(&h), h.counit_character());
    assert_eq!(homology_dims(&h, &c, &m).unwrap().dims[3], 1);
    // The smoothness witness: H_3(_Φ k_{Φ^{-1}}) = k.
    let m = CharacterBimodule::new(h.sovereign(), h.char_inv(&h.sovereign()));
    assert_eq!(closed_form_dims(&h, &m).unwrap().dims[3], 1);
    assert_eq!(homology_dims(&h, &c, &m).unwrap().dims[3], 1);
}

fn bimodules<F: Field>(h: &BilinearFormHopf<F>) -> Vec<CharacterBimodule<F>> {
    let eps = h.counit_character();
    let phi = h.sovereign();
    let phi_inv = h.char_inv(&phi);
    vec![
        CharacterBimodule::new(eps.clone(), eps.clone()),
        CharacterBimodule::new(phi_squared(h), eps.clone()),
        CharacterBimodule::new(phi.clone(), phi_inv.clone()),
        CharacterBimodule::new(eps.clone(), phi.clone()),
        CharacterBimodule::new(phi_inv, phi),
    ]
}

#[test]
fn two_paths_agree() {
    let h = slq2();
    let c = resolution(&h);
    for m in bimodules(&h) {
        assert_eq!(homology_dims(&h, &c, &m).unwrap().dims, closed_form_dims(&h, &m).unwrap().dims);
    }
    for o in [rational(&[&[1, 0], &[0, 1]]), rational(&[&[1, 1], &[0, 1]]), rational(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[-1, 0, 0, 0]])] {
        let c = resolution(&o);
        for m in bimodules(&o) {
            assert_eq!(homology_dims(&o, &c, &m).unwrap().dims, closed_form_dims(&o, &m).unwrap().dims);
        }
    }
}

#[test]
fn h3_condition() {
    let h = slq2();
    let c = resolution(&h);
    for m in bimodules(&h) {
        let expected = usize::from(m.alpha == h.char_mul(&m.beta, &phi_squared(&h)));
        assert_eq!(homology_dims(&h, &c, &m).unwrap().dims[3], expected);
    }
}

#[test]
fn cohomology_and_duality() {
    let o = rational(&[&[1, 0], &[0, 1]]);
    let co = resolution(&o);
    let eps = CharacterBimodule::new(o.counit_character(), o.counit_character());
    assert_eq!(ext_dims(&o, &co, &eps).unwrap(), [1, 1, 1, 1]);
    assert!(poincare_check(&o, &co, &eps).unwrap().passed());

    let h = slq2();
    let c = resolution(&h);
    for m in bimodules(&h) {
        let report = poincare_check(&h, &c, &m).unwrap();
        assert!(report.passed(), "{report:?}");
    }
    let eps = CharacterBimodule::new(h.counit_character(), h.counit_character());
    let report = poincare_check(&h, &c, &eps).unwrap();
    assert_eq!(report.cohomology, [1, 1, 0, 0]);
}

#[test]
fn bialgebra_cohomology_generic() {
    let h = slq2();
    let b = bialgebra_cohomology(&h, &resolution(&h), false).unwrap();
    assert_eq!(b.dims, [1, 0, 0, 1]);
    assert_eq!(b.hom_dims, [1, 1, 1, 1]);

    let o = rational(&[&[1, 0], &[0, 1]]);
    assert!(is_generic(&o).unwrap());
    let b = bialgebra_cohomology(&o, &resolution(&o), false).unwrap();
    assert_eq!(b.dims, [1, 0, 0, 1]);
}

#[test]
fn bialgebra_cohomology_refuses_roots_of_unity() {
    // tr(E^{-1}E^t) = 1, so q is a primitive cube root of unity.
    let h = rational(&[&[1, 1], &[0, 1]]);
    assert!(!is_generic(&h).unwrap());
    assert!(matches!(bialgebra_cohomology(&h, &resolution(&h), false), Err(Error::NotGeneric(_))));
}

#[test]
fn bar_oracle_matches_resolution() {
    let o = rational(&[&[1, 0], &[0, 1]]);
    let r = tor_bar_oracle(&o, &o.counit_character(), 2, 4, 1_000_000).unwrap();
    assert_eq!(r.dims, vec![1, 1, 1]);
    assert!(r.stabilized_at.iter().all(Option::is_some));

    let h = slq2();
    let r = tor_bar_oracle(&h, &h.counit_character(), 2, 4, 1_000_000).unwrap();
    assert_eq!(r.dims, vec![1, 1, 0]);
    let eps = CharacterBimodule::new(h.counit_character(), h.counit_character());
    assert_eq!(&homology_dims(&h, &resolution(&h), &eps).unwrap().dims[..3], r.dims.as_slice());
}
