//! The length-three free Yetter–Drinfeld resolution of the counit,
//!
//! `0 → k⊠A --φ1--> (V*⊗V)⊠A --φ2--> (V*⊗V)⊠A --φ3--> k⊠A --ε--> k → 0`,
//!
//! with basis `e_i^* ⊗ e_j` of `V* ⊗ V` at index `i·n + j`.

mod bar;
mod exactness;

pub use bar::{bar_truncation, BarTruncation};
pub use exactness::{exactness_witness, ExactnessCertificate, ExactnessStatus, Position};

use crate::comod::{
    adjunction_lift, delta_map, evaluation_map, phi_map, phi_v1, phi_v2, Comodule, ComoduleMorphism, FreeYDModule,
    YdMap,
};
use crate::error::{Error, Result};
use crate::freealg::NCPoly;
use crate::hopf::{AxiomCheck, BilinearFormHopf};
use crate::scalar::{Field, FieldMatrix};

/// The resolution: modules `[k⊠A, (V*⊗V)⊠A, (V*⊗V)⊠A, k⊠A]` and the maps
/// between consecutive ones.
#[derive(Clone, Debug)]
pub struct FreeYDComplex<F> {
    modules: [FreeYDModule<F>; 4],
    maps: [YdMap<F>; 3],
}

impl<F: Field> FreeYDComplex<F> {
    fn from_maps(h: &BilinearFormHopf<F>, maps: [YdMap<F>; 3]) -> Result<Self> {
        let end = FreeYDModule::new(Comodule::end_fundamental(h)?);
        Ok(FreeYDComplex {
            modules: [FreeYDModule::coadjoint(), end.clone(), end, FreeYDModule::coadjoint()],
            maps,
        })
    }

    pub fn modules(&self) -> &[FreeYDModule<F>; 4] {
        &self.modules
    }

    pub fn maps(&self) -> &[YdMap<F>; 3] {
        &self.maps
    }

    /// `φ_k` for `k ∈ {1, 2, 3}`.
    pub fn phi(&self, k: usize) -> &YdMap<F> {
        &self.maps[k - 1]
    }

    /// The same complex with the non-identity part of `φ2` negated, which
    /// breaks both composites through `φ2`.
    pub fn with_sign_flipped_phi2(mut self) -> Self {
        let id = YdMap::identity(self.maps[1].rows());
        let rest = self.maps[1].minus(&id);
        self.maps[1] = id.minus(&rest);
        self
    }

    /// `ε` applied to the coefficient of `φ3(e ⊗ x)`, i.e. the map to `k`.
    fn augmentation_of(&self, h: &BilinearFormHopf<F>, x: &YdMap<F>) -> Vec<F> {
        (0..x.cols()).map(|i| h.counit(x.entry(0, i))).collect()
    }

    /// Composites `φ2∘φ1`, `φ3∘φ2` and `ε∘φ3` on `e ⊗ w` for normal words of
    /// degree `≤ d`, and colinearity of each `φ_k` on module generators.
    pub fn check_complex_and_morphisms(&self, h: &BilinearFormHopf<F>, d: usize) -> Result<ComplexReport> {
        let alg = h.algebra();
        alg.check_degree(d + 2)?;
        let words = alg.basis_up_to(d)?;
        let mut checks = Vec::new();
        let pairs = [("phi2.phi1", 1usize, 0usize), ("phi3.phi2", 2, 1)];
        for (name, second, first) in pairs {
            let comp = self.maps[second].compose(h, &self.maps[first])?;
            let mut failures = 0;
            let mut checked = 0;
            for w in &words {
                for i in 0..comp.cols() {
                    checked += 1;
                    let x = crate::comod::YdElement::basis(comp.cols(), i, NCPoly::word(w.clone()));
                    if !comp.apply(h, &x).is_zero() {
                        failures += 1;
                    }
                }
            }
            checks.push(AxiomCheck {
                name: name.into(),
                passed: failures == 0,
                checked,
                detail: (failures > 0).then(|| format!("{failures} nonzero images")),
            });
        }
        let mut failures = 0;
        let mut checked = 0;
        for w in &words {
            let x = NCPoly::word(w.clone());
            for i in 0..self.maps[2].cols() {
                checked += 1;
                let image = alg.mul(self.maps[2].entry(0, i), &x);
                if !h.counit(&image).is_zero() {
                    failures += 1;
                }
            }
        }
        checks.push(AxiomCheck {
            name: "eps.phi3".into(),
            passed: failures == 0,
            checked,
            detail: (failures > 0).then(|| format!("{failures} nonzero images")),
        });
        for k in 0..3 {
            let ok = self.maps[k].is_yd_morphism(h, &self.modules[k], &self.modules[k + 1], 0)?;
            checks.push(AxiomCheck {
                name: format!("phi{}-yd-morphism", k + 1),
                passed: ok,
                checked: self.maps[k].cols(),
                detail: None,
            });
        }
        Ok(ComplexReport { degree: d, checks })
    }

    /// Exact comparison of the coefficient matrices of two complexes.
    pub fn first_difference(&self, h: &BilinearFormHopf<F>, other: &FreeYDComplex<F>) -> Option<String> {
        for k in 0..3 {
            let (a, b) = (self.maps[k].reduced(h), other.maps[k].reduced(h));
            if a.rows() != b.rows() || a.cols() != b.cols() {
                return Some(format!("phi{} shape", k + 1));
            }
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    if a.entry(r, c) != b.entry(r, c) {
                        return Some(format!("phi{} entry ({}, {})", k + 1, r + 1, c + 1));
                    }
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ComplexReport {
    pub degree: usize,
    pub checks: Vec<AxiomCheck>,
}

impl ComplexReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn matrix_poly<F: Field>(m: &FieldMatrix<F>, i: usize, j: usize) -> NCPoly<F> {
    NCPoly::constant(m[(i, j)].clone())
}

/// `(L u R)_ij` as a polynomial of degree one.
fn sandwich_u<F: Field>(h: &BilinearFormHopf<F>, left: &FieldMatrix<F>, right: &FieldMatrix<F>, i: usize, j: usize) -> NCPoly<F> {
    let n = h.n();
    let mut p = NCPoly::zero();
    for a in 0..n {
        if left[(i, a)].is_zero() {
            continue;
        }
        for b in 0..n {
            let mut c = left[(i, a)].clone();
            c *= &right[(b, j)];
            p.add_scaled(&h.u(a, b), &c);
        }
    }
    p
}

/// The resolution from its closed formulas:
/// `φ1(1) = Σ e_i^*⊗e_j ⊗ ((E^tE^{-1})_ij − (E u E^{-t})_ij)`,
/// `φ2(e_i^*⊗e_j⊗x) = e_i^*⊗e_j⊗x + Σ e_k^*⊗e_l ⊗ E_jk (u E^{-t})_il x`,
/// `φ3(e_i^*⊗e_j⊗x) = (u_ij − δ_ij) x`.
pub fn build_counit_resolution<F: Field>(h: &BilinearFormHopf<F>) -> Result<FreeYDComplex<F>> {
    h.algebra().check_degree(3)?;
    let n = h.n();
    let e = h.e();
    let et_inv = e.transpose().inverse()?;
    let id = FieldMatrix::identity(n);
    let ete_inv = e.transpose().mul(h.e_inv())?;
    let phi1 = YdMap::from_fn(n * n, 1, |ij, _| {
        let (i, j) = (ij / n, ij % n);
        matrix_poly(&ete_inv, i, j).minus(&sandwich_u(h, e, &et_inv, i, j))
    });
    let phi2 = YdMap::from_fn(n * n, n * n, |kl, ij| {
        let (k, l, i, j) = (kl / n, kl % n, ij / n, ij % n);
        let mut p = sandwich_u(h, &id, &et_inv, i, l).scale(&e[(j, k)]);
        if kl == ij {
            p.add_assign(&NCPoly::one());
        }
        p
    });
    let phi3 = YdMap::from_fn(1, n * n, |_, ij| {
        let (i, j) = (ij / n, ij % n);
        let mut p = h.u(i, j);
        if i == j {
            p.sub_assign(&NCPoly::one());
        }
        p
    });
    let complex = FreeYDComplex::from_maps(h, [phi1, phi2, phi3])?;
    if !complex.maps[1].compose(h, &complex.maps[0])?.is_zero(h) {
        return Err(Error::Inconsistent("phi2 . phi1 is nonzero".into()));
    }
    if !complex.maps[2].compose(h, &complex.maps[1])?.is_zero(h) {
        return Err(Error::Inconsistent("phi3 . phi2 is nonzero".into()));
    }
    if complex.augmentation_of(h, &complex.maps[2]).iter().any(|c| !c.is_zero()) {
        return Err(Error::Inconsistent("eps . phi3 is nonzero".into()));
    }
    Ok(complex)
}

/// The lifted building blocks of the resolution.
#[derive(Clone, Debug)]
pub struct Components<F> {
    /// Lift of `(φ ⊗ id)∘δ: k → V* ⊗ V`.
    pub phi1_prime: YdMap<F>,
    /// Lift of `Φ_V^2 ∘ (φ ⊗ φ ⊗ id ⊗ id) ∘ (δ ⊗ δ): k → (V*⊗V)⊠A`.
    pub phi1_second: YdMap<F>,
    /// Lift of `Φ_V^2 ∘ (id ⊗ φ ⊗ id ⊗ id) ∘ (id ⊗ id ⊗ δ): V*⊗V → (V*⊗V)⊠A`.
    pub phi2_prime: YdMap<F>,
    /// Lift of `Φ_V^1`.
    pub phi_v1: YdMap<F>,
    /// Lift of the evaluation `V* ⊗ V → k`.
    pub evaluation: YdMap<F>,
}

impl<F: Field> Components<F> {
    /// Builds every piece from `δ`, `φ`, `Φ_V^1`, `Φ_V^2`, checking
    /// colinearity of each map before lifting it.
    pub fn build(h: &BilinearFormHopf<F>) -> Result<Self> {
        let n = h.n();
        let v = Comodule::fundamental(h);
        let vd = Comodule::dual(h, &v)?;
        let end = Comodule::tensor(h, &vd, &v)?;
        let triv = Comodule::trivial();
        let coad = FreeYDModule::coadjoint();
        let end_box = FreeYDModule::new(end.clone());

        let delta = delta_map(h);
        let phi = phi_map(h);
        let id = ComoduleMorphism::identity(n);
        let id2 = ComoduleMorphism::identity(n * n);

        let p1 = phi.tensor(&id).compose(&delta)?;
        let phi1_prime = adjunction_lift(h, &YdMap::from_scalar(&p1), &triv, &end_box)?;

        let delta2 = delta.tensor(&delta);
        let phiphi = phi.tensor(&phi).tensor(&id2).compose(&delta2)?;
        let phi1_second = adjunction_lift(h, &phi_v2(h).after_scalar(&phiphi)?, &triv, &end_box)?;

        let p2 = id.tensor(&phi).tensor(&id2).compose(&id2.tensor(&delta))?;
        let phi2_prime = adjunction_lift(h, &phi_v2(h).after_scalar(&p2)?, &end, &end_box)?;

        let phi_v1 = adjunction_lift(h, &phi_v1(h), &end, &coad)?;
        let evaluation = adjunction_lift(h, &YdMap::from_scalar(&evaluation_map(n)), &end, &coad)?;
        Ok(Components {
            phi1_prime,
            phi1_second,
            phi2_prime,
            phi_v1,
            evaluation,
        })
    }

    /// `φ̃2'∘φ̃1' = φ̃1''` and `φ̃2'∘φ̃1'' = φ̃1'`.
    pub fn composite_relations(&self, h: &BilinearFormHopf<F>) -> Result<(bool, bool)> {
        let a = self.phi2_prime.compose(h, &self.phi1_prime)?.minus(&self.phi1_second).is_zero(h);
        let b = self.phi2_prime.compose(h, &self.phi1_second)?.minus(&self.phi1_prime).is_zero(h);
        Ok((a, b))
    }

    /// `φ1 = φ̃1' − φ̃1''`, `φ2 = id + φ̃2'`, `φ3 = Φ̃^1 − ẽv`.
    pub fn assemble(&self, h: &BilinearFormHopf<F>) -> Result<FreeYDComplex<F>> {
        let phi1 = self.phi1_prime.minus(&self.phi1_second);
        let phi2 = YdMap::identity(self.phi2_prime.rows()).plus(&self.phi2_prime);
        let phi3 = self.phi_v1.minus(&self.evaluation);
        FreeYDComplex::from_maps(h, [phi1.reduced(h), phi2.reduced(h), phi3.reduced(h)])
    }
}

/// Builds the resolution from adjunction lifts of `δ`, `φ`, `Φ_V^1`, `Φ_V^2`
/// and checks it against [`build_counit_resolution`] entry by entry.
pub fn assemble_via_components<F: Field>(h: &BilinearFormHopf<F>) -> Result<FreeYDComplex<F>> {
    let assembled = Components::build(h)?.assemble(h)?;
    let closed = build_counit_resolution(h)?;
    match assembled.first_difference(h, &closed) {
        None => Ok(assembled),
        Some(at) => Err(Error::MismatchAgainstClosedForm(at)),
    }
}
