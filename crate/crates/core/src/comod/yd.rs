use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Word};
use crate::hopf::{BilinearFormHopf, Tensor};
use crate::scalar::Field;

use super::{Comodule, ComoduleMorphism};

/// An element `Σ_i e_i ⊗ x_i` of `V ⊠ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdElement<F> {
    pub components: Vec<NCPoly<F>>,
}

impl<F: Field> YdElement<F> {
    pub fn zero(dim: usize) -> Self {
        YdElement {
            components: vec![NCPoly::zero(); dim],
        }
    }

    /// `e_i ⊗ p`.
    pub fn basis(dim: usize, i: usize, p: NCPoly<F>) -> Self {
        let mut e = Self::zero(dim);
        e.components[i] = p;
        e
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(NCPoly::is_zero)
    }
}

/// Image of an element under a coaction: for each basis vector `e_k`, the
/// two-leg tensor `Σ x ⊗ y` meaning `e_k ⊗ x ⊗ y`.
pub type YdCoaction<F> = Vec<Tensor<F>>;

/// The free Yetter–Drinfeld module `V ⊠ A`: right multiplication and the
/// coaction `v ⊗ a ↦ v_(0) ⊗ a_(2) ⊗ S(a_(1)) v_(1) a_(3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeYDModule<F> {
    base: Comodule<F>,
    omit_antipode_leg: bool,
}

impl<F: Field> FreeYDModule<F> {
    pub fn new(base: Comodule<F>) -> Self {
        FreeYDModule {
            base,
            omit_antipode_leg: false,
        }
    }

    /// `k ⊠ A = A_coad`.
    pub fn coadjoint() -> Self {
        Self::new(Comodule::trivial())
    }

    /// The same module with `S(a_(1))` dropped from the coaction. Only useful
    /// as a negative control: the result is not a Yetter–Drinfeld module.
    pub fn with_antipode_leg_omitted(mut self) -> Self {
        self.omit_antipode_leg = true;
        self
    }

    pub fn base(&self) -> &Comodule<F> {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// `Δ²(w)` with all legs reduced.
    fn double_coproduct(h: &BilinearFormHopf<F>, w: &Word) -> Tensor<F> {
        h.comultiply_word(w).map_leg(0, |x| h.comultiply_word(x))
    }

    /// Coaction of `e_i ⊗ p`, computed from the defining formula.
    pub fn coaction_basis(&self, h: &BilinearFormHopf<F>, i: usize, p: &NCPoly<F>) -> Result<YdCoaction<F>> {
        let alg = h.algebra();
        alg.check_degree(p.degree().unwrap_or(0))?;
        let mut out = vec![Tensor::zero(2); self.dim()];
        for (w, c) in p.terms() {
            for (legs, a) in Self::double_coproduct(h, w).terms() {
                let s1 = if self.omit_antipode_leg {
                    NCPoly::constant(h.counit(&NCPoly::word(legs[0].clone())))
                } else {
                    h.antipode_unchecked(&NCPoly::word(legs[0].clone()))
                };
                let mid = NCPoly::word(legs[1].clone());
                let x3 = NCPoly::word(legs[2].clone());
                let mut ca = c.clone();
                ca *= a;
                for (k, slot) in out.iter_mut().enumerate() {
                    let v1 = self.base.entry(k, i);
                    if v1.is_zero() {
                        continue;
                    }
                    let right = alg.mul(&alg.mul(&s1, v1), &x3);
                    slot.add_product(&[&mid, &right], &ca);
                }
            }
        }
        Ok(out)
    }

    pub fn coaction(&self, h: &BilinearFormHopf<F>, x: &YdElement<F>) -> Result<YdCoaction<F>> {
        let mut out = vec![Tensor::zero(2); self.dim()];
        for (i, p) in x.components.iter().enumerate() {
            for (k, t) in self.coaction_basis(h, i, p)?.into_iter().enumerate() {
                out[k].add_scaled(&t, &F::one());
            }
        }
        Ok(out)
    }

    /// Right action by `a`.
    pub fn act(&self, h: &BilinearFormHopf<F>, x: &YdElement<F>, a: &NCPoly<F>) -> YdElement<F> {
        YdElement {
            components: x.components.iter().map(|p| h.algebra().mul(p, a)).collect(),
        }
    }

    /// Checks `δ(x ← g) = x_(0) ← g_(2) ⊗ S(g_(1)) x_(1) g_(3)` for all
    /// `x = e_i ⊗ w` with `w` a normal word of degree `≤ d` and `g` a generator.
    pub fn yd_axiom_check(&self, h: &BilinearFormHopf<F>, d: usize) -> Result<YdReport> {
        let alg = h.algebra();
        alg.check_degree(3 * d + 2)?;
        let words = alg.basis_up_to(d)?;
        let gens: Vec<Word> = (0..alg.alphabet().len()).map(|l| Word::letter(l as u8)).collect();
        let mut report = YdReport::default();
        for i in 0..self.dim() {
            for w in &words {
                let x = NCPoly::word(w.clone());
                let base = self.coaction_basis(h, i, &x)?;
                for g in &gens {
                    report.checked += 1;
                    let lhs = self.coaction_basis(h, i, &alg.mul(&x, &NCPoly::word(g.clone())))?;
                    let g3 = Self::double_coproduct(h, g);
                    let mut rhs = vec![Tensor::zero(2); self.dim()];
                    for (k, t) in base.iter().enumerate() {
                        for (xy, c) in t.terms() {
                            for (gl, a) in g3.terms() {
                                let left = alg.word_normal_form(&xy[0].concat(&gl[1]));
                                let s = h.antipode_unchecked(&NCPoly::word(gl[0].clone()));
                                let right = alg.mul(&s, &NCPoly::word(xy[1].concat(&gl[2])));
                                let mut ca = c.clone();
                                ca *= a;
                                rhs[k].add_product(&[&left, &right], &ca);
                            }
                        }
                    }
                    if lhs != rhs {
                        report.failures.push(format!(
                            "e_{} ⊗ {} ← {}",
                            i + 1,
                            alg.alphabet().render(w),
                            alg.alphabet().render(g)
                        ));
                    }
                }
            }
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YdReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl YdReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A right `A`-linear map `V ⊠ A → W ⊠ A`, `e_i ⊗ x ↦ Σ_b e_b ⊗ M_bi x`.
///
/// The same data describes a linear map `V → W ⊗ A` (the images of
/// `e_i ⊗ 1`), which is how adjunction lifts are represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdMap<F> {
    rows: usize,
    cols: usize,
    entries: Vec<NCPoly<F>>,
}

impl<F: Field> YdMap<F> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> NCPoly<F>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for b in 0..rows {
            for i in 0..cols {
                entries.push(f(b, i));
            }
        }
        YdMap { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| NCPoly::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |b, i| if b == i { NCPoly::one() } else { NCPoly::zero() })
    }

    /// `T ⊗ 1` for a scalar map `T`.
    pub fn from_scalar(m: &ComoduleMorphism<F>) -> Self {
        Self::from_fn(m.matrix.rows(), m.matrix.cols(), |b, i| NCPoly::constant(m.matrix[(b, i)].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, b: usize, i: usize) -> &NCPoly<F> {
        &self.entries[b * self.cols + i]
    }

    pub fn entries(&self) -> &[NCPoly<F>] {
        &self.entries
    }

    /// Image of `e_i ⊗ 1`.
    pub fn column(&self, i: usize) -> YdElement<F> {
        YdElement {
            components: (0..self.rows).map(|b| self.entry(b, i).clone()).collect(),
        }
    }

    pub fn apply(&self, h: &BilinearFormHopf<F>, x: &YdElement<F>) -> YdElement<F> {
        let alg = h.algebra();
        let mut out = YdElement::zero(self.rows);
        for (i, p) in x.components.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for b in 0..self.rows {
                out.components[b].add_assign(&alg.mul(self.entry(b, i), p));
            }
        }
        out
    }

    /// `self ∘ first`.
    pub fn compose(&self, h: &BilinearFormHopf<F>, first: &YdMap<F>) -> Result<Self> {
        if self.cols != first.rows {
            return Err(Error::ShapeError(format!("compose {}x{} after {}x{}", self.rows, self.cols, first.rows, first.cols)));
        }
        let alg = h.algebra();
        Ok(Self::from_fn(self.rows, first.cols, |c, i| {
            let mut p = NCPoly::zero();
            for b in 0..self.cols {
                p.add_assign(&alg.mul(self.entry(c, b), first.entry(b, i)));
            }
            p
        }))
    }

    /// `self ∘ (T ⊗ id)` for a scalar map `T`.
    pub fn after_scalar(&self, t: &ComoduleMorphism<F>) -> Result<Self> {
        if self.cols != t.matrix.rows() {
            return Err(Error::ShapeError("scalar precomposition shape".into()));
        }
        Ok(Self::from_fn(self.rows, t.matrix.cols(), |b, i| {
            let mut p = NCPoly::zero();
            for k in 0..self.cols {
                p.add_scaled(self.entry(b, k), &t.matrix[(k, i)]);
            }
            p
        }))
    }

    pub fn plus(&self, other: &YdMap<F>) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |b, i| self.entry(b, i).plus(other.entry(b, i)))
    }

    pub fn minus(&self, other: &YdMap<F>) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |b, i| self.entry(b, i).minus(other.entry(b, i)))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_fn(self.rows, self.cols, |b, i| self.entry(b, i).scale(c))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    /// Entries reduced to normal form.
    pub fn reduced(&self, h: &BilinearFormHopf<F>) -> Self {
        Self::from_fn(self.rows, self.cols, |b, i| h.algebra().reduce(self.entry(b, i)))
    }

    pub fn is_zero(&self, h: &BilinearFormHopf<F>) -> bool {
        self.entries.iter().all(|p| h.algebra().reduce(p).is_zero())
    }

    /// Applies `self ⊗ id` to a coaction of the source.
    fn push_coaction(&self, h: &BilinearFormHopf<F>, co: &YdCoaction<F>) -> YdCoaction<F> {
        let alg = h.algebra();
        let mut out = vec![Tensor::zero(2); self.rows];
        for (k, t) in co.iter().enumerate() {
            for (xy, c) in t.terms() {
                let x = NCPoly::word(xy[0].clone());
                let y = NCPoly::word(xy[1].clone());
                for (b, slot) in out.iter_mut().enumerate() {
                    let m = self.entry(b, k);
                    if m.is_zero() {
                        continue;
                    }
                    slot.add_product(&[&alg.mul(m, &x), &y], c);
                }
            }
        }
        out
    }

    /// Colinearity of the linear map `V → W ⊗ A`, `v ↦ f(v ⊗ 1)`: for each
    /// basis vector, `δ_X(f(e_i)) = Σ_k f(e_k) ⊗ c_ki`.
    pub fn colinearity_failure(
        &self,
        h: &BilinearFormHopf<F>,
        source: &Comodule<F>,
        target: &FreeYDModule<F>,
    ) -> Result<Option<usize>> {
        if self.cols != source.dim() || self.rows != target.dim() {
            return Err(Error::ShapeError(format!(
                "map is {}x{}, modules have dimensions {} -> {}",
                self.rows,
                self.cols,
                source.dim(),
                target.dim()
            )));
        }
        let alg = h.algebra();
        for i in 0..self.cols {
            let lhs = target.coaction(h, &self.column(i))?;
            let mut rhs = vec![Tensor::zero(2); self.rows];
            for k in 0..source.dim() {
                let c = alg.normal_form(source.entry(k, i))?;
                if c.is_zero() {
                    continue;
                }
                for (b, slot) in rhs.iter_mut().enumerate() {
                    let fk = alg.normal_form(self.entry(b, k))?;
                    slot.add_product(&[&fk, &c], &F::one());
                }
            }
            if lhs != rhs {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Checks `δ_W(f(e_i ⊗ w)) = (f ⊗ id) δ_V(e_i ⊗ w)` for normal words of
    /// degree `≤ d`; `d = 0` checks module generators only.
    pub fn is_yd_morphism(
        &self,
        h: &BilinearFormHopf<F>,
        source: &FreeYDModule<F>,
        target: &FreeYDModule<F>,
        d: usize,
    ) -> Result<bool> {
        for w in h.algebra().basis_up_to(d)? {
            for i in 0..self.cols {
                let x = YdElement::basis(self.cols, i, NCPoly::word(w.clone()));
                let lhs = target.coaction(h, &self.apply(h, &x))?;
                let rhs = self.push_coaction(h, &source.coaction(h, &x)?);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The adjunction lift `f̃(v ⊗ a) = f(v) ← a` of a colinear map
/// `f: V → R(W ⊠ A)` given by the images `f(e_i)` as columns.
pub fn adjunction_lift<F: Field>(
    h: &BilinearFormHopf<F>,
    f: &YdMap<F>,
    source: &Comodule<F>,
    target: &FreeYDModule<F>,
) -> Result<YdMap<F>> {
    match f.colinearity_failure(h, source, target)? {
        None => Ok(f.reduced(h)),
        Some(i) => Err(Error::NotColinear(format!("image of basis vector {} is not colinear", i + 1))),
    }
}

/// `Φ_V^1: V^* ⊗ V → A_coad`, `e_i^* ⊗ e_j ↦ u_ij`.
pub fn phi_v1<F: Field>(h: &BilinearFormHopf<F>) -> YdMap<F> {
    let n = h.n();
    YdMap::from_fn(1, n * n, |_, ij| h.u(ij / n, ij % n))
}

/// `Φ_V^2: V^* ⊗ V^* ⊗ V ⊗ V → (V^* ⊗ V) ⊠ A`,
/// `e_i^* ⊗ e_j^* ⊗ e_k ⊗ e_l ↦ e_j^* ⊗ e_k ⊗ u_il`.
pub fn phi_v2<F: Field>(h: &BilinearFormHopf<F>) -> YdMap<F> {
    let n = h.n();
    YdMap::from_fn(n * n, n * n * n * n, |row, col| {
        let (i, j, k, l) = (col / (n * n * n), (col / (n * n)) % n, (col / n) % n, col % n);
        if row == j * n + k {
            h.u(i, l)
        } else {
            NCPoly::zero()
        }
    })
}
