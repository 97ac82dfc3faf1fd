//! The cogroupoid of bilinear forms: algebras `B(E, F)` generated by an
//! `m × n` matrix `u` with `F^{-1}u^tEu = I_n` and `uF^{-1}u^tE = I_m`,
//! with `Δ^G_{E,F}(u_ij) = Σ_k u^{EG}_ik ⊗ u^{GF}_kj` and
//! `S_{E,F}(u) = E^{-1}(u^{FE})^t F`.

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NCPoly, PresentedAlgebra, Word};
use crate::hopf::{bilinear_relations, conjugated_generators, extend_to_words, generator_letter, AxiomCheck, BilinearFormHopf, Tensor};
use crate::resolution::build_counit_resolution;
use crate::scalar::{trace_invariant, Field, FieldMatrix};

/// `B(E, F)` as a presented algebra.
#[derive(Clone, Debug)]
pub struct BEFAlgebra<F: Field> {
    e: FieldMatrix<F>,
    f: FieldMatrix<F>,
    algebra: PresentedAlgebra<F>,
}

impl<F: Field> BEFAlgebra<F> {
    pub fn build(e: FieldMatrix<F>, f: FieldMatrix<F>, degree: usize) -> Result<Self> {
        for m in [&e, &f] {
            if !m.is_square() {
                return Err(Error::ShapeError(format!("form is {}x{}", m.rows(), m.cols())));
            }
            if m.rows() < 2 {
                return Err(Error::SizeTooSmall(m.rows()));
            }
        }
        let rels = bilinear_relations(&e, &f)?;
        let algebra = PresentedAlgebra::complete(Alphabet::matrix("u", e.rows(), f.rows()), rels, degree)?;
        Ok(BEFAlgebra { e, f, algebra })
    }

    pub fn rows(&self) -> usize {
        self.e.rows()
    }

    pub fn cols(&self) -> usize {
        self.f.rows()
    }

    pub fn e(&self) -> &FieldMatrix<F> {
        &self.e
    }

    pub fn f(&self) -> &FieldMatrix<F> {
        &self.f
    }

    pub fn algebra(&self) -> &PresentedAlgebra<F> {
        &self.algebra
    }

    pub fn u(&self, i: usize, j: usize) -> NCPoly<F> {
        NCPoly::letter(generator_letter(self.cols(), i, j))
    }

    /// Whether `1` lies in the ideal, i.e. the algebra is zero.
    pub fn is_zero(&self) -> bool {
        self.algebra.is_collapsed()
    }
}

/// `tr(E^{-1}E^t) = tr(F^{-1}F^t)` and both sizes at least two, the
/// condition for `B(E, F) ≠ 0`.
pub fn nonvanishing_precheck<F: Field>(e: &FieldMatrix<F>, f: &FieldMatrix<F>) -> Result<bool> {
    let same = trace_invariant(e)? == trace_invariant(f)?;
    Ok(same && e.rows() >= 2 && f.rows() >= 2)
}

/// All `B(X, Y)` for `X, Y` in a list of forms over one field.
#[derive(Clone, Debug)]
pub struct Cogroupoid<F: Field> {
    objects: Vec<FieldMatrix<F>>,
    algebras: Vec<Vec<BEFAlgebra<F>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CogroupoidReport {
    pub degree: usize,
    pub checks: Vec<AxiomCheck>,
}

impl CogroupoidReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn record(checks: &mut Vec<AxiomCheck>, name: &str, checked: usize, failures: Vec<String>) {
    checks.push(AxiomCheck {
        name: name.into(),
        passed: failures.is_empty(),
        checked,
        detail: failures.into_iter().next(),
    });
}

impl<F: Field> Cogroupoid<F> {
    pub fn build(objects: Vec<FieldMatrix<F>>, degree: usize) -> Result<Self> {
        let mut algebras = Vec::with_capacity(objects.len());
        for x in &objects {
            let mut row = Vec::with_capacity(objects.len());
            for y in &objects {
                row.push(BEFAlgebra::build(x.clone(), y.clone(), degree)?);
            }
            algebras.push(row);
        }
        Ok(Cogroupoid { objects, algebras })
    }

    pub fn objects(&self) -> &[FieldMatrix<F>] {
        &self.objects
    }

    /// `B(X_x, X_y)`.
    pub fn algebra(&self, x: usize, y: usize) -> &BEFAlgebra<F> {
        &self.algebras[x][y]
    }

    /// `B(X, X)` as a Hopf algebra.
    pub fn hopf(&self, x: usize) -> Result<BilinearFormHopf<F>> {
        BilinearFormHopf::from_algebra(self.objects[x].clone(), self.algebras[x][x].algebra.clone())
    }

    /// `Δ^G_{X,Y}(w)` with legs reduced in `B(X,G)` and `B(G,Y)`.
    pub fn comultiply_word(&self, x: usize, y: usize, g: usize, w: &Word) -> Tensor<F> {
        let cols = self.algebras[x][y].cols();
        let mid = self.objects[g].rows();
        let (left, right) = (&self.algebras[x][g], &self.algebras[g][y]);
        if left.is_zero() || right.is_zero() {
            return Tensor::zero(2);
        }
        let mut acc = Tensor::unit(2);
        for &l in w.letters() {
            let (i, j) = (l as usize / cols, l as usize % cols);
            let mut next = Tensor::zero(2);
            for (key, c) in acc.terms() {
                for k in 0..mid {
                    let a = left.algebra.word_normal_form(&key[0].concat(&Word::letter(generator_letter(mid, i, k))));
                    let b = right.algebra.word_normal_form(&key[1].concat(&Word::letter(generator_letter(cols, k, j))));
                    next.add_product(&[&*a, &*b], c);
                }
            }
            acc = next;
        }
        acc
    }

    pub fn comultiply(&self, x: usize, y: usize, g: usize, p: &NCPoly<F>) -> Tensor<F> {
        let mut out = Tensor::zero(2);
        for (w, c) in p.terms() {
            out.add_scaled(&self.comultiply_word(x, y, g, w), c);
        }
        out
    }

    /// `ε_X(p)` for `p ∈ B(X, X)`.
    pub fn counit_at(&self, x: usize, p: &NCPoly<F>) -> F {
        crate::hopf::Character::counit(self.objects[x].rows()).eval(p)
    }

    /// `S_{X,Y}: B(X,Y) → B(Y,X)`, anti-multiplicative, reduced in `B(Y,X)`.
    pub fn antipode(&self, x: usize, y: usize, p: &NCPoly<F>) -> Result<NCPoly<F>> {
        if self.algebras[y][x].is_zero() {
            return Ok(NCPoly::zero());
        }
        let images = conjugated_generators(&self.objects[x].inverse()?, &self.objects[y], true);
        Ok(extend_to_words(&self.algebras[y][x].algebra, &images, p, true))
    }

    #[allow(clippy::needless_range_loop)]
    /// Cocategory and cogroupoid axioms on normal words of degree `≤ d` of
    /// every `B(X, Y)`, and compatibility of `Δ`, `ε`, `S` with relations.
    pub fn verify_axioms(&self, d: usize) -> Result<CogroupoidReport> {
        let k = self.objects.len();
        let mut checks = Vec::new();
        let words: Vec<Vec<Vec<Word>>> = (0..k)
            .map(|x| (0..k).map(|y| self.algebras[x][y].algebra.basis_up_to(d)).collect::<Result<_>>())
            .collect::<Result<_>>()?;

        // Coassociativity.
        let (mut checked, mut failures) = (0, Vec::new());
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    for t in 0..k {
                        for w in &words[x][y] {
                            checked += 1;
                            let lhs = self.comultiply_word(x, y, z, w).map_leg(0, |a| self.comultiply_word(x, z, t, a));
                            let rhs = self.comultiply_word(x, y, t, w).map_leg(1, |a| self.comultiply_word(t, y, z, a));
                            if lhs != rhs {
                                failures.push(format!("B({x},{y}) via {t},{z}: {}", self.algebras[x][y].algebra.alphabet().render(w)));
                            }
                        }
                    }
                }
            }
        }
        record(&mut checks, "coassociativity", checked, failures);

        // Counit laws.
        let (mut checked, mut failures) = (0, Vec::new());
        for x in 0..k {
            for y in 0..k {
                for w in &words[x][y] {
                    checked += 1;
                    let a = NCPoly::word(w.clone());
                    let left = self.comultiply_word(x, y, x, w);
                    let right = self.comultiply_word(x, y, y, w);
                    let mut l = NCPoly::zero();
                    for (legs, c) in left.terms() {
                        l.add_scaled(&NCPoly::word(legs[1].clone()), &(self.counit_at(x, &NCPoly::word(legs[0].clone())) * c.clone()));
                    }
                    let mut r = NCPoly::zero();
                    for (legs, c) in right.terms() {
                        r.add_scaled(&NCPoly::word(legs[0].clone()), &(self.counit_at(y, &NCPoly::word(legs[1].clone())) * c.clone()));
                    }
                    let a = self.algebras[x][y].algebra.reduce(&a);
                    if l != a || r != a {
                        failures.push(format!("B({x},{y}): {}", self.algebras[x][y].algebra.alphabet().render(w)));
                    }
                }
            }
        }
        record(&mut checks, "counit", checked, failures);

        // Antipode laws on B(X, X) through every Y.
        let (mut checked, mut left_fail, mut right_fail) = (0, Vec::new(), Vec::new());
        for x in 0..k {
            for y in 0..k {
                for w in &words[x][x] {
                    checked += 1;
                    let e = self.counit_at(x, &NCPoly::word(w.clone()));
                    let yx = &self.algebras[y][x].algebra;
                    let xy = &self.algebras[x][y].algebra;
                    let mut l = NCPoly::zero();
                    for (legs, c) in self.comultiply_word(x, x, y, w).terms() {
                        let s = self.antipode(x, y, &NCPoly::word(legs[0].clone()))?;
                        l.add_scaled(&yx.mul(&s, &NCPoly::word(legs[1].clone())), c);
                    }
                    let mut r = NCPoly::zero();
                    for (legs, c) in self.comultiply_word(x, x, y, w).terms() {
                        let s = self.antipode(y, x, &NCPoly::word(legs[1].clone()))?;
                        r.add_scaled(&xy.mul(&NCPoly::word(legs[0].clone()), &s), c);
                    }
                    let label = format!("x={x}, y={y}: {}", self.algebras[x][x].algebra.alphabet().render(w));
                    if l != yx.reduce(&NCPoly::constant(e.clone())) {
                        left_fail.push(label.clone());
                    }
                    if r != xy.reduce(&NCPoly::constant(e)) {
                        right_fail.push(label);
                    }
                }
            }
        }
        record(&mut checks, "antipode-left", checked, left_fail);
        record(&mut checks, "antipode-right", checked, right_fail);

        // Structure maps respect the relations.
        let (mut checked, mut dfail, mut sfail, mut efail) = (0, Vec::new(), Vec::new(), Vec::new());
        for x in 0..k {
            for y in 0..k {
                let alg = &self.algebras[x][y];
                for (r, rel) in alg.algebra.relations().iter().enumerate() {
                    checked += 1;
                    for g in 0..k {
                        if !self.comultiply(x, y, g, rel).is_zero() {
                            dfail.push(format!("B({x},{y}) relation {} via {g}", r + 1));
                        }
                    }
                    if !self.antipode(x, y, rel)?.is_zero() {
                        sfail.push(format!("B({x},{y}) relation {}", r + 1));
                    }
                    if x == y && !self.counit_at(x, rel).is_zero() {
                        efail.push(format!("B({x},{x}) relation {}", r + 1));
                    }
                }
            }
        }
        record(&mut checks, "relations-comultiplication", checked, dfail);
        record(&mut checks, "relations-antipode", checked, sfail);
        record(&mut checks, "relations-counit", checked, efail);
        Ok(CogroupoidReport { degree: d, checks })
    }
}

/// The four squares transporting the resolution of `k` over `B(F)` to the
/// one over `B(E)`, each checked on module generators times normal words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TransportReport {
    pub degree: usize,
    pub checks: Vec<AxiomCheck>,
}

impl TransportReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Element of `P ⊠ B(E) ⊗ B(E,F)`: one two-leg tensor per basis vector of `P`.
type Transported<F> = Vec<Tensor<F>>;

struct Transport<'a, F: Field> {
    cg: &'a Cogroupoid<F>,
    e: usize,
    f: usize,
    /// `S_{F,E}(u^{FE}_ik)` in `B(E,F)`.
    s_u: Vec<NCPoly<F>>,
}

impl<'a, F: Field> Transport<'a, F> {
    fn new(cg: &'a Cogroupoid<F>, e: usize, f: usize) -> Result<Self> {
        let (n, m) = (cg.objects[f].rows(), cg.objects[e].rows());
        let mut s_u = Vec::with_capacity(n * m);
        for i in 0..n {
            for k in 0..m {
                s_u.push(cg.antipode(f, e, &NCPoly::letter(generator_letter(m, i, k)))?);
            }
        }
        Ok(Transport { cg, e, f, s_u })
    }

    fn ef(&self) -> &PresentedAlgebra<F> {
        &self.cg.algebras[self.e][self.f].algebra
    }

    /// `x_(1)^{FE} ⊗ x_(2)^{EE} ⊗ x_(3)^{EF}`.
    fn split(&self, w: &Word) -> Tensor<F> {
        let (e, f) = (self.e, self.f);
        self.cg
            .comultiply_word(f, f, e, w)
            .map_leg(0, |a| self.cg.comultiply_word(f, e, e, a))
    }

    /// The vertical map on `e_i ⊗ x` for `P` of dimension 1 or `dim F^2`.
    fn vertical(&self, dim: usize, i: usize, x: &NCPoly<F>) -> Result<Transported<F>> {
        let (n, m) = (self.cg.objects[self.f].rows(), self.cg.objects[self.e].rows());
        let out_dim = if dim == 1 { 1 } else { m * m };
        let mut out = vec![Tensor::zero(2); out_dim];
        let ef = self.ef();
        for (w, c) in x.terms() {
            for (legs, d) in self.split(w).terms() {
                let mut cd = c.clone();
                cd *= d;
                let s1 = self.cg.antipode(self.f, self.e, &NCPoly::word(legs[0].clone()))?;
                let x2 = NCPoly::word(legs[1].clone());
                let x3 = NCPoly::word(legs[2].clone());
                if dim == 1 {
                    out[0].add_product(&[&x2, &ef.mul(&s1, &x3)], &cd);
                } else {
                    let (ii, jj) = (i / n, i % n);
                    for k in 0..m {
                        let left = ef.mul(&s1, &self.s_u[ii * m + k]);
                        for l in 0..m {
                            let right = ef.mul(&NCPoly::letter(generator_letter(n, l, jj)), &x3);
                            out[k * m + l].add_product(&[&x2, &ef.mul(&left, &right)], &cd);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `φ^E ⊗ id` on the first leg.
    fn bottom(&self, he: &BilinearFormHopf<F>, map: &crate::comod::YdMap<F>, x: &Transported<F>) -> Transported<F> {
        let mut out = vec![Tensor::zero(2); map.rows()];
        for (b, t) in x.iter().enumerate() {
            for (bp, slot) in out.iter_mut().enumerate() {
                let coeff = map.entry(bp, b);
                if coeff.is_zero() {
                    continue;
                }
                for (legs, c) in t.terms() {
                    let a = he.algebra().mul(coeff, &NCPoly::word(legs[0].clone()));
                    slot.add_product(&[&a, &NCPoly::word(legs[1].clone())], c);
                }
            }
        }
        out
    }
}

/// Checks that the vertical maps intertwine `φ_k^F ⊠ id` with
/// `φ_k^E ⊗ id` for `k = 1, 2, 3` and with the augmentations, on every
/// module generator tensored with a normal word of `B(F)` of degree `≤ d`.
/// `e` and `f` index objects of `cg`.
pub fn check_transport_diagrams<F: Field>(cg: &Cogroupoid<F>, e: usize, f: usize, d: usize) -> Result<TransportReport> {
    let (te, tf) = (trace_invariant(&cg.objects[e])?, trace_invariant(&cg.objects[f])?);
    if te != tf {
        return Err(Error::TraceMismatch(format!("{te}"), format!("{tf}")));
    }
    for (x, y) in [(e, e), (f, f), (e, f), (f, e)] {
        cg.algebras[x][y].algebra.check_degree(2 * d + 4)?;
    }
    let (he, hf) = (cg.hopf(e)?, cg.hopf(f)?);
    let (re, rf) = (build_counit_resolution(&he)?, build_counit_resolution(&hf)?);
    let t = Transport::new(cg, e, f)?;
    let words = hf.algebra().basis_up_to(d)?;
    let render = |w: &Word| hf.algebra().alphabet().render(w);
    let mut checks = Vec::new();

    for k in 1..=3 {
        let (mf, me) = (rf.phi(k), re.phi(k));
        let (mut checked, mut failures) = (0, Vec::new());
        for i in 0..mf.cols() {
            for w in &words {
                checked += 1;
                let x = NCPoly::word(w.clone());
                let mut top = vec![Tensor::zero(2); me.rows()];
                for b in 0..mf.rows() {
                    let img = hf.algebra().mul(mf.entry(b, i), &x);
                    if img.is_zero() {
                        continue;
                    }
                    for (slot, v) in top.iter_mut().zip(t.vertical(mf.rows(), b, &img)?) {
                        slot.add_scaled(&v, &F::one());
                    }
                }
                let down = t.bottom(&he, me, &t.vertical(mf.cols(), i, &x)?);
                if top != down {
                    failures.push(format!("generator {} times {}", i + 1, render(w)));
                }
            }
        }
        record(&mut checks, &format!("phi{k}-diagram"), checked, failures);
    }

    // Augmentation: ε_E(x_(2)) S(x_(1)) x_(3) against ε_F(x)·1 in B(E,F).
    let (mut checked, mut failures) = (0, Vec::new());
    for w in &words {
        checked += 1;
        let x = NCPoly::word(w.clone());
        let mut lhs = NCPoly::zero();
        for (legs, c) in t.vertical(1, 0, &x)?[0].terms() {
            let eps = cg.counit_at(e, &NCPoly::word(legs[0].clone()));
            let mut ec = eps;
            ec *= c;
            lhs.add_scaled(&NCPoly::word(legs[1].clone()), &ec);
        }
        let rhs = t.ef().reduce(&NCPoly::constant(cg.counit_at(f, &x)));
        if lhs != rhs {
            failures.push(render(w));
        }
    }
    record(&mut checks, "eps-diagram", checked, failures);
    Ok(TransportReport { degree: d, checks })
}
