//! The Hopf algebra `B(E)` of a nondegenerate bilinear form.

mod character;
mod tensor;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NCPoly, PresentedAlgebra, Word};
use crate::scalar::{Field, FieldMatrix};

pub use character::Character;
pub use tensor::{Tensor, TensorSquareElement};

/// Letter of `u_ij` in an `rows × cols` generator matrix.
pub fn generator_letter(cols: usize, i: usize, j: usize) -> u8 {
    (i * cols + j) as u8
}

/// Relations of the algebra generated by an `m × n` matrix `u` subject to
/// `F^{-1}u^tEu = I_n` and `uF^{-1}u^tE = I_m`, for `E` of size `m` and `F`
/// of size `n`. Entries are listed row by row, first matrix first.
pub fn bilinear_relations<F: Field>(e: &FieldMatrix<F>, f: &FieldMatrix<F>) -> Result<Vec<NCPoly<F>>> {
    let (m, n) = (e.rows(), f.rows());
    if !e.is_square() || !f.is_square() {
        return Err(Error::ShapeError("bilinear forms must be square".into()));
    }
    let f_inv = f.inverse()?;
    e.inverse()?;
    let u = |i: usize, j: usize| generator_letter(n, i, j);
    let mut rels = Vec::with_capacity(n * n + m * m);
    for i in 0..n {
        for j in 0..n {
            let mut p = NCPoly::zero();
            for k in 0..n {
                for l in 0..m {
                    for r in 0..m {
                        let mut c = f_inv[(i, k)].clone();
                        c *= &e[(l, r)];
                        p.add_term(Word::from_slice(&[u(l, k), u(r, j)]), c);
                    }
                }
            }
            if i == j {
                p.add_term(Word::empty(), -F::one());
            }
            rels.push(p);
        }
    }
    for i in 0..m {
        for j in 0..m {
            let mut p = NCPoly::zero();
            for k in 0..n {
                for l in 0..n {
                    for r in 0..m {
                        let mut c = f_inv[(k, l)].clone();
                        c *= &e[(r, j)];
                        p.add_term(Word::from_slice(&[u(i, k), u(r, l)]), c);
                    }
                }
            }
            if i == j {
                p.add_term(Word::empty(), -F::one());
            }
            rels.push(p);
        }
    }
    Ok(rels)
}

/// Image of a generator matrix `u` under `u ↦ L·u^t·R` (`transpose`) or
/// `u ↦ L·u·R`, as polynomials indexed row-major by the target generator.
pub fn conjugated_generators<F: Field>(
    left: &FieldMatrix<F>,
    right: &FieldMatrix<F>,
    transpose: bool,
) -> Vec<NCPoly<F>> {
    let (rows, cols) = (left.rows(), right.cols());
    let inner_rows = left.cols();
    let inner_cols = right.rows();
    // The matrix whose entries are generators has shape
    // inner_rows × inner_cols (or its transpose).
    let gen_cols = if transpose { inner_rows } else { inner_cols };
    let mut out = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let mut p = NCPoly::zero();
            for k in 0..inner_rows {
                for l in 0..inner_cols {
                    let mut c = left[(i, k)].clone();
                    c *= &right[(l, j)];
                    let letter = if transpose {
                        generator_letter(gen_cols, l, k)
                    } else {
                        generator_letter(gen_cols, k, l)
                    };
                    p.add_term(Word::letter(letter), c);
                }
            }
            out.push(p);
        }
    }
    out
}

/// Extends generator images multiplicatively (or anti-multiplicatively) and
/// reduces in `alg`.
pub fn extend_to_words<F: Field>(
    alg: &PresentedAlgebra<F>,
    images: &[NCPoly<F>],
    p: &NCPoly<F>,
    anti: bool,
) -> NCPoly<F> {
    p.map_linear(|w| {
        let mut acc = NCPoly::one();
        for &l in w.letters() {
            let img = &images[l as usize];
            acc = if anti { alg.mul(img, &acc) } else { alg.mul(&acc, img) };
        }
        acc
    })
}

/// One line of a Hopf-axiom report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HopfReport {
    pub degree: usize,
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Generator images of the modular automorphism `σ` and of `θ = S*Φ*Φ`.
#[derive(Clone, Debug)]
pub struct ModularMaps<F> {
    pub sigma: Vec<NCPoly<F>>,
    pub theta: Vec<NCPoly<F>>,
    /// Whether `S(θ(u_ij)) = σ(u_ij)` for every generator.
    pub s_theta_is_sigma: bool,
}

/// `B(E)` with its Hopf structure on generators.
#[derive(Clone, Debug)]
pub struct BilinearFormHopf<F: Field> {
    e: FieldMatrix<F>,
    e_inv: FieldMatrix<F>,
    algebra: PresentedAlgebra<F>,
    antipode_images: Vec<NCPoly<F>>,
}

impl<F: Field> BilinearFormHopf<F> {
    /// Builds `B(E)` with Gröbner completion through `degree`.
    pub fn build(e: FieldMatrix<F>, degree: usize) -> Result<Self> {
        let (e, e_inv) = Self::check_form(e)?;
        let n = e.rows();
        let rels = bilinear_relations(&e, &e)?;
        let algebra = PresentedAlgebra::complete(Alphabet::matrix("u", n, n), rels, degree)?;
        Ok(Self::assemble(e, e_inv, algebra))
    }

    /// Wraps an already completed algebra, checking its relations are those of `B(E)`.
    pub fn from_algebra(e: FieldMatrix<F>, algebra: PresentedAlgebra<F>) -> Result<Self> {
        let (e, e_inv) = Self::check_form(e)?;
        if algebra.relations() != bilinear_relations(&e, &e)?.as_slice() {
            return Err(Error::Inconsistent("algebra relations do not match E".into()));
        }
        Ok(Self::assemble(e, e_inv, algebra))
    }

    fn check_form(e: FieldMatrix<F>) -> Result<(FieldMatrix<F>, FieldMatrix<F>)> {
        if !e.is_square() {
            return Err(Error::ShapeError(format!("E is {}x{}", e.rows(), e.cols())));
        }
        if e.rows() < 2 {
            return Err(Error::SizeTooSmall(e.rows()));
        }
        let e_inv = e.inverse()?;
        Ok((e, e_inv))
    }

    fn assemble(e: FieldMatrix<F>, e_inv: FieldMatrix<F>, algebra: PresentedAlgebra<F>) -> Self {
        let antipode_images = conjugated_generators(&e_inv, &e, true);
        BilinearFormHopf {
            e,
            e_inv,
            algebra,
            antipode_images,
        }
    }

    /// Replaces the antipode on generators. Only useful as a negative control.
    pub fn with_antipode_images(mut self, images: Vec<NCPoly<F>>) -> Self {
        assert_eq!(images.len(), self.antipode_images.len());
        self.antipode_images = images;
        self
    }

    pub fn n(&self) -> usize {
        self.e.rows()
    }

    pub fn e(&self) -> &FieldMatrix<F> {
        &self.e
    }

    pub fn e_inv(&self) -> &FieldMatrix<F> {
        &self.e_inv
    }

    pub fn algebra(&self) -> &PresentedAlgebra<F> {
        &self.algebra
    }

    pub fn letter(&self, i: usize, j: usize) -> u8 {
        generator_letter(self.n(), i, j)
    }

    /// The generator `u_ij` (zero-based indices).
    pub fn u(&self, i: usize, j: usize) -> NCPoly<F> {
        NCPoly::letter(self.letter(i, j))
    }

    /// `Φ = E^{-1}E^t`.
    pub fn sovereign_matrix(&self) -> FieldMatrix<F> {
        self.e_inv.mul(&self.e.transpose()).expect("square")
    }

    fn check(&self, p: &NCPoly<F>) -> Result<()> {
        self.algebra.check_degree(p.degree().unwrap_or(0))
    }

    /// `Δ` on a single word, legs reduced.
    pub fn comultiply_word(&self, w: &Word) -> Tensor<F> {
        let n = self.n();
        let mut acc = Tensor::unit(2);
        for &l in w.letters() {
            let (i, j) = (l as usize / n, l as usize % n);
            let mut next = Tensor::zero(2);
            for (key, c) in acc.terms() {
                for k in 0..n {
                    let left = self.algebra.word_normal_form(&key[0].concat(&Word::letter(self.letter(i, k))));
                    let right = self.algebra.word_normal_form(&key[1].concat(&Word::letter(self.letter(k, j))));
                    next.add_product(&[&left, &right], c);
                }
            }
            acc = next;
        }
        acc
    }

    /// `Δ(p)` with no degree check.
    pub fn comultiply_unchecked(&self, p: &NCPoly<F>) -> Tensor<F> {
        let mut out = Tensor::zero(2);
        for (w, c) in p.terms() {
            out.add_scaled(&self.comultiply_word(w), c);
        }
        out
    }

    pub fn comultiply(&self, p: &NCPoly<F>) -> Result<TensorSquareElement<F>> {
        self.check(p)?;
        Ok(self.comultiply_unchecked(p))
    }

    pub fn counit(&self, p: &NCPoly<F>) -> F {
        Character::counit(self.n()).eval(p)
    }

    pub fn antipode_unchecked(&self, p: &NCPoly<F>) -> NCPoly<F> {
        extend_to_words(&self.algebra, &self.antipode_images, p, true)
    }

    pub fn antipode(&self, p: &NCPoly<F>) -> Result<NCPoly<F>> {
        self.check(p)?;
        Ok(self.antipode_unchecked(p))
    }

    pub fn antipode_images(&self) -> &[NCPoly<F>] {
        &self.antipode_images
    }

    /// Applies an algebra map given on generators.
    pub fn apply_algebra_map(&self, images: &[NCPoly<F>], p: &NCPoly<F>) -> NCPoly<F> {
        extend_to_words(&self.algebra, images, p, false)
    }

    /// Checks the Hopf axioms on every normal word of degree at most `d`,
    /// and that the structure maps kill the defining relations.
    pub fn verify_hopf_axioms(&self, d: usize) -> Result<HopfReport> {
        self.algebra.check_degree(d)?;
        let alg = &self.algebra;
        let words = alg.basis_up_to(d)?;
        let mut report = HopfReport {
            degree: d,
            checks: Vec::new(),
        };
        let mut record = |name: &str, failures: Vec<String>, checked: usize| {
            report.checks.push(AxiomCheck {
                name: name.to_string(),
                passed: failures.is_empty(),
                checked,
                detail: failures.into_iter().next(),
            });
        };

        let render = |w: &Word| alg.alphabet().render(w);
        let mut fails = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for w in &words {
            let delta = self.comultiply_word(w);
            let left = delta.map_leg(0, |x| self.comultiply_word(x));
            let right = delta.map_leg(1, |x| self.comultiply_word(x));
            if left != right {
                fails.0.push(format!("coassociativity fails on {}", render(w)));
            }
            let mut lc = NCPoly::zero();
            let mut rc = NCPoly::zero();
            let mut ls = NCPoly::zero();
            let mut rs = NCPoly::zero();
            for (key, c) in delta.terms() {
                lc.add_scaled(&NCPoly::word(key[1].clone()), &(c.clone() * self.counit(&NCPoly::word(key[0].clone()))));
                rc.add_scaled(&NCPoly::word(key[0].clone()), &(c.clone() * self.counit(&NCPoly::word(key[1].clone()))));
                let s0 = self.antipode_unchecked(&NCPoly::word(key[0].clone()));
                let s1 = self.antipode_unchecked(&NCPoly::word(key[1].clone()));
                ls.add_scaled(&alg.mul(&s0, &NCPoly::word(key[1].clone())), c);
                rs.add_scaled(&alg.mul(&NCPoly::word(key[0].clone()), &s1), c);
            }
            let wp = NCPoly::word(w.clone());
            if lc != wp || rc != wp {
                fails.1.push(format!("counit axiom fails on {}", render(w)));
            }
            let eps = NCPoly::constant(self.counit(&wp));
            if ls != eps {
                fails.2.push(format!("m(S⊗id)Δ fails on {}", render(w)));
            }
            if rs != eps {
                fails.3.push(format!("m(id⊗S)Δ fails on {}", render(w)));
            }
        }
        let checked = words.len();
        record("coassociativity", fails.0, checked);
        record("counit", fails.1, checked);
        record("antipode-left", fails.2, checked);
        record("antipode-right", fails.3, checked);

        let rels = alg.relations();
        let mut rel_fail = (Vec::new(), Vec::new(), Vec::new());
        for (k, r) in rels.iter().enumerate() {
            if !self.comultiply_unchecked(r).is_zero() {
                rel_fail.0.push(format!("Δ(relation {k}) ≠ 0"));
            }
            if !self.counit(r).is_zero() {
                rel_fail.1.push(format!("ε(relation {k}) ≠ 0"));
            }
            if !self.antipode_unchecked(r).is_zero() {
                rel_fail.2.push(format!("S(relation {k}) ≠ 0"));
            }
        }
        record("relations-comultiplication", rel_fail.0, rels.len());
        record("relations-counit", rel_fail.1, rels.len());
        record("relations-antipode", rel_fail.2, rels.len());
        Ok(report)
    }

    /// Validates `C` as the generator matrix of an algebra map `B(E) -> k`.
    pub fn character(&self, c: FieldMatrix<F>) -> Result<Character<F>> {
        let n = self.n();
        if c.rows() != n || c.cols() != n {
            return Err(Error::ShapeError(format!("character matrix is {}x{}, expected {n}x{n}", c.rows(), c.cols())));
        }
        let id = FieldMatrix::identity(n);
        let first = self.e_inv.mul(&c.transpose())?.mul(&self.e)?.mul(&c)?;
        let second = c.mul(&self.e_inv)?.mul(&c.transpose())?.mul(&self.e)?;
        for (name, m) in [("E^-1 C^t E C", &first), ("C E^-1 C^t E", &second)] {
            for i in 0..n {
                for j in 0..n {
                    if m[(i, j)] != id[(i, j)] {
                        return Err(Error::NotACharacter(format!(
                            "({name})_{}{} = {}, expected {}",
                            i + 1,
                            j + 1,
                            m[(i, j)],
                            id[(i, j)]
                        )));
                    }
                }
            }
        }
        Ok(Character::new_unchecked(c))
    }

    pub fn counit_character(&self) -> Character<F> {
        Character::counit(self.n())
    }

    /// The sovereign character `Φ(u) = E^{-1}E^t`.
    pub fn sovereign(&self) -> Character<F> {
        Character::new_unchecked(self.sovereign_matrix())
    }

    /// Convolution product `α * β`.
    pub fn char_mul(&self, a: &Character<F>, b: &Character<F>) -> Character<F> {
        Character::new_unchecked(a.matrix().mul(b.matrix()).expect("same size"))
    }

    /// Convolution inverse `α ∘ S`.
    pub fn char_inv(&self, a: &Character<F>) -> Character<F> {
        let m = self.e_inv.mul(&a.matrix().transpose()).and_then(|x| x.mul(&self.e)).expect("same size");
        Character::new_unchecked(m)
    }

    /// Generator images of `α * id * β`, i.e. `u ↦ α(u)·u·β(u)`.
    pub fn twisted_identity(&self, a: &Character<F>, b: &Character<F>) -> Vec<NCPoly<F>> {
        conjugated_generators(a.matrix(), b.matrix(), false)
    }

    /// `σ = Φ*id*Φ` and `θ = S*Φ*Φ` on generators, with the check `S∘θ = σ`.
    pub fn modular_maps(&self) -> ModularMaps<F> {
        let phi = self.sovereign();
        let sigma = self.twisted_identity(&phi, &phi);
        let phi2 = self.char_mul(&phi, &phi);
        let n = self.n();
        let theta: Vec<NCPoly<F>> = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                let mut p = NCPoly::zero();
                for k in 0..n {
                    p.add_scaled(&self.antipode_images[i * n + k], &phi2.matrix()[(k, j)]);
                }
                p
            })
            .collect();
        let s_theta_is_sigma = theta
            .iter()
            .zip(&sigma)
            .all(|(t, s)| self.algebra.reduce(&self.antipode_unchecked(t)) == self.algebra.reduce(s));
        ModularMaps {
            sigma,
            theta,
            s_theta_is_sigma,
        }
    }

    /// Whether `S²(u_ij) = (Φ u Φ^{-1})_ij` for all generators.
    pub fn s_squared_is_conjugation(&self) -> bool {
        let phi = self.sovereign();
        let expected = self.twisted_identity(&phi, &self.char_inv(&phi));
        (0..self.n() * self.n()).all(|k| {
            let u = NCPoly::letter(k as u8);
            self.antipode_unchecked(&self.antipode_unchecked(&u)) == self.algebra.reduce(&expected[k])
        })
    }
}
