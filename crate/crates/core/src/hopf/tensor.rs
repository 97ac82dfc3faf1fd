use std::collections::btree_map::{self, BTreeMap};

use crate::freealg::{NCPoly, PresentedAlgebra, Word};
use crate::scalar::Field;

/// Element of `A^{⊗k}` spanned by tuples of normal words.
#[derive(Clone, Debug)]
pub struct Tensor<F> {
    arity: usize,
    terms: BTreeMap<Vec<Word>, F>,
}

/// `A ⊗ A`, the target of the coproduct.
pub type TensorSquareElement<F> = Tensor<F>;

/// Zero tensors of different arity compare equal.
impl<F: Field> PartialEq for Tensor<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.arity == other.arity || self.terms.is_empty())
    }
}

impl<F: Field> Eq for Tensor<F> {}

impl<F: Field> Tensor<F> {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.add_term(vec![Word::empty(); arity], F::one());
        t
    }

    /// Embeds `p` as a one-leg tensor.
    pub fn from_poly(p: &NCPoly<F>) -> Self {
        let mut t = Self::zero(1);
        for (w, c) in p.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Vec<Word>, F> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Word]) -> F {
        self.terms.get(key).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, key: Vec<Word>, c: F) {
        debug_assert_eq!(key.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor<F>, c: &F) {
        for (k, a) in &other.terms {
            let mut t = a.clone();
            t *= c;
            self.add_term(k.clone(), t);
        }
    }

    pub fn minus(&self, other: &Tensor<F>) -> Tensor<F> {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    /// Adds `c · p_1 ⊗ ... ⊗ p_k`.
    pub fn add_product(&mut self, legs: &[&NCPoly<F>], c: &F) {
        let mut partial: Vec<(Vec<Word>, F)> = vec![(Vec::new(), c.clone())];
        for leg in legs {
            let mut next = Vec::with_capacity(partial.len() * leg.len());
            for (key, a) in &partial {
                for (w, b) in leg.terms() {
                    let mut k = key.clone();
                    k.push(w.clone());
                    let mut ab = a.clone();
                    ab *= b;
                    next.push((k, ab));
                }
            }
            partial = next;
        }
        for (k, a) in partial {
            self.add_term(k, a);
        }
    }

    /// Leg-wise product, each leg reduced in `alg`.
    pub fn mul_in(&self, other: &Tensor<F>, alg: &PresentedAlgebra<F>) -> Tensor<F> {
        assert_eq!(self.arity, other.arity);
        let mut out = Tensor::zero(self.arity);
        for (k1, a) in &self.terms {
            for (k2, b) in &other.terms {
                let legs: Vec<NCPoly<F>> = k1
                    .iter()
                    .zip(k2)
                    .map(|(x, y)| (*alg.word_normal_form(&x.concat(y))).clone())
                    .collect();
                let mut ab = a.clone();
                ab *= b;
                out.add_product(&legs.iter().collect::<Vec<_>>(), &ab);
            }
        }
        out
    }

    /// Applies a linear map `Word -> Tensor` to leg `leg`, splicing its legs in.
    pub fn map_leg(&self, leg: usize, mut f: impl FnMut(&Word) -> Tensor<F>) -> Tensor<F> {
        let mut out: Option<Tensor<F>> = None;
        for (key, c) in &self.terms {
            let image = f(&key[leg]);
            let o = out.get_or_insert_with(|| Tensor::zero(self.arity - 1 + image.arity));
            for (ik, ic) in image.terms() {
                let mut k = key[..leg].to_vec();
                k.extend(ik.iter().cloned());
                k.extend(key[leg + 1..].iter().cloned());
                let mut cc = c.clone();
                cc *= ic;
                o.add_term(k, cc);
            }
        }
        out.unwrap_or_else(|| Tensor::zero(self.arity))
    }

    /// Multiplies all legs together in `alg`.
    pub fn multiply_out(&self, alg: &PresentedAlgebra<F>) -> NCPoly<F> {
        let mut out = NCPoly::zero();
        for (key, c) in &self.terms {
            let w = key.iter().fold(Word::empty(), |acc, x| acc.concat(x));
            out.add_scaled(&alg.word_normal_form(&w), c);
        }
        out
    }
}
