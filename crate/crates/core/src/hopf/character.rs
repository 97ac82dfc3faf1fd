use crate::freealg::{NCPoly, Word};
use crate::scalar::{Field, FieldMatrix};

/// An algebra map `B(E) -> k`, stored as its matrix on generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character<F> {
    matrix: FieldMatrix<F>,
}

impl<F: Field> Character<F> {
    /// Wraps a matrix without checking the defining relations.
    pub fn new_unchecked(matrix: FieldMatrix<F>) -> Self {
        Character { matrix }
    }

    pub fn counit(n: usize) -> Self {
        Character {
            matrix: FieldMatrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &FieldMatrix<F> {
        &self.matrix
    }

    pub fn eval_word(&self, w: &Word) -> F {
        let n = self.matrix.cols();
        let mut acc = F::one();
        for &l in w.letters() {
            let v = &self.matrix[(l as usize / n, l as usize % n)];
            if v.is_zero() {
                return F::zero();
            }
            acc *= v;
        }
        acc
    }

    pub fn eval(&self, p: &NCPoly<F>) -> F {
        let mut acc = F::zero();
        for (w, c) in p.terms() {
            let mut t = self.eval_word(w);
            t *= c;
            acc += &t;
        }
        acc
    }
}
