use std::collections::btree_map::{self, BTreeMap};

use super::{Alphabet, Word};
use crate::scalar::Field;

/// Element of the free associative algebra: a finite map from words to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NCPoly<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for NCPoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> NCPoly<F> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn letter(l: u8) -> Self {
        Self::term(Word::letter(l), F::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, F::one())
    }

    pub fn term(w: Word, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, F)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
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

    /// Maximal word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn leading(&self) -> Option<(&Word, &F)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Word, F> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, F> {
        self.terms
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Word::is_empty)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&Word::empty())
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn pop_leading(&mut self) -> Option<(Word, F)> {
        self.terms.pop_last()
    }

    pub fn add_scaled(&mut self, other: &NCPoly<F>, c: &F) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            let mut t = a.clone();
            t *= c;
            self.add_term(w.clone(), t);
        }
    }

    pub fn add_assign(&mut self, other: &NCPoly<F>) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &NCPoly<F>) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), -a.clone());
        }
    }

    pub fn plus(&self, other: &NCPoly<F>) -> NCPoly<F> {
        let mut p = self.clone();
        p.add_assign(other);
        p
    }

    pub fn minus(&self, other: &NCPoly<F>) -> NCPoly<F> {
        let mut p = self.clone();
        p.sub_assign(other);
        p
    }

    pub fn scale(&self, c: &F) -> NCPoly<F> {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| {
                    let mut t = a.clone();
                    t *= c;
                    (w.clone(), t)
                })
                .collect(),
        }
    }

    pub fn neg(&self) -> NCPoly<F> {
        self.scale(&-F::one())
    }

    /// Concatenation product in the free algebra.
    pub fn mul(&self, other: &NCPoly<F>) -> NCPoly<F> {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut c = x.clone();
                c *= y;
                out.add_term(a.concat(b), c);
            }
        }
        out
    }

    /// `left * self * right` for words.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NCPoly<F> {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    /// Linear extension of a map on words.
    pub fn map_linear(&self, mut f: impl FnMut(&Word) -> NCPoly<F>) -> NCPoly<F> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(w, c)| format!("({c})*{}", alphabet.render(w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type P = NCPoly<Rational>;

    #[test]
    fn noncommutative_expansion() {
        let (x, y) = (P::letter(0), P::letter(1));
        let lhs = x.plus(&y).mul(&x.minus(&y));
        let expected = P::from_terms([
            (Word::from_slice(&[0, 0]), Rational::from_i64(1)),
            (Word::from_slice(&[0, 1]), Rational::from_i64(-1)),
            (Word::from_slice(&[1, 0]), Rational::from_i64(1)),
            (Word::from_slice(&[1, 1]), Rational::from_i64(-1)),
        ]);
        assert_eq!(lhs, expected);
        assert_eq!(lhs.mul(&P::one()), lhs);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = P::letter(0);
        p.add_term(Word::letter(0), Rational::from_i64(-1));
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }
}
