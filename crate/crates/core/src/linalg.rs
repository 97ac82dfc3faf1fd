//! Sparse exact linear algebra: vectors as sorted `(index, value)` lists and
//! an incremental row echelon form keyed by each row's largest index.

use std::collections::HashMap;

use crate::scalar::Field;

/// A sparse vector with strictly increasing indices and no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        SparseVec { entries: Vec::new() }
    }
}

impl<F: Field> SparseVec<F> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from unsorted entries, summing repeated indices.
    pub fn from_entries(mut raw: Vec<(usize, F)>) -> Self {
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(raw.len());
        for (i, c) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The largest index with a nonzero entry, and its value.
    pub fn leading(&self) -> Option<&(usize, F)> {
        self.entries.last()
    }

    pub fn get(&self, index: usize) -> F {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn scale(&mut self, c: &F) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v *= c;
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &SparseVec<F>, c: &F) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v.clone() * c.clone()));
                }
                (Some(_), Some(_)) => {
                    let (i, mut x) = a.next().unwrap();
                    let (_, v) = b.next().unwrap();
                    x += &(v.clone() * c.clone());
                    if !x.is_zero() {
                        out.push((i, x));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v.clone() * c.clone()));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }
}

/// Rows in echelon form: every row is monic at its largest index, and no two
/// rows share that index.
///
/// Because pivots are the largest indices, if coordinates are ordered so that
/// a subspace `W` is spanned by an initial segment of indices, the rows whose
/// pivot lies in that segment form a basis of `span ∩ W`.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: HashMap<usize, SparseVec<F>>,
    inserted: usize,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Echelon {
            rows: HashMap::new(),
            inserted: 0,
        }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors offered so far, dependent or not.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduces `v` until its leading index is not a pivot (or it vanishes).
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        while let Some((top, c)) = v.leading().cloned() {
            match self.rows.get(&top) {
                Some(row) => v.add_scaled(row, &-c),
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        self.inserted += 1;
        let mut v = self.reduce(v);
        let Some((top, c)) = v.leading().cloned() else {
            return false;
        };
        let inv = c.inv().expect("leading coefficient is nonzero");
        v.scale(&inv);
        self.rows.insert(top, v);
        true
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Pivot indices in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Number of rows whose pivot is `< bound`.
    pub fn rank_below(&self, bound: usize) -> usize {
        self.rows.keys().filter(|&&p| p < bound).count()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec<F>> {
        self.rows.get(&pivot)
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<F: Field>(vectors: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(x: i64) -> Rational {
        Rational::from_i64(x)
    }

    fn v(e: &[(usize, i64)]) -> SparseVec<Rational> {
        SparseVec::from_entries(e.iter().map(|&(i, c)| (i, r(c))).collect())
    }

    #[test]
    fn from_entries_merges_and_drops_zeros() {
        let x = v(&[(3, 1), (1, 2), (3, -1), (0, 5)]);
        assert_eq!(x.entries(), &[(0, r(5)), (1, r(2))]);
    }

    #[test]
    fn add_scaled_merges() {
        let mut x = v(&[(0, 1), (2, 3)]);
        x.add_scaled(&v(&[(1, 1), (2, 1), (4, 2)]), &r(-3));
        assert_eq!(x, v(&[(0, 1), (1, -3), (4, -6)]));
    }

    #[test]
    fn echelon_rank_and_filtration() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (5, 1)])));
        assert!(e.insert(v(&[(1, 1), (5, 1)])));
        // (0) - (1) lies in the span and below index 5.
        assert!(e.contains(v(&[(0, 1), (1, -1)])));
        assert!(!e.insert(v(&[(0, 2), (1, -2)])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.rank_below(5), 1);
        assert_eq!(e.inserted(), 3);
    }
}
