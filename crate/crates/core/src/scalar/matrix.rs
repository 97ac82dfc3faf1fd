use std::fmt;
use std::ops::{Index, IndexMut};

use super::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> FieldMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FieldMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FieldMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeError("ragged rows".into()));
        }
        Ok(FieldMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses a matrix of scalar literals.
    pub fn parse<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| F::parse(s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as literal strings.
    pub fn to_literals(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeError(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let mut t = a.clone();
                        t *= b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.clone();
        for a in &mut out.data {
            *a *= c;
        }
        out
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeError(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn trace(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::ShapeError("trace of a non-square matrix".into()));
        }
        let mut t = F::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        Ok(t)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Kronecker product, rows indexed by `(i, k) -> i * rhs.rows + k`.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let mut v = self[(r / rhs.rows, c / rhs.cols)].clone();
            v *= &rhs[(r % rhs.rows, c % rhs.cols)];
            v
        })
    }

    /// Gauss-Jordan inverse; the result is checked against the identity.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeError("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a[(r, col)].is_zero())
                .min_by_key(|&r| a[(r, col)].weight())
                .ok_or(Error::SingularMatrix)?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = a[(col, col)].inv()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    a.sub_row_multiple(r, col, &f);
                    inv.sub_row_multiple(r, col, &f);
                }
            }
        }
        debug_assert_eq!(self.mul(&inv).unwrap(), Self::identity(n));
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: &F) {
        for j in 0..self.cols {
            self[(r, j)] *= c;
        }
    }

    /// row[target] -= f * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, f: &F) {
        for j in 0..self.cols {
            if self[(source, j)].is_zero() {
                continue;
            }
            let mut t = self[(source, j)].clone();
            t *= f;
            self[(target, j)] -= &t;
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows)
                .filter(|&r| !a[(r, col)].is_zero())
                .min_by_key(|&r| a[(r, col)].weight())
            else {
                continue;
            };
            a.swap_rows(p, row);
            let inv = a[(row, col)].inv().expect("nonzero pivot");
            a.scale_row(row, &inv);
            for r in 0..a.rows {
                if r != row && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    a.sub_row_multiple(r, row, &f);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(); self.cols];
                v[free] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, free)].clone();
                }
                v
            })
            .collect()
    }

    pub fn apply(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::ShapeError("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        let mut t = a.clone();
                        t *= x;
                        acc += &t;
                    }
                }
                acc
            })
            .collect())
    }
}

impl<F> Index<(usize, usize)> for FieldMatrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for FieldMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Display for FieldMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `tr(E^{-1} E^t)`, the invariant that decides which `B(E)` share a comodule category.
pub fn trace_invariant<F: Field>(e: &FieldMatrix<F>) -> Result<F> {
    e.inverse()?.mul(&e.transpose())?.trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{RatFunc, Rational};

    fn rq(rows: &[&[&str]]) -> FieldMatrix<RatFunc> {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        FieldMatrix::parse(&rows).unwrap()
    }

    fn eq_matrix() -> FieldMatrix<RatFunc> {
        rq(&[&["0", "1"], &["-1/q", "0"]])
    }

    #[test]
    fn inverse_of_eq() {
        let e = eq_matrix();
        let inv = e.inverse().unwrap();
        assert_eq!(inv, rq(&[&["0", "-q"], &["1", "0"]]));
        assert_eq!(e.mul(&inv).unwrap(), FieldMatrix::identity(2));
    }

    #[test]
    fn trace_invariants() {
        assert_eq!(trace_invariant(&eq_matrix()).unwrap(), RatFunc::parse("-q - 1/q").unwrap());
        let i2 = FieldMatrix::<Rational>::identity(2);
        assert_eq!(trace_invariant(&i2).unwrap(), Rational::from_i64(2));
        let j4 = FieldMatrix::<Rational>::from_fn(4, 4, |i, j| match (i, j) {
            (0, 2) | (1, 3) => Rational::from_i64(1),
            (2, 0) | (3, 1) => Rational::from_i64(-1),
            _ => Rational::from_i64(0),
        });
        assert_eq!(trace_invariant(&j4).unwrap(), Rational::from_i64(-4));
    }

    #[test]
    fn transpose_identity() {
        let i3 = FieldMatrix::<Rational>::identity(3);
        assert_eq!(i3.transpose(), i3);
    }

    #[test]
    fn singular_and_shape_errors() {
        let m = FieldMatrix::<Rational>::parse(&[vec!["1", "0"], vec!["0", "0"]]).unwrap();
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
        assert_eq!(trace_invariant(&m), Err(Error::SingularMatrix));
        let r = FieldMatrix::<Rational>::zeros(2, 3);
        assert!(matches!(r.mul(&r), Err(Error::ShapeError(_))));
        assert!(matches!(r.trace(), Err(Error::ShapeError(_))));
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = FieldMatrix::<Rational>::parse(&[vec!["1", "2", "3"], vec!["2", "4", "6"]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(m.apply(&v).unwrap().iter().all(num_traits::Zero::is_zero));
        }
    }
}
