use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Word};
use crate::hopf::{BilinearFormHopf, Tensor};
use crate::scalar::{Field, FieldMatrix};

/// A finite-dimensional right comodule, `α(e_i) = Σ_k e_k ⊗ c_ki`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<F> {
    dim: usize,
    corep: Vec<NCPoly<F>>,
}

impl<F: Field> Comodule<F> {
    /// Wraps a corepresentation matrix (row-major) without checking the axioms.
    pub fn from_corep(dim: usize, corep: Vec<NCPoly<F>>) -> Result<Self> {
        if corep.len() != dim * dim || dim == 0 {
            return Err(Error::ShapeError(format!("corep has {} entries for dimension {dim}", corep.len())));
        }
        Ok(Comodule { dim, corep })
    }

    pub fn trivial() -> Self {
        Comodule {
            dim: 1,
            corep: vec![NCPoly::one()],
        }
    }

    /// `V_E` with corep `u`.
    pub fn fundamental(h: &BilinearFormHopf<F>) -> Self {
        let n = h.n();
        Comodule {
            dim: n,
            corep: (0..n * n).map(|k| NCPoly::letter(k as u8)).collect(),
        }
    }

    /// `W^*` with `(c_{W^*})_ij = S(c_ji)`.
    pub fn dual(h: &BilinearFormHopf<F>, w: &Comodule<F>) -> Result<Self> {
        let d = w.dim;
        let mut corep = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                corep.push(h.antipode(w.entry(j, i))?);
            }
        }
        Ok(Comodule { dim: d, corep })
    }

    /// `V ⊗ W`, basis `e_i ⊗ f_j` at index `i·dim W + j`.
    pub fn tensor(h: &BilinearFormHopf<F>, v: &Comodule<F>, w: &Comodule<F>) -> Result<Self> {
        let dim = v.dim * w.dim;
        let alg = h.algebra();
        let mut corep = vec![NCPoly::zero(); dim * dim];
        for k in 0..v.dim {
            for l in 0..w.dim {
                for i in 0..v.dim {
                    for j in 0..w.dim {
                        let p = v.entry(k, i).mul(w.entry(l, j));
                        corep[(k * w.dim + l) * dim + i * w.dim + j] = alg.normal_form(&p)?;
                    }
                }
            }
        }
        Ok(Comodule { dim, corep })
    }

    /// `V_E^* ⊗ V_E`.
    pub fn end_fundamental(h: &BilinearFormHopf<F>) -> Result<Self> {
        let v = Self::fundamental(h);
        Self::tensor(h, &Self::dual(h, &v)?, &v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &NCPoly<F> {
        &self.corep[i * self.dim + j]
    }

    pub fn corep(&self) -> &[NCPoly<F>] {
        &self.corep
    }

    /// Checks `Δ(c_ij) = Σ_k c_ik ⊗ c_kj` and `ε(c_ij) = δ_ij`.
    pub fn verify_axioms(&self, h: &BilinearFormHopf<F>) -> Result<bool> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let lhs = h.comultiply(self.entry(i, j))?;
                let mut rhs = Tensor::zero(2);
                for k in 0..d {
                    rhs.add_product(&[self.entry(i, k), self.entry(k, j)], &F::one());
                }
                if lhs != rhs {
                    return Ok(false);
                }
                let expected = if i == j { F::one() } else { F::zero() };
                if h.counit(self.entry(i, j)) != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A scalar linear map between comodules, `dim target × dim source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleMorphism<F> {
    pub matrix: FieldMatrix<F>,
}

impl<F: Field> ComoduleMorphism<F> {
    pub fn new(matrix: FieldMatrix<F>) -> Self {
        ComoduleMorphism { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(FieldMatrix::identity(dim))
    }

    pub fn compose(&self, first: &ComoduleMorphism<F>) -> Result<Self> {
        Ok(Self::new(self.matrix.mul(&first.matrix)?))
    }

    /// `self ⊗ other` on tensor products with the row-major index convention.
    pub fn tensor(&self, other: &ComoduleMorphism<F>) -> Self {
        Self::new(self.matrix.kron(&other.matrix))
    }

    /// Exact check of `W·T = T·V` over the algebra.
    pub fn is_colinear(&self, h: &BilinearFormHopf<F>, source: &Comodule<F>, target: &Comodule<F>) -> Result<bool> {
        check_shape(&self.matrix, source, target)?;
        Ok(colinearity_defect(h, &self.matrix, source, target)?.is_none())
    }
}

fn check_shape<F: Field>(t: &FieldMatrix<F>, source: &Comodule<F>, target: &Comodule<F>) -> Result<()> {
    if t.rows() != target.dim() || t.cols() != source.dim() {
        return Err(Error::ShapeError(format!(
            "map is {}x{}, comodules have dimensions {} -> {}",
            t.rows(),
            t.cols(),
            source.dim(),
            target.dim()
        )));
    }
    Ok(())
}

/// The first entry `(l, i)` where `(W·T − T·V)_li` is nonzero.
fn colinearity_defect<F: Field>(
    h: &BilinearFormHopf<F>,
    t: &FieldMatrix<F>,
    source: &Comodule<F>,
    target: &Comodule<F>,
) -> Result<Option<(usize, usize)>> {
    for l in 0..target.dim() {
        for i in 0..source.dim() {
            let mut p = NCPoly::zero();
            for j in 0..target.dim() {
                p.add_scaled(target.entry(l, j), &t[(j, i)]);
            }
            for k in 0..source.dim() {
                p.add_scaled(source.entry(k, i), &-t[(l, k)].clone());
            }
            if !h.algebra().normal_form(&p)?.is_zero() {
                return Ok(Some((l, i)));
            }
        }
    }
    Ok(None)
}

/// Basis of `Hom_comod(V, W)`, by solving `W·T = T·V` coefficientwise.
pub fn intertwiner_space<F: Field>(
    h: &BilinearFormHopf<F>,
    source: &Comodule<F>,
    target: &Comodule<F>,
) -> Result<Vec<ComoduleMorphism<F>>> {
    let (dv, dw) = (source.dim(), target.dim());
    let unknowns = dv * dw;
    let unknown = |j: usize, i: usize| j * dv + i;
    // Rows keyed by (l, i, word).
    let mut rows: BTreeMap<(usize, usize, Word), Vec<F>> = BTreeMap::new();
    let alg = h.algebra();
    for l in 0..dw {
        for i in 0..dv {
            for j in 0..dw {
                for (w, c) in alg.normal_form(target.entry(l, j))?.terms() {
                    let row = rows.entry((l, i, w.clone())).or_insert_with(|| vec![F::zero(); unknowns]);
                    row[unknown(j, i)] += c;
                }
            }
            for k in 0..dv {
                for (w, c) in alg.normal_form(source.entry(k, i))?.terms() {
                    let row = rows.entry((l, i, w.clone())).or_insert_with(|| vec![F::zero(); unknowns]);
                    row[unknown(l, k)] -= c;
                }
            }
        }
    }
    let system = if rows.is_empty() {
        FieldMatrix::zeros(1, unknowns)
    } else {
        FieldMatrix::from_rows(rows.into_values().collect())?
    };
    let maps: Vec<ComoduleMorphism<F>> = system
        .kernel()
        .into_iter()
        .map(|v| ComoduleMorphism::new(FieldMatrix::from_fn(dw, dv, |j, i| v[unknown(j, i)].clone())))
        .collect();
    for m in &maps {
        if !m.is_colinear(h, source, target)? {
            return Err(Error::Inconsistent("intertwiner failed the colinearity recheck".into()));
        }
    }
    Ok(maps)
}

/// `δ: k → V_E ⊗ V_E`, `1 ↦ Σ E^{-1}_ij e_i ⊗ e_j`.
pub fn delta_map<F: Field>(h: &BilinearFormHopf<F>) -> ComoduleMorphism<F> {
    let n = h.n();
    ComoduleMorphism::new(FieldMatrix::from_fn(n * n, 1, |ij, _| h.e_inv()[(ij / n, ij % n)].clone()))
}

/// `φ: V_E → V_E^*`, `e_i ↦ Σ E_ik e_k^*`.
pub fn phi_map<F: Field>(h: &BilinearFormHopf<F>) -> ComoduleMorphism<F> {
    ComoduleMorphism::new(h.e().transpose())
}

/// Evaluation `V^* ⊗ V → k`, `e_i^* ⊗ e_j ↦ δ_ij`.
pub fn evaluation_map<F: Field>(n: usize) -> ComoduleMorphism<F> {
    ComoduleMorphism::new(FieldMatrix::from_fn(1, n * n, |_, ij| {
        if ij / n == ij % n {
            F::one()
        } else {
            F::zero()
        }
    }))
}

/// Errors with [`Error::NotColinear`] naming the first failing entry.
pub fn require_colinear<F: Field>(
    h: &BilinearFormHopf<F>,
    name: &str,
    m: &ComoduleMorphism<F>,
    source: &Comodule<F>,
    target: &Comodule<F>,
) -> Result<()> {
    check_shape(&m.matrix, source, target)?;
    match colinearity_defect(h, &m.matrix, source, target)? {
        None => Ok(()),
        Some((l, i)) => Err(Error::NotColinear(format!("{name}: entry ({}, {})", l + 1, i + 1))),
    }
}
