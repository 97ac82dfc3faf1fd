//! Hochschild (co)homology of `B(E)` with coefficients in one-dimensional
//! bimodules `_α k_β`, and bialgebra cohomology.

use std::fmt;

use crate::comod::{intertwiner_space, Comodule, YdMap};
use crate::error::{Error, Result};
use crate::hopf::{BilinearFormHopf, Character};
use crate::resolution::{bar_truncation, FreeYDComplex};
use crate::scalar::{trace_invariant, Field, FieldMatrix, Rational};

/// The bimodule `_α k_β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterBimodule<F> {
    pub alpha: Character<F>,
    pub beta: Character<F>,
}

impl<F: Field> CharacterBimodule<F> {
    pub fn new(alpha: Character<F>, beta: Character<F>) -> Self {
        CharacterBimodule { alpha, beta }
    }

    /// `_{α∘σ} k_β`, the bimodule twisted by the modular automorphism.
    /// `α∘σ` has matrix `Φ α Φ`.
    pub fn sigma_twisted(&self, h: &BilinearFormHopf<F>) -> Result<Self> {
        let phi = h.sovereign_matrix();
        let m = phi.mul(self.alpha.matrix())?.mul(&phi)?;
        Ok(CharacterBimodule::new(h.character(m)?, self.beta.clone()))
    }
}

/// `γ = β^{-1} * α`, matrix `E^{-1} β^t E α`.
pub fn twist_gamma<F: Field>(h: &BilinearFormHopf<F>, alpha: &Character<F>, beta: &Character<F>) -> Result<Character<F>> {
    let g = h.char_mul(&h.char_inv(beta), alpha);
    h.character(g.matrix().clone())
}

/// `α^{-1} * β`, the character by which `A` acts on `M''`.
fn cotwist<F: Field>(h: &BilinearFormHopf<F>, alpha: &Character<F>, beta: &Character<F>) -> Result<Character<F>> {
    let g = h.char_mul(&h.char_inv(alpha), beta);
    h.character(g.matrix().clone())
}

/// `0 → k --d3--> k^{n²} --d2--> k^{n²} --d1--> k → 0`, with `d3, d2, d1`
/// induced by `φ1, φ2, φ3` and homological degrees `3, 2, 1, 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteComplex<F> {
    /// Matrices of `φ1, φ2, φ3` with coefficients evaluated.
    pub maps: [FieldMatrix<F>; 3],
}

impl<F: Field> FiniteComplex<F> {
    /// Chain group dimensions from the left: `[1, n², n², 1]`.
    pub fn dims(&self) -> [usize; 4] {
        [self.maps[0].cols(), self.maps[1].cols(), self.maps[2].cols(), self.maps[2].rows()]
    }

    pub fn composites_vanish(&self) -> Result<bool> {
        Ok(self.maps[1].mul(&self.maps[0])?.is_zero() && self.maps[2].mul(&self.maps[1])?.is_zero())
    }

    fn ranks(&self) -> [usize; 3] {
        [self.maps[0].rank(), self.maps[1].rank(), self.maps[2].rank()]
    }

    /// `[H_0, H_1, H_2, H_3]`.
    pub fn homology_dims(&self) -> [usize; 4] {
        let [r1, r2, r3] = self.ranks();
        let [c3, c2, c1, c0] = self.dims();
        [c0 - r3, c1 - r3 - r2, c2 - r2 - r1, c3 - r1]
    }

    /// `[H^0, H^1, H^2, H^3]` of the transposed complex.
    pub fn cohomology_dims(&self) -> [usize; 4] {
        // Transposition preserves ranks and reverses the arrows, so the
        // dimension count is the same as for homology.
        self.homology_dims()
    }
}

/// Evaluates every coefficient of the resolution at `γ`.
pub fn specialize_resolution<F: Field>(
    complex: &FreeYDComplex<F>,
    gamma: &Character<F>,
) -> Result<FiniteComplex<F>> {
    let eval = |m: &YdMap<F>| FieldMatrix::from_fn(m.rows(), m.cols(), |r, c| gamma.eval(m.entry(r, c)));
    let maps = [eval(complex.phi(1)), eval(complex.phi(2)), eval(complex.phi(3))];
    let fc = FiniteComplex { maps };
    if !fc.composites_vanish()? {
        return Err(Error::Inconsistent("specialized boundaries do not compose to zero".into()));
    }
    Ok(fc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Resolution,
    BarOracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed-form",
            Method::Resolution => "resolution",
            Method::BarOracle => "bar-oracle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    /// `[H_0, H_1, H_2, H_3]`.
    pub dims: [usize; 4],
    pub method: Method,
}

/// `H_*(B(E), _α k_β)` from the resolution tensored with `k_γ`.
pub fn homology_dims<F: Field>(
    h: &BilinearFormHopf<F>,
    complex: &FreeYDComplex<F>,
    m: &CharacterBimodule<F>,
) -> Result<HomologyReport> {
    let gamma = twist_gamma(h, &m.alpha, &m.beta)?;
    Ok(HomologyReport {
        dims: specialize_resolution(complex, &gamma)?.homology_dims(),
        method: Method::Resolution,
    })
}

/// The four closed formulas, evaluated with plain linear algebra on `M_n(k)`.
pub fn closed_form_dims<F: Field>(h: &BilinearFormHopf<F>, m: &CharacterBimodule<F>) -> Result<HomologyReport> {
    let n = h.n();
    let gamma = twist_gamma(h, &m.alpha, &m.beta)?;
    let g = gamma.matrix();
    let e = h.e();
    let et = e.transpose();
    let et_inv = et.inverse()?;

    let phi2 = h.sovereign_matrix().mul(&h.sovereign_matrix())?;
    let beta_phi2 = h.char_mul(&m.beta, &Character::new_unchecked(phi2));
    let h0 = usize::from(m.alpha == m.beta);
    let h3 = usize::from(m.alpha == beta_phi2);

    // tr(M γ^t) = tr(M), i.e. Σ_ij M_ij (γ_ij − δ_ij) = 0.
    let constraint = FieldMatrix::from_fn(1, n * n, |_, ij| {
        let (i, j) = (ij / n, ij % n);
        let mut c = g[(i, j)].clone();
        if i == j {
            c -= &F::one();
        }
        c
    });
    // M ↦ M + E^t M^t γ E^{-t} on the basis of matrix units.
    let right = g.mul(&et_inv)?;
    let l = FieldMatrix::from_fn(n * n, n * n, |kl, ij| {
        let (k, l, i, j) = (kl / n, kl % n, ij / n, ij % n);
        // (E^t M^t γE^{-t})_kl with M = e_ij is E^t_kj (γE^{-t})_il.
        let mut c = et[(k, j)].clone() * right[(i, l)].clone();
        if kl == ij {
            c += &F::one();
        }
        c
    });
    let rank_l = l.rank();
    let v = et.mul(h.e_inv())?.sub(&e.mul(g)?.mul(&et_inv)?)?;
    let rank_v = usize::from(!v.is_zero());

    let numerator = n * n - constraint.rank();
    Ok(HomologyReport {
        dims: [h0, numerator - rank_l, n * n - rank_l - rank_v, h3],
        method: Method::ClosedForm,
    })
}

/// `H^*(B(E), _α k_β) = Ext^*(k_ε, M'')`, from the transposed resolution
/// with coefficients in `α^{-1} * β`.
pub fn ext_dims<F: Field>(h: &BilinearFormHopf<F>, complex: &FreeYDComplex<F>, m: &CharacterBimodule<F>) -> Result<[usize; 4]> {
    let c = cotwist(h, &m.alpha, &m.beta)?;
    Ok(specialize_resolution(complex, &c)?.cohomology_dims())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareReport {
    /// `H^n(B(E), M)` for `n = 0..3`.
    pub cohomology: [usize; 4],
    /// `H_{3−n}(B(E), _σM)` for `n = 0..3`.
    pub twisted_homology: [usize; 4],
}

impl PoincareReport {
    pub fn passed(&self) -> bool {
        self.cohomology == self.twisted_homology
    }
}

/// Compares `H^n(M)` with `H_{3−n}(_σM)`.
pub fn poincare_check<F: Field>(
    h: &BilinearFormHopf<F>,
    complex: &FreeYDComplex<F>,
    m: &CharacterBimodule<F>,
) -> Result<PoincareReport> {
    let cohomology = ext_dims(h, complex, m)?;
    let twisted = homology_dims(h, complex, &m.sigma_twisted(h)?)?.dims;
    Ok(PoincareReport {
        cohomology,
        twisted_homology: [twisted[3], twisted[2], twisted[1], twisted[0]],
    })
}

/// Whether the parameter `q` with `tr(E^{-1}E^t) = −q − q^{-1}` is generic
/// (`q = ±1` or not a root of unity).
///
/// A rational trace `t` gives `q + q^{-1} = −t`; a root of unity other than
/// `±1` has `q + q^{-1} = 2cos(2πk/m)`, which is rational only for
/// `t ∈ {−1, 0, 1}`. A nonconstant trace over `Q(q)` is always generic.
pub fn is_generic<F: Field>(h: &BilinearFormHopf<F>) -> Result<bool> {
    let t = trace_invariant(h.e())?;
    Ok(match t.to_ratfunc().as_constant() {
        None => true,
        Some(c) => ![-1i64, 0, 1].iter().any(|&x| c == Rational::from_i64(x)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraCohomology {
    /// `H_b^n` for `n = 0..3`.
    pub dims: [usize; 4],
    /// `dim Hom_comod(V_k, k)` for the four terms of the resolution.
    pub hom_dims: [usize; 4],
}

/// Bialgebra cohomology as `Ext_YD(k, k)`, via
/// `Hom_YD(V ⊠ A, k) = Hom_comod(V, k)`.
pub fn bialgebra_cohomology<F: Field>(
    h: &BilinearFormHopf<F>,
    complex: &FreeYDComplex<F>,
    assume_cosemisimple: bool,
) -> Result<BialgebraCohomology> {
    if !assume_cosemisimple && !is_generic(h)? {
        return Err(Error::NotGeneric(format!(
            "trace invariant {} makes q a nontrivial root of unity",
            trace_invariant(h.e())?
        )));
    }
    let triv = Comodule::trivial();
    let end = Comodule::end_fundamental(h)?;
    // P_0 = k⊠A, P_1 = P_2 = (V*⊗V)⊠A, P_3 = k⊠A.
    let bases = [&triv, &end, &end, &triv];
    let homs: Vec<Vec<Vec<F>>> = bases
        .iter()
        .map(|v| {
            Ok(intertwiner_space(h, v, &triv)?
                .into_iter()
                .map(|m| m.matrix.row(0).to_vec())
                .collect())
        })
        .collect::<Result<_>>()?;
    let hom_dims = [homs[0].len(), homs[1].len(), homs[2].len(), homs[3].len()];
    if !assume_cosemisimple && hom_dims != [1, 1, 1, 1] {
        return Err(Error::NotGeneric(format!("Hom dimensions {hom_dims:?} differ from (1, 1, 1, 1)")));
    }
    // d^k: Hom(P_k) → Hom(P_{k+1}), g ↦ g · ε(φ), with φ3, φ2, φ1 in turn.
    let mut ranks = [0usize; 3];
    for (k, rank) in ranks.iter_mut().enumerate() {
        let phi = complex.phi(3 - k);
        let eps = FieldMatrix::from_fn(phi.rows(), phi.cols(), |r, c| h.counit(phi.entry(r, c)));
        let images: Vec<Vec<F>> = homs[k]
            .iter()
            .map(|g| FieldMatrix::from_rows(vec![g.clone()]).and_then(|row| row.mul(&eps)).map(|m| m.row(0).to_vec()))
            .collect::<Result<_>>()?;
        *rank = if images.is_empty() { 0 } else { FieldMatrix::from_rows(images)?.rank() };
    }
    let dims = [
        hom_dims[0] - ranks[0],
        hom_dims[1] - ranks[0] - ranks[1],
        hom_dims[2] - ranks[1] - ranks[2],
        hom_dims[3] - ranks[2],
    ];
    Ok(BialgebraCohomology { dims, hom_dims })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarOracleReport {
    /// `dim Tor_k` for `k ≤ k_max` at the largest degree computed.
    pub dims: Vec<usize>,
    /// For each `k`, the first degree from which the value stayed fixed over
    /// two consecutive degrees, if any. This is a heuristic, not a proof.
    pub stabilized_at: Vec<Option<usize>>,
    /// `history[i]` holds the dimensions at internal degree `degrees[i]`.
    pub degrees: Vec<usize>,
    pub history: Vec<Vec<usize>>,
}

impl BarOracleReport {
    pub fn method(&self) -> Method {
        Method::BarOracle
    }
}

/// `Tor_k(k_ε, k_γ)` for `k ≤ k_max` from truncated bar complexes at internal
/// degree `1..=degree`.
pub fn tor_bar_oracle<F: Field>(
    h: &BilinearFormHopf<F>,
    gamma: &Character<F>,
    k_max: usize,
    degree: usize,
    max_basis: usize,
) -> Result<BarOracleReport> {
    let mut degrees = Vec::new();
    let mut history: Vec<Vec<usize>> = Vec::new();
    for d in 1..=degree {
        let bar = bar_truncation(h, gamma, k_max, d, max_basis)?;
        if !bar.composites_vanish() {
            return Err(Error::Inconsistent(format!("bar differential squares to nonzero at degree {d}")));
        }
        degrees.push(d);
        history.push(bar.homology_dims());
    }
    let mut stabilized_at = vec![None; k_max + 1];
    for (k, slot) in stabilized_at.iter_mut().enumerate() {
        let last = history.last().map(|v| v[k]);
        // Earliest i with history[i..] constant and at least two entries.
        let mut i = history.len();
        while i > 0 && Some(history[i - 1][k]) == last {
            i -= 1;
        }
        if history.len() - i >= 2 {
            *slot = Some(degrees[i]);
        }
    }
    Ok(BarOracleReport {
        dims: history.last().cloned().unwrap_or_default(),
        stabilized_at,
        degrees,
        history,
    })
}
