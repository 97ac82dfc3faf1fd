use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Word};
use crate::hopf::{BilinearFormHopf, Character};
use crate::linalg::{sparse_rank, SparseVec};
use crate::scalar::Field;

/// The normalized bar complex `Ā^{⊗k}` computing `Tor^A(k_ε, k_γ)`, cut
/// to total degree `≤ D`:
///
/// `d(a_1⊗…⊗a_k) = ε(a_1) a_2⊗…⊗a_k + Σ (−1)^i …⊗a_i a_{i+1}⊗… + (−1)^k a_1⊗…⊗a_{k−1} γ(a_k)`,
///
/// where `Ā = A / k·1` has basis the nonempty normal words. Total degree
/// never increases under `d`, so the cut is a subcomplex.
#[derive(Clone, Debug)]
pub struct BarTruncation<F> {
    pub k_max: usize,
    pub degree: usize,
    /// `bases[k]`: tuples of nonempty normal words, `k = 0..=k_max + 1`.
    pub bases: Vec<Vec<Vec<Word>>>,
    /// `boundaries[k]`: images of `bases[k]` in the coordinates of
    /// `bases[k − 1]`; `boundaries[0]` is empty.
    pub boundaries: Vec<Vec<SparseVec<F>>>,
}

fn tuples(by_degree: &[Vec<Word>], k: usize, degree: usize) -> Vec<Vec<Word>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=degree {
        if first >= by_degree.len() {
            break;
        }
        for rest in tuples(by_degree, k - 1, degree - first) {
            for w in &by_degree[first] {
                let mut t = Vec::with_capacity(k);
                t.push(w.clone());
                t.extend(rest.iter().cloned());
                out.push(t);
            }
        }
    }
    out
}

/// Expected basis size, without building it.
fn tuple_count(dims: &[usize], k: usize, degree: usize) -> usize {
    // ways[t] = number of tuples with total degree exactly t
    let mut ways = vec![0usize; degree + 1];
    ways[0] = 1;
    for _ in 0..k {
        let mut next = vec![0usize; degree + 1];
        for (t, &c) in ways.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, &dj) in dims.iter().enumerate().skip(1) {
                if t + j > degree {
                    break;
                }
                next[t + j] = next[t + j].saturating_add(c.saturating_mul(dj));
            }
        }
        ways = next;
    }
    ways.iter().fold(0usize, |a, &b| a.saturating_add(b))
}

/// Builds the truncated bar complex with coefficients in the character `γ`.
///
/// `max_basis` bounds the size of each chain group; larger requests fail
/// with [`Error::ResourceBudgetExceeded`] before any work is done.
pub fn bar_truncation<F: Field>(
    h: &BilinearFormHopf<F>,
    gamma: &Character<F>,
    k_max: usize,
    degree: usize,
    max_basis: usize,
) -> Result<BarTruncation<F>> {
    let alg = h.algebra();
    alg.check_degree(degree)?;
    let by_degree: Vec<Vec<Word>> = (0..=degree)
        .map(|d| alg.filtration_basis(d).map(|b| b.as_ref().clone()))
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = by_degree.iter().map(Vec::len).collect();
    for k in 0..=k_max + 1 {
        let size = tuple_count(&dims, k, degree);
        if size > max_basis {
            return Err(Error::ResourceBudgetExceeded(format!(
                "bar chain group {k} at degree {degree} has {size} basis elements (limit {max_basis})"
            )));
        }
    }
    let bases: Vec<Vec<Vec<Word>>> = (0..=k_max + 1).map(|k| tuples(&by_degree, k, degree)).collect();
    let mut boundaries = vec![Vec::new()];
    for k in 1..=k_max + 1 {
        let index: HashMap<&[Word], usize> = bases[k - 1].iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let column = |t: &[Word]| -> SparseVec<F> {
            let mut raw = Vec::new();
            let mut push = |key: Vec<Word>, c: F| {
                if key.iter().all(|w| !w.is_empty()) {
                    raw.push((index[key.as_slice()], c));
                }
            };
            let sign = |i: usize| if i.is_multiple_of(2) { F::one() } else { -F::one() };
            let e0 = h.counit(&NCPoly::word(t[0].clone()));
            if !e0.is_zero() {
                push(t[1..].to_vec(), e0);
            }
            for i in 1..k {
                let prod = alg.word_normal_form(&t[i - 1].concat(&t[i]));
                for (w, c) in prod.terms() {
                    let mut key = t[..i - 1].to_vec();
                    key.push(w.clone());
                    key.extend(t[i + 1..].iter().cloned());
                    push(key, c.clone() * sign(i));
                }
            }
            let g = gamma.eval_word(&t[k - 1]);
            if !g.is_zero() {
                push(t[..k - 1].to_vec(), g * sign(k));
            }
            SparseVec::from_entries(raw)
        };
        boundaries.push(bases[k].iter().map(|t| column(t)).collect());
    }
    Ok(BarTruncation {
        k_max,
        degree,
        bases,
        boundaries,
    })
}

impl<F: Field> BarTruncation<F> {
    /// `d_{k−1} ∘ d_k = 0` for every `k ≥ 2` built.
    pub fn composites_vanish(&self) -> bool {
        for k in 2..self.boundaries.len() {
            for col in &self.boundaries[k] {
                let mut acc = SparseVec::new();
                for (i, c) in col.entries() {
                    acc.add_scaled(&self.boundaries[k - 1][*i], c);
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn rank(&self, k: usize) -> usize {
        if k == 0 || k >= self.boundaries.len() {
            return 0;
        }
        sparse_rank(self.boundaries[k].iter().cloned())
    }

    /// `dim H_k` of the truncated complex for `k ≤ k_max`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.k_max + 1).map(|k| self.rank(k)).collect();
        (0..=self.k_max)
            .map(|k| self.bases[k].len() - ranks[k] - ranks[k + 1])
            .collect()
    }
}
