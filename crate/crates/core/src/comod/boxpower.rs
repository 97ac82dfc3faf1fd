use crate::freealg::{NCPoly, Word};
use crate::hopf::{BilinearFormHopf, Tensor};
use crate::scalar::Field;

/// `Δ²(w)` with reduced legs.
fn double_coproduct<F: Field>(h: &BilinearFormHopf<F>, w: &Word) -> Tensor<F> {
    h.comultiply_word(w).map_leg(0, |x| h.comultiply_word(x))
}

/// Coaction of `A^{⊠n}` from the closed formula
/// `a_1 ⊗ ... ⊗ a_n ↦ a_{1(2)} ⊗ ... ⊗ a_{n(2)} ⊗ S(a_{1(1)}...a_{n(1)}) a_{1(3)}...a_{n(3)}`.
pub fn coaction_closed<F: Field>(h: &BilinearFormHopf<F>, x: &Tensor<F>) -> Tensor<F> {
    let n = x.arity();
    let alg = h.algebra();
    let mut out = Tensor::zero(n + 1);
    for (legs, c) in x.terms() {
        // Expand Δ² leg by leg: partial sums of (firsts, middles, lasts).
        let mut partial: Vec<(Word, Vec<Word>, Word, F)> = vec![(Word::empty(), Vec::new(), Word::empty(), c.clone())];
        for a in legs {
            let d2 = double_coproduct(h, a);
            let mut next = Vec::new();
            for (first, mids, last, k) in &partial {
                for (t, v) in d2.terms() {
                    let mut m = mids.clone();
                    m.push(t[1].clone());
                    let mut kv = k.clone();
                    kv *= v;
                    next.push((first.concat(&t[0]), m, last.concat(&t[2]), kv));
                }
            }
            partial = next;
        }
        for (first, mids, last, k) in partial {
            let s = h.antipode_unchecked(&alg.word_normal_form(&first));
            let tail = alg.mul(&s, &NCPoly::word(last));
            let mid_polys: Vec<NCPoly<F>> = mids.into_iter().map(NCPoly::word).collect();
            let mut refs: Vec<&NCPoly<F>> = mid_polys.iter().collect();
            refs.push(&tail);
            out.add_product(&refs, &k);
        }
    }
    out
}

/// Coaction of `A^{⊠n}` built by iterating `- ⊠ A` from `k`.
pub fn coaction_iterated<F: Field>(h: &BilinearFormHopf<F>, x: &Tensor<F>) -> Tensor<F> {
    let n = x.arity();
    let alg = h.algebra();
    let mut out = Tensor::zero(n + 1);
    for (legs, c) in x.terms() {
        if n == 0 {
            out.add_term(vec![Word::empty()], c.clone());
            continue;
        }
        let mut head = Tensor::zero(n - 1);
        head.add_term(legs[..n - 1].to_vec(), F::one());
        let co_head = coaction_iterated(h, &head);
        let d2 = double_coproduct(h, &legs[n - 1]);
        for (hl, hc) in co_head.terms() {
            let z = &hl[n - 1];
            for (al, ac) in d2.terms() {
                let s = h.antipode_unchecked(&NCPoly::word(al[0].clone()));
                let tail = alg.mul(&s, &NCPoly::word(z.concat(&al[2])));
                let mut polys: Vec<NCPoly<F>> = hl[..n - 1].iter().cloned().map(NCPoly::word).collect();
                polys.push(NCPoly::word(al[1].clone()));
                polys.push(tail);
                let mut k = c.clone();
                k *= hc;
                k *= ac;
                out.add_product(&polys.iter().collect::<Vec<_>>(), &k);
            }
        }
    }
    out
}

/// The bar differential `A^{⊠(n+1)} → A^{⊠n}`,
/// `ε(a_1) a_2 ⊗ ... + Σ_i (-1)^i a_1 ⊗ ... ⊗ a_i a_{i+1} ⊗ ...`.
pub fn bar_differential<F: Field>(h: &BilinearFormHopf<F>, x: &Tensor<F>) -> Tensor<F> {
    let m = x.arity();
    assert!(m >= 1);
    let alg = h.algebra();
    let mut out = Tensor::zero(m - 1);
    for (legs, c) in x.terms() {
        let e = h.counit(&NCPoly::word(legs[0].clone()));
        if !e.is_zero() {
            let mut k = c.clone();
            k *= &e;
            out.add_term(legs[1..].to_vec(), k);
        }
        for i in 1..m {
            let prod = alg.word_normal_form(&legs[i - 1].concat(&legs[i]));
            let polys: Vec<NCPoly<F>> = legs[..i - 1]
                .iter()
                .cloned()
                .map(NCPoly::word)
                .chain(std::iter::once((*prod).clone()))
                .chain(legs[i + 1..].iter().cloned().map(NCPoly::word))
                .collect();
            let sign = if i % 2 == 1 { -c.clone() } else { c.clone() };
            out.add_product(&polys.iter().collect::<Vec<_>>(), &sign);
        }
    }
    out
}

/// Applies the bar differential to the first `n+1` legs of a coaction value.
fn bar_on_coaction<F: Field>(h: &BilinearFormHopf<F>, y: &Tensor<F>) -> Tensor<F> {
    let m = y.arity();
    let mut out = Tensor::zero(m - 1);
    for (legs, c) in y.terms() {
        let mut head = Tensor::zero(m - 1);
        head.add_term(legs[..m - 1].to_vec(), F::one());
        for (dl, dc) in bar_differential(h, &head).terms() {
            let mut k = dl.clone();
            k.push(legs[m - 1].clone());
            let mut v = c.clone();
            v *= dc;
            out.add_term(k, v);
        }
    }
    out
}

/// Checks that the bar differential `A^{⊠(n+1)} → A^{⊠n}` commutes with the
/// coactions on all tuples of normal words of degree `≤ d`. Returns the
/// number of tuples checked and the number of failures.
pub fn bar_differential_is_colinear<F: Field>(h: &BilinearFormHopf<F>, n: usize, d: usize) -> crate::Result<(usize, usize)> {
    let words = h.algebra().basis_up_to(d)?;
    let mut tuples: Vec<Vec<Word>> = vec![Vec::new()];
    for _ in 0..=n {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                words.iter().map(move |w| {
                    let mut t = t.clone();
                    t.push(w.clone());
                    t
                })
            })
            .collect();
    }
    let mut failures = 0;
    for t in &tuples {
        let mut x = Tensor::zero(n + 1);
        x.add_term(t.clone(), F::one());
        let lhs = coaction_closed(h, &bar_differential(h, &x));
        let rhs = bar_on_coaction(h, &coaction_closed(h, &x));
        if lhs != rhs {
            failures += 1;
        }
    }
    Ok((tuples.len(), failures))
}
