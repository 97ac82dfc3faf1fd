use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use super::{Alphabet, NCPoly, Word};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// A rewrite rule `lhs -> rhs` with `rhs` strictly below `lhs` in deglex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule<F> {
    pub lhs: Word,
    pub rhs: NCPoly<F>,
}

impl<F: Field> Rule<F> {
    /// `lhs - rhs`, the ideal element the rule encodes.
    pub fn as_poly(&self) -> NCPoly<F> {
        let mut p = self.rhs.neg();
        p.add_term(self.lhs.clone(), F::one());
        p
    }
}

/// Lookup structure for the left-hand sides of a rule set.
#[derive(Clone, Debug, Default)]
struct RuleIndex {
    by_lhs: HashMap<Word, usize>,
    lengths: Vec<usize>,
}

impl RuleIndex {
    fn build<F>(rules: &[Rule<F>]) -> Self {
        let by_lhs: HashMap<Word, usize> =
            rules.iter().enumerate().map(|(i, r)| (r.lhs.clone(), i)).collect();
        let mut lengths: Vec<usize> = rules.iter().map(|r| r.lhs.len()).collect();
        lengths.sort_unstable();
        lengths.dedup();
        RuleIndex { by_lhs, lengths }
    }

    /// A rule whose left-hand side is a suffix of `w`, preferring the shortest.
    fn suffix_match(&self, w: &[u8]) -> Option<(usize, usize)> {
        for &l in &self.lengths {
            if l > w.len() {
                break;
            }
            let start = w.len() - l;
            if let Some(&i) = self.by_lhs.get(&Word::from_slice(&w[start..])) {
                return Some((start, i));
            }
        }
        None
    }

    /// All `(position, rule)` matches inside `w`.
    fn all_matches(&self, w: &[u8]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &l in &self.lengths {
            if l > w.len() {
                break;
            }
            for start in 0..=w.len() - l {
                if let Some(&i) = self.by_lhs.get(&Word::from_slice(&w[start..start + l])) {
                    out.push((start, i));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn is_reducible(&self, w: &[u8]) -> bool {
        self.lengths.iter().any(|&l| {
            l <= w.len() && (0..=w.len() - l).any(|s| self.by_lhs.contains_key(&Word::from_slice(&w[s..s + l])))
        })
    }
}

/// Rewriting engine over a fixed rule set with memoised word normal forms.
struct Rewriter<F> {
    rules: Vec<Rule<F>>,
    index: RuleIndex,
    collapsed: bool,
    cache: RwLock<HashMap<Word, Arc<NCPoly<F>>>>,
    steps: AtomicU64,
}

impl<F: Field> Rewriter<F> {
    fn new(rules: Vec<Rule<F>>, collapsed: bool) -> Self {
        let index = RuleIndex::build(&rules);
        Rewriter {
            rules,
            index,
            collapsed,
            cache: RwLock::new(HashMap::new()),
            steps: AtomicU64::new(0),
        }
    }

    /// Normal form of a single word.
    ///
    /// The prefix `w[..n-1]` is reduced first (and cached); appending the
    /// last letter to an irreducible word can only create matches that end
    /// at the last position.
    fn word_nf(&self, w: &Word) -> Arc<NCPoly<F>> {
        if let Some(p) = self.cache.read().unwrap().get(w) {
            return p.clone();
        }
        let result = if self.collapsed {
            NCPoly::zero()
        } else if w.is_empty() {
            NCPoly::one()
        } else {
            let letters = w.letters();
            let last = letters[letters.len() - 1];
            let prefix = self.word_nf(&Word::from_slice(&letters[..letters.len() - 1]));
            let mut out = NCPoly::zero();
            for (t, c) in prefix.terms() {
                let mut tw = t.clone();
                tw.push(last);
                match self.index.suffix_match(tw.letters()) {
                    None => out.add_term(tw, c.clone()),
                    Some((start, ri)) => {
                        self.steps.fetch_add(1, Ordering::Relaxed);
                        let head = tw.slice(0, start);
                        for (s, d) in self.rules[ri].rhs.terms() {
                            let mut cd = c.clone();
                            cd *= d;
                            out.add_scaled(&self.word_nf(&head.concat(s)), &cd);
                        }
                    }
                }
            }
            out
        };
        let result = Arc::new(result);
        self.cache.write().unwrap().insert(w.clone(), result.clone());
        result
    }

    fn reduce(&self, p: &NCPoly<F>) -> NCPoly<F> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.word_nf(w), c);
        }
        out
    }

    /// Every overlap ambiguity of the rule set, of any length, resolves.
    /// Together with inter-reduction (no inclusion ambiguities) this is the
    /// diamond-lemma criterion for global confluence.
    fn all_overlaps_resolve(&self) -> bool {
        for ri in &self.rules {
            for rj in &self.rules {
                let (li, lj) = (ri.lhs.letters(), rj.lhs.letters());
                for k in 1..li.len().min(lj.len()) {
                    if li[li.len() - k..] != lj[..k] {
                        continue;
                    }
                    let a = ri.lhs.slice(0, li.len() - k);
                    let c = rj.lhs.slice(k, lj.len());
                    let mut s = rj.rhs.sandwich(&a, &Word::empty());
                    s.sub_assign(&ri.rhs.sandwich(&Word::empty(), &c));
                    if !self.reduce(&s).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl<F: Field> Clone for Rewriter<F> {
    fn clone(&self) -> Self {
        Rewriter::new(self.rules.clone(), self.collapsed)
    }
}

/// A finitely presented algebra with a Gröbner basis completed through a
/// fixed word length.
///
/// Normal forms are canonical for elements of degree at most
/// [`certified_degree`](Self::certified_degree). The structure is immutable
/// once built and safe to share between threads.
pub struct PresentedAlgebra<F> {
    alphabet: Alphabet,
    relations: Vec<NCPoly<F>>,
    truncation: usize,
    certified: usize,
    complete: bool,
    rw: Rewriter<F>,
    dims: Vec<usize>,
    bases: RwLock<Vec<Arc<Vec<Word>>>>,
    completion_steps: u64,
}

impl<F: Field> Clone for PresentedAlgebra<F> {
    fn clone(&self) -> Self {
        PresentedAlgebra {
            alphabet: self.alphabet.clone(),
            relations: self.relations.clone(),
            truncation: self.truncation,
            certified: self.certified,
            complete: self.complete,
            rw: self.rw.clone(),
            dims: self.dims.clone(),
            bases: RwLock::new(self.bases.read().unwrap().clone()),
            completion_steps: self.completion_steps,
        }
    }
}

impl<F: Field> fmt::Debug for PresentedAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedAlgebra")
            .field("generators", &self.alphabet.len())
            .field("relations", &self.relations.len())
            .field("truncation", &self.truncation)
            .field("certified", &self.certified)
            .field("complete", &self.complete)
            .field("rules", &self.rw.rules.len())
            .field("dims", &self.dims)
            .finish()
    }
}

enum Pending<F> {
    Poly(NCPoly<F>),
    /// `lhs_i = A·B`, `lhs_j = B·C` with `|A| = shift`.
    Overlap { i: usize, j: usize, shift: usize },
}

/// Deterministic truncated Buchberger completion.
struct Completion<F> {
    alphabet_len: usize,
    max_len: usize,
    rules: Vec<Option<Rule<F>>>,
    rw: Rewriter<F>,
    queue: BinaryHeap<Reverse<(usize, u64)>>,
    pending: HashMap<u64, Pending<F>>,
    seq: u64,
    collapsed: bool,
    steps: u64,
}

impl<F: Field> Completion<F> {
    fn push(&mut self, len: usize, item: Pending<F>) {
        self.queue.push(Reverse((len, self.seq)));
        self.pending.insert(self.seq, item);
        self.seq += 1;
    }

    fn refresh(&mut self) {
        self.steps += self.rw.steps.load(Ordering::Relaxed);
        let live: Vec<Rule<F>> = self.rules.iter().flatten().cloned().collect();
        self.rw = Rewriter::new(live, false);
    }

    fn live_rule(&self, i: usize) -> Option<&Rule<F>> {
        self.rules.get(i).and_then(Option::as_ref)
    }

    fn s_polynomial(&self, i: usize, j: usize, shift: usize) -> Option<NCPoly<F>> {
        let (ri, rj) = (self.live_rule(i)?, self.live_rule(j)?);
        let overlap = ri.lhs.len() - shift;
        let c = rj.lhs.slice(overlap, rj.lhs.len());
        let a = ri.lhs.slice(0, shift);
        // (l_i - r_i)·C - A·(l_j - r_j) = A·r_j - r_i·C
        let mut s = rj.rhs.sandwich(&a, &Word::empty());
        s.sub_assign(&ri.rhs.sandwich(&Word::empty(), &c));
        Some(s)
    }

    fn add_overlaps(&mut self, new: usize) {
        let ids: Vec<usize> = (0..self.rules.len()).filter(|&k| self.rules[k].is_some()).collect();
        let mut found = Vec::new();
        for &other in &ids {
            for (i, j) in [(new, other), (other, new)] {
                if i == j && other != new {
                    continue;
                }
                let (li, lj) = (&self.live_rule(i).unwrap().lhs, &self.live_rule(j).unwrap().lhs);
                for k in 1..li.len().min(lj.len()) {
                    let total = li.len() + lj.len() - k;
                    if total > self.max_len {
                        continue;
                    }
                    if li.letters()[li.len() - k..] == lj.letters()[..k] {
                        found.push((total, i, j, li.len() - k));
                    }
                }
                if i == j {
                    break;
                }
            }
        }
        for (total, i, j, shift) in found {
            self.push(total, Pending::Overlap { i, j, shift });
        }
    }

    fn add_rule(&mut self, p: NCPoly<F>) {
        let (lead, lc) = {
            let (w, c) = p.leading().expect("nonzero");
            (w.clone(), c.clone())
        };
        if lead.is_empty() {
            self.collapsed = true;
            return;
        }
        let inv = lc.inv().expect("nonzero leading coefficient");
        let mut rhs = p.scale(&-inv);
        rhs.add_term(lead.clone(), F::one());
        debug_assert!(rhs.degree().is_none_or(|_| rhs.leading().unwrap().0 < &lead));
        let mut displaced = Vec::new();
        for slot in self.rules.iter_mut() {
            if slot.as_ref().is_some_and(|r| r.lhs.contains(&lead)) {
                displaced.push(slot.take().unwrap().as_poly());
            }
        }
        self.rules.push(Some(Rule { lhs: lead, rhs }));
        self.refresh();
        let id = self.rules.len() - 1;
        for d in displaced {
            let len = d.degree().unwrap_or(0);
            self.push(len, Pending::Poly(d));
        }
        self.add_overlaps(id);
    }

    fn run(&mut self) {
        while let Some(Reverse((_, seq))) = self.queue.pop() {
            if self.collapsed {
                return;
            }
            let candidate = match self.pending.remove(&seq).expect("queued item") {
                Pending::Poly(p) => Some(p),
                Pending::Overlap { i, j, shift } => self.s_polynomial(i, j, shift),
            };
            let Some(candidate) = candidate else { continue };
            let reduced = self.rw.reduce(&candidate);
            if !reduced.is_zero() {
                self.add_rule(reduced);
            }
        }
    }

    fn finish(mut self) -> (Vec<Rule<F>>, bool, u64) {
        if self.collapsed {
            return (Vec::new(), true, self.steps);
        }
        // Right-hand sides in normal form, rules sorted by lhs.
        let mut rules: Vec<Rule<F>> = self.rules.iter().flatten().cloned().collect();
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        for r in rules.iter_mut() {
            r.rhs = self.rw.reduce(&r.rhs);
        }
        self.steps += self.rw.steps.load(Ordering::Relaxed);
        debug_assert!(self.alphabet_len > 0 || rules.is_empty());
        (rules, false, self.steps)
    }
}

impl<F: Field> PresentedAlgebra<F> {
    /// Completes `relations` through overlaps of word length at most `degree`.
    pub fn complete(alphabet: Alphabet, relations: Vec<NCPoly<F>>, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ShapeError("truncation degree must be positive".into()));
        }
        for (k, r) in relations.iter().enumerate() {
            let d = r.degree().ok_or_else(|| Error::ShapeError(format!("relation {k} is zero")))?;
            if d > degree {
                return Err(Error::DegreeOutOfRange {
                    requested: d,
                    certified: degree,
                });
            }
            if r.terms().any(|(w, _)| !w.is_valid_for(&alphabet)) {
                return Err(Error::ShapeError(format!("relation {k} uses an unknown generator")));
            }
        }
        let mut c = Completion {
            alphabet_len: alphabet.len(),
            max_len: degree,
            rules: Vec::new(),
            rw: Rewriter::new(Vec::new(), false),
            queue: BinaryHeap::new(),
            pending: HashMap::new(),
            seq: 0,
            collapsed: false,
            steps: 0,
        };
        for r in &relations {
            c.push(r.degree().unwrap(), Pending::Poly(r.clone()));
        }
        c.run();
        let (rules, collapsed, steps) = c.finish();
        Ok(Self::assemble(alphabet, relations, degree, rules, collapsed, steps))
    }

    /// Rebuilds an algebra from a previously computed rule set, checking that
    /// the rules are inter-reduced and that every relation reduces to zero.
    pub fn from_parts(
        alphabet: Alphabet,
        relations: Vec<NCPoly<F>>,
        degree: usize,
        rules: Vec<Rule<F>>,
        collapsed: bool,
    ) -> Result<Self> {
        let index = RuleIndex::build(&rules);
        if index.by_lhs.len() != rules.len() {
            return Err(Error::Inconsistent("duplicate rule left-hand sides".into()));
        }
        for r in &rules {
            if r.lhs.len() > degree || r.lhs.is_empty() || !r.lhs.is_valid_for(&alphabet) {
                return Err(Error::Inconsistent(format!("rule {:?} out of range", r.lhs)));
            }
            if r.rhs.leading().is_some_and(|(w, _)| w >= &r.lhs) {
                return Err(Error::Inconsistent(format!("rule {:?} is not decreasing", r.lhs)));
            }
            let inner = r.lhs.letters();
            let others = rules.iter().filter(|o| o.lhs != r.lhs).any(|o| r.lhs.contains(&o.lhs));
            if others || r.rhs.terms().any(|(w, _)| index.is_reducible(w.letters())) {
                return Err(Error::Inconsistent(format!("rules not inter-reduced at {inner:?}")));
            }
        }
        let alg = Self::assemble(alphabet, relations, degree, rules, collapsed, 0);
        if alg.relations.iter().any(|r| !alg.rw.reduce(r).is_zero()) {
            return Err(Error::Inconsistent("a relation does not reduce to zero".into()));
        }
        Ok(alg)
    }

    fn assemble(
        alphabet: Alphabet,
        relations: Vec<NCPoly<F>>,
        truncation: usize,
        rules: Vec<Rule<F>>,
        collapsed: bool,
        completion_steps: u64,
    ) -> Self {
        let max_lhs = rules.iter().map(|r| r.lhs.len()).max().unwrap_or(1);
        let rw = Rewriter::new(rules, collapsed);
        let complete = collapsed || rw.all_overlaps_resolve();
        let certified = if complete {
            usize::MAX
        } else {
            truncation + 1 - max_lhs.min(truncation)
        };
        let (dims, bases) = Self::enumerate(&alphabet, &rw, truncation, certified.min(truncation));
        PresentedAlgebra {
            alphabet,
            relations,
            truncation,
            certified,
            complete,
            rw,
            dims,
            bases: RwLock::new(bases.into_iter().map(Arc::new).collect()),
            completion_steps,
        }
    }

    fn extend_level(alphabet: &Alphabet, rw: &Rewriter<F>, level: &[Word]) -> Vec<Word> {
        let mut next = Vec::new();
        for w in level {
            for l in 0..alphabet.len() {
                let mut x = w.clone();
                x.push(l as u8);
                if rw.index.suffix_match(x.letters()).is_none() {
                    next.push(x);
                }
            }
        }
        next
    }

    /// Irreducible words by length. A word is irreducible iff its prefix is
    /// and no left-hand side is a suffix of it.
    fn enumerate(alphabet: &Alphabet, rw: &Rewriter<F>, top: usize, keep: usize) -> (Vec<usize>, Vec<Vec<Word>>) {
        if rw.collapsed {
            return (vec![0; top + 1], vec![Vec::new(); keep + 1]);
        }
        let mut dims = vec![1];
        let mut bases = vec![vec![Word::empty()]];
        let mut level = vec![Word::empty()];
        for d in 1..=top {
            let next = Self::extend_level(alphabet, rw, &level);
            dims.push(next.len());
            if d <= keep {
                bases.push(next.clone());
            }
            level = next;
        }
        (dims, bases)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[NCPoly<F>] {
        &self.relations
    }

    pub fn rules(&self) -> &[Rule<F>] {
        &self.rw.rules
    }

    pub fn truncation_degree(&self) -> usize {
        self.truncation
    }

    /// Largest degree for which normal forms are certified canonical;
    /// `usize::MAX` when the rule set is a complete Gröbner basis.
    pub fn certified_degree(&self) -> usize {
        self.certified
    }

    /// True when every overlap of the final rule set resolves, so the rules
    /// form a finite Gröbner basis and normal forms are canonical in all
    /// degrees.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// True when the ideal contains a nonzero constant.
    pub fn is_collapsed(&self) -> bool {
        self.rw.collapsed
    }

    /// Number of irreducible words of each length `0..=D`.
    pub fn filtration_dims(&self) -> &[usize] {
        &self.dims
    }

    /// Rewriting steps spent during completion plus those spent since.
    pub fn reduction_steps(&self) -> u64 {
        self.completion_steps + self.rw.steps.load(Ordering::Relaxed)
    }

    pub fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.certified {
            Err(Error::DegreeOutOfRange {
                requested: d,
                certified: self.certified,
            })
        } else {
            Ok(())
        }
    }

    /// Irreducible words of length exactly `d`, in deglex order.
    pub fn filtration_basis(&self, d: usize) -> Result<Arc<Vec<Word>>> {
        self.check_degree(d)?;
        if let Some(level) = self.bases.read().unwrap().get(d) {
            return Ok(level.clone());
        }
        let mut bases = self.bases.write().unwrap();
        while bases.len() <= d {
            let next = Self::extend_level(&self.alphabet, &self.rw, bases.last().unwrap());
            bases.push(Arc::new(next));
        }
        Ok(bases[d].clone())
    }

    /// Irreducible words of length at most `d`, in deglex order.
    pub fn basis_up_to(&self, d: usize) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        for k in 0..=d {
            out.extend(self.filtration_basis(k)?.iter().cloned());
        }
        Ok(out)
    }

    pub fn is_reducible(&self, w: &Word) -> bool {
        self.rw.index.is_reducible(w.letters())
    }

    /// Canonical representative of `p` modulo the ideal.
    pub fn normal_form(&self, p: &NCPoly<F>) -> Result<NCPoly<F>> {
        self.check_degree(p.degree().unwrap_or(0))?;
        Ok(self.reduce(p))
    }

    /// Normal form without the certified-degree check.
    pub fn reduce(&self, p: &NCPoly<F>) -> NCPoly<F> {
        self.rw.reduce(p)
    }

    pub fn word_normal_form(&self, w: &Word) -> Arc<NCPoly<F>> {
        self.rw.word_nf(w)
    }

    /// Product of two elements, reduced. Inputs need not be in normal form.
    pub fn mul(&self, a: &NCPoly<F>, b: &NCPoly<F>) -> NCPoly<F> {
        let mut out = NCPoly::zero();
        for (x, c) in a.terms() {
            for (y, d) in b.terms() {
                let mut cd = c.clone();
                cd *= d;
                out.add_scaled(&self.rw.word_nf(&x.concat(y)), &cd);
            }
        }
        out
    }

    /// Rewrites `p` to an irreducible element, letting `choose(n)` pick
    /// among `n` options at every step: first which reducible word to
    /// rewrite, then which occurrence of which rule.
    pub fn reduce_with_strategy(&self, p: &NCPoly<F>, choose: &mut dyn FnMut(usize) -> usize) -> NCPoly<F> {
        if self.rw.collapsed {
            return NCPoly::zero();
        }
        let mut cur = p.clone();
        loop {
            let reducible: Vec<Word> = cur
                .terms()
                .filter(|(w, _)| self.is_reducible(w))
                .map(|(w, _)| w.clone())
                .collect();
            if reducible.is_empty() {
                return cur;
            }
            let w = &reducible[choose(reducible.len()) % reducible.len()];
            let matches = self.rw.index.all_matches(w.letters());
            let (pos, ri) = matches[choose(matches.len()) % matches.len()];
            let rule = &self.rw.rules[ri];
            let c = cur.coeff(w);
            let head = w.slice(0, pos);
            let tail = w.slice(pos + rule.lhs.len(), w.len());
            cur.add_term(w.clone(), -c.clone());
            cur.add_scaled(&rule.rhs.sandwich(&head, &tail), &c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type P = NCPoly<Rational>;

    fn commutative_plane(d: usize) -> PresentedAlgebra<Rational> {
        let (x, y) = (P::letter(0), P::letter(1));
        let rel = y.mul(&x).minus(&x.mul(&y));
        PresentedAlgebra::complete(Alphabet::new(vec!["x".into(), "y".into()]).unwrap(), vec![rel], d).unwrap()
    }

    #[test]
    fn commutative_plane_single_rule() {
        let a = commutative_plane(5);
        assert_eq!(a.rules().len(), 1);
        assert_eq!(a.rules()[0].lhs, Word::from_slice(&[1, 0]));
        assert_eq!(a.rules()[0].rhs, P::word(Word::from_slice(&[0, 1])));
        assert_eq!(a.filtration_dims(), [1, 2, 3, 4, 5, 6]);
        assert!(a.is_complete());
        assert_eq!(a.certified_degree(), usize::MAX);
    }

    #[test]
    fn braid_relation_is_truncated() {
        // yxy = xyx has an infinite deglex basis: yx^k y -> xyx^{k-1}.
        let (x, y) = (P::letter(0), P::letter(1));
        let rel = y.mul(&x).mul(&y).minus(&x.mul(&y).mul(&x));
        let a = PresentedAlgebra::complete(Alphabet::new(vec!["x".into(), "y".into()]).unwrap(), vec![rel], 6).unwrap();
        assert!(!a.is_complete());
        let max = a.rules().iter().map(|r| r.lhs.len()).max().unwrap();
        assert_eq!(a.certified_degree(), 6 - (max - 1));
        let long = P::word(Word::from_slice(&[1; 7]));
        assert!(matches!(a.normal_form(&long), Err(Error::DegreeOutOfRange { .. })));
        assert!(a.filtration_basis(6).is_err());
    }

    #[test]
    fn two_rewrites() {
        let a = commutative_plane(5);
        let yxx = P::word(Word::from_slice(&[1, 0, 0]));
        assert_eq!(a.normal_form(&yxx).unwrap(), P::word(Word::from_slice(&[0, 0, 1])));
        // Complete bases certify every degree, beyond the truncation too.
        assert_eq!(a.filtration_basis(8).unwrap().len(), 9);
    }

    #[test]
    fn inconsistent_relations_collapse() {
        let x = P::letter(0);
        let rels = vec![x.minus(&P::one()), x.minus(&P::constant(Rational::from_i64(2)))];
        let a = PresentedAlgebra::complete(Alphabet::new(vec!["x".into()]).unwrap(), rels, 3).unwrap();
        assert!(a.is_collapsed());
        assert!(a.reduce(&P::one()).is_zero());
    }

    #[test]
    fn overlap_generates_new_rule() {
        // xy = x, yx = y  gives  xx = x  and  yy = y  from the overlaps.
        let (x, y) = (P::letter(0), P::letter(1));
        let rels = vec![x.mul(&y).minus(&x), y.mul(&x).minus(&y)];
        let a = PresentedAlgebra::complete(Alphabet::new(vec!["x".into(), "y".into()]).unwrap(), rels, 4).unwrap();
        let lhs: Vec<_> = a.rules().iter().map(|r| r.lhs.clone()).collect();
        assert!(lhs.contains(&Word::from_slice(&[0, 0])));
        assert!(lhs.contains(&Word::from_slice(&[1, 1])));
        assert_eq!(a.filtration_dims(), [1, 2, 0, 0, 0]);
    }

    #[test]
    fn from_parts_roundtrip() {
        let a = commutative_plane(4);
        let b = PresentedAlgebra::from_parts(
            a.alphabet().clone(),
            a.relations().to_vec(),
            4,
            a.rules().to_vec(),
            false,
        )
        .unwrap();
        assert_eq!(a.filtration_dims(), b.filtration_dims());
        let bogus = vec![Rule {
            lhs: Word::from_slice(&[0]),
            rhs: P::word(Word::from_slice(&[1, 1])),
        }];
        assert!(PresentedAlgebra::from_parts(a.alphabet().clone(), vec![], 4, bogus, false).is_err());
    }
}
