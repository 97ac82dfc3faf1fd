use std::collections::HashMap;
use std::fmt;

use crate::comod::YdMap;
use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Word};
use crate::hopf::BilinearFormHopf;
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::Field;

use super::FreeYDComplex;

/// Where exactness is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Position {
    /// `ker φ1 = 0` on `k ⊠ A`.
    Injectivity,
    /// `ker φ2 = im φ1` at the first `(V*⊗V) ⊠ A`.
    KerPhi2,
    /// `ker φ3 = im φ2` at the second `(V*⊗V) ⊠ A`.
    KerPhi3,
    /// `ker ε = im φ3` at `k ⊠ A`.
    KerEpsilon,
}

impl Position {
    pub const ALL: [Position; 4] = [Position::Injectivity, Position::KerPhi2, Position::KerPhi3, Position::KerEpsilon];

    /// `0` for injectivity of `φ1`, then `1..=3` from left to right.
    pub fn number(self) -> usize {
        match self {
            Position::Injectivity => 0,
            Position::KerPhi2 => 1,
            Position::KerPhi3 => 2,
            Position::KerEpsilon => 3,
        }
    }

    pub fn from_number(k: usize) -> Option<Self> {
        Self::ALL.get(k).copied()
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Position::Injectivity => "ker phi1 = 0",
            Position::KerPhi2 => "ker phi2 = im phi1",
            Position::KerPhi3 => "ker phi3 = im phi2",
            Position::KerEpsilon => "ker eps = im phi3",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExactnessStatus {
    Certified,
    Inconclusive,
    /// Reserved: truncated searches never produce it.
    Refuted,
}

impl fmt::Display for ExactnessStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExactnessStatus::Certified => "certified",
            ExactnessStatus::Inconclusive => "inconclusive",
            ExactnessStatus::Refuted => "refuted",
        })
    }
}

/// Outcome of an exactness search on the degree `≤ d` slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessCertificate {
    pub position: Position,
    pub through_degree: usize,
    /// Smallest slack that sufficed, when certified.
    pub slack_used: Option<usize>,
    pub max_slack: usize,
    pub status: ExactnessStatus,
    /// Dimension of the kernel on the slice.
    pub kernel_dim: usize,
    /// Dimension of the image inside the slice at the last slack tried.
    pub image_dim: usize,
    /// Number of input vectors offered to the image at the last slack tried.
    pub image_inputs: usize,
    /// Number of coordinates of the module under test.
    pub coordinates: usize,
}

/// Coordinates `(word, basis vector)` ordered by word degree first.
struct Coordinates {
    index: HashMap<Word, usize>,
    words: Vec<Word>,
    /// `cumulative[d]` = number of normal words of degree `≤ d`.
    cumulative: Vec<usize>,
}

impl Coordinates {
    fn new<F: Field>(h: &BilinearFormHopf<F>, top: usize) -> Result<Self> {
        let alg = h.algebra();
        let mut words = Vec::new();
        let mut cumulative = Vec::with_capacity(top + 1);
        for d in 0..=top {
            words.extend(alg.filtration_basis(d)?.iter().cloned());
            cumulative.push(words.len());
        }
        let index = words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        Ok(Coordinates { index, words, cumulative })
    }

    fn vector<F: Field>(&self, dim: usize, parts: &[NCPoly<F>]) -> SparseVec<F> {
        let mut raw = Vec::new();
        for (b, p) in parts.iter().enumerate() {
            for (w, c) in p.terms() {
                let k = self.index[w];
                raw.push((k * dim + b, c.clone()));
            }
        }
        SparseVec::from_entries(raw)
    }
}

/// `M(e_b ⊗ w)` as reduced components.
fn image<F: Field>(h: &BilinearFormHopf<F>, map: &YdMap<F>, b: usize, w: &Word) -> Vec<NCPoly<F>> {
    let x = NCPoly::word(w.clone());
    (0..map.rows()).map(|c| h.algebra().mul(map.entry(c, b), &x)).collect()
}

/// Searches for preimages of every kernel element on the degree `≤ d` slice
/// at `position`, allowing inputs of degree `≤ d + s` for `s = 0..=max_slack`.
///
/// Because the slice is finite, the search can certify exactness there but
/// never refute it.
pub fn exactness_witness<F: Field>(
    h: &BilinearFormHopf<F>,
    complex: &FreeYDComplex<F>,
    position: Position,
    d: usize,
    max_slack: usize,
) -> Result<ExactnessCertificate> {
    let alg = h.algebra();
    alg.check_degree(d + max_slack + 1)?;
    let coords = Coordinates::new(h, d + max_slack + 1)?;
    let slice = |deg: usize| &coords.words[..coords.cumulative[deg]];

    let k = position.number();
    let here = complex.modules()[k].dim();
    let slice_size = coords.cumulative[d] * here;

    // Kernel dimension of the outgoing map on the slice.
    let kernel_dim = match position {
        Position::KerEpsilon => slice_size - 1,
        _ => {
            let out = &complex.maps()[k];
            let mut e = Echelon::new();
            for w in slice(d) {
                for b in 0..here {
                    e.insert(coords.vector(out.rows(), &image(h, out, b, w)));
                }
            }
            slice_size - e.rank()
        }
    };

    let mut cert = ExactnessCertificate {
        position,
        through_degree: d,
        slack_used: None,
        max_slack,
        status: ExactnessStatus::Inconclusive,
        kernel_dim,
        image_dim: 0,
        image_inputs: 0,
        coordinates: slice_size,
    };
    if position == Position::Injectivity {
        if kernel_dim == 0 {
            cert.status = ExactnessStatus::Certified;
            cert.slack_used = Some(0);
        }
        return Ok(cert);
    }

    let incoming = &complex.maps()[k - 1];
    let there = incoming.cols();
    let mut echelon = Echelon::new();
    let mut done = 0;
    for s in 0..=max_slack {
        let inputs = slice(d + s);
        for w in &inputs[done..] {
            for b in 0..there {
                echelon.insert(coords.vector(here, &image(h, incoming, b, w)));
            }
        }
        done = inputs.len();
        let image_dim = echelon.rank_below(slice_size);
        cert.image_dim = image_dim;
        cert.image_inputs = echelon.inserted();
        if image_dim > kernel_dim {
            return Err(Error::Inconsistent(format!(
                "image of dimension {image_dim} exceeds kernel of dimension {kernel_dim} at {position}"
            )));
        }
        if image_dim == kernel_dim {
            cert.status = ExactnessStatus::Certified;
            cert.slack_used = Some(s);
            break;
        }
    }
    Ok(cert)
}

impl<F: Field> FreeYDComplex<F> {
    /// Certificates for the three positions `1..=3` on the degree `≤ d` slice.
    pub fn exactness(&self, h: &BilinearFormHopf<F>, d: usize, max_slack: usize) -> Result<Vec<ExactnessCertificate>> {
        [Position::KerPhi2, Position::KerPhi3, Position::KerEpsilon]
            .into_iter()
            .map(|p| exactness_witness(h, self, p, d, max_slack))
            .collect()
    }
}
