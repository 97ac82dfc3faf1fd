use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Ordered generator names. The order fixes the monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.len() > u8::MAX as usize + 1 {
            return Err(Error::ShapeError(format!("{} generators (max 256)", names.len())));
        }
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n) {
                return Err(Error::ShapeError(format!("duplicate generator name `{n}`")));
            }
        }
        Ok(Alphabet { names })
    }

    /// `u_11, u_12, ..., u_mn` in row-major order.
    pub fn matrix(prefix: &str, rows: usize, cols: usize) -> Self {
        let names = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .map(|(i, j)| {
                if rows < 10 && cols < 10 {
                    format!("{prefix}{i}{j}")
                } else {
                    format!("{prefix}{i}_{j}")
                }
            })
            .collect();
        Alphabet::new(names).expect("generated names are unique")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: u8) -> &str {
        &self.names[letter as usize]
    }

    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters().iter().map(|&l| self.name(l)).collect::<Vec<_>>().join("*")
    }
}

/// A monomial of the free algebra; the empty word is the unit.
///
/// Words are ordered degree-lexicographically: longer words are greater,
/// and words of equal length compare letter by letter.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u8; 12]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(l: u8) -> Self {
        Word(SmallVec::from_slice(&[l]))
    }

    pub fn from_slice(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: u8) {
        self.0.push(l);
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_slice(&self.0[start..end])
    }

    /// Position of the leftmost occurrence of `pat`.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        let (h, p) = (self.letters(), pat.letters());
        if p.len() > h.len() {
            return None;
        }
        (0..=h.len() - p.len()).find(|&i| &h[i..i + p.len()] == p)
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    pub fn is_valid_for(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|&l| (l as usize) < alphabet.len())
    }
}

/// Degree-lexicographic comparison.
pub fn deglex_compare(a: &Word, b: &Word) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.0.as_slice())
    }
}
