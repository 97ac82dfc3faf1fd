//! On-disk cache of completed Gröbner bases, keyed by field, relations and
//! truncation degree.
//!
//! A cache file is one header line `counit-resolve-gb <version> <sha256>`
//! followed by a JSON payload whose SHA-256 is the header checksum.

use std::fs;
use std::path::{Path, PathBuf};

use counit_core::freealg::Rule;
use counit_core::{Alphabet, Field, NCPoly, PresentedAlgebra, Word};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CacheError;

pub const CACHE_VERSION: &str = "1";
const MAGIC: &str = "counit-resolve-gb";

/// A rule as `(lhs letters, [(coefficient literal, word letters)])`.
type StoredRule = (Vec<u8>, Vec<(String, Vec<u8>)>);

#[derive(Serialize, Deserialize)]
struct Payload {
    field: String,
    relations_hash: String,
    degree: usize,
    alphabet: Vec<String>,
    collapsed: bool,
    rules: Vec<StoredRule>,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn sha256_hex(data: &[u8]) -> String {
    hex(&Sha256::digest(data))
}

fn render_poly<F: Field>(p: &NCPoly<F>) -> Vec<(String, Vec<u8>)> {
    p.terms().map(|(w, c)| (c.to_string(), w.letters().to_vec())).collect()
}

/// SHA-256 of the relations in a canonical text form.
pub fn relations_hash<F: Field>(relations: &[NCPoly<F>]) -> String {
    let text = serde_json::to_string(&relations.iter().map(render_poly).collect::<Vec<_>>()).expect("serializes");
    sha256_hex(text.as_bytes())
}

/// File name for a (field, relations, degree) key.
pub fn cache_key<F: Field>(relations: &[NCPoly<F>], degree: usize) -> String {
    let key = format!("{}:{}:{degree}", F::KIND.name(), relations_hash(relations));
    sha256_hex(key.as_bytes())
}

pub fn cache_path<F: Field>(dir: &Path, relations: &[NCPoly<F>], degree: usize) -> PathBuf {
    dir.join(format!("{}.gb", cache_key(relations, degree)))
}

/// Writes `alg` to its keyed file under `dir`, through a temporary file and a rename.
pub fn save<F: Field>(dir: &Path, alg: &PresentedAlgebra<F>) -> Result<PathBuf, CacheError> {
    let payload = Payload {
        field: F::KIND.name().to_string(),
        relations_hash: relations_hash(alg.relations()),
        degree: alg.truncation_degree(),
        alphabet: alg.alphabet().names().to_vec(),
        collapsed: alg.is_collapsed(),
        rules: alg.rules().iter().map(|r| (r.lhs.letters().to_vec(), render_poly(&r.rhs))).collect(),
    };
    let body = serde_json::to_string(&payload).expect("payload serializes");
    let text = format!("{MAGIC} {CACHE_VERSION} {}\n{body}", sha256_hex(body.as_bytes()));
    fs::create_dir_all(dir).map_err(|e| CacheError::Io(e.to_string()))?;
    let path = cache_path(dir, alg.relations(), alg.truncation_degree());
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text).map_err(|e| CacheError::Io(e.to_string()))?;
    fs::rename(&tmp, &path).map_err(|e| CacheError::Io(e.to_string()))?;
    Ok(path)
}

/// Reads a cache file for the given key. `Ok(None)` is a miss.
pub fn load<F: Field>(
    dir: &Path,
    alphabet: &Alphabet,
    relations: &[NCPoly<F>],
    degree: usize,
) -> Result<Option<PresentedAlgebra<F>>, CacheError> {
    let path = cache_path(dir, relations, degree);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(CacheError::Io(e.to_string())),
    };
    let (header, body) = text.split_once('\n').ok_or_else(|| CacheError::CorruptCache("missing header".into()))?;
    let parts: Vec<&str> = header.split(' ').collect();
    if parts.len() != 3 || parts[0] != MAGIC {
        return Err(CacheError::CorruptCache("bad header".into()));
    }
    if parts[1] != CACHE_VERSION {
        return Err(CacheError::CacheVersionMismatch {
            found: parts[1].to_string(),
            expected: CACHE_VERSION.to_string(),
        });
    }
    if sha256_hex(body.as_bytes()) != parts[2] {
        return Err(CacheError::CorruptCache("checksum mismatch".into()));
    }
    let payload: Payload = serde_json::from_str(body).map_err(|e| CacheError::CorruptCache(e.to_string()))?;
    if payload.field != F::KIND.name()
        || payload.degree != degree
        || payload.relations_hash != relations_hash(relations)
        || payload.alphabet != alphabet.names()
    {
        return Ok(None);
    }
    let mut rules = Vec::with_capacity(payload.rules.len());
    for (lhs, rhs) in payload.rules {
        let mut p = NCPoly::zero();
        for (c, w) in rhs {
            let c = F::parse(&c).map_err(|e| CacheError::CorruptCache(e.to_string()))?;
            p.add_scaled(&NCPoly::word(Word::from_slice(&w)), &c);
        }
        rules.push(Rule {
            lhs: Word::from_slice(&lhs),
            rhs: p,
        });
    }
    PresentedAlgebra::from_parts(alphabet.clone(), relations.to_vec(), degree, rules, payload.collapsed)
        .map(Some)
        .map_err(|e| CacheError::CorruptCache(e.to_string()))
}

/// Loads from `dir` when possible, otherwise completes and stores. Cache
/// problems are reported through `warnings` and never fail the run.
pub fn complete_cached<F: Field>(
    dir: Option<&Path>,
    alphabet: Alphabet,
    relations: Vec<NCPoly<F>>,
    degree: usize,
    warnings: &mut Vec<String>,
) -> counit_core::Result<PresentedAlgebra<F>> {
    if let Some(dir) = dir {
        match load(dir, &alphabet, &relations, degree) {
            Ok(Some(alg)) => return Ok(alg),
            Ok(None) => {}
            Err(e) => warnings.push(format!("{e}; recomputing")),
        }
    }
    let alg = PresentedAlgebra::complete(alphabet, relations, degree)?;
    if let Some(dir) = dir {
        if let Err(e) = save(dir, &alg) {
            warnings.push(format!("could not write cache: {e}"));
        }
    }
    Ok(alg)
}
