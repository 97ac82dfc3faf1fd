//! Run configuration: a single JSON document with matrices given as arrays of
//! scalar-literal strings.

use std::fmt;
use std::path::Path;

use counit_core::{Field, FieldKind, FieldMatrix};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub type LiteralMatrix = Vec<Vec<String>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldName {
    #[serde(rename = "rationals")]
    Rationals,
    #[serde(rename = "rational-functions-in-q")]
    RationalFunctions,
}

impl From<FieldName> for FieldKind {
    fn from(f: FieldName) -> Self {
        match f {
            FieldName::Rationals => FieldKind::Rationals,
            FieldName::RationalFunctions => FieldKind::RationalFunctions,
        }
    }
}

/// A character given by name (`eps`, `Phi`, `Phi^k`) or by its matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CharacterSpec {
    Named(String),
    Matrix(LiteralMatrix),
}

impl CharacterSpec {
    /// The power of `Φ` a name denotes; `eps`, `I` and `counit` are `Φ^0`.
    pub fn sovereign_power(name: &str) -> Option<i64> {
        match name {
            "eps" | "epsilon" | "counit" | "I" => Some(0),
            "Phi" => Some(1),
            _ => name.strip_prefix("Phi^")?.trim_matches(|c| c == '(' || c == ')').parse().ok(),
        }
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterSpec::Named(n) => f.write_str(n),
            CharacterSpec::Matrix(m) => {
                let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                write!(f, "[{}]", rows.join(", "))
            }
        }
    }
}

/// Deliberate corruptions, used to check that the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NegativeControl {
    /// Replaces `S` by `−S` on generators.
    BrokenAntipode,
    /// Uses `2·id − φ2` in place of `φ2`.
    SignFlippedPhi2,
    /// Drops the `S(g_(1))` leg of the Yetter-Drinfeld coaction.
    OmittedYdLeg,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub field: FieldName,
    #[serde(rename = "E")]
    pub e: LiteralMatrix,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    pub f: Option<LiteralMatrix>,
    /// Gröbner truncation degree `D`.
    #[serde(default = "default_truncation")]
    pub truncation_degree: usize,
    /// Word degree for checks, internal degree for exactness and the oracle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slack: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<CharacterSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<CharacterSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub assume_cosemisimple: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget_mb: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negative_control: Option<NegativeControl>,
}

fn default_truncation() -> usize {
    6
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Parses every literal and checks the forms, rewriting literals into
    /// canonical form so that the echo reparses to the same config.
    pub fn validate(mut self) -> Result<Self, CliError> {
        if self.truncation_degree == 0 {
            return Err(CliError::Validation("truncation_degree must be positive".into()));
        }
        if let Some(p) = self.position {
            if p > 3 {
                return Err(CliError::Validation(format!("position {p} is not in 0..=3")));
            }
        }
        match self.field {
            FieldName::Rationals => self.canonicalize::<counit_core::Rational>()?,
            FieldName::RationalFunctions => self.canonicalize::<counit_core::RatFunc>()?,
        }
        Ok(self)
    }

    fn canonicalize<F: Field>(&mut self) -> Result<(), CliError> {
        self.e = canonical_form::<F>(&self.e, "E")?;
        if let Some(f) = &self.f {
            self.f = Some(canonical_form::<F>(f, "F")?);
        }
        for (name, spec) in [("alpha", &mut self.alpha), ("beta", &mut self.beta)] {
            match spec {
                Some(CharacterSpec::Matrix(m)) => *m = canonical_matrix::<F>(m, name)?,
                Some(CharacterSpec::Named(n)) if CharacterSpec::sovereign_power(n).is_none() => {
                    return Err(CliError::Validation(format!("{name}: unknown character `{n}`")));
                }
                _ => {}
            }
        }
        Ok(())
    }
}

fn canonical_matrix<F: Field>(m: &LiteralMatrix, name: &str) -> Result<LiteralMatrix, CliError> {
    let parsed = parse_matrix::<F>(m, name)?;
    Ok((0..parsed.rows()).map(|i| parsed.row(i).iter().map(ToString::to_string).collect()).collect())
}

fn canonical_form<F: Field>(m: &LiteralMatrix, name: &str) -> Result<LiteralMatrix, CliError> {
    let parsed = parse_matrix::<F>(m, name)?;
    if !parsed.is_square() {
        return Err(CliError::Validation(format!("{name} is {}x{}", parsed.rows(), parsed.cols())));
    }
    if parsed.rows() < 2 {
        return Err(CliError::Core(counit_core::Error::SizeTooSmall(parsed.rows())));
    }
    parsed.inverse()?;
    canonical_matrix::<F>(m, name)
}

/// Parses a literal matrix, reporting the entry of the first bad literal.
pub fn parse_matrix<F: Field>(m: &LiteralMatrix, name: &str) -> Result<FieldMatrix<F>, CliError> {
    let mut rows = Vec::with_capacity(m.len());
    for (i, row) in m.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, lit) in row.iter().enumerate() {
            out.push(F::parse(lit).map_err(|e| CliError::Validation(format!("{name}[{}][{}] = {lit:?}: {e}", i + 1, j + 1)))?);
        }
        rows.push(out);
    }
    if rows.is_empty() {
        return Err(CliError::Core(counit_core::Error::SizeTooSmall(0)));
    }
    Ok(FieldMatrix::from_rows(rows)?)
}

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    RunConfig::from_json(&text)?.validate()
}
