//! JSON wire format for sequence specs:
//!
//! ```json
//! {"m": 6, "kind": "recurrence", "coefficients": [1, 1], "initial": [0, 1]}
//! {"m": 15, "kind": "block", "block": [2, 0, 1, 9, 0, 8, 2, 3]}
//! ```
//!
//! Unknown fields are rejected. Entries may be negative; they are reduced
//! modulo `m` on load.

use std::path::{Path, PathBuf};

use cyclemod_core::sequence::{SequenceKind, SequenceSpec};
use cyclemod_core::Modulus;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindTag {
    Recurrence,
    Block,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecJson {
    pub m: u64,
    pub kind: KindTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<Vec<i64>>,
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("malformed spec JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{kind} spec is missing field `{field}`")]
    MissingField { kind: &'static str, field: &'static str },
    #[error("{kind} spec must not have field `{field}`")]
    UnexpectedField { kind: &'static str, field: &'static str },
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Invalid(#[from] cyclemod_core::Error),
}

impl SpecError {
    /// True for errors in the sequence itself rather than in its encoding.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, SpecError::Invalid(_))
    }
}

impl TryFrom<SpecJson> for SequenceSpec {
    type Error = SpecError;

    fn try_from(raw: SpecJson) -> Result<Self, SpecError> {
        match raw.kind {
            KindTag::Recurrence => {
                const KIND: &str = "recurrence";
                if raw.block.is_some() {
                    return Err(SpecError::UnexpectedField { kind: KIND, field: "block" });
                }
                let coefficients = raw
                    .coefficients
                    .ok_or(SpecError::MissingField { kind: KIND, field: "coefficients" })?;
                let initial = raw
                    .initial
                    .ok_or(SpecError::MissingField { kind: KIND, field: "initial" })?;
                let m = Modulus::new(raw.m)?;
                Ok(SequenceSpec::recurrence(&coefficients, &initial, m)?)
            }
            KindTag::Block => {
                const KIND: &str = "block";
                for (field, present) in [
                    ("coefficients", raw.coefficients.is_some()),
                    ("initial", raw.initial.is_some()),
                ] {
                    if present {
                        return Err(SpecError::UnexpectedField { kind: KIND, field });
                    }
                }
                let block = raw
                    .block
                    .ok_or(SpecError::MissingField { kind: KIND, field: "block" })?;
                let m = Modulus::new(raw.m)?;
                Ok(SequenceSpec::block(&block, m)?)
            }
        }
    }
}

impl From<&SequenceSpec> for SpecJson {
    fn from(spec: &SequenceSpec) -> Self {
        let signed = |xs: &[u64]| xs.iter().map(|&x| x as i64).collect::<Vec<_>>();
        let m = spec.modulus().get();
        match spec.kind() {
            SequenceKind::Recurrence {
                coefficients,
                initial,
            } => SpecJson {
                m,
                kind: KindTag::Recurrence,
                coefficients: Some(signed(coefficients)),
                initial: Some(signed(initial)),
                block: None,
            },
            SequenceKind::Block(block) => SpecJson {
                m,
                kind: KindTag::Block,
                coefficients: None,
                initial: None,
                block: Some(signed(block)),
            },
        }
    }
}

pub fn parse_spec(json: &str) -> Result<SequenceSpec, SpecError> {
    let raw: SpecJson = serde_json::from_str(json)?;
    raw.try_into()
}

pub fn to_json(spec: &SequenceSpec) -> String {
    serde_json::to_string(&SpecJson::from(spec)).expect("spec serializes")
}

/// Accepts either inline JSON (anything starting with `{`) or a file path.
pub fn load_spec(source: &str) -> Result<SequenceSpec, SpecError> {
    if source.trim_start().starts_with('{') {
        return parse_spec(source);
    }
    let path = Path::new(source);
    let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_spec(&text)
}
