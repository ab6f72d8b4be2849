//! JSON pair descriptions read by the `report` command.
//!
//! ```json
//! {
//!   "ambient": { "kind": "hirzebruch", "m": 2 },
//!   "divisors": [
//!     { "label": "C0",   "class": { "C0": 1 } },
//!     { "label": "Cinf", "class": { "C0": 1, "f": 2 } }
//!   ]
//! }
//! ```
//!
//! A document is one such object or an array of them. Unknown keys are
//! errors. Generators are `H` on projective space, `h` on hypersurfaces and
//! `C0`, `f` on Hirzebruch surfaces; absent generators are zero.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::ambient::{AmbientModel, ModelKind};
use crate::log_invariants::{Component, LogPair};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbientKind {
    ProjectiveSpace,
    Hypersurface,
    Hirzebruch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientDescriptor {
    pub kind: AmbientKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorDescriptor {
    pub label: String,
    pub class: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDescriptor {
    pub ambient: AmbientDescriptor,
    #[serde(default)]
    pub divisors: Vec<DivisorDescriptor>,
}

type Keys<'a> = &'a [(&'a str, Option<u32>)];

fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

impl AmbientDescriptor {
    pub fn to_model(&self, prefix: &str) -> Result<AmbientModel> {
        let (required, forbidden): (Keys, Keys) = match self.kind {
            AmbientKind::ProjectiveSpace => (&[("n", self.n)], &[("q", self.q), ("m", self.m)]),
            AmbientKind::Hypersurface => (&[("n", self.n), ("q", self.q)], &[("m", self.m)]),
            AmbientKind::Hirzebruch => (&[("m", self.m)], &[("n", self.n), ("q", self.q)]),
        };
        let kind = serde_json::to_value(self.kind).expect("unit variant");
        let kind = kind.as_str().unwrap_or_default();
        for (key, value) in required {
            if value.is_none() {
                return Err(input(format!(
                    "{prefix}ambient.{key}: required for kind `{kind}`"
                )));
            }
        }
        for (key, value) in forbidden {
            if value.is_some() {
                return Err(input(format!(
                    "{prefix}ambient.{key}: not allowed for kind `{kind}`"
                )));
            }
        }
        let model = match self.kind {
            AmbientKind::ProjectiveSpace => AmbientModel::projective_space(self.n.unwrap_or(0)),
            AmbientKind::Hypersurface => {
                AmbientModel::hypersurface(self.n.unwrap_or(0), self.q.unwrap_or(0))
            }
            AmbientKind::Hirzebruch => AmbientModel::hirzebruch(self.m.unwrap_or(0)),
        };
        model.map_err(|e| input(format!("{prefix}ambient: {e}")))
    }

    pub fn from_model(model: &AmbientModel) -> Self {
        let (kind, n, q, m) = match model.kind() {
            ModelKind::ProjectiveSpace { n } => (AmbientKind::ProjectiveSpace, Some(n), None, None),
            ModelKind::Hypersurface { n, q } => (AmbientKind::Hypersurface, Some(n), Some(q), None),
            ModelKind::Hirzebruch { m } => (AmbientKind::Hirzebruch, None, None, Some(m)),
        };
        AmbientDescriptor { kind, n, q, m }
    }
}

/// Generator names of the divisor basis, in basis order.
pub fn generators(model: &AmbientModel) -> &'static [&'static str] {
    match model.kind() {
        ModelKind::ProjectiveSpace { .. } => &["H"],
        ModelKind::Hypersurface { .. } => &["h"],
        ModelKind::Hirzebruch { .. } => &["C0", "f"],
    }
}

impl PairDescriptor {
    /// Builds the pair; `prefix` is prepended to key paths in diagnostics.
    pub fn to_pair(&self, prefix: &str) -> Result<LogPair> {
        let model = self.ambient.to_model(prefix)?;
        let names = generators(&model);
        let mut components = Vec::with_capacity(self.divisors.len());
        for (i, divisor) in self.divisors.iter().enumerate() {
            let at = format!("{prefix}divisors[{i}]");
            if let Some(bad) = divisor.class.keys().find(|k| !names.contains(&k.as_str())) {
                return Err(input(format!(
                    "{at}.class.{bad}: unknown generator on {model}, expected one of {names:?}"
                )));
            }
            let coeffs: Vec<i64> = names
                .iter()
                .map(|g| divisor.class.get(*g).copied().unwrap_or(0))
                .collect();
            components.push(Component {
                label: divisor.label.clone(),
                class: model.divisor(&coeffs)?,
            });
        }
        LogPair::new(model, components).map_err(|e| input(format!("{prefix}divisors: {e}")))
    }

    pub fn from_pair(pair: &LogPair) -> Self {
        let names = generators(pair.model());
        let divisors = pair
            .components()
            .iter()
            .map(|c| DivisorDescriptor {
                label: c.label.clone(),
                class: names
                    .iter()
                    .zip(c.class.coeffs())
                    .map(|(g, x)| (g.to_string(), x.to_i64().expect("integral component")))
                    .collect(),
            })
            .collect();
        PairDescriptor {
            ambient: AmbientDescriptor::from_model(pair.model()),
            divisors,
        }
    }
}

fn decode(value: Value, prefix: &str) -> Result<PairDescriptor> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let at = if path == "." {
            prefix.trim_end_matches('.').to_string()
        } else {
            format!("{prefix}{path}")
        };
        let at = if at.is_empty() {
            "document".to_string()
        } else {
            at
        };
        input(format!("{at}: {}", e.into_inner()))
    })
}

/// Parses a document into descriptors and validated pairs.
pub fn parse_document(text: &str) -> Result<Vec<(PairDescriptor, LogPair)>> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| input(format!("malformed document: {e}")))?;
    let items: Vec<(String, Value)> = match value {
        Value::Array(items) => items
            .into_iter()
            .enumerate()
            .map(|(i, v)| (format!("[{i}]."), v))
            .collect(),
        other => vec![(String::new(), other)],
    };
    items
        .into_iter()
        .map(|(prefix, v)| {
            let descriptor = decode(v, &prefix)?;
            let pair = descriptor.to_pair(&prefix)?;
            Ok((descriptor, pair))
        })
        .collect()
}
