//! `CodeFile`: a self-describing JSON serialization of a [`CodeSpec`].
//!
//! Element codes are the canonical integers of `kroncode::gf`; for q = p^e
//! with e > 1 the field modulus is written alongside (constant term first).

use std::collections::BTreeMap;
use std::sync::Arc;

use kroncode::{CodeSpec, Family, FieldTable, GFMatrix};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixData {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub format_version: u32,
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub family: String,
    pub params: BTreeMap<String, usize>,
    #[serde(rename = "H")]
    pub h: MatrixData,
}

pub fn family_params(family: Family) -> BTreeMap<String, usize> {
    let pairs: Vec<(&str, usize)> = match family {
        Family::Hamming { m } => vec![("m", m)],
        Family::Repetition { n } => vec![("n", n)],
        Family::KronCr { m_a, m_b } => vec![("m_a", m_a), ("m_b", m_b)],
        Family::KronUp { n_a, m } => vec![("n_a", n_a), ("m", m)],
        Family::Custom => vec![],
    };
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn parse_family(name: &str, params: &BTreeMap<String, usize>) -> Result<Family> {
    let get = |key: &str| {
        params
            .get(key)
            .copied()
            .ok_or_else(|| CliError::Format(format!("family `{name}` needs param `{key}`")))
    };
    Ok(match name {
        "hamming" => Family::Hamming { m: get("m")? },
        "repetition" => Family::Repetition { n: get("n")? },
        "kron_cr" => Family::KronCr {
            m_a: get("m_a")?,
            m_b: get("m_b")?,
        },
        "kron_up" => Family::KronUp {
            n_a: get("n_a")?,
            m: get("m")?,
        },
        "custom" => Family::Custom,
        other => return Err(CliError::Format(format!("unknown family `{other}`"))),
    })
}

impl CodeFile {
    pub fn from_spec(spec: &CodeSpec) -> Self {
        let field = spec.field();
        let h = spec.check_matrix();
        Self {
            format_version: FORMAT_VERSION,
            q: field.order() as u32,
            modulus: (field.degree() > 1)
                .then(|| field.modulus().iter().map(|&c| c as u32).collect()),
            family: spec.family().name().to_string(),
            params: family_params(spec.family()),
            h: MatrixData {
                rows: h.rows(),
                cols: h.cols(),
                entries: h.entries().iter().map(|&x| x as u32).collect(),
            },
        }
    }

    pub fn to_spec(&self) -> Result<CodeSpec> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::Format(format!(
                "unsupported format_version {}",
                self.format_version
            )));
        }
        let field = Arc::new(FieldTable::new(self.q)?);
        if let Some(m) = &self.modulus {
            let ours: Vec<u32> = field.modulus().iter().map(|&c| c as u32).collect();
            if *m != ours {
                return Err(CliError::Format(format!(
                    "modulus {m:?} differs from the canonical GF({}) modulus {ours:?}",
                    self.q
                )));
            }
        }
        let entries = self
            .h
            .entries
            .iter()
            .map(|&x| field.element(x))
            .collect::<kroncode::Result<Vec<_>>>()?;
        let h = GFMatrix::new(field, self.h.rows, self.h.cols, entries)?;
        Ok(CodeSpec::new(parse_family(&self.family, &self.params)?, h)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("code files always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
