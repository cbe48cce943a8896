//! TOML code-spec, word and input files.
//!
//! ```toml
//! format_version = 1
//! kind = "convolutional"     # or "explicit"
//! modulus = 4
//! width = 3
//! window = 12
//! generators = [[[1, 0, 0], [0, 1, 0], [0, 0, 2]]]
//! ```
//!
//! Explicit codes give `axis` plus `width` (or a `widths` list) and
//! `generators` as full-length integer words. Integers may be negative or
//! exceed the modulus; they are reduced on load.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::code::GroupCode;
use crate::convolutional::{window, ConvSpec};
use crate::error::{Error, Result};
use crate::residue::Modulus;
use crate::sequence::SymbolLayout;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub modulus: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub widths: Option<Vec<usize>>,
    #[serde(default)]
    pub generators: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvolutionalSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub modulus: i64,
    pub width: usize,
    pub window: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin: Option<usize>,
    #[serde(default)]
    pub generators: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    pub patterns: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CodeBody {
    Explicit(ExplicitSpec),
    Convolutional(ConvolutionalSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpecFile {
    pub format_version: u32,
    #[serde(flatten)]
    pub body: CodeBody,
}

/// A parsed spec file turned into a code.
#[derive(Debug, Clone)]
pub struct LoadedCode {
    pub name: Option<String>,
    pub code: GroupCode,
    /// Interior margin: explicit in the file, else the convolutional default, else 0.
    pub margin: usize,
    pub conv: Option<ConvSpec>,
}

fn modulus(m: i64) -> Result<Modulus> {
    if m < 2 {
        return Err(Error::Parse(format!("modulus must be at least 2, got {m}")));
    }
    Modulus::new(m as u64)
}

fn reduce_word(m: Modulus, w: &[i64]) -> Vec<u64> {
    w.iter().map(|&x| m.reduce_signed(x as i128)).collect()
}

impl CodeSpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        let f: CodeSpecFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if f.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                f.format_version
            )));
        }
        Ok(f)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec files always serialize")
    }

    pub fn load(&self) -> Result<LoadedCode> {
        match &self.body {
            CodeBody::Explicit(s) => {
                let m = modulus(s.modulus)?;
                let widths = match (&s.widths, s.axis, s.width) {
                    (Some(ws), axis, _) => {
                        if let Some(a) = axis {
                            if a != ws.len() {
                                return Err(Error::Parse(format!(
                                    "axis = {a} but widths has {} entries",
                                    ws.len()
                                )));
                            }
                        }
                        ws.clone()
                    }
                    (None, Some(a), Some(w)) => vec![w; a],
                    (None, Some(a), None) => vec![1; a],
                    (None, None, _) => {
                        return Err(Error::Parse(
                            "explicit code needs `axis` or `widths`".into(),
                        ))
                    }
                };
                let layout =
                    SymbolLayout::new(m, widths).map_err(|e| Error::Parse(e.to_string()))?;
                let dim = layout.total_dim();
                for g in &s.generators {
                    if g.len() != dim {
                        return Err(Error::Parse(format!(
                            "generator of length {} in a code of total width {dim}",
                            g.len()
                        )));
                    }
                }
                let gens = s.generators.iter().map(|g| reduce_word(m, g)).collect();
                Ok(LoadedCode {
                    name: s.name.clone(),
                    code: GroupCode::from_generators(layout, gens)?,
                    margin: s.margin.unwrap_or(0),
                    conv: None,
                })
            }
            CodeBody::Convolutional(s) => {
                let m = modulus(s.modulus)?;
                let conv_seqs = |seqs: &[Vec<Vec<i64>>]| -> Vec<Vec<Vec<u64>>> {
                    seqs.iter()
                        .map(|seq| seq.iter().map(|sym| reduce_word(m, sym)).collect())
                        .collect()
                };
                let mut spec =
                    ConvSpec::new(m, s.width, conv_seqs(&s.generators), conv_seqs(&s.patterns))
                        .map_err(|e| Error::Parse(e.to_string()))?;
                spec.name = s.name.clone();
                let w = window(&spec, s.window)?;
                Ok(LoadedCode {
                    name: s.name.clone(),
                    margin: s.margin.unwrap_or(spec.default_margin()),
                    code: w.code,
                    conv: Some(spec),
                })
            }
        }
    }

    /// An explicit spec listing the canonical basis of `code`.
    pub fn explicit_from_code(
        code: &GroupCode,
        name: Option<String>,
        margin: Option<usize>,
    ) -> Self {
        let widths = code.layout().widths().to_vec();
        let uniform = widths.iter().all(|&w| w == widths[0]);
        CodeSpecFile {
            format_version: FORMAT_VERSION,
            body: CodeBody::Explicit(ExplicitSpec {
                name,
                modulus: code.modulus().get() as i64,
                axis: Some(widths.len()),
                width: uniform.then_some(widths[0]),
                widths: (!uniform).then_some(widths),
                generators: code
                    .carrier()
                    .basis_rows()
                    .map(|r| r.iter().map(|&x| x as i64).collect())
                    .collect(),
                margin,
            }),
        }
    }
}

/// `word = [...]`: a flat word over the whole axis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordFile {
    #[serde(default = "default_version")]
    pub format_version: u32,
    pub word: Vec<i64>,
}

/// `inputs = [[...], ...]`: one input symbol per time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputsFile {
    #[serde(default = "default_version")]
    pub format_version: u32,
    pub inputs: Vec<Vec<i64>>,
}

fn default_version() -> u32 {
    FORMAT_VERSION
}

fn read_toml<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

impl WordFile {
    pub fn read(path: &Path) -> Result<Self> {
        read_toml(path)
    }

    pub fn reduced(&self, m: Modulus) -> Vec<u64> {
        reduce_word(m, &self.word)
    }
}

impl InputsFile {
    pub fn read(path: &Path) -> Result<Self> {
        read_toml(path)
    }

    pub fn reduced(&self, m: Modulus) -> Vec<Vec<u64>> {
        self.inputs.iter().map(|s| reduce_word(m, s)).collect()
    }
}
