//! JSON input files for modules and G-sets.

use std::fmt;

use herbrand::{CyclicModule, GSet, IntMatrix, Lattice, PresentedGroup};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CliError;

/// An integer written either as a JSON number or as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IntVisitor;

        impl Visitor<'_> for IntVisitor {
            type Value = Int;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Int, E> {
                Err(E::custom(format!(
                    "{v} is not an exact integer; write large integers as decimal strings"
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
                v.trim()
                    .parse::<BigInt>()
                    .map(Int)
                    .map_err(|_| E::custom(format!("{v:?} is not a decimal integer")))
            }
        }

        deserializer.deserialize_any(IntVisitor)
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

/// `ℤ^generators / ⟨relations⟩` with `σ` acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub n: u64,
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Vec<Int>>,
    pub sigma: Vec<Vec<Int>>,
}

impl ModuleFile {
    pub fn from_module(module: &CyclicModule) -> Self {
        let to_rows = |m: &IntMatrix| -> Vec<Vec<Int>> {
            m.row_vecs()
                .into_iter()
                .map(|r| r.into_iter().map(Int).collect())
                .collect()
        };
        ModuleFile {
            n: module.n(),
            generators: module.rank_generators(),
            relations: to_rows(module.relations().basis()),
            sigma: to_rows(module.sigma()),
        }
    }
}

/// A G-set on `points` points; `image[x]` is where the generator sends `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GSetFile {
    pub n: u64,
    pub points: usize,
    pub image: Vec<usize>,
}

impl GSetFile {
    pub fn from_gset(set: &GSet) -> Self {
        GSetFile {
            n: set.n(),
            points: set.points(),
            image: set.image().to_vec(),
        }
    }
}

fn syntax_error(e: serde_json::Error) -> CliError {
    CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// 1-based position of the `index`-th element of the top-level array
/// stored under `key`, or of the key itself when the element is missing.
fn locate(text: &str, key: &str, index: Option<usize>) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    let Some(key_at) = text.find(&needle) else {
        return (1, 1);
    };
    let mut target = key_at;
    if let Some(index) = index {
        let rest = &text[key_at + needle.len()..];
        let mut depth = 0usize;
        let mut count = 0usize;
        let mut in_string = false;
        let mut escaped = false;
        for (off, ch) in rest.char_indices() {
            if in_string {
                match (escaped, ch) {
                    (true, _) => escaped = false,
                    (false, '\\') => escaped = true,
                    (false, '"') => in_string = false,
                    _ => {}
                }
                continue;
            }
            match ch {
                '"' => in_string = true,
                '[' => {
                    depth += 1;
                    if depth == 2 {
                        if count == index {
                            target = key_at + needle.len() + off;
                            break;
                        }
                        count += 1;
                    }
                }
                ']' => {
                    depth = depth.saturating_sub(1);
                    if depth == 0 {
                        break;
                    }
                }
                _ => {}
            }
        }
    }
    let before = &text[..target];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn shape_error(text: &str, key: &str, index: Option<usize>, message: String) -> CliError {
    let (line, column) = locate(text, key, index);
    CliError::Parse {
        line,
        column,
        message,
    }
}

fn rows_to_matrix(rows: &[Vec<Int>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(
        cols,
        rows.iter()
            .map(|r| r.iter().map(|x| x.0.clone()).collect())
            .collect(),
    )
}

pub fn parse_module_file(text: &str) -> Result<CyclicModule, CliError> {
    let file: ModuleFile = serde_json::from_str(text).map_err(syntax_error)?;
    let k = file.generators;
    if file.sigma.len() != k {
        return Err(shape_error(
            text,
            "sigma",
            None,
            format!("sigma has {} rows, expected {k}", file.sigma.len()),
        ));
    }
    for (i, row) in file.sigma.iter().enumerate() {
        if row.len() != k {
            return Err(shape_error(
                text,
                "sigma",
                Some(i),
                format!("sigma row {i} has {} entries, expected {k}", row.len()),
            ));
        }
    }
    for (i, row) in file.relations.iter().enumerate() {
        if row.len() != k {
            return Err(shape_error(
                text,
                "relations",
                Some(i),
                format!("relation row {i} has {} entries, expected {k}", row.len()),
            ));
        }
    }
    let relations = Lattice::from_generators(&rows_to_matrix(&file.relations, k));
    let base = PresentedGroup::new(k, relations);
    CyclicModule::new(file.n, base, rows_to_matrix(&file.sigma, k)).map_err(CliError::Validation)
}

pub fn parse_gset_file(text: &str) -> Result<GSet, CliError> {
    let file: GSetFile = serde_json::from_str(text).map_err(syntax_error)?;
    if file.image.len() != file.points {
        return Err(shape_error(
            text,
            "image",
            None,
            format!(
                "image has {} entries, expected {} points",
                file.image.len(),
                file.points
            ),
        ));
    }
    GSet::new(file.n, file.image).map_err(CliError::Validation)
}
