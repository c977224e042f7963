//! JSON file formats. Rationals are written as strings (`"3"`, `"-1/2"`) and
//! read from strings or JSON integers of any size.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use pencil_core::canonical::KroneckerStructure;
use pencil_core::{Matrix, Pencil, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

pub fn parse_rational(v: &Value) -> Result<Rational, CliError> {
    let bad = || CliError::Parse(format!("not a rational literal: {v}"));
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return Err(bad()),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.as_str(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(CliError::Parse(format!("zero denominator in {v}")));
    }
    Ok(Rational::new(num, den))
}

pub fn rational_text(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn matrix_to_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(rational_text).collect()).collect()
}

pub fn rows_to_matrix(rows: usize, cols: usize, data: &[Vec<Value>], what: &str) -> Result<Matrix, CliError> {
    if data.len() != rows {
        return Err(CliError::Parse(format!("{what}: expected {rows} rows, found {}", data.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for (i, row) in data.iter().enumerate() {
        if row.len() != cols {
            return Err(CliError::Parse(format!(
                "{what}: row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        out.push(row.iter().map(parse_rational).collect::<Result<Vec<_>, _>>()?);
    }
    Matrix::from_rows(rows, cols, out).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PencilFile {
    pub rows: usize,
    pub cols: usize,
    #[serde(rename = "E")]
    pub e: Vec<Vec<Value>>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Value>>,
}

impl PencilFile {
    pub fn from_pencil(p: &Pencil) -> Self {
        let conv = |m: &Matrix| -> Vec<Vec<Value>> {
            matrix_to_rows(m)
                .into_iter()
                .map(|r| r.into_iter().map(Value::String).collect())
                .collect()
        };
        PencilFile { rows: p.rows(), cols: p.cols(), e: conv(p.e()), a: conv(p.a()) }
    }

    pub fn to_pencil(&self) -> Result<Pencil, CliError> {
        let e = rows_to_matrix(self.rows, self.cols, &self.e, "E")?;
        let a = rows_to_matrix(self.rows, self.cols, &self.a, "A")?;
        Pencil::new(e, a).map_err(|e| CliError::Parse(e.to_string()))
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Value>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &Matrix) -> Self {
        let data = matrix_to_rows(m)
            .into_iter()
            .map(|r| r.into_iter().map(Value::String).collect())
            .collect();
        MatrixFile { rows: m.rows(), cols: m.cols(), data }
    }

    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        rows_to_matrix(self.rows, self.cols, &self.data, "data")
    }
}

/// Block counts keyed by block size. `core_dim` may be given without a core,
/// in which case the core is zero.
#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default)]
    pub nilpotent: BTreeMap<usize, usize>,
    #[serde(default)]
    pub l_blocks: BTreeMap<usize, usize>,
    #[serde(default)]
    pub lt_blocks: BTreeMap<usize, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core: Option<Vec<Vec<Value>>>,
}

impl StructureFile {
    pub fn from_structure(s: &KroneckerStructure) -> Self {
        StructureFile {
            nilpotent: s.nilpotent.clone(),
            l_blocks: s.l_blocks.clone(),
            lt_blocks: s.lt_blocks.clone(),
            core_dim: Some(s.core_dim),
            core: s.core.as_ref().map(|c| MatrixFile::from_matrix(c).data),
        }
    }

    pub fn to_structure(&self) -> Result<KroneckerStructure, CliError> {
        let core = match &self.core {
            Some(rows) => {
                let n = rows.len();
                Some(rows_to_matrix(n, n, rows, "core")?)
            }
            None => None,
        };
        let core_dim = match (self.core_dim, &core) {
            (Some(d), Some(c)) if d != c.rows() => {
                return Err(CliError::Parse(format!("core_dim {d} but core is {}x{}", c.rows(), c.cols())))
            }
            (Some(d), _) => d,
            (None, Some(c)) => c.rows(),
            (None, None) => 0,
        };
        let s = KroneckerStructure {
            nilpotent: self.nilpotent.clone(),
            l_blocks: self.l_blocks.clone(),
            lt_blocks: self.lt_blocks.clone(),
            core_dim,
            core,
        };
        s.validate().map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(s)
    }
}

/// Pretty JSON with arrays of scalars kept on one line.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> =
                items.iter().map(|x| serde_json::to_string(x).expect("scalars serialize")).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalars serialize")),
    }
}

pub fn serialize<T: Serialize>(t: &T) -> String {
    to_text(&serde_json::to_value(t).expect("file types serialize"))
}

pub fn deserialize<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}
