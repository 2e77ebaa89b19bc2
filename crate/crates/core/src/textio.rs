//! Text formats shared by the CLI and files.
//!
//! A matrix is written as a line `p N M` followed by `N` lines of `M`
//! space-separated residues. The JSON form `{"p": 3, "rows": [[...], ...]}` is
//! accepted anywhere the text form is, and may carry `-1` style entries that
//! are normalized into `[0, p)`. Code and transform files prepend one header
//! line:
//!
//! ```text
//! code <label> p=<p> N=<N> k=<k> d=<d>
//! transform form=<form> lambda=<λ> code=<label>
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::codes::CodeSpec;
use crate::error::{Error, Result};
use crate::gf::PrimeModulus;
use crate::matrix::{FieldMatrix, FieldVector};
use crate::transforms::{TransformForm, TransformSpec};

#[derive(Debug, Serialize, Deserialize)]
struct MatrixJson {
    p: u32,
    rows: Vec<Vec<i64>>,
}

pub fn matrix_to_text(m: &FieldMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.modulus(), m.rows(), m.cols());
    for i in 0..m.rows() {
        let line: Vec<String> = m.row(i).iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn matrix_to_json(m: &FieldMatrix) -> String {
    let json = MatrixJson {
        p: m.modulus().get(),
        rows: m
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(i64::from).collect())
            .collect(),
    };
    serde_json::to_string(&json).expect("plain data serializes")
}

pub fn code_to_text(spec: &CodeSpec) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "code {} p={} N={} k={} d={}",
        spec.label(),
        spec.modulus(),
        spec.n(),
        spec.k(),
        spec.d()
    )
    .unwrap();
    out.push_str(&matrix_to_text(spec.parity_check()));
    out
}

pub fn transform_header(t: &TransformSpec) -> TransformHeader {
    TransformHeader {
        form: t.form(),
        lambda: t.lambda().value(),
        code: t.source().label().to_string(),
    }
}

pub fn transform_to_text(t: &TransformSpec) -> String {
    format!("{}\n{}", transform_header(t), matrix_to_text(t.matrix()))
}

/// The `transform ...` header line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformHeader {
    pub form: TransformForm,
    pub lambda: u32,
    pub code: String,
}

impl std::fmt::Display for TransformHeader {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "transform form={} lambda={} code={}",
            self.form, self.lambda, self.code
        )
    }
}

impl std::str::FromStr for TransformHeader {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let mut words = line.split_whitespace();
        if words.next() != Some("transform") {
            return Err(Error::Parse(format!("not a transform header: {line:?}")));
        }
        let (mut form, mut lambda, mut code) = (None, None, None);
        for w in words {
            match w.split_once('=') {
                Some(("form", v)) => form = Some(v.parse()?),
                Some(("lambda", v)) => lambda = Some(parse_int(v)?),
                Some(("code", v)) => code = Some(v.to_string()),
                _ => return Err(Error::Parse(format!("unexpected header field {w:?}"))),
            }
        }
        match (form, lambda, code) {
            (Some(form), Some(lambda), Some(code)) => Ok(Self { form, lambda, code }),
            _ => Err(Error::Parse(format!("incomplete transform header: {line:?}"))),
        }
    }
}

fn parse_int<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Parse(format!("expected an integer, found {s:?}")))
}

fn checked_rows(p: PrimeModulus, rows: &[Vec<i64>]) -> Result<FieldMatrix> {
    let q = p.get() as i64;
    if let Some(v) = rows.iter().flatten().find(|&&v| v <= -q || v >= q) {
        return Err(Error::Parse(format!("entry {v} is out of range for GF({p})")));
    }
    FieldMatrix::from_signed_rows(p, rows)
}

/// A parsed matrix file: an optional `transform` header plus the matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub header: Option<TransformHeader>,
    pub matrix: FieldMatrix,
}

/// Reads the text or JSON matrix form. A leading `code ...` or `transform ...`
/// header line is allowed; blank lines and `#` comments are skipped.
pub fn parse_matrix_file(input: &str) -> Result<MatrixFile> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        let json: MatrixJson =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        let p = PrimeModulus::new(json.p)?;
        return Ok(MatrixFile {
            header: None,
            matrix: checked_rows(p, &json.rows)?,
        });
    }

    let mut lines = input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let mut header = None;
    while let Some(l) = lines.peek() {
        if l.starts_with("transform") {
            header = Some(l.parse()?);
        } else if !l.starts_with("code") {
            break;
        }
        lines.next();
    }

    let dims = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `p N M` line".into()))?;
    let dims: Vec<&str> = dims.split_whitespace().collect();
    let [p, n, m] = dims[..] else {
        return Err(Error::Parse(format!("expected `p N M`, found {:?}", dims.join(" "))));
    };
    let p = PrimeModulus::new(parse_int(p)?)?;
    let (n, m): (usize, usize) = (parse_int(n)?, parse_int(m)?);

    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {n} rows, found {i}")))?;
        let row = line
            .split_whitespace()
            .map(parse_int)
            .collect::<Result<Vec<i64>>>()?;
        if row.len() != m {
            return Err(Error::Parse(format!(
                "row {i} has {} entries, expected {m}",
                row.len()
            )));
        }
        rows.push(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
    }
    let matrix = if n == 0 {
        FieldMatrix::zeros(p, 0, m)
    } else {
        checked_rows(p, &rows)?
    };
    Ok(MatrixFile { header, matrix })
}

pub fn parse_matrix(input: &str) -> Result<FieldMatrix> {
    Ok(parse_matrix_file(input)?.matrix)
}

/// Parses a comma-separated list of residues, e.g. `0,1,2,0`.
pub fn parse_vector(literal: &str, p: PrimeModulus) -> Result<FieldVector> {
    let entries = literal
        .split(',')
        .map(|s| parse_int::<u32>(s.trim()))
        .collect::<Result<Vec<_>>>()?;
    FieldVector::from_residues(p, entries)
}
