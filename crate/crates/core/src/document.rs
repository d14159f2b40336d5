//! JSON interchange for algebras, quaternions and matrices.
//!
//! ```json
//! {"algebra": {"a": "-1", "b": "1"}, "n": 1, "entries": [[["1", "0", "1", "0"]]]}
//! ```
//!
//! Rationals are strings matching `-?[0-9]+(/[1-9][0-9]*)?` so that no
//! floating-point value can leak in.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraParams, Quaternion};
use crate::error::{Error, Result};
use crate::matrix::MatrixH;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub a: String,
    pub b: String,
}

/// Wire form of a matrix; all numbers are rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub algebra: AlgebraDocument,
    pub n: usize,
    pub entries: Vec<Vec<[String; 4]>>,
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn parse_rational(text: &str, location: &str) -> Result<Rational> {
    text.parse()
        .map_err(|e: crate::rational::ParseRationalError| parse_error(location, e.to_string()))
}

pub fn parse_algebra(doc: &AlgebraDocument) -> Result<AlgebraParams> {
    let a = parse_rational(&doc.a, "algebra.a")?;
    let b = parse_rational(&doc.b, "algebra.b")?;
    AlgebraParams::new(a, b).map_err(|e| parse_error("algebra", e.to_string()))
}

pub fn algebra_document(alg: &AlgebraParams) -> AlgebraDocument {
    AlgebraDocument {
        a: alg.a().to_string(),
        b: alg.b().to_string(),
    }
}

pub fn parse_quaternion(
    alg: &AlgebraParams,
    coords: &[String; 4],
    location: &str,
) -> Result<Quaternion> {
    let mut out = Vec::with_capacity(4);
    for (m, text) in coords.iter().enumerate() {
        out.push(parse_rational(text, &format!("{location}[{m}]"))?);
    }
    let [w, x, y, z]: [Rational; 4] = out.try_into().expect("four coordinates");
    Ok(Quaternion::new(alg, w, x, y, z))
}

pub fn quaternion_document(q: &Quaternion) -> [String; 4] {
    q.coords().clone().map(|c| c.to_string())
}

impl MatrixDocument {
    pub fn to_matrix(&self) -> Result<MatrixH> {
        let alg = parse_algebra(&self.algebra)?;
        if self.n == 0 {
            return Err(parse_error("n", "matrix size must be at least 1"));
        }
        if self.entries.len() != self.n {
            return Err(parse_error(
                "entries",
                format!("expected {} rows, found {}", self.n, self.entries.len()),
            ));
        }
        let mut rows = Vec::with_capacity(self.n);
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.n {
                return Err(parse_error(
                    format!("entries[{r}]"),
                    format!("expected {} entries, found {}", self.n, row.len()),
                ));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(c, q)| parse_quaternion(&alg, q, &format!("entries[{r}][{c}]")))
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        MatrixH::from_rows(&alg, rows)
    }

    pub fn from_matrix(a: &MatrixH) -> Self {
        MatrixDocument {
            algebra: algebra_document(a.algebra()),
            n: a.n(),
            entries: a
                .rows()
                .map(|row| row.iter().map(quaternion_document).collect())
                .collect(),
        }
    }
}

/// Parses a JSON matrix document.
pub fn parse_matrix(text: &str) -> Result<MatrixH> {
    let doc: MatrixDocument = serde_json::from_str(text).map_err(|e| {
        parse_error(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    doc.to_matrix()
}

pub fn serialize_matrix(a: &MatrixH) -> String {
    serde_json::to_string(&MatrixDocument::from_matrix(a)).expect("matrix documents serialize")
}
