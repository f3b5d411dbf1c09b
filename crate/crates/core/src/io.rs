//! File formats: matrices as JSON or CSV, complexes as JSON.
//!
//! Rationals are written as `"p/q"` strings and integers as bare numbers
//! (or as strings when they do not fit in 64 bits).

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex_gen::GeneratedComplex;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::simplicial::{Face, SimplicialComplex};
use crate::Rational;

pub fn rational_to_json(q: &Rational) -> Value {
    if q.denom().is_one() {
        match q.numer().to_i64() {
            Some(v) => Value::from(v),
            None => Value::from(q.numer().to_string()),
        }
    } else {
        Value::from(format!("{}/{}", q.numer(), q.denom()))
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let parsed = match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in {t:?}")))?;
            let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in {t:?}")))?;
            if q == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {t:?}")));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(t.parse().map_err(|_| Error::Parse(format!("not a number: {t:?}")))?),
    };
    Ok(parsed)
}

fn value_to_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(BigInt::from(i))),
            None => parse_rational(&n.to_string()),
        },
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("expected a number, found {other}"))),
    }
}

/// Reads `{"rows": r, "cols": c, "entries": [[..], ..]}`, or a bare array
/// of rows. A flat `entries` list is read row by row.
pub fn parse_matrix_json(text: &str) -> Result<Matrix<Rational>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let (shape, entries) = match &v {
        Value::Array(_) => (None, &v),
        Value::Object(map) => {
            let entries = map.get("entries").ok_or_else(|| Error::Parse("missing \"entries\"".into()))?;
            let dim = |key: &str| map.get(key).and_then(Value::as_u64).map(|x| x as usize);
            (dim("rows").zip(dim("cols")), entries)
        }
        _ => return Err(Error::Parse("expected an object or an array".into())),
    };
    let Value::Array(items) = entries else {
        return Err(Error::Parse("\"entries\" must be an array".into()));
    };
    let nested = items.iter().all(Value::is_array);
    let m = if nested && !items.is_empty() {
        let rows = items
            .iter()
            .map(|row| row.as_array().expect("checked").iter().map(value_to_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)?
    } else {
        let (r, c) = shape.ok_or_else(|| Error::Parse("a flat entry list needs \"rows\" and \"cols\"".into()))?;
        Matrix::new(r, c, items.iter().map(value_to_rational).collect::<Result<Vec<_>>>()?)?
    };
    if let Some((r, c)) = shape {
        if (r, c) != (m.rows(), m.cols()) {
            return Err(Error::Parse(format!("declared shape {r}x{c} but the entries form {}x{}", m.rows(), m.cols())));
        }
    }
    Ok(m)
}

/// Comma separated rows; blank lines and lines starting with `#` are
/// skipped.
pub fn parse_matrix_csv(text: &str) -> Result<Matrix<Rational>> {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

/// Picks the parser from the file name, defaulting to JSON.
pub fn parse_matrix(text: &str, file_name: &str) -> Result<Matrix<Rational>> {
    if file_name.to_ascii_lowercase().ends_with(".csv") {
        parse_matrix_csv(text)
    } else {
        parse_matrix_json(text)
    }
}

pub fn matrix_to_json(m: &Matrix<Rational>) -> Value {
    let rows: Vec<Value> =
        (0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(rational_to_json).collect())).collect();
    serde_json::json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

pub fn matrix_to_csv(m: &Matrix<Rational>) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let cells: Vec<String> = m.row(i).iter().map(|q| q.to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Complex on integer-matrix vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<Vec<Vec<i64>>>,
    pub facets: Vec<Face>,
}

impl ComplexFile {
    pub fn from_generated(gc: &GeneratedComplex) -> Self {
        Self { vertices: gc.vertices.iter().map(|v| v.rows()).collect(), facets: gc.complex.facets().to_vec() }
    }

    pub fn from_complex(k: &SimplicialComplex) -> Self {
        Self { vertices: Vec::new(), facets: k.facets().to_vec() }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let n = self.vertices.len();
        if n > 0 {
            if let Some(bad) = self.facets.iter().flatten().find(|&&v| v as usize >= n) {
                return Err(Error::Parse(format!("facet uses vertex {bad} but only {n} vertices are listed")));
            }
        }
        Ok(SimplicialComplex::new(n, self.facets.clone()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_cells() {
        assert_eq!(parse_rational("3/6").unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(parse_rational(" -4 ").unwrap(), Rational::from_integer((-4).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_to_json(&Rational::new(1.into(), 2.into())), Value::from("1/2"));
        assert_eq!(rational_to_json(&Rational::from_integer(7.into())), Value::from(7));
    }

    #[test]
    fn matrix_formats_roundtrip() {
        let m = parse_matrix_json(r#"{"rows":2,"cols":3,"entries":[[0,1,"1/2"],[2,-1,3]]}"#).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
        let again = parse_matrix_json(&matrix_to_json(&m).to_string()).unwrap();
        assert_eq!(again, m);
        assert_eq!(parse_matrix_csv(&matrix_to_csv(&m)).unwrap(), m);
        let flat = parse_matrix_json(r#"{"rows":2,"cols":3,"entries":[0,1,"1/2",2,-1,3]}"#).unwrap();
        assert_eq!(flat, m);
        assert!(parse_matrix_json(r#"{"rows":3,"cols":3,"entries":[[0,1,2],[2,-1,3]]}"#).is_err());
        assert!(parse_matrix_json("[[1,2],[3]]").is_err());
    }

    #[test]
    fn complex_file() {
        let f = ComplexFile::parse(r#"{"vertices":[],"facets":[[0,1],[1,2]]}"#).unwrap();
        let k = f.to_complex().unwrap();
        assert_eq!(k.f_vector(), vec![3, 2]);
        let bad = ComplexFile { vertices: vec![vec![vec![0]]], facets: vec![vec![0, 1]] };
        assert!(bad.to_complex().is_err());
    }
}
