//! JSON forms for matrices over the three entry domains.
//!
//! Matrix JSON: `{"rows": r, "cols": c, "domain": d, "entries": [[...], ...]}`
//! with `domain` one of `"rational"`, `"poly-x"`, `"ratfun-x"` and entries in
//! the scalar forms: rationals as `num/den` strings, polynomials as ascending
//! coefficient arrays, rational functions as `{"num": [...], "den": [...]}`.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Ring};
use crate::poly::{Poly, Var};
use crate::ratfun::RatFun;
use crate::rational::{parse_rat, rat_to_string, Rat};

/// A matrix entry domain with a JSON scalar form.
pub trait JsonEntry: Ring + Sized {
    /// Domain tag carried in matrix JSON.
    const DOMAIN: &'static str;
    fn entry_to_json(&self) -> Value;
    fn entry_from_json(v: &Value) -> Result<Self>;
}

impl JsonEntry for Rat {
    const DOMAIN: &'static str = "rational";

    fn entry_to_json(&self) -> Value {
        Value::String(rat_to_string(self))
    }

    fn entry_from_json(v: &Value) -> Result<Self> {
        let s = v
            .as_str()
            .ok_or_else(|| Error::Parse(format!("expected rational string, got {v}")))?;
        parse_rat(s)
    }
}

impl JsonEntry for Poly {
    const DOMAIN: &'static str = "poly-x";

    fn entry_to_json(&self) -> Value {
        assert_eq!(
            self.var(),
            Var::X,
            "only x-polynomials serialize in matrices"
        );
        self.to_json()
    }

    fn entry_from_json(v: &Value) -> Result<Self> {
        Poly::from_json(Var::X, v)
    }
}

impl JsonEntry for RatFun {
    const DOMAIN: &'static str = "ratfun-x";

    fn entry_to_json(&self) -> Value {
        assert_eq!(
            self.var(),
            Var::X,
            "only x-world functions serialize in matrices"
        );
        self.to_json()
    }

    fn entry_from_json(v: &Value) -> Result<Self> {
        RatFun::from_json(Var::X, v)
    }
}

/// Serialize a matrix with its domain tag.
pub fn matrix_to_json<T: JsonEntry>(m: &Matrix<T>) -> Value {
    let entries: Vec<Value> = (1..=m.rows())
        .map(|i| Value::Array((1..=m.cols()).map(|j| m.at(i, j).entry_to_json()).collect()))
        .collect();
    serde_json::json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "domain": T::DOMAIN,
        "entries": entries,
    })
}

/// Parse a matrix of a known entry domain; the `domain` tag must match.
pub fn matrix_from_json<T: JsonEntry>(v: &Value) -> Result<Matrix<T>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected matrix object, got {v}")))?;
    let domain = obj
        .get("domain")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing 'domain'".into()))?;
    if domain != T::DOMAIN {
        return Err(Error::Parse(format!(
            "domain mismatch: expected {}, got {domain}",
            T::DOMAIN
        )));
    }
    let rows = obj
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing 'rows'".into()))? as usize;
    let cols = obj
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing 'cols'".into()))? as usize;
    if rows == 0 || cols == 0 {
        return Err(Error::Parse("matrix dimensions must be positive".into()));
    }
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing 'entries'".into()))?;
    if entries.len() != rows {
        return Err(Error::Parse(format!(
            "expected {rows} rows, got {}",
            entries.len()
        )));
    }
    let mut parsed: Vec<Vec<T>> = Vec::with_capacity(rows);
    for row in entries {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("row is not an array".into()))?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "expected {cols} columns, got {}",
                row.len()
            )));
        }
        parsed.push(row.iter().map(T::entry_from_json).collect::<Result<_>>()?);
    }
    Ok(Matrix::from_rows(parsed))
}
