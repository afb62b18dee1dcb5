//! Text encoding of elements and polynomials.
//!
//! An element is an integer in `[0, q)` (coefficients in base `p`, constant
//! coefficient least significant), `b^k` for `generator^k`, or `-1`.
//! Polynomials are comma-separated element tokens, constant term first.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::poly::Poly;

pub fn parse_elem(field: &FieldSpec, tok: &str) -> Result<Elem> {
    let tok = tok.trim();
    if tok == "-1" {
        return Ok(field.neg_one());
    }
    if let Some(k) = tok.strip_prefix("b^") {
        let k: i64 = k
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad exponent in element {tok:?}")))?;
        return Ok(field.gen_pow(k));
    }
    let v: u64 = tok
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("cannot parse element {tok:?}")))?;
    field.elem(v)
}

pub fn format_elem(e: Elem) -> String {
    e.encoding().to_string()
}

/// `b^k` form, or `0`.
pub fn format_elem_log(field: &FieldSpec, e: Elem) -> String {
    match field.log(e) {
        Some(k) => format!("b^{k}"),
        None => "0".to_string(),
    }
}

pub fn parse_poly(field: &FieldSpec, s: &str) -> Result<Poly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty polynomial".into()));
    }
    let coeffs = s
        .split(',')
        .map(|t| parse_elem(field, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(field, coeffs))
}

pub fn format_poly(p: &Poly) -> String {
    p.to_string()
}
