//! WebAssembly bindings for the browser demo. Every entry point takes plain
//! strings and numbers and returns a JSON string; the `*_json` functions hold
//! the logic so they can be tested natively.

use homdual::cli::json::{parse_document, table_json, Document};
use homdual::exact_math::{format_rational, parse_rational};
use homdual::qplane::{hom_power_left, quantum_binomial_expand, QParams, QPoly};
use homdual::recseq::{
    annihilation_residual, generate_sequence, generate_sequence_derived, BiPoly, BiSequence,
    Boundary, CaseId,
};
use homdual::Rational;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn rational(field: &str, s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).map_err(|e| format!("{field}: {e}"))
}

fn params(q: &str, k: &str) -> Result<QParams, String> {
    QParams::new(rational("q", q)?, rational("k", k)?).map_err(|e| e.to_string())
}

fn case(c: u8) -> Result<CaseId, String> {
    CaseId::try_from(c).map_err(|e| e.to_string())
}

fn bipoly(text: &str) -> Result<BiPoly, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("h: {e}"))?;
    match parse_document(&v).map_err(|e| format!("h: {e}"))? {
        Document::BiPoly(h) => Ok(h),
        other => Err(format!("h: expected a bipoly document, got {}", other.kind())),
    }
}

fn table(text: &str) -> Result<BiSequence, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("table: {e}"))?;
    match parse_document(&v).map_err(|e| format!("table: {e}"))? {
        Document::Table(t) => Ok(t),
        other => Err(format!("table: expected a bisequence document, got {}", other.kind())),
    }
}

fn terms_json(p: &QPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(&(m, n), c)| json!([m, n, format_rational(c)]))
            .collect(),
    )
}

/// The quantum binomial formula at `n`, with the left Hom-power of `x + y`
/// alongside for comparison.
pub fn qbinom_expansion_json(n: u32, q: &str, k: &str) -> Result<String, String> {
    let p = params(q, k)?;
    let n = n as usize;
    let formula = quantum_binomial_expand(n, &p);
    let xy = QPoly::x(p.clone()).add(&QPoly::y(p)).map_err(|e| e.to_string())?;
    let power = hom_power_left(&xy, n);
    Ok(json!({
        "n": n,
        "formula": formula.to_string(),
        "terms": terms_json(&formula),
        "hom_power": power.to_string(),
        "agree": formula == power,
    })
    .to_string())
}

/// Fills an `(M+1)×(N+1)` table from a constant L-shaped boundary. With an
/// empty `k` the case stencil is used as displayed; otherwise the twisted
/// stencil derived at `(q, k)`.
pub fn sequence_table_json(
    h: &str,
    case_id: u8,
    q: &str,
    k: &str,
    boundary_value: &str,
    m_max: u32,
    n_max: u32,
) -> Result<String, String> {
    let h = bipoly(h)?;
    let case_id = case(case_id)?;
    let value = rational("boundary", boundary_value)?;
    let boundary = Boundary::constant(h.r(), h.s(), m_max as usize, n_max as usize, &value);
    let t = if k.trim().is_empty() {
        generate_sequence(&h, case_id, &rational("q", q)?, &boundary)
    } else {
        generate_sequence_derived(&h, case_id, &params(q, k)?, &boundary)
    }
    .map_err(|e| e.to_string())?;
    Ok(table_json(&t).to_string())
}

/// Residuals of `table` against the case condition at every cell, `null`
/// where the condition is not defined (`m < r` or `n < s`).
pub fn residual_grid_json(table_doc: &str, h: &str, case_id: u8, q: &str, k: &str) -> Result<String, String> {
    let t = table(table_doc)?;
    let h = bipoly(h)?;
    let case_id = case(case_id)?;
    let p = params(q, k)?;
    let mut rows = Vec::new();
    let mut nonzero = 0usize;
    for m in 0..=t.m_max() {
        let mut row = Vec::new();
        for n in 0..=t.n_max() {
            if m < h.r() || n < h.s() {
                row.push(Value::Null);
                continue;
            }
            let r = annihilation_residual(&t, &h, case_id, m, n, &p).map_err(|e| e.to_string())?;
            let text = format_rational(&r);
            if text != "0" {
                nonzero += 1;
            }
            row.push(Value::String(text));
        }
        rows.push(Value::Array(row));
    }
    Ok(json!({ "residuals": rows, "nonzero": nonzero }).to_string())
}

#[wasm_bindgen]
pub fn qbinom_expansion(n: u32, q: &str, k: &str) -> Result<String, JsError> {
    qbinom_expansion_json(n, q, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sequence_table(
    h: &str,
    case_id: u8,
    q: &str,
    k: &str,
    boundary_value: &str,
    m_max: u32,
    n_max: u32,
) -> Result<String, JsError> {
    sequence_table_json(h, case_id, q, k, boundary_value, m_max, n_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn residual_grid(table_doc: &str, h: &str, case_id: u8, q: &str, k: &str) -> Result<String, JsError> {
    residual_grid_json(table_doc, h, case_id, q, k).map_err(|e| JsError::new(&e))
}
