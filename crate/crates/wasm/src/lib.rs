//! Browser bindings: three operations over the exact core, each returning a
//! JSON string for the static page in `www/`.

use std::collections::BTreeMap;

use braid_chow::export::{latex_schur_expression, SchurTableRecord, StrataRecord};
use braid_chow::level_trees::strata_summary;
use braid_chow::moduli::m_series;
use braid_chow::numeric::{hnum_from_solution, NumericRecord};
use braid_chow::solver::{equivariant_table, solve_b};
use wasm_bindgen::prelude::*;

/// Largest n the page offers; solver cost grows quickly beyond it.
pub const MAX_N: usize = 9;
pub const STRATA_MAX_N: usize = 6;

fn check_range(n: usize, hi: usize) -> Result<(), String> {
    if (2..=hi).contains(&n) {
        Ok(())
    } else {
        Err(format!("n must lie in 2..={hi}, got {n}"))
    }
}

/// `{n, rows, latex}` for the equivariant polynomial `H_n`.
pub fn table_json(n: usize) -> Result<String, String> {
    check_range(n, MAX_N)?;
    let b = solve_b(&m_series(n).map_err(|e| e.to_string())?, n).map_err(|e| e.to_string())?;
    let table = equivariant_table(&b, n).map_err(|e| e.to_string())?;
    let rec = SchurTableRecord::new(n, &table);
    let value = serde_json::json!({ "n": n, "rows": rec.rows, "latex": latex_schur_expression(&table) });
    Ok(value.to_string())
}

/// `[{n, hnum, chi}]` for every degree up to `n`.
pub fn numeric_json(n: usize) -> Result<String, String> {
    check_range(n, MAX_N)?;
    let b = solve_b(&m_series(n).map_err(|e| e.to_string())?, n).map_err(|e| e.to_string())?;
    let recs: Vec<NumericRecord> = hnum_from_solution(&b).to_records();
    serde_json::to_string(&recs).map_err(|e| e.to_string())
}

/// Level-tree counts and E-polynomial contributions, keyed by length.
pub fn strata_json(n: usize) -> Result<String, String> {
    check_range(n, STRATA_MAX_N)?;
    let rec = StrataRecord::new(&strata_summary(n, false), false);
    let by_len: BTreeMap<String, u64> = rec.counts_by_length.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let value = serde_json::json!({
        "n": rec.n,
        "total": rec.total,
        "counts_by_length": by_len,
        "epoly": rec.epoly,
        "epoly_by_length": rec.epoly_by_length,
    });
    Ok(value.to_string())
}

#[wasm_bindgen(js_name = equivariantTable)]
pub fn equivariant_table_js(n: usize) -> Result<String, JsError> {
    table_json(n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = numericTable)]
pub fn numeric_table_js(n: usize) -> Result<String, JsError> {
    numeric_json(n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = strataCensus)]
pub fn strata_census_js(n: usize) -> Result<String, JsError> {
    strata_json(n).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_four() {
        let v: serde_json::Value = serde_json::from_str(&table_json(4).unwrap()).unwrap();
        assert_eq!(v["latex"], "s_4(1 + 3t + t^2) + s_{31}t + s_{22}t");
        assert_eq!(v["rows"][0]["lambda"], serde_json::json!([4]));
    }

    #[test]
    fn numeric_five() {
        let v: serde_json::Value = serde_json::from_str(&numeric_json(5).unwrap()).unwrap();
        let last = &v.as_array().unwrap()[4];
        assert_eq!(last["n"], 5);
        assert_eq!(last["chi"], 84);
    }

    #[test]
    fn strata_four() {
        let v: serde_json::Value = serde_json::from_str(&strata_json(4).unwrap()).unwrap();
        assert_eq!(v["total"], 32);
        assert_eq!(v["epoly"], serde_json::json!(["1/1", "8/1", "1/1"]));
    }

    #[test]
    fn out_of_range() {
        assert!(table_json(1).is_err());
        assert!(strata_json(STRATA_MAX_N + 1).is_err());
    }
}
