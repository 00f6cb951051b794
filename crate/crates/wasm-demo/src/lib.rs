//! Three operations exposed to the static page in `www/`. Every export takes
//! plain numbers or strings and returns a JSON string; the `*_json` functions
//! underneath are ordinary Rust and are what the tests exercise.

use gradedalg::families::{cm_family, sumset_count, CountMode, SumsetParams};
use gradedalg::resolution::minimal_free_resolution;
use gradedalg::{hilbert, Field, Ideal, PrimeField, Rationals, Ring};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// `|S_α|` by direct count for `α ∈ [from, to]`, next to the closed form
/// where it applies (`α ≥ mn + m + 2n`).
pub fn sumset_table_json(m: u32, n: u32, from: u32, to: u32) -> Result<String, String> {
    if to < from || to - from > 500 {
        return Err("choose 0 <= to - from <= 500".into());
    }
    let params = SumsetParams::new(m as u64, n as u64).map_err(|e| e.to_string())?;
    let rows: Vec<_> = (from as u64..=to as u64)
        .map(|a| {
            let oracle = sumset_count(&params, a, CountMode::Oracle).ok();
            let closed = sumset_count(&params, a, CountMode::Closed).ok();
            json!({ "alpha": a, "oracle": oracle, "closed": closed })
        })
        .collect();
    Ok(json!({
        "base": params.base(),
        "threshold": params.threshold(),
        "vanishing_from": params.vanishing_from(),
        "rows": rows,
    })
    .to_string())
}

/// Betti table and regularity of the radical `I_C ∩ (x,z) ∩ (z,t)` of
/// `(x^m t − y^m z, z^{n+2} − x t^{n+1})`, computed and predicted.
pub fn cm_radical_json(m: u32, n: u32) -> Result<String, String> {
    if m == 0 || n == 0 || m > 4 || n > 4 {
        return Err("choose 1 <= m, n <= 4".into());
    }
    let fam = cm_family(Rationals, m as u64, n as u64).map_err(|e| e.to_string())?;
    let res = minimal_free_resolution(&fam.radical).map_err(|e| e.to_string())?;
    let betti = res.betti();
    Ok(json!({
        "ideal": fam.ideal.to_string(),
        "radical": fam.radical.to_string(),
        "betti": betti.to_text(),
        "reg": res.regularity(),
        "expected_reg": fam.expected.reg_radical,
        "expected_degree": fam.expected.degree_radical,
    })
    .to_string())
}

/// Hilbert series and function of `R/I` for a homogeneous ideal typed by hand.
/// `gens` is a comma-separated list; `characteristic` 0 means `Q`.
pub fn hilbert_json(vars: &str, gens: &str, characteristic: u32, upto: u32) -> Result<String, String> {
    let vars: Vec<&str> = vars.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
    let gens: Vec<&str> = gens.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if characteristic == 0 {
        hilbert_in(Rationals, &vars, &gens, upto)
    } else {
        hilbert_in(PrimeField::new(characteristic).map_err(|e| e.to_string())?, &vars, &gens, upto)
    }
}

fn hilbert_in<F: Field>(field: F, vars: &[&str], gens: &[&str], upto: u32) -> Result<String, String> {
    let ring = Ring::new(field, vars).map_err(|e| e.to_string())?;
    let ideal = Ideal::parse(&ring, gens).map_err(|e| e.to_string())?;
    let hs = hilbert::hilbert_numerator(&ideal).map_err(|e| e.to_string())?;
    let values: Vec<i64> = (0..=upto.min(60) as i64).map(|d| hs.hilbert_function(d)).collect();
    Ok(json!({
        "series": hs.to_string(),
        "dim": hs.dimension(),
        "degree": hs.degree(),
        "hilbert_function": values,
    })
    .to_string())
}

fn to_js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sumset_table(m: u32, n: u32, from: u32, to: u32) -> Result<String, JsValue> {
    to_js(sumset_table_json(m, n, from, to))
}

#[wasm_bindgen]
pub fn cm_radical(m: u32, n: u32) -> Result<String, JsValue> {
    to_js(cm_radical_json(m, n))
}

#[wasm_bindgen]
pub fn hilbert(vars: &str, gens: &str, characteristic: u32, upto: u32) -> Result<String, JsValue> {
    to_js(hilbert_json(vars, gens, characteristic, upto))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn sumset_rows_agree_past_threshold() {
        let v: Value = serde_json::from_str(&sumset_table_json(1, 3, 10, 20).unwrap()).unwrap();
        for row in v["rows"].as_array().unwrap() {
            assert_eq!(row["oracle"], row["closed"]);
        }
        assert!(sumset_table_json(1, 3, 5, 4).is_err());
    }

    #[test]
    fn cm_radical_matches_prediction() {
        let v: Value = serde_json::from_str(&cm_radical_json(1, 2).unwrap()).unwrap();
        assert_eq!(v["reg"], v["expected_reg"]);
    }

    #[test]
    fn hilbert_of_twisted_cubic() {
        let v: Value = serde_json::from_str(&hilbert_json("x y z w", "y^2 - x*z, y*z - x*w, z^2 - y*w", 0, 4).unwrap()).unwrap();
        assert_eq!(v["hilbert_function"], serde_json::json!([1, 4, 7, 10, 13]));
        assert_eq!(v["degree"], 3);
        assert!(hilbert_json("x y", "x + y^2", 0, 3).is_err());
    }
}
