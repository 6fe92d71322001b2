//! wasm-bindgen entry points for the static page in `www/`.
//!
//! Each export returns a JSON string (the same records the CLI prints with
//! `--format jsonl`); errors come back as a thrown string. The plain `*_json`
//! functions carry the logic so they can be tested natively.

use nlclass::geometry::CatalogName;
use nlclass::report::fixture::Fixture;
use nlclass::report::{inspect, lattice_report, run_pipeline, PipelineConfig, SurfaceSource};
use nlclass::ring::PrimeField;
use wasm_bindgen::prelude::*;

/// Largest surface degree the page accepts; degree 8 already means
/// 2s - 4 = 12 and pieces of dimension 455.
const MAX_S: usize = 8;

fn check_s(s: usize) -> Result<(), String> {
    if s > MAX_S {
        return Err(format!("surface degree {s} is above the page limit {MAX_S}"));
    }
    Ok(())
}

/// Full pipeline for a catalog curve: class table, reconstruction rows and
/// perfectness ledger.
pub fn pipeline_json(curve: &str, s: usize, seed: u64, prime: u32) -> Result<String, String> {
    check_s(s)?;
    let k = PrimeField::new(prime).map_err(|e| e.to_string())?;
    let name: CatalogName = curve.parse().map_err(|e: nlclass::Error| e.to_string())?;
    let cfg = PipelineConfig::for_curve(k, name, s, seed).map_err(|e| e.to_string())?;
    let report = run_pipeline(k, &cfg, "web pipeline").map_err(|e| e.to_string())?;
    Ok(report.to_json())
}

/// Invariants of a pasted ideal; with `s > 0`, also the class on a random
/// degree-`s` surface through it.
pub fn inspect_json(text: &str, s: usize, seed: u64, prime: u32) -> Result<String, String> {
    check_s(s)?;
    let k = PrimeField::new(prime).map_err(|e| e.to_string())?;
    let fx = Fixture::parse(text, k).map_err(|e| e.to_string())?;
    let source = if s == 0 { SurfaceSource::None } else { SurfaceSource::Random { s, seed } };
    let report = inspect(k, &fx, source, None).map_err(|e| e.to_string())?;
    Ok(report.to_json())
}

pub fn lattice_json(max_deg: i64) -> Result<String, String> {
    if !(1..=40).contains(&max_deg) {
        return Err("max degree must be between 1 and 40".into());
    }
    serde_json::to_string(&lattice_report(max_deg, None, &[])).map_err(|e| e.to_string())
}

// seeds are u32 so that JavaScript passes plain numbers, not BigInt
#[wasm_bindgen]
pub fn pipeline(curve: &str, s: usize, seed: u32, prime: u32) -> Result<String, JsValue> {
    pipeline_json(curve, s, seed.into(), prime).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn inspect_ideal(text: &str, s: usize, seed: u32, prime: u32) -> Result<String, JsValue> {
    inspect_json(text, s, seed.into(), prime).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lattice(max_deg: i32) -> Result<String, JsValue> {
    lattice_json(max_deg.into()).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn pipeline_twisted_cubic() {
        let v = parse(&pipeline_json("twisted-cubic", 4, 7, 32003).unwrap());
        assert_eq!(v["class"]["quotient_hf"], serde_json::json!([1, 4, 7, 4, 1]));
        assert_eq!(v["perfect"]["perfect"], true);
    }

    #[test]
    fn pipeline_rational_quartic_ledger() {
        let v = parse(&pipeline_json("rational_quartic", 4, 3, 65521).unwrap());
        assert_eq!(v["perfect"]["ledger"][3]["total"], 14);
        assert_eq!(v["perfect"]["ledger"][3]["alpha"], 16);
    }

    #[test]
    fn inspect_pasted_ideal() {
        let v = parse(&inspect_json("x*z - y^2\nx*w - y*z\ny*w - z^2\n", 0, 1, 32003).unwrap());
        assert_eq!(v["curve"]["degree"], 3);
        assert_eq!(v["curve"]["acm"], true);
        let e = inspect_json("x*z - y^2\nx*w - y*\n", 0, 1, 32003).unwrap_err();
        assert!(e.contains("line 2"), "{e}");
    }

    #[test]
    fn lattice_and_limits() {
        let v = parse(&lattice_json(6).unwrap());
        assert_eq!(v["survivors"][0]["x"], 4);
        assert!(lattice_json(0).is_err());
        assert!(pipeline_json("twisted_cubic", 9, 1, 32003).is_err());
        assert!(pipeline_json("nonsense", 4, 1, 32003).is_err());
    }
}
