//! Browser bindings. Each export runs the same code path as the matching
//! `nichols` subcommand with `--format json` and returns its JSON document.

use wasm_bindgen::prelude::*;

/// Largest number of basis tensors a page request may build.
pub const PAGE_BUDGET: u64 = 10_000;

fn json(args: &[&str]) -> Result<String, String> {
    let out = nichols_cli::run(["nichols"].iter().chain(args).chain(&["--format", "json"]));
    if out.code == nichols_cli::EXIT_OK {
        Ok(out.stdout)
    } else {
        Err(out.stderr.trim_start_matches("error: ").trim_end().to_string())
    }
}

pub fn verdict_json(n: usize, cycle_type: &str, rep: &str) -> Result<String, String> {
    json(&["verdict", "-n", &n.to_string(), "-t", cycle_type, "-r", rep])
}

pub fn table_json(which: &str) -> Result<String, String> {
    json(&["table", which])
}

pub fn hilbert_json(n: usize, cycle_type: &str, rep: &str, dmax: usize) -> Result<String, String> {
    let budget = PAGE_BUDGET.to_string();
    json(&["hilbert", "-n", &n.to_string(), "-t", cycle_type, "-r", rep, "--dmax", &dmax.to_string(), "--budget", &budget])
}

#[wasm_bindgen]
pub fn verdict(n: usize, cycle_type: &str, rep: &str) -> Result<String, JsError> {
    verdict_json(n, cycle_type, rep).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn table(which: &str) -> Result<String, JsError> {
    table_json(which).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hilbert(n: usize, cycle_type: &str, rep: &str, dmax: usize) -> Result<String, JsError> {
    hilbert_json(n, cycle_type, rep, dmax).map_err(|e| JsError::new(&e))
}
