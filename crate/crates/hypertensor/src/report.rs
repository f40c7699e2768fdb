//! Run reports and numeric emission for the command-line tool.
//!
//! Reports serialize with sorted keys (serde_json object maps are BTree-backed)
//! and all floating-point output is rounded to 12 significant digits, so runs
//! are diffable.

use serde_json::{json, Value};

use crate::error::Error;
use crate::solver::{EigenPair, MonotonicityReport};

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID_PARAMS: i32 = 3;
pub const EXIT_NONCONVERGENCE: i32 = 4;
pub const EXIT_NOT_ODD_BIPARTITE: i32 = 5;
pub const EXIT_ASSERTION: i32 = 6;

/// Round to `digits` significant decimal digits.
pub fn round_sig(v: f64, digits: i32) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    let magnitude = v.abs().log10().floor() as i32;
    let factor = 10f64.powi(digits - 1 - magnitude);
    (v * factor).round() / factor
}

fn sig(v: f64) -> Value {
    json!(round_sig(v, 12))
}

/// Deterministic run report: command, echoed inputs, outputs, timing.
pub fn run_report(command: &str, inputs: Value, outputs: Value, timing_ms: u128) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "timing_ms": timing_ms as u64,
    })
}

/// EigenPair as JSON with 12-significant-digit numerics.
pub fn eigenpair_json(pair: &EigenPair) -> Value {
    json!({
        "lambda": sig(pair.lambda),
        "vector": pair.vector.iter().map(|&v| sig(v)).collect::<Vec<_>>(),
        "residual": sig(pair.residual),
        "iterations": pair.iterations,
        "bracket": [sig(pair.bracket.0), sig(pair.bracket.1)],
    })
}

/// Fixed-column CSV table of a monotonicity scan:
/// `k,s,lambda,residual,iterations,delta_gap`.
pub fn monotonicity_csv(report: &MonotonicityReport) -> String {
    let mut out = String::from("k,s,lambda,residual,iterations,delta_gap\n");
    for row in &report.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.k,
            row.s,
            round_sig(row.lambda, 12),
            round_sig(row.residual, 12),
            row.iterations,
            round_sig(row.delta_gap, 12),
        ));
    }
    out
}

/// PASS/FAIL lines for the assertions of a monotonicity scan.
pub fn assertion_lines(report: &MonotonicityReport) -> String {
    let mut out = String::new();
    for a in &report.assertions {
        if a.passed {
            out.push_str(&format!("PASS {}\n", a.name));
        } else {
            out.push_str(&format!("FAIL {} [{}]\n", a.name, a.detail));
        }
    }
    out
}

/// Stable exit code for an error.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::Json(_) => EXIT_PARSE,
        Error::InvalidPowerParams { .. }
        | Error::InvalidOrder { .. }
        | Error::InvalidGraph(_)
        | Error::InvalidHypergraph(_)
        | Error::InvalidPartition(_)
        | Error::InvalidConfig(_)
        | Error::NotRegular => EXIT_INVALID_PARAMS,
        Error::NonConvergence { .. } => EXIT_NONCONVERGENCE,
        Error::NotOddBipartite | Error::LaplacianOddOrder { .. } => EXIT_NOT_ODD_BIPARTITE,
        _ => 1,
    }
}
