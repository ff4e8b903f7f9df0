//! Command implementations behind the thin binary.  Each command returns
//! the JSON payload for standard output or a [`CmdError`] carrying the exit
//! code (1 for parse failures, 2 for domain rejections) and a structured
//! error object for standard error.

use std::path::Path;

use serde_json::{json, Value};

use crate::duval::{
    check_admissible, enumerate_classification, minus_two_candidates, surface_report,
};
use crate::error::Error;
use crate::jsonio::{BranchDoc, ConfigDoc};
use crate::resolution::{minus_two_components, resolve, BranchModel};
use crate::verify::{classification_table_check, run_catalog, tally, Status};

#[derive(Debug)]
pub struct CmdError {
    pub exit_code: i32,
    pub payload: Value,
}

impl CmdError {
    fn parse(message: String, line: usize, column: usize) -> Self {
        CmdError {
            exit_code: 1,
            payload: json!({
                "error": { "kind": "parse", "message": message, "line": line, "column": column }
            }),
        }
    }

    fn io(message: String) -> Self {
        CmdError {
            exit_code: 1,
            payload: json!({ "error": { "kind": "io", "message": message } }),
        }
    }

    fn domain(kind: &str, message: String) -> Self {
        CmdError {
            exit_code: 2,
            payload: json!({ "error": { "kind": kind, "message": message } }),
        }
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::Inadmissible(_) => "inadmissible",
            Error::BadEvidence(_) | Error::BadPoint => "bad_evidence",
            Error::OddBranchClass(_) => "odd_branch_class",
            _ => "domain",
        };
        CmdError::domain(kind, e.to_string())
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CmdError::parse(e.to_string(), e.line(), e.column()))
}

/// `report <config>`: the surface report of one configuration.
pub fn cmd_report(path: &Path) -> Result<Value, CmdError> {
    let doc: ConfigDoc = read_json(path)?;
    let config = doc.to_config()?;
    let admissibility = check_admissible(&config);
    if !admissibility.passed {
        return Err(CmdError {
            exit_code: 2,
            payload: json!({
                "error": { "kind": "inadmissible", "reasons": admissibility.reasons }
            }),
        });
    }
    let report = surface_report(&config)?;
    Ok(serde_json::to_value(report).expect("report serializes"))
}

/// `classify --pg N --q N [--ksq N]`: enumerator output with the table
/// comparison.
pub fn cmd_classify(pg: i64, q: i64, ksq: Option<i64>) -> Result<Value, CmdError> {
    let rows = enumerate_classification(pg, q, ksq)?;
    let configs: Vec<Value> = rows
        .iter()
        .map(|(config, report)| {
            json!({
                "config": ConfigDoc::from_config(config),
                "report": report,
            })
        })
        .collect();
    let table_check = if matches!((pg, q), (0, 0) | (1, 0) | (1, 1)) {
        let (extras, missing) = classification_table_check(pg, q)?;
        let realized: Vec<(i64, u32)> = rows
            .iter()
            .filter_map(|(config, report)| match config {
                crate::duval::DuValConfig::TypeDn { n, .. } => Some((report.ksq_minimal, *n)),
                _ => None,
            })
            .collect();
        json!({
            "warnings": extras
                .iter()
                .map(|(k, n)| format!("(K² = {k}, n = {n}) is realized but not listed"))
                .collect::<Vec<_>>(),
            "missing_cells": missing,
            "realized_cells": realized,
        })
    } else {
        Value::Null
    };
    Ok(json!({ "configs": configs, "table_check": table_check }))
}

/// `resolve <file>`: the resolution ledger of a configuration or of a raw
/// branch document.
pub fn cmd_resolve(path: &Path) -> Result<Value, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::io(format!("{}: {e}", path.display())))?;
    // A config document when it has a "type" field, a raw branch otherwise.
    let probe: Value = serde_json::from_str(&text)
        .map_err(|e| CmdError::parse(e.to_string(), e.line(), e.column()))?;
    let (branch, candidates_from_config): (BranchModel, Option<crate::duval::DuValConfig>) =
        if probe.get("type").is_some() {
            let doc: ConfigDoc = serde_json::from_str(&text)
                .map_err(|e| CmdError::parse(e.to_string(), e.line(), e.column()))?;
            let config = doc.to_config()?;
            (crate::duval::build_branch(&config)?, Some(config))
        } else {
            let doc: BranchDoc = serde_json::from_str(&text)
                .map_err(|e| CmdError::parse(e.to_string(), e.line(), e.column()))?;
            (doc.to_branch()?, None)
        };

    let cover = resolve(&branch)?;
    let candidates = match &candidates_from_config {
        Some(config) => minus_two_candidates(config, &cover)?,
        None => {
            // For raw branches, offer the strict exceptional curves of the
            // [r,r]-pairs.
            let mut out = Vec::new();
            for sing in branch.singularities() {
                if let crate::resolution::SingularityAssignment::RrPoint { first, second, .. } =
                    sing
                {
                    out.push(
                        cover
                            .model()
                            .exceptional(*first)?
                            .checked_sub(&cover.model().exceptional(*second)?)?,
                    );
                }
            }
            out
        }
    };
    let minus_two = minus_two_components(&cover, &candidates)?;

    let steps: Vec<Value> = cover
        .steps()
        .iter()
        .map(|s| {
            json!({
                "center": s.center.0,
                "multiplicity": s.multiplicity,
                "subtraction": s.subtraction,
                "exceptional_in_branch": s.exceptional_in_branch,
            })
        })
        .collect();
    Ok(json!({
        "steps": steps,
        "smooth_class": cover.smooth_class().coeffs(),
        "half_class": cover.half_class().coeffs(),
        "minus_two_curves": minus_two.iter().map(|c| c.coeffs().to_vec()).collect::<Vec<_>>(),
    }))
}

/// `verify-paper`: the whole catalog.  Returns the records, whether all of
/// them passed, and a human summary line.
pub fn cmd_verify_paper() -> (Value, bool, String) {
    let records = run_catalog();
    let (passed, failed) = tally(&records);
    let all_green = failed == 0;
    let mut failing: Vec<&str> = records
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.id.as_str())
        .collect();
    failing.truncate(10);
    let summary = if all_green {
        format!("verify-paper: {passed} checks passed, 0 failed")
    } else {
        format!(
            "verify-paper: {passed} checks passed, {failed} failed (first failing: {failing:?})"
        )
    };
    (
        serde_json::to_value(&records).expect("records serialize"),
        all_green,
        summary,
    )
}
