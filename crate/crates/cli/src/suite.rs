//! Theorem manifests: rows of (instance, hypotheses, construction, conclusions).
//!
//! ```json
//! {"rows": [
//!   {"name": "derivation product",
//!    "instance": "instances/truncated_cubic_f3.json",
//!    "hypotheses": ["check_hom_associative", "is_derivation ddt"],
//!    "construction": "derivation_product ddt",
//!    "conclusions": ["check_hom_novikov"]}
//! ]}
//! ```
//!
//! `instance` is a document path relative to the manifest; `recipe` (a
//! catalog recipe such as `"truncated_polynomial n=3"`) may be given instead.
//! `construction` is optional and runs in strict mode unless `"unchecked":
//! true`. A row passes when every hypothesis holds on the instance, the
//! construction succeeds, and every conclusion holds on its output.

use std::path::{Path, PathBuf};

use colorhom::catalog::InstanceRecipe;
use colorhom::checks::Witness;
use colorhom::constructions::Mode;
use colorhom::Error;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands::{apply_construction, evaluate_check, recipe_document};
use crate::document::AlgebraDocument;
use crate::report::{pretty, witness_json, witness_text, Format};
use crate::{load, read_file, CliError, Outcome, Status};

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct Manifest {
    rows: Vec<Row>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct Row {
    name: String,
    instance: Option<String>,
    recipe: Option<String>,
    #[serde(default)]
    hypotheses: Vec<String>,
    construction: Option<String>,
    #[serde(default)]
    conclusions: Vec<String>,
    #[serde(default)]
    unchecked: bool,
}

#[derive(Debug)]
enum RowResult {
    Pass,
    Fail { step: String, witness: Option<Witness> },
    Error(String),
}

fn words(s: &str) -> (String, Vec<String>) {
    let mut it = s.split_whitespace().map(str::to_string);
    let head = it.next().unwrap_or_default();
    (head, it.collect())
}

fn resolve(base: &Path, p: &str) -> PathBuf {
    let p = Path::new(p);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

fn instance(base: &Path, row: &Row) -> Result<AlgebraDocument, CliError> {
    match (&row.instance, &row.recipe) {
        (Some(p), None) => Ok(load(&resolve(base, p))?.0),
        (None, Some(r)) => recipe_document(&r.parse::<InstanceRecipe>()?),
        _ => Err(CliError::Usage(format!("row {:?}: give exactly one of instance, recipe", row.name))),
    }
}

fn run_checks(doc: &AlgebraDocument, checks: &[String], kind: &str) -> Result<Option<RowResult>, CliError> {
    for c in checks {
        let (name, args) = words(c);
        let v = evaluate_check(doc, &name, &args)?;
        if let Some(w) = v.into_witness() {
            return Ok(Some(RowResult::Fail {
                step: format!("{kind} {c}"),
                witness: Some(w),
            }));
        }
    }
    Ok(None)
}

fn run_row(base: &Path, row: &Row) -> RowResult {
    let attempt = || -> Result<RowResult, CliError> {
        let doc = instance(base, row)?;
        if let Some(fail) = run_checks(&doc, &row.hypotheses, "hypothesis")? {
            return Ok(fail);
        }
        let output = match &row.construction {
            None => doc,
            Some(c) => {
                let (name, args) = words(c);
                let mode = if row.unchecked { Mode::Unchecked } else { Mode::Strict };
                let other = |p: &str| load(&resolve(base, p));
                match apply_construction(&doc, &name, &args, mode, &other) {
                    Ok((out, _)) => out,
                    Err(CliError::Kernel(Error::Precondition { hypothesis, witness, .. })) => {
                        return Ok(RowResult::Fail {
                            step: format!("construction {name}: precondition {hypothesis}"),
                            witness: witness.map(|w| *w),
                        })
                    }
                    Err(e) => return Err(e),
                }
            }
        };
        Ok(run_checks(&output, &row.conclusions, "conclusion")?.unwrap_or(RowResult::Pass))
    };
    attempt().unwrap_or_else(|e| RowResult::Error(e.to_string()))
}

/// Rows run in parallel; the report follows manifest order. Exit status 2 if
/// any row hit a usage or structural error, else 1 if any row failed.
pub fn run_suite(manifest: &Path, format: Format) -> Result<Outcome, CliError> {
    let bytes = read_file(manifest)?;
    let parsed: Manifest = serde_json::from_slice(&bytes).map_err(|e| CliError::Io {
        path: manifest.display().to_string(),
        message: e.to_string(),
    })?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let results: Vec<RowResult> = std::thread::scope(|s| {
        let handles: Vec<_> = parsed.rows.iter().map(|row| s.spawn(move || run_row(base, row))).collect();
        handles.into_iter().map(|h| h.join().expect("row thread panicked")).collect()
    });

    let (mut passed, mut failed, mut errors) = (0, 0, 0);
    let mut text = String::new();
    let mut rows: Vec<Value> = Vec::new();
    for (row, result) in parsed.rows.iter().zip(&results) {
        match result {
            RowResult::Pass => {
                passed += 1;
                text.push_str(&format!("PASS  {}\n", row.name));
                rows.push(json!({"name": row.name, "status": "pass"}));
            }
            RowResult::Fail { step, witness } => {
                failed += 1;
                let w = witness.as_ref().map(witness_text).unwrap_or_default();
                text.push_str(&format!("FAIL  {}: {step}: {w}\n", row.name));
                rows.push(json!({
                    "name": row.name,
                    "status": "fail",
                    "step": step,
                    "witness": witness.as_ref().map(witness_json),
                }));
            }
            RowResult::Error(msg) => {
                errors += 1;
                text.push_str(&format!("ERROR {}: {msg}\n", row.name));
                rows.push(json!({"name": row.name, "status": "error", "message": msg}));
            }
        }
    }
    text.push_str(&format!(
        "{} row(s): {passed} passed, {failed} failed, {errors} error(s)\n",
        results.len()
    ));
    let report = match format {
        Format::Text => text,
        Format::Machine => pretty(&json!({
            "command": "suite",
            "manifest": manifest.display().to_string(),
            "rows": rows,
            "passed": passed,
            "failed": failed,
            "errors": errors,
        })),
    };
    Ok(Outcome {
        status: if errors > 0 {
            Status::Error
        } else if failed > 0 {
            Status::Fail
        } else {
            Status::Pass
        },
        report,
    })
}
