//! Verifies many instance files and aggregates the verdicts.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::family::Route;
use crate::io::{read_instance, report_to_json};
use crate::verify::{verify, Report};

#[derive(Clone, Debug)]
pub struct BatchEntry {
    pub source: PathBuf,
    pub outcome: std::result::Result<Report, String>,
}

#[derive(Debug, Default)]
pub struct BatchReport {
    pub entries: Vec<BatchEntry>,
}

/// Expands directories to the `*.json` files inside them, sorted by name.
pub fn expand_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(input)
                .map_err(|source| Error::Io {
                    path: input.clone(),
                    source,
                })?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(input.clone());
        }
    }
    Ok(out)
}

fn run_one(path: &Path, route: Route) -> BatchEntry {
    let outcome = read_instance(path)
        .and_then(|inst| verify(&inst, route))
        .map_err(|e| e.to_string());
    BatchEntry {
        source: path.to_path_buf(),
        outcome,
    }
}

/// Verifies every file on `jobs` threads. Results keep input order, so the
/// report does not depend on the thread count.
pub fn run_batch(files: &[PathBuf], jobs: usize, route: Route) -> Result<BatchReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    let entries = pool.install(|| files.par_iter().map(|p| run_one(p, route)).collect());
    Ok(BatchReport { entries })
}

impl BatchReport {
    pub fn errors(&self) -> usize {
        self.entries.iter().filter(|e| e.outcome.is_err()).count()
    }

    pub fn falsifications(&self) -> usize {
        self.entries
            .iter()
            .filter_map(|e| e.outcome.as_ref().ok())
            .filter(|r| !r.falsifications().is_empty())
            .count()
    }

    /// 2 on any falsification, 1 if some input failed to load or verify,
    /// 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.falsifications() > 0 {
            2
        } else if self.errors() > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        let mut applicable: BTreeMap<&str, usize> = BTreeMap::new();
        let mut failed: BTreeMap<&str, usize> = BTreeMap::new();
        let mut general = 0;
        let reports: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let source = e.source.display().to_string();
                match &e.outcome {
                    Ok(r) => {
                        if r.position.z_in_general_position {
                            general += 1;
                        }
                        for (name, c) in r.verdicts.all() {
                            if c.applicable {
                                *applicable.entry(name).or_default() += 1;
                            }
                            if c.failed() {
                                *failed.entry(name).or_default() += 1;
                            }
                        }
                        json!({
                            "source": source,
                            "falsifications": r.falsifications(),
                            "report": report_to_json(r),
                        })
                    }
                    Err(msg) => json!({ "source": source, "error": msg }),
                }
            })
            .collect();
        json!({
            "summary": {
                "instances": self.entries.len(),
                "verified": self.entries.len() - self.errors(),
                "errors": self.errors(),
                "z_general_position": general,
                "falsifications": self.falsifications(),
                "applicable": applicable,
                "failed": failed,
            },
            "reports": reports,
        })
    }
}
