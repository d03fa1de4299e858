//! Regression runner over ideal files carrying `#! expect-*` metadata.

use std::collections::BTreeSet;
use std::path::Path;

use serde::Serialize;

use ginbetti::fixtures;
use ginbetti::tailing::{analyze, sectional_normality, tailing_from_gin};

use crate::commands::Output;
use crate::error::{exit, CliError};
use crate::pipeline::{self, GinSettings};

#[derive(Debug, Serialize)]
pub struct Check {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct Entry {
    pub name: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct CorpusReport {
    pub pass: bool,
    pub fixtures: Vec<Entry>,
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn gin_set(s: &str) -> BTreeSet<String> {
    s.split(',').map(|m| m.trim().to_string()).filter(|m| !m.is_empty()).collect()
}

fn check_one(name: &str, text: &str, seed: u64, trials: usize) -> Result<Vec<Check>, CliError> {
    let loaded = pipeline::load_text(text, None)?;
    let settings = GinSettings {
        seed,
        trials,
        saturate: false,
    };
    let (cert, _) = pipeline::gin(&loaded, settings)?;
    let profile = pipeline::profile(&cert);
    let mut checks = Vec::new();
    for (key, expected) in &loaded.file.metadata {
        let Some(what) = key.strip_prefix("expect-") else {
            continue;
        };
        let actual = match what {
            "gin" => {
                let got: Vec<String> = cert.gin.generators().iter().map(|m| m.to_string()).collect();
                let same = gin_set(expected) == got.iter().cloned().collect();
                checks.push(Check {
                    key: key.clone(),
                    expected: expected.clone(),
                    actual: got.join(", "),
                    pass: same,
                });
                continue;
            }
            "betti" => cert
                .gin
                .ek_betti()?
                .rows()
                .iter()
                .map(|r| join(r))
                .collect::<Vec<_>>()
                .join("/"),
            "reg" => profile_ref(&profile, name)?.reg.to_string(),
            "degree" => profile_ref(&profile, name)?.degree.to_string(),
            "nd1" => {
                let fails = profile_ref(&profile, name)?.nd1_failures();
                if fails.is_empty() {
                    "pass".to_string()
                } else {
                    format!("fail:{}", join(&fails))
                }
            }
            "b" => join(&tailing_from_gin(&cert.gin, profile_ref(&profile, name)?.e)?),
            "h" => join(&sectional_normality(&cert.gin, profile_ref(&profile, name)?.e)?),
            "watermark" => {
                let t = analyze(&cert.gin, profile_ref(&profile, name)?, true)?;
                if t.watermark.is_some() { "yes" } else { "no" }.to_string()
            }
            other => {
                return Err(CliError::Usage(format!("{name}: unknown expectation key expect-{other}")))
            }
        };
        checks.push(Check {
            key: key.clone(),
            pass: &actual == expected,
            expected: expected.clone(),
            actual,
        });
    }
    Ok(checks)
}

fn profile_ref<'a>(
    p: &'a Result<ginbetti::invariants::SchemeProfile, CliError>,
    name: &str,
) -> Result<&'a ginbetti::invariants::SchemeProfile, CliError> {
    p.as_ref()
        .map_err(|e| CliError::Drift(format!("{name}: no scheme profile ({e})")))
}

fn sources(dir: Option<&Path>) -> Result<Vec<(String, String)>, CliError> {
    let Some(dir) = dir else {
        return fixtures::corpus()
            .iter()
            .map(|f| Ok((f.name.to_string(), f.render()?)))
            .collect();
    };
    let io = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.extension().is_some_and(|e| e == "ideal") {
            let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            out.push((name, text));
        }
    }
    out.sort();
    if out.is_empty() {
        return Err(CliError::Usage(format!("no .ideal files in {}", dir.display())));
    }
    Ok(out)
}

pub fn run(dir: Option<&Path>, seed: u64, trials: usize) -> Result<Output, CliError> {
    let inputs = sources(dir)?;
    let entries: Vec<Entry> = std::thread::scope(|scope| {
        let handles: Vec<_> = inputs
            .iter()
            .map(|(name, text)| {
                scope.spawn(move || match check_one(name, text, seed, trials) {
                    Ok(checks) => Entry {
                        name: name.clone(),
                        pass: checks.iter().all(|c| c.pass),
                        checks,
                        error: None,
                    },
                    Err(e) => Entry {
                        name: name.clone(),
                        pass: false,
                        checks: Vec::new(),
                        error: Some(e.to_string()),
                    },
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("fixture thread panicked"))
            .collect()
    });
    let report = CorpusReport {
        pass: entries.iter().all(|e| e.pass),
        fixtures: entries,
    };
    let mut json = serde_json::to_string_pretty(&report).expect("corpus report serializes");
    json.push('\n');
    Ok(Output {
        json,
        table: render(&report),
        code: if report.pass { exit::OK } else { exit::INTERNAL },
    })
}

fn render(report: &CorpusReport) -> String {
    let mut out = String::new();
    let width = report.fixtures.iter().map(|e| e.name.len()).max().unwrap_or(0);
    for e in &report.fixtures {
        let verdict = if e.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict}  {:<width$}  {} checks\n", e.name, e.checks.len()));
        for c in e.checks.iter().filter(|c| !c.pass) {
            out.push_str(&format!(
                "      {}: expected {}, got {}\n",
                c.key, c.expected, c.actual
            ));
        }
        if let Some(err) = &e.error {
            out.push_str(&format!("      error: {err}\n"));
        }
    }
    let failed = report.fixtures.iter().filter(|e| !e.pass).count();
    out.push_str(&format!(
        "{} fixtures, {} failed\n",
        report.fixtures.len(),
        failed
    ));
    out
}
