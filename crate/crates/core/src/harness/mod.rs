//! Randomized property checks over generated instances, with replayable
//! failure records.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::boxmod::ModuleError;
use crate::format::FormatError;
use crate::homological::HomologicalError;
use crate::ideal::IdealError;
use crate::lattice::LatticeError;
use crate::linalg::{Field, LinalgError};

pub mod checks;
pub mod fixtures;
pub mod instance;

pub use checks::{Check, Verdict};
pub use fixtures::{reference_examples, seq_cm_fixtures, FixtureCase, FixtureReport};
pub use instance::{random_instance, Instance, InstanceKind, InstanceRange, InstanceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Homological(#[from] HomologicalError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("instance cap exceeded: {0}")]
    Cap(String),
    #[error("check does not apply: {0}")]
    WrongKind(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown field `{0}`, expected `q` or `fp:<prime>`")]
    UnknownField(String),
    #[error("generator is not deterministic for seed {0}")]
    Nondeterministic(u64),
    #[error("i/o: {0}")]
    Io(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<std::io::Error> for HarnessError {
    fn from(e: std::io::Error) -> Self {
        HarnessError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for HarnessError {
    fn from(e: serde_json::Error) -> Self {
        HarnessError::Json(e.to_string())
    }
}

/// `q` for the rationals, `fp:<p>` for a prime field.
pub fn parse_field(s: &str) -> Result<Field, HarnessError> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rationals);
    }
    s.strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .and_then(|p| Field::prime(p).ok())
        .ok_or_else(|| HarnessError::UnknownField(s.to_string()))
}

pub fn field_name(field: Field) -> String {
    match field.characteristic() {
        0 => "q".to_string(),
        p => format!("fp:{p}"),
    }
}

/// One line of the per-instance record stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    pub seed: u64,
    pub kind: InstanceKind,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Everything needed to rerun a single failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Repro {
    pub check: String,
    pub seed: u64,
    pub kind: InstanceKind,
    pub field: String,
    pub instance: String,
    pub message: String,
}

impl Repro {
    pub fn file_name(&self) -> String {
        format!("{}-{}.json", self.check, self.seed)
    }

    pub fn write(&self, dir: &Path) -> Result<PathBuf, HarnessError> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(self.file_name());
        std::fs::write(&path, serde_json::to_string_pretty(self)?)?;
        Ok(path)
    }

    pub fn read(path: &Path) -> Result<Repro, HarnessError> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instances: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failures: Vec<Repro>,
    #[serde(skip)]
    pub records: Vec<Record>,
    pub elapsed_ms: u128,
}

impl CheckReport {
    pub fn failed(&self) -> usize {
        self.failures.len()
    }

    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{:<22} {:>5} instances  {:>5} pass  {:>5} skip  {:>3} fail  {:>7} ms",
            self.check,
            self.instances,
            self.passed,
            self.skipped,
            self.failed(),
            self.elapsed_ms
        )
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Instances per check; `None` uses each check's default.
    pub count: Option<usize>,
    pub seed: u64,
    pub field: Field,
    /// Overrides each check's default instance range.
    pub range: Option<InstanceRange>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            count: None,
            seed: 0,
            field: Field::Rationals,
            range: None,
        }
    }
}

fn run_guarded(check: Check, instance: &Instance, field: Field) -> Verdict {
    match catch_unwind(AssertUnwindSafe(|| check.run(instance, field))) {
        Ok(Ok(v)) => v,
        Ok(Err(HarnessError::WrongKind(msg))) => Verdict::Skip(msg),
        Ok(Err(e)) => Verdict::Fail(format!("error: {e}")),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".to_string());
            Verdict::Fail(format!("panic: {msg}"))
        }
    }
}

fn generate(range: &InstanceRange, seed: u64) -> Result<Instance, HarnessError> {
    let spec = range.spec_for(seed);
    let first = random_instance(&spec)?;
    if random_instance(&spec)?.text() != first.text() {
        return Err(HarnessError::Nondeterministic(seed));
    }
    Ok(first)
}

fn assemble(check: Check, field: Field, results: Vec<(Instance, Verdict)>, start: Instant) -> CheckReport {
    let mut report = CheckReport {
        check: check.name().to_string(),
        instances: results.len(),
        passed: 0,
        skipped: 0,
        failures: Vec::new(),
        records: Vec::with_capacity(results.len()),
        elapsed_ms: 0,
    };
    for (instance, verdict) in results {
        match &verdict {
            Verdict::Pass => report.passed += 1,
            Verdict::Skip(_) => report.skipped += 1,
            Verdict::Fail(msg) => report.failures.push(Repro {
                check: check.name().to_string(),
                seed: instance.seed,
                kind: instance.kind,
                field: field_name(field),
                instance: instance.text(),
                message: msg.clone(),
            }),
        }
        report.records.push(Record {
            check: check.name().to_string(),
            seed: instance.seed,
            kind: instance.kind,
            verdict: verdict.label().to_string(),
            detail: verdict.detail().map(str::to_string),
        });
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

/// Runs `check` on seeds `seed, seed+1, ...`; records come back in seed order.
pub fn run_check(check: Check, options: &SuiteOptions) -> Result<CheckReport, HarnessError> {
    let start = Instant::now();
    let range = options.range.clone().unwrap_or_else(|| check.default_range());
    let count = options.count.unwrap_or_else(|| check.default_count());
    let instances = (0..count as u64)
        .map(|k| generate(&range, options.seed.wrapping_add(k)))
        .collect::<Result<Vec<_>, _>>()?;
    let results: Vec<(Instance, Verdict)> = instances
        .into_par_iter()
        .map(|inst| {
            let v = run_guarded(check, &inst, options.field);
            (inst, v)
        })
        .collect();
    Ok(assemble(check, options.field, results, start))
}

pub fn run_suite(checks: &[Check], options: &SuiteOptions) -> Result<Vec<CheckReport>, HarnessError> {
    checks.iter().map(|&c| run_check(c, options)).collect()
}

/// Reruns a stored failure on its recorded instance text.
pub fn replay(repro: &Repro) -> Result<CheckReport, HarnessError> {
    let start = Instant::now();
    let check = Check::from_name(&repro.check).ok_or_else(|| HarnessError::UnknownCheck(repro.check.clone()))?;
    let field = parse_field(&repro.field)?;
    let instance = Instance::from_text(repro.seed, repro.kind, &repro.instance)?;
    let verdict = run_guarded(check, &instance, field);
    Ok(assemble(check, field, vec![(instance, verdict)], start))
}
