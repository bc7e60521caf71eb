//! Verification suites over enumerated and sampled instances.
//!
//! Instances run on a worker pool, each single-threaded; results are sorted
//! by instance key before a report is assembled, so output does not depend
//! on scheduling. Failing and flagged instances keep the certificates of
//! every value they were judged on.

mod suites;

pub use suites::{
    crosscheck_extremal_gamma0, crosscheck_extremal_gamma1, verify_appendix, verify_bounds,
    verify_hereditary, verify_nonextremal,
};

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::HypergraphSummary;
use crate::invariants::{Certificate, SolverConfig};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HarnessConfig {
    /// Worker threads; 0 picks the number of CPUs.
    pub jobs: usize,
    pub solver: SolverConfig,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    /// A soft mismatch, reported but not counted as a failure.
    Flagged,
    Fail,
    /// A solver ran out of budget.
    Timeout,
}

impl Outcome {
    pub fn is_hard_failure(self) -> bool {
        matches!(self, Outcome::Fail | Outcome::Timeout)
    }

    fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Flagged => "flagged",
            Outcome::Fail => "fail",
            Outcome::Timeout => "timeout",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCertificate {
    /// What the certificate is about, e.g. `"H"` or `"G"`.
    pub target: String,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub key: String,
    pub outcome: Outcome,
    pub expected: String,
    pub got: String,
    pub violations: Vec<String>,
    /// graph6 of the support graph.
    pub graph: Option<String>,
    pub hypergraph: Option<HypergraphSummary>,
    pub certificates: Vec<NamedCertificate>,
    /// Extra structured evidence (family verdicts and the like).
    pub detail: Option<serde_json::Value>,
}

impl InstanceResult {
    pub(crate) fn new(key: impl Into<String>) -> Self {
        InstanceResult {
            key: key.into(),
            outcome: Outcome::Pass,
            expected: String::new(),
            got: String::new(),
            violations: Vec::new(),
            graph: None,
            hypergraph: None,
            certificates: Vec::new(),
            detail: None,
        }
    }

    /// Records a violation unless `ok`.
    pub(crate) fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.violations.push(what());
            self.outcome = Outcome::Fail;
        }
    }

    pub(crate) fn timeout(key: impl Into<String>, e: &Error) -> Self {
        let mut r = InstanceResult::new(key);
        r.outcome = Outcome::Timeout;
        r.got = e.to_string();
        r
    }

    /// Passing instances drop their bulky evidence.
    fn trimmed(mut self) -> Self {
        if self.outcome == Outcome::Pass {
            self.hypergraph = None;
            self.certificates.clear();
            self.detail = None;
        }
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::UnknownName(format!("format '{other}'"))),
        }
    }
}

/// `pass_count` includes flagged instances, so
/// `pass_count + failures.len() == instance_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: Option<u64>,
    pub instance_count: usize,
    pub pass_count: usize,
    pub wall_time_ms: Option<u64>,
    pub results: Vec<InstanceResult>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: &'a str,
    seed: Option<u64>,
    instance_count: usize,
    pass_count: usize,
    flagged_count: usize,
    failure_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u64>,
    failures: Vec<&'a InstanceResult>,
    flagged: Vec<&'a InstanceResult>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.results.iter().filter(|r| r.outcome.is_hard_failure())
    }

    pub fn flagged(&self) -> impl Iterator<Item = &InstanceResult> {
        self.results
            .iter()
            .filter(|r| r.outcome == Outcome::Flagged)
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    pub fn flagged_count(&self) -> usize {
        self.flagged().count()
    }

    pub fn has_timeouts(&self) -> bool {
        self.results.iter().any(|r| r.outcome == Outcome::Timeout)
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }

    pub fn without_timing(mut self) -> Self {
        self.wall_time_ms = None;
        self
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.to_text(),
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Json => self.to_json(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        let _ = writeln!(
            out,
            "instances: {}  passed: {}  flagged: {}  failed: {}",
            self.instance_count,
            self.pass_count,
            self.flagged_count(),
            self.failure_count()
        );
        if let Some(ms) = self.wall_time_ms {
            let _ = writeln!(out, "wall time: {ms} ms");
        }
        for r in self.results.iter().filter(|r| r.outcome != Outcome::Pass) {
            let _ = writeln!(out, "{} {}", r.outcome.as_str().to_uppercase(), r.key);
            let _ = writeln!(out, "  expected: {}", r.expected);
            let _ = writeln!(out, "  got:      {}", r.got);
            for v in &r.violations {
                let _ = writeln!(out, "  violated: {v}");
            }
            if let Some(g) = &r.graph {
                let _ = writeln!(out, "  graph6:   {g}");
            }
            for c in &r.certificates {
                let _ = writeln!(
                    out,
                    "  {} of {}: {:?}",
                    c.certificate.summary(),
                    c.target,
                    c.certificate.witness
                );
            }
        }
        out
    }

    /// One row per instance.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,key,outcome,expected,got,violations\n");
        for r in &self.results {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                csv_field(&self.suite),
                csv_field(&r.key),
                r.outcome.as_str(),
                csv_field(&r.expected),
                csv_field(&r.got),
                csv_field(&r.violations.join("; "))
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        let view = JsonReport {
            suite: &self.suite,
            seed: self.seed,
            instance_count: self.instance_count,
            pass_count: self.pass_count,
            flagged_count: self.flagged_count(),
            failure_count: self.failure_count(),
            wall_time_ms: self.wall_time_ms,
            failures: self.failures().collect(),
            flagged: self.flagged().collect(),
        };
        serde_json::to_string_pretty(&view).expect("reports serialize") + "\n"
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Runs `work` over `items` on a pool of `cfg.jobs` threads and assembles
/// the sorted report.
pub(crate) fn run_suite<T, F>(
    suite: &str,
    seed: Option<u64>,
    cfg: &HarnessConfig,
    items: Vec<T>,
    work: F,
) -> Result<VerificationReport>
where
    T: Send,
    F: Fn(T) -> Vec<InstanceResult> + Sync,
{
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Io(format!("worker pool: {e}")))?;
    let mut results: Vec<InstanceResult> = pool.install(|| {
        items
            .into_par_iter()
            .flat_map_iter(|item| work(item).into_iter().map(InstanceResult::trimmed))
            .collect()
    });
    results.sort_by(|a, b| a.key.cmp(&b.key));
    let instance_count = results.len();
    let pass_count = results
        .iter()
        .filter(|r| !r.outcome.is_hard_failure())
        .count();
    Ok(VerificationReport {
        suite: suite.to_string(),
        seed,
        instance_count,
        pass_count,
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
        results,
    })
}

/// Suite names accepted by [`run_named`].
pub const SUITES: [&str; 6] = [
    "hereditary",
    "bounds",
    "extremal-gamma1",
    "extremal-gamma0",
    "nonextremal",
    "appendix",
];

/// Default scale of each suite.
pub fn default_max_n(suite: &str) -> Option<usize> {
    Some(match suite {
        "hereditary" | "bounds" => 6,
        "extremal-gamma1" => 7,
        "extremal-gamma0" => 8,
        "nonextremal" => 5,
        "appendix" => 5,
        _ => return None,
    })
}

pub const DEFAULT_SAMPLES: usize = 3;

pub fn run_named(
    suite: &str,
    max_n: Option<usize>,
    samples: usize,
    seed: u64,
    cfg: &HarnessConfig,
) -> Result<VerificationReport> {
    let n = match max_n {
        Some(n) => n,
        None => {
            default_max_n(suite).ok_or_else(|| Error::UnknownName(format!("suite '{suite}'")))?
        }
    };
    match suite {
        "hereditary" => verify_hereditary(n, samples, seed, cfg),
        "bounds" => verify_bounds(n, samples, seed, cfg),
        "extremal-gamma1" => crosscheck_extremal_gamma1(n, cfg),
        "extremal-gamma0" => {
            crosscheck_extremal_gamma0(n, &crate::families::NbList::shipped(), cfg)
        }
        "nonextremal" => verify_nonextremal(n, cfg),
        "appendix" => verify_appendix(n, cfg),
        other => Err(Error::UnknownName(format!("suite '{other}'"))),
    }
}
