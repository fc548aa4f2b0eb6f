//! Corpus verification: run named suites over a corpus and collect a
//! reproducible report.
//!
//! Graphs are checked in parallel, but results are merged by corpus index,
//! so the JSON report depends only on the [`CorpusSpec`] and the suite
//! list. Wall-clock times live in the separate `timing` field.
//!
//! ```
//! use pathdom::verify::{run_verification, CorpusSpec, Suite};
//!
//! let report = run_verification(&CorpusSpec::exhaustive(3), &[Suite::TheoremTri]).unwrap();
//! assert!(report.pass);
//! ```

mod corpus;
mod suites;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use corpus::{parse_corpus_text, CorpusEntry, CorpusMode, CorpusSpec, PRNG_NAME};
pub use suites::{run_suite, Counterexample, Subject, Suite, Tally, MAX_COUNTEREXAMPLES};

use crate::error::{Error, Result};

pub const SCHEMA: &str = "pathdom.verify/1";

/// Worker-count override for the verification pool.
pub const WORKERS_ENV: &str = "PATHDOM_WORKERS";

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub corpus: CorpusSpec,
    pub suites: Vec<Suite>,
    pub prng: &'static str,
    pub max_counterexamples_per_suite: usize,
}

/// How often a tag was seen and the first graph that carried it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TagCount {
    pub count: u64,
    pub first_index: usize,
    pub first_graph6: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    /// Corpus graphs the suite applied to.
    pub graphs: u64,
    /// Graphs outside the suite's hypotheses.
    pub skipped: u64,
    pub checks: u64,
    pub passed: u64,
    pub failed: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tags: BTreeMap<String, TagCount>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusError {
    pub index: usize,
    pub source: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub workers: usize,
    pub corpus_seconds: f64,
    pub suite_seconds: BTreeMap<String, f64>,
    pub total_seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub config: Config,
    pub corpus_size: usize,
    pub corpus_errors: Vec<CorpusError>,
    pub suites: Vec<SuiteSummary>,
    pub counterexamples: Vec<Counterexample>,
    /// No counterexamples in any suite.
    pub pass: bool,
    pub timing: Timing,
}

impl VerificationReport {
    pub fn summary(&self, suite: Suite) -> Option<&SuiteSummary> {
        self.suites.iter().find(|s| s.suite == suite)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without its `timing` field; byte-identical across runs
    /// of the same spec.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("timing");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    /// Human-readable table. JSON is the contract; this is cosmetic.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "corpus: {} graphs, {} load errors",
            self.corpus_size,
            self.corpus_errors.len()
        );
        let _ = writeln!(
            out,
            "{:<20} {:>8} {:>8} {:>10} {:>8}",
            "suite", "graphs", "skipped", "checks", "failed"
        );
        for s in &self.suites {
            let _ = writeln!(
                out,
                "{:<20} {:>8} {:>8} {:>10} {:>8}",
                s.suite.name(),
                s.graphs,
                s.skipped,
                s.checks,
                s.failed
            );
            for (tag, t) in &s.tags {
                let _ = writeln!(
                    out,
                    "    {tag:<24} {:>8}  first: {}",
                    t.count, t.first_graph6
                );
            }
        }
        for c in self.counterexamples.iter().take(10) {
            let _ = writeln!(
                out,
                "FAIL {} {} graph6={} pair={:?} k={:?} expected={} actual={}{}",
                c.suite,
                c.check,
                c.graph6,
                c.pair,
                c.k,
                c.expected,
                c.actual,
                c.clause
                    .as_deref()
                    .map(|x| format!(" clause={x}"))
                    .unwrap_or_default()
            );
        }
        if self.counterexamples.len() > 10 {
            let _ = writeln!(
                out,
                "... {} more counterexamples in the JSON report",
                self.counterexamples.len() - 10
            );
        }
        let _ = writeln!(out, "{}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

fn worker_count() -> Result<Option<usize>> {
    match std::env::var(WORKERS_ENV) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| {
                Error::Hypothesis(format!(
                    "{WORKERS_ENV} must be a positive integer, got '{s}'"
                ))
            }),
        Err(_) => Ok(None),
    }
}

/// Builds the corpus and evaluates every selected suite on every graph.
/// Graphs that fail to load are listed in `corpus_errors` and the run goes
/// on; only an invalid spec is an error.
pub fn run_verification(corpus: &CorpusSpec, suites: &[Suite]) -> Result<VerificationReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = worker_count()? {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Inconsistency(e.to_string()))?;
    pool.install(|| run_in_pool(corpus, suites))
}

fn run_in_pool(corpus: &CorpusSpec, suites: &[Suite]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();

    let entries = corpus.build()?;
    let corpus_errors: Vec<CorpusError> = entries
        .iter()
        .filter_map(|e| {
            e.graph.as_ref().err().map(|m| CorpusError {
                index: e.index,
                source: e.source.clone(),
                message: m.clone(),
            })
        })
        .collect();
    let subjects: Vec<Subject<'_>> = entries
        .iter()
        .filter_map(|e| e.graph.as_ref().ok().map(|g| Subject::new(e.index, g)))
        .collect();
    let mut timing = Timing {
        workers: rayon::current_num_threads(),
        corpus_seconds: start.elapsed().as_secs_f64(),
        ..Timing::default()
    };

    let mut summaries = Vec::new();
    let mut counterexamples = Vec::new();
    for &suite in &suites {
        let t0 = Instant::now();
        // collect() on an indexed parallel iterator keeps corpus order
        let tallies: Vec<Tally> = subjects.par_iter().map(|s| run_suite(suite, s)).collect();
        let mut summary = SuiteSummary {
            suite,
            graphs: 0,
            skipped: 0,
            checks: 0,
            passed: 0,
            failed: 0,
            tags: BTreeMap::new(),
        };
        let mut kept = 0;
        for (t, s) in tallies.into_iter().zip(&subjects) {
            if t.skipped {
                summary.skipped += 1;
                continue;
            }
            summary.graphs += 1;
            summary.checks += t.checks;
            summary.failed += t.failed;
            if let Some(tag) = t.tag {
                summary
                    .tags
                    .entry(tag)
                    .or_insert_with(|| TagCount {
                        count: 0,
                        first_index: s.index,
                        first_graph6: s.graph6().to_string(),
                    })
                    .count += 1;
            }
            for c in t.counterexamples {
                if kept < MAX_COUNTEREXAMPLES {
                    counterexamples.push(c);
                    kept += 1;
                }
            }
        }
        summary.passed = summary.checks - summary.failed;
        timing
            .suite_seconds
            .insert(suite.name().to_string(), t0.elapsed().as_secs_f64());
        summaries.push(summary);
    }
    timing.total_seconds = start.elapsed().as_secs_f64();

    let pass = summaries.iter().all(|s| s.failed == 0);
    Ok(VerificationReport {
        schema: SCHEMA,
        config: Config {
            corpus: corpus.clone(),
            suites,
            prng: PRNG_NAME,
            max_counterexamples_per_suite: MAX_COUNTEREXAMPLES,
        },
        corpus_size: entries.len(),
        corpus_errors,
        suites: summaries,
        counterexamples,
        pass,
        timing,
    })
}
