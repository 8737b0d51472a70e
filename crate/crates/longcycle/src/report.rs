//! Report types and their canonical serializations. JSON output is
//! key-sorted and stable; CSV flattens one row per longest-cycle vertex
//! set.

use crate::corpus::OriginInfo;
use crate::verify::{BoundEvaluation, CheckResult, CheckStatus};
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// Per-graph verification record.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub schema_version: u32,
    /// graph6 encoding of the graph; doubles as its id.
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    pub circumference: usize,
    /// True when the circumference is below 3; bound outcomes are then
    /// recorded but never counted as violations.
    pub degenerate: bool,
    pub cycles: Vec<BoundEvaluation>,
    pub checks: CheckCounts,
    /// Per-check-name outcome counts; lets a sweep prove which checks
    /// actually ran.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub check_names: BTreeMap<String, CheckCounts>,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capacity_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin: Option<OriginInfo>,
}

/// Outcome tally. Vacuous passes (empty quantifier domain) are counted
/// apart from substantive passes so coverage claims stay checkable.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct CheckCounts {
    pub passed: usize,
    pub vacuous: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

impl CheckCounts {
    pub fn absorb(&mut self, result: &CheckResult) {
        match result.status {
            CheckStatus::Passed if result.vacuous => self.vacuous += 1,
            CheckStatus::Passed => self.passed += 1,
            CheckStatus::Failed => self.failed += 1,
            CheckStatus::NotApplicable => self.not_applicable += 1,
        }
    }

    pub fn add(&mut self, other: &CheckCounts) {
        self.passed += other.passed;
        self.vacuous += other.vacuous;
        self.failed += other.failed;
        self.not_applicable += other.not_applicable;
    }
}

/// A failed check on certified hypotheses, with everything needed to
/// replay it.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub check: String,
    pub graph6: String,
    pub witness: Value,
    /// Set when the failure was re-verified through the brute-force
    /// oracle; `None` when the graph exceeded the oracle capacity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_confirmed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin: Option<OriginInfo>,
}

/// Aggregate accounting for one run. Processed, skipped and errored always
/// partition the corpus.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub corpus_size: usize,
    pub processed: usize,
    pub skipped_degenerate: usize,
    pub skipped_filtered: usize,
    pub capacity_errors: usize,
    pub violations: usize,
    pub sharp1_count: usize,
    pub sharp2_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_slack1: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_slack2: Option<i64>,
    pub checks: CheckCounts,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub check_names: BTreeMap<String, CheckCounts>,
}

impl Summary {
    pub fn absorb(&mut self, report: &BoundReport) {
        if report.capacity_error.is_some() {
            self.capacity_errors += 1;
        } else if report.degenerate {
            self.skipped_degenerate += 1;
        } else {
            self.processed += 1;
        }
        self.violations += report.violations.len();
        self.checks.add(&report.checks);
        for (name, counts) in &report.check_names {
            self.check_names.entry(name.clone()).or_default().add(counts);
        }
        if !report.degenerate && report.capacity_error.is_none() {
            for c in &report.cycles {
                if c.sharp1 {
                    self.sharp1_count += 1;
                }
                if c.sharp2 {
                    self.sharp2_count += 1;
                }
                self.max_slack1 = Some(self.max_slack1.map_or(c.slack1, |m| m.max(c.slack1)));
                self.max_slack2 = Some(self.max_slack2.map_or(c.slack2, |m| m.max(c.slack2)));
            }
        }
    }
}

/// Canonical JSON: object keys sorted, no trailing whitespace. serde_json
/// maps are ordered, so a value round trip is enough.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string(&v).expect("json value prints")
}

pub const CSV_HEADER: &str = "graph_id,n,m,delta,circumference,degenerate,vertex_set,p_bar,c_bar,bound1,bound2,slack1,slack2,sharp1,sharp2";

/// Flat rows, one per cycle vertex set; vertex sets are space-separated so
/// the row stays comma-safe.
pub fn csv_rows(report: &BoundReport) -> Vec<String> {
    let delta = report
        .delta
        .map_or_else(|| "".to_string(), |d| d.to_string());
    report
        .cycles
        .iter()
        .map(|c| {
            let set = c
                .vertex_set
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                report.graph_id,
                report.n,
                report.m,
                delta,
                report.circumference,
                report.degenerate,
                set,
                c.p_bar,
                c.c_bar,
                c.bound1,
                c.bound2,
                c.slack1,
                c.slack2,
                c.sharp1,
                c.sharp2
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_eval() -> BoundEvaluation {
        BoundEvaluation {
            vertex_set: vec![0, 1, 2],
            p_bar: 1,
            c_bar: 2,
            bound1: 3,
            bound2: 3,
            slack1: 0,
            slack2: 0,
            sharp1: true,
            sharp2: true,
            passed1: true,
            passed2: true,
        }
    }

    fn sample_report() -> BoundReport {
        BoundReport {
            schema_version: SCHEMA_VERSION,
            graph_id: "D{c".into(),
            n: 5,
            m: 6,
            delta: Some(2),
            circumference: 3,
            degenerate: false,
            cycles: vec![sample_eval()],
            checks: CheckCounts::default(),
            check_names: BTreeMap::new(),
            violations: Vec::new(),
            capacity_error: None,
            origin: None,
        }
    }

    #[test]
    fn canonical_json_sorts_keys() {
        let json = canonical_json(&sample_report());
        let c = json.find("\"circumference\"").unwrap();
        let g = json.find("\"graph_id\"").unwrap();
        let v = json.find("\"violations\"").unwrap();
        assert!(c < g && g < v);
    }

    #[test]
    fn csv_row_shape() {
        let rows = csv_rows(&sample_report());
        assert_eq!(rows.len(), 1);
        assert_eq!(
            rows[0],
            "D{c,5,6,2,3,false,0 1 2,1,2,3,3,0,0,true,true"
        );
        assert_eq!(
            CSV_HEADER.split(',').count(),
            rows[0].split(',').count()
        );
    }

    #[test]
    fn summary_partitions_the_corpus() {
        let mut s = Summary {
            corpus_size: 3,
            ..Summary::default()
        };
        s.absorb(&sample_report());
        let mut degen = sample_report();
        degen.degenerate = true;
        s.absorb(&degen);
        let mut err = sample_report();
        err.capacity_error = Some("too big".into());
        s.absorb(&err);
        assert_eq!(
            (s.processed, s.skipped_degenerate, s.capacity_errors),
            (1, 1, 1)
        );
        assert_eq!(s.sharp1_count, 1);
    }
}
