//! Run orchestration: fans a corpus out over a worker pool, runs the
//! requested check level per graph, and streams reports in deterministic
//! corpus order. Violations carry full witnesses plus generator state, and
//! bound failures are re-verified through the brute-force oracle before
//! being persisted.

use crate::corpus::{CorpusError, CorpusSpec, LoadedCorpus, OriginInfo};
use crate::graph::{to_graph6, CycleSeq, Graph, PathSeq, VertexSet};
use crate::report::{BoundReport, CheckCounts, Summary, Violation, SCHEMA_VERSION};
use crate::solve::{self, SolveError, SolveLimits};
use crate::spreading::{
    self, find_minimal_spreadings, saturate, Host, MinimalityOrder, SpreadError, SpreadLimits,
};
use crate::verify::{self, CheckContext, CheckResult, ClaimMode, ContactConfig, VerifyError};
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("worker pool: {0}")]
    ThreadPool(String),
    #[error("hunting needs a randomized corpus (gnp or regular); use verify for {0}")]
    HuntNeedsRandomCorpus(&'static str),
}

/// How deep the per-graph checks go. Levels are cumulative; `All` is an
/// alias for the deepest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Theorems,
    Lemmas,
    Claims,
    All,
}

impl Level {
    pub fn runs_lemmas(self) -> bool {
        self >= Level::Lemmas
    }

    pub fn runs_claims(self) -> bool {
        self >= Level::Claims
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub level: Level,
    pub limits: SolveLimits,
    pub spread: SpreadLimits,
    pub jobs: usize,
    pub stop_on_violation: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            level: Level::Theorems,
            limits: SolveLimits::default(),
            spread: SpreadLimits::default(),
            jobs: 1,
            stop_on_violation: false,
        }
    }
}

const CHUNK: usize = 4096;

/// Runs the corpus and feeds every report to `sink` in corpus order.
/// Returns the aggregate summary; `processed + skipped + errored` always
/// equals the corpus size.
pub fn run_verify(
    spec: &CorpusSpec,
    cfg: &RunConfig,
    sink: &mut dyn FnMut(&BoundReport),
) -> Result<Summary, RunError> {
    let corpus = spec.load()?;
    let total = corpus.len();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| RunError::ThreadPool(e.to_string()))?;
    let mut summary = Summary {
        corpus_size: total,
        ..Summary::default()
    };
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK).min(total);
        let reports: Vec<Option<BoundReport>> = pool.install(|| {
            (start..end)
                .into_par_iter()
                .map(|i| process_index(&corpus, i, cfg))
                .collect()
        });
        for report in reports.into_iter() {
            match report {
                Some(report) => {
                    summary.absorb(&report);
                    sink(&report);
                }
                None => summary.skipped_filtered += 1,
            }
        }
        if cfg.stop_on_violation && summary.violations > 0 {
            break;
        }
        start = end;
    }
    Ok(summary)
}

#[derive(Debug)]
pub struct HuntOutcome {
    pub summary: Summary,
    pub violations: Vec<Violation>,
}

/// Randomized counterexample hunt: like `run_verify` but restricted to
/// seeded random corpora, collecting every violation for persistence.
pub fn hunt(
    spec: &CorpusSpec,
    cfg: &RunConfig,
    sink: &mut dyn FnMut(&BoundReport),
) -> Result<HuntOutcome, RunError> {
    if !spec.is_random() {
        return Err(RunError::HuntNeedsRandomCorpus(spec.generator_name()));
    }
    let mut violations = Vec::new();
    let summary = run_verify(spec, cfg, &mut |report| {
        violations.extend(report.violations.iter().cloned());
        sink(report);
    })?;
    Ok(HuntOutcome {
        summary,
        violations,
    })
}

fn process_index(corpus: &LoadedCorpus, index: usize, cfg: &RunConfig) -> Option<BoundReport> {
    let (graph, origin) = match corpus.graph_at(index) {
        Ok(pair) => pair,
        Err(e) => {
            // generation failures are per-graph capacity-style errors
            return Some(BoundReport {
                schema_version: SCHEMA_VERSION,
                graph_id: format!("<generation failed at index {index}>"),
                n: 0,
                m: 0,
                delta: None,
                circumference: 0,
                degenerate: true,
                cycles: Vec::new(),
                checks: CheckCounts::default(),
                check_names: BTreeMap::new(),
                violations: Vec::new(),
                capacity_error: Some(e.to_string()),
                origin: None,
            });
        }
    };
    if corpus.connected_only && !graph.is_connected() {
        return None;
    }
    Some(process_graph(&graph, Some(origin), cfg))
}

/// Builds the full report for one graph at the configured level.
pub fn process_graph(g: &Graph, origin: Option<OriginInfo>, cfg: &RunConfig) -> BoundReport {
    let graph_id = to_graph6(g);
    let mut report = BoundReport {
        schema_version: SCHEMA_VERSION,
        graph_id: graph_id.clone(),
        n: g.n(),
        m: g.edge_count(),
        delta: g.min_degree().ok(),
        circumference: 0,
        degenerate: true,
        cycles: Vec::new(),
        checks: CheckCounts::default(),
        check_names: BTreeMap::new(),
        violations: Vec::new(),
        capacity_error: None,
        origin,
    };
    if g.n() == 0 {
        return report;
    }
    let delta = report.delta.expect("nonempty graph");
    let circ = match solve::longest_cycle_length(g, &cfg.limits) {
        Ok(c) => c,
        Err(e) => {
            report.capacity_error = Some(e.to_string());
            return report;
        }
    };
    report.circumference = circ;
    report.degenerate = circ < 3;
    let (sets, witnesses) = if report.degenerate {
        (verify::degenerate_cycle_sets(g, circ), None)
    } else {
        match solve::longest_cycle_sets_with_witnesses(g, &cfg.limits) {
            Ok(sw) => {
                let (sets, wits): (Vec<_>, Vec<_>) = sw.into_iter().unzip();
                (sets, Some(wits))
            }
            Err(e) => {
                report.capacity_error = Some(e.to_string());
                return report;
            }
        }
    };
    for set in &sets {
        let eval = match verify::evaluate_cycle_set(g, set, delta, &cfg.limits) {
            Ok(eval) => eval,
            Err(e) => {
                report.capacity_error = Some(e.to_string());
                return report;
            }
        };
        if !report.degenerate {
            for (check, passed) in [("bound1", eval.passed1), ("bound2", eval.passed2)] {
                let named = report.check_names.entry(check.into()).or_default();
                if passed {
                    report.checks.passed += 1;
                    named.passed += 1;
                } else {
                    report.checks.failed += 1;
                    named.failed += 1;
                    let oracle_confirmed = recheck_bound_with_oracle(g, set, delta, check, cfg);
                    report.violations.push(Violation {
                        check: check.into(),
                        graph6: graph_id.clone(),
                        witness: serde_json::to_value(&eval).expect("evaluation serializes"),
                        oracle_confirmed,
                        origin: report.origin.clone(),
                    });
                }
            }
        }
        report.cycles.push(eval);
    }
    if cfg.level.runs_lemmas() {
        let witness_for = |i: usize| -> CycleSeq {
            match &witnesses {
                Some(w) => w[i].clone(),
                // degenerate sets are single vertices or adjacent pairs
                None => CycleSeq::new(g, sets[i].to_vec()).expect("degenerate set is a cycle"),
            }
        };
        let mut sweep = LemmaSweep {
            g,
            graph_id: &graph_id,
            cfg,
            checks: CheckCounts::default(),
            names: BTreeMap::new(),
            violations: Vec::new(),
            origin: report.origin.clone(),
        };
        let outcome = (0..sets.len())
            .try_for_each(|i| {
                let cycle = witness_for(i);
                sweep.hosts_for_removed(&sets[i], Some(&cycle))
            })
            .and_then(|()| sweep.hosts_for_removed(&VertexSet::empty(g.n()), None));
        report.checks.add(&sweep.checks);
        for (name, counts) in sweep.names {
            report.check_names.entry(name).or_default().add(&counts);
        }
        report.violations.extend(sweep.violations);
        if let Err(e) = outcome {
            report.capacity_error = Some(e.to_string());
        }
    }
    report
}

/// Re-verifies a failed bound through the oracle route. `None` when the
/// graph exceeds oracle capacity, otherwise whether the failure persists.
fn recheck_bound_with_oracle(
    g: &Graph,
    set: &VertexSet,
    delta: usize,
    check: &str,
    cfg: &RunConfig,
) -> Option<bool> {
    if g.n() > cfg.limits.max_oracle_n {
        return None;
    }
    let circ = solve::oracle_longest_cycle(g, &cfg.limits).ok()?;
    if circ != set.len() {
        // the set is not a longest cycle by the oracle's account: solver bug
        return Some(false);
    }
    let remainder = g.remove_vertices(set).ok()?;
    let d = delta as i64;
    let holds = if check == "bound1" {
        let p = solve::oracle_longest_path(&remainder.graph, &cfg.limits).ok()?;
        (set.len() as i64) >= (p + 2) * (d - p)
    } else {
        let c = if remainder.graph.n() == 0 {
            0i64
        } else {
            solve::oracle_longest_cycle(&remainder.graph, &cfg.limits).ok()? as i64
        };
        (set.len() as i64) >= (c + 1) * (d - c + 1)
    };
    Some(!holds)
}

/// One graph's lemma/claim sweep: for each removed set H (every
/// longest-cycle vertex set, then the empty set), take the longest paths
/// and cycles of G - H as hosts and check every minimal spreading.
struct LemmaSweep<'a> {
    g: &'a Graph,
    graph_id: &'a str,
    cfg: &'a RunConfig,
    checks: CheckCounts,
    names: BTreeMap<String, CheckCounts>,
    violations: Vec<Violation>,
    origin: Option<OriginInfo>,
}

#[derive(Debug, Error)]
enum SweepError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Spread(#[from] SpreadError),
}

impl<'a> LemmaSweep<'a> {
    fn context(&self) -> CheckContext {
        CheckContext {
            graph6: Some(self.graph_id.to_string()),
            ..CheckContext::default()
        }
    }

    fn absorb(&mut self, result: CheckResult) {
        self.checks.absorb(&result);
        self.names
            .entry(result.name.clone())
            .or_default()
            .absorb(&result);
        if result.is_failed() {
            self.violations.push(Violation {
                check: result.name.clone(),
                graph6: self.graph_id.to_string(),
                witness: json!({
                    "witness": result.witness,
                    "context": serde_json::to_value(&result.context).expect("context serializes"),
                }),
                oracle_confirmed: None,
                origin: self.origin.clone(),
            });
        }
    }

    /// Hypothesis errors here mean the harness certified something the
    /// checker rejected; surface them loudly as violations.
    fn absorb_result(&mut self, result: Result<CheckResult, VerifyError>, what: &str) {
        match result {
            Ok(r) => self.absorb(r),
            Err(VerifyError::Hypothesis(msg)) | Err(VerifyError::Argument(msg)) => {
                self.checks.failed += 1;
                self.violations.push(Violation {
                    check: "internal_hypothesis_error".into(),
                    graph6: self.graph_id.to_string(),
                    witness: json!({ "check": what, "error": msg }),
                    oracle_confirmed: None,
                    origin: self.origin.clone(),
                });
            }
            Err(VerifyError::Solve(e)) => {
                self.checks.failed += 1;
                self.violations.push(Violation {
                    check: "internal_solver_error".into(),
                    graph6: self.graph_id.to_string(),
                    witness: json!({ "check": what, "error": e.to_string() }),
                    oracle_confirmed: None,
                    origin: self.origin.clone(),
                });
            }
            Err(VerifyError::Spread(e)) => {
                self.checks.failed += 1;
                self.violations.push(Violation {
                    check: "internal_spreading_error".into(),
                    graph6: self.graph_id.to_string(),
                    witness: json!({ "check": what, "error": e.to_string() }),
                    oracle_confirmed: None,
                    origin: self.origin.clone(),
                });
            }
        }
    }

    /// `long_cycle` is the longest cycle whose vertex set is being removed;
    /// `None` for the empty-removed-set sample, which only exercises the
    /// host floors.
    fn hosts_for_removed(
        &mut self,
        removed: &VertexSet,
        long_cycle: Option<&CycleSeq>,
    ) -> Result<(), SweepError> {
        let remainder = self.g.remove_vertices(removed).expect("set fits");
        if remainder.graph.n() == 0 {
            return Ok(());
        }
        let limits = self.cfg.limits;
        // cycle hosts: every longest cycle of the remainder, including the
        // degenerate single-vertex and single-edge cycles
        let rc = solve::longest_cycle_length(&remainder.graph, &limits)?;
        let cycle_hosts: Vec<CycleSeq> = if rc >= 3 {
            solve::longest_cycle_witnesses(&remainder.graph, &limits)?
                .into_iter()
                .map(|c| {
                    let global: Vec<usize> = c
                        .vertices()
                        .iter()
                        .map(|&v| remainder.original_id(v))
                        .collect();
                    CycleSeq::new(self.g, global).expect("induced cycle lifts")
                })
                .collect()
        } else {
            verify::degenerate_cycle_sets(&remainder.graph, rc)
                .into_iter()
                .map(|s| {
                    let global: Vec<usize> =
                        s.iter().map(|v| remainder.original_id(v)).collect();
                    CycleSeq::new(self.g, global).expect("degenerate cycle lifts")
                })
                .collect()
        };
        for host in cycle_hosts {
            self.cycle_host_checks(removed, &host, long_cycle)?;
        }
        // path hosts: every longest-path vertex set of the remainder
        let path_hosts: Vec<PathSeq> = solve::longest_path_witnesses(&remainder.graph, &limits)?
            .into_iter()
            .map(|p| {
                let global: Vec<usize> = p
                    .vertices()
                    .iter()
                    .map(|&v| remainder.original_id(v))
                    .collect();
                PathSeq::new(self.g, global).expect("induced path lifts")
            })
            .collect();
        for host in path_hosts {
            self.path_host_checks(removed, &host, long_cycle)?;
        }
        Ok(())
    }

    fn cycle_host_checks(
        &mut self,
        removed: &VertexSet,
        host: &CycleSeq,
        long_cycle: Option<&CycleSeq>,
    ) -> Result<(), SweepError> {
        let host_enum = Host::Cycle(host.clone());
        let minimal = find_minimal_spreadings(
            self.g,
            removed,
            &host_enum,
            MinimalityOrder::TrivialCount,
            &self.cfg.spread,
        )?;
        for s in &minimal.spreadings {
            let r = verify::check_cycle_host_floor(
                self.g,
                removed,
                host,
                s,
                &self.cfg.limits,
                self.context(),
            );
            self.absorb_result(r, "cycle_host_floor");
            self.absorb(verify::check_link_identity(self.g, s, self.context()));
            let r = verify::check_endpoint_trivial_disjoint(
                self.g,
                removed,
                &host_enum,
                s,
                self.context(),
            );
            self.absorb_result(r, "endpoint_trivial_disjoint");
        }
        if self.cfg.level.runs_claims() {
            if let Some(cycle) = long_cycle {
                let two_level = find_minimal_spreadings(
                    self.g,
                    removed,
                    &host_enum,
                    MinimalityOrder::TrivialThenConfined,
                    &self.cfg.spread,
                )?;
                for s in &two_level.spreadings {
                    self.claims_for(cycle, &host_enum, s, ClaimMode::Cycle);
                }
            }
        }
        Ok(())
    }

    fn path_host_checks(
        &mut self,
        removed: &VertexSet,
        host: &PathSeq,
        long_cycle: Option<&CycleSeq>,
    ) -> Result<(), SweepError> {
        let host_enum = Host::Path(host.clone());
        let minimal = find_minimal_spreadings(
            self.g,
            removed,
            &host_enum,
            MinimalityOrder::TrivialCount,
            &self.cfg.spread,
        )?;
        for s in &minimal.spreadings {
            let r = verify::check_path_host_floor(
                self.g,
                removed,
                host,
                s,
                &self.cfg.limits,
                self.context(),
            );
            self.absorb_result(r, "path_host_floor");
            self.absorb(verify::check_link_identity(self.g, s, self.context()));
            let r = verify::check_endpoint_trivial_disjoint(
                self.g,
                removed,
                &host_enum,
                s,
                self.context(),
            );
            self.absorb_result(r, "endpoint_trivial_disjoint");
        }
        if let Some(cycle) = long_cycle {
            // the contact bound wants a proper cycle
            if cycle.length() >= 3 {
                let mut configs: Vec<Result<ContactConfig, VerifyError>> = Vec::new();
                spreading::for_each_spreading(
                    self.g,
                    removed,
                    &host_enum,
                    &self.cfg.spread,
                    |s| {
                        let rooted: Vec<PathSeq> = s
                            .paths()
                            .iter()
                            .map(|p| {
                                PathSeq::new(self.g, p.clone()).expect("spreading path is simple")
                            })
                            .collect();
                        configs.push(ContactConfig::new(
                            self.g,
                            cycle.clone(),
                            host.clone(),
                            rooted,
                        ));
                    },
                )?;
                for cfg_result in configs {
                    match cfg_result {
                        Ok(contact) => {
                            let r = verify::check_contact_bound(
                                self.g,
                                &contact,
                                &self.cfg.limits,
                                self.context(),
                            );
                            self.absorb_result(r, "contact_bound");
                            let r = verify::check_contact_gaps(
                                self.g,
                                &contact,
                                &self.cfg.limits,
                                self.context(),
                            );
                            self.absorb_result(r, "contact_gaps");
                        }
                        Err(e) => {
                            self.absorb_result(Err(e), "contact_config");
                        }
                    }
                }
            }
            if self.cfg.level.runs_claims() {
                for s in &minimal.spreadings {
                    self.claims_for(cycle, &host_enum, s, ClaimMode::Path);
                }
            }
        }
        Ok(())
    }

    fn claims_for(&mut self, cycle: &CycleSeq, host: &Host, s: &spreading::Spreading, mode: ClaimMode) {
        let sat = saturate(self.g, s);
        if sat.trivial_count() != s.trivial_count() {
            self.checks.failed += 1;
            self.violations.push(Violation {
                check: "saturation_changed_minimum".into(),
                graph6: self.graph_id.to_string(),
                witness: json!({
                    "before": s.trivial_count(),
                    "after": sat.trivial_count(),
                }),
                oracle_confirmed: None,
                origin: self.origin.clone(),
            });
            return;
        }
        self.absorb(verify::check_saturation_split(self.g, &sat, self.context()));
        match verify::check_proof_claims(
            self.g,
            cycle,
            host,
            &sat,
            mode,
            &self.cfg.limits,
            &self.cfg.spread,
            self.context(),
        ) {
            Ok(results) => {
                for r in results {
                    self.absorb(r);
                }
            }
            Err(e) => self.absorb_result(Err(e), "proof_claims"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::CorpusKind;

    fn spec(kind: CorpusKind) -> CorpusSpec {
        CorpusSpec {
            kind,
            connected_only: false,
        }
    }

    fn config(level: Level, jobs: usize) -> RunConfig {
        RunConfig {
            level,
            jobs,
            ..RunConfig::default()
        }
    }

    #[test]
    fn exhaustive_four_vertices_is_clean() {
        let mut reports = Vec::new();
        let summary = run_verify(
            &spec(CorpusKind::Exhaustive { n: 4 }),
            &config(Level::All, 2),
            &mut |r| reports.push(r.clone()),
        )
        .unwrap();
        assert_eq!(summary.corpus_size, 64);
        assert_eq!(summary.violations, 0);
        assert_eq!(reports.len(), 64);
        assert_eq!(
            summary.processed + summary.skipped_degenerate + summary.capacity_errors,
            64
        );
        // the complete graph is hamiltonian and sharp on bound1
        let k4 = reports.iter().find(|r| r.graph_id == "C~").unwrap();
        assert!(!k4.degenerate);
        assert!(k4.cycles[0].sharp1);
    }

    #[test]
    fn single_edge_routes_to_the_degenerate_track() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let report = process_graph(&g, None, &config(Level::Theorems, 1));
        assert!(report.degenerate);
        assert_eq!(report.circumference, 2);
        assert_eq!(report.cycles.len(), 1);
        assert!(report.violations.is_empty());
        // degenerate outcomes are recorded, not judged
        assert_eq!(report.checks.passed + report.checks.failed, 0);
    }

    #[test]
    fn reports_are_identical_across_worker_counts() {
        let corpus = CorpusKind::Gnp {
            n: 9,
            p: 0.4,
            count: 40,
            seed: 11,
        };
        let mut one = Vec::new();
        run_verify(&spec(corpus.clone()), &config(Level::Theorems, 1), &mut |r| {
            one.push(crate::report::canonical_json(r))
        })
        .unwrap();
        let mut four = Vec::new();
        run_verify(&spec(corpus), &config(Level::Theorems, 4), &mut |r| {
            four.push(crate::report::canonical_json(r))
        })
        .unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn hunt_rejects_exhaustive_corpora() {
        let err = hunt(
            &spec(CorpusKind::Exhaustive { n: 3 }),
            &config(Level::Theorems, 1),
            &mut |_| {},
        )
        .unwrap_err();
        assert!(matches!(err, RunError::HuntNeedsRandomCorpus("exhaustive")));
    }

    #[test]
    fn hunt_on_random_corpora_is_clean() {
        let outcome = hunt(
            &spec(CorpusKind::Gnp {
                n: 10,
                p: 0.35,
                count: 60,
                seed: 5,
            }),
            &config(Level::Theorems, 2),
            &mut |_| {},
        )
        .unwrap();
        assert!(outcome.violations.is_empty());
        assert_eq!(outcome.summary.corpus_size, 60);
    }

    #[test]
    fn extremal_corpus_is_sharp_on_the_main_track() {
        let mut reports = Vec::new();
        let summary = run_verify(
            &spec(CorpusKind::Extremal {
                kappa_min: 1,
                kappa_max: 3,
                delta_min: 1,
                delta_max: 5,
            }),
            &config(Level::All, 2),
            &mut |r| reports.push(r.clone()),
        )
        .unwrap();
        assert_eq!(summary.violations, 0);
        assert_eq!(summary.capacity_errors, 0);
        for report in &reports {
            if !report.degenerate {
                assert!(
                    report.cycles.iter().all(|c| c.sharp1 && c.sharp2),
                    "non-sharp cycle set on {}",
                    report.graph_id
                );
            }
        }
    }

    #[test]
    fn file_corpus_routes_single_edge_to_degenerate_track() {
        let path = std::env::temp_dir().join(format!("longcycle-edge-{}.txt", std::process::id()));
        std::fs::write(&path, "0 1\n").unwrap();
        let mut reports = Vec::new();
        let summary = run_verify(
            &spec(CorpusKind::File {
                path: path.clone(),
                format: crate::corpus::FileFormat::EdgeList,
            }),
            &config(Level::Theorems, 1),
            &mut |r| reports.push(r.clone()),
        )
        .unwrap();
        std::fs::remove_file(path).ok();
        assert_eq!(summary.corpus_size, 1);
        assert_eq!(summary.skipped_degenerate, 1);
        assert_eq!(summary.processed, 0);
        assert!(reports[0].degenerate);
        assert_eq!(reports[0].circumference, 2);
        // degenerate outcomes are recorded without pass/fail judgement
        assert_eq!(reports[0].checks.passed + reports[0].checks.failed, 0);
        assert!(reports[0].violations.is_empty());
    }

    #[test]
    fn oracle_recheck_rejects_spurious_failures() {
        // the bound actually holds here, so a hypothetical dp-side failure
        // would not be confirmed by the oracle route
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let set = VertexSet::from_ids(5, [0, 1, 2]).unwrap();
        let cfg = config(Level::Theorems, 1);
        assert_eq!(recheck_bound_with_oracle(&g, &set, 2, "bound1", &cfg), Some(false));
        assert_eq!(recheck_bound_with_oracle(&g, &set, 2, "bound2", &cfg), Some(false));
        // beyond oracle capacity there is no second route
        let big = Graph::from_edges(12, (0..12).map(|i| (i, (i + 1) % 12))).unwrap();
        let all = VertexSet::full(12);
        assert_eq!(recheck_bound_with_oracle(&big, &all, 2, "bound1", &cfg), None);
    }

    #[test]
    fn connected_filter_counts_skips() {
        let summary = run_verify(
            &CorpusSpec {
                kind: CorpusKind::Exhaustive { n: 3 },
                connected_only: true,
            },
            &config(Level::Theorems, 1),
            &mut |_| {},
        )
        .unwrap();
        // 8 labeled graphs on 3 vertices, 4 connected (the triangle and
        // three paths)
        assert_eq!(summary.corpus_size, 8);
        assert_eq!(summary.skipped_filtered, 4);
    }
}
