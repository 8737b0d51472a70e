//! Executable checkers for the bound inequalities.
//!
//! Every checker certifies its hypotheses first (host really is a longest
//! path/cycle, the spreading really is minimal, ...) and refuses with a
//! hypothesis error when they fail, so a reported failure always points at
//! the inequality itself. Failed checks carry a complete witness; checks
//! whose quantifier domain is empty or whose side condition does not apply
//! report not-applicable rather than pass.
//!
//! The two top-level bounds, per longest-cycle vertex set S with remainder
//! R = G - S, p = longest path of R, c = longest cycle of R, d = min
//! degree:
//! * bound1: |C| >= (p + 2)(d - p)
//! * bound2: |C| >= (c + 1)(d - c + 1)
//!
//! The remainder cycle length c is taken as 0 when R is empty; the path
//! convention p = -1 already covers that case for bound1.

use crate::graph::{CycleSeq, Graph, PathSeq, VertexSet};
use crate::solve::{self, SolveError, SolveLimits};
use crate::spreading::{
    self, classify, is_saturated, min_trivial_roots, validate_spreading, Classification, Host,
    MinimalityOrder, SpreadError, SpreadLimits, Spreading,
};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("hypothesis not certified: {0}")]
    Hypothesis(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Spread(#[from] SpreadError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Passed,
    Failed,
    NotApplicable,
}

/// Where a check ran: graph, cycle set, removed set, host, spreading.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckContext {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removed: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub host: Option<HostRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spreading: Option<SpreadingRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HostRecord {
    pub kind: String,
    pub vertices: Vec<usize>,
}

impl HostRecord {
    pub fn from_host(host: &Host) -> Self {
        HostRecord {
            kind: if host.is_cycle() { "cycle" } else { "path" }.into(),
            vertices: host.vertices().to_vec(),
        }
    }
}

/// Report-format serialization of a spreading: one vertex-id list per
/// root, plus the full root classification.
#[derive(Debug, Clone, Serialize)]
pub struct SpreadingRecord {
    pub removed: Vec<usize>,
    pub host_kind: String,
    pub paths: Vec<RootPathRecord>,
    pub classification: Classification,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootPathRecord {
    pub root: usize,
    pub vertices: Vec<usize>,
}

impl SpreadingRecord {
    pub fn from_spreading(g: &Graph, s: &Spreading) -> Self {
        SpreadingRecord {
            removed: s.removed().to_vec(),
            host_kind: if s.host_is_cycle() { "cycle" } else { "path" }.into(),
            paths: s
                .paths()
                .iter()
                .map(|p| RootPathRecord {
                    root: p[0],
                    vertices: p.clone(),
                })
                .collect(),
            classification: classify(g, s),
        }
    }
}

/// Outcome of one check. Failures always carry a witness; passes never do.
/// A pass over an empty quantifier domain is flagged vacuous, which keeps
/// coverage accounting honest; not-applicable is reserved for unmet side
/// conditions and is distinct from pass and fail.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Structured values the check derived (bounds, slack, ...), present on
    /// any status.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub context: CheckContext,
}

impl CheckResult {
    pub fn passed(name: &str, context: CheckContext) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Passed,
            vacuous: false,
            witness: None,
            data: None,
            note: None,
            context,
        }
    }

    pub fn vacuous_pass(name: &str, context: CheckContext) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Passed,
            vacuous: true,
            witness: None,
            data: None,
            note: Some("empty quantifier domain".into()),
            context,
        }
    }

    pub fn failed(name: &str, context: CheckContext, witness: Value) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Failed,
            vacuous: false,
            witness: Some(witness),
            data: None,
            note: None,
            context,
        }
    }

    pub fn not_applicable(name: &str, context: CheckContext, note: &str) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::NotApplicable,
            vacuous: false,
            witness: None,
            data: None,
            note: Some(note.into()),
            context,
        }
    }

    pub fn with_data(mut self, data: Value) -> Self {
        self.data = Some(data);
        self
    }

    pub fn is_failed(&self) -> bool {
        self.status == CheckStatus::Failed
    }
}

// ---------------------------------------------------------------------------
// Contact configuration
// ---------------------------------------------------------------------------

/// Hypothesis bundle for the contact bound: a cycle `C`, a base path `M`
/// disjoint from it, and pairwise disjoint rooted paths that meet `M`
/// exactly in their first vertices. For each rooted path the *contact set*
/// is the set of cycle vertices adjacent to its endpoint; the union of all
/// contact sets, in cycle order, gives the contact points, their adjacent
/// endpoints, and the cyclic gaps between consecutive contact points.
#[derive(Debug, Clone)]
pub struct ContactConfig {
    pub cycle: CycleSeq,
    pub base_path: PathSeq,
    pub rooted_paths: Vec<PathSeq>,
    pub contact_sets: Vec<VertexSet>,
    pub contact_points: Vec<usize>,
    /// Per contact point: the rooted-path endpoints adjacent to it.
    pub adjacent_endpoints: Vec<Vec<usize>>,
    /// Cyclic gaps between consecutive contact points; computed only when
    /// there are at least two.
    pub gaps: Vec<usize>,
}

impl ContactConfig {
    pub fn new(
        g: &Graph,
        cycle: CycleSeq,
        base_path: PathSeq,
        rooted_paths: Vec<PathSeq>,
    ) -> Result<Self, VerifyError> {
        if cycle.length() < 3 {
            return Err(VerifyError::Argument(format!(
                "contact configurations need a cycle on at least 3 vertices, got {}",
                cycle.length()
            )));
        }
        let n = g.n();
        let cycle_set = cycle.vertex_set(n);
        let base_set = base_path.vertex_set(n);
        if !base_set.is_disjoint_from(&cycle_set) {
            return Err(VerifyError::Argument(
                "base path intersects the cycle".into(),
            ));
        }
        if base_path.is_empty() {
            return Err(VerifyError::Argument("base path is empty".into()));
        }
        let mut used = VertexSet::empty(n);
        for (i, path) in rooted_paths.iter().enumerate() {
            let first = path
                .first()
                .ok_or_else(|| VerifyError::Argument(format!("rooted path {i} is empty")))?;
            if !base_set.contains(first) {
                return Err(VerifyError::Argument(format!(
                    "rooted path {i} does not start on the base path"
                )));
            }
            for (k, &v) in path.vertices().iter().enumerate() {
                if cycle_set.contains(v) {
                    return Err(VerifyError::Argument(format!(
                        "rooted path {i} enters the cycle at {v}"
                    )));
                }
                if k > 0 && base_set.contains(v) {
                    return Err(VerifyError::Argument(format!(
                        "rooted path {i} meets the base path beyond its root at {v}"
                    )));
                }
                if used.contains(v) {
                    return Err(VerifyError::Argument(format!(
                        "rooted paths overlap at {v}"
                    )));
                }
                used.insert(v);
            }
        }
        let endpoints: Vec<usize> = rooted_paths
            .iter()
            .map(|p| p.last().expect("validated nonempty"))
            .collect();
        let contact_sets: Vec<VertexSet> = endpoints
            .iter()
            .map(|&w| g.neighbors(w).intersection(&cycle_set))
            .collect();
        let mut union = VertexSet::empty(n);
        for z in &contact_sets {
            union.union_with(z);
        }
        // contact points in cycle order
        let contact_points: Vec<usize> = cycle
            .vertices()
            .iter()
            .copied()
            .filter(|&v| union.contains(v))
            .collect();
        let adjacent_endpoints: Vec<Vec<usize>> = contact_points
            .iter()
            .map(|&xi| {
                endpoints
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(xi, w))
                    .collect()
            })
            .collect();
        let t = contact_points.len();
        let gaps: Vec<usize> = if t >= 2 {
            (0..t)
                .map(|i| {
                    cycle
                        .segment_length(contact_points[i], contact_points[(i + 1) % t])
                        .expect("contact points lie on the cycle")
                })
                .collect()
        } else {
            Vec::new()
        };
        let cfg = ContactConfig {
            cycle,
            base_path,
            rooted_paths,
            contact_sets,
            contact_points,
            adjacent_endpoints,
            gaps,
        };
        cfg.check_identities()?;
        Ok(cfg)
    }

    /// Structural identities of the configuration: the contact-point count
    /// equals the union size, the per-point endpoint lists and the contact
    /// sets count the same adjacencies, and when there are at least two
    /// contact points the gaps sum to the cycle length.
    fn check_identities(&self) -> Result<(), VerifyError> {
        let sum_contacts: usize = self.contact_sets.iter().map(|z| z.len()).sum();
        let sum_fans: usize = self.adjacent_endpoints.iter().map(|f| f.len()).sum();
        if sum_contacts != sum_fans {
            return Err(VerifyError::Argument(format!(
                "contact adjacency mismatch: {sum_contacts} vs {sum_fans}"
            )));
        }
        if !self.gaps.is_empty() {
            let total: usize = self.gaps.iter().sum();
            if total != self.cycle.length() {
                return Err(VerifyError::Argument(format!(
                    "gaps sum to {total}, cycle length is {}",
                    self.cycle.length()
                )));
            }
        }
        Ok(())
    }

    pub fn contact_point_count(&self) -> usize {
        self.contact_points.len()
    }

    pub fn contact_total(&self) -> usize {
        self.contact_sets.iter().map(|z| z.len()).sum()
    }
}

fn certify_longest_cycle(g: &Graph, cycle: &CycleSeq, limits: &SolveLimits) -> Result<(), VerifyError> {
    let c = solve::longest_cycle_length(g, limits)?;
    if cycle.length() != c {
        return Err(VerifyError::Hypothesis(format!(
            "cycle of length {} is not a longest cycle (circumference {})",
            cycle.length(),
            c
        )));
    }
    Ok(())
}

/// Contact bound: a longest cycle has length at least the total contact
/// count plus the number of distinct contact points.
pub fn check_contact_bound(
    g: &Graph,
    cfg: &ContactConfig,
    limits: &SolveLimits,
    mut context: CheckContext,
) -> Result<CheckResult, VerifyError> {
    certify_longest_cycle(g, &cfg.cycle, limits)?;
    context.cycle_set = Some(cfg.cycle.vertex_set(g.n()).to_vec());
    let total = cfg.contact_total();
    let points = cfg.contact_point_count();
    let len = cfg.cycle.length();
    let data = json!({
        "cycle_length": len,
        "contact_total": total,
        "contact_points": points,
    });
    if len >= total + points {
        Ok(CheckResult::passed("contact_bound", context).with_data(data))
    } else {
        Ok(CheckResult::failed(
            "contact_bound",
            context,
            json!({
                "cycle_length": len,
                "contact_total": total,
                "contact_points": cfg.contact_points,
                "contact_sets": cfg.contact_sets.iter().map(|z| z.to_vec()).collect::<Vec<_>>(),
            }),
        ))
    }
}

/// Per-gap bound: with at least two contact points, every cyclic gap f
/// between consecutive contact points satisfies
/// 2 f >= |adjacent endpoints at the left point| + |at the right point| + 2.
pub fn check_contact_gaps(
    g: &Graph,
    cfg: &ContactConfig,
    limits: &SolveLimits,
    mut context: CheckContext,
) -> Result<CheckResult, VerifyError> {
    certify_longest_cycle(g, &cfg.cycle, limits)?;
    context.cycle_set = Some(cfg.cycle.vertex_set(g.n()).to_vec());
    let t = cfg.contact_point_count();
    if t <= 1 {
        return Ok(CheckResult::not_applicable(
            "contact_gaps",
            context,
            "fewer than two contact points",
        ));
    }
    for i in 0..t {
        let fan_here = cfg.adjacent_endpoints[i].len();
        let fan_next = cfg.adjacent_endpoints[(i + 1) % t].len();
        let gap = cfg.gaps[i];
        if 2 * gap < fan_here + fan_next + 2 {
            return Ok(CheckResult::failed(
                "contact_gaps",
                context,
                json!({
                    "gap_index": i,
                    "gap": gap,
                    "left_point": cfg.contact_points[i],
                    "right_point": cfg.contact_points[(i + 1) % t],
                    "left_fan": cfg.adjacent_endpoints[i],
                    "right_fan": cfg.adjacent_endpoints[(i + 1) % t],
                }),
            ));
        }
    }
    let data = json!({ "gaps": cfg.gaps, "contact_points": cfg.contact_points });
    Ok(CheckResult::passed("contact_gaps", context).with_data(data))
}

// ---------------------------------------------------------------------------
// Host floors (Lemmas 2 and 3)
// ---------------------------------------------------------------------------

fn certify_minimal_spreading(
    g: &Graph,
    removed: &VertexSet,
    host: &Host,
    s: &Spreading,
) -> Result<(), VerifyError> {
    validate_spreading(g, removed, host, s)?;
    let min = min_trivial_roots(g, removed, host)?;
    if s.trivial_count() != min {
        return Err(VerifyError::Hypothesis(format!(
            "spreading has {} trivial roots, minimum is {min}",
            s.trivial_count()
        )));
    }
    Ok(())
}

fn certify_host_cycle(
    g: &Graph,
    removed: &VertexSet,
    host: &CycleSeq,
    limits: &SolveLimits,
) -> Result<(), VerifyError> {
    let remainder = g.remove_vertices(removed).map_err(|e| {
        VerifyError::Argument(format!("removed set does not fit the graph: {e}"))
    })?;
    for &v in host.vertices() {
        if remainder.local_id(v).is_none() {
            return Err(VerifyError::Hypothesis(format!(
                "host vertex {v} lies in the removed set"
            )));
        }
    }
    let c = solve::longest_cycle_length(&remainder.graph, limits)?;
    if host.length() != c {
        return Err(VerifyError::Hypothesis(format!(
            "host cycle of length {} is not a longest cycle of the remainder (circumference {c})",
            host.length()
        )));
    }
    Ok(())
}

fn certify_host_path(
    g: &Graph,
    removed: &VertexSet,
    host: &PathSeq,
    limits: &SolveLimits,
) -> Result<(), VerifyError> {
    let remainder = g.remove_vertices(removed).map_err(|e| {
        VerifyError::Argument(format!("removed set does not fit the graph: {e}"))
    })?;
    for &v in host.vertices() {
        if remainder.local_id(v).is_none() {
            return Err(VerifyError::Hypothesis(format!(
                "host vertex {v} lies in the removed set"
            )));
        }
    }
    let p = solve::longest_path_length(&remainder.graph, limits)?;
    if host.length() != p {
        return Err(VerifyError::Hypothesis(format!(
            "host path of length {} is not a longest path of the remainder (maximum {p})",
            host.length()
        )));
    }
    Ok(())
}

/// Cycle-host floor: over a longest cycle of the remainder with a
/// trivial-minimal spreading, every crossing root u satisfies
/// |M| >= spread_degree(u) + trivial_links(u) + 1.
pub fn check_cycle_host_floor(
    g: &Graph,
    removed: &VertexSet,
    host: &CycleSeq,
    s: &Spreading,
    limits: &SolveLimits,
    mut context: CheckContext,
) -> Result<CheckResult, VerifyError> {
    certify_host_cycle(g, removed, host, limits)?;
    let host_enum = Host::Cycle(host.clone());
    certify_minimal_spreading(g, removed, &host_enum, s)?;
    context.removed = Some(removed.to_vec());
    context.host = Some(HostRecord::from_host(&host_enum));
    context.spreading = Some(SpreadingRecord::from_spreading(g, s));
    let cls = classify(g, s);
    let m = host.length();
    if cls.crossing.is_empty() {
        return Ok(CheckResult::vacuous_pass("cycle_host_floor", context));
    }
    for &u in &cls.crossing {
        let rec = cls.record_for(u);
        let need = rec.spread_degree() + rec.trivial_link_count() + 1;
        if m < need {
            return Ok(CheckResult::failed(
                "cycle_host_floor",
                context,
                floor_witness(u, rec.spread_degree(), rec.trivial_link_count(), m, need),
            ));
        }
    }
    Ok(CheckResult::passed("cycle_host_floor", context))
}

/// Path-host floor: over a longest path of the remainder with a
/// trivial-minimal spreading, every nontrivial root u satisfies
/// |L| >= spread_degree(u) + trivial_links(u).
pub fn check_path_host_floor(
    g: &Graph,
    removed: &VertexSet,
    host: &PathSeq,
    s: &Spreading,
    limits: &SolveLimits,
    mut context: CheckContext,
) -> Result<CheckResult, VerifyError> {
    certify_host_path(g, removed, host, limits)?;
    let host_enum = Host::Path(host.clone());
    certify_minimal_spreading(g, removed, &host_enum, s)?;
    context.removed = Some(removed.to_vec());
    context.host = Some(HostRecord::from_host(&host_enum));
    context.spreading = Some(SpreadingRecord::from_spreading(g, s));
    let cls = classify(g, s);
    let l = host.length();
    if cls.nontrivial.is_empty() {
        return Ok(CheckResult::vacuous_pass("path_host_floor", context));
    }
    for &u in &cls.nontrivial {
        let rec = cls.record_for(u);
        let need = (rec.spread_degree() + rec.trivial_link_count()) as i64;
        if l < need {
            return Ok(CheckResult::failed(
                "path_host_floor",
                context,
                floor_witness(
                    u,
                    rec.spread_degree(),
                    rec.trivial_link_count(),
                    l as usize,
                    need as usize,
                ),
            ));
        }
    }
    Ok(CheckResult::passed("path_host_floor", context))
}

fn floor_witness(
    root: usize,
    spread_degree: usize,
    trivial_links: usize,
    host_length: usize,
    needed: usize,
) -> Value {
    json!({
        "root": root,
        "spread_degree": spread_degree,
        "trivial_links": trivial_links,
        "host_length": host_length,
        "needed": needed,
    })
}

// ---------------------------------------------------------------------------
// Structural spreading checks
// ---------------------------------------------------------------------------

/// Double count: the reverse links summed over trivial roots equal the
/// trivial links summed over nontrivial roots. Holds for every spreading.
pub fn check_link_identity(g: &Graph, s: &Spreading, mut context: CheckContext) -> CheckResult {
    context.spreading = Some(SpreadingRecord::from_spreading(g, s));
    let cls = classify(g, s);
    let (reverse, forward) = cls.link_sums();
    if reverse == forward {
        CheckResult::passed("link_count_identity", context)
            .with_data(json!({ "reverse": reverse, "forward": forward }))
    } else {
        CheckResult::failed(
            "link_count_identity",
            context,
            json!({ "reverse": reverse, "forward": forward }),
        )
    }
}

/// In a trivial-minimal spreading, the endpoint of a path with at least two
/// edges has no trivial root among its spread neighbors (otherwise handing
/// the endpoint to that root would shrink the trivial set).
pub fn check_endpoint_trivial_disjoint(
    g: &Graph,
    removed: &VertexSet,
    host: &Host,
    s: &Spreading,
    mut context: CheckContext,
) -> Result<CheckResult, VerifyError> {
    certify_minimal_spreading(g, removed, host, s)?;
    context.spreading = Some(SpreadingRecord::from_spreading(g, s));
    let cls = classify(g, s);
    let trivial_set =
        VertexSet::from_ids(g.n(), cls.trivial.iter().copied()).expect("roots in range");
    let mut applicable = false;
    for path in s.paths() {
        if path.len() < 3 {
            continue;
        }
        applicable = true;
        let rec = cls.record_for(path[0]);
        let overlap = rec.spread_neighbors.intersection(&trivial_set);
        if !overlap.is_empty() {
            return Ok(CheckResult::failed(
                "endpoint_trivial_disjoint",
                context,
                json!({
                    "root": path[0],
                    "endpoint": rec.endpoint,
                    "trivial_overlap": overlap.to_vec(),
                }),
            ));
        }
    }
    if !applicable {
        return Ok(CheckResult::vacuous_pass("endpoint_trivial_disjoint", context));
    }
    Ok(CheckResult::passed("endpoint_trivial_disjoint", context))
}

/// After saturation every endpoint degree splits exactly into spread plus
/// removed neighbors.
pub fn check_saturation_split(g: &Graph, s: &Spreading, mut context: CheckContext) -> CheckResult {
    context.spreading = Some(SpreadingRecord::from_spreading(g, s));
    if !is_saturated(g, s) {
        return CheckResult::not_applicable(
            "saturation_degree_split",
            context,
            "spreading is not saturated",
        );
    }
    let cls = classify(g, s);
    for rec in &cls.records {
        let d = g.degree(rec.endpoint);
        if d != rec.spread_degree() + rec.removed_degree() {
            return CheckResult::failed(
                "saturation_degree_split",
                context,
                json!({
                    "root": rec.root,
                    "endpoint": rec.endpoint,
                    "degree": d,
                    "spread_degree": rec.spread_degree(),
                    "removed_degree": rec.removed_degree(),
                }),
            );
        }
    }
    CheckResult::passed("saturation_degree_split", context)
}

// ---------------------------------------------------------------------------
// Proof claims
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimMode {
    /// Host is a longest path of the remainder.
    Path,
    /// Host is a longest cycle of the remainder.
    Cycle,
}

/// Checks the per-root inequalities used to sum the two bounds, one result
/// per applicable claim. The spreading must be trivial-minimal, saturated,
/// over the stated host of `G - C` for a longest cycle `C`.
///
/// Path mode (host length p):
/// * containment: a trivial root's spread neighbors meet any nontrivial
///   path only in its root and successor;
/// * trivial bound: spread_degree(u) <= p + reverse_links(u) for trivial u;
/// * nontrivial bound: spread_degree(u) <= p - trivial_links(u) for
///   nontrivial u.
///
/// Cycle mode (host length c):
/// * containment as above;
/// * trivial bound: spread_degree(u) <= c - 1 + reverse_links(u);
/// * crossing bound: spread_degree(u) <= c - 1 - trivial_links(u);
/// * confined slack: 2 (trivial_links(u) + 1) <= c for confined u;
/// * low bound: spread_degree(u) <= c - 1 - trivial_links(u) for crossing
///   and low-confined u;
/// * high bound: with v maximizing the spread degree over high-confined
///   roots, 2 spread_degree(u) <= 2 (c - 1 - trivial_links(u)) +
///   2 spread_degree(v) - c for high-confined u.
#[allow(clippy::too_many_arguments)]
pub fn check_proof_claims(
    g: &Graph,
    cycle: &CycleSeq,
    host: &Host,
    s: &Spreading,
    mode: ClaimMode,
    limits: &SolveLimits,
    spread_limits: &SpreadLimits,
    base_context: CheckContext,
) -> Result<Vec<CheckResult>, VerifyError> {
    certify_longest_cycle(g, cycle, limits)?;
    let removed = cycle.vertex_set(g.n());
    match (mode, host) {
        (ClaimMode::Path, Host::Path(p)) => certify_host_path(g, &removed, p, limits)?,
        (ClaimMode::Cycle, Host::Cycle(c)) => certify_host_cycle(g, &removed, c, limits)?,
        _ => {
            return Err(VerifyError::Argument(
                "claim mode does not match the host kind".into(),
            ))
        }
    }
    certify_minimal_spreading(g, &removed, host, s)?;
    if !is_saturated(g, s) {
        return Err(VerifyError::Hypothesis(
            "spreading is not saturated".into(),
        ));
    }
    let mut context = base_context;
    context.cycle_set = Some(removed.to_vec());
    context.removed = Some(removed.to_vec());
    context.host = Some(HostRecord::from_host(host));
    context.spreading = Some(SpreadingRecord::from_spreading(g, s));
    // The confined minimum is certified against the unsaturated fiber; a
    // saturated spreading may exceed it, which the claims tolerate.
    let mut note = None;
    if mode == ClaimMode::Cycle {
        let fiber = spreading::find_minimal_spreadings(
            g,
            &removed,
            host,
            MinimalityOrder::TrivialThenConfined,
            spread_limits,
        )?;
        let own = classify(g, s).confined.len();
        if Some(own) != fiber.min_confined {
            note = Some(format!(
                "confined count {own} exceeds the unsaturated minimum {}",
                fiber.min_confined.unwrap_or(0)
            ));
        }
    }
    let cls = classify(g, s);
    let mut out = claims_for_classification(s, &cls, mode, context);
    if let Some(note) = note {
        for r in &mut out {
            r.note.get_or_insert_with(|| note.clone());
        }
    }
    Ok(out)
}

fn claims_for_classification(
    s: &Spreading,
    cls: &Classification,
    mode: ClaimMode,
    context: CheckContext,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let host_len = s.host_length();
    let prefix = match mode {
        ClaimMode::Path => "path",
        ClaimMode::Cycle => "cycle",
    };
    let quantify = |name: &str,
                    domain: &[usize],
                    check: &dyn Fn(usize) -> Option<Value>|
     -> CheckResult {
        if domain.is_empty() {
            return CheckResult::vacuous_pass(name, context.clone());
        }
        for &u in domain {
            if let Some(witness) = check(u) {
                return CheckResult::failed(name, context.clone(), witness);
            }
        }
        CheckResult::passed(name, context.clone())
    };

    // containment: for trivial u and nontrivial v, the spread neighbors of
    // u on v's path sit inside {v, successor(v)}
    let containment = || -> CheckResult {
        let name = &format!("{prefix}_containment");
        if cls.trivial.is_empty() || cls.nontrivial.is_empty() {
            return CheckResult::vacuous_pass(name, context.clone());
        }
        for &u in &cls.trivial {
            let urec = cls.record_for(u);
            for &v in &cls.nontrivial {
                let path = s.path_for(v).expect("v is a root");
                let allowed_head = path[0];
                let allowed_succ = path[1];
                for &w in path.iter() {
                    if urec.spread_neighbors.contains(w) && w != allowed_head && w != allowed_succ
                    {
                        return CheckResult::failed(
                            name,
                            context.clone(),
                            json!({
                                "trivial_root": u,
                                "nontrivial_root": v,
                                "deep_contact": w,
                                "path": path,
                            }),
                        );
                    }
                }
            }
        }
        CheckResult::passed(name, context.clone())
    };

    match mode {
        ClaimMode::Path => {
            let p = host_len;
            out.push(containment());
            out.push(quantify("path_trivial_root_bound", &cls.trivial, &|u| {
                let rec = cls.record_for(u);
                let lhs = rec.spread_degree() as i64;
                let rhs = p + rec.reverse_link_count() as i64;
                (lhs > rhs).then(|| {
                    json!({
                        "root": u,
                        "spread_degree": lhs,
                        "host_length": p,
                        "reverse_links": rec.reverse_link_count(),
                    })
                })
            }));
            out.push(quantify("path_nontrivial_root_bound", &cls.nontrivial, &|u| {
                let rec = cls.record_for(u);
                let lhs = rec.spread_degree() as i64;
                let rhs = p - rec.trivial_link_count() as i64;
                (lhs > rhs).then(|| {
                    json!({
                        "root": u,
                        "spread_degree": lhs,
                        "host_length": p,
                        "trivial_links": rec.trivial_link_count(),
                    })
                })
            }));
        }
        ClaimMode::Cycle => {
            let c = host_len;
            out.push(containment());
            out.push(quantify("cycle_trivial_root_bound", &cls.trivial, &|u| {
                let rec = cls.record_for(u);
                let lhs = rec.spread_degree() as i64;
                let rhs = c - 1 + rec.reverse_link_count() as i64;
                (lhs > rhs).then(|| {
                    json!({
                        "root": u,
                        "spread_degree": lhs,
                        "host_length": c,
                        "reverse_links": rec.reverse_link_count(),
                    })
                })
            }));
            out.push(quantify("cycle_crossing_root_bound", &cls.crossing, &|u| {
                let rec = cls.record_for(u);
                let lhs = rec.spread_degree() as i64;
                let rhs = c - 1 - rec.trivial_link_count() as i64;
                (lhs > rhs).then(|| {
                    json!({
                        "root": u,
                        "spread_degree": lhs,
                        "host_length": c,
                        "trivial_links": rec.trivial_link_count(),
                    })
                })
            }));
            out.push(quantify("cycle_confined_slack", &cls.confined, &|u| {
                let rec = cls.record_for(u);
                let lhs = 2 * (rec.trivial_link_count() as i64 + 1);
                (lhs > c).then(|| {
                    json!({
                        "root": u,
                        "trivial_links": rec.trivial_link_count(),
                        "host_length": c,
                    })
                })
            }));
            let low_union: Vec<usize> = cls
                .crossing
                .iter()
                .chain(cls.confined_low.iter())
                .copied()
                .collect();
            out.push(quantify("cycle_low_root_bound", &low_union, &|u| {
                let rec = cls.record_for(u);
                let lhs = rec.spread_degree() as i64;
                let rhs = c - 1 - rec.trivial_link_count() as i64;
                (lhs > rhs).then(|| {
                    json!({
                        "root": u,
                        "spread_degree": lhs,
                        "host_length": c,
                        "trivial_links": rec.trivial_link_count(),
                    })
                })
            }));
            let max_high = cls
                .confined_high
                .iter()
                .map(|&u| cls.record_for(u).spread_degree() as i64)
                .max();
            out.push(quantify("cycle_high_root_bound", &cls.confined_high, &|u| {
                let rec = cls.record_for(u);
                let peak = max_high.expect("domain nonempty");
                let lhs = 2 * rec.spread_degree() as i64;
                let rhs = 2 * (c - 1 - rec.trivial_link_count() as i64) + 2 * peak - c;
                (lhs > rhs).then(|| {
                    json!({
                        "root": u,
                        "spread_degree": rec.spread_degree(),
                        "peak_spread_degree": peak,
                        "host_length": c,
                        "trivial_links": rec.trivial_link_count(),
                    })
                })
            }));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// The two bounds
// ---------------------------------------------------------------------------

/// Per-cycle-set evaluation of both bounds.
#[derive(Debug, Clone, Serialize)]
pub struct BoundEvaluation {
    pub vertex_set: Vec<usize>,
    pub p_bar: i64,
    pub c_bar: usize,
    pub bound1: i64,
    pub bound2: i64,
    pub slack1: i64,
    pub slack2: i64,
    pub sharp1: bool,
    pub sharp2: bool,
    pub passed1: bool,
    pub passed2: bool,
}

/// Evaluates both bounds for one longest-cycle vertex set.
pub fn evaluate_cycle_set(
    g: &Graph,
    set: &VertexSet,
    delta: usize,
    limits: &SolveLimits,
) -> Result<BoundEvaluation, SolveError> {
    let cycle_len = set.len() as i64;
    let remainder = g.remove_vertices(set).expect("set fits the graph");
    let p_bar = solve::longest_path_length(&remainder.graph, limits)?;
    // remainder cycle convention: 0 when the remainder is empty
    let c_bar = if remainder.graph.n() == 0 {
        0
    } else {
        solve::longest_cycle_length(&remainder.graph, limits)?
    };
    let d = delta as i64;
    let c = c_bar as i64;
    let bound1 = (p_bar + 2) * (d - p_bar);
    let bound2 = (c + 1) * (d - c + 1);
    let slack1 = cycle_len - bound1;
    let slack2 = cycle_len - bound2;
    Ok(BoundEvaluation {
        vertex_set: set.to_vec(),
        p_bar,
        c_bar,
        bound1,
        bound2,
        slack1,
        slack2,
        sharp1: slack1 == 0,
        sharp2: slack2 == 0,
        passed1: slack1 >= 0,
        passed2: slack2 >= 0,
    })
}

fn bound_results(
    g: &Graph,
    limits: &SolveLimits,
    name: &str,
    graph6: Option<String>,
) -> Result<Vec<CheckResult>, VerifyError> {
    if g.n() == 0 {
        return Err(VerifyError::Argument(
            "bounds are evaluated on nonempty graphs".into(),
        ));
    }
    let delta = g.min_degree().expect("nonempty graph");
    let sets = solve::all_longest_cycle_vertex_sets(g, limits)?;
    let mut out = Vec::with_capacity(sets.len());
    for set in &sets {
        let eval = evaluate_cycle_set(g, set, delta, limits)?;
        let context = CheckContext {
            graph6: graph6.clone(),
            cycle_set: Some(eval.vertex_set.clone()),
            ..CheckContext::default()
        };
        let passed = if name == "bound1" {
            eval.passed1
        } else {
            eval.passed2
        };
        let data = serde_json::to_value(&eval).expect("evaluation serializes");
        let result = if passed {
            CheckResult::passed(name, context).with_data(data)
        } else {
            CheckResult::failed(name, context, data)
        };
        out.push(result);
    }
    Ok(out)
}

/// First bound, one result per longest-cycle vertex set:
/// |C| >= (p + 2)(d - p) with p the longest path of the remainder.
/// Requires circumference at least 3.
pub fn verify_path_bound(
    g: &Graph,
    limits: &SolveLimits,
    graph6: Option<String>,
) -> Result<Vec<CheckResult>, VerifyError> {
    bound_results(g, limits, "bound1", graph6)
}

/// Second bound, one result per longest-cycle vertex set:
/// |C| >= (c + 1)(d - c + 1) with c the longest cycle of the remainder.
/// Requires circumference at least 3.
pub fn verify_cycle_bound(
    g: &Graph,
    limits: &SolveLimits,
    graph6: Option<String>,
) -> Result<Vec<CheckResult>, VerifyError> {
    bound_results(g, limits, "bound2", graph6)
}

/// Longest-cycle vertex sets of a graph with degenerate circumference:
/// every vertex for circumference 1, every adjacent pair for 2.
pub fn degenerate_cycle_sets(g: &Graph, circumference: usize) -> Vec<VertexSet> {
    match circumference {
        1 => g
            .vertices()
            .map(|v| VertexSet::from_ids(g.n(), [v]).expect("in range"))
            .collect(),
        2 => g
            .edges()
            .into_iter()
            .map(|(u, v)| VertexSet::from_ids(g.n(), [u, v]).expect("in range"))
            .collect(),
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    fn limits() -> SolveLimits {
        SolveLimits::default()
    }

    fn spread_limits() -> SpreadLimits {
        SpreadLimits::default()
    }

    fn petersen() -> Graph {
        parse_graph6("IheA@GUAo").unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    fn ctx() -> CheckContext {
        CheckContext::default()
    }

    #[test]
    fn petersen_contact_bound() {
        // remove vertex 9; its neighbors 4, 6, 7 all lie on any longest
        // cycle of the rest
        let g = petersen();
        let set = VertexSet::from_ids(10, (0..9).collect::<Vec<_>>()).unwrap();
        let _ = set;
        let witnesses = solve::longest_cycle_witnesses(&g, &limits()).unwrap();
        let cycle = witnesses
            .iter()
            .find(|c| !c.contains(9))
            .expect("some longest cycle avoids vertex 9")
            .clone();
        let base = PathSeq::new(&g, vec![9]).unwrap();
        let rooted = vec![PathSeq::new(&g, vec![9]).unwrap()];
        let cfg = ContactConfig::new(&g, cycle, base, rooted).unwrap();
        assert_eq!(cfg.contact_total(), 3);
        assert_eq!(cfg.contact_point_count(), 3);
        let res = check_contact_bound(&g, &cfg, &limits(), ctx()).unwrap();
        assert_eq!(res.status, CheckStatus::Passed);
        // girth 5 forces the three contact points to be equally spaced
        let gaps_res = check_contact_gaps(&g, &cfg, &limits(), ctx()).unwrap();
        assert_eq!(gaps_res.status, CheckStatus::Passed);
        assert_eq!(cfg.gaps, vec![3, 3, 3]);
    }

    #[test]
    fn bowtie_contact_bound_is_tight() {
        let g = bowtie();
        let cycle = CycleSeq::new(&g, vec![0, 1, 2]).unwrap();
        let base = PathSeq::new(&g, vec![3, 4]).unwrap();
        let rooted = vec![
            PathSeq::new(&g, vec![3]).unwrap(),
            PathSeq::new(&g, vec![4]).unwrap(),
        ];
        let cfg = ContactConfig::new(&g, cycle, base, rooted).unwrap();
        // both endpoints touch only the hub
        assert_eq!(cfg.contact_total(), 2);
        assert_eq!(cfg.contact_point_count(), 1);
        let res = check_contact_bound(&g, &cfg, &limits(), ctx()).unwrap();
        assert_eq!(res.status, CheckStatus::Passed);
        let gaps = check_contact_gaps(&g, &cfg, &limits(), ctx()).unwrap();
        assert_eq!(gaps.status, CheckStatus::NotApplicable);
    }

    #[test]
    fn extremal_member_contact_gaps() {
        // two hub vertices and two of the three 2-cliques form the longest
        // cycle; the leftover clique attacks both hubs with trivial paths
        let params = crate::extremal::ExtremalParams::new(2, 3).unwrap();
        let g = crate::extremal::build_extremal(&params);
        let witnesses = solve::longest_cycle_witnesses(&g, &limits()).unwrap();
        let cycle = witnesses
            .iter()
            .find(|c| !c.contains(6) && !c.contains(7))
            .expect("some longest cycle avoids the last clique")
            .clone();
        let base = PathSeq::new(&g, vec![6, 7]).unwrap();
        let rooted = vec![
            PathSeq::new(&g, vec![6]).unwrap(),
            PathSeq::new(&g, vec![7]).unwrap(),
        ];
        let cfg = ContactConfig::new(&g, cycle, base, rooted).unwrap();
        // both endpoints see exactly the two hubs
        assert_eq!(cfg.contact_total(), 4);
        assert_eq!(cfg.contact_point_count(), 2);
        let res = check_contact_bound(&g, &cfg, &limits(), ctx()).unwrap();
        assert_eq!(res.status, CheckStatus::Passed);
        // the hubs sit opposite on the 6-cycle, so both gaps are 3 and the
        // bound 2*3 >= 2 + 2 + 2 is tight
        let gaps = check_contact_gaps(&g, &cfg, &limits(), ctx()).unwrap();
        assert_eq!(gaps.status, CheckStatus::Passed);
        assert_eq!(cfg.gaps, vec![3, 3]);
    }

    #[test]
    fn empty_contact_sets_pass() {
        // triangle plus far-away path: path endpoints see no cycle vertex
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap();
        let cycle = CycleSeq::new(&g, vec![0, 1, 2]).unwrap();
        let base = PathSeq::new(&g, vec![3, 4, 5]).unwrap();
        let rooted = vec![PathSeq::new(&g, vec![3]).unwrap()];
        let cfg = ContactConfig::new(&g, cycle, base, rooted).unwrap();
        let res = check_contact_bound(&g, &cfg, &limits(), ctx()).unwrap();
        assert_eq!(res.status, CheckStatus::Passed);
    }

    #[test]
    fn contact_bound_refuses_non_longest_cycles() {
        // 4-cycle 0-1-2-3 with a pendant 4 on vertex 0 and a triangle chord
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 4)]).unwrap();
        // triangle 0-1-2 is a cycle but not longest (the 4-cycle wins)
        let cycle = CycleSeq::new(&g, vec![0, 1, 2]).unwrap();
        let base = PathSeq::new(&g, vec![4]).unwrap();
        let cfg = ContactConfig::new(&g, cycle, base.clone(), vec![base.clone()]).unwrap();
        let err = check_contact_bound(&g, &cfg, &limits(), ctx()).unwrap_err();
        assert!(matches!(err, VerifyError::Hypothesis(_)));
    }

    #[test]
    fn claw_path_host_floor() {
        // host path 1-0-2 of the star, removed set empty, minimal spreading
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let removed = VertexSet::empty(4);
        let host_path = PathSeq::new(&g, vec![1, 0, 2]).unwrap();
        let min = spreading::find_minimal_spreadings(
            &g,
            &removed,
            &Host::Path(host_path.clone()),
            MinimalityOrder::TrivialCount,
            &spread_limits(),
        )
        .unwrap();
        let res = check_path_host_floor(
            &g,
            &removed,
            &host_path,
            &min.spreadings[0],
            &limits(),
            ctx(),
        )
        .unwrap();
        assert_eq!(res.status, CheckStatus::Passed);
    }

    #[test]
    fn cycle_floor_refuses_corrupted_spreadings() {
        // two triangles, one with a pendant vertex; remove the plain one
        let g = Graph::from_edges(
            7,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (3, 6)],
        )
        .unwrap();
        let removed = VertexSet::from_ids(7, [0, 1, 2]).unwrap();
        let host = CycleSeq::new(&g, vec![3, 4, 5]).unwrap();
        let all = spreading::enumerate_spreadings(
            &g,
            &removed,
            &Host::Cycle(host.clone()),
            &spread_limits(),
        )
        .unwrap();
        // the pendant admits one extension, so the all-trivial family is
        // not minimal: passing it must be refused, not failed
        let all_trivial = all.iter().find(|s| s.trivial_count() == 3).unwrap();
        let err = check_cycle_host_floor(&g, &removed, &host, all_trivial, &limits(), ctx())
            .unwrap_err();
        assert!(matches!(err, VerifyError::Hypothesis(_)));
        // an edge of the remainder is a cycle, but not a longest one
        let short_host = CycleSeq::new(&g, vec![3, 6]).unwrap();
        let short_all = spreading::enumerate_spreadings(
            &g,
            &removed,
            &Host::Cycle(short_host.clone()),
            &spread_limits(),
        )
        .unwrap();
        let err = check_cycle_host_floor(&g, &removed, &short_host, &short_all[0], &limits(), ctx())
            .unwrap_err();
        assert!(matches!(err, VerifyError::Hypothesis(_)));
    }

    #[test]
    fn floors_refuse_uncertified_hypotheses() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let removed = VertexSet::empty(4);
        // host 1-0 is not a longest path (1-0-2 is longer)
        let short = PathSeq::new(&g, vec![1, 0]).unwrap();
        let all = spreading::enumerate_spreadings(
            &g,
            &removed,
            &Host::Path(short.clone()),
            &spread_limits(),
        )
        .unwrap();
        let err =
            check_path_host_floor(&g, &removed, &short, &all[0], &limits(), ctx()).unwrap_err();
        assert!(matches!(err, VerifyError::Hypothesis(_)));

        // non-minimal spreading over the true longest path
        let host_path = PathSeq::new(&g, vec![1, 0, 2]).unwrap();
        let all = spreading::enumerate_spreadings(
            &g,
            &removed,
            &Host::Path(host_path.clone()),
            &spread_limits(),
        )
        .unwrap();
        let all_trivial = all.iter().find(|s| s.trivial_count() == 3).unwrap();
        let err = check_path_host_floor(&g, &removed, &host_path, all_trivial, &limits(), ctx())
            .unwrap_err();
        assert!(matches!(err, VerifyError::Hypothesis(_)));
    }

    #[test]
    fn bowtie_path_mode_claims() {
        let g = bowtie();
        let cycle = CycleSeq::new(&g, vec![0, 1, 2]).unwrap();
        let removed = cycle.vertex_set(5);
        let host_path = PathSeq::new(&g, vec![3, 4]).unwrap();
        let host = Host::Path(host_path);
        let min = spreading::find_minimal_spreadings(
            &g,
            &removed,
            &host,
            MinimalityOrder::TrivialCount,
            &spread_limits(),
        )
        .unwrap();
        // the opposite edge admits only the all-trivial family
        assert_eq!(min.min_trivial, 2);
        let s = spreading::saturate(&g, &min.spreadings[0]);
        assert_eq!(s.trivial_count(), 2);
        let results = check_proof_claims(
            &g,
            &cycle,
            &host,
            &s,
            ClaimMode::Path,
            &limits(),
            &spread_limits(),
            ctx(),
        )
        .unwrap();
        assert!(results.iter().all(|r| r.status != CheckStatus::Failed));
        let trivial_bound = results
            .iter()
            .find(|r| r.name == "path_trivial_root_bound")
            .unwrap();
        assert_eq!(trivial_bound.status, CheckStatus::Passed);
    }

    #[test]
    fn bound_evaluations_on_known_graphs() {
        // complete graph on five vertices: hamiltonian, remainder empty
        let k5 = parse_graph6("D~{").unwrap();
        let r1 = verify_path_bound(&k5, &limits(), None).unwrap();
        assert_eq!(r1.len(), 1);
        assert_eq!(r1[0].status, CheckStatus::Passed);
        let data = r1[0].data.as_ref().unwrap();
        assert_eq!(data["p_bar"], -1);
        assert_eq!(data["bound1"], 5);
        assert_eq!(data["slack1"], 0);
        let r2 = verify_cycle_bound(&k5, &limits(), None).unwrap();
        assert_eq!(r2[0].data.as_ref().unwrap()["bound2"], 5);
        assert_eq!(r2[0].data.as_ref().unwrap()["c_bar"], 0);

        // bowtie: both bounds tight on each triangle
        let g = bowtie();
        for res in verify_path_bound(&g, &limits(), None).unwrap() {
            let d = res.data.as_ref().unwrap();
            assert_eq!(d["p_bar"], 1);
            assert_eq!(d["bound1"], 3);
            assert_eq!(d["sharp1"], true);
        }
        for res in verify_cycle_bound(&g, &limits(), None).unwrap() {
            let d = res.data.as_ref().unwrap();
            assert_eq!(d["c_bar"], 2);
            assert_eq!(d["bound2"], 3);
            assert_eq!(d["sharp2"], true);
        }

        // petersen: slack 3 on both bounds for every vertex set
        let p = petersen();
        for res in verify_path_bound(&p, &limits(), None).unwrap() {
            let d = res.data.as_ref().unwrap();
            assert_eq!(d["p_bar"], 0);
            assert_eq!(d["bound1"], 6);
            assert_eq!(d["slack1"], 3);
        }
        for res in verify_cycle_bound(&p, &limits(), None).unwrap() {
            let d = res.data.as_ref().unwrap();
            assert_eq!(d["c_bar"], 1);
            assert_eq!(d["bound2"], 6);
        }
    }

    #[test]
    fn degenerate_sets_enumerate_vertices_and_edges() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(degenerate_cycle_sets(&k2, 2).len(), 1);
        let edgeless = Graph::empty(3);
        assert_eq!(degenerate_cycle_sets(&edgeless, 1).len(), 3);
    }
}
