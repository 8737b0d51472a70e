//! Spreadings: families of pairwise vertex-disjoint paths, one rooted at
//! each vertex of a fixed host path or cycle, all avoiding a removed vertex
//! set. The module enumerates them, minimizes the number of trivial
//! (single-vertex) paths, saturates path endpoints, and classifies roots by
//! where their endpoint's neighborhood lands.
//!
//! Terminology used by the checkers:
//! * a root is *trivial* when its path is a single vertex;
//! * a nontrivial root is *confined* when every neighbor of its path
//!   endpoint inside the whole family lies on its own path, and *crossing*
//!   otherwise;
//! * the *spread neighbors* / *removed neighbors* of a root are the
//!   endpoint's neighbors inside the family's vertex set and inside the
//!   removed set;
//! * the *trivial links* of a nontrivial root are the trivial roots
//!   adjacent to its path's second vertex; the *reverse links* of a trivial
//!   root are the nontrivial roots whose second vertex it is adjacent to.

use crate::graph::{CycleSeq, Graph, PathSeq, VertexSet};
use crate::matching::max_bipartite_matching;
use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_MAX_STATES: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpreadError {
    #[error("spreading enumeration exceeded {limit} states after {produced} spreadings")]
    Budget { limit: u64, produced: u64 },
    #[error("host vertex {0} lies in the removed set")]
    HostMeetsRemoved(usize),
    #[error("host must have at least one vertex")]
    EmptyHost,
    #[error("removed set capacity {got} does not match graph order {expected}")]
    WrongCapacity { got: usize, expected: usize },
    #[error("invalid spreading: {0}")]
    InvalidSpreading(String),
}

/// Enumeration budget, counted in visited partial states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpreadLimits {
    pub max_states: u64,
}

impl Default for SpreadLimits {
    fn default() -> Self {
        SpreadLimits {
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

/// The host structure a spreading is rooted on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Host {
    Path(PathSeq),
    Cycle(CycleSeq),
}

impl Host {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Host::Path(p) => p.vertices(),
            Host::Cycle(c) => c.vertices(),
        }
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, Host::Cycle(_))
    }

    /// Host length under the shared conventions: edge count for paths,
    /// vertex count for cycles.
    pub fn length(&self) -> i64 {
        match self {
            Host::Path(p) => p.length(),
            Host::Cycle(c) => c.length() as i64,
        }
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_ids(n, self.vertices().iter().copied()).expect("host vertices in range")
    }
}

/// A family of pairwise disjoint paths, one per host vertex, each starting
/// at its root and avoiding the removed set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spreading {
    removed: VertexSet,
    host_is_cycle: bool,
    /// `paths[i][0]` is the i-th host vertex.
    paths: Vec<Vec<usize>>,
}

impl Spreading {
    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn removed(&self) -> &VertexSet {
        &self.removed
    }

    pub fn host_is_cycle(&self) -> bool {
        self.host_is_cycle
    }

    pub fn host_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.paths.iter().map(|p| p[0])
    }

    /// Host length under the shared conventions.
    pub fn host_length(&self) -> i64 {
        if self.host_is_cycle {
            self.paths.len() as i64
        } else {
            self.paths.len() as i64 - 1
        }
    }

    pub fn trivial_count(&self) -> usize {
        self.paths.iter().filter(|p| p.len() == 1).count()
    }

    /// Union of all path vertex sets.
    pub fn vertex_set(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::empty(n);
        for path in &self.paths {
            for &v in path {
                s.insert(v);
            }
        }
        s
    }

    pub fn path_for(&self, root: usize) -> Option<&[usize]> {
        self.paths
            .iter()
            .find(|p| p[0] == root)
            .map(|p| p.as_slice())
    }
}

/// Validates that `s` is a spreading of `host` in `g` minus `removed`:
/// paths rooted in host order, pairwise disjoint, edges present, avoiding
/// the removed set and meeting the host only at their roots.
pub fn validate_spreading(
    g: &Graph,
    removed: &VertexSet,
    host: &Host,
    s: &Spreading,
) -> Result<(), SpreadError> {
    let err = |msg: String| Err(SpreadError::InvalidSpreading(msg));
    let hosts = host.vertices();
    if s.paths.len() != hosts.len() {
        return err(format!(
            "expected {} rooted paths, found {}",
            hosts.len(),
            s.paths.len()
        ));
    }
    let host_set = host.vertex_set(g.n());
    let mut used = VertexSet::empty(g.n());
    for (i, path) in s.paths.iter().enumerate() {
        if path.is_empty() || path[0] != hosts[i] {
            return err(format!("path {i} is not rooted at host vertex {}", hosts[i]));
        }
        for (k, &v) in path.iter().enumerate() {
            if v >= g.n() {
                return err(format!("vertex {v} out of range"));
            }
            if removed.contains(v) {
                return err(format!("path {i} enters the removed set at {v}"));
            }
            if k > 0 && host_set.contains(v) {
                return err(format!("path {i} meets the host beyond its root at {v}"));
            }
            if used.contains(v) {
                return err(format!("vertex {v} is used by two paths"));
            }
            used.insert(v);
            if k > 0 && !g.has_edge(path[k - 1], v) {
                return err(format!("{} and {v} are not adjacent", path[k - 1]));
            }
        }
    }
    Ok(())
}

fn check_inputs(g: &Graph, removed: &VertexSet, host: &Host) -> Result<(), SpreadError> {
    if removed.capacity() != g.n() {
        return Err(SpreadError::WrongCapacity {
            got: removed.capacity(),
            expected: g.n(),
        });
    }
    if host.vertices().is_empty() {
        return Err(SpreadError::EmptyHost);
    }
    for &v in host.vertices() {
        if removed.contains(v) {
            return Err(SpreadError::HostMeetsRemoved(v));
        }
    }
    Ok(())
}

struct Enumerator<'a, F: FnMut(&Spreading)> {
    g: &'a Graph,
    hosts: &'a [usize],
    removed: &'a VertexSet,
    host_is_cycle: bool,
    pool: VertexSet,
    paths: Vec<Vec<usize>>,
    states: u64,
    limit: u64,
    produced: u64,
    emit: F,
}

impl<'a, F: FnMut(&Spreading)> Enumerator<'a, F> {
    fn place(&mut self, i: usize) -> Result<(), SpreadError> {
        if i == self.hosts.len() {
            let s = Spreading {
                removed: self.removed.clone(),
                host_is_cycle: self.host_is_cycle,
                paths: self.paths.clone(),
            };
            (self.emit)(&s);
            self.produced += 1;
            return Ok(());
        }
        self.paths.push(vec![self.hosts[i]]);
        let result = self.extend(i);
        self.paths.pop();
        result
    }

    /// Accepts the current path for root `i`, then tries every one-vertex
    /// extension in ascending order.
    fn extend(&mut self, i: usize) -> Result<(), SpreadError> {
        self.states += 1;
        if self.states > self.limit {
            return Err(SpreadError::Budget {
                limit: self.limit,
                produced: self.produced,
            });
        }
        self.place(i + 1)?;
        let last = *self.paths[i].last().expect("path is nonempty");
        let candidates: Vec<usize> = self
            .g
            .neighbors(last)
            .iter()
            .filter(|&w| self.pool.contains(w))
            .collect();
        for w in candidates {
            self.pool.remove(w);
            self.paths[i].push(w);
            self.extend(i)?;
            self.paths[i].pop();
            self.pool.insert(w);
        }
        Ok(())
    }
}

/// Streams every spreading of `host` in `g` minus `removed` exactly once,
/// in lexicographic order of path extensions. The all-trivial spreading is
/// always first. Returns the number produced.
pub fn for_each_spreading<F: FnMut(&Spreading)>(
    g: &Graph,
    removed: &VertexSet,
    host: &Host,
    limits: &SpreadLimits,
    emit: F,
) -> Result<u64, SpreadError> {
    check_inputs(g, removed, host)?;
    let host_set = host.vertex_set(g.n());
    let mut pool = VertexSet::full(g.n());
    for v in removed.iter() {
        pool.remove(v);
    }
    for v in host_set.iter() {
        pool.remove(v);
    }
    let mut en = Enumerator {
        g,
        hosts: host.vertices(),
        removed,
        host_is_cycle: host.is_cycle(),
        pool,
        paths: Vec::with_capacity(host.vertices().len()),
        states: 0,
        limit: limits.max_states,
        produced: 0,
        emit,
    };
    en.place(0)?;
    Ok(en.produced)
}

pub fn enumerate_spreadings(
    g: &Graph,
    removed: &VertexSet,
    host: &Host,
    limits: &SpreadLimits,
) -> Result<Vec<Spreading>, SpreadError> {
    let mut out = Vec::new();
    for_each_spreading(g, removed, host, limits, |s| out.push(s.clone()))?;
    Ok(out)
}

/// Minimum number of trivial roots over all spreadings, computed without
/// enumeration: truncating every nontrivial path to its first edge keeps
/// the trivial set, so the minimum is the host size minus a maximum
/// matching between host vertices and the off-host pool.
pub fn min_trivial_roots(
    g: &Graph,
    removed: &VertexSet,
    host: &Host,
) -> Result<usize, SpreadError> {
    check_inputs(g, removed, host)?;
    let hosts = host.vertices();
    let host_set = host.vertex_set(g.n());
    let mut pool_ids: Vec<usize> = Vec::new();
    let mut pool_index = vec![usize::MAX; g.n()];
    for v in g.vertices() {
        if !removed.contains(v) && !host_set.contains(v) {
            pool_index[v] = pool_ids.len();
            pool_ids.push(v);
        }
    }
    let adj: Vec<Vec<usize>> = hosts
        .iter()
        .map(|&u| {
            g.neighbors(u)
                .iter()
                .filter(|&w| pool_index[w] != usize::MAX)
                .map(|w| pool_index[w])
                .collect()
        })
        .collect();
    let matched = max_bipartite_matching(hosts.len(), pool_ids.len(), &adj);
    Ok(hosts.len() - matched)
}

/// Which minimum a spreading search targets: fewest trivial roots, or
/// additionally fewest confined roots among those.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityOrder {
    TrivialCount,
    TrivialThenConfined,
}

#[derive(Debug, Clone)]
pub struct MinimalSpreadings {
    pub spreadings: Vec<Spreading>,
    pub min_trivial: usize,
    /// Populated for the two-level order.
    pub min_confined: Option<usize>,
}

/// All spreadings achieving the minimality order. The reported trivial
/// minimum always equals `min_trivial_roots`.
pub fn find_minimal_spreadings(
    g: &Graph,
    removed: &VertexSet,
    host: &Host,
    order: MinimalityOrder,
    limits: &SpreadLimits,
) -> Result<MinimalSpreadings, SpreadError> {
    let mut best: Option<usize> = None;
    let mut kept: Vec<Spreading> = Vec::new();
    for_each_spreading(g, removed, host, limits, |s| {
        let t = s.trivial_count();
        match best {
            Some(b) if t > b => {}
            Some(b) if t == b => kept.push(s.clone()),
            _ => {
                best = Some(t);
                kept.clear();
                kept.push(s.clone());
            }
        }
    })?;
    let min_trivial = best.expect("at least the all-trivial spreading exists");
    debug_assert_eq!(min_trivial, min_trivial_roots(g, removed, host)?);
    let min_confined = match order {
        MinimalityOrder::TrivialCount => None,
        MinimalityOrder::TrivialThenConfined => {
            let counts: Vec<usize> = kept
                .iter()
                .map(|s| classify(g, s).confined.len())
                .collect();
            let min = counts.iter().copied().min().expect("nonempty");
            kept = kept
                .into_iter()
                .zip(counts)
                .filter(|(_, c)| *c == min)
                .map(|(s, _)| s)
                .collect();
            Some(min)
        }
    };
    Ok(MinimalSpreadings {
        spreadings: kept,
        min_trivial,
        min_confined,
    })
}

/// Extends paths whose endpoint still has a neighbor outside the family and
/// the removed set, one vertex at a time, until no endpoint does. Sweeps
/// roots in host order and always grabs the smallest eligible neighbor, so
/// the result is deterministic. Never increases the number of trivial
/// roots.
pub fn saturate(g: &Graph, s: &Spreading) -> Spreading {
    let mut paths = s.paths.clone();
    let mut covered = s.vertex_set(g.n());
    covered.union_with(&s.removed);
    loop {
        let mut changed = false;
        for path in paths.iter_mut() {
            loop {
                let end = *path.last().expect("path is nonempty");
                let next = g.neighbors(end).iter().find(|&w| !covered.contains(w));
                match next {
                    Some(w) => {
                        covered.insert(w);
                        path.push(w);
                        changed = true;
                    }
                    None => break,
                }
            }
        }
        if !changed {
            break;
        }
    }
    Spreading {
        removed: s.removed.clone(),
        host_is_cycle: s.host_is_cycle,
        paths,
    }
}

/// True when no path endpoint has a neighbor outside the family and the
/// removed set; then every endpoint degree splits as spread degree plus
/// removed degree.
pub fn is_saturated(g: &Graph, s: &Spreading) -> bool {
    let mut covered = s.vertex_set(g.n());
    covered.union_with(&s.removed);
    s.paths.iter().all(|p| {
        let end = *p.last().expect("path is nonempty");
        g.neighbors(end).is_subset_of(&covered)
    })
}

/// Per-root classification data.
#[derive(Debug, Clone, Serialize)]
pub struct RootRecord {
    pub root: usize,
    /// Last vertex of the root's path (the root itself when trivial).
    pub endpoint: usize,
    /// Second vertex of the path, when nontrivial.
    pub successor: Option<usize>,
    /// Endpoint neighbors inside the family's vertex set.
    pub spread_neighbors: VertexSet,
    /// Endpoint neighbors inside the removed set.
    pub removed_neighbors: VertexSet,
    /// Trivial roots adjacent to this root's successor (empty when trivial).
    pub trivial_links: Vec<usize>,
    /// For trivial roots: nontrivial roots whose successor this root is
    /// adjacent to.
    pub reverse_links: Option<Vec<usize>>,
}

impl RootRecord {
    pub fn spread_degree(&self) -> usize {
        self.spread_neighbors.len()
    }

    pub fn removed_degree(&self) -> usize {
        self.removed_neighbors.len()
    }

    pub fn trivial_link_count(&self) -> usize {
        self.trivial_links.len()
    }

    pub fn reverse_link_count(&self) -> usize {
        self.reverse_links.as_ref().map_or(0, |v| v.len())
    }
}

/// Root classification of a spreading.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub trivial: Vec<usize>,
    pub nontrivial: Vec<usize>,
    pub confined: Vec<usize>,
    pub crossing: Vec<usize>,
    /// Cycle hosts only: confined roots whose doubled spread degree is at
    /// most the host length.
    pub confined_low: Vec<usize>,
    /// Cycle hosts only: the remaining confined roots.
    pub confined_high: Vec<usize>,
    /// One record per root, in host order.
    pub records: Vec<RootRecord>,
}

impl Classification {
    pub fn record_for(&self, root: usize) -> &RootRecord {
        self.records
            .iter()
            .find(|r| r.root == root)
            .expect("root belongs to the host")
    }

    /// Both sides of the link double count: the sum of reverse links over
    /// trivial roots and of trivial links over nontrivial roots both count
    /// adjacent (trivial root, successor) pairs.
    pub fn link_sums(&self) -> (usize, usize) {
        let reverse: usize = self.records.iter().map(|r| r.reverse_link_count()).sum();
        let forward: usize = self
            .records
            .iter()
            .filter(|r| r.successor.is_some())
            .map(|r| r.trivial_link_count())
            .sum();
        (reverse, forward)
    }
}

pub fn classify(g: &Graph, s: &Spreading) -> Classification {
    let family = s.vertex_set(g.n());
    let trivial_set: Vec<usize> = s
        .paths
        .iter()
        .filter(|p| p.len() == 1)
        .map(|p| p[0])
        .collect();
    let mut records = Vec::with_capacity(s.paths.len());
    for path in &s.paths {
        let root = path[0];
        let endpoint = *path.last().expect("path is nonempty");
        let successor = path.get(1).copied();
        let spread_neighbors = g.neighbors(endpoint).intersection(&family);
        let removed_neighbors = g.neighbors(endpoint).intersection(&s.removed);
        let trivial_links = match successor {
            Some(succ) => trivial_set
                .iter()
                .copied()
                .filter(|&v| g.has_edge(v, succ))
                .collect(),
            None => Vec::new(),
        };
        let reverse_links = if successor.is_none() {
            Some(
                s.paths
                    .iter()
                    .filter(|p| p.len() > 1 && g.has_edge(root, p[1]))
                    .map(|p| p[0])
                    .collect(),
            )
        } else {
            None
        };
        records.push(RootRecord {
            root,
            endpoint,
            successor,
            spread_neighbors,
            removed_neighbors,
            trivial_links,
            reverse_links,
        });
    }
    let mut trivial = Vec::new();
    let mut nontrivial = Vec::new();
    let mut confined = Vec::new();
    let mut crossing = Vec::new();
    let mut confined_low = Vec::new();
    let mut confined_high = Vec::new();
    for (path, rec) in s.paths.iter().zip(&records) {
        if rec.successor.is_none() {
            trivial.push(rec.root);
            continue;
        }
        nontrivial.push(rec.root);
        let own = VertexSet::from_ids(g.n(), path.iter().copied()).expect("in range");
        if rec.spread_neighbors.is_subset_of(&own) {
            confined.push(rec.root);
            if s.host_is_cycle {
                if 2 * rec.spread_degree() <= s.paths.len() {
                    confined_low.push(rec.root);
                } else {
                    confined_high.push(rec.root);
                }
            }
        } else {
            crossing.push(rec.root);
        }
    }
    Classification {
        trivial,
        nontrivial,
        confined,
        crossing,
        confined_low,
        confined_high,
        records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// Star on 4 vertices: center 0, leaves 1, 2, 3.
    fn claw() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn path_host(g: &Graph, verts: Vec<usize>) -> Host {
        Host::Path(PathSeq::new(g, verts).unwrap())
    }

    fn no_removed(g: &Graph) -> VertexSet {
        VertexSet::empty(g.n())
    }

    #[test]
    fn claw_has_exactly_two_spreadings() {
        // host 1-0-2, pool {3}: the all-trivial family and the one where
        // the center extends into the free leaf
        let g = claw();
        let host = path_host(&g, vec![1, 0, 2]);
        let all =
            enumerate_spreadings(&g, &no_removed(&g), &host, &SpreadLimits::default()).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].trivial_count(), 3);
        assert_eq!(all[1].trivial_count(), 2);
        assert_eq!(all[1].path_for(0).unwrap(), &[0, 3]);
    }

    #[test]
    fn host_covering_everything_leaves_only_the_trivial_spreading() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let host = path_host(&g, vec![0, 1, 2]);
        let all =
            enumerate_spreadings(&g, &no_removed(&g), &host, &SpreadLimits::default()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].trivial_count(), 3);
    }

    #[test]
    fn bowtie_opposite_edge_is_all_trivial() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let removed = VertexSet::from_ids(5, [0, 1, 2]).unwrap();
        let host = path_host(&g, vec![3, 4]);
        let all = enumerate_spreadings(&g, &removed, &host, &SpreadLimits::default()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].trivial_count(), 2);
    }

    #[test]
    fn matching_bound_examples() {
        let g = claw();
        let host = path_host(&g, vec![1, 0, 2]);
        assert_eq!(min_trivial_roots(&g, &no_removed(&g), &host).unwrap(), 2);

        // one root on a 6-cycle can always extend
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let host = path_host(&c6, vec![0]);
        assert_eq!(min_trivial_roots(&c6, &no_removed(&c6), &host).unwrap(), 0);

        // host covering the whole graph cannot extend at all
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let host = path_host(&p3, vec![0, 1, 2]);
        assert_eq!(min_trivial_roots(&p3, &no_removed(&p3), &host).unwrap(), 3);
    }

    #[test]
    fn minimal_spreadings_match_the_matching_bound() {
        let g = claw();
        let host = path_host(&g, vec![1, 0, 2]);
        let min = find_minimal_spreadings(
            &g,
            &no_removed(&g),
            &host,
            MinimalityOrder::TrivialCount,
            &SpreadLimits::default(),
        )
        .unwrap();
        assert_eq!(min.min_trivial, 2);
        assert_eq!(min.spreadings.len(), 1);
        assert_eq!(min.spreadings[0].path_for(0).unwrap(), &[0, 3]);
    }

    #[test]
    fn saturation_extends_and_reports_the_degree_split() {
        let g = claw();
        let host = path_host(&g, vec![1, 0, 2]);
        let all =
            enumerate_spreadings(&g, &no_removed(&g), &host, &SpreadLimits::default()).unwrap();
        let trivial = &all[0];
        assert_eq!(trivial.trivial_count(), 3);
        let sat = saturate(&g, trivial);
        assert_eq!(sat.trivial_count(), 2);
        assert!(is_saturated(&g, &sat));
        // fixpoint
        assert_eq!(saturate(&g, &sat), sat);
        // endpoint degree splits over spread and removed neighbors
        let cls = classify(&g, &sat);
        for rec in &cls.records {
            assert_eq!(
                g.degree(rec.endpoint),
                rec.spread_degree() + rec.removed_degree()
            );
        }
    }

    #[test]
    fn classification_of_the_claw_minimal_spreading() {
        let g = claw();
        let host = path_host(&g, vec![1, 0, 2]);
        let min = find_minimal_spreadings(
            &g,
            &no_removed(&g),
            &host,
            MinimalityOrder::TrivialCount,
            &SpreadLimits::default(),
        )
        .unwrap();
        let cls = classify(&g, &min.spreadings[0]);
        assert_eq!(cls.trivial, vec![1, 2]);
        assert_eq!(cls.confined, vec![0]);
        assert!(cls.crossing.is_empty());
        let center = cls.record_for(0);
        assert_eq!(center.endpoint, 3);
        assert_eq!(center.spread_neighbors.to_vec(), vec![0]);
        assert_eq!(center.trivial_link_count(), 0);
        let (reverse, forward) = cls.link_sums();
        assert_eq!(reverse, forward);
    }

    #[test]
    fn budget_exhaustion_reports_partial_count() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let host = path_host(&g, vec![1, 0]);
        let err = enumerate_spreadings(&g, &no_removed(&g), &host, &SpreadLimits { max_states: 3 })
            .unwrap_err();
        assert!(matches!(err, SpreadError::Budget { limit: 3, .. }));
    }

    #[test]
    fn validation_rejects_broken_families() {
        let g = claw();
        let host = path_host(&g, vec![1, 0, 2]);
        let removed = no_removed(&g);
        let good = Spreading {
            removed: removed.clone(),
            host_is_cycle: false,
            paths: vec![vec![1], vec![0, 3], vec![2]],
        };
        assert!(validate_spreading(&g, &removed, &host, &good).is_ok());
        let overlapping = Spreading {
            removed: removed.clone(),
            host_is_cycle: false,
            paths: vec![vec![1], vec![0, 3], vec![2, 3]],
        };
        assert!(validate_spreading(&g, &removed, &host, &overlapping).is_err());
        let wrong_root = Spreading {
            removed: removed.clone(),
            host_is_cycle: false,
            paths: vec![vec![1], vec![3, 0], vec![2]],
        };
        assert!(validate_spreading(&g, &removed, &host, &wrong_root).is_err());
    }
}
