//! Exact longest-path and longest-cycle computation.
//!
//! Two independent routes are kept deliberately separate: a subset dynamic
//! program over vertex bitmasks (the workhorse, exact up to `max_dp_n`
//! vertices), and a plain recursive backtracking oracle sharing no solver
//! code with the DP (capped at `max_oracle_n`). Disconnected graphs are
//! solved per connected component and the results combined.
//!
//! Length conventions: the longest path of an empty graph is -1 and of a
//! nonempty edgeless graph 0; every nonempty graph has a longest cycle of
//! length at least 1 (a vertex), and at least 2 if it has an edge. The
//! longest cycle of the empty graph is reported as 0.

use crate::graph::{CycleSeq, Graph, PathSeq, VertexSet};
use thiserror::Error;

pub const DEFAULT_MAX_DP_N: usize = 22;
pub const DEFAULT_MAX_ORACLE_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph on {n} vertices exceeds the {what} capacity limit {limit}")]
    Capacity {
        n: usize,
        limit: usize,
        what: &'static str,
    },
    #[error("circumference {0} is degenerate (< 3): no proper cycle vertex sets exist")]
    DegenerateCircumference(usize),
    #[error("oracle capacity {oracle} must not exceed dp capacity {dp}")]
    BadLimits { oracle: usize, dp: usize },
}

/// Size caps for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub max_dp_n: usize,
    pub max_oracle_n: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_dp_n: DEFAULT_MAX_DP_N,
            max_oracle_n: DEFAULT_MAX_ORACLE_N,
        }
    }
}

impl SolveLimits {
    pub fn new(max_dp_n: usize, max_oracle_n: usize) -> Result<Self, SolveError> {
        if max_oracle_n > max_dp_n {
            return Err(SolveError::BadLimits {
                oracle: max_oracle_n,
                dp: max_dp_n,
            });
        }
        Ok(SolveLimits {
            max_dp_n,
            max_oracle_n,
        })
    }

    fn check_dp(&self, n: usize) -> Result<(), SolveError> {
        if n > self.max_dp_n {
            return Err(SolveError::Capacity {
                n,
                limit: self.max_dp_n,
                what: "subset-dp",
            });
        }
        Ok(())
    }

    fn check_oracle(&self, n: usize) -> Result<(), SolveError> {
        if n > self.max_oracle_n {
            return Err(SolveError::Capacity {
                n,
                limit: self.max_oracle_n,
                what: "oracle",
            });
        }
        Ok(())
    }
}

/// Component view with local adjacency bitmasks, u32 since the DP cap is
/// far below 32 vertices.
struct Local {
    n: usize,
    adj: Vec<u32>,
    to_global: Vec<usize>,
}

fn locals(g: &Graph) -> Vec<Local> {
    g.components()
        .into_iter()
        .map(|comp| {
            let adj = comp
                .iter()
                .map(|&v| {
                    let mut mask = 0u32;
                    for w in g.neighbors(v).iter() {
                        if let Ok(i) = comp.binary_search(&w) {
                            mask |= 1 << i;
                        }
                    }
                    mask
                })
                .collect();
            Local {
                n: comp.len(),
                adj,
                to_global: comp,
            }
        })
        .collect()
}

/// Endpoint table for simple paths: `dp[mask]` holds the vertices `v` such
/// that some simple path with vertex set `mask` ends at `v`.
fn path_dp(local: &Local) -> Vec<u32> {
    let n = local.n;
    let mut dp = vec![0u32; 1 << n];
    for v in 0..n {
        dp[1 << v] = 1 << v;
    }
    for mask in 1u32..(1 << n) as u32 {
        let mut ends = dp[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut ext = local.adj[v] & !mask;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                dp[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    dp
}

/// Anchored endpoint table: `dp[mask]` holds the endpoints of simple paths
/// with vertex set `mask` that start at the minimum vertex of `mask`. Only
/// vertices above the anchor ever extend a mask, so every mask keeps a
/// well-defined anchor.
fn anchored_path_dp(local: &Local) -> Vec<u32> {
    let n = local.n;
    let mut dp = vec![0u32; 1 << n];
    for v in 0..n {
        dp[1 << v] = 1 << v;
    }
    for mask in 1u32..(1 << n) as u32 {
        let anchor = mask.trailing_zeros();
        let above = !((1u32 << anchor) | ((1 << anchor) - 1));
        let mut ends = dp[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut ext = local.adj[v] & !mask & above;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                dp[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    dp
}

fn longest_path_local(local: &Local) -> i64 {
    let dp = path_dp(local);
    let mut best = 0u32;
    for (mask, &ends) in dp.iter().enumerate() {
        if ends != 0 {
            best = best.max((mask as u32).count_ones());
        }
    }
    best as i64 - 1
}

/// Longest proper cycle length (>= 3) in the component, 0 if none.
fn longest_cycle_local(local: &Local) -> usize {
    let dp = anchored_path_dp(local);
    let mut best = 0usize;
    for (mask, &ends) in dp.iter().enumerate() {
        let size = (mask as u32).count_ones() as usize;
        if size < 3 || ends == 0 {
            continue;
        }
        let anchor = (mask as u32).trailing_zeros() as usize;
        if ends & local.adj[anchor] != 0 {
            best = best.max(size);
        }
    }
    best
}

/// All vertex sets (as local masks) of proper cycles of exactly `len`.
fn cycle_masks_local(local: &Local, dp: &[u32], len: usize) -> Vec<u32> {
    let mut out = Vec::new();
    for (mask, &ends) in dp.iter().enumerate() {
        if (mask as u32).count_ones() as usize != len || ends == 0 {
            continue;
        }
        let anchor = (mask as u32).trailing_zeros() as usize;
        if ends & local.adj[anchor] != 0 {
            out.push(mask as u32);
        }
    }
    out
}

/// Maximum length of a simple path of `g`; -1 for the empty graph.
pub fn longest_path_length(g: &Graph, limits: &SolveLimits) -> Result<i64, SolveError> {
    limits.check_dp(g.n())?;
    if g.n() == 0 {
        return Ok(-1);
    }
    Ok(locals(g)
        .iter()
        .map(longest_path_local)
        .max()
        .expect("nonempty graph has a component"))
}

/// Circumference of `g` under the degenerate conventions; 0 for the empty
/// graph.
pub fn longest_cycle_length(g: &Graph, limits: &SolveLimits) -> Result<usize, SolveError> {
    limits.check_dp(g.n())?;
    if g.n() == 0 {
        return Ok(0);
    }
    let proper = locals(g)
        .iter()
        .map(longest_cycle_local)
        .max()
        .unwrap_or(0);
    if proper >= 3 {
        Ok(proper)
    } else if g.edge_count() > 0 {
        Ok(2)
    } else {
        Ok(1)
    }
}

/// All distinct vertex sets of longest cycles, deduplicated by vertex set.
/// Requires circumference at least 3.
pub fn all_longest_cycle_vertex_sets(
    g: &Graph,
    limits: &SolveLimits,
) -> Result<Vec<VertexSet>, SolveError> {
    Ok(longest_cycle_sets_with_witnesses(g, limits)?
        .into_iter()
        .map(|(set, _)| set)
        .collect())
}

/// One witness cycle per longest-cycle vertex set, sorted by vertex set.
pub fn longest_cycle_witnesses(
    g: &Graph,
    limits: &SolveLimits,
) -> Result<Vec<CycleSeq>, SolveError> {
    Ok(longest_cycle_sets_with_witnesses(g, limits)?
        .into_iter()
        .map(|(_, cyc)| cyc)
        .collect())
}

pub fn longest_cycle_sets_with_witnesses(
    g: &Graph,
    limits: &SolveLimits,
) -> Result<Vec<(VertexSet, CycleSeq)>, SolveError> {
    limits.check_dp(g.n())?;
    let c = longest_cycle_length(g, limits)?;
    if c < 3 {
        return Err(SolveError::DegenerateCircumference(c));
    }
    let mut out: Vec<(VertexSet, CycleSeq)> = Vec::new();
    for local in locals(g) {
        if local.n < c {
            continue;
        }
        let dp = anchored_path_dp(&local);
        for mask in cycle_masks_local(&local, &dp, c) {
            let verts = reconstruct_cycle(&local, &dp, mask);
            let global: Vec<usize> = verts.iter().map(|&v| local.to_global[v]).collect();
            let set = VertexSet::from_ids(g.n(), global.iter().copied()).expect("in range");
            let cyc = CycleSeq::new(g, global).expect("dp reconstruction is a cycle");
            out.push((set, cyc));
        }
    }
    out.sort_by_key(|(set, _)| set.to_vec());
    Ok(out)
}

/// One witness path per longest-path vertex set, sorted by vertex set.
/// Empty graphs yield no witnesses.
pub fn longest_path_witnesses(g: &Graph, limits: &SolveLimits) -> Result<Vec<PathSeq>, SolveError> {
    limits.check_dp(g.n())?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let p = longest_path_length(g, limits)?;
    let size = (p + 1) as usize;
    let mut out: Vec<(Vec<usize>, PathSeq)> = Vec::new();
    for local in locals(g) {
        if local.n < size {
            continue;
        }
        let dp = path_dp(&local);
        for (mask, &ends) in dp.iter().enumerate() {
            if (mask as u32).count_ones() as usize != size || ends == 0 {
                continue;
            }
            let verts = reconstruct_path(&local, &dp, mask as u32, ends.trailing_zeros() as usize);
            let global: Vec<usize> = verts.iter().map(|&v| local.to_global[v]).collect();
            let mut key: Vec<usize> = global.clone();
            key.sort_unstable();
            let path = PathSeq::new(g, global).expect("dp reconstruction is a path");
            out.push((key, path));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, p)| p).collect())
}

/// Walks the endpoint table backwards from `(mask, end)` to the path start.
fn reconstruct_path(local: &Local, dp: &[u32], mask: u32, end: usize) -> Vec<usize> {
    let mut verts = vec![end];
    let mut mask = mask;
    let mut v = end;
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << v);
        let preds = dp[prev_mask as usize] & local.adj[v];
        debug_assert!(preds != 0, "endpoint table is closed under truncation");
        let u = preds.trailing_zeros() as usize;
        verts.push(u);
        mask = prev_mask;
        v = u;
    }
    verts.reverse();
    verts
}

fn reconstruct_cycle(local: &Local, dp: &[u32], mask: u32) -> Vec<usize> {
    let anchor = mask.trailing_zeros() as usize;
    let closing = dp[mask as usize] & local.adj[anchor];
    debug_assert!(closing != 0);
    let end = closing.trailing_zeros() as usize;
    // anchored table: every stored path starts at the anchor
    let verts = reconstruct_path(local, dp, mask, end);
    debug_assert_eq!(verts[0], anchor);
    verts
}

// ---------------------------------------------------------------------------
// Brute-force oracle. Plain recursion over visited flags; shares no tables
// or masks with the DP above.
// ---------------------------------------------------------------------------

/// Longest path length by exhaustive DFS over all simple paths.
pub fn oracle_longest_path(g: &Graph, limits: &SolveLimits) -> Result<i64, SolveError> {
    limits.check_oracle(g.n())?;
    if g.n() == 0 {
        return Ok(-1);
    }
    let mut best = 0i64;
    let mut visited = vec![false; g.n()];
    for start in g.vertices() {
        visited[start] = true;
        dfs_path(g, start, 0, &mut visited, &mut best);
        visited[start] = false;
    }
    Ok(best)
}

fn dfs_path(g: &Graph, at: usize, len: i64, visited: &mut Vec<bool>, best: &mut i64) {
    if len > *best {
        *best = len;
    }
    for w in g.neighbors(at).iter() {
        if !visited[w] {
            visited[w] = true;
            dfs_path(g, w, len + 1, visited, best);
            visited[w] = false;
        }
    }
}

/// Circumference by exhaustive DFS, applying the degenerate conventions.
pub fn oracle_longest_cycle(g: &Graph, limits: &SolveLimits) -> Result<usize, SolveError> {
    limits.check_oracle(g.n())?;
    if g.n() == 0 {
        return Ok(0);
    }
    let mut best = if g.edge_count() > 0 { 2 } else { 1 };
    let mut visited = vec![false; g.n()];
    for anchor in g.vertices() {
        visited[anchor] = true;
        dfs_cycle(g, anchor, anchor, 1, &mut visited, &mut best);
        visited[anchor] = false;
    }
    Ok(best)
}

fn dfs_cycle(
    g: &Graph,
    anchor: usize,
    at: usize,
    size: usize,
    visited: &mut Vec<bool>,
    best: &mut usize,
) {
    if size >= 3 && g.has_edge(at, anchor) && size > *best {
        *best = size;
    }
    for w in g.neighbors(at).iter() {
        // anchor each cycle at its minimum vertex
        if w > anchor && !visited[w] {
            visited[w] = true;
            dfs_cycle(g, anchor, w, size + 1, visited, best);
            visited[w] = false;
        }
    }
}
