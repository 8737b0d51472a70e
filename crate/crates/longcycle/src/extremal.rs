//! The sharpness family: kappa + 1 disjoint cliques of size
//! delta - kappa + 1, completely joined to a hub clique of size kappa.
//! Both circumference bounds are attained with equality on it.
//!
//! Vertex layout: hubs take ids 0..kappa, then the cliques follow in
//! consecutive blocks, so reports stay readable.

use crate::graph::Graph;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("kappa must be at least 1, got {0}")]
    KappaTooSmall(usize),
    #[error("delta {delta} must be at least kappa {kappa}")]
    DeltaBelowKappa { kappa: usize, delta: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalParams {
    pub kappa: usize,
    pub delta: usize,
}

impl ExtremalParams {
    pub fn new(kappa: usize, delta: usize) -> Result<Self, ExtremalError> {
        if kappa == 0 {
            return Err(ExtremalError::KappaTooSmall(kappa));
        }
        if delta < kappa {
            return Err(ExtremalError::DeltaBelowKappa { kappa, delta });
        }
        Ok(ExtremalParams { kappa, delta })
    }

    pub fn clique_size(&self) -> usize {
        self.delta - self.kappa + 1
    }

    pub fn vertex_count(&self) -> usize {
        (self.kappa + 1) * self.clique_size() + self.kappa
    }
}

/// Closed-form predictions for the family. The circumference is a
/// prediction to be confirmed by the exact solver, not ground truth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PredictedInvariants {
    pub n: usize,
    pub delta: usize,
    pub circumference: usize,
    pub p_bar: i64,
    pub c_bar: usize,
    pub bound1: i64,
    pub bound2: i64,
}

pub fn build_extremal(params: &ExtremalParams) -> Graph {
    let kappa = params.kappa;
    let s = params.clique_size();
    let n = params.vertex_count();
    let mut g = Graph::empty(n);
    for u in 0..kappa {
        for v in u + 1..kappa {
            g.add_edge(u, v).expect("hub ids in range");
        }
    }
    for block in 0..=kappa {
        let base = kappa + block * s;
        for i in 0..s {
            for j in i + 1..s {
                g.add_edge(base + i, base + j).expect("clique ids in range");
            }
            for hub in 0..kappa {
                g.add_edge(hub, base + i).expect("join ids in range");
            }
        }
    }
    g
}

/// A longest cycle alternates hubs with full traversals of kappa cliques,
/// so the remainder of any longest cycle is one untouched clique; its
/// longest path has delta - kappa edges and it is a cycle of length
/// delta - kappa + 1 under the degenerate conventions. Both bounds then
/// evaluate to kappa (delta - kappa + 2), the predicted circumference.
pub fn predicted_invariants(params: &ExtremalParams) -> PredictedInvariants {
    let kappa = params.kappa as i64;
    let delta = params.delta as i64;
    let s = params.clique_size() as i64;
    let p_bar = delta - kappa;
    let c_bar = s as usize;
    let circumference = (kappa * (delta - kappa + 2)) as usize;
    PredictedInvariants {
        n: params.vertex_count(),
        delta: params.delta,
        circumference,
        p_bar,
        c_bar,
        bound1: (p_bar + 2) * (delta - p_bar),
        bound2: (c_bar as i64 + 1) * (delta - c_bar as i64 + 1),
    }
}

/// All parameter pairs with `1 <= kappa <= delta` whose predicted vertex
/// count stays within `max_n`, in lexicographic order.
pub fn params_up_to(max_n: usize) -> Vec<ExtremalParams> {
    let mut out = Vec::new();
    for kappa in 1..=max_n {
        let smallest = ExtremalParams { kappa, delta: kappa };
        if smallest.vertex_count() > max_n {
            break;
        }
        for delta in kappa..=max_n {
            let p = ExtremalParams { kappa, delta };
            if p.vertex_count() > max_n {
                break;
            }
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_is_the_smallest_proper_member() {
        let p = ExtremalParams::new(1, 2).unwrap();
        let g = build_extremal(&p);
        assert_eq!(g.n(), 5);
        let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 2, 4]);
        let pred = predicted_invariants(&p);
        assert_eq!(pred.circumference, 3);
        assert_eq!((pred.p_bar, pred.c_bar), (1, 2));
        assert_eq!((pred.bound1, pred.bound2), (3, 3));
    }

    #[test]
    fn hub_heavy_member() {
        let p = ExtremalParams::new(2, 3).unwrap();
        let g = build_extremal(&p);
        assert_eq!(g.n(), 8);
        assert_eq!(g.degree(0), 7);
        assert_eq!(g.degree(2), 3);
        assert_eq!(g.min_degree().unwrap(), 3);
        let pred = predicted_invariants(&p);
        assert_eq!(pred.circumference, 6);
        assert_eq!((pred.bound1, pred.bound2), (6, 6));
    }

    #[test]
    fn complete_split_graph_when_kappa_equals_delta() {
        let p = ExtremalParams::new(3, 3).unwrap();
        assert_eq!(p.clique_size(), 1);
        let g = build_extremal(&p);
        assert_eq!(g.n(), 7);
        // four independent vertices joined to a triangle
        assert_eq!(g.degree(3), 3);
        assert!(!g.has_edge(3, 4));
        let pred = predicted_invariants(&p);
        assert_eq!(pred.circumference, 6);
        assert_eq!((pred.p_bar, pred.c_bar), (0, 1));
    }

    #[test]
    fn parameter_validation() {
        assert!(ExtremalParams::new(0, 3).is_err());
        assert!(ExtremalParams::new(4, 3).is_err());
    }

    #[test]
    fn param_enumeration_reaches_desk_scale() {
        let params = params_up_to(20);
        assert!(params.len() >= 12, "expected at least 12 pairs, got {}", params.len());
        assert!(params.iter().all(|p| p.vertex_count() <= 20));
        assert!(params.contains(&ExtremalParams { kappa: 1, delta: 2 }));
        assert!(params.contains(&ExtremalParams { kappa: 2, delta: 7 }));
    }

    #[test]
    fn min_degree_matches_delta() {
        for p in params_up_to(16) {
            let g = build_extremal(&p);
            assert_eq!(g.min_degree().unwrap(), p.delta, "params {p:?}");
        }
    }
}
