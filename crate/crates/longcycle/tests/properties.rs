//! Property tests: format round trips, solver invariants, and the
//! structural guarantees of spreading enumeration, cross-checked against a
//! brute-force family enumerator that shares no code with the production
//! path.

use longcycle::graph::{
    parse_edge_list, parse_graph6, to_edge_list, to_graph6, Graph, PathSeq, VertexSet,
};
use longcycle::solve::{
    longest_cycle_length, longest_path_length, oracle_longest_cycle, oracle_longest_path,
    SolveLimits,
};
use longcycle::spreading::{
    classify, enumerate_spreadings, min_trivial_roots, Host, SpreadLimits, Spreading,
};
use proptest::prelude::*;

/// Arbitrary labeled graph on up to `max_n` vertices, edges drawn per
/// upper-triangle slot.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), bits)).prop_map(move |(n, mask)| {
            let mut g = Graph::empty(n);
            let mut bit = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask[bit] {
                        g.add_edge(i, j).unwrap();
                    }
                    bit += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let encoded = to_graph6(&g);
        let decoded = parse_graph6(&encoded).unwrap();
        prop_assert_eq!(&decoded, &g);
        prop_assert_eq!(to_graph6(&decoded), encoded);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        let text = to_edge_list(&g);
        let decoded = parse_edge_list(&text).unwrap();
        prop_assert_eq!(decoded, g);
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(12)) {
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn dp_matches_oracle(g in arb_graph(8)) {
        let limits = SolveLimits::default();
        prop_assert_eq!(
            longest_path_length(&g, &limits).unwrap(),
            oracle_longest_path(&g, &limits).unwrap()
        );
        prop_assert_eq!(
            longest_cycle_length(&g, &limits).unwrap(),
            oracle_longest_cycle(&g, &limits).unwrap()
        );
    }

    #[test]
    fn adding_an_edge_never_shrinks_path_or_cycle(
        g in arb_graph(9),
        pick in any::<u64>(),
    ) {
        let limits = SolveLimits::default();
        let non_edges: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|u| ((u + 1)..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[pick as usize % non_edges.len()];
        let mut bigger = g.clone();
        bigger.add_edge(u, v).unwrap();
        prop_assert!(
            longest_path_length(&bigger, &limits).unwrap()
                >= longest_path_length(&g, &limits).unwrap()
        );
        prop_assert!(
            longest_cycle_length(&bigger, &limits).unwrap()
                >= longest_cycle_length(&g, &limits).unwrap()
        );
    }

    #[test]
    fn cycle_conventions_follow_edges(g in arb_graph(8)) {
        let limits = SolveLimits::default();
        let c = longest_cycle_length(&g, &limits).unwrap();
        if g.n() == 0 {
            prop_assert_eq!(c, 0);
        } else if g.edge_count() == 0 {
            prop_assert_eq!(c, 1);
        } else {
            prop_assert!(c >= 2);
        }
    }
}

// ---------------------------------------------------------------------------
// Spreading enumeration against an independent brute-force oracle
// ---------------------------------------------------------------------------

/// All simple paths from `root` inside `allowed` (which excludes every
/// other host vertex), by plain recursion on vertex lists.
fn brute_paths_from(g: &Graph, root: usize, allowed: &[usize]) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, allowed: &[usize], out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        for &w in allowed {
            if !path.contains(&w) && g.has_edge(last, w) {
                path.push(w);
                extend(g, path, allowed, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, &mut vec![root], allowed, &mut out);
    out
}

/// Cartesian product of per-root path choices, filtered to pairwise
/// disjoint families. Exponential, test-only.
fn brute_spreading_count(g: &Graph, removed: &VertexSet, hosts: &[usize]) -> usize {
    let pool: Vec<usize> = g
        .vertices()
        .filter(|&v| !removed.contains(v) && !hosts.contains(&v))
        .collect();
    let choices: Vec<Vec<Vec<usize>>> = hosts
        .iter()
        .map(|&r| brute_paths_from(g, r, &pool))
        .collect();
    fn count(choices: &[Vec<Vec<usize>>], used: &mut Vec<usize>) -> usize {
        match choices.split_first() {
            None => 1,
            Some((first, rest)) => {
                let mut total = 0;
                for path in first {
                    if path[1..].iter().any(|v| used.contains(v)) {
                        continue;
                    }
                    let added = path.len() - 1;
                    used.extend(&path[1..]);
                    total += count(rest, used);
                    used.truncate(used.len() - added);
                }
                total
            }
        }
    }
    count(&choices, &mut Vec::new())
}

/// Host path drawn from the graph: a greedy walk from a seed vertex.
fn host_path_in(g: &Graph, seed: usize) -> Option<PathSeq> {
    if g.n() == 0 {
        return None;
    }
    let mut at = seed % g.n();
    let mut verts = vec![at];
    loop {
        let next = g.neighbors(at).iter().find(|w| !verts.contains(w));
        match next {
            Some(w) => {
                verts.push(w);
                at = w;
            }
            None => break,
        }
    }
    PathSeq::new(g, verts).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spreading_enumeration_matches_brute_force(g in arb_graph(7), seed in any::<usize>()) {
        let Some(host_path) = host_path_in(&g, seed) else { return Ok(()); };
        let removed = VertexSet::empty(g.n());
        let host = Host::Path(host_path.clone());
        let all = enumerate_spreadings(&g, &removed, &host, &SpreadLimits::default()).unwrap();
        let brute = brute_spreading_count(&g, &removed, host_path.vertices());
        prop_assert_eq!(all.len(), brute);

        // structural invariants on every family
        let host_set = host_path.vertex_set(g.n());
        for s in &all {
            let total: usize = s.paths().iter().map(|p| p.len()).sum();
            prop_assert_eq!(s.vertex_set(g.n()).len(), total, "paths overlap");
            for path in s.paths() {
                prop_assert_eq!(host_set.intersect_count(&path_set(&g, path)), 1,
                    "path meets the host beyond its root");
            }
            let cls = classify(&g, s);
            let (reverse, forward) = cls.link_sums();
            prop_assert_eq!(reverse, forward, "link double count");
        }

        // the all-trivial family is always present, exactly once
        let trivial: Vec<&Spreading> = all
            .iter()
            .filter(|s| s.trivial_count() == host_path.vertex_count())
            .collect();
        prop_assert_eq!(trivial.len(), 1);

        // the matching bound equals the enumerated minimum
        let min_enum = all.iter().map(|s| s.trivial_count()).min().unwrap();
        prop_assert_eq!(min_trivial_roots(&g, &removed, &host).unwrap(), min_enum);
    }
}

fn path_set(g: &Graph, path: &[usize]) -> VertexSet {
    VertexSet::from_ids(g.n(), path.iter().copied()).unwrap()
}
