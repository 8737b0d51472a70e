//! Hopcroft-Karp maximum matching for bipartite graphs given as an
//! adjacency list from the left side.

const UNMATCHED: usize = usize::MAX;

pub(crate) fn max_bipartite_matching(left: usize, right: usize, adj: &[Vec<usize>]) -> usize {
    debug_assert_eq!(adj.len(), left);
    let mut match_left = vec![UNMATCHED; left];
    let mut match_right = vec![UNMATCHED; right];
    let mut size = 0;
    loop {
        // BFS layering from free left vertices
        let mut dist = vec![usize::MAX; left];
        let mut queue: Vec<usize> = Vec::new();
        for u in 0..left {
            if match_left[u] == UNMATCHED {
                dist[u] = 0;
                queue.push(u);
            }
        }
        let mut found_free = false;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &v in &adj[u] {
                let next = match_right[v];
                if next == UNMATCHED {
                    found_free = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[u] + 1;
                    queue.push(next);
                }
            }
        }
        if !found_free {
            return size;
        }
        // DFS augmenting along the layering
        for u in 0..left {
            if match_left[u] == UNMATCHED
                && augment(u, adj, &mut match_left, &mut match_right, &mut dist)
            {
                size += 1;
            }
        }
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        let next = match_right[v];
        if next == UNMATCHED
            || (dist[next] == dist[u].wrapping_add(1)
                && augment(next, adj, match_left, match_right, dist))
        {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}
