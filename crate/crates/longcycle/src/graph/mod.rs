//! Immutable simple graphs with per-vertex bitset adjacency, induced
//! subgraphs carrying id mappings back to the original graph, and oriented
//! path/cycle sequences with the degenerate length conventions.

mod edgelist;
mod graph6;

pub use edgelist::{parse_edge_list, to_edge_list, EdgeListError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};

use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("minimum degree is undefined for the empty graph")]
    EmptyGraph,
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {0} repeats in the sequence")]
    RepeatedVertex(usize),
    #[error("a cycle needs at least one vertex")]
    EmptyCycle,
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("segment queries need a cycle on at least 3 vertices, got {0}")]
    DegenerateSegment(usize),
}

const WORD_BITS: usize = 64;

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the vertices `0..n` of a fixed graph, stored as a bitset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(n: usize, ids: I) -> Result<Self, GraphError> {
        let mut s = Self::empty(n);
        for v in ids {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Number of vertices of the underlying graph, not the set size.
    pub fn capacity(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Iterates set members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_vertex(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn intersect_count(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `V - s`, with mappings between surviving original
    /// ids and the dense ids of the result.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        if s.capacity() != self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: s.capacity(),
                n: self.n,
            });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !s.contains(v)).collect();
        let mut from_original = vec![None; self.n];
        for (local, &orig) in keep.iter().enumerate() {
            from_original[orig] = Some(local);
        }
        let mut graph = Graph::empty(keep.len());
        for (lu, &u) in keep.iter().enumerate() {
            for v in self.adj[u].iter() {
                if v > u {
                    if let Some(lv) = from_original[v] {
                        graph.add_edge(lu, lv)?;
                    }
                }
            }
        }
        Ok(InducedSubgraph {
            graph,
            to_original: keep,
            from_original,
        })
    }

    /// Connected components as ascending vertex lists, ordered by minimum
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in self.adj[v].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

/// Result of deleting a vertex set: the induced subgraph plus the bijection
/// between its dense ids and the surviving original ids.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_original[local] = original`, ascending.
    pub to_original: Vec<usize>,
    /// `from_original[original] = Some(local)` for surviving vertices.
    pub from_original: Vec<Option<usize>>,
}

impl InducedSubgraph {
    pub fn original_id(&self, local: usize) -> usize {
        self.to_original[local]
    }

    pub fn local_id(&self, original: usize) -> Option<usize> {
        self.from_original.get(original).copied().flatten()
    }
}

/// An oriented simple path given by its vertex sequence; may be empty.
///
/// The length is the edge count, with the convention that the empty path
/// has length -1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PathSeq {
    verts: Vec<usize>,
}

impl PathSeq {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, GraphError> {
        let mut seen = VertexSet::empty(g.n());
        for &v in &verts {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if seen.contains(v) {
                return Err(GraphError::RepeatedVertex(v));
            }
            seen.insert(v);
        }
        for w in verts.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::NotAdjacent(w[0], w[1]));
            }
        }
        Ok(PathSeq { verts })
    }

    pub fn empty() -> Self {
        PathSeq { verts: Vec::new() }
    }

    /// Edge count; -1 for the empty path.
    pub fn length(&self) -> i64 {
        self.verts.len() as i64 - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn first(&self) -> Option<usize> {
        self.verts.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.verts.last().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_ids(n, self.verts.iter().copied()).expect("path vertices in range")
    }

    pub fn reversed(&self) -> PathSeq {
        let mut verts = self.verts.clone();
        verts.reverse();
        PathSeq { verts }
    }
}

impl fmt::Debug for PathSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path{:?}", self.verts)
    }
}

/// An oriented cycle given by its cyclic vertex sequence.
///
/// Degenerate sizes follow the cycle conventions: a single vertex is a
/// cycle of length 1 and an adjacent pair is a cycle of length 2. For three
/// or more vertices the sequence must be cyclically adjacent, and the length
/// equals the vertex count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleSeq {
    verts: Vec<usize>,
}

impl CycleSeq {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, GraphError> {
        if verts.is_empty() {
            return Err(GraphError::EmptyCycle);
        }
        let mut seen = VertexSet::empty(g.n());
        for &v in &verts {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if seen.contains(v) {
                return Err(GraphError::RepeatedVertex(v));
            }
            seen.insert(v);
        }
        match verts.len() {
            1 => {}
            2 => {
                if !g.has_edge(verts[0], verts[1]) {
                    return Err(GraphError::NotAdjacent(verts[0], verts[1]));
                }
            }
            k => {
                for i in 0..k {
                    let (u, v) = (verts[i], verts[(i + 1) % k]);
                    if !g.has_edge(u, v) {
                        return Err(GraphError::NotAdjacent(u, v));
                    }
                }
            }
        }
        Ok(CycleSeq { verts })
    }

    /// Cycle length; equals the vertex count under the degenerate
    /// conventions.
    pub fn length(&self) -> usize {
        self.verts.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.verts.iter().position(|&x| x == v)
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_ids(n, self.verts.iter().copied()).expect("cycle vertices in range")
    }

    /// Number of edges traversed from `u` to `v` along the orientation;
    /// zero when `u == v`. Requires a cycle on at least 3 vertices.
    pub fn segment_length(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        if self.verts.len() < 3 {
            return Err(GraphError::DegenerateSegment(self.verts.len()));
        }
        let pu = self.position(u).ok_or(GraphError::NotOnCycle(u))?;
        let pv = self.position(v).ok_or(GraphError::NotOnCycle(v))?;
        let k = self.verts.len();
        Ok((pv + k - pu) % k)
    }
}

impl fmt::Debug for CycleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.verts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn cycle_graph(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path_graph(n: usize) -> Graph {
        Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    /// Two triangles sharing vertex 0.
    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for g in [k(4), bowtie(), path_graph(6), cycle_graph(5)] {
            let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(k(4).min_degree().unwrap(), 3);
        assert_eq!(path_graph(3).min_degree().unwrap(), 1);
        assert_eq!(bowtie().min_degree().unwrap(), 2);
        assert_eq!(Graph::empty(0).min_degree(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn remove_vertices_clique() {
        let g = k(4);
        let s = VertexSet::from_ids(4, [0]).unwrap();
        let sub = g.remove_vertices(&s).unwrap();
        assert_eq!(sub.graph, k(3));
        assert_eq!(sub.to_original, vec![1, 2, 3]);
        assert_eq!(sub.local_id(2), Some(1));
        assert_eq!(sub.local_id(0), None);
    }

    #[test]
    fn remove_nothing_is_identity() {
        let g = bowtie();
        let sub = g.remove_vertices(&VertexSet::empty(5)).unwrap();
        assert_eq!(sub.graph, g);
        assert_eq!(sub.to_original, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn five_cycle_minus_vertex_is_path() {
        let g = cycle_graph(5);
        let s = VertexSet::from_ids(5, [2]).unwrap();
        let sub = g.remove_vertices(&s).unwrap();
        // local ids 0,1,2,3 = original 0,1,3,4; edges 01,23,30
        assert_eq!(sub.graph.edge_count(), 3);
        let mut degs: Vec<usize> = sub.graph.vertices().map(|v| sub.graph.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }

    #[test]
    fn path_seq_conventions() {
        let g = path_graph(3);
        assert_eq!(PathSeq::empty().length(), -1);
        assert_eq!(PathSeq::new(&g, vec![1]).unwrap().length(), 0);
        assert_eq!(PathSeq::new(&g, vec![0, 1, 2]).unwrap().length(), 2);
        assert_eq!(
            PathSeq::new(&g, vec![0, 2]),
            Err(GraphError::NotAdjacent(0, 2))
        );
        assert_eq!(
            PathSeq::new(&g, vec![0, 1, 0]),
            Err(GraphError::RepeatedVertex(0))
        );
    }

    #[test]
    fn cycle_seq_conventions() {
        let g = bowtie();
        assert_eq!(CycleSeq::new(&g, vec![3]).unwrap().length(), 1);
        assert_eq!(CycleSeq::new(&g, vec![3, 4]).unwrap().length(), 2);
        assert_eq!(CycleSeq::new(&g, vec![0, 1, 2]).unwrap().length(), 3);
        assert_eq!(CycleSeq::new(&g, vec![]), Err(GraphError::EmptyCycle));
        assert_eq!(
            CycleSeq::new(&g, vec![1, 3]),
            Err(GraphError::NotAdjacent(1, 3))
        );
        // 1-2-3 is not cyclically adjacent (3 not adjacent to 1)
        assert!(CycleSeq::new(&g, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn segment_lengths_on_six_cycle() {
        let g = cycle_graph(6);
        let c = CycleSeq::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c.segment_length(0, 3).unwrap(), 3);
        assert_eq!(c.segment_length(0, 0).unwrap(), 0);
        assert_eq!(c.segment_length(4, 1).unwrap(), 3);
        assert_eq!(c.segment_length(0, 6), Err(GraphError::NotOnCycle(6)));
        // consecutive segments sum to the cycle length
        let marks = [1, 3, 4];
        let total: usize = (0..marks.len())
            .map(|i| {
                c.segment_length(marks[i], marks[(i + 1) % marks.len()])
                    .unwrap()
            })
            .sum();
        assert_eq!(total, c.length());
        let degen = CycleSeq::new(&g, vec![0, 1]).unwrap();
        assert_eq!(
            degen.segment_length(0, 1),
            Err(GraphError::DegenerateSegment(2))
        );
    }

    #[test]
    fn vertex_set_ops() {
        let mut a = VertexSet::empty(70);
        a.insert(0);
        a.insert(65);
        a.insert(3);
        assert_eq!(a.to_vec(), vec![0, 3, 65]);
        assert_eq!(a.len(), 3);
        let b = VertexSet::from_ids(70, [3, 65, 69]).unwrap();
        assert_eq!(a.intersect_count(&b), 2);
        assert!(!a.is_subset_of(&b));
        assert_eq!(a.difference(&b).to_vec(), vec![0]);
        a.remove(0);
        assert!(a.is_subset_of(&b));
        assert_eq!(a.min_vertex(), Some(3));
    }
}
