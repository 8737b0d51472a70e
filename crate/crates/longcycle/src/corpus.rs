//! Corpus generation: exhaustive labeled graphs, seeded gnp and random
//! regular graphs, the extremal family, and graph files. Graphs are
//! produced on demand from their corpus index, so fixed seeds give
//! bit-identical corpora regardless of worker count.

use crate::extremal::{build_extremal, ExtremalParams};
use crate::graph::{parse_edge_list, parse_graph6, Graph};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fs;
use std::path::PathBuf;
use thiserror::Error;

/// Labeled exhaustive enumeration is capped here; beyond it the corpus
/// size no longer fits desk-scale runs.
pub const MAX_EXHAUSTIVE_N: usize = 8;

const REGULAR_MAX_ATTEMPTS: u32 = 100_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorpusError {
    #[error("exhaustive corpora support n <= {MAX_EXHAUSTIVE_N}, got {0}")]
    ExhaustiveTooLarge(usize),
    #[error("random regular graphs need d < n and even n*d, got n={n}, d={d}")]
    BadRegularParams { n: usize, d: usize },
    #[error("gnp probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("no simple regular pairing found after {REGULAR_MAX_ATTEMPTS} attempts (n={n}, d={d})")]
    RegularRejection { n: usize, d: usize },
    #[error("extremal range is empty or invalid (kappa {kappa_min}..={kappa_max}, delta {delta_min}..={delta_max})")]
    EmptyExtremalRange {
        kappa_min: usize,
        kappa_max: usize,
        delta_min: usize,
        delta_max: usize,
    },
    #[error("failed to read corpus file {path}: {msg}")]
    File { path: String, msg: String },
    #[error("corpus file {path}, entry {index}: {msg}")]
    FileEntry {
        path: String,
        index: usize,
        msg: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    /// One graph6 string per line.
    Graph6,
    /// A single edge-list graph per file.
    EdgeList,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CorpusKind {
    Exhaustive {
        n: usize,
    },
    Gnp {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    Regular {
        n: usize,
        d: usize,
        count: usize,
        seed: u64,
    },
    Extremal {
        kappa_min: usize,
        kappa_max: usize,
        delta_min: usize,
        delta_max: usize,
    },
    File {
        path: PathBuf,
        format: FileFormat,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub kind: CorpusKind,
    pub connected_only: bool,
}

impl CorpusSpec {
    pub fn is_random(&self) -> bool {
        matches!(
            self.kind,
            CorpusKind::Gnp { .. } | CorpusKind::Regular { .. }
        )
    }

    /// Short generator tag for reports.
    pub fn generator_name(&self) -> &'static str {
        match self.kind {
            CorpusKind::Exhaustive { .. } => "exhaustive",
            CorpusKind::Gnp { .. } => "gnp",
            CorpusKind::Regular { .. } => "regular",
            CorpusKind::Extremal { .. } => "extremal",
            CorpusKind::File { .. } => "file",
        }
    }

    /// Resolves the corpus: validates parameters, preloads file corpora,
    /// and fixes the total count.
    pub fn load(&self) -> Result<LoadedCorpus, CorpusError> {
        let prepared = match &self.kind {
            CorpusKind::Exhaustive { n } => {
                if *n > MAX_EXHAUSTIVE_N {
                    return Err(CorpusError::ExhaustiveTooLarge(*n));
                }
                Prepared::Exhaustive { n: *n }
            }
            CorpusKind::Gnp { n, p, count, seed } => {
                if !(0.0..=1.0).contains(p) {
                    return Err(CorpusError::BadProbability(*p));
                }
                Prepared::Gnp {
                    n: *n,
                    p: *p,
                    count: *count,
                    seed: *seed,
                }
            }
            CorpusKind::Regular { n, d, count, seed } => {
                if *d >= *n || (n * d) % 2 != 0 {
                    return Err(CorpusError::BadRegularParams { n: *n, d: *d });
                }
                Prepared::Regular {
                    n: *n,
                    d: *d,
                    count: *count,
                    seed: *seed,
                }
            }
            CorpusKind::Extremal {
                kappa_min,
                kappa_max,
                delta_min,
                delta_max,
            } => {
                let mut params = Vec::new();
                for kappa in *kappa_min..=*kappa_max {
                    for delta in *delta_min..=*delta_max {
                        if let Ok(p) = ExtremalParams::new(kappa, delta) {
                            params.push(p);
                        }
                    }
                }
                if params.is_empty() {
                    return Err(CorpusError::EmptyExtremalRange {
                        kappa_min: *kappa_min,
                        kappa_max: *kappa_max,
                        delta_min: *delta_min,
                        delta_max: *delta_max,
                    });
                }
                Prepared::Extremal { params }
            }
            CorpusKind::File { path, format } => {
                let text = fs::read_to_string(path).map_err(|e| CorpusError::File {
                    path: path.display().to_string(),
                    msg: e.to_string(),
                })?;
                let graphs = match format {
                    FileFormat::Graph6 => text
                        .lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty())
                        .enumerate()
                        .map(|(index, line)| {
                            parse_graph6(line).map_err(|e| CorpusError::FileEntry {
                                path: path.display().to_string(),
                                index,
                                msg: e.to_string(),
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                    FileFormat::EdgeList => {
                        vec![parse_edge_list(&text).map_err(|e| CorpusError::FileEntry {
                            path: path.display().to_string(),
                            index: 0,
                            msg: e.to_string(),
                        })?]
                    }
                };
                Prepared::File { graphs }
            }
        };
        Ok(LoadedCorpus {
            prepared,
            generator: self.generator_name(),
            connected_only: self.connected_only,
        })
    }
}

enum Prepared {
    Exhaustive { n: usize },
    Gnp { n: usize, p: f64, count: usize, seed: u64 },
    Regular { n: usize, d: usize, count: usize, seed: u64 },
    Extremal { params: Vec<ExtremalParams> },
    File { graphs: Vec<Graph> },
}

/// A resolved corpus: graphs are addressed by index in `0..len()`.
pub struct LoadedCorpus {
    prepared: Prepared,
    generator: &'static str,
    pub connected_only: bool,
}

/// Provenance of one corpus entry, persisted alongside violations.
#[derive(Debug, Clone, Serialize)]
pub struct OriginInfo {
    pub generator: String,
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived_seed: Option<u64>,
}

impl LoadedCorpus {
    pub fn len(&self) -> usize {
        match &self.prepared {
            Prepared::Exhaustive { n } => 1usize << (n * (n.saturating_sub(1)) / 2),
            Prepared::Gnp { count, .. } | Prepared::Regular { count, .. } => *count,
            Prepared::Extremal { params } => params.len(),
            Prepared::File { graphs } => graphs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn graph_at(&self, index: usize) -> Result<(Graph, OriginInfo), CorpusError> {
        let mut origin = OriginInfo {
            generator: self.generator.to_string(),
            index,
            seed: None,
            derived_seed: None,
        };
        let graph = match &self.prepared {
            Prepared::Exhaustive { n } => exhaustive_graph(*n, index as u64),
            Prepared::Gnp { n, p, seed, .. } => {
                let derived = derive_seed(*seed, index as u64);
                origin.seed = Some(*seed);
                origin.derived_seed = Some(derived);
                gnp_graph(*n, *p, derived)
            }
            Prepared::Regular { n, d, seed, .. } => {
                let derived = derive_seed(*seed, index as u64);
                origin.seed = Some(*seed);
                origin.derived_seed = Some(derived);
                regular_graph(*n, *d, derived)?
            }
            Prepared::Extremal { params } => build_extremal(&params[index]),
            Prepared::File { graphs } => graphs[index].clone(),
        };
        Ok((graph, origin))
    }
}

/// splitmix64 step, used to derive independent per-index seeds.
fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(index.wrapping_mul(0x9e3779b97f4a7c15))
        .wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Decodes the labeled graph with the given adjacency mask, pairs in the
/// same column-major order graph6 uses.
fn exhaustive_graph(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                g.add_edge(i, j).expect("ids in range");
            }
            bit += 1;
        }
    }
    g
}

fn gnp_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).expect("ids in range");
            }
        }
    }
    g
}

/// Random d-regular graph by the pairing model: d stubs per vertex,
/// shuffled and paired off; pairings with loops or repeated edges are
/// rejected wholesale and redrawn.
fn regular_graph(n: usize, d: usize, seed: u64) -> Result<Graph, CorpusError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| (0..d).map(move |_| v)).collect();
    for _ in 0..REGULAR_MAX_ATTEMPTS {
        shuffle(&mut stubs, &mut rng);
        let mut g = Graph::empty(n);
        let mut ok = true;
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                ok = false;
                break;
            }
            g.add_edge(u, v).expect("ids in range");
        }
        if ok {
            return Ok(g);
        }
    }
    Err(CorpusError::RegularRejection { n, d })
}

/// Fisher-Yates; spelled out so the shuffle is pinned to this crate rather
/// than to rand's evolving SliceRandom implementation.
fn shuffle<T>(items: &mut [T], rng: &mut ChaCha8Rng) {
    for i in (1..items.len()).rev() {
        let j = rng.gen_range(0..=i);
        items.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: CorpusKind) -> CorpusSpec {
        CorpusSpec {
            kind,
            connected_only: false,
        }
    }

    #[test]
    fn exhaustive_counts_match() {
        let corpus = spec(CorpusKind::Exhaustive { n: 4 }).load().unwrap();
        assert_eq!(corpus.len(), 64);
        let (empty, _) = corpus.graph_at(0).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let (full, _) = corpus.graph_at(63).unwrap();
        assert_eq!(full.edge_count(), 6);
    }

    #[test]
    fn exhaustive_cap() {
        assert!(matches!(
            spec(CorpusKind::Exhaustive { n: 9 }).load(),
            Err(CorpusError::ExhaustiveTooLarge(9))
        ));
    }

    #[test]
    fn gnp_is_reproducible_per_index() {
        let corpus = spec(CorpusKind::Gnp {
            n: 12,
            p: 0.3,
            count: 10,
            seed: 42,
        })
        .load()
        .unwrap();
        let (a, origin) = corpus.graph_at(7).unwrap();
        let (b, _) = corpus.graph_at(7).unwrap();
        assert_eq!(a, b);
        assert_eq!(origin.seed, Some(42));
        assert!(origin.derived_seed.is_some());
        let (c, _) = corpus.graph_at(8).unwrap();
        assert_ne!(a, c, "adjacent indices should almost surely differ");
    }

    #[test]
    fn regular_graphs_are_regular() {
        let corpus = spec(CorpusKind::Regular {
            n: 10,
            d: 3,
            count: 5,
            seed: 7,
        })
        .load()
        .unwrap();
        for i in 0..corpus.len() {
            let (g, _) = corpus.graph_at(i).unwrap();
            assert!(g.vertices().all(|v| g.degree(v) == 3));
        }
    }

    #[test]
    fn regular_rejects_bad_params() {
        assert!(matches!(
            spec(CorpusKind::Regular {
                n: 5,
                d: 3,
                count: 1,
                seed: 0
            })
            .load(),
            Err(CorpusError::BadRegularParams { .. })
        ));
    }

    #[test]
    fn extremal_range_enumerates_valid_pairs() {
        let corpus = spec(CorpusKind::Extremal {
            kappa_min: 1,
            kappa_max: 3,
            delta_min: 1,
            delta_max: 5,
        })
        .load()
        .unwrap();
        // kappa=1: delta 1..=5; kappa=2: delta 2..=5; kappa=3: delta 3..=5
        assert_eq!(corpus.len(), 12);
    }
}
