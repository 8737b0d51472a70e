//! Plain-text edge lists: one `u v` pair per line, 0-based, whitespace
//! separated, `#` starts a comment. An optional leading `n <count>` line
//! pins the vertex count so graphs with trailing isolated vertices survive
//! a round trip; without it the count is inferred as max id + 1.

use super::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edge list line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut saw_data = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "n" && !saw_data {
            if tokens.len() != 2 {
                return Err(EdgeListError::Parse {
                    line,
                    msg: "vertex count line must be `n <count>`".into(),
                });
            }
            declared_n = Some(tokens[1].parse().map_err(|_| EdgeListError::Parse {
                line,
                msg: format!("invalid vertex count `{}`", tokens[1]),
            })?);
            saw_data = true;
            continue;
        }
        saw_data = true;
        if tokens.len() != 2 {
            return Err(EdgeListError::Parse {
                line,
                msg: format!("expected `u v`, found `{content}`"),
            });
        }
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| EdgeListError::Parse {
                line,
                msg: format!("invalid vertex id `{t}`"),
            })
        };
        edges.push((parse(tokens[0])?, parse(tokens[1])?, line));
    }
    let inferred = edges
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let n = declared_n.unwrap_or(inferred);
    let mut g = Graph::empty(n);
    for (u, v, line) in edges {
        g.add_edge(u, v)
            .map_err(|source| EdgeListError::Graph { line, source })?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
