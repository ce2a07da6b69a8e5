//! Finite simple graphs on `1..=n`, path squares and domination.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::io;
use crate::transversal::minimal_transversals;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        self.adj[u - 1].insert(v);
        self.adj[v - 1].insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        (1..=self.n)
            .flat_map(|u| {
                self.adj[u - 1]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v - 1])
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        Ok(self.neighbors(v)?.with(v))
    }

    pub fn closed_neighborhoods(&self) -> Vec<VertexSet> {
        (1..=self.n).map(|v| self.adj[v - 1].with(v)).collect()
    }

    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.closed_neighborhoods()
            .iter()
            .all(|nb| nb.intersects(s))
    }

    /// Parse the `n <N>` / `u v` edge-list format.
    pub fn parse(text: &str) -> Result<Self> {
        let (n, recs) = io::header(text)?;
        let mut g = Graph::empty(n)?;
        for rec in recs {
            let [u, v] = rec.tokens.as_slice() else {
                return Err(Error::Parse {
                    line: rec.line,
                    msg: "expected `u v`".into(),
                });
            };
            let (u, v) = (io::parse_usize(u, rec.line)?, io::parse_usize(v, rec.line)?);
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line: rec.line,
                msg: e.to_string(),
            })?;
        }
        Ok(g)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

/// `P_n`: vertices `1..=n`, edges `{i, i+1}`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("path graph needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))
}

/// Same vertices, plus an edge between every pair at distance exactly 2.
pub fn graph_square(g: &Graph) -> Graph {
    let mut adj = g.adj.clone();
    for v in 1..=g.n {
        let two_step = g.adj[v - 1]
            .iter()
            .fold(VertexSet::EMPTY, |acc, u| acc.union(g.adj[u - 1]));
        adj[v - 1] = adj[v - 1].union(two_step.without(v));
    }
    Graph { n: g.n, adj }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationSummary {
    /// Domination number.
    pub gamma: usize,
    /// Largest size of a minimal dominating set.
    pub gamma_prime: usize,
    pub minimal_sets: Vec<VertexSet>,
}

/// Every inclusion-minimal dominating set, as minimal transversals of `{N[v]}`.
pub fn minimal_dominating_sets(g: &Graph, cap: usize) -> Result<DominationSummary> {
    let minimal_sets = minimal_transversals(&g.closed_neighborhoods(), cap)?;
    let gamma = minimal_sets.iter().map(|s| s.len()).min().unwrap_or(0);
    let gamma_prime = minimal_sets.iter().map(|s| s.len()).max().unwrap_or(0);
    Ok(DominationSummary {
        gamma,
        gamma_prime,
        minimal_sets,
    })
}
