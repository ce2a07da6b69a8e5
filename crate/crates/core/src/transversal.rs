//! Minimal transversals of a hypergraph.
//!
//! Branch-and-bound: repeatedly pick the unhit edge with the fewest admissible
//! vertices and branch on each of them, excluding the vertices already tried
//! in earlier sibling branches. A branch is cut as soon as some chosen vertex
//! has lost every private edge, since private edges only shrink as the set
//! grows. Leaves pass an explicit inclusion-minimality check.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// All inclusion-minimal sets meeting every edge, sorted lexicographically.
///
/// An empty edge makes the hypergraph untransversable and yields no sets; an
/// empty edge list yields the single empty transversal.
pub fn minimal_transversals(edges: &[VertexSet], cap: usize) -> Result<Vec<VertexSet>> {
    if edges.iter().any(|e| e.is_empty()) {
        return Ok(Vec::new());
    }
    let mut search = Search {
        edges,
        cap,
        out: Vec::new(),
    };
    search.run(VertexSet::EMPTY, VertexSet::EMPTY)?;
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// `true` iff `t` meets every edge and no vertex of `t` can be dropped.
pub fn is_minimal_transversal(edges: &[VertexSet], t: VertexSet) -> bool {
    edges.iter().all(|e| e.intersects(t)) && t.iter().all(|v| has_private_edge(edges, t, v))
}

fn has_private_edge(edges: &[VertexSet], t: VertexSet, v: usize) -> bool {
    let single = VertexSet::singleton(v);
    edges.iter().any(|e| e.intersection(t) == single)
}

struct Search<'a> {
    edges: &'a [VertexSet],
    cap: usize,
    out: Vec<VertexSet>,
}

impl Search<'_> {
    fn run(&mut self, chosen: VertexSet, excluded: VertexSet) -> Result<()> {
        if chosen
            .iter()
            .any(|v| !has_private_edge(self.edges, chosen, v))
        {
            return Ok(());
        }
        let mut best: Option<VertexSet> = None;
        for e in self.edges {
            if e.intersects(chosen) {
                continue;
            }
            let avail = e.difference(excluded);
            if avail.is_empty() {
                return Ok(());
            }
            if best.is_none_or(|b| avail.len() < b.len()) {
                best = Some(avail);
            }
        }
        let Some(branch) = best else {
            if is_minimal_transversal(self.edges, chosen) {
                if self.out.len() >= self.cap {
                    return Err(Error::CapExceeded {
                        what: "minimal transversal enumeration",
                        cap: self.cap,
                    });
                }
                self.out.push(chosen);
            }
            return Ok(());
        };
        let mut tried = excluded;
        for v in branch {
            self.run(chosen.with(v), tried)?;
            tried.insert(v);
        }
        Ok(())
    }
}
