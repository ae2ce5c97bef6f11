//! Simple undirected graphs with bitset adjacency rows.

mod families;
mod graph6;
mod product;
mod recognition;

pub use families::{make_family, parse_graph_token, Family};
pub use graph6::{emit_graph6, parse_graph6, read_graph6_corpus, GRAPH6_MAX_ORDER};
pub use product::{cartesian_product, ProductGraph};
pub use recognition::{is_claw_free, is_p4_free};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = VertexSet::CAPACITY;

/// An immutable finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self {
            adj: vec![VertexSet::empty(); n],
            name: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![VertexSet::empty(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) out of range for order {}",
                    u, v, n
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {}", u)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { adj, name: None })
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if !row.is_subset(all) {
                return Err(Error::InvalidGraph(format!(
                    "row {} names a vertex >= {}",
                    v, n
                )));
            }
            if row.contains(v) {
                return Err(Error::InvalidGraph(format!("self-loop at {}", v)));
            }
            if let Some(u) = row.iter().find(|&u| !adj[u].contains(v)) {
                return Err(Error::InvalidGraph(format!("asymmetric edge {}->{}", v, u)));
            }
        }
        Ok(Self { adj, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N[S]`, the union of closed neighborhoods of `s`.
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v]))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|r| r.len()).collect();
        d.sort_unstable();
        d
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty();
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.closed_neighborhood_of(frontier).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Display label: the name if set, else the graph6 string when encodable.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => emit_graph6(self).unwrap_or_else(|_| format!("order-{}", self.order())),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Maximum degree Δ(G); zero for edgeless graphs.
pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::UnsupportedOrder {
            order: n,
            limit: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_asymmetry() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let bad = vec![VertexSet::singleton(1), VertexSet::empty()];
        assert!(Graph::from_adjacency(bad).is_err());
        assert!(Graph::empty(129).is_err());
    }

    #[test]
    fn max_degree_examples() {
        let star = make_family(Family::Star, 4).unwrap();
        assert_eq!(max_degree(&star), 3);
        assert_eq!(max_degree(&make_family(Family::Cycle, 5).unwrap()), 2);
        assert_eq!(max_degree(&make_family(Family::Complete, 1).unwrap()), 0);
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[1].to_vec(), vec![2]);
        assert!(!g.is_connected());
        assert!(make_family(Family::Path, 4).unwrap().is_connected());
        assert!(!Graph::empty(0).unwrap().is_connected());
    }
}
