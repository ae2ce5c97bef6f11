use super::{Graph, MAX_ORDER};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// `G □ H` with its coordinate maps. Vertex `(g, h)` has index `h * |G| + g`,
/// so each G-fiber `G^h` is a contiguous block.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    base: Graph,
    g: Graph,
    h: Graph,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.base
    }

    pub fn g_factor(&self) -> &Graph {
        &self.g
    }

    pub fn h_factor(&self) -> &Graph {
        &self.h
    }

    pub fn g_size(&self) -> usize {
        self.g.order()
    }

    pub fn h_size(&self) -> usize {
        self.h.order()
    }

    #[inline]
    pub fn coord(&self, v: usize) -> (usize, usize) {
        (v % self.g_size(), v / self.g_size())
    }

    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        h * self.g_size() + g
    }

    /// Product vertices of the fiber `G^h`.
    pub fn fiber(&self, h: usize) -> VertexSet {
        let n = self.g_size();
        VertexSet::from_bits(VertexSet::full(n).bits() << (h * n))
    }

    /// `D ∩ G^h` projected to G.
    pub fn fiber_slice(&self, d: VertexSet, h: usize) -> VertexSet {
        let n = self.g_size();
        VertexSet::from_bits((d.bits() >> (h * n)) & VertexSet::full(n).bits())
    }

    /// Lifts a set of G-vertices into the fiber `G^h`.
    pub fn lift(&self, s: VertexSet, h: usize) -> VertexSet {
        VertexSet::from_bits(s.bits() << (h * self.g_size()))
    }
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::InvalidArgument(
            "product factors must be nonempty".into(),
        ));
    }
    let order = g.order() * h.order();
    if order > MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order,
            limit: MAX_ORDER,
        });
    }
    let n = g.order();
    let mut edges = Vec::with_capacity(g.edge_count() * h.order() + h.edge_count() * n);
    for hv in 0..h.order() {
        edges.extend(g.edges().map(|(a, b)| (hv * n + a, hv * n + b)));
    }
    for gv in 0..n {
        edges.extend(h.edges().map(|(a, b)| (a * n + gv, b * n + gv)));
    }
    let name = format!("{}□{}", g.label(), h.label());
    let base = Graph::from_edges(order, edges)?.with_name(name);
    Ok(ProductGraph {
        base,
        g: g.clone(),
        h: h.clone(),
    })
}
