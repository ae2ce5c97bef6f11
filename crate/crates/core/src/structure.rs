//! Cells, shared-neighbor classes, chambers, and fiber views of `G □ H`
//! relative to an ordered γ-set of `G`.
//!
//! Basis positions are 0-based: `basis[i]` is the vertex `v_i`, and every
//! index set ranges over positions, not vertex ids.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::{IndexSet, VertexSet};
use crate::domination::{domination_number, is_dominating};
use crate::error::{Error, Result};
use crate::graph::{Graph, ProductGraph};

/// Where a vertex of `G` sits relative to the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum VertexClass {
    /// The basis vertex `v_i`.
    Basis(usize),
    /// A member of `P_i`.
    Private(usize),
    /// A member of `P_S`, `|S| ≥ 2`.
    Shared(IndexSet),
}

impl VertexClass {
    /// Cell index for members of `Q_i`.
    pub fn cell(self) -> Option<usize> {
        match self {
            VertexClass::Basis(i) | VertexClass::Private(i) => Some(i),
            VertexClass::Shared(_) => None,
        }
    }

    /// Basis position protected by the dominion rule.
    pub fn dominion(self) -> Option<usize> {
        match self {
            VertexClass::Basis(i) => Some(i),
            _ => None,
        }
    }
}

impl std::fmt::Display for VertexClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VertexClass::Basis(i) => write!(f, "v{}", i),
            VertexClass::Private(i) => write!(f, "P{}", i),
            VertexClass::Shared(s) => write!(f, "P{}", s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDecomposition {
    basis: Vec<usize>,
    private: Vec<VertexSet>,
    shared: BTreeMap<IndexSet, VertexSet>,
    classes: Vec<VertexClass>,
}

#[derive(Serialize)]
struct SharedClassJson {
    indices: IndexSet,
    vertices: VertexSet,
}

#[derive(Serialize)]
pub struct DecompositionJson {
    basis: Vec<usize>,
    cells: Vec<VertexSet>,
    shared: Vec<SharedClassJson>,
}

impl CellDecomposition {
    pub fn k(&self) -> usize {
        self.basis.len()
    }

    /// `v_i` for `i` in `0..k`.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn basis_set(&self) -> VertexSet {
        self.basis.iter().collect()
    }

    pub fn private(&self, i: usize) -> VertexSet {
        self.private[i]
    }

    /// `Q_i = {v_i} ∪ P_i`.
    pub fn cell(&self, i: usize) -> VertexSet {
        self.private[i].with(self.basis[i])
    }

    /// `P_S`; empty if the class does not occur.
    pub fn shared(&self, s: IndexSet) -> VertexSet {
        self.shared.get(&s).copied().unwrap_or_default()
    }

    /// Occurring shared classes, keyed by their exact basis neighborhood.
    pub fn shared_classes(&self) -> impl Iterator<Item = (IndexSet, VertexSet)> + '_ {
        self.shared.iter().map(|(&s, &v)| (s, v))
    }

    pub fn class_of(&self, v: usize) -> VertexClass {
        self.classes[v]
    }

    pub fn all_indices(&self) -> IndexSet {
        IndexSet::full(self.k())
    }

    /// `C_I = Q_I ∪ ⋃ {P_S : S ⊆ I}`.
    pub fn chamber(&self, indices: IndexSet) -> VertexSet {
        let cells = indices
            .iter()
            .filter(|&i| i < self.k())
            .fold(VertexSet::empty(), |acc, i| acc.union(self.cell(i)));
        self.shared
            .iter()
            .filter(|(s, _)| s.is_subset(indices))
            .fold(cells, |acc, (_, &p)| acc.union(p))
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            basis: self.basis.clone(),
            cells: (0..self.k()).map(|i| self.cell(i)).collect(),
            shared: self
                .shared
                .iter()
                .map(|(&indices, &vertices)| SharedClassJson { indices, vertices })
                .collect(),
        }
    }
}

/// `chamber(dec, I)` as a free function.
pub fn chamber(dec: &CellDecomposition, indices: IndexSet) -> VertexSet {
    dec.chamber(indices)
}

/// Partitions `V(G)` by exact basis neighborhood. `basis` must be a γ-set.
pub fn decompose(g: &Graph, basis: VertexSet) -> Result<CellDecomposition> {
    if !basis.is_subset(g.vertices()) || !is_dominating(g, basis) {
        return Err(Error::ContractViolation(format!(
            "basis {} does not dominate",
            basis
        )));
    }
    let gamma = domination_number(g, None)?;
    if basis.len() != gamma {
        return Err(Error::ContractViolation(format!(
            "basis {} has size {} but γ = {}",
            basis,
            basis.len(),
            gamma
        )));
    }
    let order: Vec<usize> = basis.to_vec();
    let mut position = vec![usize::MAX; g.order()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut private = vec![VertexSet::empty(); order.len()];
    let mut shared: BTreeMap<IndexSet, VertexSet> = BTreeMap::new();
    let mut classes = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        if basis.contains(v) {
            classes.push(VertexClass::Basis(position[v]));
            continue;
        }
        let s: IndexSet = g
            .neighbors(v)
            .intersection(basis)
            .iter()
            .map(|u| position[u])
            .collect();
        let class = match s.len() {
            0 => unreachable!("basis dominates every vertex"),
            1 => {
                let i = s.first().unwrap();
                private[i].insert(v);
                VertexClass::Private(i)
            }
            _ => {
                shared.entry(s).or_default().insert(v);
                VertexClass::Shared(s)
            }
        };
        classes.push(class);
    }
    Ok(CellDecomposition {
        basis: order,
        private,
        shared,
        classes,
    })
}

/// One G-fiber's view of a dominating set of the product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberView {
    pub h: usize,
    /// `D ∩ G^h` projected to G.
    pub d_h: VertexSet,
    /// `I^h`: basis positions of vertically undominated cells.
    pub undominated: IndexSet,
    /// `ℓ_h = |I^h|`.
    pub ell: usize,
}

impl FiberView {
    /// `I_1^h`: positions of vertically dominated cells.
    pub fn dominated(&self, k: usize) -> IndexSet {
        IndexSet::full(k).difference(self.undominated)
    }
}

/// G-vertices `g` with some `(g, h')` in `d` for `h' ∈ N_H[h]`.
fn vertical_cover(prod: &ProductGraph, d: VertexSet, h: usize) -> VertexSet {
    prod.h_factor()
        .closed_neighbors(h)
        .iter()
        .fold(VertexSet::empty(), |acc, hh| {
            acc.union(prod.fiber_slice(d, hh))
        })
}

/// G-vertices of fiber `h` that are vertically undominated by `d`.
pub fn vertically_undominated_vertices(prod: &ProductGraph, d: VertexSet, h: usize) -> VertexSet {
    prod.g_factor()
        .vertices()
        .difference(vertical_cover(prod, d, h))
}

/// Fiber views for every `h ∈ V(H)`, indexed by `h`. `d` must dominate the product.
pub fn fiber_views(
    prod: &ProductGraph,
    dec: &CellDecomposition,
    d: VertexSet,
) -> Result<Vec<FiberView>> {
    if !d.is_subset(prod.graph().vertices()) || !is_dominating(prod.graph(), d) {
        return Err(Error::ContractViolation(format!(
            "{} does not dominate the product",
            d
        )));
    }
    Ok((0..prod.h_size())
        .map(|h| {
            let cover = vertical_cover(prod, d, h);
            let undominated: IndexSet = (0..dec.k())
                .filter(|&i| dec.cell(i).is_disjoint(cover))
                .collect();
            FiberView {
                h,
                d_h: prod.fiber_slice(d, h),
                undominated,
                ell: undominated.len(),
            }
        })
        .collect())
}
