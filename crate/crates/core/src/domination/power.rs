//! Allegiance, power, and `[1,k]`-domination.

use serde::Serialize;

use super::{domination_number, is_dominating, DominatingSetsOfSize};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Every γ-set of `g` in lexicographic order.
pub fn enumerate_gamma_sets(g: &Graph) -> Result<DominatingSetsOfSize<'_>> {
    let gamma = domination_number(g, None)?;
    Ok(DominatingSetsOfSize::new(g, gamma))
}

/// `a_G(D) = max_v |D ∩ N[v]|` over all vertices, closed neighborhoods.
pub fn allegiance(g: &Graph, d: VertexSet) -> Result<usize> {
    if !d.is_subset(g.vertices()) || !is_dominating(g, d) {
        return Err(Error::ContractViolation(format!(
            "{} does not dominate the graph",
            d
        )));
    }
    Ok((0..g.order())
        .map(|v| g.closed_neighbors(v).intersection(d).len())
        .max()
        .unwrap_or(0))
}

/// A minimum-allegiance γ-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerWitness {
    pub power: usize,
    pub witness: VertexSet,
}

/// π(G): the minimum allegiance over all γ-sets, with the lexicographically
/// least witness. Stops early once allegiance 1 is seen.
pub fn power_closed(g: &Graph) -> Result<PowerWitness> {
    g.require_connected()?;
    let mut best: Option<PowerWitness> = None;
    for d in enumerate_gamma_sets(g)? {
        let a = allegiance(g, d)?;
        if best.is_none_or(|b| a < b.power) {
            best = Some(PowerWitness {
                power: a,
                witness: d,
            });
            if a == 1 {
                break;
            }
        }
    }
    best.ok_or_else(|| Error::ContractViolation("graph has no γ-set".into()))
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        Err(Error::InvalidArgument("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// True iff every vertex outside `s` has between 1 and `k` open neighbors in `s`.
pub fn is_1k_set(g: &Graph, s: VertexSet, k: usize) -> Result<bool> {
    check_k(k)?;
    if !s.is_subset(g.vertices()) {
        return Err(Error::InvalidArgument(format!(
            "{} is not a vertex subset",
            s
        )));
    }
    Ok(g.vertices().difference(s).iter().all(|v| {
        let c = g.neighbors(v).intersection(s).len();
        (1..=k).contains(&c)
    }))
}

fn has_1k_set_of_size(g: &Graph, k: usize, size: usize) -> bool {
    // A [1,k]-set dominates, so only dominating sets need checking.
    DominatingSetsOfSize::new(g, size).any(|s| is_1k_set(g, s, k).expect("k validated by caller"))
}

/// γ_{[1,k]}(G), the minimum size of a `[1,k]`-set.
pub fn gamma_1k(g: &Graph, k: usize) -> Result<usize> {
    check_k(k)?;
    let gamma = domination_number(g, None)?;
    Ok((gamma..=g.order())
        .find(|&size| has_1k_set_of_size(g, k, size))
        .unwrap_or(g.order()))
}

/// Smallest `k ≥ 1` with γ_{[1,k]}(G) = γ(G).
pub fn power_open(g: &Graph) -> Result<usize> {
    g.require_connected()?;
    let gamma = domination_number(g, None)?;
    // γ_{[1,k]} ≥ γ always, so equality means some γ-set is a [1,k]-set.
    Ok((1..=g.order().max(1))
        .find(|&k| has_1k_set_of_size(g, k, gamma))
        .unwrap_or(g.order()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerReport {
    pub gamma: usize,
    pub num_gamma_sets: usize,
    /// Lexicographically least γ-set of minimum allegiance.
    pub witness_set: VertexSet,
    pub allegiance_of_witness: usize,
    pub power_closed: usize,
    pub power_open: usize,
    pub agree: bool,
    pub max_degree: usize,
}

pub fn power_report(g: &Graph) -> Result<PowerReport> {
    let pw = power_closed(g)?;
    let num_gamma_sets = enumerate_gamma_sets(g)?.count();
    let open = power_open(g)?;
    Ok(PowerReport {
        gamma: pw.witness.len(),
        num_gamma_sets,
        witness_set: pw.witness,
        allegiance_of_witness: pw.power,
        power_closed: pw.power,
        power_open: open,
        agree: open == pw.power,
        max_degree: g.max_degree(),
    })
}
