//! Exact minimum dominating set by branch and bound.

use std::time::{Duration, Instant};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// True iff `N[s]` covers every vertex of `g`.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood_of(s) == g.vertices()
}

/// Greedy dominating set: repeatedly take the vertex covering the most
/// undominated vertices, lowest id on ties.
pub fn greedy_dominating_set(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let mut chosen = VertexSet::empty();
    let mut covered = VertexSet::empty();
    while covered != all {
        let undominated = all.difference(covered);
        let best = (0..g.order())
            .max_by_key(|&v| {
                (
                    g.closed_neighbors(v).intersection(undominated).len(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("nonempty graph has a vertex");
        chosen.insert(best);
        covered = covered.union(g.closed_neighbors(best));
    }
    chosen
}

struct Search<'g> {
    g: &'g Graph,
    all: VertexSet,
    best: VertexSet,
    nodes: u64,
    deadline: Option<(Instant, Duration)>,
    root_lower: usize,
}

impl Search<'_> {
    /// `ceil(|undominated| / max gain)` over vertices still allowed.
    fn lower_bound(&self, undominated: VertexSet, allowed: VertexSet) -> Option<usize> {
        let gain = allowed
            .iter()
            .map(|v| self.g.closed_neighbors(v).intersection(undominated).len())
            .max()
            .unwrap_or(0);
        if gain == 0 {
            return None;
        }
        Some(undominated.len().div_ceil(gain))
    }

    fn check_budget(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some((deadline, budget)) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::Timeout {
                        budget,
                        lower: self.root_lower,
                        upper: self.best.len(),
                    });
                }
            }
        }
        Ok(())
    }

    fn branch(&mut self, chosen: VertexSet, covered: VertexSet, excluded: VertexSet) -> Result<()> {
        self.check_budget()?;
        if covered == self.all {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return Ok(());
        }
        let undominated = self.all.difference(covered);
        let allowed = self.all.difference(excluded).difference(chosen);
        let Some(lb) = self.lower_bound(undominated, allowed) else {
            return Ok(());
        };
        if chosen.len() + lb >= self.best.len() {
            return Ok(());
        }
        // Undominated vertex with the fewest remaining candidate dominators.
        let mut pick = None;
        for v in undominated.iter() {
            let cands = self.g.closed_neighbors(v).intersection(allowed);
            if cands.is_empty() {
                return Ok(());
            }
            if pick.is_none_or(|(_, c): (usize, VertexSet)| cands.len() < c.len()) {
                pick = Some((v, cands));
            }
        }
        let (_, cands) = pick.expect("undominated set is nonempty");
        let mut order: Vec<usize> = cands.to_vec();
        order.sort_by_key(|&u| {
            std::cmp::Reverse(self.g.closed_neighbors(u).intersection(undominated).len())
        });
        let mut excluded = excluded;
        for u in order {
            self.branch(
                chosen.with(u),
                covered.union(self.g.closed_neighbors(u)),
                excluded,
            )?;
            excluded.insert(u);
        }
        Ok(())
    }
}

/// A minimum dominating set of `g`. Disconnected graphs are fine.
///
/// Returns [`Error::Timeout`] carrying the best bounds if `budget` elapses.
pub fn minimum_dominating_set(g: &Graph, budget: Option<Duration>) -> Result<VertexSet> {
    let all = g.vertices();
    if g.order() == 0 {
        return Ok(VertexSet::empty());
    }
    let mut search = Search {
        g,
        all,
        best: greedy_dominating_set(g),
        nodes: 0,
        deadline: budget.map(|b| (Instant::now() + b, b)),
        root_lower: 0,
    };
    search.root_lower = search.lower_bound(all, all).unwrap_or(0);
    search.branch(VertexSet::empty(), VertexSet::empty(), VertexSet::empty())?;
    Ok(search.best)
}

/// A dominating set whose size is known to equal γ of its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimumDominatingSet(VertexSet);

impl MinimumDominatingSet {
    pub fn compute(g: &Graph, budget: Option<Duration>) -> Result<Self> {
        minimum_dominating_set(g, budget).map(Self)
    }

    /// Accepts `s` only if it dominates `g` and no smaller set does.
    pub fn verify(g: &Graph, s: VertexSet) -> Result<Self> {
        if !s.is_subset(g.vertices()) || !is_dominating(g, s) {
            return Err(Error::ContractViolation(format!("{} does not dominate", s)));
        }
        let gamma = domination_number(g, None)?;
        if s.len() != gamma {
            return Err(Error::ContractViolation(format!(
                "{} has size {} but γ = {}",
                s,
                s.len(),
                gamma
            )));
        }
        Ok(Self(s))
    }

    pub fn set(self) -> VertexSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

/// γ(G), the domination number.
pub fn domination_number(g: &Graph, budget: Option<Duration>) -> Result<usize> {
    minimum_dominating_set(g, budget).map(|s| s.len())
}
