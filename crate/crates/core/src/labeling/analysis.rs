//! Multi-label analysis per fiber, the two claims, projection domination,
//! and the label histogram.

use serde::Serialize;

use super::Labeling;
use crate::bitset::{IndexSet, VertexSet};
use crate::domination::is_dominating;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::set_cover::min_set_cover;
use crate::Rational;

/// Labels with more than one element in one fiber, and the minimum
/// extension set over their chamber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiLabelAnalysis {
    pub h: usize,
    /// `S_1^h` as G-vertices, ascending.
    pub s1: Vec<usize>,
    /// Label sizes `m_i`, aligned with `s1`.
    pub m: Vec<usize>,
    /// `J_1^h`, the union of those labels.
    pub j1: IndexSet,
    /// `C_{J_1^h}` as G-vertices.
    pub chamber: VertexSet,
    /// `D_1^h = D^h − C_{J_1^h}`.
    pub d1: VertexSet,
    /// A minimum `E ⊆ D_1^h` with `(D^h ∩ C) ∪ E` dominating `C` in `G^h`;
    /// absent when `D^h` does not dominate `C` at all.
    pub e: Option<VertexSet>,
    /// Whether `D^h` dominates `C_{J_1^h}`.
    pub claim1: bool,
}

impl MultiLabelAnalysis {
    pub fn s(&self) -> usize {
        self.s1.len()
    }

    /// `Σ (m_i − 1)`.
    pub fn excess(&self) -> usize {
        self.m.iter().map(|m| m - 1).sum()
    }
}

/// `|E| ≥ Σ (m_i − 1)`; false when no extension set exists.
pub fn verify_claim2(analysis: &MultiLabelAnalysis) -> bool {
    analysis.e.is_some_and(|e| e.len() >= analysis.excess())
}

impl Labeling<'_> {
    fn check_row(&self, h: usize) -> Result<()> {
        if h >= self.rows.len() {
            Err(Error::InvalidArgument(format!("row {} out of range", h)))
        } else {
            Ok(())
        }
    }

    fn multi_labels(&self, h: usize) -> (Vec<usize>, Vec<usize>, IndexSet) {
        let mut s1 = Vec::new();
        let mut m = Vec::new();
        let mut j1 = IndexSet::empty();
        for e in self.row(h).filter(|e| e.label.len() > 1) {
            s1.push(e.g);
            m.push(e.label.len());
            j1 = j1.union(e.label);
        }
        (s1, m, j1)
    }

    /// Whether `D^h` dominates `C_{J_1^h}` inside the fiber.
    pub fn verify_claim1(&self, h: usize) -> Result<bool> {
        self.check_row(h)?;
        let (_, _, j1) = self.multi_labels(h);
        let chamber = self.dec.chamber(j1);
        let covered = self
            .prod
            .g_factor()
            .closed_neighborhood_of(self.fibers[h].d_h);
        Ok(chamber.is_subset(covered))
    }

    pub fn analyze_fiber(&self, h: usize) -> Result<MultiLabelAnalysis> {
        self.check_row(h)?;
        let g = self.prod.g_factor();
        let (s1, m, j1) = self.multi_labels(h);
        let chamber = self.dec.chamber(j1);
        let d_h = self.fibers[h].d_h;
        let inside = d_h.intersection(chamber);
        let d1 = d_h.difference(inside);
        let claim1 = chamber.is_subset(g.closed_neighborhood_of(d_h));
        let e = claim1.then(|| {
            let universe = chamber.difference(g.closed_neighborhood_of(inside));
            let candidates: Vec<usize> = d1.to_vec();
            let sets: Vec<VertexSet> = candidates
                .iter()
                .map(|&u| g.closed_neighbors(u).intersection(universe))
                .collect();
            min_set_cover(universe, &sets)
                .expect("D^h dominates the chamber")
                .into_iter()
                .map(|i| candidates[i])
                .collect()
        });
        Ok(MultiLabelAnalysis {
            h,
            s1,
            m,
            j1,
            chamber,
            d1,
            e,
            claim1,
        })
    }

    /// Rows carrying label `i` project to a dominating set of `H`.
    pub fn verify_projection(&self, i: usize) -> Result<bool> {
        if i >= self.dec.k() {
            return Err(Error::InvalidArgument(format!(
                "basis position {} out of range 0..{}",
                i,
                self.dec.k()
            )));
        }
        Ok(is_dominating(self.prod.h_factor(), self.projection(i)))
    }

    /// `{h : some (g, h) ∈ D has i in its label}`.
    pub fn projection(&self, i: usize) -> VertexSet {
        self.entries
            .iter()
            .filter(|e| e.label.contains(i))
            .map(|e| e.h)
            .collect()
    }

    pub fn histogram(&self) -> LabelHistogram {
        let k = self.dec.k();
        let mut f = vec![0usize; k + 1];
        let mut d_sizes = vec![0usize; k];
        for e in &self.entries {
            f[e.label.len().min(k)] += 1;
            for i in e.label.iter() {
                d_sizes[i] += 1;
            }
        }
        let total = self.entries.len();
        let t = if total == 0 {
            Vec::new()
        } else {
            f.iter()
                .skip(1)
                .map(|&c| Rational::from_usize(c) / Rational::from_usize(total))
                .collect()
        };
        LabelHistogram {
            f,
            d_sizes,
            total,
            t,
        }
    }
}

fn ser_rationals<S: serde::Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(crate::scalar::format_ratio))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelHistogram {
    /// `f[i] = |F_i|`, vertices whose final label has `i` elements; `f[0] = 0`.
    pub f: Vec<usize>,
    /// `|D_i|` per basis position.
    pub d_sizes: Vec<usize>,
    /// `|D|`.
    pub total: usize,
    /// `t_i = |F_i| / |D|` for `i ≥ 1`.
    #[serde(serialize_with = "ser_rationals")]
    pub t: Vec<Rational>,
}

impl LabelHistogram {
    pub fn max_label_size(&self) -> usize {
        self.f.iter().rposition(|&c| c > 0).unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Eq3Check {
    /// `γ(G)γ(H) ≤ Σ |D_i|`.
    pub a_overcount: bool,
    /// `Σ |D_i| = Σ i·|F_i|`.
    pub b_double_count: bool,
    /// Largest label size `≤ π(G)`.
    pub c_size_cap: bool,
    /// `|F_1| ≥ Σ_{i≥2} (i−1)|F_i|`.
    pub d_prop_hypothesis: bool,
}

impl Eq3Check {
    pub fn all(&self) -> bool {
        self.a_overcount && self.b_double_count && self.c_size_cap && self.d_prop_hypothesis
    }
}

pub fn verify_eq3(hist: &LabelHistogram, gamma_g: usize, gamma_h: usize, power: usize) -> Eq3Check {
    let sum_d: usize = hist.d_sizes.iter().sum();
    let weighted: usize = hist.f.iter().enumerate().map(|(i, c)| i * c).sum();
    let excess: usize = hist
        .f
        .iter()
        .enumerate()
        .skip(2)
        .map(|(i, c)| (i - 1) * c)
        .sum();
    Eq3Check {
        a_overcount: gamma_g * gamma_h <= sum_d,
        b_double_count: sum_d == weighted,
        c_size_cap: hist.max_label_size() <= power,
        d_prop_hypothesis: hist.f.get(1).copied().unwrap_or(0) >= excess,
    }
}
