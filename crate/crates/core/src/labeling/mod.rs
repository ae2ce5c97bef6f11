//! Label sets on the vertices of a minimum dominating set `D` of `G □ H`.
//!
//! Each vertex `(g, h) ∈ D` carries a nonempty set of basis positions. Three
//! stages refine the labels:
//!
//! 1. [`Labeling::labeling1`] assigns labels from the cell or shared class of
//!    `g` and the vertically undominated cells `I^h` of its fiber.
//! 2. [`Labeling::labeling2`] runs internal (same row) and external
//!    (H-adjacent rows) alterations to a fixpoint so that any two labels in
//!    the same or adjacent rows are disjoint or both singletons.
//! 3. [`Labeling::labeling3`] collapses labels of shared neighbors of
//!    vertically dominated basis vertices to singletons.
//!
//! Removals never touch position `i` on the carrier `v_i^h` (dominion) and
//! never empty a label. A removal the rules demand but dominion forbids is
//! recorded as a [`Diagnostic::Conflict`].

mod alteration;
mod analysis;
mod trace;

pub use analysis::{verify_claim2, verify_eq3, Eq3Check, LabelHistogram, MultiLabelAnalysis};
pub use trace::{LabelingTrace, TraceEntry, TraceRow, TRACE_SCHEMA};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::IndexSet;
use crate::domination::MinimumDominatingSet;
use crate::error::{Error, Result};
use crate::graph::ProductGraph;
use crate::structure::{CellDecomposition, FiberView, VertexClass};

/// How free choices in the alteration rules are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlterationPolicy {
    /// Smallest eligible common element from the lexicographically first
    /// label, next smallest eligible from the other; lowest element in
    /// Labeling 3.
    #[default]
    Deterministic,
    /// Uniform choice among the valid options, from a seeded generator.
    SeededRandom(u64),
}

impl std::str::FromStr for AlterationPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "deterministic" => Ok(Self::Deterministic),
            "seeded-random" | "random" => Ok(Self::SeededRandom(0)),
            _ => Err(Error::InvalidArgument(format!("unknown policy {:?}", s))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Labeling1,
    Labeling2,
    Labeling3,
}

/// One vertex of `D` and its label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelEntry {
    pub g: usize,
    pub h: usize,
    pub class: VertexClass,
    pub label: IndexSet,
    /// Last stage that changed the label.
    pub stage: Stage,
    /// Label after each completed stage.
    pub history: Vec<IndexSet>,
}

impl LabelEntry {
    fn protected(&self) -> Option<usize> {
        self.class.dominion()
    }
}

/// A removal required by an alteration rule but blocked by dominion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Conflict {
    pub rule: &'static str,
    /// `(g, h)` of both carriers.
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub first_label: IndexSet,
    pub second_label: IndexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    Conflict(Conflict),
    Nontermination { passes: usize },
}

/// Invariants checked after every stage; each flag is the conjunction over
/// all stages run so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantFlags {
    pub faithful: bool,
    pub dominion: bool,
    pub nonempty: bool,
    pub monotone: bool,
    /// Labels in the same or H-adjacent rows are disjoint or both
    /// singletons once Labeling 2 has run.
    pub disjoint_after_labeling2: bool,
    /// Every label no larger than the allegiance of the basis.
    pub within_allegiance: bool,
}

impl InvariantFlags {
    pub fn all(&self) -> bool {
        self.faithful
            && self.dominion
            && self.nonempty
            && self.monotone
            && self.disjoint_after_labeling2
            && self.within_allegiance
    }
}

impl Default for InvariantFlags {
    fn default() -> Self {
        Self {
            faithful: true,
            dominion: true,
            nonempty: true,
            monotone: true,
            disjoint_after_labeling2: true,
            within_allegiance: true,
        }
    }
}

/// Passes allowed to Labeling 2 beyond `|D| · k`.
pub const LABELING2_PASS_CAP: usize = 64;

pub struct Labeling<'a> {
    prod: &'a ProductGraph,
    dec: &'a CellDecomposition,
    fibers: &'a [FiberView],
    d: MinimumDominatingSet,
    entries: Vec<LabelEntry>,
    /// Entry ids per row `h`, ascending in `g`.
    rows: Vec<Vec<usize>>,
    diagnostics: Vec<Diagnostic>,
    invariants: InvariantFlags,
    allegiance: usize,
    rng: Option<ChaCha8Rng>,
    stage: Option<Stage>,
}

impl<'a> Labeling<'a> {
    /// Labeling 1.
    ///
    /// For `(g, h) ∈ D`:
    /// - `g ∈ Q_i`: `{j : g ∈ N[v_j]}`;
    /// - `g ∈ P_S` with `R = S ∩ I^h` nonempty: `R`;
    /// - `g ∈ P_S` with `S ∩ I^h = ∅`: `S`.
    pub fn labeling1(
        prod: &'a ProductGraph,
        dec: &'a CellDecomposition,
        fibers: &'a [FiberView],
        d: MinimumDominatingSet,
        policy: AlterationPolicy,
    ) -> Result<Self> {
        if d.set().len() != fibers.iter().map(|f| f.d_h.len()).sum::<usize>()
            || fibers.len() != prod.h_size()
        {
            return Err(Error::ContractViolation(
                "fiber views do not match D".into(),
            ));
        }
        let g = prod.g_factor();
        let basis = dec.basis_set();
        let mut entries = Vec::with_capacity(d.len());
        let mut rows = vec![Vec::new(); prod.h_size()];
        for v in d.set().iter() {
            let (gv, h) = prod.coord(v);
            let class = dec.class_of(gv);
            let label = match class {
                VertexClass::Basis(_) | VertexClass::Private(_) => {
                    closed_basis_indices(dec, g.closed_neighbors(gv).intersection(basis))
                }
                VertexClass::Shared(s) => {
                    let r = s.intersection(fibers[h].undominated);
                    if r.is_empty() {
                        s
                    } else {
                        r
                    }
                }
            };
            rows[h].push(entries.len());
            entries.push(LabelEntry {
                g: gv,
                h,
                class,
                label,
                stage: Stage::Labeling1,
                history: Vec::new(),
            });
        }
        let allegiance = (0..g.order())
            .map(|v| g.closed_neighbors(v).intersection(basis).len())
            .max()
            .unwrap_or(0);
        let mut lab = Self {
            prod,
            dec,
            fibers,
            d,
            entries,
            rows,
            diagnostics: Vec::new(),
            invariants: InvariantFlags::default(),
            allegiance,
            rng: match policy {
                AlterationPolicy::Deterministic => None,
                AlterationPolicy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            },
            stage: None,
        };
        lab.finish_stage(Stage::Labeling1);
        Ok(lab)
    }

    /// Labeling 2: internal then external alterations over all rows,
    /// repeated until no label changes.
    pub fn labeling2(&mut self) -> Result<()> {
        self.require_stage(Stage::Labeling1)?;
        let bound = (self.entries.len() * self.dec.k()).max(LABELING2_PASS_CAP);
        let mut passes = 0;
        loop {
            let mut changed = false;
            for h in 0..self.rows.len() {
                changed |= self.internal_alteration(h);
            }
            for h in 0..self.rows.len() {
                changed |= self.external_alteration(h);
            }
            passes += 1;
            if !changed {
                break;
            }
            if passes > bound {
                self.diagnostics.push(Diagnostic::Nontermination { passes });
                break;
            }
        }
        self.invariants.disjoint_after_labeling2 &= self.rows_disjoint();
        self.finish_stage(Stage::Labeling2);
        Ok(())
    }

    /// Labeling 3: labels on `D^h ∩ P_S` with `S ⊆ I_1^h` become singletons.
    pub fn labeling3(&mut self) -> Result<()> {
        self.require_stage(Stage::Labeling2)?;
        let k = self.dec.k();
        for h in 0..self.rows.len() {
            let dominated = self.fibers[h].dominated(k);
            for idx in self.rows[h].clone() {
                let VertexClass::Shared(s) = self.entries[idx].class else {
                    continue;
                };
                let label = self.entries[idx].label;
                if !s.is_subset(dominated) || label.len() <= 1 {
                    continue;
                }
                let keep = match self.rng.as_mut() {
                    None => label.first().expect("nonempty"),
                    Some(rng) => alteration::choose(rng, &label.to_vec()),
                };
                self.set_label(idx, IndexSet::singleton(keep), Stage::Labeling3);
            }
        }
        self.finish_stage(Stage::Labeling3);
        Ok(())
    }

    /// Runs Labelings 2 and 3 after construction.
    pub fn run_all(&mut self) -> Result<()> {
        self.labeling2()?;
        self.labeling3()
    }

    fn require_stage(&self, stage: Stage) -> Result<()> {
        if self.stage == Some(stage) {
            Ok(())
        } else {
            Err(Error::ContractViolation(format!(
                "expected {:?} to be the last completed stage, found {:?}",
                stage, self.stage
            )))
        }
    }

    fn set_label(&mut self, idx: usize, label: IndexSet, stage: Stage) {
        let e = &mut self.entries[idx];
        if e.label != label {
            e.label = label;
            e.stage = stage;
        }
    }

    fn finish_stage(&mut self, stage: Stage) {
        let flags = self.stage_checks();
        self.invariants.faithful &= flags.faithful;
        self.invariants.dominion &= flags.dominion;
        self.invariants.nonempty &= flags.nonempty;
        self.invariants.monotone &= flags.monotone;
        self.invariants.within_allegiance &= flags.within_allegiance;
        for e in &mut self.entries {
            e.history.push(e.label);
        }
        self.stage = Some(stage);
    }

    /// Labels the carrier's class permits.
    pub fn allowed_label(&self, entry: &LabelEntry) -> IndexSet {
        match entry.class {
            VertexClass::Basis(_) | VertexClass::Private(_) => closed_basis_indices(
                self.dec,
                self.prod
                    .g_factor()
                    .closed_neighbors(entry.g)
                    .intersection(self.dec.basis_set()),
            ),
            VertexClass::Shared(s) => s,
        }
    }

    fn stage_checks(&self) -> InvariantFlags {
        let mut f = InvariantFlags::default();
        for e in &self.entries {
            f.faithful &= e.label.is_subset(self.allowed_label(e));
            f.dominion &= e.protected().is_none_or(|i| e.label.contains(i));
            f.nonempty &= !e.label.is_empty();
            f.monotone &= e.history.last().is_none_or(|prev| e.label.is_subset(*prev));
            f.within_allegiance &= e.label.len() <= self.allegiance;
        }
        f
    }

    /// Pairs in the same row or in H-adjacent rows are disjoint or both singletons.
    pub fn rows_disjoint(&self) -> bool {
        let ok = |a: IndexSet, b: IndexSet| a.is_disjoint(b) || (a.len() == 1 && b.len() == 1);
        let h_graph = self.prod.h_factor();
        (0..self.rows.len()).all(|h| {
            let row = &self.rows[h];
            let internal = row.iter().enumerate().all(|(i, &a)| {
                row[i + 1..]
                    .iter()
                    .all(|&b| ok(self.entries[a].label, self.entries[b].label))
            });
            let external = h_graph.neighbors(h).iter().filter(|&hh| hh > h).all(|hh| {
                row.iter().all(|&a| {
                    self.rows[hh]
                        .iter()
                        .all(|&b| ok(self.entries[a].label, self.entries[b].label))
                })
            });
            internal && external
        })
    }

    pub fn entries(&self) -> &[LabelEntry] {
        &self.entries
    }

    /// Entries of row `h`, ascending in `g`.
    pub fn row(&self, h: usize) -> impl Iterator<Item = &LabelEntry> + '_ {
        self.rows[h].iter().map(move |&i| &self.entries[i])
    }

    pub fn diagnostics(&self) -> &[Diagnostic] {
        &self.diagnostics
    }

    pub fn conflict_count(&self) -> usize {
        self.diagnostics
            .iter()
            .filter(|d| matches!(d, Diagnostic::Conflict(_)))
            .count()
    }

    pub fn invariants(&self) -> InvariantFlags {
        self.invariants
    }

    /// Maximum closed-neighborhood overlap with the basis.
    pub fn basis_allegiance(&self) -> usize {
        self.allegiance
    }

    pub fn decomposition(&self) -> &CellDecomposition {
        self.dec
    }

    pub fn product(&self) -> &ProductGraph {
        self.prod
    }

    pub fn fibers(&self) -> &[FiberView] {
        self.fibers
    }

    pub fn dominating_set(&self) -> MinimumDominatingSet {
        self.d
    }

    pub fn max_label_size(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.label.len())
            .max()
            .unwrap_or(0)
    }

    pub fn stage(&self) -> Option<Stage> {
        self.stage
    }
}

/// Basis positions of the basis vertices in `vertices`.
fn closed_basis_indices(dec: &CellDecomposition, vertices: crate::VertexSet) -> IndexSet {
    dec.basis()
        .iter()
        .enumerate()
        .filter(|(_, &v)| vertices.contains(v))
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests;
