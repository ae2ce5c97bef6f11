use serde::Serialize;

use super::{Diagnostic, Labeling};
use crate::bitset::IndexSet;
use crate::structure::{DecompositionJson, FiberView};

pub const TRACE_SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct TraceEntry {
    pub g_vertex: usize,
    pub cell_or_class: String,
    /// Label after Labelings 1, 2 and 3 (as far as they have run).
    pub stage_labels: Vec<IndexSet>,
}

#[derive(Serialize)]
pub struct TraceRow {
    pub h: usize,
    pub entries: Vec<TraceEntry>,
}

/// JSON export of a labeling run.
#[derive(Serialize)]
pub struct LabelingTrace {
    pub schema: u32,
    pub g: String,
    pub h: String,
    pub decomposition: DecompositionJson,
    pub fibers: Vec<FiberView>,
    pub rows: Vec<TraceRow>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Labeling<'_> {
    pub fn trace(&self) -> LabelingTrace {
        LabelingTrace {
            schema: TRACE_SCHEMA,
            g: self.prod.g_factor().label(),
            h: self.prod.h_factor().label(),
            decomposition: self.dec.to_json(),
            fibers: self.fibers.to_vec(),
            rows: (0..self.rows.len())
                .map(|h| TraceRow {
                    h,
                    entries: self
                        .row(h)
                        .map(|e| TraceEntry {
                            g_vertex: e.g,
                            cell_or_class: e.class.to_string(),
                            stage_labels: e.history.clone(),
                        })
                        .collect(),
                })
                .collect(),
            diagnostics: self.diagnostics.clone(),
        }
    }
}
