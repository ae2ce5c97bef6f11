//! Per-instance pipeline and batch sweeps with CSV/JSON reports.

mod config;

pub use config::{SourceItem, SweepConfig, ENV_BUDGET_MS, ENV_PARALLELISM};

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bounds, BoundReport};
use crate::domination::{domination_number, power_report, MinimumDominatingSet, PowerReport};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, emit_graph6, Graph};
use crate::labeling::{
    verify_claim2, verify_eq3, AlterationPolicy, Eq3Check, InvariantFlags, Labeling,
};
use crate::scalar::{format_ratio, Scalar};
use crate::structure::{decompose, fiber_views};

pub const REPORT_SCHEMA: u32 = 1;

/// Per-instance settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceConfig {
    pub max_product_order: usize,
    pub budget: Duration,
    pub policy: AlterationPolicy,
    /// Keep the labeling trace even when every check holds.
    pub keep_trace: bool,
}

impl Default for InstanceConfig {
    fn default() -> Self {
        Self {
            max_product_order: crate::graph::MAX_ORDER,
            budget: Duration::from_secs(60),
            policy: AlterationPolicy::Deterministic,
            keep_trace: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Timeout,
    Skipped,
    Error,
}

/// Results of the labeling checks for one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimChecks {
    pub claim1: bool,
    pub claim2: bool,
    /// Per basis position.
    pub projection: Vec<bool>,
    pub eq3: Eq3Check,
    pub invariants: InvariantFlags,
    pub max_label_size: usize,
    pub conflicts: usize,
}

impl ClaimChecks {
    pub fn projection_all(&self) -> bool {
        self.projection.iter().all(|&p| p)
    }

    pub fn all(&self) -> bool {
        self.claim1
            && self.claim2
            && self.projection_all()
            && self.eq3.all()
            && self.invariants.all()
    }
}

/// Everything computed for one `(G, H)` pair.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub g: String,
    pub h: String,
    pub status: Status,
    pub note: String,
    pub power: Option<PowerReport>,
    pub gamma_h: Option<usize>,
    pub bounds: Option<BoundReport>,
    pub claims: Option<ClaimChecks>,
    /// Labeling trace JSON, kept when a check fails or on request.
    #[serde(skip)]
    pub trace: Option<String>,
    #[serde(skip)]
    pub wall: Duration,
}

impl InstanceReport {
    fn new(g: &Graph, h: &Graph) -> Self {
        Self {
            g: g.label(),
            h: h.label(),
            status: Status::Ok,
            note: String::new(),
            power: None,
            gamma_h: None,
            bounds: None,
            claims: None,
            trace: None,
            wall: Duration::ZERO,
        }
    }

    /// Some bound or labeling check failed.
    pub fn falsified(&self) -> bool {
        let bound_fail = self
            .bounds
            .as_ref()
            .and_then(|b| b.checks)
            .is_some_and(|c| !c.power_bounds_hold());
        let claim_fail = self.claims.as_ref().is_some_and(|c| !c.all());
        bound_fail || claim_fail
    }
}

fn remaining(start: Instant, budget: Duration) -> Result<Duration> {
    budget
        .checked_sub(start.elapsed())
        .filter(|d| !d.is_zero())
        .ok_or(Error::Timeout {
            budget,
            lower: 0,
            upper: 0,
        })
}

/// Runs the full pipeline: γ-sets and power of G, γ(H), exact γ(G□H),
/// bounds, then Labelings 1–3 and every claim check.
pub fn run_instance(g: &Graph, h: &Graph, cfg: &InstanceConfig) -> InstanceReport {
    let start = Instant::now();
    let mut report = InstanceReport::new(g, h);
    let order = g.order() * h.order();
    if order > cfg.max_product_order {
        report.status = Status::Skipped;
        report.note = format!("product order {} over cap {}", order, cfg.max_product_order);
    } else if !g.is_connected() || !h.is_connected() {
        report.status = Status::Skipped;
        report.note = "factors must be connected".into();
    } else if let Err(e) = pipeline(g, h, cfg, start, &mut report) {
        report.status = match e {
            Error::Timeout { .. } => Status::Timeout,
            _ => Status::Error,
        };
        report.note = e.to_string();
    }
    report.wall = start.elapsed();
    report
}

fn pipeline(
    g: &Graph,
    h: &Graph,
    cfg: &InstanceConfig,
    start: Instant,
    report: &mut InstanceReport,
) -> Result<()> {
    let power = power_report(g)?;
    report.power = Some(power.clone());
    let gamma_h = domination_number(h, Some(remaining(start, cfg.budget)?))?;
    report.gamma_h = Some(gamma_h);

    let prod = cartesian_product(g, h)?;
    let d = MinimumDominatingSet::compute(prod.graph(), Some(remaining(start, cfg.budget)?))?;
    let b =
        bounds(power.gamma, gamma_h, power.power_closed, power.max_degree)?.with_product(d.len());
    report.bounds = Some(b);

    let dec = decompose(g, power.witness_set)?;
    let fibers = fiber_views(&prod, &dec, d.set())?;
    let mut lab = Labeling::labeling1(&prod, &dec, &fibers, d, cfg.policy)?;
    lab.run_all()?;

    let mut claim1 = true;
    let mut claim2 = true;
    for row in 0..h.order() {
        let analysis = lab.analyze_fiber(row)?;
        claim1 &= analysis.claim1 && lab.verify_claim1(row)?;
        claim2 &= verify_claim2(&analysis);
    }
    let projection = (0..dec.k())
        .map(|i| lab.verify_projection(i))
        .collect::<Result<Vec<_>>>()?;
    let eq3 = verify_eq3(&lab.histogram(), power.gamma, gamma_h, power.power_closed);
    let claims = ClaimChecks {
        claim1,
        claim2,
        projection,
        eq3,
        invariants: lab.invariants(),
        max_label_size: lab.max_label_size(),
        conflicts: lab.conflict_count(),
    };
    report.claims = Some(claims);
    if cfg.keep_trace || report.falsified() {
        report.trace = serde_json::to_string_pretty(&lab.trace()).ok();
    }
    Ok(())
}

/// One CSV row. Column order is the field order below.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub g_id: String,
    pub g_graph6: String,
    pub h_id: String,
    pub h_graph6: String,
    pub status: Status,
    pub gamma_g: Option<usize>,
    pub gamma_h: Option<usize>,
    pub power_closed: Option<usize>,
    pub power_open: Option<usize>,
    pub delta_g: Option<usize>,
    pub gamma_product: Option<usize>,
    pub vizing_rhs: Option<String>,
    pub suen_tarr_rhs: Option<String>,
    pub pi_bound_rhs: Option<String>,
    pub gamma_bound_rhs: Option<String>,
    pub delta_bound_rhs: Option<String>,
    pub vizing_holds: Option<bool>,
    pub suen_tarr_holds: Option<bool>,
    pub pi_bound_holds: Option<bool>,
    pub gamma_bound_holds: Option<bool>,
    pub delta_bound_holds: Option<bool>,
    pub improves_suen_tarr: Option<bool>,
    /// `γ(G□H) − ⌈π-bound⌉`.
    pub tightness: Option<i64>,
    pub claim1: Option<bool>,
    pub claim2: Option<bool>,
    pub projection_all: Option<bool>,
    pub eq3_a: Option<bool>,
    pub eq3_b: Option<bool>,
    pub eq3_c: Option<bool>,
    pub eq3_d: Option<bool>,
    pub faithful: Option<bool>,
    pub dominion: Option<bool>,
    pub nonempty: Option<bool>,
    pub monotone: Option<bool>,
    pub disjoint_after_l2: Option<bool>,
    pub within_allegiance: Option<bool>,
    pub max_label_size: Option<usize>,
    pub conflicts: Option<usize>,
    pub falsified: bool,
    pub note: String,
    pub wall_ms: Option<u64>,
}

/// Fixed CSV header, matching [`InstanceRecord`] field order.
pub const CSV_COLUMNS: &[&str] = &[
    "index",
    "g_id",
    "g_graph6",
    "h_id",
    "h_graph6",
    "status",
    "gamma_g",
    "gamma_h",
    "power_closed",
    "power_open",
    "delta_g",
    "gamma_product",
    "vizing_rhs",
    "suen_tarr_rhs",
    "pi_bound_rhs",
    "gamma_bound_rhs",
    "delta_bound_rhs",
    "vizing_holds",
    "suen_tarr_holds",
    "pi_bound_holds",
    "gamma_bound_holds",
    "delta_bound_holds",
    "improves_suen_tarr",
    "tightness",
    "claim1",
    "claim2",
    "projection_all",
    "eq3_a",
    "eq3_b",
    "eq3_c",
    "eq3_d",
    "faithful",
    "dominion",
    "nonempty",
    "monotone",
    "disjoint_after_l2",
    "within_allegiance",
    "max_label_size",
    "conflicts",
    "falsified",
    "note",
    "wall_ms",
];

impl InstanceRecord {
    pub fn from_report(
        index: usize,
        g: &Graph,
        h: &Graph,
        r: &InstanceReport,
        timings: bool,
    ) -> Self {
        let b = r.bounds.as_ref();
        let checks = b.and_then(|b| b.checks);
        let c = r.claims.as_ref();
        let fmt = |x: &crate::Rational| format_ratio(x);
        Self {
            index,
            g_id: r.g.clone(),
            g_graph6: emit_graph6(g).unwrap_or_default(),
            h_id: r.h.clone(),
            h_graph6: emit_graph6(h).unwrap_or_default(),
            status: r.status,
            gamma_g: r.power.as_ref().map(|p| p.gamma),
            gamma_h: r.gamma_h,
            power_closed: r.power.as_ref().map(|p| p.power_closed),
            power_open: r.power.as_ref().map(|p| p.power_open),
            delta_g: Some(g.max_degree()),
            gamma_product: b.and_then(|b| b.gamma_product),
            vizing_rhs: b.map(|b| fmt(&b.vizing_rhs)),
            suen_tarr_rhs: b.map(|b| fmt(&b.suen_tarr_rhs)),
            pi_bound_rhs: b.map(|b| fmt(&b.pi_bound_rhs)),
            gamma_bound_rhs: b.map(|b| fmt(&b.gamma_bound_rhs)),
            delta_bound_rhs: b.and_then(|b| b.delta_bound_rhs.as_ref().map(fmt)),
            vizing_holds: checks.map(|c| c.vizing),
            suen_tarr_holds: checks.map(|c| c.suen_tarr),
            pi_bound_holds: checks.map(|c| c.pi_bound),
            gamma_bound_holds: checks.map(|c| c.gamma_bound),
            delta_bound_holds: checks.and_then(|c| c.delta_bound),
            improves_suen_tarr: b.map(|b| b.improves_suen_tarr),
            tightness: b.and_then(|b| {
                b.gamma_product
                    .map(|gp| gp as i64 - b.pi_bound_rhs.ceil_i64())
            }),
            claim1: c.map(|c| c.claim1),
            claim2: c.map(|c| c.claim2),
            projection_all: c.map(|c| c.projection_all()),
            eq3_a: c.map(|c| c.eq3.a_overcount),
            eq3_b: c.map(|c| c.eq3.b_double_count),
            eq3_c: c.map(|c| c.eq3.c_size_cap),
            eq3_d: c.map(|c| c.eq3.d_prop_hypothesis),
            faithful: c.map(|c| c.invariants.faithful),
            dominion: c.map(|c| c.invariants.dominion),
            nonempty: c.map(|c| c.invariants.nonempty),
            monotone: c.map(|c| c.invariants.monotone),
            disjoint_after_l2: c.map(|c| c.invariants.disjoint_after_labeling2),
            within_allegiance: c.map(|c| c.invariants.within_allegiance),
            max_label_size: c.map(|c| c.max_label_size),
            conflicts: c.map(|c| c.conflicts),
            falsified: r.falsified(),
            note: r.note.clone(),
            wall_ms: timings.then_some(r.wall.as_millis() as u64),
        }
    }
}

/// Aggregate counts over a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub schema: u32,
    pub instances: usize,
    pub completed: usize,
    pub timeouts: usize,
    pub skipped: usize,
    pub errors: usize,
    pub falsified: usize,
    pub bound_holds: BTreeMap<String, usize>,
    pub bound_fails: BTreeMap<String, usize>,
    pub claim_fails: BTreeMap<String, usize>,
    pub max_label_size: usize,
    pub conflicts: usize,
    /// G (graph6) where closed and open power differ, with both values.
    pub power_disagreements: BTreeMap<String, (usize, usize)>,
    /// G (graph6) where closed power exceeds Δ(G).
    pub power_above_max_degree: BTreeMap<String, (usize, usize)>,
    /// `γ(G□H) − ⌈π-bound⌉` → count.
    pub tightness: BTreeMap<i64, usize>,
    pub falsified_indices: Vec<usize>,
}

impl SweepSummary {
    pub fn from_records(records: &[InstanceRecord]) -> Self {
        let mut s = SweepSummary {
            schema: REPORT_SCHEMA,
            instances: records.len(),
            ..Default::default()
        };
        let tally = |holds: &mut BTreeMap<String, usize>,
                     fails: &mut BTreeMap<String, usize>,
                     name: &str,
                     v: Option<bool>| {
            match v {
                Some(true) => *holds.entry(name.to_string()).or_default() += 1,
                Some(false) => *fails.entry(name.to_string()).or_default() += 1,
                None => {}
            }
        };
        for r in records {
            match r.status {
                Status::Ok => s.completed += 1,
                Status::Timeout => s.timeouts += 1,
                Status::Skipped => s.skipped += 1,
                Status::Error => s.errors += 1,
            }
            if r.falsified {
                s.falsified += 1;
                s.falsified_indices.push(r.index);
            }
            for (name, v) in [
                ("vizing", r.vizing_holds),
                ("suen_tarr", r.suen_tarr_holds),
                ("pi_bound", r.pi_bound_holds),
                ("gamma_bound", r.gamma_bound_holds),
                ("delta_bound", r.delta_bound_holds),
            ] {
                tally(&mut s.bound_holds, &mut s.bound_fails, name, v);
            }
            let mut ignore = BTreeMap::new();
            for (name, v) in [
                ("claim1", r.claim1),
                ("claim2", r.claim2),
                ("projection", r.projection_all),
                ("eq3_a", r.eq3_a),
                ("eq3_b", r.eq3_b),
                ("eq3_c", r.eq3_c),
                ("eq3_d", r.eq3_d),
                ("faithful", r.faithful),
                ("dominion", r.dominion),
                ("nonempty", r.nonempty),
                ("monotone", r.monotone),
                ("disjoint_after_l2", r.disjoint_after_l2),
                ("within_allegiance", r.within_allegiance),
            ] {
                tally(&mut ignore, &mut s.claim_fails, name, v);
            }
            s.max_label_size = s.max_label_size.max(r.max_label_size.unwrap_or(0));
            s.conflicts += r.conflicts.unwrap_or(0);
            if let (Some(pc), Some(po)) = (r.power_closed, r.power_open) {
                if pc != po {
                    s.power_disagreements.insert(r.g_graph6.clone(), (pc, po));
                }
                if let Some(d) = r.delta_g {
                    if pc > d {
                        s.power_above_max_degree.insert(r.g_graph6.clone(), (pc, d));
                    }
                }
            }
            if let Some(t) = r.tightness {
                *s.tightness.entry(t).or_default() += 1;
            }
        }
        s
    }
}

/// A finished sweep with its serialized reports.
#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub records: Vec<InstanceRecord>,
    pub summary: SweepSummary,
    pub csv: String,
    pub json: String,
    pub traces: Vec<(usize, String)>,
}

impl SweepOutput {
    pub fn falsified(&self) -> bool {
        self.summary.falsified > 0
    }
}

pub fn records_to_csv(records: &[InstanceRecord], timings: bool) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    let columns = if timings {
        CSV_COLUMNS
    } else {
        &CSV_COLUMNS[..CSV_COLUMNS.len() - 1]
    };
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(columns).map_err(io)?;
    for r in records {
        let mut row: Vec<String> = Vec::with_capacity(columns.len());
        let value = serde_json::to_value(r).map_err(|e| Error::Io(e.to_string()))?;
        for &col in columns {
            row.push(match &value[col] {
                serde_json::Value::Null => String::new(),
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            });
        }
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Runs every (G, H) pair, G-major, in submission order.
pub fn sweep_pairs(gs: &[Graph], hs: &[Graph], cfg: &SweepConfig) -> Result<SweepOutput> {
    let pairs: Vec<(usize, &Graph, &Graph)> = gs
        .iter()
        .flat_map(|g| hs.iter().map(move |h| (g, h)))
        .enumerate()
        .map(|(i, (g, h))| (i, g, h))
        .collect();
    let run = |&(i, g, h): &(usize, &Graph, &Graph)| {
        let policy = match cfg.policy {
            AlterationPolicy::SeededRandom(seed) => {
                AlterationPolicy::SeededRandom(seed.wrapping_add(i as u64))
            }
            p => p,
        };
        let icfg = InstanceConfig {
            max_product_order: cfg.max_product_order,
            budget: cfg.budget,
            policy,
            keep_trace: false,
        };
        let report = run_instance(g, h, &icfg);
        (
            InstanceRecord::from_report(i, g, h, &report, cfg.timings),
            report.trace,
        )
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let results: Vec<(InstanceRecord, Option<String>)> =
        pool.install(|| pairs.par_iter().map(run).collect());
    let mut records = Vec::with_capacity(results.len());
    let mut traces = Vec::new();
    for (rec, trace) in results {
        if let Some(t) = trace {
            traces.push((rec.index, t));
        }
        records.push(rec);
    }
    let summary = SweepSummary::from_records(&records);
    let csv = records_to_csv(&records, cfg.timings)?;
    let json = serde_json::to_string_pretty(&summary).map_err(|e| Error::Io(e.to_string()))? + "\n";
    Ok(SweepOutput {
        records,
        summary,
        csv,
        json,
        traces,
    })
}

/// Loads the configured graphs, runs the sweep, and writes the configured outputs.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepOutput> {
    let gs = cfg.load_sources()?;
    let hs = cfg.load_h_list()?;
    let out = sweep_pairs(&gs, &hs, cfg)?;
    let write = |path: &PathBuf, text: &str| -> Result<()> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))
    };
    if let Some(p) = &cfg.csv_out {
        write(p, &out.csv)?;
    }
    if let Some(p) = &cfg.json_out {
        write(p, &out.json)?;
    }
    if let Some(dir) = &cfg.trace_dir {
        for (i, t) in &out.traces {
            write(&dir.join(format!("trace_{:05}.json", i)), t)?;
        }
    }
    Ok(out)
}
