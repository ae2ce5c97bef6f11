use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use vizbound::bounds::{prop1_max, prop1_oracle, prop1_unbounded_ray, SimplexPoint};
use vizbound::domination::{enumerate_gamma_sets, power_report, MinimumDominatingSet};
use vizbound::graph::{cartesian_product, emit_graph6, parse_graph6, parse_graph_token};
use vizbound::harness::{
    records_to_csv, run_instance, sweep, InstanceConfig, InstanceRecord, InstanceReport, Status,
    SweepConfig,
};
use vizbound::labeling::AlterationPolicy;
use vizbound::scalar::format_ratio;
use vizbound::{Graph, Rational};

#[derive(Parser)]
#[command(
    name = "vizbound",
    version,
    about = "Domination in Cartesian products: exact solver and power-bound checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Per-instance time budget in milliseconds.
    #[arg(long, global = true, env = "VIZBOUND_BUDGET_MS")]
    budget_ms: Option<u64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Label alteration policy: deterministic or seeded-random.
    #[arg(long, global = true)]
    policy: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

/// Graphs are given as graph6 strings or tokens such as `P4`, `C5`, `K1,3`.
#[derive(Subcommand)]
enum Command {
    /// Domination number and a minimum dominating set.
    Gamma { g: String },
    /// Every minimum dominating set.
    GammaSets { g: String },
    /// γ, closed and open power, and the witness γ-set.
    Power { g: String },
    /// Exact domination number of G□H.
    ProductGamma { g: String, h: String },
    /// Full pipeline with the claim table.
    Verify { g: String, h: String },
    /// Batch run driven by a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
    /// Maximum of Σ i·t_i over the constrained simplex in dimension n.
    Prop1 {
        #[arg(long)]
        n: usize,
    },
    /// Labeling trace JSON for one pair.
    Trace {
        g: String,
        h: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn graph_arg(s: &str) -> Result<Graph> {
    parse_graph_token(s)
        .or_else(|_| parse_graph6(s).map(|g| g.with_name(s)))
        .with_context(|| format!("cannot read graph {:?}", s))
}

fn set_list(s: vizbound::VertexSet) -> String {
    s.to_string()
}

impl Cli {
    fn budget(&self) -> Option<Duration> {
        self.budget_ms.map(Duration::from_millis)
    }

    fn policy(&self) -> Result<AlterationPolicy> {
        let p = match &self.policy {
            Some(name) => name.parse()?,
            None => AlterationPolicy::Deterministic,
        };
        Ok(match p {
            AlterationPolicy::SeededRandom(_) => {
                AlterationPolicy::SeededRandom(self.seed.unwrap_or(0))
            }
            p => p,
        })
    }

    fn instance_config(&self, keep_trace: bool) -> Result<InstanceConfig> {
        let mut cfg = InstanceConfig {
            policy: self.policy()?,
            keep_trace,
            ..InstanceConfig::default()
        };
        if let Some(b) = self.budget() {
            cfg.budget = b;
        }
        Ok(cfg)
    }
}

fn emit_json<T: serde::Serialize>(v: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Gamma { g } => {
            let g = graph_arg(g)?;
            let d = MinimumDominatingSet::compute(&g, cli.budget())?;
            match cli.format {
                Format::Json => emit_json(&serde_json::json!({"gamma": d.len(), "set": d.set()}))?,
                Format::Csv => println!("gamma,set\n{},\"{}\"", d.len(), set_list(d.set())),
                Format::Text => println!("γ = {}\nset = {}", d.len(), d.set()),
            }
        }
        Command::GammaSets { g } => {
            let g = graph_arg(g)?;
            let sets: Vec<_> = enumerate_gamma_sets(&g)?.collect();
            match cli.format {
                Format::Json => emit_json(&sets)?,
                Format::Csv => {
                    println!("set");
                    for s in &sets {
                        println!("\"{}\"", s);
                    }
                }
                Format::Text => {
                    for s in &sets {
                        println!("{}", s);
                    }
                    println!("{} sets", sets.len());
                }
            }
        }
        Command::Power { g } => {
            let g = graph_arg(g)?;
            let r = power_report(&g)?;
            match cli.format {
                Format::Json => emit_json(&r)?,
                Format::Csv => println!(
                    "gamma,power_closed,power_open,witness\n{},{},{},\"{}\"",
                    r.gamma, r.power_closed, r.power_open, r.witness_set
                ),
                Format::Text => {
                    println!("γ = {}", r.gamma);
                    println!("π_closed = {}", r.power_closed);
                    println!("π_open = {}", r.power_open);
                    println!("witness = {}", r.witness_set);
                    println!("γ-sets = {}", r.num_gamma_sets);
                    if !r.agree {
                        println!("closed and open power differ");
                    }
                }
            }
        }
        Command::ProductGamma { g, h } => {
            let (g, h) = (graph_arg(g)?, graph_arg(h)?);
            let prod = cartesian_product(&g, &h)?;
            let d = MinimumDominatingSet::compute(prod.graph(), cli.budget())?;
            let coords: Vec<(usize, usize)> = d.set().iter().map(|v| prod.coord(v)).collect();
            match cli.format {
                Format::Json => emit_json(&serde_json::json!({"gamma": d.len(), "set": coords}))?,
                Format::Csv => println!("gamma\n{}", d.len()),
                Format::Text => println!("γ(G□H) = {}\nset = {:?}", d.len(), coords),
            }
        }
        Command::Verify { g, h } => {
            let (g, h) = (graph_arg(g)?, graph_arg(h)?);
            let report = run_instance(&g, &h, &cli.instance_config(false)?);
            return print_verify(cli.format, &g, &h, &report);
        }
        Command::Trace { g, h, out } => {
            let (g, h) = (graph_arg(g)?, graph_arg(h)?);
            let report = run_instance(&g, &h, &cli.instance_config(true)?);
            let Some(trace) = &report.trace else {
                bail!("{:?}: {}", report.status, report.note);
            };
            std::fs::write(out, format!("{}\n", trace))
                .with_context(|| format!("writing {}", out.display()))?;
            return Ok(if report.falsified() { 2 } else { 0 });
        }
        Command::Sweep { config } => {
            let mut cfg = SweepConfig::from_file(config)?;
            if let Some(b) = cli.budget() {
                cfg.budget = b;
            }
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            if let Some(p) = &cli.policy {
                cfg.set_policy(p)?;
            } else if let AlterationPolicy::SeededRandom(_) = cfg.policy {
                cfg.policy = AlterationPolicy::SeededRandom(cfg.seed);
            }
            cfg.validate()?;
            let out = sweep(&cfg)?;
            match cli.format {
                Format::Csv => print!("{}", out.csv),
                Format::Json => print!("{}", out.json),
                Format::Text => {
                    let s = &out.summary;
                    println!(
                        "{} instances: {} ok, {} timeout, {} skipped, {} error",
                        s.instances, s.completed, s.timeouts, s.skipped, s.errors
                    );
                    println!("falsified: {}", s.falsified);
                    println!("max label size: {}", s.max_label_size);
                    println!("power disagreements: {}", s.power_disagreements.len());
                }
            }
            if s_errors(&out.records) {
                return Ok(1);
            }
            return Ok(if out.falsified() { 2 } else { 0 });
        }
        Command::Prop1 { n } => {
            let (max, witness) = prop1_max::<Rational>(*n)?;
            let oracle = prop1_oracle(*n)?;
            let ray = prop1_unbounded_ray(*n)?;
            let fmt_vec = |v: &[Rational]| v.iter().map(format_ratio).collect::<Vec<_>>();
            let check = SimplexPoint::new(witness.coords().to_vec())?;
            let agree = max == oracle && check.objective() == max;
            match cli.format {
                Format::Json => emit_json(&serde_json::json!({
                    "n": n,
                    "max": format_ratio(&max),
                    "oracle": format_ratio(&oracle),
                    "witness": fmt_vec(witness.coords()),
                    "agree": agree,
                    "unbounded_without_nonnegativity": ray.as_deref().map(fmt_vec),
                }))?,
                Format::Csv => println!(
                    "n,max,oracle,agree\n{},{},{},{}",
                    n,
                    format_ratio(&max),
                    format_ratio(&oracle),
                    agree
                ),
                Format::Text => {
                    println!("max = {}", format_ratio(&max));
                    println!("oracle = {}", format_ratio(&oracle));
                    println!("witness = ({})", fmt_vec(witness.coords()).join(", "));
                    if let Some(r) = ray {
                        println!("without t ≥ 0 unbounded along ({})", fmt_vec(&r).join(", "));
                    }
                }
            }
            return Ok(if agree { 0 } else { 2 });
        }
    }
    Ok(0)
}

fn s_errors(records: &[InstanceRecord]) -> bool {
    records.iter().any(|r| r.status == Status::Error)
}

fn mark(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "holds",
        Some(false) => "FAILS",
        None => "n/a",
    }
}

fn print_verify(format: Format, g: &Graph, h: &Graph, report: &InstanceReport) -> Result<u8> {
    let code = match report.status {
        Status::Error => 1,
        _ if report.falsified() => 2,
        _ => 0,
    };
    match format {
        Format::Json => emit_json(report)?,
        Format::Csv => print!(
            "{}",
            records_to_csv(
                &[InstanceRecord::from_report(0, g, h, report, false)],
                false
            )?
        ),
        Format::Text => {
            println!("G = {} ({})", report.g, emit_graph6(g).unwrap_or_default());
            println!("H = {} ({})", report.h, emit_graph6(h).unwrap_or_default());
            println!(
                "status: {:?}{}",
                report.status,
                if report.note.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", report.note)
                }
            );
            if let Some(p) = &report.power {
                println!(
                    "γ(G) = {}  π_closed = {}  π_open = {}  Δ(G) = {}",
                    p.gamma, p.power_closed, p.power_open, p.max_degree
                );
            }
            if let Some(gh) = report.gamma_h {
                println!("γ(H) = {}", gh);
            }
            if let Some(b) = &report.bounds {
                if let Some(gp) = b.gamma_product {
                    println!("γ(G□H) = {}", gp);
                }
                let c = b.checks;
                println!("{:<14} {:>8}  result", "bound", "rhs");
                println!(
                    "{:<14} {:>8}  {}",
                    "vizing",
                    format_ratio(&b.vizing_rhs),
                    mark(c.map(|c| c.vizing))
                );
                println!(
                    "{:<14} {:>8}  {}",
                    "suen-tarr",
                    format_ratio(&b.suen_tarr_rhs),
                    mark(c.map(|c| c.suen_tarr))
                );
                println!(
                    "{:<14} {:>8}  {}",
                    "pi-bound",
                    format_ratio(&b.pi_bound_rhs),
                    mark(c.map(|c| c.pi_bound))
                );
                println!(
                    "{:<14} {:>8}  {}",
                    "gamma-bound",
                    format_ratio(&b.gamma_bound_rhs),
                    mark(c.map(|c| c.gamma_bound))
                );
                println!(
                    "{:<14} {:>8}  {}",
                    "delta-bound",
                    b.delta_bound_rhs
                        .as_ref()
                        .map(format_ratio)
                        .unwrap_or_else(|| "-".into()),
                    mark(c.and_then(|c| c.delta_bound))
                );
            }
            if let Some(c) = &report.claims {
                println!("{:<22} result", "check");
                let rows = [
                    ("claim 1", c.claim1),
                    ("claim 2", c.claim2),
                    ("projection (all i)", c.projection_all()),
                    ("eq3 (a) overcount", c.eq3.a_overcount),
                    ("eq3 (b) double count", c.eq3.b_double_count),
                    ("eq3 (c) size cap", c.eq3.c_size_cap),
                    ("eq3 (d) hypothesis", c.eq3.d_prop_hypothesis),
                    ("faithful", c.invariants.faithful),
                    ("dominion", c.invariants.dominion),
                    ("nonempty", c.invariants.nonempty),
                    ("monotone", c.invariants.monotone),
                    ("disjoint after L2", c.invariants.disjoint_after_labeling2),
                    ("within allegiance", c.invariants.within_allegiance),
                ];
                for (name, v) in rows {
                    println!("{:<22} {}", name, mark(Some(v)));
                }
                println!(
                    "max label size = {}  conflicts = {}",
                    c.max_label_size, c.conflicts
                );
            }
        }
    }
    Ok(code)
}
