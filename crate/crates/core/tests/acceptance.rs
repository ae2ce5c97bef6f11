//! Acceptance criteria 1–8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vizbound::bounds::{pi_bound, prop1_max, prop1_oracle, SimplexPoint};
use vizbound::domination::{domination_number, gamma_1k, power_closed, power_open};
use vizbound::graph::{emit_graph6, is_claw_free, is_p4_free, read_graph6_corpus};
use vizbound::harness::{sweep, InstanceRecord, SourceItem, Status, SweepConfig, SweepOutput};
use vizbound::labeling::AlterationPolicy;
use vizbound::{Graph, Rational, Rational64};

const H_LIST: [&str; 5] = ["K2", "P3", "P4", "C4", "C5"];
const SAMPLES: usize = 100_000;

fn data(n: usize) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("data/connected_n{}.g6", n))
}

fn corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| read_graph6_corpus(&data(n)).expect("bundled corpus"))
        .collect()
}

/// Smallest k such that some k-subset dominates, by plain subset enumeration.
fn oracle_gamma(g: &Graph) -> usize {
    let n = g.order();
    let closed: Vec<u32> = (0..n)
        .map(|v| g.closed_neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let full = (1u32 << n) - 1;
    (1..=n)
        .find(|&k| {
            (0..=full)
                .filter(|m| m.count_ones() as usize == k)
                .any(|m| {
                    (0..n)
                        .filter(|v| m >> v & 1 == 1)
                        .fold(0u32, |acc, v| acc | closed[v])
                        == full
                })
        })
        .unwrap_or(0)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(id: usize, name: &str, o: &Outcome) {
    println!(
        "{} criterion {}: {} ({})",
        if o.pass { "PASS" } else { "FAIL" },
        id,
        name,
        o.detail
    );
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let graphs = corpus(8);
    let mut mismatches = 0;
    for g in &graphs {
        let solver = domination_number(g, None).expect("connected corpus graph");
        if solver != oracle_gamma(g) {
            mismatches += 1;
            eprintln!("mismatch on {}", emit_graph6(g).unwrap());
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        pass: graphs.len() == 12113 && mismatches == 0 && elapsed < Duration::from_secs(600),
        detail: format!(
            "{} graphs on 1..8 vertices, {} mismatches, {:.1?}",
            graphs.len(),
            mismatches,
            elapsed
        ),
    }
}

/// Weights with `w_1 ≥ Σ (i−1) w_i`, so the normalized point is feasible.
fn feasible_weights(rng: &mut ChaCha8Rng, n: usize) -> Vec<u64> {
    let mut w = vec![0u64; n];
    for wi in w.iter_mut().skip(1) {
        if rng.gen_bool(0.6) {
            *wi = rng.gen_range(0..1000);
        }
    }
    let need: u64 = w
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, x)| i as u64 * x)
        .sum();
    w[0] = need
        + if rng.gen_bool(0.3) {
            0
        } else {
            rng.gen_range(0..1000)
        };
    if w.iter().all(|&x| x == 0) {
        w[0] = 1;
    }
    w
}

fn criterion2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut failures = Vec::new();
    for n in 2..=8 {
        let (max, witness) = prop1_max::<Rational>(n).unwrap();
        let oracle = prop1_oracle(n).unwrap();
        if max != oracle {
            failures.push(format!("n={} closed form {} vs oracle {}", n, max, oracle));
        }
        if !witness.is_feasible() || witness.objective() != max {
            failures.push(format!("n={} witness does not attain the maximum", n));
        }
        let (cap, _) = prop1_max::<Rational64>(n).unwrap();
        let mut above = 0;
        for _ in 0..SAMPLES {
            let p =
                SimplexPoint::<Rational64>::from_weights(&feasible_weights(&mut rng, n)).unwrap();
            assert!(p.is_feasible());
            if p.objective() > cap {
                above += 1;
            }
        }
        if above > 0 {
            failures.push(format!("n={} {} samples above the bound", n, above));
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!(
                "n=2..8 exact match, {} feasible samples per n, witnesses attain (2n-1)/n",
                SAMPLES
            )
        } else {
            failures.join("; ")
        },
    }
}

fn theorem2_config(
    policy: AlterationPolicy,
    out: Option<&Path>,
    parallelism: usize,
) -> SweepConfig {
    SweepConfig {
        source: (1..=6).map(|n| SourceItem::Corpus(data(n))).collect(),
        h_list: H_LIST.iter().map(|s| s.to_string()).collect(),
        max_product_order: 36,
        budget: Duration::from_secs(60),
        seed: 0,
        policy,
        csv_out: out.map(|d| d.join("sweep.csv")),
        json_out: out.map(|d| d.join("summary.json")),
        trace_dir: out.map(|d| d.join("traces")),
        parallelism,
        timings: false,
    }
}

fn criterion3(out: &SweepOutput, elapsed: Duration) -> Outcome {
    let r = &out.records;
    let complete = r.iter().filter(|x| x.status == Status::Ok).count();
    let violations = r.iter().filter(|x| x.pi_bound_holds != Some(true)).count();
    Outcome {
        pass: r.len() == 143 * H_LIST.len()
            && complete == r.len()
            && violations == 0
            && elapsed < Duration::from_secs(1800),
        detail: format!(
            "{} pairs, {} complete, {} π-bound violations, {:.1?}",
            r.len(),
            complete,
            violations,
            elapsed
        ),
    }
}

type Flag = fn(&InstanceRecord) -> Option<bool>;

fn criterion4(out: &SweepOutput) -> Outcome {
    let fails = |f: Flag| out.records.iter().filter(|x| f(x) != Some(true)).count();
    let checks: [(&str, Flag); 13] = [
        ("faithful", |x| x.faithful),
        ("dominion", |x| x.dominion),
        ("nonempty", |x| x.nonempty),
        ("monotone", |x| x.monotone),
        ("disjoint", |x| x.disjoint_after_l2),
        ("size<=π", |x| x.eq3_c),
        ("projection", |x| x.projection_all),
        ("claim1", |x| x.claim1),
        ("claim2", |x| x.claim2),
        ("eq3a", |x| x.eq3_a),
        ("eq3b", |x| x.eq3_b),
        ("eq3c", |x| x.eq3_c),
        ("eq3d", |x| x.eq3_d),
    ];
    let failing: Vec<String> = checks
        .iter()
        .filter_map(|(name, f)| {
            let c = fails(*f);
            (c > 0).then(|| format!("{}:{}", name, c))
        })
        .collect();
    let exit2 = out.summary.falsified;
    Outcome {
        pass: failing.is_empty() && exit2 == 0,
        detail: format!(
            "{} instances, failing checks [{}], falsified {}, max label size {}, {} blocked removals logged",
            out.records.len(),
            failing.join(" "),
            exit2,
            out.summary.max_label_size,
            out.summary.conflicts
        ),
    }
}

fn criterion5() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut closed_above_two = 0;
    let gamma_h: Vec<usize> = H_LIST
        .iter()
        .map(|t| domination_number(&vizbound::graph::parse_graph_token(t).unwrap(), None).unwrap())
        .collect();
    for g in corpus(7) {
        if !(is_claw_free(&g) || is_p4_free(&g)) {
            continue;
        }
        checked += 1;
        let code = emit_graph6(&g).unwrap();
        let gamma = domination_number(&g, None).unwrap();
        if gamma_1k(&g, 2).unwrap() != gamma {
            failures.push(format!("{} γ_[1,2] ≠ γ", code));
        }
        let po = power_open(&g).unwrap();
        if po > 2 {
            failures.push(format!("{} π_open = {}", code, po));
        }
        if power_closed(&g).unwrap().power > 2 {
            closed_above_two += 1;
        }
        for &gh in &gamma_h {
            let rhs = pi_bound::<Rational>(po, gamma, gh);
            let two_thirds =
                Rational::new(2.into(), 3.into()) * Rational::from_integer((gamma * gh).into());
            if rhs < two_thirds {
                failures.push(format!("{} π-bound below 2/3·γγ", code));
            }
        }
    }
    Outcome {
        pass: failures.is_empty() && checked > 0,
        detail: format!(
            "{} claw-free or P4-free graphs on 1..7 vertices, {} failures{}; {} have π_closed > 2",
            checked,
            failures.len(),
            failures
                .first()
                .map(|f| format!(" e.g. {}", f))
                .unwrap_or_default(),
            closed_above_two
        ),
    }
}

fn criterion6(out: &SweepOutput) -> Outcome {
    let cases: Vec<&InstanceRecord> = out
        .records
        .iter()
        .filter(|r| r.power_closed == Some(1))
        .collect();
    let violations = cases
        .iter()
        .filter(|r| r.gamma_product.unwrap() < r.gamma_g.unwrap() * r.gamma_h.unwrap())
        .count();
    Outcome {
        pass: !cases.is_empty() && violations == 0,
        detail: format!(
            "{} pairs with π(G) = 1, {} Vizing violations",
            cases.len(),
            violations
        ),
    }
}

fn criterion7(findings: &Path) -> Outcome {
    let mut text = String::from("graph6,order,power_closed,power_open\n");
    let mut checked = 0;
    let mut strict = 0;
    let mut above = 0;
    let mut above_degree = 0;
    for g in corpus(7) {
        checked += 1;
        let pc = power_closed(&g).unwrap().power;
        if pc > g.max_degree() {
            above_degree += 1;
        }
        let po = power_open(&g).unwrap();
        if po > pc {
            above += 1;
        }
        if po != pc {
            strict += 1;
            writeln!(
                text,
                "{},{},{},{}",
                emit_graph6(&g).unwrap(),
                g.order(),
                pc,
                po
            )
            .unwrap();
        }
    }
    std::fs::write(findings, text).expect("write findings");
    Outcome {
        pass: above == 0,
        detail: format!(
            "{} graphs on 1..7 vertices, {} with π_open > π_closed, {} strict π_open < π_closed written to {}, {} with π_closed > Δ",
            checked,
            above,
            strict,
            findings.display(),
            above_degree
        ),
    }
}

fn criterion8(dir: &Path) -> Outcome {
    let mut failures = Vec::new();
    for (label, policy) in [
        ("deterministic", AlterationPolicy::Deterministic),
        ("seeded-random", AlterationPolicy::SeededRandom(17)),
    ] {
        let mut outputs = Vec::new();
        for (run, parallelism) in [(0, 1), (1, 4)] {
            let d = dir.join(format!("{}-{}", label, run));
            sweep(&theorem2_config(policy, Some(&d), parallelism)).unwrap();
            let csv = std::fs::read(d.join("sweep.csv")).unwrap();
            let json = std::fs::read(d.join("summary.json")).unwrap();
            outputs.push((csv, json));
        }
        if outputs[0] != outputs[1] {
            failures.push(label);
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            "CSV and JSON byte-identical across reruns (1 and 4 workers) under both policies".into()
        } else {
            format!("outputs differ under {}", failures.join(", "))
        },
    }
}

fn main() -> ExitCode {
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&tmp).unwrap();

    let start = Instant::now();
    let theorem2 = sweep(&theorem2_config(
        AlterationPolicy::Deterministic,
        Some(&tmp.join("theorem2")),
        4,
    ))
    .expect("sweep runs");
    let sweep_time = start.elapsed();

    let results = [
        ("solver soundness", criterion1()),
        ("proposition 1", criterion2()),
        ("theorem 2 π-bound", criterion3(&theorem2, sweep_time)),
        ("labeling invariants and claims", criterion4(&theorem2)),
        ("claw-free and P4-free corollary", criterion5()),
        ("π = 1 gives Vizing", criterion6(&theorem2)),
        (
            "power definitions",
            criterion7(&tmp.join("power_findings.csv")),
        ),
        ("determinism", criterion8(&tmp.join("determinism"))),
    ];
    for (i, (name, o)) in results.iter().enumerate() {
        report(i + 1, name, o);
    }
    if results.iter().all(|(_, o)| o.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
