//! Sweep configuration in a `key = value` text format.
//!
//! ```text
//! # comments start with '#'
//! source = corpus:connected_n6.g6 P4 K1,3
//! h_list = K2 P3 P4 C4 C5
//! max_product_order = 36
//! budget_ms = 60000
//! seed = 7
//! policy = deterministic
//! csv_out = sweep.csv
//! json_out = summary.json
//! trace_dir = traces
//! parallelism = 4
//! timings = false
//! ```
//!
//! Lists are whitespace-separated. `corpus:` paths and output paths are
//! relative to the config file's directory. `VIZBOUND_BUDGET_MS` and
//! `VIZBOUND_PARALLELISM` override the corresponding keys.

use std::path::{Path, PathBuf};
use std::time::Duration;

use crate::error::{Error, Result};
use crate::graph::{parse_graph_token, read_graph6_corpus, Graph, MAX_ORDER};
use crate::labeling::AlterationPolicy;

pub const ENV_BUDGET_MS: &str = "VIZBOUND_BUDGET_MS";
pub const ENV_PARALLELISM: &str = "VIZBOUND_PARALLELISM";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceItem {
    Corpus(PathBuf),
    Token(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub source: Vec<SourceItem>,
    pub h_list: Vec<String>,
    pub max_product_order: usize,
    pub budget: Duration,
    pub seed: u64,
    pub policy: AlterationPolicy,
    pub csv_out: Option<PathBuf>,
    pub json_out: Option<PathBuf>,
    pub trace_dir: Option<PathBuf>,
    pub parallelism: usize,
    /// Adds a wall-time column; off by default so reruns are byte-identical.
    pub timings: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            source: Vec::new(),
            h_list: Vec::new(),
            max_product_order: 36,
            budget: Duration::from_secs(60),
            seed: 0,
            policy: AlterationPolicy::Deterministic,
            csv_out: None,
            json_out: None,
            trace_dir: None,
            parallelism: 1,
            timings: false,
        }
    }
}

fn resolve(base: &Path, p: &str) -> PathBuf {
    let p = Path::new(p);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

impl SweepConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
        let base = path.parent().unwrap_or(Path::new("."));
        let mut cfg = Self::parse(&text, base)?;
        cfg.apply_env()?;
        Ok(cfg)
    }

    /// Parses config text, resolving relative paths against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let mut cfg = Self::default();
        let mut policy_name = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |reason: String| Error::Config {
                line: i + 1,
                reason,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected key = value".into()))?;
            let (key, value) = (key.trim(), value.trim());
            let num = |v: &str| {
                v.parse::<u64>()
                    .map_err(|_| bad(format!("{} expects an integer", key)))
            };
            match key {
                "source" => {
                    cfg.source = value
                        .split_whitespace()
                        .map(|item| match item.strip_prefix("corpus:") {
                            Some(p) => SourceItem::Corpus(resolve(base, p)),
                            None => SourceItem::Token(item.to_string()),
                        })
                        .collect()
                }
                "h_list" => cfg.h_list = value.split_whitespace().map(String::from).collect(),
                "max_product_order" => cfg.max_product_order = num(value)? as usize,
                "budget_ms" => cfg.budget = Duration::from_millis(num(value)?),
                "seed" => cfg.seed = num(value)?,
                "policy" => policy_name = Some(value.to_string()),
                "csv_out" => cfg.csv_out = Some(resolve(base, value)),
                "json_out" => cfg.json_out = Some(resolve(base, value)),
                "trace_dir" => cfg.trace_dir = Some(resolve(base, value)),
                "parallelism" => cfg.parallelism = num(value)? as usize,
                "timings" => {
                    cfg.timings = value
                        .parse()
                        .map_err(|_| bad("timings expects true or false".into()))?
                }
                _ => return Err(bad(format!("unknown key {:?}", key))),
            }
        }
        if let Some(name) = policy_name {
            cfg.set_policy(&name)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn set_policy(&mut self, name: &str) -> Result<()> {
        self.policy = match name.parse::<AlterationPolicy>()? {
            AlterationPolicy::SeededRandom(_) => AlterationPolicy::SeededRandom(self.seed),
            p => p,
        };
        Ok(())
    }

    pub fn apply_env(&mut self) -> Result<()> {
        if let Ok(v) = std::env::var(ENV_BUDGET_MS) {
            let ms = v
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("{}={:?}", ENV_BUDGET_MS, v)))?;
            self.budget = Duration::from_millis(ms);
        }
        if let Ok(v) = std::env::var(ENV_PARALLELISM) {
            self.parallelism = v
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("{}={:?}", ENV_PARALLELISM, v)))?;
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_product_order > MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "max_product_order {} exceeds the global cap {}",
                self.max_product_order, MAX_ORDER
            )));
        }
        if self.budget.is_zero() {
            return Err(Error::InvalidArgument("budget must be positive".into()));
        }
        if self.parallelism == 0 {
            return Err(Error::InvalidArgument(
                "parallelism must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// The G side of the sweep in listed order.
    pub fn load_sources(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for item in &self.source {
            match item {
                SourceItem::Corpus(path) => {
                    let stem = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    for (i, g) in read_graph6_corpus(path)?.into_iter().enumerate() {
                        out.push(g.with_name(format!("{}:{}", stem, i + 1)));
                    }
                }
                SourceItem::Token(t) => out.push(parse_graph_token(t)?),
            }
        }
        Ok(out)
    }

    pub fn load_h_list(&self) -> Result<Vec<Graph>> {
        self.h_list.iter().map(|t| parse_graph_token(t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let text = "\
# example
source = corpus:data/x.g6 P4 K1,3
h_list = K2 C5
max_product_order = 30
budget_ms = 1500
seed = 9
policy = seeded-random   # trailing comment
csv_out = out.csv
parallelism = 3
timings = true
";
        let cfg = SweepConfig::parse(text, Path::new("/base")).unwrap();
        assert_eq!(
            cfg.source,
            vec![
                SourceItem::Corpus(PathBuf::from("/base/data/x.g6")),
                SourceItem::Token("P4".into()),
                SourceItem::Token("K1,3".into()),
            ]
        );
        assert_eq!(cfg.h_list, vec!["K2", "C5"]);
        assert_eq!(cfg.max_product_order, 30);
        assert_eq!(cfg.budget, Duration::from_millis(1500));
        assert_eq!(cfg.policy, AlterationPolicy::SeededRandom(9));
        assert_eq!(cfg.csv_out, Some(PathBuf::from("/base/out.csv")));
        assert_eq!(cfg.parallelism, 3);
        assert!(cfg.timings);
    }

    #[test]
    fn rejects_bad_lines() {
        let base = Path::new(".");
        assert!(matches!(
            SweepConfig::parse("nonsense", base),
            Err(Error::Config { line: 1, .. })
        ));
        assert!(matches!(
            SweepConfig::parse("\nbudget_ms = soon", base),
            Err(Error::Config { line: 2, .. })
        ));
        assert!(SweepConfig::parse("colour = red", base).is_err());
        assert!(SweepConfig::parse("budget_ms = 0", base).is_err());
        assert!(SweepConfig::parse("max_product_order = 200", base).is_err());
        assert!(SweepConfig::parse("policy = greedy", base).is_err());
    }

    #[test]
    fn missing_corpus_is_an_error() {
        let cfg =
            SweepConfig::parse("source = corpus:/nonexistent/file.g6", Path::new(".")).unwrap();
        let err = cfg.load_sources().unwrap_err();
        assert!(err.to_string().contains("/nonexistent/file.g6"));
    }
}
