//! Named graph families and a compact token syntax for them.

use num_rational::Ratio;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{parse_graph6, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `K_{1,n-1}` with center 0.
    Star,
    /// Erdős–Rényi `G(n, p)`.
    ///
    /// Generator: `ChaCha8Rng::seed_from_u64(seed)`. Pairs `(u, v)`, `u < v`,
    /// are visited with `u` ascending then `v` ascending; for each pair one
    /// `x = next_u64()` is drawn and the edge is kept iff
    /// `(x * denom) >> 64 < numer` in 128-bit arithmetic.
    RandomGnp {
        p: Ratio<u32>,
        seed: u64,
    },
}

pub fn make_family(family: Family, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "family order must be at least 1".into(),
        ));
    }
    let (g, name) = match family {
        Family::Path => (
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?,
            format!("P{}", n),
        ),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidArgument(format!(
                    "cycle needs n >= 3, got {}",
                    n
                )));
            }
            let edges = (0..n).map(|v| (v, (v + 1) % n));
            (Graph::from_edges(n, edges)?, format!("C{}", n))
        }
        Family::Complete => {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            (Graph::from_edges(n, edges)?, format!("K{}", n))
        }
        Family::Star => (
            Graph::from_edges(n, (1..n).map(|v| (0, v)))?,
            format!("K1,{}", n - 1),
        ),
        Family::RandomGnp { p, seed } => {
            let (num, den) = (*p.numer() as u128, *p.denom() as u128);
            if num > den {
                return Err(Error::InvalidArgument(format!(
                    "edge probability {} exceeds 1",
                    p
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let x = rng.next_u64() as u128;
                    if (x * den) >> 64 < num {
                        edges.push((u, v));
                    }
                }
            }
            (
                Graph::from_edges(n, edges)?,
                format!("gnp{}-{}-{}", n, p, seed),
            )
        }
    };
    Ok(g.with_name(name))
}

/// Parses a graph token.
///
/// Accepted forms: `P<n>`, `C<n>`, `K<n>`, `S<n>` (star on `n` vertices),
/// `K1,<m>`, `path:<n>`, `cycle:<n>`, `complete:<n>`, `star:<n>`,
/// `gnp:<n>:<p>:<seed>` with `p` written `a/b` or as an integer, and
/// `g6:<graph6>`.
pub fn parse_graph_token(token: &str) -> Result<Graph> {
    let token = token.trim();
    let bad = || Error::InvalidArgument(format!("unrecognized graph token {:?}", token));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());

    if let Some(code) = token.strip_prefix("g6:") {
        return parse_graph6(code).map(|g| g.with_name(token));
    }
    if let Some(rest) = token.strip_prefix("K1,") {
        return make_family(Family::Star, num(rest)? + 1);
    }
    if let Some((kind, rest)) = token.split_once(':') {
        let family = match kind {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "star" => Family::Star,
            "gnp" => {
                let parts: Vec<&str> = rest.split(':').collect();
                let [n, p, seed] = parts[..] else {
                    return Err(bad());
                };
                let p: Ratio<u32> = p.parse().map_err(|_| bad())?;
                let seed = seed.parse::<u64>().map_err(|_| bad())?;
                return make_family(Family::RandomGnp { p, seed }, num(n)?);
            }
            _ => return Err(bad()),
        };
        return make_family(family, num(rest)?);
    }
    let mut chars = token.chars();
    let family = match chars.next() {
        Some('P') => Family::Path,
        Some('C') => Family::Cycle,
        Some('K') => Family::Complete,
        Some('S') => Family::Star,
        _ => return Err(bad()),
    };
    make_family(family, num(chars.as_str())?)
}
