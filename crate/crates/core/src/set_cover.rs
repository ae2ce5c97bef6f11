//! Exact minimum set cover for small instances.

use std::collections::HashMap;

use crate::bitset::VertexSet;

/// Indices of a minimum subfamily of `sets` covering `universe`, or `None`
/// if the union falls short. Ties resolve to the first cover found when
/// branching on the uncovered element with the fewest covering sets.
///
/// Exponential in the worst case; memoized on the uncovered remainder.
pub fn min_set_cover(universe: VertexSet, sets: &[VertexSet]) -> Option<Vec<usize>> {
    let mut memo = HashMap::new();
    solve(universe, sets, &mut memo)
}

fn solve(
    uncovered: VertexSet,
    sets: &[VertexSet],
    memo: &mut HashMap<VertexSet, Option<Vec<usize>>>,
) -> Option<Vec<usize>> {
    if uncovered.is_empty() {
        return Some(Vec::new());
    }
    if let Some(hit) = memo.get(&uncovered) {
        return hit.clone();
    }
    let pivot = uncovered
        .iter()
        .min_by_key(|&e| sets.iter().filter(|s| s.contains(e)).count())
        .expect("nonempty");
    let mut best: Option<Vec<usize>> = None;
    for (i, s) in sets.iter().enumerate() {
        if !s.contains(pivot) {
            continue;
        }
        if let Some(mut rest) = solve(uncovered.difference(*s), sets, memo) {
            if best.as_ref().is_none_or(|b| rest.len() + 1 < b.len()) {
                rest.push(i);
                best = Some(rest);
            }
        }
    }
    if let Some(b) = best.as_mut() {
        b.sort_unstable();
    }
    memo.insert(uncovered, best.clone());
    best
}
