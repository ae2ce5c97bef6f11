//! Forbidden induced subgraph tests by exhaustive 4-subset scan.

use super::Graph;

fn four_subsets(g: &Graph) -> impl Iterator<Item = [usize; 4]> {
    let n = g.order();
    (0..n).flat_map(move |a| {
        (a + 1..n)
            .flat_map(move |b| (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d])))
    })
}

/// Degrees inside the subgraph induced by `vs`, sorted, plus its edge count.
fn induced_profile(g: &Graph, vs: [usize; 4]) -> ([usize; 4], usize) {
    let mut deg = [0usize; 4];
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(vs[i], vs[j]) {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    deg.sort_unstable();
    let edges = deg.iter().sum::<usize>() / 2;
    (deg, edges)
}

/// True iff no four vertices induce `K_{1,3}`.
pub fn is_claw_free(g: &Graph) -> bool {
    four_subsets(g).all(|vs| induced_profile(g, vs).0 != [1, 1, 1, 3])
}

/// True iff no four vertices induce `P_4`.
pub fn is_p4_free(g: &Graph) -> bool {
    // Among 4-vertex graphs with 3 edges and degrees (1,1,2,2), only P_4 qualifies.
    four_subsets(g).all(|vs| induced_profile(g, vs) != ([1, 1, 2, 2], 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    #[test]
    fn named_examples() {
        let claw = make_family(Family::Star, 4).unwrap();
        assert!(!is_claw_free(&claw));
        assert!(is_p4_free(&claw));

        let p4 = make_family(Family::Path, 4).unwrap();
        assert!(is_claw_free(&p4));
        assert!(!is_p4_free(&p4));

        let c6 = make_family(Family::Cycle, 6).unwrap();
        assert!(is_claw_free(&c6));
        assert!(!is_p4_free(&c6));
    }

    #[test]
    fn small_graphs_are_free() {
        let k3 = make_family(Family::Complete, 3).unwrap();
        assert!(is_claw_free(&k3) && is_p4_free(&k3));
        let c4 = make_family(Family::Cycle, 4).unwrap();
        assert!(is_claw_free(&c4) && is_p4_free(&c4));
        let c5 = make_family(Family::Cycle, 5).unwrap();
        assert!(is_claw_free(&c5) && !is_p4_free(&c5));
    }
}
