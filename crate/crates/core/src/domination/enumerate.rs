use crate::bitset::VertexSet;
use crate::graph::Graph;

/// All dominating sets of a fixed size, each once, in lexicographic order of
/// their sorted member lists.
///
/// Depth-first over ascending members. A prefix is abandoned as soon as some
/// undominated vertex has no closed neighbor left among the larger ids, or the
/// remaining picks cannot cover the undominated count even at maximum degree.
pub struct DominatingSetsOfSize<'g> {
    g: &'g Graph,
    size: usize,
    max_cover: usize,
    /// Chosen members with `N[prefix]` after each.
    stack: Vec<(usize, VertexSet)>,
    next_candidate: usize,
    done: bool,
}

impl<'g> DominatingSetsOfSize<'g> {
    pub fn new(g: &'g Graph, size: usize) -> Self {
        Self {
            g,
            size,
            max_cover: g.max_degree() + 1,
            stack: Vec::with_capacity(size),
            next_candidate: 0,
            done: size > g.order(),
        }
    }

    fn covered(&self) -> VertexSet {
        self.stack.last().map_or(VertexSet::empty(), |&(_, c)| c)
    }

    fn members(&self) -> VertexSet {
        self.stack.iter().map(|&(v, _)| v).collect()
    }

    /// Returns false when the stack is exhausted.
    fn backtrack(&mut self) -> bool {
        match self.stack.pop() {
            Some((v, _)) => {
                self.next_candidate = v + 1;
                true
            }
            None => {
                self.done = true;
                false
            }
        }
    }

    fn feasible(&self, covered: VertexSet, from: usize, picks: usize) -> bool {
        let undominated = self.g.vertices().difference(covered);
        if undominated.len() > picks * self.max_cover {
            return false;
        }
        let later = self.g.vertices().difference(VertexSet::full(from));
        undominated
            .iter()
            .all(|w| !self.g.closed_neighbors(w).is_disjoint(later))
    }
}

impl Iterator for DominatingSetsOfSize<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.g.order();
        while !self.done {
            let depth = self.stack.len();
            if depth == self.size {
                let hit = (self.covered() == self.g.vertices()).then(|| self.members());
                self.backtrack();
                if hit.is_some() {
                    return hit;
                }
                continue;
            }
            let picks = self.size - depth;
            let c = self.next_candidate;
            if c + picks <= n && self.feasible(self.covered(), c, picks) {
                let covered = self.covered().union(self.g.closed_neighbors(c));
                self.stack.push((c, covered));
                self.next_candidate = c + 1;
            } else if !self.backtrack() {
                break;
            }
        }
        None
    }
}
