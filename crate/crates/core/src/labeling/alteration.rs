//! Internal and external alteration rules.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Conflict, Diagnostic, Labeling, Stage};

pub(super) fn choose<T: Copy>(rng: &mut ChaCha8Rng, options: &[T]) -> T {
    options[rng.gen_range(0..options.len())]
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Scope {
    Internal,
    External,
}

impl Labeling<'_> {
    /// Applies the pair rules to every pair of labels in row `h` until each
    /// pair is disjoint or both singletons (or blocked). Returns whether any
    /// label changed.
    pub fn internal_alteration(&mut self, h: usize) -> bool {
        let row = self.rows[h].clone();
        let mut any = false;
        loop {
            let mut changed = false;
            for (i, &a) in row.iter().enumerate() {
                for &b in &row[i + 1..] {
                    changed |= self.alter_pair(a, b, Scope::Internal);
                }
            }
            any |= changed;
            if !changed {
                return any;
            }
        }
    }

    /// Applies the pair rules between row `h` and each neighbor row `h_i`,
    /// neighbors ascending. Returns whether any label changed.
    pub fn external_alteration(&mut self, h: usize) -> bool {
        let row = self.rows[h].clone();
        let mut any = false;
        for hh in self.prod.h_factor().neighbors(h).iter() {
            let other = self.rows[hh].clone();
            for &a in &row {
                for &b in &other {
                    any |= self.alter_pair(a, b, Scope::External);
                }
            }
        }
        any
    }

    fn remove(&mut self, idx: usize, x: usize) {
        let label = self.entries[idx].label.without(x);
        debug_assert!(!label.is_empty());
        self.set_label(idx, label, Stage::Labeling2);
    }

    fn eligible(&self, idx: usize, x: usize) -> bool {
        self.entries[idx].protected() != Some(x)
    }

    fn conflict(&mut self, rule: &'static str, a: usize, b: usize) {
        let (ea, eb) = (&self.entries[a], &self.entries[b]);
        let c = Diagnostic::Conflict(Conflict {
            rule,
            first: (ea.g, ea.h),
            second: (eb.g, eb.h),
            first_label: ea.label,
            second_label: eb.label,
        });
        if !self.diagnostics.contains(&c) {
            self.diagnostics.push(c);
        }
    }

    /// Orders the pair so the lexicographically first label comes first.
    fn lex_first(&self, a: usize, b: usize) -> (usize, usize) {
        if self.entries[b].label.lex_cmp(self.entries[a].label).is_lt() {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// Rules on labels `S` (entry `a`) and `T` (entry `b`):
    /// 1. `|S∩T| > 1`: drop one common element from `S`, a different one from `T`; repeat.
    /// 2. `|S| = 1 < |T|`, meeting: drop the element of `S` from `T` (and symmetrically).
    /// 3. both singletons: no change.
    /// 4. `|S|, |T| > 1`, `|S∩T| = 1`: drop the common element from one of them.
    fn alter_pair(&mut self, a: usize, b: usize, scope: Scope) -> bool {
        let mut changed = false;
        loop {
            let (s, t) = (self.entries[a].label, self.entries[b].label);
            let common = s.intersection(t);
            if common.len() > 1 {
                let (first, second) = self.lex_first(a, b);
                let mut options = Vec::new();
                for x in common.iter().filter(|&x| self.eligible(first, x)) {
                    for y in common
                        .iter()
                        .filter(|&y| y != x && self.eligible(second, y))
                    {
                        options.push((x, y));
                    }
                }
                let Some(&(x, y)) = (match self.rng.as_mut() {
                    _ if options.is_empty() => None,
                    None => options.first(),
                    Some(rng) => Some(&options[rng.gen_range(0..options.len())]),
                }) else {
                    self.conflict("shared-pair", a, b);
                    return changed;
                };
                self.remove(first, x);
                self.remove(second, y);
                changed = true;
                continue;
            }
            let Some(x) = common.first() else {
                return changed;
            };
            match (s.len(), t.len()) {
                (1, 1) => {}
                (1, _) => changed |= self.strip(b, x, a, "singleton"),
                (_, 1) => {
                    // Internally this is rule 2 with the roles swapped; externally its own rule.
                    let rule = match scope {
                        Scope::Internal => "singleton",
                        Scope::External => "singleton-reverse",
                    };
                    changed |= self.strip(a, x, b, rule);
                }
                _ => {
                    let (first, second) = self.lex_first(a, b);
                    let sides: Vec<usize> = [first, second]
                        .into_iter()
                        .filter(|&e| self.eligible(e, x))
                        .collect();
                    let side = match (sides.as_slice(), self.rng.as_mut()) {
                        ([], _) => None,
                        ([only], _) => Some(*only),
                        (all, None) => Some(all[0]),
                        (all, Some(rng)) => Some(choose(rng, all)),
                    };
                    match side {
                        Some(e) => {
                            self.remove(e, x);
                            changed = true;
                        }
                        None => self.conflict("single-overlap", a, b),
                    }
                }
            }
            return changed;
        }
    }

    /// Removes `x` from `target` unless dominion forbids it.
    fn strip(&mut self, target: usize, x: usize, other: usize, rule: &'static str) -> bool {
        if self.eligible(target, x) {
            self.remove(target, x);
            true
        } else {
            let (first, second) = if target < other {
                (target, other)
            } else {
                (other, target)
            };
            self.conflict(rule, first, second);
            false
        }
    }
}
