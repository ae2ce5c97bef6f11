//! Exact maximization of a linear objective over a bounded polytope by
//! enumerating every basis of active constraints.

use num_traits::{One, Zero};

use crate::Rational;

/// `a · x = b` or `a · x ≥ b`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

#[derive(Debug, Clone, Default)]
pub struct Polytope {
    pub dim: usize,
    pub equalities: Vec<Constraint>,
    pub inequalities: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpOptimum {
    pub value: Rational,
    pub point: Vec<Rational>,
    /// Number of distinct feasible vertices visited.
    pub vertices: usize,
}

fn dot(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

/// Solves the square system by Gauss–Jordan elimination; `None` if singular.
fn solve_square(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = Rational::one() / rows[col][col].clone();
        for c in col..n {
            rows[col][c] = &rows[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r == col || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..n {
                let delta = &factor * &rows[col][c];
                rows[r][c] -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    Some(rhs)
}

fn combinations(n: usize, r: usize, mut visit: impl FnMut(&[usize])) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        visit(&idx);
        let Some(pos) = (0..r).rev().find(|&i| idx[i] != i + n - r) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl Polytope {
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|c| dot(&c.coeffs, x) == c.rhs)
            && self.inequalities.iter().all(|c| dot(&c.coeffs, x) >= c.rhs)
    }

    /// Maximizes `objective · x` over all vertices. The polytope must be
    /// bounded for the result to be the true maximum; `None` when no vertex
    /// exists. Ties keep the first vertex in basis-enumeration order.
    pub fn maximize(&self, objective: &[Rational]) -> Option<LpOptimum> {
        let free = self.dim.checked_sub(self.equalities.len())?;
        let mut best: Option<LpOptimum> = None;
        let mut seen: Vec<Vec<Rational>> = Vec::new();
        combinations(self.inequalities.len(), free, |active| {
            let mut rows: Vec<Vec<Rational>> =
                self.equalities.iter().map(|c| c.coeffs.clone()).collect();
            let mut rhs: Vec<Rational> = self.equalities.iter().map(|c| c.rhs.clone()).collect();
            for &i in active {
                rows.push(self.inequalities[i].coeffs.clone());
                rhs.push(self.inequalities[i].rhs.clone());
            }
            let Some(x) = solve_square(rows, rhs) else {
                return;
            };
            if !self.contains(&x) || seen.contains(&x) {
                return;
            }
            let value = dot(objective, &x);
            if best.as_ref().is_none_or(|b| value > b.value) {
                best = Some(LpOptimum {
                    value,
                    point: x.clone(),
                    vertices: 0,
                });
            }
            seen.push(x);
        });
        best.map(|mut b| {
            b.vertices = seen.len();
            b
        })
    }
}
