//! The overcount inequality behind the π-bound and closed-form lower bounds
//! on `γ(G□H)`.
//!
//! For `t ∈ ℝⁿ` with `Σ t_i = 1`, `t_i ≥ 0` and `t_1 ≥ Σ_{i≥2} (i−1) t_i`,
//! the weighted sum `f(t) = Σ i·t_i` is at most `(2n−1)/n`.

pub mod lp;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{format_ratio, Scalar};
use crate::Rational;
use lp::{Constraint, LpOptimum, Polytope};

/// A point `(t_1, ..., t_n)` of the probability simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint<T> {
    t: Vec<T>,
}

impl<T: Scalar> SimplexPoint<T> {
    pub fn new(t: Vec<T>) -> Result<Self> {
        if t.is_empty() {
            return Err(Error::InvalidArgument("simplex point needs n >= 1".into()));
        }
        Ok(Self { t })
    }

    /// Normalizes nonnegative integer weights `w` to `t_i = w_i / Σ w`.
    pub fn from_weights(w: &[u64]) -> Result<Self> {
        let total: u64 = w.iter().sum();
        if total == 0 {
            return Err(Error::InvalidArgument("weights sum to zero".into()));
        }
        let total = T::from_i64(total as i64);
        Self::new(
            w.iter()
                .map(|&x| T::from_i64(x as i64) / total.clone())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.t.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.t
    }

    /// `f(t) = Σ i · t_i` with 1-based `i`.
    pub fn objective(&self) -> T {
        self.t.iter().enumerate().fold(T::zero(), |acc, (i, ti)| {
            acc + T::from_usize(i + 1) * ti.clone()
        })
    }

    /// `t_1 − Σ_{i≥2} (i−1) t_i`.
    pub fn slack(&self) -> T {
        self.t
            .iter()
            .enumerate()
            .skip(1)
            .fold(self.t[0].clone(), |acc, (i, ti)| {
                acc - T::from_usize(i) * ti.clone()
            })
    }

    /// Exact only for exact scalars.
    pub fn is_feasible(&self) -> bool {
        let sum = self.t.iter().fold(T::zero(), |a, x| a + x.clone());
        sum == T::one() && self.t.iter().all(|x| *x >= T::zero()) && self.slack() >= T::zero()
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidArgument(format!(
            "dimension must be at least 2, got {}",
            n
        )))
    } else {
        Ok(())
    }
}

/// `(2n−1)/n` with the extremal point `t_1 = (n−1)/n`, `t_n = 1/n`.
pub fn prop1_max<T: Scalar>(n: usize) -> Result<(T, SimplexPoint<T>)> {
    check_dim(n)?;
    let nn = n as i64;
    let mut t = vec![T::zero(); n];
    t[0] = T::ratio(nn - 1, nn);
    t[n - 1] = T::ratio(1, nn);
    Ok((T::ratio(2 * nn - 1, nn), SimplexPoint::new(t)?))
}

/// Largest dimension the vertex-enumeration oracle accepts.
pub const ORACLE_MAX_DIM: usize = 8;

fn int(x: i64) -> Rational {
    Rational::from_i64(x)
}

fn objective(n: usize) -> Vec<Rational> {
    (1..=n as i64).map(int).collect()
}

/// Row `t_1 − Σ (i−1) t_i ≥ 0`.
fn slack_row(n: usize) -> Constraint {
    Constraint {
        coeffs: (0..n as i64)
            .map(|i| if i == 0 { int(1) } else { int(-i) })
            .collect(),
        rhs: int(0),
    }
}

fn sum_row(n: usize, rhs: i64) -> Constraint {
    Constraint {
        coeffs: vec![int(1); n],
        rhs: int(rhs),
    }
}

fn unit_row(n: usize, i: usize, sign: i64, rhs: i64) -> Constraint {
    let mut coeffs = vec![int(0); n];
    coeffs[i] = int(sign);
    Constraint {
        coeffs,
        rhs: int(rhs),
    }
}

/// Maximizes `f` over the feasible polytope by enumerating every vertex.
pub fn prop1_oracle_solution(n: usize) -> Result<LpOptimum> {
    check_dim(n)?;
    if n > ORACLE_MAX_DIM {
        return Err(Error::InvalidArgument(format!(
            "oracle supports n <= {}, got {}",
            ORACLE_MAX_DIM, n
        )));
    }
    let mut inequalities = vec![slack_row(n)];
    inequalities.extend((0..n).map(|i| unit_row(n, i, 1, 0)));
    let poly = Polytope {
        dim: n,
        equalities: vec![sum_row(n, 1)],
        inequalities,
    };
    poly.maximize(&objective(n))
        .ok_or_else(|| Error::ContractViolation("feasible polytope has no vertex".into()))
}

pub fn prop1_oracle(n: usize) -> Result<Rational> {
    prop1_oracle_solution(n).map(|s| s.value)
}

/// With nonnegativity dropped, searches the recession cone
/// `{d : Σ d = 0, d_1 ≥ Σ (i−1) d_i}` (boxed to `[-1, 1]ⁿ`) for a direction
/// along which `f` grows. Returns it if one exists.
pub fn prop1_unbounded_ray(n: usize) -> Result<Option<Vec<Rational>>> {
    check_dim(n)?;
    let mut inequalities = vec![slack_row(n)];
    for i in 0..n {
        inequalities.push(unit_row(n, i, 1, -1));
        inequalities.push(unit_row(n, i, -1, -1));
    }
    let cone = Polytope {
        dim: n,
        equalities: vec![sum_row(n, 0)],
        inequalities,
    };
    let best = cone
        .maximize(&objective(n))
        .ok_or_else(|| Error::ContractViolation("recession box has no vertex".into()))?;
    Ok((best.value > int(0)).then_some(best.point))
}

/// `π/(2π−1)`.
pub fn power_coefficient<T: Scalar>(power: usize) -> T {
    let p = power as i64;
    T::ratio(p, 2 * p - 1)
}

/// `π/(2π−1) · γ(G)γ(H)`.
pub fn pi_bound<T: Scalar>(power: usize, gamma_g: usize, gamma_h: usize) -> T {
    power_coefficient::<T>(power) * T::from_usize(gamma_g * gamma_h)
}

/// `½γ(G)γ(H) + ½min{γ(G), γ(H)}`.
pub fn suen_tarr<T: Scalar>(gamma_g: usize, gamma_h: usize) -> T {
    T::ratio((gamma_g * gamma_h + gamma_g.min(gamma_h)) as i64, 2)
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

fn ser_opt_rational<S: Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&format_ratio(r)),
        None => s.serialize_none(),
    }
}

/// Satisfaction of each bound by an exact `γ(G□H)`, decided as
/// `⌈rhs⌉ ≤ γ(G□H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundChecks {
    pub vizing: bool,
    pub suen_tarr: bool,
    pub pi_bound: bool,
    pub gamma_bound: bool,
    /// Absent when Δ(G) = 0.
    pub delta_bound: Option<bool>,
}

impl BoundChecks {
    /// The bounds the power argument asserts: π, γ and Δ forms.
    pub fn power_bounds_hold(&self) -> bool {
        self.pi_bound && self.gamma_bound && self.delta_bound != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub pi_g: usize,
    pub delta_g: usize,
    pub gamma_product: Option<usize>,
    #[serde(serialize_with = "ser_rational")]
    pub vizing_rhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub suen_tarr_rhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub pi_bound_rhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub gamma_bound_rhs: Rational,
    /// `Δ/(2Δ−1)·γ(G)γ(H)`; undefined for Δ(G) = 0.
    #[serde(serialize_with = "ser_opt_rational")]
    pub delta_bound_rhs: Option<Rational>,
    /// π-bound strictly above the Suen–Tarr bound.
    pub improves_suen_tarr: bool,
    pub checks: Option<BoundChecks>,
}

fn holds(rhs: &Rational, exact: usize) -> bool {
    rhs.ceil_i64() <= exact as i64
}

impl BoundReport {
    pub fn with_product(mut self, gamma_product: usize) -> Self {
        self.gamma_product = Some(gamma_product);
        self.checks = Some(BoundChecks {
            vizing: holds(&self.vizing_rhs, gamma_product),
            suen_tarr: holds(&self.suen_tarr_rhs, gamma_product),
            pi_bound: holds(&self.pi_bound_rhs, gamma_product),
            gamma_bound: holds(&self.gamma_bound_rhs, gamma_product),
            delta_bound: self
                .delta_bound_rhs
                .as_ref()
                .map(|r| holds(r, gamma_product)),
        });
        self
    }
}

/// All closed-form bounds for the given invariants. `delta_g` may be zero.
pub fn bounds(gamma_g: usize, gamma_h: usize, pi_g: usize, delta_g: usize) -> Result<BoundReport> {
    if gamma_g == 0 || gamma_h == 0 || pi_g == 0 {
        return Err(Error::InvalidArgument(format!(
            "γ(G) = {}, γ(H) = {}, π(G) = {} must all be positive",
            gamma_g, gamma_h, pi_g
        )));
    }
    let pi_bound_rhs = pi_bound::<Rational>(pi_g, gamma_g, gamma_h);
    let suen_tarr_rhs = suen_tarr::<Rational>(gamma_g, gamma_h);
    Ok(BoundReport {
        gamma_g,
        gamma_h,
        pi_g,
        delta_g,
        gamma_product: None,
        vizing_rhs: Rational::from_usize(gamma_g * gamma_h),
        improves_suen_tarr: pi_bound_rhs > suen_tarr_rhs,
        suen_tarr_rhs,
        pi_bound_rhs,
        gamma_bound_rhs: pi_bound::<Rational>(gamma_g, gamma_g, gamma_h),
        delta_bound_rhs: (delta_g > 0).then(|| pi_bound::<Rational>(delta_g, gamma_g, gamma_h)),
        checks: None,
    })
}

/// Whether `γ(G)/(2γ(G)−1)·γ(G)γ(H)` strictly exceeds the Suen–Tarr bound.
pub fn improvement_region(gamma_g: usize, gamma_h: usize) -> bool {
    pi_bound::<Rational>(gamma_g, gamma_g, gamma_h) > suen_tarr::<Rational>(gamma_g, gamma_h)
}

/// The stated sufficient condition `γ(G) < (γ(H)+1)/2` or `γ(H) < (γ(G)+1)/2`.
pub fn improvement_condition(gamma_g: usize, gamma_h: usize) -> bool {
    2 * gamma_g < gamma_h + 1 || 2 * gamma_h < gamma_g + 1
}

/// Grid points in `1..=max` where the region and the condition disagree.
pub fn improvement_discrepancies(max: usize) -> Vec<(usize, usize)> {
    (1..=max)
        .flat_map(|a| (1..=max).map(move |b| (a, b)))
        .filter(|&(a, b)| improvement_region(a, b) != improvement_condition(a, b))
        .collect()
}
