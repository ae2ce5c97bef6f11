//! Exact domination invariants: γ, γ-set enumeration, allegiance, power,
//! and `[1,k]`-domination.

mod enumerate;
mod power;
mod solver;

pub use enumerate::DominatingSetsOfSize;
pub use power::{
    allegiance, enumerate_gamma_sets, gamma_1k, is_1k_set, power_closed, power_open, power_report,
    PowerReport, PowerWitness,
};
pub use solver::{
    domination_number, greedy_dominating_set, is_dominating, minimum_dominating_set,
    MinimumDominatingSet,
};
