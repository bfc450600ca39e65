//! Independent verification machinery: exhaustive grid search over the
//! sorted probability simplex, the perturbation moves behind the extremal
//! arguments, a local-ascent optimizer composed from them, and seeded
//! sampling of anti-uniform sources.

mod ascent;
mod grid;
mod moves;
mod sample;

pub use ascent::{local_ascent, AscentOptions};
pub use grid::{brute_force_max, enumerate_sorted_simplex, SortedSimplexIter};
pub use moves::{spread_from_head, spread_from_leaf};
pub use sample::random_auh;

use std::fmt;
use std::str::FromStr;

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::real::Real;

/// A search grid: probabilities are multiples of `1/m` over `n` symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub n: usize,
    pub m: u64,
}

impl GridSpec {
    pub fn new(n: usize, m: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadParam(format!("grid needs n >= 2, got {n}")));
        }
        if m < n as u64 {
            return Err(Error::BadParam(format!(
                "grid resolution m = {m} is below n = {n}; no positive sorted point exists"
            )));
        }
        Ok(GridSpec { n, m })
    }
}

/// Default grid resolution keeping full enumeration at desk scale.
pub fn default_grid_m(n: usize) -> u64 {
    match n {
        0..=4 => 60,
        5 => 40,
        6 => 24,
        7 => 18,
        _ => (2 * n as u64).max(16),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    AvgLength,
    Entropy,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::AvgLength => f.write_str("avg_length"),
            Objective::Entropy => f.write_str("entropy"),
        }
    }
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "length" | "avg_length" => Ok(Objective::AvgLength),
            "entropy" => Ok(Objective::Entropy),
            other => Err(Error::BadParam(format!("unknown objective {other:?}"))),
        }
    }
}

/// Outcome of a search: the best anti-uniform point found, the theoretical
/// bound it is measured against, and the signed gap `bound - best`.
///
/// A negative gap beyond float noise means the search found a point beating
/// the bound; the report carries it as data rather than panicking so that
/// verification layers can surface it.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub objective: Objective,
    pub n: usize,
    /// Grid resolution for exhaustive searches, `None` for ascent runs.
    pub grid_m: Option<u64>,
    /// Seed for randomized runs; grid searches report the default 0.
    pub seed: u64,
    pub best_dist: Distribution,
    pub best_value: Real,
    pub bound: Real,
    pub gap: Real,
    /// Number of objective evaluations behind the report.
    pub evaluated: u64,
}

impl SearchReport {
    /// JSON view with exact rationals rendered as strings; key order is
    /// alphabetical and therefore stable across runs.
    pub fn to_json(&self) -> serde_json::Value {
        let real_json = |r: &Real| -> serde_json::Value {
            match r {
                Real::Exact(_) => serde_json::Value::String(r.to_string()),
                Real::Approx(v) => serde_json::json!(v),
            }
        };
        serde_json::json!({
            "objective": self.objective.to_string(),
            "n": self.n,
            "grid_m": self.grid_m,
            "seed": self.seed,
            "best_dist": crate::json::dist_to_json(&self.best_dist),
            "best_value": real_json(&self.best_value),
            "bound": real_json(&self.bound),
            "gap": real_json(&self.gap),
            "evaluated": self.evaluated,
        })
    }
}
