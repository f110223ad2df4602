//! Known upper bounds on runs and exponent sums, checked exactly on
//! individual words.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::from_usize;
use crate::runs::RunStats;

/// Numeric constants used by the checks. Defaults are the published
/// values; [`Thresholds::set`] overrides one by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thresholds {
    /// A word certifies the lower bound when `sigma / n` exceeds this.
    pub lower_bound_target: BigRational,
    /// `rho <= runs_bound * n`.
    pub runs_bound: BigRational,
    /// `rho_cubic <= cubic_runs_bound * n`.
    pub cubic_runs_bound: BigRational,
    /// `sigma < sigma_bound * n`.
    pub sigma_bound: BigRational,
    /// `sigma_cubic < sigma_cubic_bound * n`.
    pub sigma_cubic_bound: BigRational,
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            lower_bound_target: q(2035, 1000),
            runs_bound: q(1029, 1000),
            cubic_runs_bound: q(1, 2),
            sigma_bound: q(41, 10),
            sigma_cubic_bound: q(5, 2),
        }
    }
}

impl Thresholds {
    pub const NAMES: [&'static str; 5] = [
        "lower_bound_target",
        "runs_bound",
        "cubic_runs_bound",
        "sigma_bound",
        "sigma_cubic_bound",
    ];

    /// Replaces the named constant. Returns false for an unknown name.
    pub fn set(&mut self, name: &str, value: BigRational) -> bool {
        let slot = match name {
            "lower_bound_target" => &mut self.lower_bound_target,
            "runs_bound" => &mut self.runs_bound,
            "cubic_runs_bound" => &mut self.cubic_runs_bound,
            "sigma_bound" => &mut self.sigma_bound,
            "sigma_cubic_bound" => &mut self.sigma_cubic_bound,
            _ => return false,
        };
        *slot = value;
        true
    }
}

/// Outcome of the per-word bound checks; every field is `true` when the
/// inequality holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundChecks {
    pub runs: bool,
    pub sigma: bool,
    pub cubic_runs: bool,
    pub sigma_cubic: bool,
    /// `sigma < 3 rho + n`.
    pub sigma_below_three_rho_plus_n: bool,
}

impl BoundChecks {
    pub fn all_pass(&self) -> bool {
        self.runs
            && self.sigma
            && self.cubic_runs
            && self.sigma_cubic
            && self.sigma_below_three_rho_plus_n
    }

    /// `(name, holds)` pairs in a fixed order.
    pub fn entries(&self) -> [(&'static str, bool); 5] {
        [
            ("rho <= runs_bound * n", self.runs),
            ("sigma < sigma_bound * n", self.sigma),
            ("rho_cubic <= cubic_runs_bound * n", self.cubic_runs),
            ("sigma_cubic < sigma_cubic_bound * n", self.sigma_cubic),
            ("sigma < 3 rho + n", self.sigma_below_three_rho_plus_n),
        ]
    }
}

/// The empty word has no runs; its strict inequalities hold vacuously.
pub fn check_bounds(stats: &RunStats, t: &Thresholds) -> BoundChecks {
    if stats.n == 0 {
        return BoundChecks {
            runs: true,
            sigma: true,
            cubic_runs: true,
            sigma_cubic: true,
            sigma_below_three_rho_plus_n: true,
        };
    }
    let n = from_usize(stats.n);
    let rho = from_usize(stats.rho);
    BoundChecks {
        runs: rho <= &t.runs_bound * &n,
        sigma: stats.sigma < &t.sigma_bound * &n,
        cubic_runs: from_usize(stats.rho_cubic) <= &t.cubic_runs_bound * &n,
        sigma_cubic: stats.sigma_cubic < &t.sigma_cubic_bound * &n,
        sigma_below_three_rho_plus_n: stats.sigma < rho * from_usize(3) + n,
    }
}

/// Strict `sigma / n > lower_bound_target`, compared as `sigma > target * n`.
pub fn exceeds_lower_bound_target(stats: &RunStats, t: &Thresholds) -> bool {
    stats.sigma > &t.lower_bound_target * from_usize(stats.n)
}
