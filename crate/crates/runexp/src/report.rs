//! JSON shapes for `analyze` and `verify`.

use runexp_core::bounds::BoundChecks;
use runexp_core::exact::{self, Rounding};
use runexp_core::handles::{HandleReport, Lemma1Check};
use runexp_core::{Run, RunStats};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RunJson {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl From<&Run> for RunJson {
    fn from(r: &Run) -> Self {
        RunJson {
            start: r.start,
            end: r.end,
            period: r.period,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma1FailureJson {
    pub run: RunJson,
    pub handles: usize,
    pub check: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct CollisionJson {
    pub position: usize,
    pub first: RunJson,
    pub second: RunJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct HandleReportJson {
    pub n: usize,
    pub rho: usize,
    #[serde(rename = "A")]
    pub a: usize,
    #[serde(rename = "B")]
    pub b: usize,
    pub disjoint: bool,
    pub lemma1_failures: Vec<Lemma1FailureJson>,
    pub case_a_iff_p1: bool,
    pub a_plus_b_below_n: bool,
    pub collisions: Vec<CollisionJson>,
    pub pass: bool,
}

impl From<&HandleReport> for HandleReportJson {
    fn from(r: &HandleReport) -> Self {
        HandleReportJson {
            n: r.n,
            rho: r.rho,
            a: r.a,
            b: r.b,
            disjoint: r.disjoint,
            lemma1_failures: r
                .lemma1_failures
                .iter()
                .map(|f| Lemma1FailureJson {
                    run: (&f.run).into(),
                    handles: f.handles,
                    check: match f.check {
                        Lemma1Check::PeriodOneEquality => "period_one_equality",
                        Lemma1Check::CeilingBound => "ceiling_bound",
                        Lemma1Check::FloorBound => "floor_bound",
                    },
                })
                .collect(),
            case_a_iff_p1: r.case_a_iff_p1,
            a_plus_b_below_n: r.total_within_bound,
            collisions: r
                .collisions
                .iter()
                .map(|c| CollisionJson {
                    position: c.position,
                    first: (&c.first).into(),
                    second: (&c.second).into(),
                })
                .collect(),
            pass: r.all_pass(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StatsJson {
    pub n: usize,
    pub rho: usize,
    pub rho_over_n: String,
    pub sigma: String,
    pub sigma_exact: String,
    pub sigma_over_n: String,
    pub rho_cubic: usize,
    pub sigma_cubic: String,
    pub sigma_cubic_exact: String,
}

impl From<&RunStats> for StatsJson {
    fn from(s: &RunStats) -> Self {
        StatsJson {
            n: s.n,
            rho: s.rho,
            rho_over_n: exact::to_decimal(&s.rho_over_n(), 4, Rounding::HalfUp),
            sigma: exact::to_decimal(&s.sigma, 2, Rounding::HalfUp),
            sigma_exact: exact::to_fraction(&s.sigma),
            sigma_over_n: exact::to_decimal(&s.sigma_over_n(), 4, Rounding::HalfUp),
            rho_cubic: s.rho_cubic,
            sigma_cubic: exact::to_decimal(&s.sigma_cubic, 2, Rounding::HalfUp),
            sigma_cubic_exact: exact::to_fraction(&s.sigma_cubic),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundJson {
    pub check: &'static str,
    pub holds: bool,
}

pub fn bounds_json(b: &BoundChecks) -> Vec<BoundJson> {
    b.entries()
        .iter()
        .map(|&(check, holds)| BoundJson { check, holds })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleJson {
    pub checked: bool,
    pub cap: usize,
    /// `None` when the word is longer than the cap.
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub input: String,
    pub stats: StatsJson,
    pub oracle: OracleJson,
    pub handles: HandleReportJson,
    pub bounds: Vec<BoundJson>,
    pub pass: bool,
}
