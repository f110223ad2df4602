//! Handle sets of runs.
//!
//! For a run `v` with period `p`, let `b` be its length-`p` prefix and
//! `b_min`, `b_max` the minimal and maximal rotations of `b`.
//!
//! * If `b_min = b_max` (only possible for `p = 1`), `H(v)` holds every
//!   inter-position inside `v`.
//! * Otherwise `H(v)` holds the inter-position where two adjacent full
//!   occurrences of `b_min` inside `v` meet, and likewise for `b_max`.
//!
//! Inter-position `k` lies between letters `k` and `k + 1` (1-based).
//! Handle sets of distinct runs of one word are disjoint, which bounds their
//! total size by `n - 1`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::periods::extreme_rotation_offset;
use crate::runs::Run;
use crate::word::Word;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandleSet {
    pub owner: Run,
    /// Sorted, distinct inter-positions, each in `owner.start..owner.end`.
    pub positions: Vec<usize>,
    /// True when the extreme rotations coincide and every inter-position is
    /// a handle.
    pub all_inter_positions: bool,
}

impl HandleSet {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

fn rotations_equal(block: &[u8], a: usize, b: usize) -> bool {
    let p = block.len();
    (0..p).all(|k| block[(a + k) % p] == block[(b + k) % p])
}

/// Inter-positions where adjacent occurrences starting at
/// `first, first + p, ...` meet, for occurrences lying inside `run`.
fn junctions(run: &Run, first: usize, out: &mut Vec<usize>) {
    let p = run.period;
    let mut s = first;
    while s + 2 * p - 1 <= run.end {
        out.push(s + p - 1);
        s += p;
    }
}

pub(crate) fn handles_unchecked(u: &[u8], run: &Run) -> HandleSet {
    let p = run.period;
    let block = &u[run.start - 1..run.start - 1 + p];
    let min_offset = extreme_rotation_offset(block, Ordering::Less);
    let max_offset = extreme_rotation_offset(block, Ordering::Greater);

    if rotations_equal(block, min_offset, max_offset) {
        return HandleSet {
            owner: *run,
            positions: (run.start..run.end).collect(),
            all_inter_positions: true,
        };
    }

    // the block is primitive, so occurrences of a rotation inside the run
    // are exactly p apart, starting at its offset
    debug_assert!({
        let r = &u[run.start - 1..run.end];
        let rot: Vec<u8> = (0..p).map(|k| block[(min_offset + k) % p]).collect();
        (0..=r.len() - p)
            .filter(|&s| r[s..s + p] == rot[..])
            .all(|s| s % p == min_offset)
    });

    let mut positions = Vec::new();
    junctions(run, run.start + min_offset, &mut positions);
    let split = positions.len();
    junctions(run, run.start + max_offset, &mut positions);
    // merge two sorted progressions
    let (lo, hi) = positions.split_at(split);
    let mut merged = Vec::with_capacity(positions.len());
    let (mut x, mut y) = (0, 0);
    while x < lo.len() || y < hi.len() {
        if y == hi.len() || (x < lo.len() && lo[x] < hi[y]) {
            merged.push(lo[x]);
            x += 1;
        } else {
            merged.push(hi[y]);
            y += 1;
        }
    }
    merged.dedup();
    HandleSet {
        owner: *run,
        positions: merged,
        all_inter_positions: false,
    }
}

/// `H(v)` for a run `v` of `w`. Fails if `v` is not a run of `w`.
pub fn handles_of_run(w: &Word, v: &Run) -> Result<HandleSet> {
    v.validate(w)?;
    Ok(handles_unchecked(w.as_bytes(), v))
}

/// Which inequality of the per-run exponent bound failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma1Check {
    /// `p = 1`: exponent equals `|H(v)| + 1`.
    PeriodOneEquality,
    /// `p >= 2`: `ceil(exponent) <= |H(v)| / 2 + 3`.
    CeilingBound,
    /// `p >= 2`: `|H(v)| >= 2 (floor(exponent) - 2)`.
    FloorBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Failure {
    pub run: Run,
    pub handles: usize,
    pub check: Lemma1Check,
}

/// An inter-position claimed by two runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collision {
    pub position: usize,
    pub first: Run,
    pub second: Run,
}

const MAX_LISTED: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandleReport {
    pub n: usize,
    pub rho: usize,
    /// `|H(v)|` for each run, in the order the runs were given.
    pub sizes: Vec<usize>,
    /// Total handles of period-1 runs.
    pub a: usize,
    /// Total handles of runs with period at least 2.
    pub b: usize,
    pub disjoint: bool,
    /// First few collisions, when not disjoint.
    pub collisions: Vec<Collision>,
    /// Case (a) of the definition occurred exactly for the period-1 runs.
    pub case_a_iff_p1: bool,
    pub case_a_mismatches: Vec<Run>,
    pub lemma1_failures: Vec<Lemma1Failure>,
    /// `A + B <= n - 1`.
    pub total_within_bound: bool,
    /// Runs given that do not lie inside the word; they are skipped.
    pub out_of_range: Vec<Run>,
}

impl HandleReport {
    pub fn all_pass(&self) -> bool {
        self.disjoint
            && self.case_a_iff_p1
            && self.lemma1_failures.is_empty()
            && self.total_within_bound
            && self.out_of_range.is_empty()
    }
}

fn lemma1(run: &Run, h: usize, failures: &mut Vec<Lemma1Failure>) {
    let e = run.exponent();
    let mut fail = |check| {
        failures.push(Lemma1Failure {
            run: *run,
            handles: h,
            check,
        })
    };
    if run.period == 1 {
        // exponent of a period-1 run is its length
        if run.len() != h + 1 {
            fail(Lemma1Check::PeriodOneEquality);
        }
    } else {
        // ceil(e) <= h/2 + 3  <=>  2 ceil(e) <= h + 6
        if 2 * e.ceil() > h + 6 {
            fail(Lemma1Check::CeilingBound);
        }
        if h + 4 < 2 * e.floor() {
            fail(Lemma1Check::FloorBound);
        }
    }
}

/// Builds every handle set and checks disjointness, the case (a) iff `p = 1`
/// property, both branches of the per-run exponent bound, and `A + B <= n - 1`.
/// Failed checks are recorded in the report.
pub fn verify_handle_properties(w: &Word, runs: &[Run]) -> HandleReport {
    let u = w.as_bytes();
    let n = u.len();
    const FREE: u32 = u32::MAX;
    let mut owner = vec![FREE; n];
    let mut report = HandleReport {
        n,
        rho: runs.len(),
        sizes: Vec::with_capacity(runs.len()),
        a: 0,
        b: 0,
        disjoint: true,
        collisions: Vec::new(),
        case_a_iff_p1: true,
        case_a_mismatches: Vec::new(),
        lemma1_failures: Vec::new(),
        total_within_bound: true,
        out_of_range: Vec::new(),
    };

    for (idx, run) in runs.iter().enumerate() {
        if run.start == 0
            || run.end > n
            || run.period == 0
            || run.start + 2 * run.period > run.end + 1
        {
            report.out_of_range.push(*run);
            report.sizes.push(0);
            continue;
        }
        let hs = handles_unchecked(u, run);
        let h = hs.len();
        report.sizes.push(h);
        if run.period == 1 {
            report.a += h;
        } else {
            report.b += h;
        }
        if hs.all_inter_positions != (run.period == 1) {
            report.case_a_iff_p1 = false;
            if report.case_a_mismatches.len() < MAX_LISTED {
                report.case_a_mismatches.push(*run);
            }
        }
        lemma1(run, h, &mut report.lemma1_failures);
        for &k in &hs.positions {
            let slot = &mut owner[k];
            if *slot == FREE {
                *slot = idx as u32;
            } else {
                report.disjoint = false;
                if report.collisions.len() < MAX_LISTED {
                    report.collisions.push(Collision {
                        position: k,
                        first: runs[*slot as usize],
                        second: *run,
                    });
                }
            }
        }
    }
    report.total_within_bound = report.a + report.b < n.max(1);
    report
}
