//! Enumeration of runs (maximal repetitions) and exact exponent sums.
//!
//! [`find_runs`] works from Lyndon roots: for each of the two letter orders
//! (byte order and its reverse), the longest Lyndon word starting at each
//! position is a candidate period block. Extending a candidate left and right
//! with longest-common-extension queries either yields a run or is discarded.
//! Every run has such a root under at least one of the two orders, so the
//! union over both orders is the full set of runs.
//!
//! [`find_runs_bruteforce`] checks every interval against the definition and
//! shares no code with the fast path.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exact::{self, Rounding};
use crate::lce::Lce;
use crate::word::Word;
use crate::{Error, Result};

/// Default length limit for [`find_runs_bruteforce`].
pub const DEFAULT_ORACLE_CAP: usize = 2000;

/// A run `[start, end]` (1-based, inclusive) with its shortest period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Run {
    /// Never zero: a run spans at least two periods.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_cubic(&self) -> bool {
        3 * self.period <= self.len()
    }

    pub fn exponent(&self) -> Exponent {
        Exponent::new(self.len(), self.period)
    }

    /// Re-checks the four run conditions against `w` from scratch.
    pub fn validate(&self, w: &Word) -> Result<()> {
        let bad = |reason| Error::InvalidRun {
            start: self.start,
            end: self.end,
            period: self.period,
            reason,
        };
        let u = w.as_bytes();
        if self.start == 0 || self.start > self.end || self.end > u.len() || self.period == 0 {
            return Err(bad("interval outside the word"));
        }
        if 2 * self.period > self.len() {
            return Err(bad("length below twice the period"));
        }
        let factor = &u[self.start - 1..self.end];
        if crate::periods::shortest_period(factor)? != self.period {
            return Err(bad("period is not the shortest period of the factor"));
        }
        // 0-based: i = start - 1, j = end - 1
        let (i, j, p) = (self.start - 1, self.end - 1, self.period);
        if i > 0 && u[i - 1] == u[i + p - 1] {
            return Err(bad("extends to the left"));
        }
        if j + 1 < u.len() && u[j + 1 - p] == u[j + 1] {
            return Err(bad("extends to the right"));
        }
        Ok(())
    }
}

impl fmt::Display for Run {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] p={}", self.start, self.end, self.period)
    }
}

/// `length / period`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    num: usize,
    den: usize,
}

impl Exponent {
    pub fn new(length: usize, period: usize) -> Self {
        assert!(period > 0);
        let g = length.gcd(&period);
        Exponent {
            num: length / g,
            den: period / g,
        }
    }

    pub fn numer(&self) -> usize {
        self.num
    }

    pub fn denom(&self) -> usize {
        self.den
    }

    pub fn floor(&self) -> usize {
        self.num / self.den
    }

    pub fn ceil(&self) -> usize {
        self.num.div_ceil(self.den)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

/// Run counts and exact exponent sums of one word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStats {
    pub n: usize,
    pub rho: usize,
    pub sigma: BigRational,
    pub rho_cubic: usize,
    pub sigma_cubic: BigRational,
}

/// Decimal and exact renderings of a sum of exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaRendering {
    pub decimal: alloc::string::String,
    pub exact: alloc::string::String,
}

impl RunStats {
    pub fn rho_over_n(&self) -> BigRational {
        exact::ratio(&exact::from_usize(self.rho), self.n)
    }

    pub fn sigma_over_n(&self) -> BigRational {
        exact::ratio(&self.sigma, self.n)
    }

    /// `sigma` rounded half-up to `digits` decimals, plus the exact fraction.
    pub fn sigma_as_decimal(&self, digits: u32) -> SigmaRendering {
        SigmaRendering {
            decimal: exact::to_decimal(&self.sigma, digits, Rounding::HalfUp),
            exact: exact::to_fraction(&self.sigma),
        }
    }
}

/// Sums `length / period` exactly. Lengths are accumulated per distinct
/// period as integers first, so the rational work is one division per
/// distinct period.
fn exponent_sum<'a>(runs: impl Iterator<Item = &'a Run>) -> BigRational {
    let mut by_period: BTreeMap<usize, u128> = BTreeMap::new();
    for r in runs {
        *by_period.entry(r.period).or_default() += r.len() as u128;
    }
    // common denominator: lcm of all periods
    let mut lcm = BigInt::from(1u32);
    for &p in by_period.keys() {
        lcm = lcm.lcm(&BigInt::from(p));
    }
    let mut numer = BigInt::zero();
    for (&p, &total) in &by_period {
        numer += BigInt::from(total) * (&lcm / BigInt::from(p));
    }
    BigRational::new(numer, lcm)
}

/// `rho`, `sigma` and their cubic counterparts. `runs` must be the full run
/// set of a word of length `n`.
pub fn run_stats(n: usize, runs: &[Run]) -> RunStats {
    RunStats {
        n,
        rho: runs.len(),
        sigma: exponent_sum(runs.iter()),
        rho_cubic: runs.iter().filter(|r| r.is_cubic()).count(),
        sigma_cubic: exponent_sum(runs.iter().filter(|r| r.is_cubic())),
    }
}

/// Runs and statistics of `w` in one call.
pub fn analyze(w: &Word) -> (Vec<Run>, RunStats) {
    let runs = find_runs(w);
    let stats = run_stats(w.len(), &runs);
    (runs, stats)
}

/// Next smaller suffix under the letter order `order` (a proper prefix is
/// smaller than the suffix it prefixes). `nss[i] - i` is the length of the
/// longest Lyndon word starting at `i`.
fn next_smaller_suffix(u: &[u8], lce: &Lce<'_>, order: Ordering) -> Vec<u32> {
    let n = u.len();
    let mut nss = vec![n as u32; n];
    // is suffix i smaller than suffix j (i < j)?
    let less = |i: usize, j: usize| -> bool {
        let l = lce.lce(i, j);
        if j + l == n {
            return false;
        }
        u[i + l].cmp(&u[j + l]) == order
    };
    for i in (0..n.saturating_sub(1)).rev() {
        let mut j = i + 1;
        while j < n && less(i, j) {
            j = nss[j] as usize;
        }
        nss[i] = j as u32;
    }
    nss
}

/// All runs of `w`, sorted by `(start, end)`.
pub fn find_runs(w: &Word) -> Vec<Run> {
    let u = w.as_bytes();
    let n = u.len();
    if n < 2 {
        return Vec::new();
    }
    let forward = Lce::new(u);
    let reversed_text: Vec<u8> = u.iter().rev().copied().collect();
    let backward = Lce::new(&reversed_text);
    // common suffix length of u[..a] and u[..b]
    let lcs = |a: usize, b: usize| backward.lce(n - a, n - b);

    let mut runs = Vec::new();
    for order in [Ordering::Less, Ordering::Greater] {
        let nss = next_smaller_suffix(u, &forward, order);
        for (s, &end) in nss.iter().enumerate() {
            let p = end as usize - s;
            if s + p >= n {
                continue;
            }
            let right = forward.lce(s, s + p);
            if right == 0 {
                continue;
            }
            let left = if s == 0 { 0 } else { lcs(s, s + p) };
            // only the root occurrence within the first period reports the run
            if left >= p || left + right < p {
                continue;
            }
            runs.push(Run {
                start: s - left + 1,
                end: s + p + right,
                period: p,
            });
        }
    }
    runs.sort_unstable();
    runs.dedup();
    runs
}

/// Definition-level scan of every interval. O(n^2) time; refuses words
/// longer than `cap`.
pub fn find_runs_bruteforce(w: &Word, cap: usize) -> Result<Vec<Run>> {
    let u = w.as_bytes();
    let n = u.len();
    if n > cap {
        return Err(Error::OracleCapExceeded { len: n, cap });
    }
    let mut runs = Vec::new();
    let mut border = vec![0usize; n];
    for i in 0..n {
        // border[k] = longest proper border of u[i..=i+k], built letter by letter
        let f = &u[i..];
        border[0] = 0;
        let mut b = 0;
        for k in 1..f.len() {
            while b > 0 && f[k] != f[b] {
                b = border[b - 1];
            }
            if f[k] == f[b] {
                b += 1;
            }
            border[k] = b;
        }
        for j in i..n {
            let len = j - i + 1;
            let p = len - border[len - 1];
            if 2 * p > len {
                continue;
            }
            if i > 0 && u[i - 1] == u[i + p - 1] {
                continue;
            }
            if j + 1 < n && u[j + 1 - p] == u[j + 1] {
                continue;
            }
            runs.push(Run {
                start: i + 1,
                end: j + 1,
                period: p,
            });
        }
    }
    Ok(runs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        Word::from_text_inferred(s).unwrap()
    }

    fn run(start: usize, end: usize, period: usize) -> Run {
        Run { start, end, period }
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn runs_of_small_words() {
        assert!(find_runs(&word("abc")).is_empty());
        assert!(find_runs(&word("")).is_empty());
        assert!(find_runs(&word("a")).is_empty());
        assert_eq!(find_runs(&word("aaaa")), [run(1, 4, 1)]);
        assert_eq!(find_runs(&word("abab")), [run(1, 4, 2)]);
        assert_eq!(
            find_runs(&word("aabaabaa")),
            [run(1, 2, 1), run(1, 8, 3), run(4, 5, 1), run(7, 8, 1)]
        );
    }

    #[test]
    fn bruteforce_small_words() {
        let cap = DEFAULT_ORACLE_CAP;
        assert_eq!(find_runs_bruteforce(&word("abab"), cap).unwrap(), [run(1, 4, 2)]);
        assert!(find_runs_bruteforce(&word(""), cap).unwrap().is_empty());
        assert_eq!(
            find_runs_bruteforce(&word("aabaabaa"), cap).unwrap(),
            [run(1, 2, 1), run(1, 8, 3), run(4, 5, 1), run(7, 8, 1)]
        );
        assert_eq!(
            find_runs_bruteforce(&word("abab"), 3),
            Err(Error::OracleCapExceeded { len: 4, cap: 3 })
        );
    }

    #[test]
    fn stats_examples() {
        let w = word("aabaabaa");
        let s = run_stats(w.len(), &find_runs(&w));
        assert_eq!((s.rho, s.rho_cubic), (4, 0));
        assert_eq!(s.sigma, q(26, 3));
        assert_eq!(s.sigma_cubic, q(0, 1));

        let w = word("aaaa");
        let s = run_stats(w.len(), &find_runs(&w));
        assert_eq!((s.rho, s.rho_cubic), (1, 1));
        assert_eq!(s.sigma, q(4, 1));
        assert_eq!(s.sigma_cubic, q(4, 1));

        let s = run_stats(3, &find_runs(&word("abc")));
        assert_eq!(s.rho, 0);
        assert!(s.sigma.is_zero());
    }

    #[test]
    fn sigma_rendering() {
        let w = word("aabaabaa");
        let s = run_stats(w.len(), &find_runs(&w));
        let r = s.sigma_as_decimal(2);
        assert_eq!((r.decimal.as_str(), r.exact.as_str()), ("8.67", "26/3"));
        let w = word("aaaa");
        let r = run_stats(w.len(), &find_runs(&w)).sigma_as_decimal(2);
        assert_eq!((r.decimal.as_str(), r.exact.as_str()), ("4.00", "4/1"));
    }

    #[test]
    fn exponent_arithmetic() {
        let e = run(1, 8, 3).exponent();
        assert_eq!((e.numer(), e.denom(), e.floor(), e.ceil()), (8, 3, 2, 3));
        let e = run(1, 4, 2).exponent();
        assert_eq!((e.numer(), e.denom(), e.floor(), e.ceil()), (2, 1, 2, 2));
        assert!(Exponent::new(7, 3) > Exponent::new(2, 1));
    }

    #[test]
    fn validate_rejects_non_runs() {
        let w = word("aabaabaa");
        for r in find_runs(&w) {
            r.validate(&w).unwrap();
        }
        assert!(run(1, 3, 1).validate(&w).is_err());
        assert!(run(1, 7, 3).validate(&w).is_err());
        assert!(run(1, 8, 6).validate(&w).is_err());
        assert!(run(2, 8, 3).validate(&w).is_err());
        assert!(run(0, 8, 3).validate(&w).is_err());
    }
}
