//! Constant-time longest-common-extension queries.
//!
//! Built from the inverse suffix array and LCP array; range minima over the
//! LCP array come from per-block prefix/suffix minima plus a sparse table
//! over block minima.

use alloc::vec;
use alloc::vec::Vec;

use crate::suffix_array::{inverse, lcp_array, suffix_array};

const BLOCK: usize = 32;
/// Letters compared directly before falling back to the index.
const SCAN: usize = 8;

struct RangeMin {
    values: Vec<u32>,
    prefix: Vec<u32>,
    suffix: Vec<u32>,
    /// `table[k][b]` = min over blocks `b .. b + 2^k`.
    table: Vec<Vec<u32>>,
}

impl RangeMin {
    fn new(values: Vec<u32>) -> Self {
        let n = values.len();
        let mut prefix = vec![0u32; n];
        let mut suffix = vec![0u32; n];
        let mut block_min = Vec::with_capacity(n.div_ceil(BLOCK));
        for (b, chunk) in values.chunks(BLOCK).enumerate() {
            let base = b * BLOCK;
            let mut m = u32::MAX;
            for (k, &v) in chunk.iter().enumerate() {
                m = m.min(v);
                prefix[base + k] = m;
            }
            block_min.push(m);
            let mut m = u32::MAX;
            for (k, &v) in chunk.iter().enumerate().rev() {
                m = m.min(v);
                suffix[base + k] = m;
            }
        }
        let mut table = vec![block_min];
        let mut width = 1;
        while 2 * width <= table[0].len() {
            let prev = table.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - width)
                .map(|b| prev[b].min(prev[b + width]))
                .collect();
            table.push(next);
            width *= 2;
        }
        RangeMin {
            values,
            prefix,
            suffix,
            table,
        }
    }

    /// Minimum over `lo..=hi`.
    fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo <= hi);
        let (bl, bh) = (lo / BLOCK, hi / BLOCK);
        if bl == bh {
            return self.values[lo..=hi].iter().copied().min().unwrap();
        }
        let mut m = self.suffix[lo].min(self.prefix[hi]);
        if bl + 1 < bh {
            let (a, b) = (bl + 1, bh - 1);
            let level = (usize::BITS - 1 - (b - a + 1).leading_zeros()) as usize;
            let row = &self.table[level];
            m = m.min(row[a]).min(row[b + 1 - (1 << level)]);
        }
        m
    }
}

/// Longest common prefix of two suffixes of a fixed text.
pub struct Lce<'t> {
    text: &'t [u8],
    isa: Vec<u32>,
    lcp: RangeMin,
}

impl<'t> Lce<'t> {
    pub fn new(text: &'t [u8]) -> Self {
        let sa = suffix_array(text);
        let isa = inverse(&sa);
        let lcp = lcp_array(text, &sa, &isa);
        drop(sa);
        Lce {
            text,
            isa,
            lcp: RangeMin::new(lcp),
        }
    }

    pub fn text(&self) -> &'t [u8] {
        self.text
    }

    /// Length of the longest common prefix of `text[i..]` and `text[j..]`.
    /// Positions may equal `text.len()` (empty suffix).
    pub fn lce(&self, i: usize, j: usize) -> usize {
        let n = self.text.len();
        if i == j {
            return n - i;
        }
        if i >= n || j >= n {
            return 0;
        }
        let limit = SCAN.min(n - i.max(j));
        for k in 0..limit {
            if self.text[i + k] != self.text[j + k] {
                return k;
            }
        }
        if limit < SCAN {
            return limit;
        }
        let (ri, rj) = (self.isa[i] as usize, self.isa[j] as usize);
        let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
        self.lcp.min(lo + 1, hi) as usize
    }
}
