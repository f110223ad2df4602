//! Borders, shortest periods and extreme cyclic rotations.
//!
//! Lexicographic order is the byte order of the symbols.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::word::Word;
use crate::{Error, Result};

/// Entry `k` (0-based) is the length of the longest proper border of
/// `w[..=k]`.
pub fn border_table(w: &[u8]) -> Result<Vec<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut border = vec![0usize; w.len()];
    let mut b = 0;
    for k in 1..w.len() {
        while b > 0 && w[k] != w[b] {
            b = border[b - 1];
        }
        if w[k] == w[b] {
            b += 1;
        }
        border[k] = b;
    }
    Ok(border)
}

/// `per(w) = |w| - (longest proper border of w)`.
pub fn shortest_period(w: &[u8]) -> Result<usize> {
    let border = border_table(w)?;
    Ok(w.len() - border[w.len() - 1])
}

/// Offset of the lexicographically extreme rotation of a nonempty slice.
/// With `Ordering::Less` this is the minimal rotation, with
/// `Ordering::Greater` the maximal one. Among equal rotations the smallest
/// offset is returned.
pub fn extreme_rotation_offset(s: &[u8], want: Ordering) -> usize {
    let n = s.len();
    debug_assert!(n > 0);
    // two-candidate elimination: i and j are the surviving start offsets
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a.cmp(&b) == want {
            j += k + 1;
        } else {
            i += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationExtremes {
    pub minimal: Word,
    pub maximal: Word,
    /// 0-based rotation offset: `minimal = w[min_offset..] w[..min_offset]`.
    pub min_offset: usize,
    pub max_offset: usize,
}

fn rotate(w: &Word, offset: usize) -> Word {
    let b = w.as_bytes();
    let mut out = Vec::with_capacity(b.len());
    out.extend_from_slice(&b[offset..]);
    out.extend_from_slice(&b[..offset]);
    Word::from_parts_unchecked(out, w.alphabet())
}

/// Lexicographically minimal and maximal cyclic rotations of `w`, in O(|w|).
pub fn rotation_extremes(w: &Word) -> Result<RotationExtremes> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let min_offset = extreme_rotation_offset(w.as_bytes(), Ordering::Less);
    let max_offset = extreme_rotation_offset(w.as_bytes(), Ordering::Greater);
    Ok(RotationExtremes {
        minimal: rotate(w, min_offset),
        maximal: rotate(w, max_offset),
        min_offset,
        max_offset,
    })
}
