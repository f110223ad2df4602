//! Suffix array construction by induced sorting (SA-IS), O(n) time.
//!
//! A proper prefix sorts before the longer suffix it prefixes, i.e. the
//! text behaves as if terminated by a unique smallest sentinel.

use alloc::vec;
use alloc::vec::Vec;

const NONE: u32 = u32::MAX;

/// Suffix array of a byte string. Panics if `text.len() >= u32::MAX`.
pub fn suffix_array(text: &[u8]) -> Vec<u32> {
    assert!(text.len() < NONE as usize, "text too long for 32-bit suffix array");
    let s: Vec<u32> = text.iter().map(|&b| b as u32).collect();
    sa_is(&s, 255)
}

fn sa_naive(s: &[u32]) -> Vec<u32> {
    let mut sa: Vec<u32> = (0..s.len() as u32).collect();
    sa.sort_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
    sa
}

/// `s` holds values in `0..=upper`.
fn sa_is(s: &[u32], upper: u32) -> Vec<u32> {
    let n = s.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ if n < 10 => return sa_naive(s),
        _ => {}
    }
    let upper = upper as usize;

    // ls[i]: suffix i is S-type (smaller than suffix i + 1)
    let mut ls = vec![false; n];
    for i in (0..n - 1).rev() {
        ls[i] = if s[i] == s[i + 1] {
            ls[i + 1]
        } else {
            s[i] < s[i + 1]
        };
    }

    // bucket boundaries: sum_l[c] is the start of c's bucket, sum_s[c] the
    // start of its S-part
    let mut sum_l = vec![0u32; upper + 2];
    let mut sum_s = vec![0u32; upper + 2];
    for i in 0..n {
        if ls[i] {
            sum_l[s[i] as usize + 1] += 1;
        } else {
            sum_s[s[i] as usize] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        if c < upper {
            sum_l[c + 1] += sum_s[c];
        }
    }

    let mut sa = vec![NONE; n];
    let induce = |sa: &mut [u32], lms: &[u32]| {
        sa.fill(NONE);
        let mut buf = sum_s.clone();
        for &d in lms {
            let d = d as usize;
            if d == n {
                continue;
            }
            let c = s[d] as usize;
            sa[buf[c] as usize] = d as u32;
            buf[c] += 1;
        }
        buf.copy_from_slice(&sum_l);
        let c = s[n - 1] as usize;
        sa[buf[c] as usize] = (n - 1) as u32;
        buf[c] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 && !ls[v as usize - 1] {
                let c = s[v as usize - 1] as usize;
                sa[buf[c] as usize] = v - 1;
                buf[c] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 && ls[v as usize - 1] {
                let c = s[v as usize - 1] as usize + 1;
                buf[c] -= 1;
                sa[buf[c] as usize] = v - 1;
            }
        }
    };

    let mut lms_map = vec![NONE; n + 1];
    let mut lms: Vec<u32> = Vec::new();
    for i in 1..n {
        if !ls[i - 1] && ls[i] {
            lms_map[i] = lms.len() as u32;
            lms.push(i as u32);
        }
    }
    let m = lms.len();

    induce(&mut sa, &lms);

    if m > 0 {
        let mut sorted_lms: Vec<u32> = sa
            .iter()
            .copied()
            .filter(|&v| lms_map[v as usize] != NONE)
            .collect();
        let mut rec_s = vec![0u32; m];
        let mut rec_upper = 0u32;
        rec_s[lms_map[sorted_lms[0] as usize] as usize] = 0;
        for k in 1..m {
            let mut l = sorted_lms[k - 1] as usize;
            let mut r = sorted_lms[k] as usize;
            let li = lms_map[l] as usize;
            let ri = lms_map[r] as usize;
            let end_l = if li + 1 < m { lms[li + 1] as usize } else { n };
            let end_r = if ri + 1 < m { lms[ri + 1] as usize } else { n };
            let mut same = true;
            if end_l - l != end_r - r {
                same = false;
            } else {
                while l < end_l {
                    if s[l] != s[r] {
                        break;
                    }
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                rec_upper += 1;
            }
            rec_s[lms_map[sorted_lms[k] as usize] as usize] = rec_upper;
        }

        let rec_sa = sa_is(&rec_s, rec_upper);
        for (slot, &r) in sorted_lms.iter_mut().zip(&rec_sa) {
            *slot = lms[r as usize];
        }
        induce(&mut sa, &sorted_lms);
    }
    sa
}

/// Inverse permutation of a suffix array.
pub fn inverse(sa: &[u32]) -> Vec<u32> {
    let mut isa = vec![0u32; sa.len()];
    for (rank, &pos) in sa.iter().enumerate() {
        isa[pos as usize] = rank as u32;
    }
    isa
}

/// Kasai's algorithm: `lcp[r]` is the longest common prefix of the suffixes
/// of rank `r - 1` and `r`; `lcp[0] = 0`.
pub fn lcp_array(text: &[u8], sa: &[u32], isa: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let rank = isa[i] as usize;
        if rank == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[rank] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(text: &[u8]) -> Vec<u32> {
        let mut sa: Vec<u32> = (0..text.len() as u32).collect();
        sa.sort_by(|&a, &b| text[a as usize..].cmp(&text[b as usize..]));
        sa
    }

    #[test]
    fn small_cases() {
        assert_eq!(suffix_array(b""), Vec::<u32>::new());
        assert_eq!(suffix_array(b"a"), [0]);
        assert_eq!(suffix_array(b"banana"), [5, 3, 1, 0, 4, 2]);
        let t = b"mississippimississippi";
        assert_eq!(suffix_array(t), naive(t));
    }

    #[test]
    fn unary_and_periodic() {
        let t = [b'a'; 1000];
        assert_eq!(suffix_array(&t), naive(&t));
        let t = b"ab".repeat(300);
        assert_eq!(suffix_array(&t), naive(&t));
    }

    #[test]
    fn lcp_banana() {
        let t = b"banana";
        let sa = suffix_array(t);
        let isa = inverse(&sa);
        assert_eq!(lcp_array(t, &sa, &isa), [0, 1, 3, 0, 0, 2]);
    }

    proptest! {
        #[test]
        fn matches_naive_sort(t in proptest::collection::vec(b'a'..=b'c', 0..400)) {
            prop_assert_eq!(suffix_array(&t), naive(&t));
        }

        #[test]
        fn matches_naive_sort_binary(t in proptest::collection::vec(b'0'..=b'1', 0..400)) {
            prop_assert_eq!(suffix_array(&t), naive(&t));
        }
    }
}
