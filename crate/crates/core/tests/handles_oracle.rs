use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use runexp_core::{find_runs, handles_of_run, paper_w, verify_handle_properties, Alphabet, Run, Word};

/// Handle set straight from the definition: enumerate all rotations of the
/// period block, take the extremes, find every full occurrence inside the
/// run by scanning, and collect the junction between consecutive ones.
fn handles_by_definition(u: &[u8], r: &Run) -> Vec<usize> {
    let p = r.period;
    let block = &u[r.start - 1..r.start - 1 + p];
    let mut rotations: Vec<Vec<u8>> = (0..p)
        .map(|o| block[o..].iter().chain(&block[..o]).copied().collect())
        .collect();
    rotations.sort();
    let (min, max) = (rotations[0].clone(), rotations[p - 1].clone());
    if min == max {
        return (r.start..r.end).collect();
    }
    let mut out = Vec::new();
    for target in [&min, &max] {
        let occ: Vec<usize> = (r.start..=r.end + 1 - p)
            .filter(|&s| &u[s - 1..s - 1 + p] == target.as_slice())
            .collect();
        for pair in occ.windows(2) {
            // consecutive occurrences of a primitive block abut
            assert_eq!(pair[1] - pair[0], p, "unsynchronized occurrences in {r}");
            out.push(pair[0] + p - 1);
        }
    }
    out.sort();
    out
}

/// A and B and the check verdicts recomputed independently of the library.
fn check_word(w: &Word) {
    let u = w.as_bytes();
    let runs = find_runs(w);
    let report = verify_handle_properties(w, &runs);
    let mut seen = std::collections::HashSet::new();
    let (mut a, mut b) = (0, 0);
    for (r, &size) in runs.iter().zip(&report.sizes) {
        let expect = handles_by_definition(u, r);
        let got = handles_of_run(w, r).unwrap();
        assert_eq!(got.positions, expect, "run {r} of {w}");
        assert_eq!(size, expect.len());
        for &k in &expect {
            assert!(r.start <= k && k < r.end);
            assert!(seen.insert(k), "handle {k} shared in {w}");
        }
        if r.period == 1 {
            a += expect.len();
        } else {
            b += expect.len();
        }
    }
    assert_eq!((report.a, report.b), (a, b));
    assert!(report.all_pass(), "{w}: {report:?}");
}

#[test]
fn all_binary_words_up_to_14() {
    let ab = Alphabet::new("ab").unwrap();
    for n in 0..=14usize {
        for mask in 0u32..(1 << n) {
            let letters: Vec<u8> = (0..n).map(|k| if mask >> k & 1 == 1 { b'b' } else { b'a' }).collect();
            check_word(&Word::from_bytes(&letters, ab).unwrap());
        }
    }
}

#[test]
fn random_ternary_words() {
    let abc = Alphabet::new("abc").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a4d);
    for _ in 0..1000 {
        let n = rng.gen_range(0..=300);
        let letters: Vec<u8> = (0..n).map(|_| b"abc"[rng.gen_range(0..3)]).collect();
        check_word(&Word::from_bytes(&letters, abc).unwrap());
    }
}

#[test]
fn family_words() {
    for i in 1..=6 {
        let w = paper_w(i).unwrap();
        if i <= 4 {
            check_word(&w);
        } else {
            let report = verify_handle_properties(&w, &find_runs(&w));
            assert!(report.all_pass(), "w_{i}");
            assert!(report.a + report.b < w.len());
        }
    }
}

#[test]
fn w3_report() {
    let w = paper_w(3).unwrap();
    assert_eq!(w.len(), 461);
    let report = verify_handle_properties(&w, &find_runs(&w));
    assert!(report.disjoint);
    assert!(report.case_a_iff_p1);
    assert!(report.lemma1_failures.is_empty());
    assert!(report.total_within_bound);
}
