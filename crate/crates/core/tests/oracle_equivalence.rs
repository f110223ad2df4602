use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use runexp_core::runs::DEFAULT_ORACLE_CAP;
use runexp_core::{find_runs, find_runs_bruteforce, Alphabet, Run, Word};

fn check(w: &Word) -> Vec<Run> {
    let fast = find_runs(w);
    let slow = find_runs_bruteforce(w, DEFAULT_ORACLE_CAP).unwrap();
    assert_eq!(fast, slow, "word {}", w);
    fast
}

#[test]
fn all_binary_words_up_to_16() {
    let ab = Alphabet::new("ab").unwrap();
    let mut buf = Vec::with_capacity(16);
    for n in 0..=16usize {
        for mask in 0u32..(1 << n) {
            buf.clear();
            buf.extend((0..n).map(|k| if mask >> k & 1 == 1 { b'b' } else { b'a' }));
            check(&Word::from_bytes(&buf, ab).unwrap());
        }
    }
}

#[test]
fn random_ternary_words() {
    let abc = Alphabet::new("abc").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n = rng.gen_range(0..=300);
        let letters: Vec<u8> = (0..n).map(|_| b"abc"[rng.gen_range(0..3)]).collect();
        let w = Word::from_bytes(&letters, abc).unwrap();
        let runs = check(&w);
        for r in &runs {
            r.validate(&w).unwrap();
        }
        let mut intervals: Vec<_> = runs.iter().map(|r| (r.start, r.end)).collect();
        intervals.dedup();
        assert_eq!(intervals.len(), runs.len());
    }
}

#[test]
fn skewed_and_periodic_words() {
    let abc = Alphabet::new("abc").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        // short random block repeated with sporadic mutations: many long runs
        let p = rng.gen_range(1..=7);
        let block: Vec<u8> = (0..p).map(|_| b"abc"[rng.gen_range(0..3)]).collect();
        let reps = rng.gen_range(1..=40);
        let mut letters = block.repeat(reps);
        for _ in 0..rng.gen_range(0..4) {
            if letters.is_empty() {
                break;
            }
            let k = rng.gen_range(0..letters.len());
            letters[k] = b"abc"[rng.gen_range(0..3)];
        }
        check(&Word::from_bytes(&letters, abc).unwrap());
    }
}

#[test]
fn fibonacci_prefixes() {
    let w = runexp_core::families::fibonacci().generate(14).unwrap();
    for len in [1, 2, 5, 13, 100, 377, 610] {
        let prefix = Word::from_bytes(&w.as_bytes()[..len], w.alphabet()).unwrap();
        check(&prefix);
    }
}

#[test]
fn family_members_against_oracle() {
    for i in 1..=3 {
        let w = runexp_core::paper_w(i).unwrap();
        let runs = check(&w);
        for r in &runs {
            r.validate(&w).unwrap();
        }
    }
}
