//! Word families of the form `outer(inner^i(seed))`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::word::{Alphabet, Morphism, Word};
use crate::{Error, Result};

/// Largest index accepted by [`paper_w`].
pub const PAPER_W_MAX_INDEX: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySource {
    BuiltIn,
    /// Loaded from a family file; holds the path as given.
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    /// Iterated endomorphism.
    pub inner: Morphism,
    /// Coding applied once after iteration.
    pub outer: Morphism,
    pub seed: Word,
    pub source: FamilySource,
}

impl FamilySpec {
    /// Checks that `inner` is an endomorphism, that `outer` has a rule for
    /// every letter `inner` can produce, and that the seed is over `inner`'s
    /// alphabet.
    pub fn new(
        name: impl Into<String>,
        inner: Morphism,
        outer: Morphism,
        seed: Word,
        source: FamilySource,
    ) -> Result<Self> {
        if let Some(s) = inner.target().symbols().find(|&s| !inner.source().contains(s)) {
            return Err(Error::NotEndomorphism(s as char));
        }
        if let Some(&s) = seed.as_bytes().iter().find(|&&s| !inner.source().contains(s)) {
            return Err(Error::MissingRule(s as char));
        }
        if let Some(s) = inner.source().symbols().find(|&s| !outer.source().contains(s)) {
            return Err(Error::AlphabetMismatch(s as char));
        }
        Ok(FamilySpec {
            name: name.into(),
            inner,
            outer,
            seed,
            source,
        })
    }

    /// The built-in binary family: inner `a -> baaba, b -> ca, c -> bca`,
    /// outer `a -> 01011, b, c -> 01001011`, seed `a`.
    pub fn paper_w() -> Self {
        let inner = Morphism::new([('a', "baaba"), ('b', "ca"), ('c', "bca")])
            .expect("valid built-in morphism");
        let outer = Morphism::new([('a', "01011"), ('b', "01001011"), ('c', "01001011")])
            .expect("valid built-in morphism");
        let seed = Word::from_text("a", inner.source()).expect("valid seed");
        FamilySpec::new("w", inner, outer, seed, FamilySource::BuiltIn)
            .expect("consistent built-in family")
    }

    /// `outer(inner^i(seed))`.
    pub fn generate(&self, i: usize) -> Result<Word> {
        let core = self.inner.iterate(&self.seed, i)?;
        self.outer.apply(&core)
    }

    /// `outer(inner^i(seed))`, refusing to build words longer than `limit`.
    pub fn generate_bounded(&self, i: usize, limit: usize) -> Result<Word> {
        let len = self.predicted_length(i)?;
        if len > limit as u128 {
            return Err(Error::TooLong {
                len,
                limit: limit as u128,
            });
        }
        self.generate(i)
    }

    /// Letter counts of `inner^i(seed)`, indexed by byte, evolved with the
    /// incidence matrix of `inner` instead of building the word.
    pub fn letter_counts(&self, i: usize) -> Result<Vec<u128>> {
        let letters: Vec<u8> = self.inner.source().symbols().collect();
        let mut counts = vec![0u128; 128];
        for &b in self.seed.as_bytes() {
            counts[b as usize] += 1;
        }
        let overflow = || Error::TooLong {
            len: u128::MAX,
            limit: u128::MAX,
        };
        for _ in 0..i {
            let mut next = vec![0u128; 128];
            for &x in &letters {
                let c = counts[x as usize];
                if c == 0 {
                    continue;
                }
                for &y in self.inner.image(x).expect("ruled letter") {
                    let slot = &mut next[y as usize];
                    *slot = slot.checked_add(c).ok_or_else(overflow)?;
                }
            }
            counts = next;
        }
        Ok(counts)
    }

    /// `|outer(inner^i(seed))|` from the letter counts.
    pub fn predicted_length(&self, i: usize) -> Result<u128> {
        let counts = self.letter_counts(i)?;
        let mut total = 0u128;
        for (x, img) in self.outer.rules() {
            let c = counts[x as usize];
            total = c
                .checked_mul(img.len() as u128)
                .and_then(|v| v.checked_add(total))
                .ok_or(Error::TooLong {
                    len: u128::MAX,
                    limit: u128::MAX,
                })?;
        }
        Ok(total)
    }
}

/// Member `i` of the built-in binary family, `1 <= i <= 10`.
pub fn paper_w(i: usize) -> Result<Word> {
    if !(1..=PAPER_W_MAX_INDEX).contains(&i) {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: PAPER_W_MAX_INDEX,
        });
    }
    FamilySpec::paper_w().generate(i)
}

/// Fibonacci family: inner `a -> ab, b -> a`, identity outer, seed `a`.
pub fn fibonacci() -> FamilySpec {
    let inner = Morphism::new([('a', "ab"), ('b', "a")]).expect("valid morphism");
    let ab = Alphabet::new("ab").expect("valid alphabet");
    let seed = Word::from_text("a", ab).expect("valid seed");
    FamilySpec::new(
        "fibonacci",
        inner,
        Morphism::identity(ab),
        seed,
        FamilySource::BuiltIn,
    )
    .expect("consistent family")
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE_LENGTHS: [usize; 10] =
        [31, 119, 461, 1751, 6647, 25205, 95567, 362327, 1373693, 5208071];

    #[test]
    fn small_members() {
        assert_eq!(paper_w(1).unwrap().len(), 31);
        assert_eq!(paper_w(2).unwrap().len(), 119);
        assert_eq!(paper_w(8).unwrap().len(), 362327);
        assert_eq!(paper_w(1).unwrap().alphabet(), Alphabet::new("01").unwrap());
    }

    #[test]
    fn index_range() {
        assert_eq!(paper_w(0), Err(Error::IndexOutOfRange { index: 0, max: 10 }));
        assert_eq!(paper_w(11), Err(Error::IndexOutOfRange { index: 11, max: 10 }));
    }

    #[test]
    fn predicted_lengths_match_table() {
        let spec = FamilySpec::paper_w();
        for (k, &len) in TABLE_LENGTHS.iter().enumerate() {
            assert_eq!(spec.predicted_length(k + 1).unwrap(), len as u128);
        }
    }

    #[test]
    fn predicted_length_formula() {
        // |w_i| = 5 #a + 8 (#b + #c) over inner^i(a)
        let spec = FamilySpec::paper_w();
        for i in 0..=7 {
            let core = spec.inner.iterate(&spec.seed, i).unwrap();
            let direct = 5 * core.count(b'a') + 8 * (core.count(b'b') + core.count(b'c'));
            assert_eq!(spec.predicted_length(i).unwrap(), direct as u128);
            assert_eq!(spec.generate(i).unwrap().len(), direct);
        }
    }

    #[test]
    fn fibonacci_word() {
        let w = fibonacci().generate(5).unwrap();
        assert_eq!(w.to_text(), "abaababaabaab");
    }

    #[test]
    fn bounded_generation() {
        let spec = FamilySpec::paper_w();
        assert!(spec.generate_bounded(3, 461).is_ok());
        assert_eq!(
            spec.generate_bounded(3, 460),
            Err(Error::TooLong { len: 461, limit: 460 })
        );
    }

    #[test]
    fn outer_must_cover_inner_letters() {
        let inner = Morphism::new([('a', "ab"), ('b', "c"), ('c', "a")]).unwrap();
        let outer = Morphism::new([('a', "0"), ('b', "1")]).unwrap();
        let seed = Word::from_text("a", inner.source()).unwrap();
        assert_eq!(
            FamilySpec::new("x", inner, outer, seed, FamilySource::BuiltIn),
            Err(Error::AlphabetMismatch('c'))
        );
    }
}
