//! Words over small explicit alphabets, and morphisms between them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A set of printable, non-space ASCII symbols (`'!'..='~'`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    bits: u128,
}

impl Alphabet {
    pub const fn empty() -> Self {
        Alphabet { bits: 0 }
    }

    pub fn is_symbol(c: char) -> bool {
        c.is_ascii_graphic()
    }

    /// Builds an alphabet from a list of symbols; duplicates are ignored.
    pub fn new(symbols: &str) -> Result<Self> {
        let mut a = Alphabet::empty();
        for c in symbols.chars() {
            a.insert(c)?;
        }
        Ok(a)
    }

    /// The set of symbols actually occurring in `text`.
    pub fn inferred(text: &str) -> Result<Self> {
        Self::new(text)
    }

    pub fn insert(&mut self, c: char) -> Result<()> {
        if !Self::is_symbol(c) {
            return Err(Error::UnprintableSymbol(c));
        }
        self.bits |= 1u128 << (c as u32);
        Ok(())
    }

    #[inline]
    pub fn contains(&self, symbol: u8) -> bool {
        symbol < 128 && self.bits & (1u128 << symbol) != 0
    }

    pub fn contains_char(&self, c: char) -> bool {
        (c as u32) < 128 && self.contains(c as u8)
    }

    pub fn union(self, other: Alphabet) -> Alphabet {
        Alphabet {
            bits: self.bits | other.bits,
        }
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Symbols in increasing byte order.
    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0u8..128).filter(move |&s| self.contains(s))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, s) in self.symbols().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s as char)?;
        }
        f.write_str("}")
    }
}

/// An immutable finite word. Letters are single bytes from the word's alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u8>,
    alphabet: Alphabet,
}

impl Word {
    /// Validates `text` against `alphabet`. The error names the first
    /// offending character and its 1-based position.
    pub fn from_text(text: &str, alphabet: Alphabet) -> Result<Self> {
        for (k, c) in text.chars().enumerate() {
            if !alphabet.contains_char(c) {
                return Err(Error::SymbolNotInAlphabet {
                    symbol: c,
                    position: k + 1,
                });
            }
        }
        Ok(Word {
            letters: text.as_bytes().to_vec(),
            alphabet,
        })
    }

    /// Same as [`Word::from_text`] with the alphabet taken from the text itself.
    pub fn from_text_inferred(text: &str) -> Result<Self> {
        for (k, c) in text.chars().enumerate() {
            if !Alphabet::is_symbol(c) {
                return Err(Error::SymbolNotInAlphabet {
                    symbol: c,
                    position: k + 1,
                });
            }
        }
        let alphabet = Alphabet::inferred(text)?;
        Self::from_text(text, alphabet)
    }

    pub fn from_bytes(bytes: &[u8], alphabet: Alphabet) -> Result<Self> {
        for (k, &b) in bytes.iter().enumerate() {
            if !alphabet.contains(b) {
                return Err(Error::SymbolNotInAlphabet {
                    symbol: b as char,
                    position: k + 1,
                });
            }
        }
        Ok(Word {
            letters: bytes.to_vec(),
            alphabet,
        })
    }

    pub(crate) fn from_parts_unchecked(letters: Vec<u8>, alphabet: Alphabet) -> Self {
        debug_assert!(letters.iter().all(|&b| alphabet.contains(b)));
        Word { letters, alphabet }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            letters: Vec::new(),
            alphabet,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    #[inline]
    pub fn as_bytes(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The letter at 1-based position `pos`.
    pub fn letter(&self, pos: usize) -> Option<u8> {
        pos.checked_sub(1).and_then(|k| self.letters.get(k).copied())
    }

    /// The factor `u[i..j]`, 1-based and inclusive. `None` unless `1 <= i <= j + 1 <= n + 1`.
    pub fn factor(&self, i: usize, j: usize) -> Option<&[u8]> {
        if i == 0 || i > j + 1 || j > self.len() {
            return None;
        }
        Some(&self.letters[i - 1..j])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            alphabet: self.alphabet.union(other.alphabet),
        }
    }

    /// `w` repeated `k >= 1` times.
    pub fn power(&self, k: usize) -> Result<Word> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        Ok(Word {
            letters: self.letters.repeat(k),
            alphabet: self.alphabet,
        })
    }

    pub fn to_text(&self) -> String {
        // Letters are ASCII by construction.
        self.letters.iter().map(|&b| b as char).collect()
    }

    pub fn count(&self, symbol: u8) -> usize {
        self.letters.iter().filter(|&&b| b == symbol).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.letters {
            fmt::Write::write_char(f, b as char)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 64 {
            write!(f, "Word({:?})", self.to_text())
        } else {
            write!(f, "Word(len={})", self.len())
        }
    }
}

/// A letter-to-word substitution, extended to words by concatenation.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<Option<Vec<u8>>>,
    source: Alphabet,
    target: Alphabet,
}

impl Morphism {
    /// Every rule maps one symbol to a nonempty image; each symbol appears at
    /// most once. The source alphabet is the set of ruled symbols and the
    /// target alphabet the set of symbols used by the images.
    pub fn new<I, S>(rules: I) -> Result<Self>
    where
        I: IntoIterator<Item = (char, S)>,
        S: AsRef<str>,
    {
        let mut images: Vec<Option<Vec<u8>>> = alloc::vec![None; 128];
        let mut source = Alphabet::empty();
        let mut target = Alphabet::empty();
        for (letter, image) in rules {
            let image = image.as_ref();
            source.insert(letter)?;
            let slot = &mut images[letter as usize];
            if slot.is_some() {
                return Err(Error::DuplicateRule(letter));
            }
            if image.is_empty() {
                return Err(Error::EmptyImage(letter));
            }
            for c in image.chars() {
                target.insert(c)?;
            }
            *slot = Some(image.as_bytes().to_vec());
        }
        Ok(Morphism {
            images,
            source,
            target,
        })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let mut images: Vec<Option<Vec<u8>>> = alloc::vec![None; 128];
        for s in alphabet.symbols() {
            images[s as usize] = Some(alloc::vec![s]);
        }
        Morphism {
            images,
            source: alphabet,
            target: alphabet,
        }
    }

    pub fn source(&self) -> Alphabet {
        self.source
    }

    pub fn target(&self) -> Alphabet {
        self.target
    }

    pub fn image(&self, letter: u8) -> Option<&[u8]> {
        self.images.get(letter as usize)?.as_deref()
    }

    /// Rules in increasing order of the source letter.
    pub fn rules(&self) -> impl Iterator<Item = (u8, &[u8])> + '_ {
        self.source
            .symbols()
            .filter_map(move |s| self.image(s).map(|img| (s, img)))
    }

    pub fn is_endomorphism(&self) -> bool {
        self.target.is_subset_of(&self.source)
    }

    /// Length of the image of `w`, without building it.
    pub fn image_len(&self, w: &Word) -> Result<usize> {
        let mut lens = [0usize; 128];
        for (s, img) in self.rules() {
            lens[s as usize] = img.len();
        }
        let mut total = 0usize;
        for &b in w.as_bytes() {
            match lens[b as usize] {
                0 => return Err(Error::MissingRule(b as char)),
                l => total += l,
            }
        }
        Ok(total)
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Vec::with_capacity(self.image_len(w)?);
        for &b in w.as_bytes() {
            // image_len has already rejected unruled letters
            out.extend_from_slice(self.image(b).expect("ruled letter"));
        }
        Ok(Word::from_parts_unchecked(out, self.target))
    }

    /// `k`-fold application to `seed`; `k = 0` returns the seed unchanged.
    pub fn iterate(&self, seed: &Word, k: usize) -> Result<Word> {
        if let Some(missing) = self.target.symbols().find(|&s| !self.source.contains(s)) {
            return Err(Error::NotEndomorphism(missing as char));
        }
        if let Some(&b) = seed.as_bytes().iter().find(|&&b| !self.source.contains(b)) {
            return Err(Error::MissingRule(b as char));
        }
        let mut cur = seed.clone();
        for _ in 0..k {
            cur = self.apply(&cur)?;
        }
        Ok(cur)
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (s, img) in self.rules() {
            m.entry(&(s as char), &core::str::from_utf8(img).unwrap_or("?"));
        }
        m.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    fn phi() -> Morphism {
        Morphism::new([('a', "baaba"), ('b', "ca"), ('c', "bca")]).unwrap()
    }

    fn psi() -> Morphism {
        Morphism::new([('a', "01011"), ('b', "01001011"), ('c', "01001011")]).unwrap()
    }

    #[test]
    fn from_text_accepts_and_rejects() {
        let w = Word::from_text("abaab", ab()).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(w.to_text(), "abaab");

        let e = Word::from_text("", ab()).unwrap();
        assert!(e.is_empty());

        assert_eq!(
            Word::from_text("abc", ab()),
            Err(Error::SymbolNotInAlphabet {
                symbol: 'c',
                position: 3
            })
        );
    }

    #[test]
    fn positions_are_one_based() {
        let w = Word::from_text("abc", Alphabet::new("abc").unwrap()).unwrap();
        assert_eq!(w.letter(0), None);
        assert_eq!(w.letter(1), Some(b'a'));
        assert_eq!(w.letter(3), Some(b'c'));
        assert_eq!(w.factor(2, 3), Some(&b"bc"[..]));
        assert_eq!(w.factor(2, 1), Some(&b""[..]));
        assert_eq!(w.factor(1, 4), None);
    }

    #[test]
    fn unprintable_alphabet_symbol_is_rejected() {
        assert_eq!(Alphabet::new("a b"), Err(Error::UnprintableSymbol(' ')));
        assert_eq!(Alphabet::new("aé"), Err(Error::UnprintableSymbol('é')));
    }

    #[test]
    fn morphism_images() {
        let a = Word::from_text("a", Alphabet::new("abc").unwrap()).unwrap();
        assert_eq!(phi().apply(&a).unwrap().to_text(), "baaba");
        let b = Word::from_text("b", Alphabet::new("abc").unwrap()).unwrap();
        assert_eq!(psi().apply(&b).unwrap().to_text(), "01001011");
        let eps = Word::empty(Alphabet::new("abc").unwrap());
        assert!(phi().apply(&eps).unwrap().is_empty());
    }

    #[test]
    fn morphism_missing_rule() {
        let m = Morphism::new([('a', "ab"), ('b', "a")]).unwrap();
        let w = Word::from_text("abc", Alphabet::new("abc").unwrap()).unwrap();
        assert_eq!(m.apply(&w), Err(Error::MissingRule('c')));
    }

    #[test]
    fn morphism_validation() {
        assert_eq!(
            Morphism::new([('a', "ab"), ('a', "b")]),
            Err(Error::DuplicateRule('a'))
        );
        assert_eq!(
            Morphism::new([('a', "ab"), ('b', "")]),
            Err(Error::EmptyImage('b'))
        );
    }

    #[test]
    fn iterate_phi() {
        let a = Word::from_text("a", Alphabet::new("abc").unwrap()).unwrap();
        assert_eq!(phi().iterate(&a, 0).unwrap(), a);
        assert_eq!(phi().iterate(&a, 1).unwrap().to_text(), "baaba");
        let two = phi().iterate(&a, 2).unwrap();
        assert_eq!(two.to_text(), "cabaababaabacabaaba");
        assert_eq!(two.len(), 19);
    }

    #[test]
    fn iterate_rejects_non_endomorphism() {
        let a = Word::from_text("a", Alphabet::new("abc").unwrap()).unwrap();
        assert_eq!(psi().iterate(&a, 1), Err(Error::NotEndomorphism('0')));
    }

    #[test]
    fn powers() {
        let w = Word::from_text("ab", ab()).unwrap();
        assert_eq!(w.power(3).unwrap().to_text(), "ababab");
        assert_eq!(w.power(1).unwrap(), w);
        let w = Word::from_text("aba", ab()).unwrap();
        assert_eq!(w.power(2).unwrap().to_text(), "abaaba");
        assert_eq!(w.power(0), Err(Error::ZeroPower));
    }
}
