//! Text formats: word files, morphism files, family files and run listings.
//!
//! Word file: the letters of one word, optionally followed by a single
//! newline. No other whitespace.
//!
//! Morphism file: one rule per line, `X -> image`, with `X` a single symbol
//! and `image` nonempty. Blank lines and lines starting with `#` are skipped.
//!
//! Family file: morphism rules under an `[inner]` and an optional `[outer]`
//! section header, plus a `seed = <word>` line and an optional
//! `name = <name>` line. A missing `[outer]` section means the identity.
//!
//! Run listing: one run per line, tab separated
//! `start end period length exponent_num/exponent_den`, 1-based, sorted by
//! `(start, end)`.

use std::fmt::Write as _;

use runexp_core::families::{FamilySource, FamilySpec};
use runexp_core::{Alphabet, Morphism, Run, Word};

use crate::error::FormatError;

/// Parses a word file body. With `alphabet = None` the alphabet is the set of
/// letters present.
pub fn parse_word(text: &str, alphabet: Option<Alphabet>) -> Result<Word, FormatError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if let Some((k, c)) = body.chars().enumerate().find(|(_, c)| c.is_whitespace()) {
        return Err(FormatError::new(
            1,
            format!("whitespace {c:?} at position {}", k + 1),
        ));
    }
    let word = match alphabet {
        Some(a) => Word::from_text(body, a),
        None => Word::from_text_inferred(body),
    };
    word.map_err(|e| FormatError::new(1, e.to_string()))
}

/// Word file body: the letters and one trailing newline.
pub fn format_word(w: &Word) -> String {
    let mut s = w.to_text();
    s.push('\n');
    s
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_rule(line_no: usize, line: &str) -> Result<(char, String), FormatError> {
    let (lhs, rhs) = line
        .split_once("->")
        .ok_or_else(|| FormatError::new(line_no, "expected `X -> image`"))?;
    let lhs = lhs.trim();
    let rhs = rhs.trim();
    let mut chars = lhs.chars();
    let letter = match (chars.next(), chars.next()) {
        (Some(c), None) => c,
        _ => {
            return Err(FormatError::new(
                line_no,
                format!("left side {lhs:?} must be a single symbol"),
            ))
        }
    };
    if rhs.is_empty() {
        return Err(FormatError::new(line_no, format!("empty image for {letter:?}")));
    }
    if rhs.chars().any(char::is_whitespace) {
        return Err(FormatError::new(line_no, "image contains whitespace"));
    }
    Ok((letter, rhs.to_string()))
}

fn build_morphism(rules: &[(usize, char, String)], start_line: usize) -> Result<Morphism, FormatError> {
    // validate rule by rule so the error carries the right line
    let mut seen = Vec::new();
    for (line, letter, image) in rules {
        if seen.contains(letter) {
            return Err(FormatError::new(*line, format!("duplicate rule for {letter:?}")));
        }
        seen.push(*letter);
        Morphism::new([(*letter, image.as_str())]).map_err(|e| FormatError::new(*line, e.to_string()))?;
    }
    Morphism::new(rules.iter().map(|(_, c, s)| (*c, s.as_str())))
        .map_err(|e| FormatError::new(start_line, e.to_string()))
}

/// Parses a morphism file.
pub fn parse_morphism(text: &str) -> Result<Morphism, FormatError> {
    let mut rules = Vec::new();
    for (line_no, line) in content_lines(text) {
        let (c, img) = parse_rule(line_no, line)?;
        rules.push((line_no, c, img));
    }
    if rules.is_empty() {
        return Err(FormatError::new(1, "no rules"));
    }
    build_morphism(&rules, 1)
}

pub fn format_morphism(m: &Morphism) -> String {
    let mut s = String::new();
    for (x, img) in m.rules() {
        let _ = writeln!(s, "{} -> {}", x as char, String::from_utf8_lossy(img));
    }
    s
}

#[derive(PartialEq)]
enum Section {
    Top,
    Inner,
    Outer,
}

/// Parses a family file. `path` is recorded as the family's source.
pub fn parse_family(text: &str, path: &str) -> Result<FamilySpec, FormatError> {
    let mut section = Section::Top;
    let mut inner = Vec::new();
    let mut outer = Vec::new();
    let (mut inner_line, mut outer_line) = (0, 0);
    let mut seed: Option<(usize, String)> = None;
    let mut name: Option<String> = None;

    for (line_no, line) in content_lines(text) {
        match line {
            "[inner]" => {
                if inner_line != 0 {
                    return Err(FormatError::new(line_no, "second [inner] section"));
                }
                section = Section::Inner;
                inner_line = line_no;
                continue;
            }
            "[outer]" => {
                if outer_line != 0 {
                    return Err(FormatError::new(line_no, "second [outer] section"));
                }
                section = Section::Outer;
                outer_line = line_no;
                continue;
            }
            _ => {}
        }
        if line.starts_with('[') {
            return Err(FormatError::new(line_no, format!("unknown section {line}")));
        }
        if !line.contains("->") {
            if let Some((key, value)) = line.split_once('=') {
                let value = value.trim().to_string();
                match key.trim() {
                    "seed" => {
                        if seed.is_some() {
                            return Err(FormatError::new(line_no, "second seed line"));
                        }
                        seed = Some((line_no, value));
                    }
                    "name" => name = Some(value),
                    other => {
                        return Err(FormatError::new(line_no, format!("unknown key {other:?}")))
                    }
                }
                continue;
            }
        }
        let (c, img) = parse_rule(line_no, line)?;
        match section {
            Section::Inner => inner.push((line_no, c, img)),
            Section::Outer => outer.push((line_no, c, img)),
            Section::Top => {
                return Err(FormatError::new(line_no, "rule outside [inner]/[outer] section"))
            }
        }
    }

    if inner.is_empty() {
        return Err(FormatError::new(inner_line.max(1), "missing or empty [inner] section"));
    }
    let inner_m = build_morphism(&inner, inner_line)?;
    let outer_m = if outer.is_empty() {
        if outer_line != 0 {
            return Err(FormatError::new(outer_line, "empty [outer] section"));
        }
        Morphism::identity(inner_m.source())
    } else {
        build_morphism(&outer, outer_line)?
    };
    let (seed_line, seed_text) = seed.ok_or_else(|| FormatError::new(1, "missing `seed = <word>` line"))?;
    let seed_word = Word::from_text(&seed_text, inner_m.source())
        .map_err(|e| FormatError::new(seed_line, format!("seed: {e}")))?;
    if !inner_m.is_endomorphism() {
        let bad = inner_m
            .target()
            .symbols()
            .find(|&s| !inner_m.source().contains(s))
            .map(|s| s as char)
            .unwrap_or('?');
        let line = inner
            .iter()
            .find(|(_, _, img)| img.contains(bad))
            .map(|(l, _, _)| *l)
            .unwrap_or(inner_line);
        return Err(FormatError::new(
            line,
            format!("inner image letter {bad:?} has no [inner] rule"),
        ));
    }
    let name = name.unwrap_or_else(|| path.to_string());
    FamilySpec::new(name, inner_m, outer_m, seed_word, FamilySource::File(path.to_string()))
        .map_err(|e| FormatError::new(outer_line.max(inner_line), e.to_string()))
}

/// Run listing, one tab-separated line per run.
pub fn format_listing(runs: &[Run]) -> String {
    let mut s = String::with_capacity(runs.len() * 24);
    for r in runs {
        let e = r.exponent();
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}/{}",
            r.start,
            r.end,
            r.period,
            r.len(),
            e.numer(),
            e.denom()
        );
    }
    s
}

/// Reads a run listing back. Each line must be internally consistent.
pub fn parse_listing(text: &str) -> Result<Vec<Run>, FormatError> {
    let mut runs = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(FormatError::new(line_no, "expected 5 tab-separated fields"));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| FormatError::new(line_no, format!("not a number: {s:?}")))
        };
        let (start, end, period, len) = (num(fields[0])?, num(fields[1])?, num(fields[2])?, num(fields[3])?);
        let (en, ed) = fields[4]
            .split_once('/')
            .ok_or_else(|| FormatError::new(line_no, "exponent must be num/den"))?;
        let run = Run { start, end, period };
        let e = if period > 0 { Some(run.exponent()) } else { None };
        let consistent = start >= 1
            && end >= start
            && run.len() == len
            && e.is_some_and(|e| e.numer() == num(en).unwrap_or(0) && e.denom() == num(ed).unwrap_or(0));
        if !consistent {
            return Err(FormatError::new(line_no, "inconsistent run fields"));
        }
        runs.push(run);
    }
    Ok(runs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_file_trailing_newline() {
        assert_eq!(parse_word("abaab\n", None).unwrap().to_text(), "abaab");
        assert_eq!(parse_word("abaab", None).unwrap().to_text(), "abaab");
        assert!(parse_word("", None).unwrap().is_empty());
        assert!(parse_word("\n", None).unwrap().is_empty());
    }

    #[test]
    fn word_file_rejects_whitespace() {
        let e = parse_word("ab\n\n", None).unwrap_err();
        assert!(e.message.contains("position 3"), "{e}");
        assert!(parse_word("a b", None).is_err());
        assert!(parse_word("ab\r\n", None).is_err());
    }

    #[test]
    fn word_file_alphabet() {
        let ab = Alphabet::new("ab").unwrap();
        let e = parse_word("abc", Some(ab)).unwrap_err();
        assert!(e.message.contains("position 3"), "{e}");
    }

    #[test]
    fn morphism_file() {
        let m = parse_morphism("# phi\na -> baaba\nb -> ca\n\nc -> bca\n").unwrap();
        assert_eq!(m.image(b'a'), Some(&b"baaba"[..]));
        assert_eq!(format_morphism(&m), "a -> baaba\nb -> ca\nc -> bca\n");
    }

    #[test]
    fn morphism_file_errors_carry_line_numbers() {
        let e = parse_morphism("a -> ab\nb ->\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_morphism("a -> ab\nab -> a\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_morphism("a -> ab\n\na -> b\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_morphism("a => ab\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn family_file() {
        let text = "name = fib\nseed = a\n[inner]\na -> ab\nb -> a\n";
        let f = parse_family(text, "fib.txt").unwrap();
        assert_eq!(f.name, "fib");
        assert_eq!(f.generate(5).unwrap().to_text(), "abaababaabaab");
        assert_eq!(f.source, FamilySource::File("fib.txt".into()));
    }

    #[test]
    fn family_file_missing_rule() {
        let text = "seed = a\n[inner]\na -> abc\nb -> a\n";
        let e = parse_family(text, "x").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("'c'"), "{e}");
    }

    #[test]
    fn family_file_outer_mismatch() {
        let text = "seed = a\n[inner]\na -> ab\nb -> a\n[outer]\na -> 0\n";
        let e = parse_family(text, "x").unwrap_err();
        assert_eq!(e.line, 5);
    }

    #[test]
    fn family_file_requires_seed() {
        assert!(parse_family("[inner]\na -> ab\nb -> a\n", "x").is_err());
        let e = parse_family("seed = z\n[inner]\na -> ab\nb -> a\n", "x").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn listing_format() {
        let runs = [Run { start: 1, end: 8, period: 3 }, Run { start: 4, end: 5, period: 1 }];
        let text = format_listing(&runs);
        assert_eq!(text, "1\t8\t3\t8\t8/3\n4\t5\t1\t2\t2/1\n");
        assert_eq!(parse_listing(&text).unwrap(), runs);
        assert!(parse_listing("1\t8\t3\t7\t8/3\n").is_err());
    }
}
