//! Words over an ordinal alphabet and the quasi-lexicographic order.
//!
//! Symbols are small ordinals `0..k` into a declared alphabet of size `k`.
//! The quasi-lexicographic order compares by length first, then
//! lexicographically by symbol index; `Word`'s `Ord` implementation *is*
//! that order, so sorted collections of words are automatically in
//! quasi-lex order.

use std::cmp::Ordering;
use std::fmt;

/// A finite sequence of symbols over an alphabet `{0, .., k-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: impl Into<Vec<u8>>) -> Self {
        Word(symbols.into())
    }

    /// Builds a word from a string of decimal digits, e.g. `"010"`; `"@"`
    /// is the empty word. Only usable for alphabets of at most 10 symbols.
    /// Inverse of `Display` for such alphabets.
    pub fn from_digits(digits: &str) -> Self {
        if digits == "@" {
            return Word::empty();
        }
        Word(
            digits
                .chars()
                .map(|c| {
                    c.to_digit(10).unwrap_or_else(|| panic!("not a digit: {c:?}")) as u8
                })
                .collect(),
        )
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, symbol: u8) {
        self.0.push(symbol);
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self` with one symbol appended.
    pub fn child(&self, symbol: u8) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(symbol);
        Word(v)
    }

    /// `symbol` followed by `self`.
    pub fn prepend(&self, symbol: u8) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(symbol);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// All suffixes, including the empty word and the word itself.
    pub fn suffixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..=self.len()).map(move |i| Word(self.0[i..].to_vec()))
    }

    /// All prefixes, including the empty word and the word itself.
    pub fn prefixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..=self.len()).map(move |i| Word(self.0[..i].to_vec()))
    }

    /// Renders the word using the given symbol names. Multi-character names
    /// are comma-separated; the empty word renders as `@`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "@".to_string();
        }
        let single = names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = self.0.iter().map(|&s| names[s as usize].as_str()).collect();
        if single {
            parts.concat()
        } else {
            parts.join(",")
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "@");
        }
        if self.0.iter().all(|&s| s < 10) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Quasi-lexicographic comparison; `compare(u, v)` equals `u.cmp(v)`.
pub fn compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// The next word after `w` in quasi-lexicographic order over `k` symbols.
pub fn successor(w: &Word, alphabet_size: usize) -> Word {
    assert!(alphabet_size >= 1 && alphabet_size <= 256, "alphabet size out of range");
    let max = (alphabet_size - 1) as u8;
    let mut symbols = w.0.clone();
    for i in (0..symbols.len()).rev() {
        if symbols[i] < max {
            symbols[i] += 1;
            for s in symbols.iter_mut().skip(i + 1) {
                *s = 0;
            }
            return Word(symbols);
        }
    }
    // every position carried over: move to the first word of the next length
    Word(vec![0; w.len() + 1])
}

/// Number of words of length at most `max_len` over `k` symbols.
pub fn word_count(alphabet_size: usize, max_len: usize) -> usize {
    let k = alphabet_size;
    assert!(k >= 1);
    if k == 1 {
        return max_len + 1;
    }
    // (k^(max_len+1) - 1) / (k - 1)
    let mut total: usize = 0;
    let mut level: usize = 1;
    for _ in 0..=max_len {
        total = total.checked_add(level).expect("word count overflow");
        level = level.checked_mul(k).expect("word count overflow");
    }
    total
}

/// Position of `w` in the quasi-lexicographic enumeration (ε has rank 0).
pub fn rank(w: &Word, alphabet_size: usize) -> usize {
    let shorter = if w.is_empty() {
        0
    } else {
        word_count(alphabet_size, w.len() - 1)
    };
    let mut index: usize = 0;
    for &s in w.symbols() {
        index = index
            .checked_mul(alphabet_size)
            .and_then(|x| x.checked_add(s as usize))
            .expect("rank overflow");
    }
    shorter + index
}

/// All words of length at most `max_len` over `k` symbols, ascending in
/// quasi-lexicographic order, starting from the empty word.
pub fn enumerate(alphabet_size: usize, max_len: usize) -> impl Iterator<Item = Word> {
    let mut next = Some(Word::empty());
    std::iter::from_fn(move || {
        let current = next.take()?;
        if current.len() > max_len {
            return None;
        }
        let succ = successor(&current, alphabet_size);
        next = Some(succ);
        Some(current)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(digits: &str) -> Word {
        Word::from_digits(digits)
    }

    #[test]
    fn compare_is_quasi_lexicographic() {
        assert_eq!(compare(&Word::empty(), &w("0")), Ordering::Less);
        assert_eq!(compare(&w("01"), &w("10")), Ordering::Less);
        assert_eq!(compare(&w("10"), &w("011")), Ordering::Less);
        assert_eq!(compare(&w("10"), &w("10")), Ordering::Equal);
    }

    #[test]
    fn enumerate_binary_small() {
        let got: Vec<String> = enumerate(2, 1).map(|w| w.to_string()).collect();
        assert_eq!(got, ["@", "0", "1"]);
        let got: Vec<String> = enumerate(2, 2).map(|w| w.to_string()).collect();
        assert_eq!(got, ["@", "0", "1", "00", "01", "10", "11"]);
    }

    #[test]
    fn enumerate_matches_count_formula() {
        assert_eq!(enumerate(3, 2).count(), 13);
        assert_eq!(word_count(3, 2), 13);
        assert_eq!(word_count(2, 6), 127);
        assert_eq!(word_count(1, 4), 5);
    }

    #[test]
    fn enumeration_is_strictly_increasing() {
        for k in 1..=3 {
            let words: Vec<Word> = enumerate(k, 4).collect();
            for pair in words.windows(2) {
                assert_eq!(compare(&pair[0], &pair[1]), Ordering::Less);
            }
        }
    }

    #[test]
    fn rank_agrees_with_enumeration() {
        for k in [1usize, 2, 3] {
            for (i, word) in enumerate(k, 4).enumerate() {
                assert_eq!(rank(&word, k), i, "word {word} over k={k}");
            }
        }
    }

    #[test]
    fn successor_wraps_length() {
        assert_eq!(successor(&w("11"), 2), w("000"));
        assert_eq!(successor(&Word::empty(), 2), w("0"));
        assert_eq!(successor(&w("01"), 2), w("10"));
    }

    #[test]
    fn display_roundtrip_special_cases() {
        assert_eq!(Word::empty().to_string(), "@");
        assert_eq!(w("010").to_string(), "010");
        let named = Word::from_symbols(vec![0, 1]);
        assert_eq!(named.display_with(&["a".into(), "b".into()]), "ab");
    }
}
