//! Alphabets and words.
//!
//! Symbols are single printable ASCII letters or digits. An [`Alphabet`] keeps
//! its declared order; that order drives every enumeration and every sorted
//! output in the crate (shortlex: by length, then lexicographically).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const NO_INDEX: u8 = u8::MAX;

/// An ordered set of single-character symbols.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<u8>,
    index: [u8; 128],
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let mut out = Vec::new();
        let mut index = [NO_INDEX; 128];
        for c in letters {
            if !c.is_ascii_alphanumeric() {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol {c:?} is not an ASCII letter or digit"
                )));
            }
            let b = c as u8;
            if index[b as usize] != NO_INDEX {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol '{c}'")));
            }
            index[b as usize] = out.len() as u8;
            out.push(b);
        }
        Ok(Alphabet {
            letters: out,
            index,
        })
    }

    /// Alphabet whose letters are the characters of `s`, in order.
    pub fn from_letters(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    pub fn empty() -> Self {
        Alphabet {
            letters: Vec::new(),
            index: [NO_INDEX; 128],
        }
    }

    /// Sorted alphabet of all distinct symbols in `words`.
    pub fn inferred<'a, I: IntoIterator<Item = &'a [u8]>>(words: I) -> Result<Self> {
        let mut seen = [false; 128];
        for w in words {
            for &b in w {
                if b >= 128 {
                    return Err(Error::InvalidAlphabet("non-ASCII symbol".into()));
                }
                seen[b as usize] = true;
            }
        }
        Self::new((0u8..128).filter(|&b| seen[b as usize]).map(char::from))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters as bytes, in declared order.
    pub fn symbols(&self) -> &[u8] {
        &self.letters
    }

    pub fn chars(&self) -> impl Iterator<Item = char> + '_ {
        self.letters.iter().map(|&b| b as char)
    }

    pub fn symbol(&self, i: usize) -> u8 {
        self.letters[i]
    }

    #[inline]
    pub fn index_of(&self, symbol: u8) -> Option<usize> {
        match self.index.get(symbol as usize) {
            Some(&i) if i != NO_INDEX => Some(i as usize),
            _ => None,
        }
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.index_of(symbol).is_some()
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.letters.iter().all(|&b| other.contains(b))
    }

    /// Union keeping `self`'s order, then the new letters of `other` in their order.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut letters: Vec<char> = self.chars().collect();
        letters.extend(other.chars().filter(|&c| !self.contains(c as u8)));
        Alphabet::new(letters).expect("union of valid alphabets")
    }

    /// Sub-alphabet of the letters accepted by `keep`, in this alphabet's order.
    pub fn restrict(&self, keep: impl Fn(u8) -> bool) -> Alphabet {
        Alphabet::new(self.letters.iter().filter(|&&b| keep(b)).map(|&b| b as char))
            .expect("restriction of a valid alphabet")
    }

    /// Checks that every symbol of `word` is a letter of this alphabet.
    pub fn check_word(&self, word: &Word) -> Result<()> {
        match word.0.iter().find(|&&b| !self.contains(b)) {
            None => Ok(()),
            Some(&b) => Err(Error::UnknownSymbol {
                symbol: b as char,
                alphabet: self.to_string(),
            }),
        }
    }

    /// Shortlex comparison in this alphabet's order. Foreign symbols sort last.
    pub fn compare(&self, a: &[u8], b: &[u8]) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            let key = |x: u8| (self.index_of(x).unwrap_or(usize::MAX), x);
            a.iter().map(|&x| key(x)).cmp(b.iter().map(|&x| key(x)))
        })
    }

    pub fn sort_words(&self, words: &mut [Word]) {
        words.sort_by(|a, b| self.compare(&a.0, &b.0));
    }

    /// All words of length exactly `len`, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| {
                    self.letters.iter().map(move |&b| {
                        let mut v = w.0.clone();
                        v.push(b);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length at most `max_len`, shortlex ordered.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|n| self.words_of_length(n)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chars().map(String::from).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{{{self}}}")
    }
}

/// A finite sequence of symbols; the empty word is λ and prints as `~`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub(crate) Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        Word(bytes)
    }

    /// Parses CLI/JSON notation: `~` and the empty string both denote λ.
    pub fn parse(s: &str) -> Self {
        if s == "~" {
            Word::empty()
        } else {
            Word(s.as_bytes().to_vec())
        }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of occurrences of `symbol`.
    pub fn count(&self, symbol: u8) -> usize {
        self.0.iter().filter(|&&b| b == symbol).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Plain string form, with λ as the empty string (JSON convention).
    pub fn as_plain(&self) -> String {
        String::from_utf8_lossy(&self.0).into_owned()
    }

    /// True if `self` is a scattered subword (subsequence) of `other`.
    pub fn is_subsequence_of(&self, other: &Word) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|b| it.any(|c| c == b))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("~")
        } else {
            f.write_str(&String::from_utf8_lossy(&self.0))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_punctuation() {
        assert!(Alphabet::from_letters("aba").is_err());
        assert!(Alphabet::from_letters("a~").is_err());
        assert!(Alphabet::from_letters("a0Z").is_ok());
    }

    #[test]
    fn shortlex_follows_declared_order() {
        let ab = Alphabet::from_letters("ba").unwrap();
        let mut words: Vec<Word> = ["a", "b", "ab", "~", "ba"].iter().map(|&s| s.into()).collect();
        ab.sort_words(&mut words);
        let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["~", "b", "a", "ba", "ab"]);
    }

    #[test]
    fn words_up_to_counts() {
        let ab = Alphabet::from_letters("ab").unwrap();
        assert_eq!(ab.words_up_to(3).len(), 1 + 2 + 4 + 8);
        assert_eq!(Alphabet::empty().words_up_to(3), vec![Word::empty()]);
    }

    #[test]
    fn subsequence() {
        assert!(Word::from("ace").is_subsequence_of(&"abcde".into()));
        assert!(!Word::from("aec").is_subsequence_of(&"abcde".into()));
        assert!(Word::empty().is_subsequence_of(&Word::empty()));
    }
}
