use crate::error::{Error, Result};

/// A word over an integer alphabet `[1..sigma]`.
///
/// Public positions are 1-based throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<u32>,
}

impl Word {
    /// Builds a word from explicit integer letters; every letter must be >= 1.
    pub fn from_symbols(symbols: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s == 0) {
            return Err(Error::BadLetter {
                letter: bad,
                sigma: 0,
            });
        }
        Ok(Word { symbols })
    }

    /// Builds a word from text, mapping characters to integers in
    /// first-occurrence order. Use [`map_alphabet`] when two words must
    /// share a single mapping.
    pub fn from_text(text: &str) -> Self {
        let (w, _) = map_alphabet_chars(text.chars(), &mut Vec::new());
        w
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn get(&self, i: usize) -> u32 {
        self.symbols[i - 1]
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// Largest letter appearing in the word (0 for the empty word).
    pub fn max_symbol(&self) -> u32 {
        self.symbols.iter().copied().max().unwrap_or(0)
    }

    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word { symbols }
    }
}

fn map_alphabet_chars(
    chars: impl Iterator<Item = char>,
    seen: &mut Vec<char>,
) -> (Word, Vec<char>) {
    let mut symbols = Vec::new();
    for c in chars {
        let id = match seen.iter().position(|&s| s == c) {
            Some(p) => p + 1,
            None => {
                seen.push(c);
                seen.len()
            }
        };
        symbols.push(id as u32);
    }
    (Word { symbols }, seen.clone())
}

/// Maps two text words to integer words over one shared alphabet, assigning
/// ids in first-occurrence order scanning `v` then `w`. Returns the words and
/// the alphabet size.
pub fn map_alphabet(v: &str, w: &str) -> (Word, Word, u32) {
    let (v, w, alphabet) = map_alphabet_pair(v, w);
    (v, w, alphabet.len() as u32)
}

/// Like [`map_alphabet`] but returns the character alphabet itself: character
/// `alphabet[i]` is letter `i + 1`.
pub fn map_alphabet_pair(v: &str, w: &str) -> (Word, Word, Vec<char>) {
    let mut seen = Vec::new();
    let (v, _) = map_alphabet_chars(v.chars(), &mut seen);
    let (w, seen) = map_alphabet_chars(w.chars(), &mut seen);
    (v, w, seen)
}

/// Remaps letters of both words to a dense `[1..sigma]` alphabet in
/// first-occurrence order (scanning `v` then `w`). Returns the remapped words,
/// the dense alphabet size, and the old-letter -> new-letter table.
pub fn densify(v: &Word, w: &Word) -> (Word, Word, u32, Vec<(u32, u32)>) {
    let mut table: Vec<(u32, u32)> = Vec::new();
    let mut remap = |word: &Word| -> Word {
        let symbols = word
            .symbols
            .iter()
            .map(|&s| match table.iter().find(|(old, _)| *old == s) {
                Some(&(_, new)) => new,
                None => {
                    let new = table.len() as u32 + 1;
                    table.push((s, new));
                    new
                }
            })
            .collect();
        Word { symbols }
    };
    let dv = remap(v);
    let dw = remap(w);
    let sigma = table.len() as u32;
    (dv, dw, sigma, table)
}
