use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// A finite sequence of symbols over `Z_q`.
///
/// Ordering is lexicographic on the symbols (then on the alphabet size), which
/// is the canonical order used for codebooks, spheres and witnesses.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
    q: u8,
}

impl Word {
    /// Builds a word, checking every symbol is below `q`.
    pub fn new(q: u8, symbols: Vec<u8>) -> Result<Self> {
        if q < 2 {
            return Err(domain(format!("alphabet size must be at least 2, got {q}")));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s >= q) {
            return Err(domain(format!("symbol {bad} is not in Z_{q}")));
        }
        Ok(Self { symbols, q })
    }

    /// Builds a word without validation. Callers guarantee `symbols[i] < q`.
    pub(crate) fn from_raw(q: u8, symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < q));
        Self { symbols, q }
    }

    pub fn binary(symbols: Vec<u8>) -> Result<Self> {
        Self::new(2, symbols)
    }

    pub fn quaternary(symbols: Vec<u8>) -> Result<Self> {
        Self::new(4, symbols)
    }

    pub fn empty(q: u8) -> Self {
        Self { symbols: Vec::new(), q }
    }

    /// Parses a plain digit string such as `"0321"`.
    pub fn parse(q: u8, text: &str) -> Result<Self> {
        let symbols = text
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| domain(format!("'{c}' is not a digit")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(q, symbols)
    }

    pub fn alphabet_size(&self) -> u8 {
        self.q
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of nonzero symbols. For binary words this is the usual weight.
    pub fn hamming_weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    /// The word with position `index` removed.
    pub fn without(&self, index: usize) -> Word {
        let mut symbols = Vec::with_capacity(self.symbols.len().saturating_sub(1));
        symbols.extend_from_slice(&self.symbols[..index]);
        symbols.extend_from_slice(&self.symbols[index + 1..]);
        Word { symbols, q: self.q }
    }

    /// Same symbols read over a different alphabet.
    pub fn with_alphabet(&self, q: u8) -> Result<Word> {
        Word::new(q, self.symbols.clone())
    }

    pub fn to_digit_string(&self) -> String {
        self.symbols.iter().map(|s| char::from(b'0' + s)).collect()
    }

    pub(crate) fn require_alphabet(&self, q: u8, what: &str) -> Result<()> {
        if self.symbols.iter().any(|&s| s >= q) {
            return Err(domain(format!("{what} expects symbols in Z_{q}, got {self}")));
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(q={}, \"{}\")", self.q, self)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses with the smallest of {2, 4, 10} that holds every digit.
    fn from_str(s: &str) -> Result<Self> {
        let max = s.trim().chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(0);
        let q = if max < 2 {
            2
        } else if max < 4 {
            4
        } else {
            10
        };
        Word::parse(q, s)
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_digit_string())
    }
}
