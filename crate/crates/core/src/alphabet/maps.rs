//! Bijections between `Z4` and the four 2-bit binary pairs.
//!
//! There are 4! = 24 such bijections. Nine of them are the named
//! (Naisargik) maps `phi1`..`phi9`; `phi8` is the classical Gray map and
//! `phi9` is the map under which Helberg codes gain one extra deletion.

use std::fmt;

use crate::alphabet::Word;
use crate::error::{domain, Error, Result};

/// A bit pair `(X_{2i-1}, X_{2i})`.
pub type BitPair = [u8; 2];

const PAIRS: [BitPair; 4] = [[0, 0], [0, 1], [1, 0], [1, 1]];

/// Image pairs of the named maps, indexed by symbol 0..=3.
const NAISARGIK_TABLES: [[BitPair; 4]; 9] = [
    [[0, 0], [1, 0], [1, 1], [0, 1]],
    [[0, 1], [0, 0], [1, 0], [1, 1]],
    [[0, 1], [1, 1], [1, 0], [0, 0]],
    [[1, 1], [0, 1], [0, 0], [1, 0]],
    [[1, 1], [1, 0], [0, 0], [0, 1]],
    [[1, 0], [0, 0], [0, 1], [1, 1]],
    [[1, 0], [1, 1], [0, 1], [0, 0]],
    [[0, 0], [0, 1], [1, 1], [1, 0]],
    [[1, 1], [0, 1], [1, 0], [0, 0]],
];

/// A bijection `Z4 -> Z2^2`, applied symbol by symbol.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymbolMap {
    name: String,
    table: [BitPair; 4],
}

impl SymbolMap {
    /// Builds a map from its image table, rejecting non-bijective tables.
    pub fn new(name: impl Into<String>, table: [BitPair; 4]) -> Result<Self> {
        if table.iter().flatten().any(|&b| b > 1) {
            return Err(domain("map images must be bit pairs"));
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if table[i] == table[j] {
                    return Err(domain(format!(
                        "symbols {i} and {j} share the image {}{}",
                        table[i][0], table[i][1]
                    )));
                }
            }
        }
        Ok(Self {
            name: name.into(),
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &[BitPair; 4] {
        &self.table
    }

    pub fn image(&self, symbol: u8) -> BitPair {
        self.table[symbol as usize]
    }

    /// The unique symbol whose image is `pair`.
    pub fn preimage(&self, pair: BitPair) -> u8 {
        self.table
            .iter()
            .position(|&p| p == pair)
            .expect("bijective table covers every bit pair") as u8
    }

    /// Maps a quaternary word of length `n` to a binary word of length `2n`.
    pub fn apply(&self, x: &Word) -> Result<Word> {
        x.require_alphabet(4, "forward map")?;
        let bits = x.symbols().iter().flat_map(|&s| self.image(s)).collect();
        Ok(Word::from_raw(2, bits))
    }

    /// Maps a binary word of even length back to `Z4`.
    pub fn invert(&self, bits: &Word) -> Result<Word> {
        bits.require_alphabet(2, "inverse map")?;
        if !bits.len().is_multiple_of(2) {
            return Err(domain(format!(
                "inverse map needs an even number of bits, got {}",
                bits.len()
            )));
        }
        let symbols = bits
            .symbols()
            .chunks_exact(2)
            .map(|c| self.preimage([c[0], c[1]]))
            .collect();
        Ok(Word::from_raw(4, symbols))
    }

    fn table_key(&self) -> [u8; 8] {
        let mut key = [0; 8];
        for (i, pair) in self.table.iter().enumerate() {
            key[2 * i] = pair[0];
            key[2 * i + 1] = pair[1];
        }
        key
    }
}

impl fmt::Display for SymbolMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.name)?;
        for (s, p) in self.table.iter().enumerate() {
            if s > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}->{}{}", p[0], p[1])?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SymbolMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The nine named maps, `phi1` through `phi9`, in registry order.
pub fn naisargik_registry() -> Vec<SymbolMap> {
    NAISARGIK_TABLES
        .iter()
        .enumerate()
        .map(|(i, &table)| SymbolMap {
            name: format!("phi{}", i + 1),
            table,
        })
        .collect()
}

/// Looks up a named map. Accepts `phi8`, `PHI8` or `φ8`.
pub fn naisargik(name: &str) -> Result<SymbolMap> {
    let lowered = name.trim().to_lowercase();
    let index = lowered
        .strip_prefix("phi")
        .or_else(|| lowered.strip_prefix('φ'))
        .and_then(|rest| rest.parse::<usize>().ok())
        .filter(|i| (1..=9).contains(i));
    match index {
        Some(i) => Ok(naisargik_registry().swap_remove(i - 1)),
        None => Err(Error::Usage(format!(
            "unknown map '{name}', expected one of phi1..phi9"
        ))),
    }
}

/// Resolves a named map (`phi1`..`phi9`) or one of the `perm-k` bijections.
pub fn symbol_map(name: &str) -> Result<SymbolMap> {
    if let Ok(map) = naisargik(name) {
        return Ok(map);
    }
    let lowered = name.trim().to_lowercase();
    enumerate_all_maps()
        .into_iter()
        .find(|m| m.name() == lowered)
        .ok_or_else(|| Error::Usage(format!("unknown map '{name}', expected phi1..phi9 or perm-k")))
}

/// All 24 bijections, ordered lexicographically by their 8-bit image table.
///
/// Maps that coincide with a named map carry its name; the rest are called
/// `perm-k` with `k` their 1-based position in this order.
pub fn enumerate_all_maps() -> Vec<SymbolMap> {
    let named = naisargik_registry();
    let mut tables = Vec::with_capacity(24);
    for (a, &pa) in PAIRS.iter().enumerate() {
        for (b, &pb) in PAIRS.iter().enumerate().filter(|&(b, _)| b != a) {
            for (c, &pc) in PAIRS.iter().enumerate().filter(|&(c, _)| c != a && c != b) {
                tables.push([pa, pb, pc, PAIRS[6 - a - b - c]]);
            }
        }
    }
    tables.sort_by_key(|t| {
        SymbolMap {
            name: String::new(),
            table: *t,
        }
        .table_key()
    });
    tables
        .into_iter()
        .enumerate()
        .map(|(k, table)| {
            let name = named
                .iter()
                .find(|m| m.table == table)
                .map(|m| m.name.clone())
                .unwrap_or_else(|| format!("perm-{}", k + 1));
            SymbolMap { name, table }
        })
        .collect()
}

/// Gray-map inverse as arithmetic: `3 b1 + b2 - 2 b1 b2`.
pub fn phi8_symbol_from_bits(b1: u8, b2: u8) -> u8 {
    let (b1, b2) = (b1 as i32, b2 as i32);
    (3 * b1 + b2 - 2 * b1 * b2) as u8
}

/// `phi9` inverse as arithmetic: `3 - b1 - 2 b2`.
pub fn phi9_symbol_from_bits(b1: u8, b2: u8) -> u8 {
    3 - b1 - 2 * b2
}

/// `phi9` as arithmetic: `((x + 1) mod 2, 1 - floor(x / 2))`.
pub fn phi9_bits_from_symbol(x: u8) -> BitPair {
    [(x + 1) % 2, 1 - x / 2]
}
