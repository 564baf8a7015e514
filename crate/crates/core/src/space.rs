//! Exhaustive enumeration of `Z_q^n` and the sorted codebook container.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::Word;
use crate::error::{Error, Result};

/// Default cap on enumerated words: `4^12`.
pub const DEFAULT_MAX_ENUM: u128 = 1 << 24;
/// Default cap on `C(|x|, s)` for a single deletion sphere.
pub const DEFAULT_SPHERE_CAP: u128 = 10_000_000;

const CHUNK: u64 = 1 << 14;

/// Resource guards for exhaustive computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_enum: u128,
    pub sphere_cap: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_enum: DEFAULT_MAX_ENUM,
            sphere_cap: DEFAULT_SPHERE_CAP,
        }
    }
}

impl Limits {
    pub fn with_max_enum(mut self, max_enum: u128) -> Self {
        self.max_enum = max_enum.max(1);
        self
    }

    /// `q^n`, or a resource error when it exceeds `max_enum`.
    pub fn check_space(&self, n: usize, q: u8) -> Result<u64> {
        let size = (q as u128).checked_pow(n as u32);
        match size {
            Some(size) if size <= self.max_enum && size <= u64::MAX as u128 => Ok(size as u64),
            _ => Err(Error::Resource {
                what: "enumeration of Z_q^n",
                needed: size.map_or_else(|| format!("{q}^{n}"), |s| s.to_string()),
                cap: self.max_enum,
            }),
        }
    }
}

/// A set of equal-length words, kept sorted and deduplicated.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Codebook(Vec<Word>);

impl Codebook {
    pub fn from_words(mut words: Vec<Word>) -> Self {
        words.sort_unstable();
        words.dedup();
        Self(words)
    }

    /// Wraps words already in strictly increasing order.
    pub(crate) fn from_sorted(words: Vec<Word>) -> Self {
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]));
        Self(words)
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.0.iter()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.0.binary_search(word).is_ok()
    }

    pub fn is_subset_of(&self, other: &Codebook) -> bool {
        self.0.iter().all(|w| other.contains(w))
    }

    /// Applies `f` to every word and collects the results as a new codebook.
    pub fn try_map(&self, f: impl Fn(&Word) -> Result<Word>) -> Result<Codebook> {
        Ok(Codebook::from_words(self.0.iter().map(f).collect::<Result<_>>()?))
    }

    pub fn into_vec(self) -> Vec<Word> {
        self.0
    }
}

impl std::fmt::Debug for Codebook {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.0.iter().map(|w| w.to_string())).finish()
    }
}

impl<'a> IntoIterator for &'a Codebook {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromIterator<Word> for Codebook {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        Codebook::from_words(iter.into_iter().collect())
    }
}

fn decode(mut index: u64, n: usize, q: u8, out: &mut [u8]) {
    for slot in out[..n].iter_mut().rev() {
        *slot = (index % q as u64) as u8;
        index /= q as u64;
    }
}

fn increment(digits: &mut [u8], q: u8) {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < q {
            return;
        }
        *d = 0;
    }
}

/// Buckets every word of `Z_q^n` by `key`. Within a bucket words appear in
/// lexicographic order, regardless of how the scan is split across workers.
pub fn partition_space<K, F>(n: usize, q: u8, limits: &Limits, key: F) -> Result<BTreeMap<K, Codebook>>
where
    K: Ord + Send,
    F: Fn(&[u8]) -> K + Sync,
{
    let total = limits.check_space(n, q)?;
    let chunks = total.div_ceil(CHUNK);
    let partials: Vec<BTreeMap<K, Vec<Word>>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut digits = vec![0u8; n];
            decode(start, n, q, &mut digits);
            let mut local: BTreeMap<K, Vec<Word>> = BTreeMap::new();
            for _ in start..end {
                local
                    .entry(key(&digits))
                    .or_default()
                    .push(Word::from_raw(q, digits.clone()));
                increment(&mut digits, q);
            }
            local
        })
        .collect();
    let mut merged: BTreeMap<K, Vec<Word>> = BTreeMap::new();
    for part in partials {
        for (k, mut words) in part {
            merged.entry(k).or_default().append(&mut words);
        }
    }
    Ok(merged
        .into_iter()
        .map(|(k, words)| (k, Codebook::from_sorted(words)))
        .collect())
}

/// All words of `Z_q^n` satisfying `keep`, in lexicographic order.
pub fn filter_space<F>(n: usize, q: u8, limits: &Limits, keep: F) -> Result<Codebook>
where
    F: Fn(&[u8]) -> bool + Sync,
{
    let mut parts = partition_space(n, q, limits, keep)?;
    Ok(parts.remove(&true).unwrap_or_default())
}
