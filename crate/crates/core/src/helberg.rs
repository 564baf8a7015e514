//! Generalized Helberg codes over `Z_q`.
//!
//! Weights follow `v_i = 1 + (q - 1) * sum_{j=1}^{s} v_{i-j}` with `v_i = 0`
//! for `i <= 0`. A word `x` of length `n` has moment `M(x) = sum v_i x_i`, and
//! `H(n, q, s, a)` collects the words with `M(x) = a (mod m)`, `m = v_{n+1}`.
//!
//! All arithmetic is exact `u128` with overflow checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::alphabet::Word;
use crate::error::{domain, Error, Result};
use crate::space::{partition_space, Codebook, Limits};

/// `v_1..v_len` for fixed `(q, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightSequence {
    q: u8,
    s: usize,
    values: Vec<u128>,
}

impl WeightSequence {
    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn values(&self) -> &[u128] {
        &self.values
    }

    /// Number of stored weights.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Word length these weights serve: one less than the number stored,
    /// since the last weight is the modulus.
    pub fn word_len(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// `v_i`, 1-indexed. Zero for `i <= 0`, `None` past the stored range.
    pub fn get(&self, i: i64) -> Option<u128> {
        if i <= 0 {
            Some(0)
        } else {
            self.values.get(i as usize - 1).copied()
        }
    }

    /// The weights applied to a word: `v_1..v_n`.
    pub fn word_weights(&self) -> &[u128] {
        &self.values[..self.word_len()]
    }

    /// `v_{n+1}`.
    pub fn modulus(&self) -> u128 {
        *self.values.last().expect("weight sequence is nonempty")
    }
}

fn check_shape(q: u8, s: usize) -> Result<()> {
    if q < 2 {
        return Err(domain("alphabet size must be at least 2"));
    }
    if s == 0 {
        return Err(domain("Helberg codes need s >= 1"));
    }
    Ok(())
}

/// `v_1..v_{n+1}`.
pub fn weight_sequence(n: usize, q: u8, s: usize) -> Result<WeightSequence> {
    if n == 0 {
        return Err(domain("Helberg length must be at least 1"));
    }
    check_shape(q, s)?;
    let r = q as u128 - 1;
    let mut values: Vec<u128> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let window = &values[i.saturating_sub(s)..i];
        let sum = window
            .iter()
            .try_fold(0u128, |acc, &v| acc.checked_add(v))
            .ok_or(Error::Overflow("Helberg weights"))?;
        let v = sum
            .checked_mul(r)
            .and_then(|t| t.checked_add(1))
            .ok_or(Error::Overflow("Helberg weights"))?;
        values.push(v);
    }
    Ok(WeightSequence { q, s, values })
}

/// `m = (q - 1) * sum_{i=0}^{s-1} v_{n-i} + 1`, evaluated directly.
pub fn modulus_direct(weights: &WeightSequence) -> Result<u128> {
    let n = weights.word_len() as i64;
    let mut sum: u128 = 0;
    for i in 0..weights.s as i64 {
        let v = weights.get(n - i).ok_or_else(|| domain("weight index out of range"))?;
        sum = sum.checked_add(v).ok_or(Error::Overflow("Helberg modulus"))?;
    }
    sum.checked_mul(weights.q as u128 - 1)
        .and_then(|t| t.checked_add(1))
        .ok_or(Error::Overflow("Helberg modulus"))
}

/// `M(x) = sum v_i x_i` over the word weights `v_1..v_n`.
pub fn moment(x: &Word, weights: &WeightSequence) -> Result<u128> {
    if x.len() != weights.word_len() {
        return Err(domain(format!(
            "word length {} does not match weights for length {}",
            x.len(),
            weights.word_len()
        )));
    }
    x.require_alphabet(weights.q, "moment")?;
    x.symbols()
        .iter()
        .zip(weights.word_weights())
        .try_fold(0u128, |acc, (&sym, &v)| {
            v.checked_mul(sym as u128).and_then(|t| acc.checked_add(t))
        })
        .ok_or(Error::Overflow("moment"))
}

/// `(n, q, s, a)` together with the derived weights and modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HelbergParams {
    n: usize,
    q: u8,
    s: usize,
    a: u128,
    weights: WeightSequence,
    m: u128,
}

impl HelbergParams {
    pub fn new(n: usize, q: u8, s: usize, a: u128) -> Result<Self> {
        let weights = weight_sequence(n, q, s)?;
        let m = weights.modulus();
        if a >= m {
            return Err(domain(format!("residue {a} is not in Z_{m}")));
        }
        Ok(Self { n, q, s, a, weights, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn a(&self) -> u128 {
        self.a
    }

    pub fn weights(&self) -> &WeightSequence {
        &self.weights
    }

    pub fn m(&self) -> u128 {
        self.m
    }

    pub fn contains(&self, x: &Word) -> Result<bool> {
        Ok(moment(x, &self.weights)? % self.m == self.a)
    }
}

/// Residue key used while enumerating. Largest moment is checked once so the
/// inner loop can use plain arithmetic.
fn residue_key(weights: &WeightSequence) -> Result<impl Fn(&[u8]) -> u128 + Sync + '_> {
    let top = weights.q as u128 - 1;
    weights
        .word_weights()
        .iter()
        .try_fold(0u128, |acc, &v| v.checked_mul(top).and_then(|t| acc.checked_add(t)))
        .ok_or(Error::Overflow("moment"))?;
    let m = weights.modulus();
    Ok(move |d: &[u8]| {
        d.iter()
            .zip(weights.word_weights())
            .map(|(&x, &v)| v * x as u128)
            .sum::<u128>()
            % m
    })
}

pub fn helberg_code(params: &HelbergParams, limits: &Limits) -> Result<Codebook> {
    let key = residue_key(&params.weights)?;
    let mut parts = partition_space(params.n, params.q, limits, |d| key(d) == params.a)?;
    Ok(parts.remove(&true).unwrap_or_default())
}

/// Every nonempty `H(n, q, s, a)`, keyed by `a`.
pub fn helberg_partition(n: usize, q: u8, s: usize, limits: &Limits) -> Result<BTreeMap<u128, Codebook>> {
    let weights = weight_sequence(n, q, s)?;
    let key = residue_key(&weights)?;
    partition_space(n, q, limits, key)
}

/// Codebook sizes for every residue of `Z_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HelbergCensus {
    pub n: usize,
    pub q: u8,
    pub s: usize,
    pub m: u128,
    /// Nonempty residues only; absent residues have no codewords.
    pub counts: BTreeMap<u128, usize>,
}

impl HelbergCensus {
    pub fn count(&self, a: u128) -> usize {
        self.counts.get(&a).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn empty_residues(&self) -> u128 {
        self.m - self.counts.len() as u128
    }

    pub fn max_count(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }

    /// Residues achieving the maximum, ascending.
    pub fn max_residues(&self) -> Vec<u128> {
        let max = self.max_count();
        self.counts
            .iter()
            .filter(|&(_, &c)| c == max)
            .map(|(&a, _)| a)
            .collect()
    }

    /// Nonempty residues grouped by class size, largest first.
    pub fn grouped(&self) -> Vec<(usize, Vec<u128>)> {
        let mut groups: BTreeMap<usize, Vec<u128>> = BTreeMap::new();
        for (&a, &c) in &self.counts {
            groups.entry(c).or_default().push(a);
        }
        groups.into_iter().rev().collect()
    }
}

pub fn helberg_census(n: usize, q: u8, s: usize, limits: &Limits) -> Result<HelbergCensus> {
    let m = weight_sequence(n, q, s)?.modulus();
    let counts = helberg_partition(n, q, s, limits)?
        .into_iter()
        .map(|(a, book)| (a, book.len()))
        .collect();
    Ok(HelbergCensus { n, q, s, m, counts })
}

/// `C_i = ((i + 1) mod 2 + 1) * v_{ceil(i/2)}`: `v_{(i+1)/2}` for odd `i`,
/// `2 v_{i/2}` for even `i`.
pub fn coefficient_c(i: usize, weights: &WeightSequence) -> Result<u128> {
    if i == 0 {
        return Err(domain("coefficient index starts at 1"));
    }
    let v = weights
        .get(i.div_ceil(2) as i64)
        .ok_or_else(|| domain(format!("coefficient C_{i} needs more weights")))?;
    let factor = ((i + 1) % 2 + 1) as u128;
    v.checked_mul(factor).ok_or(Error::Overflow("coefficient"))
}

/// Outcome of one inequality family over its index range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaFamily {
    pub checked: usize,
    /// First index whose inequality fails, with the offending gap.
    pub violation: Option<(usize, i128)>,
}

impl LemmaFamily {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientLemmaReport {
    pub n: usize,
    pub q: u8,
    pub s: usize,
    /// `C_i > C_{i-1}` for `2 <= i <= 2n`.
    pub monotone: LemmaFamily,
    /// `C_L - sum_{i=L-s}^{L-1} C_i >= 1` for `1 <= L <= 2n`.
    pub coefficient_gap: LemmaFamily,
    /// `v_{2L-1} - sum_{i=L-s/2+1}^{L-1} (v_{2i-1} + v_{2i}) >= 1` for `1 <= L <= n`.
    pub paired_weight_gap: LemmaFamily,
}

impl CoefficientLemmaReport {
    pub fn all_hold(&self) -> bool {
        self.monotone.holds() && self.coefficient_gap.holds() && self.paired_weight_gap.holds()
    }
}

fn family(range: impl Iterator<Item = usize>, gap: impl Fn(usize) -> Result<i128>) -> Result<LemmaFamily> {
    let mut checked = 0;
    for k in range {
        checked += 1;
        let g = gap(k)?;
        if g < 1 {
            return Ok(LemmaFamily {
                checked,
                violation: Some((k, g)),
            });
        }
    }
    Ok(LemmaFamily {
        checked,
        violation: None,
    })
}

fn signed(x: u128) -> Result<i128> {
    i128::try_from(x).map_err(|_| Error::Overflow("lemma gap"))
}

/// Evaluates the three coefficient inequality families with weights up to
/// `v_{2n+1}`. Indices at or below zero contribute zero to every sum.
pub fn check_coefficient_lemmas(n: usize, q: u8, s: usize) -> Result<CoefficientLemmaReport> {
    let v = weight_sequence(2 * n, q, s)?;
    let c = |i: usize| -> Result<i128> {
        if i == 0 {
            Ok(0)
        } else {
            signed(coefficient_c(i, &v)?)
        }
    };
    let w = |i: usize| -> Result<i128> { signed(v.get(i as i64).expect("index within 2n + 1")) };

    let monotone = family(2..=2 * n, |i| Ok(c(i)? - c(i - 1)?))?;
    let coefficient_gap = family(1..=2 * n, |l| {
        let mut gap = c(l)?;
        for i in l.saturating_sub(s).max(1)..l {
            gap -= c(i)?;
        }
        Ok(gap)
    })?;
    let half = s / 2;
    let paired_weight_gap = family(1..=n, |l| {
        let mut gap = w(2 * l - 1)?;
        let lo = (l + 1).saturating_sub(half).max(1);
        for i in lo..l {
            gap -= w(2 * i - 1)? + w(2 * i)?;
        }
        Ok(gap)
    })?;
    Ok(CoefficientLemmaReport {
        n,
        q,
        s,
        monotone,
        coefficient_gap,
        paired_weight_gap,
    })
}

fn bound_args(n: usize, q: u8, s: usize) -> Result<()> {
    if n == 0 {
        return Err(domain("bounds need n >= 1"));
    }
    check_shape(q, s)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn pow(base: u64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// `L_n(q, s) = ((s!)^2 q^{n+s} + s) / ((q - 1)^{2s} 2^n 2^s)`.
pub fn lower_bound(n: usize, q: u8, s: usize) -> Result<BigRational> {
    bound_args(n, q, s)?;
    let f = factorial(s);
    let num = &f * &f * pow(q as u64, n + s) + BigInt::from(s);
    let den = pow(q as u64 - 1, 2 * s) * pow(2, n) * pow(2, s);
    Ok(BigRational::new(num, den))
}

/// `U_n(q, s) = s! q^n / ((q - 1)^s n^s)`.
pub fn upper_bound(n: usize, q: u8, s: usize) -> Result<BigRational> {
    bound_args(n, q, s)?;
    let num = factorial(s) * pow(q as u64, n);
    let den = pow(q as u64 - 1, s) * pow(n as u64, s);
    Ok(BigRational::new(num, den))
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Componentwise mod-2 image of a quaternary code.
pub fn reduction_code(code: &Codebook) -> Result<Codebook> {
    code.try_map(|x| {
        x.require_alphabet(4, "reduction code")?;
        Ok(Word::from_raw(2, x.symbols().iter().map(|s| s % 2).collect()))
    })
}

/// Binary words `y` whose double `2y` lies in the quaternary code.
pub fn torsion_code(code: &Codebook) -> Result<Codebook> {
    let mut out = Vec::new();
    for x in code {
        x.require_alphabet(4, "torsion code")?;
        if x.symbols().iter().all(|s| s % 2 == 0) {
            out.push(Word::from_raw(2, x.symbols().iter().map(|s| s / 2).collect()));
        }
    }
    Ok(Codebook::from_words(out))
}
