//! Binary and q-ary Varshamov-Tenengolts codes and the analyses of their
//! images under the Gray-style maps `phi1`..`phi8`.
//!
//! Formulas are 1-indexed: the binary residue is `sum i * x_i mod (n + 1)`
//! and the q-ary pair is `(sum i * alpha(x)_i mod n, sum x_i mod q)` where
//! `alpha(x)` is the signature of `x`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::{SymbolMap, Word};
use crate::error::{domain, Result};
use crate::space::{filter_space, partition_space, Codebook, Limits};
use crate::sphere::intersecting_pairs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BinaryVtParams {
    n: usize,
    a: u64,
}

impl BinaryVtParams {
    pub fn new(n: usize, a: u64) -> Result<Self> {
        if n == 0 {
            return Err(domain("binary VT length must be at least 1"));
        }
        if a > n as u64 {
            return Err(domain(format!("binary VT residue {a} is not in Z_{}", n + 1)));
        }
        Ok(Self { n, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QaryVtParams {
    n: usize,
    q: u8,
    a: u64,
    b: u64,
}

impl QaryVtParams {
    pub fn new(n: usize, q: u8, a: u64, b: u64) -> Result<Self> {
        if n == 0 {
            return Err(domain("q-ary VT length must be at least 1"));
        }
        if q < 2 {
            return Err(domain("alphabet size must be at least 2"));
        }
        if a >= n as u64 {
            return Err(domain(format!("residue a = {a} is not in Z_{n}")));
        }
        if b >= q as u64 {
            return Err(domain(format!("residue b = {b} is not in Z_{q}")));
        }
        Ok(Self { n, q, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

/// Monotonicity sequence: bit `i` is 1 iff `x_i <= x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature(Vec<u8>);

impl Signature {
    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn checksum(bits: &[u8], modulus: u64) -> u64 {
    if modulus == 0 {
        return 0;
    }
    bits.iter()
        .enumerate()
        .map(|(i, &b)| (i as u64 + 1) * b as u64)
        .sum::<u64>()
        % modulus
}

fn signature_bits(symbols: &[u8]) -> Vec<u8> {
    symbols.windows(2).map(|w| u8::from(w[0] <= w[1])).collect()
}

fn qary_pair(symbols: &[u8], q: u8) -> (u64, u64) {
    let n = symbols.len() as u64;
    let sig = signature_bits(symbols);
    let a = if n <= 1 { 0 } else { checksum(&sig, n) };
    let b = symbols.iter().map(|&s| s as u64).sum::<u64>() % q as u64;
    (a, b)
}

/// `sum_{i=1}^n i * x_i mod (n + 1)`.
pub fn binary_vt_residue(x: &Word) -> Result<u64> {
    x.require_alphabet(2, "binary VT residue")?;
    if x.is_empty() {
        return Err(domain("binary VT residue needs n >= 1"));
    }
    Ok(checksum(x.symbols(), x.len() as u64 + 1))
}

pub fn binary_vt_code(params: BinaryVtParams, limits: &Limits) -> Result<Codebook> {
    let modulus = params.n as u64 + 1;
    filter_space(params.n, 2, limits, |d| checksum(d, modulus) == params.a)
}

/// Every `VT_a(n)`, keyed by `a`. Residues with no codewords are omitted.
pub fn binary_vt_partition(n: usize, limits: &Limits) -> Result<BTreeMap<u64, Codebook>> {
    if n == 0 {
        return Err(domain("binary VT length must be at least 1"));
    }
    let modulus = n as u64 + 1;
    partition_space(n, 2, limits, |d| checksum(d, modulus))
}

pub fn signature(x: &Word) -> Signature {
    Signature(signature_bits(x.symbols()))
}

/// The residue pair `(a, b)` of a word over its own alphabet. For `n = 1`
/// the signature is empty and `a = 0`.
pub fn qary_vt_residues(x: &Word) -> Result<(u64, u64)> {
    if x.is_empty() {
        return Err(domain("q-ary VT residues need n >= 1"));
    }
    Ok(qary_pair(x.symbols(), x.alphabet_size()))
}

pub fn qary_vt_code(params: QaryVtParams, limits: &Limits) -> Result<Codebook> {
    filter_space(params.n, params.q, limits, |d| {
        qary_pair(d, params.q) == (params.a, params.b)
    })
}

/// Every `VT_{a,b}(n; q)`, keyed by `(a, b)`. Empty classes are omitted.
pub fn qary_vt_partition(n: usize, q: u8, limits: &Limits) -> Result<BTreeMap<(u64, u64), Codebook>> {
    if n == 0 {
        return Err(domain("q-ary VT length must be at least 1"));
    }
    partition_space(n, q, limits, |d| qary_pair(d, q))
}

/// Class sizes of the q-ary VT partition of `Z_q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VtCensus {
    pub n: usize,
    pub q: u8,
    /// Every pair `(a, b)` in `Z_n x Z_q`, including empty classes.
    pub counts: BTreeMap<(u64, u64), usize>,
}

impl VtCensus {
    pub fn count(&self, a: u64, b: u64) -> usize {
        self.counts.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max_count(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }

    /// Residue pairs grouped by class size, largest first.
    pub fn grouped(&self) -> Vec<(usize, Vec<(u64, u64)>)> {
        let mut groups: BTreeMap<usize, Vec<(u64, u64)>> = BTreeMap::new();
        for (&pair, &c) in &self.counts {
            groups.entry(c).or_default().push(pair);
        }
        groups.into_iter().rev().collect()
    }
}

pub fn qary_census(n: usize, q: u8, limits: &Limits) -> Result<VtCensus> {
    let parts = qary_vt_partition(n, q, limits)?;
    let mut counts = BTreeMap::new();
    for a in 0..n as u64 {
        for b in 0..q as u64 {
            counts.insert((a, b), parts.get(&(a, b)).map_or(0, Codebook::len));
        }
    }
    Ok(VtCensus { n, q, counts })
}

/// Signature bit of two Gray-mapped symbols written in their four bits
/// `(X_{2i-1}, X_{2i}, X_{2i+1}, X_{2i+2})`, as a polynomial over the bits.
///
/// It is the expansion of
/// `(1-a)(1-b) + (1-a) b (1-c) d + b c + a (1-b) c (1-d)`, one product per
/// family of symbol pairs with `x_i <= x_{i+1}`.
pub fn phi8_signature_bit(bits: [u8; 4]) -> u8 {
    let [a, b, c, d] = bits.map(i32::from);
    let value =
        1 - a - b + a * b + b * d + b * c + a * c - a * b * d - b * c * d - a * b * c - a * c * d + 2 * a * b * c * d;
    value as u8
}

/// Absolute differences `(|a_x - a_y|, |b_x - b_y|)` of the q-ary VT residues
/// of the quaternary preimages of two binary words. Residues are canonical
/// representatives and are subtracted without wraparound.
pub fn image_pair_diff(x_bits: &Word, y_bits: &Word, map: &SymbolMap) -> Result<(u64, u64)> {
    if x_bits.len() != y_bits.len() {
        return Err(domain("image pair must have equal lengths"));
    }
    let x = map.invert(x_bits)?;
    let y = map.invert(y_bits)?;
    if x.is_empty() {
        return Err(domain("image pair must be nonempty"));
    }
    let (ax, bx) = qary_vt_residues(&x)?;
    let (ay, by) = qary_vt_residues(&y)?;
    Ok((ax.abs_diff(ay), bx.abs_diff(by)))
}

/// Two mapped codewords of one residue class whose 1-deletion spheres meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImagePair {
    pub residue: (u64, u64),
    pub x: Word,
    pub y: Word,
    pub image_x: Word,
    pub image_y: Word,
    pub shared: Vec<Word>,
}

/// Result of scanning every residue class of `VT(n; 4)` under one map for
/// intersecting 1-deletion spheres with unequal image weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conjecture1Report {
    pub map: String,
    pub n: usize,
    pub classes: usize,
    pub intersecting_pairs: usize,
    /// Canonically first intersecting pair, if any.
    pub example: Option<ImagePair>,
    /// Canonically first intersecting pair with unequal weights, if any.
    pub counterexample: Option<ImagePair>,
}

impl Conjecture1Report {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct ClassScan {
    pairs: usize,
    first: Option<ImagePair>,
    first_unequal: Option<ImagePair>,
}

fn scan_class(residue: (u64, u64), class: &Codebook, map: &SymbolMap, limits: &Limits) -> Result<ClassScan> {
    // index images by preimage order so pair order follows the quaternary words
    let images: Vec<Word> = class.iter().map(|x| map.apply(x)).collect::<Result<_>>()?;
    let image_book = Codebook::from_words(images.clone());
    let position: BTreeMap<&Word, usize> = images.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut pairs: Vec<(usize, usize)> = intersecting_pairs(&image_book, 1, limits)?
        .into_iter()
        .map(|(i, j)| {
            let (a, b) = (position[&image_book.words()[i]], position[&image_book.words()[j]]);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    let build = |(i, j): (usize, usize)| -> Result<ImagePair> {
        let shared = crate::sphere::spheres_intersect(&images[i], &images[j], 1, limits)?;
        Ok(ImagePair {
            residue,
            x: class.words()[i].clone(),
            y: class.words()[j].clone(),
            image_x: images[i].clone(),
            image_y: images[j].clone(),
            shared,
        })
    };
    let first = pairs.first().copied().map(build).transpose()?;
    let first_unequal = pairs
        .iter()
        .copied()
        .find(|&(i, j)| images[i].hamming_weight() != images[j].hamming_weight())
        .map(build)
        .transpose()?;
    Ok(ClassScan {
        pairs: pairs.len(),
        first,
        first_unequal,
    })
}

fn scan_all_classes(n: usize, map: &SymbolMap, limits: &Limits) -> Result<Vec<ClassScan>> {
    let parts = qary_vt_partition(n, 4, limits)?;
    let classes: Vec<_> = parts.into_iter().collect();
    classes
        .par_iter()
        .map(|(residue, class)| scan_class(*residue, class, map, limits))
        .collect()
}

/// Checks that same-class images with intersecting 1-deletion spheres
/// always have equal Hamming weight.
pub fn conjecture1_scan(n: usize, map: &SymbolMap, limits: &Limits) -> Result<Conjecture1Report> {
    let scans = scan_all_classes(n, map, limits)?;
    let classes = scans.len();
    let intersecting_pairs = scans.iter().map(|s| s.pairs).sum();
    let mut example = None;
    let mut counterexample = None;
    for scan in scans {
        if example.is_none() {
            example = scan.first;
        }
        if counterexample.is_none() {
            counterexample = scan.first_unequal;
        }
    }
    Ok(Conjecture1Report {
        map: map.name().to_string(),
        n,
        classes,
        intersecting_pairs,
        example,
        counterexample,
    })
}

/// The first pair (residue order, then pair order) of same-class mapped
/// codewords whose 1-deletion spheres intersect.
pub fn proposition1_witness(n: usize, map: &SymbolMap, limits: &Limits) -> Result<Option<ImagePair>> {
    Ok(scan_all_classes(n, map, limits)?
        .into_iter()
        .find_map(|scan| scan.first))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{naisargik, phi8_symbol_from_bits};

    fn q4(s: &str) -> Word {
        Word::parse(4, s).unwrap()
    }

    fn b(s: &str) -> Word {
        Word::parse(2, s).unwrap()
    }

    #[test]
    fn binary_residue_examples() {
        assert_eq!(binary_vt_residue(&b("000")).unwrap(), 0);
        assert_eq!(binary_vt_residue(&b("101")).unwrap(), 0);
        assert_eq!(binary_vt_residue(&b("010000")).unwrap(), 2);
        assert!(binary_vt_residue(&q4("012")).is_err());
        assert!(binary_vt_residue(&Word::empty(2)).is_err());
    }

    #[test]
    fn binary_code_examples() {
        let l = Limits::default();
        let code = binary_vt_code(BinaryVtParams::new(3, 0).unwrap(), &l).unwrap();
        assert_eq!(code, Codebook::from_words(vec![b("000"), b("101")]));
        let parts = binary_vt_partition(3, &l).unwrap();
        assert_eq!(parts.values().map(Codebook::len).sum::<usize>(), 8);
        assert!(parts.values().all(|c| c.len() == 2));
        assert!(BinaryVtParams::new(3, 4).is_err());
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&q4("0321")).bits(), &[1, 0, 0]);
        assert_eq!(signature(&q4("22222")).bits(), &[1, 1, 1, 1]);
        assert_eq!(signature(&q4("3210")).bits(), &[0, 0, 0]);
        assert!(signature(&q4("2")).is_empty());
    }

    #[test]
    fn qary_residue_examples() {
        assert_eq!(qary_vt_residues(&q4("0321")).unwrap(), (1, 2));
        assert_eq!(qary_vt_residues(&q4("1320")).unwrap(), (1, 2));
        assert_eq!(qary_vt_residues(&q4("0000")).unwrap(), (2, 0));
        assert_eq!(qary_vt_residues(&q4("3")).unwrap(), (0, 3));
    }

    #[test]
    fn qary_census_examples() {
        let census = qary_census(4, 4, &Limits::default()).unwrap();
        assert_eq!(census.total(), 256);
        assert_eq!(census.counts.len(), 16);
        assert_eq!(census.count(2, 0), 20);
        for (a, b) in [(3, 2), (3, 0), (1, 0), (1, 2)] {
            assert_eq!(census.count(a, b), 14);
        }
        assert_eq!(census.count(2, 2), 18);
        assert_eq!(census.count(0, 2), 18);
        assert!(census.max_count() >= 256 / 16);
        assert!(QaryVtParams::new(4, 4, 4, 0).is_err());
        assert!(QaryVtParams::new(4, 4, 0, 4).is_err());
    }

    #[test]
    fn signature_polynomial_matches_lookup() {
        let phi8 = naisargik("phi8").unwrap();
        for v in 0..16u8 {
            let bits = [v >> 3 & 1, v >> 2 & 1, v >> 1 & 1, v & 1];
            let x = phi8_symbol_from_bits(bits[0], bits[1]);
            let y = phi8_symbol_from_bits(bits[2], bits[3]);
            let pre = phi8.invert(&Word::binary(bits.to_vec()).unwrap()).unwrap();
            assert_eq!(pre.symbols(), &[x, y]);
            assert_eq!(phi8_signature_bit(bits), u8::from(x <= y), "bits {bits:?}");
        }
        assert_eq!(phi8_signature_bit([1, 0, 1, 0]), 1);
        assert_eq!(phi8_signature_bit([1, 0, 0, 1]), 0);
    }

    #[test]
    fn pair_diff_examples() {
        let phi8 = naisargik("phi8").unwrap();
        assert_eq!(image_pair_diff(&b("10"), &b("00"), &phi8).unwrap(), (0, 3));
        assert_eq!(image_pair_diff(&b("11100001"), &b("11000001"), &phi8).unwrap(), (1, 1));
        assert_eq!(image_pair_diff(&b("110001"), &b("100001"), &phi8).unwrap(), (0, 3));
        assert!(image_pair_diff(&b("101"), &b("100"), &phi8).is_err());
    }

    #[test]
    fn small_conjecture1_scans() {
        let l = Limits::default();
        for i in 1..=8 {
            let map = naisargik(&format!("phi{i}")).unwrap();
            let report = conjecture1_scan(2, &map, &l).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn proposition1_small_cases() {
        let l = Limits::default();
        for map in crate::alphabet::enumerate_all_maps() {
            assert!(proposition1_witness(1, &map, &l).unwrap().is_none());
        }
    }
}
