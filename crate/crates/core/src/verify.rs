//! Verification campaigns over whole residue partitions: image and inverse
//! image correction, image residues, the bijection check between quaternary
//! Helberg images and binary Helberg codes, cardinality tables, and the
//! reduction and torsion scans.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::{SymbolMap, Word};
use crate::error::{domain, Result};
use crate::helberg::{
    helberg_census, helberg_code, helberg_partition, lower_bound, moment, reduction_code, torsion_code, upper_bound,
    weight_sequence, HelbergParams, WeightSequence,
};
use crate::space::{Codebook, Limits};
use crate::sphere::{codebook_is_s_correcting, CorrectionReport};
use crate::vt::binary_vt_partition;

/// Elementwise `map.apply` over a quaternary codebook.
pub fn image_code(code: &Codebook, map: &SymbolMap) -> Result<Codebook> {
    code.try_map(|x| map.apply(x))
}

/// Elementwise `map.invert` over a binary codebook of even length.
pub fn inverse_image_code(code: &Codebook, map: &SymbolMap) -> Result<Codebook> {
    code.try_map(|x| map.invert(x))
}

/// One residue class of a campaign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignCell {
    pub residue: u128,
    pub size: usize,
    pub report: CorrectionReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignResult {
    pub campaign: String,
    pub n: usize,
    pub q: u8,
    pub s: usize,
    pub map: Option<String>,
    /// Deletions each cell is checked against.
    pub deletions: usize,
    /// Size of the residue ring; residues without cells are empty classes.
    pub modulus: u128,
    /// Nonempty residue classes in ascending order.
    pub cells: Vec<CampaignCell>,
    pub max_codewords: usize,
    pub max_residues: Vec<u128>,
}

impl CampaignResult {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.report.passed())
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &CampaignCell> {
        self.cells.iter().filter(|c| !c.report.passed())
    }

    pub fn cell(&self, residue: u128) -> Option<&CampaignCell> {
        self.cells
            .binary_search_by_key(&residue, |c| c.residue)
            .ok()
            .map(|i| &self.cells[i])
    }
}

struct Grid<'a> {
    campaign: &'a str,
    n: usize,
    q: u8,
    s: usize,
    map: Option<&'a SymbolMap>,
    deletions: usize,
    modulus: u128,
}

fn run_cells<F>(
    grid: Grid<'_>,
    parts: BTreeMap<u128, Codebook>,
    limits: &Limits,
    transform: F,
) -> Result<CampaignResult>
where
    F: Fn(&Codebook) -> Result<Codebook> + Sync,
{
    let parts: Vec<(u128, Codebook)> = parts.into_iter().collect();
    let cells: Vec<CampaignCell> = parts
        .par_iter()
        .map(|(residue, code)| {
            let code = transform(code)?;
            let report = codebook_is_s_correcting(&code, grid.deletions, limits)?;
            Ok(CampaignCell {
                residue: *residue,
                size: code.len(),
                report,
            })
        })
        .collect::<Result<_>>()?;
    let max_codewords = cells.iter().map(|c| c.size).max().unwrap_or(0);
    let max_residues = cells
        .iter()
        .filter(|c| c.size == max_codewords)
        .map(|c| c.residue)
        .collect();
    Ok(CampaignResult {
        campaign: grid.campaign.to_string(),
        n: grid.n,
        q: grid.q,
        s: grid.s,
        map: grid.map.map(|m| m.name().to_string()),
        deletions: grid.deletions,
        modulus: grid.modulus,
        cells,
        max_codewords,
        max_residues,
    })
}

/// Checks that `map(H(n, 4, s, a))` corrects `s + 1` deletions for every `a`.
pub fn verify_image_correction(n: usize, s: usize, map: &SymbolMap, limits: &Limits) -> Result<CampaignResult> {
    let modulus = weight_sequence(n, 4, s)?.modulus();
    let parts = helberg_partition(n, 4, s, limits)?;
    let grid = Grid {
        campaign: "image-correction",
        n,
        q: 4,
        s,
        map: Some(map),
        deletions: s + 1,
        modulus,
    };
    run_cells(grid, parts, limits, |code| image_code(code, map))
}

/// Checks that `map^-1(H(N, 2, s, a))` corrects `floor(s/2)` deletions for
/// every `a`. `big_n` is the binary length and must be even.
pub fn verify_inverse_correction(big_n: usize, s: usize, map: &SymbolMap, limits: &Limits) -> Result<CampaignResult> {
    if !big_n.is_multiple_of(2) {
        return Err(domain(format!(
            "inverse images need an even binary length, got {big_n}"
        )));
    }
    let modulus = weight_sequence(big_n, 2, s)?.modulus();
    let parts = helberg_partition(big_n, 2, s, limits)?;
    let grid = Grid {
        campaign: "inverse-correction",
        n: big_n,
        q: 2,
        s,
        map: Some(map),
        deletions: s / 2,
        modulus,
    };
    run_cells(grid, parts, limits, |code| inverse_image_code(code, map))
}

/// Checks that every `H(n, q, s, a)` corrects `s` deletions.
pub fn verify_helberg_self(n: usize, q: u8, s: usize, limits: &Limits) -> Result<CampaignResult> {
    let modulus = weight_sequence(n, q, s)?.modulus();
    let parts = helberg_partition(n, q, s, limits)?;
    let grid = Grid {
        campaign: "helberg-self",
        n,
        q,
        s,
        map: None,
        deletions: s,
        modulus,
    };
    run_cells(grid, parts, limits, |code| Ok(code.clone()))
}

/// Checks that every binary `VT_a(n)` corrects one deletion.
pub fn verify_binary_vt(n: usize, limits: &Limits) -> Result<CampaignResult> {
    let parts = binary_vt_partition(n, limits)?
        .into_iter()
        .map(|(a, code)| (a as u128, code))
        .collect();
    let grid = Grid {
        campaign: "binary-vt",
        n,
        q: 2,
        s: 1,
        map: None,
        deletions: 1,
        modulus: n as u128 + 1,
    };
    run_cells(grid, parts, limits, |code| Ok(code.clone()))
}

/// `M(map(x)) mod m'` for the binary weights of length `2|x|`.
pub fn image_residue(x: &Word, map: &SymbolMap, binary_weights: &WeightSequence) -> Result<u128> {
    if binary_weights.q() != 2 {
        return Err(domain("image residues need binary weights"));
    }
    let image = map.apply(x)?;
    Ok(moment(&image, binary_weights)? % binary_weights.modulus())
}

/// One maximum-cardinality class of `H(n, 4, 1, .)` against `H(2n, 2, 2, a')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionCell {
    pub a: u128,
    /// Binary residue of the first codeword's image.
    pub a_prime: u128,
    pub size: usize,
    /// All images share `a_prime`.
    pub consistent: bool,
    /// The image code lies inside `H(2n, 2, 2, a_prime)`.
    pub subset: bool,
    /// The image code equals `H(2n, 2, 2, a_prime)`.
    pub equal: bool,
    pub binary_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub map: String,
    pub cells: Vec<BijectionCell>,
}

impl BijectionReport {
    pub fn consistent(&self) -> bool {
        self.cells.iter().all(|c| c.consistent)
    }

    pub fn subset(&self) -> bool {
        self.cells.iter().all(|c| c.subset)
    }

    pub fn equal(&self) -> bool {
        self.cells.iter().all(|c| c.equal)
    }

    /// `(a, a')` for every maximum class.
    pub fn mapping(&self) -> Vec<(u128, u128)> {
        self.cells.iter().map(|c| (c.a, c.a_prime)).collect()
    }
}

/// For each maximum-cardinality residue `a` of `H(n, 4, 1, .)`, compares the
/// image code with the binary Helberg code `H(2n, 2, 2, a')`.
pub fn verify_bijection_conjecture(n: usize, map: &SymbolMap, limits: &Limits) -> Result<BijectionReport> {
    limits.check_space(2 * n, 2)?;
    let census = helberg_census(n, 4, 1, limits)?;
    let binary_weights = weight_sequence(2 * n, 2, 2)?;
    let cells = census
        .max_residues()
        .into_par_iter()
        .map(|a| {
            let code = helberg_code(&HelbergParams::new(n, 4, 1, a)?, limits)?;
            let residues: Vec<u128> = code
                .iter()
                .map(|x| image_residue(x, map, &binary_weights))
                .collect::<Result<_>>()?;
            let a_prime = residues[0];
            let consistent = residues.iter().all(|&r| r == a_prime);
            let image = image_code(&code, map)?;
            let binary = helberg_code(&HelbergParams::new(2 * n, 2, 2, a_prime)?, limits)?;
            Ok(BijectionCell {
                a,
                a_prime,
                size: code.len(),
                consistent,
                subset: image.is_subset_of(&binary),
                equal: image == binary,
                binary_size: binary.len(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(BijectionReport {
        n,
        map: map.name().to_string(),
        cells,
    })
}

/// One row of the cardinality table.
#[derive(Debug, Clone, PartialEq)]
pub struct CardinalityRow {
    pub n: usize,
    /// `L_n(4, 1)`.
    pub lower: BigRational,
    /// `U_n(4, 1)`.
    pub upper: BigRational,
    /// Largest `H(2n, 2, 2, a)`.
    pub binary_max: usize,
    /// Largest `map(H(n, 4, 1, a))`, equal to the largest `H(n, 4, 1, a)`.
    pub image_max: usize,
}

/// Bounds at `(q, s) = (4, 1)` next to the largest binary `(2n, 2, 2)` and
/// quaternary `(n, 4, 1)` Helberg codes.
pub fn cardinality_comparison(ns: RangeInclusive<usize>, limits: &Limits) -> Result<Vec<CardinalityRow>> {
    ns.map(|n| {
        Ok(CardinalityRow {
            n,
            lower: lower_bound(n, 4, 1)?,
            upper: upper_bound(n, 4, 1)?,
            binary_max: helberg_census(2 * n, 2, 2, limits)?.max_count(),
            image_max: helberg_census(n, 4, 1, limits)?.max_count(),
        })
    })
    .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCell {
    pub residue: u128,
    pub size: usize,
    pub reduced: Codebook,
    pub report: CorrectionReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub q: u8,
    pub s: usize,
    pub deletions: usize,
    pub cells: Vec<ReductionCell>,
}

impl ReductionReport {
    pub fn passing(&self) -> Vec<u128> {
        self.cells
            .iter()
            .filter(|c| c.report.passed())
            .map(|c| c.residue)
            .collect()
    }

    pub fn failing(&self) -> Vec<u128> {
        self.cells
            .iter()
            .filter(|c| !c.report.passed())
            .map(|c| c.residue)
            .collect()
    }
}

/// Reduces every nonempty `H(n, 4, s, a)` mod 2 and checks the result at
/// `deletions` deletions.
pub fn reduction_analysis(n: usize, q: u8, s: usize, deletions: usize, limits: &Limits) -> Result<ReductionReport> {
    if q != 4 {
        return Err(domain("reduction codes are defined for quaternary codes"));
    }
    let parts: Vec<(u128, Codebook)> = helberg_partition(n, q, s, limits)?.into_iter().collect();
    let cells = parts
        .par_iter()
        .map(|(a, code)| {
            let reduced = reduction_code(code)?;
            let report = codebook_is_s_correcting(&reduced, deletions, limits)?;
            Ok(ReductionCell {
                residue: *a,
                size: code.len(),
                reduced,
                report,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ReductionReport {
        n,
        q,
        s,
        deletions,
        cells,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionCell {
    pub residue: u128,
    pub size: usize,
    pub torsion: Codebook,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionReport {
    pub n: usize,
    pub q: u8,
    pub s: usize,
    pub m: u128,
    pub cells: Vec<TorsionCell>,
}

impl TorsionReport {
    pub fn max_torsion(&self) -> usize {
        self.cells.iter().map(|c| c.torsion.len()).max().unwrap_or(0)
    }

    /// Residues whose torsion code has more than one word.
    pub fn nontrivial(&self) -> Vec<u128> {
        self.cells
            .iter()
            .filter(|c| c.torsion.len() > 1)
            .map(|c| c.residue)
            .collect()
    }
}

/// Torsion code of every nonempty `H(n, 4, s, a)`.
pub fn torsion_analysis(n: usize, q: u8, s: usize, limits: &Limits) -> Result<TorsionReport> {
    if q != 4 {
        return Err(domain("torsion codes are defined for quaternary codes"));
    }
    let m = weight_sequence(n, q, s)?.modulus();
    let cells = helberg_partition(n, q, s, limits)?
        .into_iter()
        .map(|(a, code)| {
            Ok(TorsionCell {
                residue: a,
                size: code.len(),
                torsion: torsion_code(&code)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(TorsionReport { n, q, s, m, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::naisargik;

    fn words(q: u8, items: &[&str]) -> Codebook {
        items.iter().map(|s| Word::parse(q, s).unwrap()).collect()
    }

    #[test]
    fn image_of_table_code() {
        let l = Limits::default();
        let phi9 = naisargik("phi9").unwrap();
        let code = helberg_code(&HelbergParams::new(4, 4, 1, 40).unwrap(), &l).unwrap();
        let image = image_code(&code, &phi9).unwrap();
        assert_eq!(
            image,
            words(2, &["11111101", "01110011", "10110000", "10001011", "00001000"])
        );
        assert!(image_code(&Codebook::default(), &phi9).unwrap().is_empty());
    }

    #[test]
    fn inverse_image_contains_known_word() {
        let l = Limits::default();
        let phi9 = naisargik("phi9").unwrap();
        let code = helberg_code(&HelbergParams::new(10, 2, 2, 66).unwrap(), &l).unwrap();
        let inv = inverse_image_code(&code, &phi9).unwrap();
        assert_eq!(inv.len(), 8);
        assert!(inv.contains(&Word::parse(4, "23210").unwrap()));
        let odd = words(2, &["101"]);
        assert!(inverse_image_code(&odd, &phi9).is_err());
    }

    #[test]
    fn image_correction_small() {
        let l = Limits::default();
        let phi9 = naisargik("phi9").unwrap();
        let r = verify_image_correction(4, 1, &phi9, &l).unwrap();
        assert!(r.passed());
        assert_eq!(r.max_codewords, 5);
        assert_eq!(r.max_residues, vec![13, 40]);
        assert_eq!(r.modulus, 121);
        assert_eq!(r.cells.iter().map(|c| c.size).sum::<usize>(), 256);
        let r = verify_image_correction(3, 2, &phi9, &l).unwrap();
        assert_eq!(r.max_codewords, 2);
    }

    #[test]
    fn inverse_correction_small() {
        let l = Limits::default();
        let phi9 = naisargik("phi9").unwrap();
        let r = verify_inverse_correction(10, 2, &phi9, &l).unwrap();
        assert!(r.passed());
        assert_eq!(r.deletions, 1);
        assert_eq!(r.max_residues, vec![66]);
        assert!(verify_inverse_correction(9, 2, &phi9, &l).is_err());
    }

    #[test]
    fn image_residue_examples() {
        let l = Limits::default();
        let phi9 = naisargik("phi9").unwrap();
        let w8 = weight_sequence(8, 2, 2).unwrap();
        for (a, expected) in [(40, 12), (13, 33)] {
            let code = helberg_code(&HelbergParams::new(4, 4, 1, a).unwrap(), &l).unwrap();
            for x in &code {
                assert_eq!(image_residue(x, &phi9, &w8).unwrap(), expected);
            }
        }
        let w10 = weight_sequence(10, 2, 2).unwrap();
        let code = helberg_code(&HelbergParams::new(5, 4, 1, 134).unwrap(), &l).unwrap();
        for x in &code {
            assert_eq!(image_residue(x, &phi9, &w10).unwrap(), 32);
        }
        let x = Word::parse(4, "000").unwrap();
        assert!(image_residue(&x, &phi9, &w8).is_err());
    }

    #[test]
    fn bijection_small() {
        let l = Limits::default();
        let phi9 = naisargik("phi9").unwrap();
        let r = verify_bijection_conjecture(4, &phi9, &l).unwrap();
        assert_eq!(r.mapping(), vec![(13, 33), (40, 12)]);
        assert!(r.consistent() && r.subset() && r.equal());
        let r = verify_bijection_conjecture(3, &phi9, &l).unwrap();
        assert_eq!(r.mapping(), vec![(0, 13), (1, 12), (13, 1), (14, 0)]);
    }

    #[test]
    fn cardinality_small() {
        let rows = cardinality_comparison(2..=4, &Limits::default()).unwrap();
        let n: Vec<_> = rows.iter().map(|r| (r.binary_max, r.image_max)).collect();
        assert_eq!(n, vec![(2, 2), (3, 3), (5, 5)]);
        assert_eq!(rows[0].lower, BigRational::new(65.into(), 72.into()));
    }

    #[test]
    fn reduction_mixed_pattern() {
        let r = reduction_analysis(4, 4, 1, 2, &Limits::default()).unwrap();
        assert!(!r.passing().is_empty());
        assert!(!r.failing().is_empty());
        assert!(reduction_analysis(4, 2, 1, 1, &Limits::default()).is_err());
    }

    #[test]
    fn torsion_small() {
        let r = torsion_analysis(5, 4, 1, &Limits::default()).unwrap();
        assert_eq!(r.m, 364);
        let zero = r.cells.iter().find(|c| c.residue == 0).unwrap();
        assert_eq!(zero.torsion, words(2, &["00000"]));
        assert!(r.nontrivial().is_empty());
    }

    #[test]
    fn self_campaigns() {
        let l = Limits::default();
        assert!(verify_helberg_self(5, 4, 2, &l).unwrap().passed());
        assert!(verify_binary_vt(8, &l).unwrap().passed());
    }
}
