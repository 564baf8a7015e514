//! Deletion spheres and the pairwise-disjointness test for codebooks.
//!
//! `D_s(x)` is the set of distinct length `|x| - s` subsequences of `x`. It is
//! built by `s` rounds of single deletions with deduplication; deleting any
//! symbol inside a run gives the same word, so each round only deletes at run
//! starts.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::alphabet::Word;
use crate::error::{domain, Error, Result};
use crate::space::{Codebook, Limits};

/// `C(n, k)` in exact arithmetic, `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

fn push_single_deletions(x: &Word, out: &mut HashSet<Word>) {
    let symbols = x.symbols();
    for i in 0..symbols.len() {
        if i == 0 || symbols[i] != symbols[i - 1] {
            out.insert(x.without(i));
        }
    }
}

/// All distinct words obtained by deleting one position of `x`.
pub fn single_deletions(x: &Word) -> Result<HashSet<Word>> {
    if x.is_empty() {
        return Err(domain("cannot delete a symbol from the empty word"));
    }
    let mut out = HashSet::with_capacity(x.len());
    push_single_deletions(x, &mut out);
    Ok(out)
}

/// The s-deletion sphere `D_s(x)` of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sphere {
    center: Word,
    deletions: usize,
    members: HashSet<Word>,
}

impl Sphere {
    pub fn center(&self) -> &Word {
        &self.center
    }

    pub fn deletions(&self) -> usize {
        self.deletions
    }

    pub fn members(&self) -> &HashSet<Word> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }

    /// Members in lexicographic order.
    pub fn sorted_members(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.members.iter().cloned().collect();
        v.sort_unstable();
        v
    }

    pub fn into_members(self) -> HashSet<Word> {
        self.members
    }
}

/// Computes `D_s(x)`, refusing when `C(|x|, s)` exceeds `limits.sphere_cap`.
pub fn deletion_sphere(x: &Word, s: usize, limits: &Limits) -> Result<Sphere> {
    if s > x.len() {
        return Err(domain(format!(
            "cannot delete {s} symbols from a word of length {}",
            x.len()
        )));
    }
    let needed = binomial(x.len(), s);
    if needed.is_none_or(|c| c > limits.sphere_cap) {
        return Err(Error::Resource {
            what: "deletion sphere",
            needed: needed.map_or_else(|| format!("C({}, {s})", x.len()), |c| c.to_string()),
            cap: limits.sphere_cap,
        });
    }
    let mut level = HashSet::from([x.clone()]);
    for _ in 0..s {
        let mut next = HashSet::with_capacity(level.len() * x.len());
        for w in &level {
            push_single_deletions(w, &mut next);
        }
        level = next;
    }
    Ok(Sphere {
        center: x.clone(),
        deletions: s,
        members: level,
    })
}

/// Sorted shared members of `D_s(x)` and `D_s(y)`; nonempty iff they intersect.
pub fn spheres_intersect(x: &Word, y: &Word, s: usize, limits: &Limits) -> Result<Vec<Word>> {
    if x.len() != y.len() {
        return Err(domain(format!(
            "sphere intersection needs equal lengths, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    let dx = deletion_sphere(x, s, limits)?;
    let dy = deletion_sphere(y, s, limits)?;
    let mut shared: Vec<Word> = dx.members.intersection(&dy.members).cloned().collect();
    shared.sort_unstable();
    Ok(shared)
}

/// Two distinct codewords whose deletion spheres meet, and one shared word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub first: Word,
    pub second: Word,
    pub shared: Word,
}

/// Outcome of an s-deletion-correction check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrectionReport {
    deletions: usize,
    verdict: bool,
    witness: Option<Witness>,
}

impl CorrectionReport {
    pub fn pass(deletions: usize) -> Self {
        Self {
            deletions,
            verdict: true,
            witness: None,
        }
    }

    pub fn fail(deletions: usize, witness: Witness) -> Self {
        Self {
            deletions,
            verdict: false,
            witness: Some(witness),
        }
    }

    pub fn deletions(&self) -> usize {
        self.deletions
    }

    pub fn passed(&self) -> bool {
        self.verdict
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

/// Decides whether all distinct codewords have pairwise disjoint s-deletion
/// spheres. On failure the witness is the lexicographically first violating
/// pair (codewords taken in sorted order) with its smallest shared word.
pub fn code_is_s_correcting<'a, I>(codewords: I, s: usize, limits: &Limits) -> Result<CorrectionReport>
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut words: Vec<&Word> = codewords.into_iter().collect();
    words.sort_unstable();
    words.dedup();
    if let Some(first) = words.first() {
        let n = first.len();
        if let Some(bad) = words.iter().find(|w| w.len() != n) {
            return Err(domain(format!("codewords have mixed lengths {n} and {}", bad.len())));
        }
    }
    if words.len() < 2 {
        return Ok(CorrectionReport::pass(s));
    }

    // member -> (smallest, second smallest) codeword index containing it
    let mut owners: HashMap<Word, (u32, Option<u32>)> = HashMap::new();
    let mut best: Option<(u32, u32)> = None;
    for (i, w) in words.iter().enumerate() {
        let i = i as u32;
        for member in deletion_sphere(w, s, limits)?.into_members() {
            match owners.entry(member) {
                Entry::Vacant(e) => {
                    e.insert((i, None));
                }
                Entry::Occupied(mut e) => {
                    let slot = e.get_mut();
                    if slot.1.is_none() {
                        slot.1 = Some(i);
                        let pair = (slot.0, i);
                        if best.is_none_or(|b| pair < b) {
                            best = Some(pair);
                        }
                    }
                }
            }
        }
    }
    match best {
        None => Ok(CorrectionReport::pass(s)),
        Some((a, b)) => {
            let (first, second) = (words[a as usize], words[b as usize]);
            let shared = spheres_intersect(first, second, s, limits)?
                .into_iter()
                .next()
                .expect("violating pair shares a member");
            Ok(CorrectionReport::fail(
                s,
                Witness {
                    first: first.clone(),
                    second: second.clone(),
                    shared,
                },
            ))
        }
    }
}

/// Every pair `(i, j)`, `i < j`, of distinct codewords (indices into the
/// sorted codebook) whose s-deletion spheres intersect.
pub fn intersecting_pairs(code: &Codebook, s: usize, limits: &Limits) -> Result<BTreeSet<(usize, usize)>> {
    let mut owners: HashMap<Word, Vec<usize>> = HashMap::new();
    for (i, w) in code.iter().enumerate() {
        for member in deletion_sphere(w, s, limits)?.into_members() {
            owners.entry(member).or_default().push(i);
        }
    }
    let mut pairs = BTreeSet::new();
    for idx in owners.values().filter(|v| v.len() > 1) {
        for (k, &a) in idx.iter().enumerate() {
            for &b in &idx[k + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    Ok(pairs)
}

/// Convenience wrapper over [`code_is_s_correcting`] for a codebook.
pub fn codebook_is_s_correcting(code: &Codebook, s: usize, limits: &Limits) -> Result<CorrectionReport> {
    code_is_s_correcting(code.words(), s, limits)
}
