//! Syllable form of a zero-weight relator and its tidy/principal/monic
//! classification.
//!
//! A word whose conjugating generator `a` has weight zero can be written
//! `b^{m_1 a^{d_1}} ... b^{m_r a^{d_r}}`, where `b^{a^d}` stands for
//! `a^{-d} b a^{d}`. For each integer `j`, `tau_j` collects the syllable
//! indices `i` with `d_i = j`; a column's weight is the sum of its `m_i`,
//! and the support `S` is the set of columns with nonzero weight. The word
//! is *tidy* when no nonempty column lies outside `[min S, max S]`,
//! *principal* when additionally the top column is a single syllable, and
//! *monic* when that syllable's weight is exactly +1.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Gen, Substitution, Word};

/// A normalized syllable decomposition: `min d_i = 0`, adjacent pairs with
/// equal `d` merged, zero-weight pairs dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllableForm {
    pairs: Vec<(i64, i64)>,
    base: Gen,
    conjugator: Gen,
    shift: i64,
}

impl SyllableForm {
    /// `(m_i, d_i)` pairs in order; index `i` is 1-based in the reported
    /// tau sets.
    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn base(&self) -> Gen {
        self.base
    }

    pub fn conjugator(&self) -> Gen {
        self.conjugator
    }

    /// The conjugation normalization that was applied: all `d_i` were
    /// shifted by `-shift` so their minimum is zero.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn syllable_count(&self) -> usize {
        self.pairs.len()
    }

    /// Sum of |m_i| — for two-bridge tidy relators this equals `q`.
    pub fn abs_weight_sum(&self) -> i64 {
        self.pairs.iter().map(|&(m, _)| m.abs()).sum()
    }

    pub fn weight_sum(&self) -> i64 {
        self.pairs.iter().map(|&(m, _)| m).sum()
    }
}

/// The column structure of a syllable form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauStructure {
    /// `j -> tau_j`, listing 1-based syllable indices; only nonempty sets.
    pub tau: BTreeMap<i64, Vec<usize>>,
    /// `j -> sum of m_i over tau_j`, for every nonempty column.
    pub column_sums: BTreeMap<i64, i64>,
    /// Columns with nonzero sum.
    pub support: BTreeSet<i64>,
    /// `min S`; zero after normalization.
    pub min_support: i64,
    /// `max S`.
    pub max_support: i64,
}

/// Classification levels, ordered from worst to best.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    NotZeroWeight,
    Untidy,
    Tidy,
    Principal,
    Monic,
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::NotZeroWeight => "not_zero_weight",
            Level::Untidy => "untidy",
            Level::Tidy => "tidy",
            Level::Principal => "principal",
            Level::Monic => "monic",
        }
    }
}

impl std::fmt::Display for Level {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Witness for a principal word: the unique top-column syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalWitness {
    /// 1-based syllable index `k` with `tau_max = {k}`.
    pub index: usize,
    /// Its weight `m_k`; monic means exactly +1.
    pub weight: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordClass {
    pub level: Level,
    pub witness: Option<PrincipalWitness>,
}

/// The symmetry applied before classification: words and presentations are
/// only defined up to inversion and relabeling, and the monic condition is
/// orientation-sensitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Transform {
    pub inverted: bool,
    pub conjugator_flipped: bool,
    pub base_flipped: bool,
}

impl Transform {
    pub fn is_identity(&self) -> bool {
        !(self.inverted || self.conjugator_flipped || self.base_flipped)
    }

    pub fn describe(&self) -> String {
        if self.is_identity() {
            return "identity".to_string();
        }
        let mut parts = Vec::new();
        if self.inverted {
            parts.push("word inverted");
        }
        if self.conjugator_flipped {
            parts.push("conjugator inverted");
        }
        if self.base_flipped {
            parts.push("base inverted");
        }
        parts.join(", ")
    }
}

/// Scans a zero-weight word into its syllable form.
///
/// Walking left to right and tracking the running conjugator exponent `c`,
/// each base-generator run `b^m` encountered at exponent `c` contributes the
/// pair `(m, -c)`; afterwards the `d` values are shifted so their minimum is
/// zero (conjugation by the recorded power of the conjugator).
pub fn decompose(w: &Word, conjugator: Gen) -> Result<SyllableForm> {
    let weight = w.weight(conjugator);
    if weight != 0 {
        return Err(Error::NotZeroWeight { weight });
    }
    let base = conjugator.other();
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    let mut c: i64 = 0;
    for &(g, e) in w.runs() {
        if g == conjugator {
            c += e;
        } else {
            let d = -c;
            match pairs.last_mut() {
                Some((m, d0)) if *d0 == d => {
                    *m += e;
                    if *m == 0 {
                        pairs.pop();
                    }
                }
                _ => pairs.push((e, d)),
            }
        }
    }
    let shift = pairs.iter().map(|&(_, d)| d).min().unwrap_or(0);
    for (_, d) in pairs.iter_mut() {
        *d -= shift;
    }
    Ok(SyllableForm {
        pairs,
        base,
        conjugator,
        shift,
    })
}

/// Rebuilds the word `a^{-d_1} b^{m_1} a^{d_1 - d_2} b^{m_2} ...`; equal to
/// the input of `decompose` conjugated by the recorded normalization.
pub fn reconstruct(f: &SyllableForm) -> Word {
    let mut runs: Vec<(Gen, i64)> = Vec::new();
    let mut prev_d = 0;
    for &(m, d) in &f.pairs {
        runs.push((f.conjugator, prev_d - d));
        runs.push((f.base, m));
        prev_d = d;
    }
    runs.push((f.conjugator, prev_d));
    Word::from_runs(runs)
}

/// Computes the tau map, column sums and support of a syllable form.
pub fn tau_structure(f: &SyllableForm) -> Result<TauStructure> {
    let mut tau: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    let mut column_sums: BTreeMap<i64, i64> = BTreeMap::new();
    for (i, &(m, d)) in f.pairs.iter().enumerate() {
        tau.entry(d).or_default().push(i + 1);
        *column_sums.entry(d).or_insert(0) += m;
    }
    let support: BTreeSet<i64> = column_sums
        .iter()
        .filter(|&(_, &s)| s != 0)
        .map(|(&j, _)| j)
        .collect();
    let (&min_support, &max_support) = match (support.first(), support.last()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::EmptySupport),
    };
    Ok(TauStructure {
        tau,
        column_sums,
        support,
        min_support,
        max_support,
    })
}

/// Applies the definitions directly: untidy iff some nonempty column lies
/// outside `[min S, max S]`; principal iff tidy with `|tau_max| = 1`; monic
/// iff principal with `m_k = 1` (exactly +1 — the -1 case is recovered by
/// the orbit search in `symmetry_classify`).
pub fn classify_word(f: &SyllableForm) -> Result<WordClass> {
    let tau = tau_structure(f)?;
    let untidy = tau
        .tau
        .keys()
        .any(|&j| j < tau.min_support || j > tau.max_support);
    if untidy {
        return Ok(WordClass {
            level: Level::Untidy,
            witness: None,
        });
    }
    let top = &tau.tau[&tau.max_support];
    if top.len() != 1 {
        return Ok(WordClass {
            level: Level::Tidy,
            witness: None,
        });
    }
    let index = top[0];
    let weight = f.pairs[index - 1].0;
    let level = if weight == 1 {
        Level::Monic
    } else {
        Level::Principal
    };
    Ok(WordClass {
        level,
        witness: Some(PrincipalWitness { index, weight }),
    })
}

/// Classifies over the orbit of the word under inversion and the two
/// generator flips, returning the best class attained and the transform
/// that attained it (identity preferred on ties).
pub fn symmetry_classify(w: &Word, conjugator: Gen) -> Result<(WordClass, Transform)> {
    let base = conjugator.other();
    let mut best: Option<(WordClass, Transform)> = None;
    for inverted in [false, true] {
        for conjugator_flipped in [false, true] {
            for base_flipped in [false, true] {
                let mut v = if inverted { w.inverse() } else { w.clone() };
                if conjugator_flipped {
                    v = Substitution::flip(conjugator).apply(&v);
                }
                if base_flipped {
                    v = Substitution::flip(base).apply(&v);
                }
                let class = classify_word(&decompose(&v, conjugator)?)?;
                let transform = Transform {
                    inverted,
                    conjugator_flipped,
                    base_flipped,
                };
                match &best {
                    Some((c, _)) if c.level >= class.level => {}
                    _ => best = Some((class, transform)),
                }
            }
        }
    }
    Ok(best.expect("orbit is nonempty"))
}
