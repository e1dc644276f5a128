//! The decision engine: normalize, classify the relator, extract the
//! Alexander polynomial, analyze its real roots exactly, and apply the
//! Chiswell–Glass–Wilson criteria.
//!
//! For a knot group presented by a tidy relator:
//!
//! 1. bi-orderable implies the Alexander polynomial has a positive real
//!    root — so *no* positive real root proves non-bi-orderability;
//! 2. a monic relator whose polynomial has all roots real and positive
//!    proves bi-orderability;
//! 3. so does a principal relator with all roots real and positive when the
//!    polynomial reads `a_0 + ... + a_{d-1} t^{d-1} - m t^d` with
//!    `gcd(a_0, ..., a_{d-1}) = 1` and `m` not dividing `a_{d-1}`.
//!
//! Everything else is honestly inconclusive and says why.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::alexander::{alexander_from_syllables, AlexanderPoly};
use crate::error::Result;
use crate::grammar::Presentation;
use crate::roots::{root_report, RootReport};
use crate::syllables::{
    decompose, symmetry_classify, tau_structure, Level, SyllableForm, TauStructure, Transform,
    WordClass,
};
use crate::word::Gen;
use crate::zero_weight::{zero_weight_normalize, Variant, ZeroWeightResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    BiOrderable,
    NotBiOrderable,
    Inconclusive,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::BiOrderable => "biorderable",
            Outcome::NotBiOrderable => "not_biorderable",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

/// Which criterion produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremUsed {
    Cgw1,
    Cgw2,
    Cgw3,
    None,
}

impl TheoremUsed {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremUsed::Cgw1 => "CGW1",
            TheoremUsed::Cgw2 => "CGW2",
            TheoremUsed::Cgw3 => "CGW3",
            TheoremUsed::None => "none",
        }
    }
}

/// Machine-readable reason for an inconclusive verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InconclusiveReason {
    /// The relator stayed untidy under both descent variants.
    UntidyRelator,
    /// Positive real roots exist alongside non-real roots, so neither the
    /// negative criterion nor the positive ones can fire.
    MixedRoots,
    /// All roots are real and some are positive, but not all of them are.
    PositiveRootsButNotAllReal,
    /// All roots are real and positive but the relator/coefficient side
    /// conditions of the positive criteria fail.
    Theorem3ConditionsFail,
}

impl InconclusiveReason {
    pub fn as_str(self) -> &'static str {
        match self {
            InconclusiveReason::UntidyRelator => "untidy_relator",
            InconclusiveReason::MixedRoots => "mixed_roots",
            InconclusiveReason::PositiveRootsButNotAllReal => "positive_roots_but_not_all_real",
            InconclusiveReason::Theorem3ConditionsFail => "theorem3_conditions_fail",
        }
    }
}

/// The coefficient side conditions of the third criterion, after aligning
/// the sign so the polynomial reads `a_0 + ... + a_{d-1} t^{d-1} - m t^d`
/// with `m > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem3Conditions {
    pub m: BigInt,
    /// Whether the polynomial was globally negated to reach the shape.
    pub negated: bool,
    pub gcd_low_coeffs: BigInt,
    /// `m` does not divide `a_{d-1}`.
    pub divisibility_ok: bool,
}

impl Theorem3Conditions {
    pub fn hold(&self) -> bool {
        self.m.is_positive() && self.gcd_low_coeffs.is_one() && self.divisibility_ok
    }
}

/// Evaluates the coefficient conditions; the polynomial must have degree at
/// least 1. The sign alignment is legitimate because the polynomial is only
/// defined up to units.
pub fn theorem3_conditions(delta: &AlexanderPoly) -> Theorem3Conditions {
    let d = delta
        .poly
        .degree()
        .expect("theorem 3 conditions need a nonzero polynomial");
    assert!(d >= 1, "theorem 3 conditions need degree >= 1");
    let negated = delta.poly.leading().unwrap().is_positive();
    let aligned = if negated {
        -&delta.poly
    } else {
        delta.poly.clone()
    };
    let m = -aligned.leading().unwrap().clone();
    let low = &aligned.coeffs()[..d];
    let gcd_low_coeffs = low
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let a_top = &low[d - 1];
    let divisibility_ok = !(a_top % &m).is_zero();
    Theorem3Conditions {
        m,
        negated,
        gcd_low_coeffs,
        divisibility_ok,
    }
}

/// The verdict and its audit trail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub theorem: TheoremUsed,
    pub word_class: WordClass,
    pub root_report: RootReport,
    pub symmetry_transform: Transform,
    pub reason: Option<InconclusiveReason>,
    pub notes: Vec<String>,
}

/// Full evidence chain for one presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub label: Option<String>,
    pub verdict: Verdict,
    pub zero_weight: ZeroWeightResult,
    pub syllables: SyllableForm,
    pub tau: TauStructure,
    pub alexander: AlexanderPoly,
    pub variant_used: Variant,
}

/// Which descent variants the pipeline may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantPolicy {
    Standard,
    Conjugating,
    /// Standard first; retry with the conjugating variant only when the
    /// relator classifies untidy.
    #[default]
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    pub variant: VariantPolicy,
}

struct PipelineRun {
    zero_weight: ZeroWeightResult,
    syllables: SyllableForm,
    class: WordClass,
    transform: Transform,
}

fn run_pipeline(presentation: &Presentation, variant: Variant) -> Result<PipelineRun> {
    let zero_weight = zero_weight_normalize(presentation.relator(), variant)?;
    // the descent drives the a-slot weight to zero
    let syllables = decompose(&zero_weight.final_word, Gen::A)?;
    let (class, transform) = symmetry_classify(&zero_weight.final_word, Gen::A)?;
    Ok(PipelineRun {
        zero_weight,
        syllables,
        class,
        transform,
    })
}

/// Runs the whole pipeline on a presentation and applies the criteria.
///
/// Structural failures (unparseable words, non-knot-like weights) are
/// reported as errors, never as inconclusive verdicts.
pub fn apply_cgw(presentation: &Presentation, options: &Options) -> Result<Classification> {
    let mut notes: Vec<String> = Vec::new();
    let (mut run, mut variant_used) = match options.variant {
        VariantPolicy::Standard => (run_pipeline(presentation, Variant::Standard)?, Variant::Standard),
        VariantPolicy::Conjugating => (
            run_pipeline(presentation, Variant::Conjugating)?,
            Variant::Conjugating,
        ),
        VariantPolicy::Both => (run_pipeline(presentation, Variant::Standard)?, Variant::Standard),
    };
    if options.variant == VariantPolicy::Both && run.class.level == Level::Untidy {
        let retry = run_pipeline(presentation, Variant::Conjugating)?;
        if retry.class.level > run.class.level {
            notes.push(
                "standard descent left an untidy relator; conjugating variant succeeded".into(),
            );
            run = retry;
            variant_used = Variant::Conjugating;
        } else {
            notes.push("relator stayed untidy under both descent variants".into());
        }
    }

    let tau = tau_structure(&run.syllables)?;
    let alexander = alexander_from_syllables(&tau);
    let report = root_report(&alexander.poly)?;

    if !run.transform.is_identity() {
        notes.push(format!(
            "word class attained via non-identity symmetry: {}",
            run.transform.describe()
        ));
    }

    let tidy = run.class.level >= Level::Tidy;
    let has_roots_to_speak_of = report.squarefree_degree >= 1;

    let (outcome, theorem, reason) = if tidy && has_roots_to_speak_of && !report.has_positive_real_root
    {
        (Outcome::NotBiOrderable, TheoremUsed::Cgw1, None)
    } else if run.class.level == Level::Monic && report.all_roots_real_and_positive {
        (Outcome::BiOrderable, TheoremUsed::Cgw2, None)
    } else if run.class.level >= Level::Principal
        && report.all_roots_real_and_positive
        && has_roots_to_speak_of
        && {
            let conditions = theorem3_conditions(&alexander);
            if conditions.negated {
                notes.push("polynomial negated to reach the -m t^d shape".into());
            }
            if let Some(witness) = run.class.witness {
                if BigInt::from(witness.weight) != conditions.m {
                    notes.push(format!(
                        "leading coefficient m = {} differs from the principal syllable weight m_k = {}",
                        conditions.m, witness.weight
                    ));
                }
            }
            let hold = conditions.hold();
            if !hold {
                notes.push(format!(
                    "coefficient conditions fail: gcd of lower coefficients = {}, m = {}, m divides a_(d-1): {}",
                    conditions.gcd_low_coeffs, conditions.m, !conditions.divisibility_ok
                ));
            }
            hold
        }
    {
        (Outcome::BiOrderable, TheoremUsed::Cgw3, None)
    } else {
        let reason = if !tidy {
            InconclusiveReason::UntidyRelator
        } else if report.has_positive_real_root && !report.all_roots_real_and_positive {
            if report.positive_real_count + report.negative_real_count < report.squarefree_degree {
                InconclusiveReason::MixedRoots
            } else {
                InconclusiveReason::PositiveRootsButNotAllReal
            }
        } else {
            InconclusiveReason::Theorem3ConditionsFail
        };
        match reason {
            InconclusiveReason::UntidyRelator => {
                notes.push("criteria require a tidy relator".into())
            }
            InconclusiveReason::MixedRoots => notes.push(format!(
                "roots are mixed: {} positive real, {} negative real, {} non-real",
                report.positive_real_count,
                report.negative_real_count,
                report.squarefree_degree - report.positive_real_count - report.negative_real_count
            )),
            InconclusiveReason::PositiveRootsButNotAllReal => notes.push(
                "all roots real but of mixed sign; positive criteria need them all positive"
                    .into(),
            ),
            InconclusiveReason::Theorem3ConditionsFail => {
                if !has_roots_to_speak_of {
                    notes.push("constant polynomial carries no root information".into());
                } else if run.class.level < Level::Principal {
                    notes.push("relator is tidy but not principal".into());
                }
            }
        }
        (Outcome::Inconclusive, TheoremUsed::None, Some(reason))
    };

    let verdict = Verdict {
        outcome,
        theorem,
        word_class: run.class,
        root_report: report,
        symmetry_transform: run.transform,
        reason,
        notes,
    };
    debug_assert!(verdict_invariants_hold(&verdict));
    Ok(Classification {
        label: presentation.label().map(str::to_owned),
        verdict,
        zero_weight: run.zero_weight,
        syllables: run.syllables,
        tau,
        alexander,
        variant_used,
    })
}

/// The soundness invariants every verdict must satisfy.
pub fn verdict_invariants_hold(v: &Verdict) -> bool {
    match v.outcome {
        Outcome::NotBiOrderable => {
            v.theorem == TheoremUsed::Cgw1
                && v.word_class.level >= Level::Tidy
                && !v.root_report.has_positive_real_root
        }
        Outcome::BiOrderable => {
            v.root_report.all_roots_real_and_positive
                && match v.theorem {
                    TheoremUsed::Cgw2 => v.word_class.level == Level::Monic,
                    TheoremUsed::Cgw3 => v.word_class.level >= Level::Principal,
                    _ => false,
                }
        }
        Outcome::Inconclusive => v.theorem == TheoremUsed::None && v.reason.is_some(),
    }
}
