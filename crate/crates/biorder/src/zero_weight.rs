//! Driving one generator's weight to zero by iterated substitutions.
//!
//! Given a relator with weights `(w_a, w_b)`, each round first flips signs
//! so both weights are nonnegative, swaps the generators if `w_a > w_b`
//! (strictly — on a tie no swap happens), and then applies the substitution
//! `a -> a b^k`, `b -> b` with `k = -floor(w_b / w_a)`. The new weights are
//! `(w_a, w_b + k·w_a)`, so `|w_a| + |w_b|` strictly drops on every
//! substitution round and the loop is a Euclidean descent: it terminates
//! with the `a`-weight at zero and, for coprime starting weights, the
//! `b`-weight at ±1.
//!
//! A second variant keeps the same `a`-image but sends `b -> a b a^{-1}`;
//! its weight bookkeeping is identical. The rare relator that stays untidy
//! under the first variant can become tidy under the second, so both are
//! kept available.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Gen, Substitution, Word};

/// Which substitution family the descent uses for its rewriting rounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `a -> a b^k`, `b -> b`.
    Standard,
    /// `a -> a b^k`, `b -> a b a^{-1}`.
    Conjugating,
}

/// One round of the descent loop: the bookkeeping moves (flips/swap), the
/// substitution exponent if one was applied, and the weights on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub weights_before: (i64, i64),
    pub flipped_a: bool,
    pub flipped_b: bool,
    pub swapped: bool,
    /// Exponent `k` of the substitution `a -> a b^k`; `None` when the round
    /// only performed flips/swap (which can happen only as the final round).
    pub k: Option<i64>,
    pub weights_after: (i64, i64),
}

impl StepRecord {
    pub fn weight_sum_before(&self) -> i64 {
        self.weights_before.0.abs() + self.weights_before.1.abs()
    }

    pub fn weight_sum_after(&self) -> i64 {
        self.weights_after.0.abs() + self.weights_after.1.abs()
    }
}

/// Outcome of the descent: the rewritten relator (with `a`-weight zero), the
/// composed change of generators mapping the original presentation onto the
/// final one, its inverse, and the full per-round trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroWeightResult {
    pub final_word: Word,
    pub composed_substitution: Substitution,
    pub inverse_substitution: Substitution,
    pub trace: Vec<StepRecord>,
    pub variant: Variant,
}

/// The substitution `a -> a b^k`, `b -> b` (or the conjugating variant) and
/// its recorded inverse.
pub fn ls77_substitution(k: i64, variant: Variant) -> (Substitution, Substitution) {
    match variant {
        Variant::Standard => (
            Substitution::new(
                Word::from_runs([(Gen::A, 1), (Gen::B, k)]),
                Word::generator(Gen::B),
            ),
            // inverse: x -> a b^{-k}, y -> b
            Substitution::new(
                Word::from_runs([(Gen::A, 1), (Gen::B, -k)]),
                Word::generator(Gen::B),
            ),
        ),
        Variant::Conjugating => (
            Substitution::new(
                Word::from_runs([(Gen::A, 1), (Gen::B, k)]),
                Word::from_runs([(Gen::A, 1), (Gen::B, 1), (Gen::A, -1)]),
            ),
            // inverse: x -> b^{-k} a, y -> a^{-1} b a
            Substitution::new(
                Word::from_runs([(Gen::B, -k), (Gen::A, 1)]),
                Word::from_runs([(Gen::A, -1), (Gen::B, 1), (Gen::A, 1)]),
            ),
        ),
    }
}

/// A single substitution round on a word whose weights already satisfy
/// `0 < w_a <= w_b`. Returns the substitution and the rewritten word; the
/// new weights are `(w_a, w_b mod w_a)` so the weight sum strictly drops.
pub fn ls77_step(w: &Word) -> Result<(Substitution, Word)> {
    let wa = w.weight(Gen::A);
    let wb = w.weight(Gen::B);
    if !(0 < wa && wa <= wb) {
        return Err(Error::Precondition(format!(
            "ls77 step requires 0 < w_a <= w_b, got ({wa}, {wb})"
        )));
    }
    let k = -(wb / wa);
    let (phi, _) = ls77_substitution(k, Variant::Standard);
    let image = phi.apply(w);
    Ok((phi, image))
}

/// Runs the descent loop until the `a`-weight of the word is zero.
///
/// Rejects empty words, words with both weights zero, and weight pairs with
/// gcd other than 1 (the descent would stall at the gcd, and such a relator
/// cannot present a knot group: its abelianization is not infinite cyclic).
pub fn zero_weight_normalize(w: &Word, variant: Variant) -> Result<ZeroWeightResult> {
    if w.is_identity() {
        return Err(Error::DegenerateRelator("empty relator".into()));
    }
    let wa0 = w.weight(Gen::A);
    let wb0 = w.weight(Gen::B);
    if wa0 == 0 && wb0 == 0 {
        return Err(Error::DegenerateRelator(
            "both generator weights are zero".into(),
        ));
    }
    let g = wa0.abs().gcd(&wb0.abs());
    if g != 1 {
        return Err(Error::NotKnotLike {
            weights: (wa0, wb0),
            gcd: g,
        });
    }

    let cap = wa0.abs() + wb0.abs() + 2;
    let mut current = w.clone();
    let mut composed = Substitution::identity();
    let mut inverse = Substitution::identity();
    let mut trace: Vec<StepRecord> = Vec::new();

    while current.weight(Gen::A) != 0 {
        if trace.len() as i64 >= cap {
            // the Euclidean decrease makes this unreachable for valid input
            return Err(Error::Internal(format!(
                "zero-weight descent exceeded its {cap}-step cap"
            )));
        }
        let mut wa = current.weight(Gen::A);
        let mut wb = current.weight(Gen::B);
        let before = (wa, wb);
        let mut record = StepRecord {
            weights_before: before,
            flipped_a: false,
            flipped_b: false,
            swapped: false,
            k: None,
            weights_after: before,
        };

        let mut apply_move = |step: &Substitution, step_inv: &Substitution, word: &mut Word| {
            *word = step.apply(word);
            composed = composed.then(step);
            inverse = step_inv.then(&inverse);
        };

        if wa < 0 {
            let flip = Substitution::flip(Gen::A);
            apply_move(&flip, &flip, &mut current);
            record.flipped_a = true;
            wa = -wa;
        }
        if wb < 0 {
            let flip = Substitution::flip(Gen::B);
            apply_move(&flip, &flip, &mut current);
            record.flipped_b = true;
            wb = -wb;
        }
        if wa > wb {
            let swap = Substitution::swap();
            apply_move(&swap, &swap, &mut current);
            record.swapped = true;
            std::mem::swap(&mut wa, &mut wb);
        }
        if current.weight(Gen::A) != 0 {
            // here 0 < wa <= wb, so the division is a plain floor
            let k = -(wb / wa);
            let (phi, phi_inv) = ls77_substitution(k, variant);
            apply_move(&phi, &phi_inv, &mut current);
            record.k = Some(k);
        }
        record.weights_after = (current.weight(Gen::A), current.weight(Gen::B));
        trace.push(record);
    }

    debug_assert_eq!(current.weight(Gen::A), 0);
    debug_assert_eq!(current.weight(Gen::B).abs(), 1);
    Ok(ZeroWeightResult {
        final_word: current,
        composed_substitution: composed,
        inverse_substitution: inverse,
        trace,
        variant,
    })
}
