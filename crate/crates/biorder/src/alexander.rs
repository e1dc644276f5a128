//! Alexander polynomials from syllable column sums and from the two-bridge
//! Fox-calculus alternating sum, with unit normalization.
//!
//! The polynomial is only defined up to multiplication by `±t^k`. The
//! canonical representative here has nonzero constant term and sign chosen
//! so that `Δ(1) = +1` whenever `|Δ(1)| = 1` (always the case for words
//! presenting knot groups), otherwise a positive leading coefficient.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::syllables::TauStructure;

/// A unit-normalized Alexander polynomial together with the raw form it was
/// computed from and the unit that was divided out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPoly {
    /// Canonical representative.
    pub poly: IntPoly,
    /// The polynomial as first computed, before sign normalization.
    pub raw: IntPoly,
    /// Power of `t` divided out to bring the lowest exponent to zero.
    pub unit_shift: i64,
    /// Whether the canonical form is the negation of `raw`.
    pub negated: bool,
}

impl AlexanderPoly {
    fn from_raw(raw: IntPoly, unit_shift: i64) -> AlexanderPoly {
        let at_one = raw.eval_i64(1);
        let negate = if at_one.abs().is_one() {
            at_one.is_negative()
        } else {
            raw.leading().is_some_and(|c| c.is_negative())
        };
        let poly = if negate { -&raw } else { raw.clone() };
        AlexanderPoly {
            poly,
            raw,
            unit_shift,
            negated: negate,
        }
    }

    /// Coefficients of the canonical form, constant term first.
    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }
}

/// Reads the polynomial off the column sums: the coefficient of `t^{j-s}`
/// is the weight of column `j`, where `s = min S`.
pub fn alexander_from_syllables(tau: &TauStructure) -> AlexanderPoly {
    let s = tau.min_support;
    let len = (tau.max_support - s + 1) as usize;
    let mut coeffs = vec![BigInt::zero(); len];
    for (&j, &sum) in &tau.column_sums {
        if j < s || j > tau.max_support {
            // columns outside the support window sum to zero by definition
            continue;
        }
        coeffs[(j - s) as usize] = BigInt::from(sum);
    }
    AlexanderPoly::from_raw(IntPoly::from_coeffs(coeffs), s)
}

pub(crate) fn check_two_bridge_fraction(p: i64, q: i64) -> Result<()> {
    let reason = if !(0 < p && p < q) {
        Some("requires 0 < p < q")
    } else if p % 2 == 0 || q % 2 == 0 {
        Some("both parameters must be odd")
    } else if num_integer::gcd(p, q) != 1 {
        Some("parameters must be coprime")
    } else {
        None
    };
    match reason {
        Some(reason) => Err(Error::InvalidFraction {
            p,
            q,
            reason: reason.into(),
        }),
        None => Ok(()),
    }
}

/// Fox-calculus form for the two-bridge knot `K_{p/q}`:
/// `1 - t^{e_1} + t^{e_1+e_2} - ... + t^{e_1+...+e_{q-1}}` with
/// `e_i = (-1)^{floor(ip/q)}`, exponents shifted so the lowest is zero.
pub fn fox_two_bridge(p: i64, q: i64) -> Result<AlexanderPoly> {
    check_two_bridge_fraction(p, q)?;
    let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut cumulative = 0i64;
    let mut sign = BigInt::one();
    terms.insert(0, BigInt::one());
    for i in 1..q {
        let eps = if (i * p / q) % 2 == 0 { 1 } else { -1 };
        cumulative += eps;
        sign = -sign;
        *terms.entry(cumulative).or_insert_with(BigInt::zero) += &sign;
    }
    let &min_exp = terms.keys().next().expect("at least the t^0 term");
    let &max_exp = terms.keys().next_back().unwrap();
    let mut coeffs = vec![BigInt::zero(); (max_exp - min_exp + 1) as usize];
    for (e, c) in terms {
        coeffs[(e - min_exp) as usize] = c;
    }
    Ok(AlexanderPoly::from_raw(
        IntPoly::from_coeffs(coeffs),
        min_exp,
    ))
}

/// Sanity checks on a computed polynomial; returns human-readable warnings
/// and never fails. With a two-bridge `q` supplied it also checks
/// `Δ(-1) = q`, `Σ|a_i| = q` and the strict sign alternation of the
/// coefficients (after normalizing the constant term positive).
pub fn validate_alexander(a: &AlexanderPoly, two_bridge_q: Option<i64>) -> Vec<String> {
    let mut warnings = Vec::new();
    let at_one = a.poly.eval_i64(1);
    if !at_one.abs().is_one() {
        warnings.push(format!("|Δ(1)| = {} but knot polynomials have |Δ(1)| = 1", at_one.abs()));
    }
    let coeffs = a.poly.coeffs();
    if !coeffs.is_empty() {
        let reversed: Vec<BigInt> = coeffs.iter().rev().cloned().collect();
        let negated: Vec<BigInt> = reversed.iter().map(|c| -c).collect();
        if coeffs != reversed.as_slice() && coeffs != negated.as_slice() {
            warnings.push("coefficients are not reciprocal (a_i = ±a_{d-i})".to_string());
        }
    }
    if let Some(q) = two_bridge_q {
        let aligned = if a.poly.constant_term().is_negative() {
            -&a.poly
        } else {
            a.poly.clone()
        };
        let at_minus_one = aligned.eval_i64(-1);
        if at_minus_one != BigInt::from(q) {
            warnings.push(format!("Δ(-1) = {at_minus_one}, expected q = {q}"));
        }
        let abs_sum: BigInt = aligned.coeffs().iter().map(|c| c.abs()).sum();
        if abs_sum != BigInt::from(q) {
            warnings.push(format!("Σ|a_i| = {abs_sum}, expected q = {q}"));
        }
        for (i, c) in aligned.coeffs().iter().enumerate() {
            let ok = if i % 2 == 0 {
                c.is_positive()
            } else {
                c.is_negative()
            };
            if !ok {
                warnings.push(format!(
                    "coefficient a_{i} = {c} breaks the two-bridge sign alternation"
                ));
                break;
            }
        }
    }
    warnings
}
