//! Exact real-root counting on the open half-lines via Sturm sequences.
//!
//! The chain is computed fraction-free: each pseudo-remainder is scaled by a
//! positive constant only, so sign variations match the classical rational
//! chain exactly. All predicates are evaluated on the squarefree part; the
//! root-set statements downstream do not care about multiplicity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, squarefree_part, IntPoly};
use num_traits::{Signed, Zero};

/// One of the two open half-lines the decision criteria care about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    /// (0, +oo)
    PositiveReals,
    /// (-oo, 0)
    NegativeReals,
}

/// Exact summary of the real-root layout of an integer polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReport {
    pub degree: usize,
    pub squarefree_degree: usize,
    /// Distinct roots in (0, +oo).
    pub positive_real_count: usize,
    /// Distinct roots in (-oo, 0).
    pub negative_real_count: usize,
    pub has_positive_real_root: bool,
    /// True exactly when every root (over the complex numbers) is real and
    /// positive, i.e. the positive count reaches the squarefree degree.
    pub all_roots_real_and_positive: bool,
}

fn sign(x: &num_bigint::BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at_zero(p: &IntPoly) -> i8 {
    sign(&p.constant_term())
}

fn sign_at_pos_inf(p: &IntPoly) -> i8 {
    p.leading().map_or(0, |c| if c.is_positive() { 1 } else { -1 })
}

fn sign_at_neg_inf(p: &IntPoly) -> i8 {
    let s = sign_at_pos_inf(p);
    match p.degree() {
        Some(d) if d % 2 == 1 => -s,
        _ => s,
    }
}

fn variations<I: IntoIterator<Item = i8>>(signs: I) -> usize {
    let mut count = 0;
    let mut last: Option<i8> = None;
    for s in signs {
        if s == 0 {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Canonical Sturm sequence `p, p', -rem(...), ...` of a squarefree
/// polynomial, ending in a nonzero constant.
pub fn sturm_chain(p: &IntPoly) -> Result<Vec<IntPoly>> {
    if p.is_zero() {
        return Err(Error::Precondition(
            "sturm chain of the zero polynomial".into(),
        ));
    }
    if poly_gcd(p, &p.derivative()).degree() != Some(0) {
        return Err(Error::NotSquarefree);
    }
    let mut chain = vec![p.clone()];
    if p.degree() == Some(0) {
        return Ok(chain);
    }
    chain.push(p.derivative());
    while chain.last().unwrap().degree().unwrap_or(0) > 0 {
        let prev = &chain[chain.len() - 2];
        let last = &chain[chain.len() - 1];
        // positive scaling only, then shed content to keep coefficients small
        let rem = -&prev.pseudo_rem_abs(last);
        if rem.is_zero() {
            return Err(Error::NotSquarefree);
        }
        chain.push(rem.reduced_by_content());
    }
    Ok(chain)
}

/// Number of distinct real roots of a squarefree `p` in the open interval,
/// by the sign-variation difference of the Sturm chain between endpoints.
/// Requires `p(0) != 0` so the shared endpoint is never a root.
pub fn count_roots_interval(p: &IntPoly, interval: Interval) -> Result<usize> {
    if p.constant_term().is_zero() {
        return Err(Error::ZeroAtEndpoint);
    }
    let chain = sturm_chain(p)?;
    let at_zero = variations(chain.iter().map(sign_at_zero));
    let count = match interval {
        Interval::PositiveReals => {
            let at_inf = variations(chain.iter().map(sign_at_pos_inf));
            at_zero.checked_sub(at_inf)
        }
        Interval::NegativeReals => {
            let at_neg_inf = variations(chain.iter().map(sign_at_neg_inf));
            at_neg_inf.checked_sub(at_zero)
        }
    };
    count.ok_or_else(|| Error::Internal("negative Sturm variation difference".into()))
}

/// Full root summary of a nonzero polynomial with nonzero constant term.
/// Counting happens on the squarefree part, so multiplicities are ignored.
pub fn root_report(p: &IntPoly) -> Result<RootReport> {
    if p.is_zero() {
        return Err(Error::Precondition(
            "root report of the zero polynomial".into(),
        ));
    }
    if p.constant_term().is_zero() {
        return Err(Error::ZeroAtEndpoint);
    }
    let sf = squarefree_part(p);
    let positive = count_roots_interval(&sf, Interval::PositiveReals)?;
    let negative = count_roots_interval(&sf, Interval::NegativeReals)?;
    let squarefree_degree = sf.degree().unwrap_or(0);
    Ok(RootReport {
        degree: p.degree().unwrap(),
        squarefree_degree,
        positive_real_count: positive,
        negative_real_count: negative,
        has_positive_real_root: positive >= 1,
        all_roots_real_and_positive: positive == squarefree_degree,
    })
}
