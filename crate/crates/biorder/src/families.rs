//! Two-bridge and twist-knot presentations and their closed-form
//! invariants.
//!
//! Two-bridge knots are classified by coprime pairs of odd integers
//! `0 < p < q`. The group of `K_{p/q}` is `< a, b | a w = w b >` with
//! `w = b^{e_1} a^{e_2} ... b^{e_{q-2}} a^{e_{q-1}}` and
//! `e_i = (-1)^{floor(ip/q)}`. Twist knots are the subfamily `p = q - 2`.

use crate::alexander::{check_two_bridge_fraction, AlexanderPoly};
use crate::error::Result;
use crate::grammar::{render_word, Presentation};
use crate::poly::IntPoly;
use crate::word::{Gen, Substitution, Word};

/// A validated two-bridge fraction: coprime odd `0 < p < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoBridgeParams {
    p: i64,
    q: i64,
}

impl TwoBridgeParams {
    pub fn new(p: i64, q: i64) -> Result<TwoBridgeParams> {
        check_two_bridge_fraction(p, q)?;
        Ok(TwoBridgeParams { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// All valid parameter pairs with `q <= max_q`, in (q, p) order.
    pub fn enumerate(max_q: i64) -> Vec<TwoBridgeParams> {
        let mut out = Vec::new();
        let mut q = 3;
        while q <= max_q {
            for p in (1..q).step_by(2) {
                if num_integer::gcd(p, q) == 1 {
                    out.push(TwoBridgeParams { p, q });
                }
            }
            q += 2;
        }
        out
    }
}

/// The sign sequence `e_i = (-1)^{floor(ip/q)}` for `i = 1..q-1`.
pub fn epsilon_sequence(params: &TwoBridgeParams) -> Vec<i64> {
    (1..params.q)
        .map(|i| if (i * params.p / params.q) % 2 == 0 { 1 } else { -1 })
        .collect()
}

/// The word `w = b^{e_1} a^{e_2} ... a^{e_{q-1}}` (letters alternate,
/// starting with `b`; no cancellation is possible).
pub fn two_bridge_word(params: &TwoBridgeParams) -> Word {
    let eps = epsilon_sequence(params);
    Word::from_runs(eps.iter().enumerate().map(|(idx, &e)| {
        let gen = if idx % 2 == 0 { Gen::B } else { Gen::A };
        (gen, e)
    }))
}

/// The presentation `< a, b | a w = w b >`, stored as the freely reduced
/// relator `a w b^{-1} w^{-1}`.
pub fn two_bridge_presentation(params: &TwoBridgeParams) -> Presentation {
    let w = two_bridge_word(params);
    let relator = Word::generator(Gen::A)
        .concat(&w)
        .concat(&Word::power(Gen::B, -1))
        .concat(&w.inverse());
    let rendered = render_word(&w);
    let source = format!("a{rendered}={rendered}b");
    Presentation::new(relator, source, None)
        .expect("two-bridge relator is nonempty")
        .with_label(format!("K_{{{}/{}}}", params.p, params.q))
}

/// The tidy relator `R = xy · φ(w) · y^{-1} · φ(w)^{-1}` obtained from the
/// substitution `φ(a) = xy`, `φ(b) = y` applied to the relator; `y` has
/// weight zero in `R`, and `R` is always at least tidy.
pub fn two_bridge_tidy_relator(params: &TwoBridgeParams) -> Word {
    let phi = Substitution::new(
        Word::from_runs([(Gen::A, 1), (Gen::B, 1)]),
        Word::generator(Gen::B),
    );
    phi.apply(two_bridge_presentation(params).relator())
}

fn twist_params(q: i64) -> Result<TwoBridgeParams> {
    TwoBridgeParams::new(q - 2, q)
}

/// The twist knot `K_q` (with `(q-1)/2` twists) as the two-bridge knot
/// `K_{(q-2)/q}`.
pub fn twist_presentation(q: i64) -> Result<Presentation> {
    let params = twist_params(q)?;
    let twists = (q - 1) / 2;
    Ok(two_bridge_presentation(&params)
        .with_label(format!("K_{q}, twist knot with {twists} twists")))
}

/// Closed-form Alexander polynomial of the twist knot `K_q`:
/// quadratic with coefficients determined by `q mod 4`.
pub fn twist_alexander(q: i64) -> Result<AlexanderPoly> {
    twist_params(q)?;
    let raw = if q % 4 == 1 {
        IntPoly::from_i64(&[(1 - q) / 4, (q + 1) / 2, (1 - q) / 4])
    } else {
        IntPoly::from_i64(&[(1 + q) / 4, (1 - q) / 2, (1 + q) / 4])
    };
    Ok(AlexanderPoly {
        poly: raw.clone(),
        raw,
        unit_shift: 0,
        negated: false,
    })
}
