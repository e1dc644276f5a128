//! Freely reduced words in the free group on two generators, plus the
//! substitution homomorphisms used to rewrite presentations.
//!
//! Words are stored run-length encoded as `(generator, exponent)` pairs.
//! Relators in this domain carry long power runs, and syllable extraction
//! needs the exponents anyway, so the encoding is both compact and direct.

use serde::{Deserialize, Serialize};

/// One of the two generator slots of a presentation.
///
/// The canonical names are `a` and `b`; after a change of generators the
/// same slots are conventionally displayed as `x` and `y`, but nothing in
/// the algebra distinguishes the alphabets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    A,
    B,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::A => Gen::B,
            Gen::B => Gen::A,
        }
    }
}

fn checked_add(x: i64, y: i64) -> i64 {
    // Exponents are machine integers; survey inputs large enough to wrap
    // indicate misuse and must fail loudly rather than silently.
    x.checked_add(y).expect("generator exponent overflow")
}

/// A freely reduced word over `Gen::A` and `Gen::B`.
///
/// Invariants: adjacent runs never share a generator and no run has a zero
/// exponent. The empty sequence is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    runs: Vec<(Gen, i64)>,
}

impl Word {
    pub fn identity() -> Word {
        Word { runs: Vec::new() }
    }

    pub fn generator(g: Gen) -> Word {
        Word { runs: vec![(g, 1)] }
    }

    /// `g^e`; the identity when `e == 0`.
    pub fn power(g: Gen, e: i64) -> Word {
        if e == 0 {
            Word::identity()
        } else {
            Word { runs: vec![(g, e)] }
        }
    }

    /// Builds a word from arbitrary `(generator, exponent)` pairs, freely
    /// reducing as it goes. Reduction is confluent, so the result is the
    /// unique normal form no matter how the input was grouped.
    pub fn from_runs<I: IntoIterator<Item = (Gen, i64)>>(runs: I) -> Word {
        let mut out: Vec<(Gen, i64)> = Vec::new();
        for (g, e) in runs {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((top, exp)) if *top == g => {
                    *exp = checked_add(*exp, e);
                    if *exp == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word { runs: out }
    }

    pub fn runs(&self) -> &[(Gen, i64)] {
        &self.runs
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of letters, counting multiplicity (the free-group word length).
    pub fn letter_len(&self) -> u64 {
        self.runs.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    /// Total exponent sum of `g` in the word (its weight). Invariant under
    /// free reduction and conjugation.
    pub fn weight(&self, g: Gen) -> i64 {
        self.runs
            .iter()
            .filter(|&&(h, _)| h == g)
            .fold(0, |acc, &(_, e)| checked_add(acc, e))
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_runs(self.runs.iter().chain(other.runs.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word {
            runs: self
                .runs
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    /// `w^n`, with `w^0` the identity and negative powers via the inverse.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `g^{-e} w g^{e}`, freely reduced. Weights are unchanged.
    pub fn conjugate_by(&self, g: Gen, e: i64) -> Word {
        Word::from_runs(
            std::iter::once((g, -e))
                .chain(self.runs.iter().copied())
                .chain(std::iter::once((g, e))),
        )
    }
}

/// Free reduction of a raw letter sequence. Equivalent to
/// `Word::from_runs`, exposed under the name the operation is known by.
pub fn free_reduce<I: IntoIterator<Item = (Gen, i64)>>(letters: I) -> Word {
    Word::from_runs(letters)
}

/// An endomorphism of the free group given by images of the two generators.
///
/// Every substitution this crate constructs is invertible; the constructions
/// record the inverse alongside (see `zero_weight`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    image_of_a: Word,
    image_of_b: Word,
}

impl Substitution {
    pub fn new(image_of_a: Word, image_of_b: Word) -> Substitution {
        Substitution {
            image_of_a,
            image_of_b,
        }
    }

    pub fn identity() -> Substitution {
        Substitution {
            image_of_a: Word::generator(Gen::A),
            image_of_b: Word::generator(Gen::B),
        }
    }

    /// Sends `g` to `g^{-1}` and fixes the other generator.
    pub fn flip(g: Gen) -> Substitution {
        let mut s = Substitution::identity();
        match g {
            Gen::A => s.image_of_a = Word::power(Gen::A, -1),
            Gen::B => s.image_of_b = Word::power(Gen::B, -1),
        }
        s
    }

    /// Exchanges the two generators.
    pub fn swap() -> Substitution {
        Substitution {
            image_of_a: Word::generator(Gen::B),
            image_of_b: Word::generator(Gen::A),
        }
    }

    pub fn image(&self, g: Gen) -> &Word {
        match g {
            Gen::A => &self.image_of_a,
            Gen::B => &self.image_of_b,
        }
    }

    pub fn image_of_a(&self) -> &Word {
        &self.image_of_a
    }

    pub fn image_of_b(&self) -> &Word {
        &self.image_of_b
    }

    pub fn is_identity(&self) -> bool {
        self.image_of_a == Word::generator(Gen::A) && self.image_of_b == Word::generator(Gen::B)
    }

    /// Homomorphic image of `w`, freely reduced.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out: Vec<(Gen, i64)> = Vec::new();
        let mut push = |g: Gen, e: i64| {
            if e == 0 {
                return;
            }
            match out.last_mut() {
                Some((top, exp)) if *top == g => {
                    *exp = checked_add(*exp, e);
                    if *exp == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        };
        for &(g, e) in w.runs() {
            let image = self.image(g);
            if e >= 0 {
                for _ in 0..e {
                    for &(h, f) in image.runs() {
                        push(h, f);
                    }
                }
            } else {
                let inv = image.inverse();
                for _ in 0..(-e) {
                    for &(h, f) in inv.runs() {
                        push(h, f);
                    }
                }
            }
        }
        Word { runs: out }
    }

    /// The substitution that applies `self` first and `next` second:
    /// `(self.then(next))(w) = next(self(w))`.
    pub fn then(&self, next: &Substitution) -> Substitution {
        Substitution {
            image_of_a: next.apply(&self.image_of_a),
            image_of_b: next.apply(&self.image_of_b),
        }
    }
}
