//! Exact-arithmetic bi-orderability testing for two-generator one-relator
//! knot groups.
//!
//! The pipeline takes a presentation `< a, b | w >` (parsed from compact
//! text, or generated from two-bridge / twist-knot parameters), rewrites the
//! relator by a Euclidean descent of substitutions until one generator has
//! weight zero, decomposes it into syllable form, classifies the form as
//! tidy/principal/monic, reads off the Alexander polynomial from the
//! syllable column sums, counts its real roots exactly with Sturm
//! sequences, and applies the Chiswell–Glass–Wilson criteria to produce an
//! auditable verdict: bi-orderable, not bi-orderable, or inconclusive with
//! the blocking reason.
//!
//! Everything on the algebraic path is exact — words over machine integers
//! with overflow checks, polynomials over big integers — because the root
//! questions the criteria ask ("is there a positive real root", "are all
//! roots real and positive") are exactly the questions floating point gets
//! wrong on near-degenerate inputs.
//!
//! ```
//! use biorder::classify::{apply_cgw, Options, Outcome};
//! use biorder::grammar::Presentation;
//!
//! // the trefoil: < a, b | a b a = b a b >
//! let presentation = Presentation::from_relation_text("aba=bab").unwrap();
//! let result = apply_cgw(&presentation, &Options::default()).unwrap();
//! assert_eq!(result.verdict.outcome, Outcome::NotBiOrderable);
//! ```
//!
//! See the `examples/` directory for one runnable walk-through per major
//! capability, and the `biorder` binary for the batch/survey interface.

pub mod alexander;
pub mod batch;
pub mod classify;
pub mod error;
pub mod families;
pub mod grammar;
pub mod poly;
pub mod roots;
pub mod syllables;
pub mod word;
pub mod zero_weight;

pub use error::{Error, Result};
pub use word::{Gen, Substitution, Word};
