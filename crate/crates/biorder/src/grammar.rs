//! The compact text format for words and relations.
//!
//! A word is a sequence of letters from `{a, b, x, y}`, lowercase for a
//! generator and uppercase for its inverse, each optionally followed by a
//! repetition count of at least 2 (`aB2a3` = `a b^{-2} a^3`) or an explicit
//! exponent (`b^-3`). Whitespace is ignored. The `x`/`y` letters are display
//! aliases for the same two generator slots as `a`/`b`.
//!
//! A relation is `LHS=RHS` with both sides words; it denotes the relator
//! `LHS · RHS^{-1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Gen, Word};

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses a word in the compact format and returns it freely reduced.
pub fn parse_word(text: &str) -> Result<Word> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut runs: Vec<(Gen, i64)> = Vec::new();
    let mut saw_letter = false;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let (gen, sign) = match c {
            'a' | 'x' => (Gen::A, 1),
            'b' | 'y' => (Gen::B, 1),
            'A' | 'X' => (Gen::A, -1),
            'B' | 'Y' => (Gen::B, -1),
            _ => return Err(parse_err(i, format!("unexpected character {c:?}"))),
        };
        saw_letter = true;
        let letter_at = i;
        i += 1;
        let mut exponent: i64 = sign;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let neg = if i < bytes.len() && bytes[i] == b'-' {
                i += 1;
                true
            } else {
                false
            };
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(parse_err(start, "expected digits after '^'"));
            }
            let n: i64 = text[start..i]
                .parse()
                .map_err(|_| parse_err(start, "exponent out of range"))?;
            if n == 0 {
                return Err(parse_err(start, "zero exponent"));
            }
            exponent = sign * if neg { -n } else { n };
        } else if i < bytes.len() && bytes[i].is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: i64 = text[start..i]
                .parse()
                .map_err(|_| parse_err(start, "repetition count out of range"))?;
            if n == 0 {
                return Err(parse_err(start, "zero repetition count"));
            }
            if n == 1 {
                return Err(parse_err(start, "repetition count must be at least 2"));
            }
            exponent = sign * n;
        }
        let _ = letter_at;
        runs.push((gen, exponent));
    }
    if !saw_letter {
        return Err(parse_err(0, "empty input"));
    }
    Ok(Word::from_runs(runs))
}

/// Parses `LHS=RHS` and returns the freely reduced relator `LHS · RHS^{-1}`.
pub fn parse_relation(text: &str) -> Result<Word> {
    let eq_positions: Vec<usize> = text
        .bytes()
        .enumerate()
        .filter(|&(_, b)| b == b'=')
        .map(|(i, _)| i)
        .collect();
    match eq_positions.as_slice() {
        [pos] => {
            let lhs = parse_word(&text[..*pos])?;
            let rhs = parse_word(&text[pos + 1..]).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: offset + pos + 1,
                    message,
                },
                other => other,
            })?;
            Ok(lhs.concat(&rhs.inverse()))
        }
        [] => Err(parse_err(0, "relation must contain '='")),
        [_, second, ..] => Err(parse_err(*second, "relation must contain exactly one '='")),
    }
}

fn render_with(w: &Word, lower: [char; 2], upper: [char; 2]) -> String {
    let mut out = String::new();
    for &(g, e) in w.runs() {
        let idx = match g {
            Gen::A => 0,
            Gen::B => 1,
        };
        out.push(if e < 0 { upper[idx] } else { lower[idx] });
        let mag = e.unsigned_abs();
        if mag >= 2 {
            out.push_str(&mag.to_string());
        }
    }
    out
}

/// Canonical compact rendering: lowercase `a`/`b`, capitals for inverses,
/// digit runs for magnitudes of at least 2. `parse_word(render_word(w)) == w`.
pub fn render_word(w: &Word) -> String {
    render_with(w, ['a', 'b'], ['A', 'B'])
}

/// Same rendering using the `x`/`y` display alias.
pub fn render_word_xy(w: &Word) -> String {
    render_with(w, ['x', 'y'], ['X', 'Y'])
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(self))
    }
}

/// A one-relator presentation on the two generator slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    relator: Word,
    source_form: String,
    label: Option<String>,
}

impl Presentation {
    /// Wraps a relator. The relator must be nonempty (it is freely reduced
    /// by construction of `Word`).
    pub fn new(relator: Word, source_form: String, label: Option<String>) -> Result<Presentation> {
        if relator.is_identity() {
            return Err(Error::DegenerateRelator(
                "relator reduces to the empty word".into(),
            ));
        }
        Ok(Presentation {
            relator,
            source_form,
            label,
        })
    }

    pub fn from_relator_text(text: &str) -> Result<Presentation> {
        let relator = parse_word(text)?;
        Presentation::new(relator, text.to_string(), None)
    }

    pub fn from_relation_text(text: &str) -> Result<Presentation> {
        let relator = parse_relation(text)?;
        Presentation::new(relator, text.to_string(), None)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Presentation {
        self.label = Some(label.into());
        self
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }

    pub fn source_form(&self) -> &str {
        &self.source_form
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }
}
