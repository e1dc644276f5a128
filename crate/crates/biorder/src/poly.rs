//! Dense integer polynomials with arbitrary-precision coefficients.
//!
//! Everything here is exact: no floating point enters this module. The
//! remainder sequences used downstream blow up coefficient size even for
//! degree-6 inputs, which is exactly the failure mode that bit published
//! root classifications computed in floating point — hence big integers
//! throughout.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer polynomial; `coeffs[i]` is the coefficient of `t^i`, with
/// trailing zeros trimmed so the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor, constant term first.
    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_at(&self, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn eval_i64(&self, v: i64) -> BigInt {
        self.eval_int(&BigInt::from(v))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Multiplication by `t^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, keeping each coefficient's sign.
    pub fn reduced_by_content(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_positive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Exact polynomial division; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead_d = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead_d);
            if !r.is_zero() {
                return None;
            }
            quot[i - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &q * dc;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder of `self` by `g`, scaled by a positive constant so
    /// that the sign of the true remainder is preserved at every point.
    pub fn pseudo_rem_abs(&self, g: &IntPoly) -> IntPoly {
        assert!(!g.is_zero(), "pseudo-remainder by zero");
        let dg = g.degree().unwrap();
        let lcg = g.leading().unwrap().clone();
        let mut r = self.clone();
        let mut scalings = 0usize;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lcg) - &g.scale(&lr).shift_up(dr - dg);
            scalings += 1;
        }
        if lcg.is_negative() && scalings % 2 == 1 {
            r = -&r;
        }
        r
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            if i == 1 {
                write!(f, "t")?;
            } else if i >= 2 {
                write!(f, "t^{i}")?;
            }
        }
        Ok(())
    }
}

/// Primitive gcd with positive leading coefficient, computed by a
/// fraction-free primitive remainder sequence. At least one input must be
/// nonzero.
pub fn poly_gcd(p: &IntPoly, q: &IntPoly) -> IntPoly {
    assert!(
        !(p.is_zero() && q.is_zero()),
        "gcd of two zero polynomials is undefined"
    );
    let mut a = p.primitive_positive();
    let mut b = q.primitive_positive();
    if a.is_zero() {
        return b;
    }
    if b.is_zero() {
        return a;
    }
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = a.pseudo_rem_abs(&b);
        if r.is_zero() {
            return b.primitive_positive();
        }
        a = b;
        b = r.primitive_positive();
    }
}

/// `p / gcd(p, p')`: the same root set as `p`, all roots simple. Primitive
/// with positive leading coefficient. `p` must be nonzero.
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    assert!(!p.is_zero(), "squarefree part of the zero polynomial");
    if p.degree() == Some(0) {
        return IntPoly::one();
    }
    let g = poly_gcd(p, &p.derivative());
    let sf = p
        .exact_div(&g)
        .expect("gcd(p, p') divides p exactly");
    sf.primitive_positive()
}
