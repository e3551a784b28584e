//! Polynomials over GF(2) packed into a `u64`, bit `i` holding the
//! coefficient of `x^i`.
//!
//! Only what the field construction needs lives here: degree, carryless
//! multiplication, remainder, trial-division irreducibility, and the two
//! text forms accepted on the command line (`"11,2,0"` exponent lists and
//! MSB-first binary strings).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("invalid exponent {0:?}")]
    BadExponent(String),
    #[error("exponent {0} exceeds 63")]
    ExponentTooLarge(u32),
    #[error("exponent {0} listed twice")]
    DuplicateExponent(u32),
    #[error("binary polynomial longer than 64 digits")]
    TooLong,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2Poly(pub u64);

impl Gf2Poly {
    pub const ZERO: Gf2Poly = Gf2Poly(0);
    pub const ONE: Gf2Poly = Gf2Poly(1);
    pub const X: Gf2Poly = Gf2Poly(2);

    /// Builds a polynomial from the exponents of its nonzero terms.
    pub fn from_exponents(exps: &[u32]) -> Gf2Poly {
        Gf2Poly(exps.iter().fold(0u64, |acc, &e| acc ^ (1u64 << e)))
    }

    /// `None` for the zero polynomial.
    pub fn degree(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros())
        }
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Exponents of the nonzero terms, highest first.
    pub fn exponents(self) -> Vec<u32> {
        (0..64).rev().filter(|&i| self.0 >> i & 1 == 1).collect()
    }

    /// Carryless product. Panics if the result would not fit in 64 bits.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Gf2Poly) -> Gf2Poly {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            assert!(a + b < 64, "product degree {} overflows Gf2Poly", a + b);
        }
        let mut acc = 0u64;
        let mut b = other.0;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= self.0 << shift;
            }
            b >>= 1;
            shift += 1;
        }
        Gf2Poly(acc)
    }

    /// Quotient and remainder. Panics on a zero divisor.
    pub fn div_rem(self, divisor: Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.0;
        let mut quot = 0u64;
        while let Some(rd) = Gf2Poly(rem).degree() {
            if rd < dd {
                break;
            }
            quot |= 1 << (rd - dd);
            rem ^= divisor.0 << (rd - dd);
        }
        (Gf2Poly(quot), Gf2Poly(rem))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn rem(self, divisor: Gf2Poly) -> Gf2Poly {
        self.div_rem(divisor).1
    }

    /// MSB-first string of exactly `width` binary digits.
    pub fn to_binary_string(self, width: usize) -> String {
        (0..width).rev().map(|i| if self.0 >> i & 1 == 1 { '1' } else { '0' }).collect()
    }
}

/// Outcome of trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// The smallest (as an integer) nontrivial divisor found.
    Factor(Gf2Poly),
}

/// Trial division by every polynomial of degree `1..=deg/2`, in increasing
/// integer order, so the reported factor is deterministic.
///
/// Polynomials of degree 0 or the zero polynomial have no meaningful verdict
/// and are reported as irreducible only if they are nonconstant; callers are
/// expected to pass degree >= 1.
pub fn irreducibility_witness(poly: Gf2Poly) -> Irreducibility {
    let deg = match poly.degree() {
        Some(d) if d >= 1 => d,
        _ => return Irreducibility::Irreducible,
    };
    let limit = 1u64 << (deg / 2 + 1);
    for cand in 2..limit {
        if poly.rem(Gf2Poly(cand)).is_zero() {
            return Irreducibility::Factor(Gf2Poly(cand));
        }
    }
    Irreducibility::Irreducible
}

pub fn is_irreducible(poly: Gf2Poly) -> bool {
    poly.degree().is_some_and(|d| d >= 1) && irreducibility_witness(poly) == Irreducibility::Irreducible
}

impl fmt::Display for Gf2Poly {
    /// `x^11+x^2+1` style; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl Serialize for Gf2Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Gf2Poly {
    type Err = PolyParseError;

    /// Accepts either a comma-separated exponent list (`"11,2,0"`) or a
    /// string of binary digits, MSB first (`"100000000101"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyParseError::Empty);
        }
        let is_binary = !s.contains(',') && s.len() > 1 && s.chars().all(|c| c == '0' || c == '1');
        if is_binary {
            if s.len() > 64 {
                return Err(PolyParseError::TooLong);
            }
            let v = s.chars().fold(0u64, |acc, c| (acc << 1) | u64::from(c == '1'));
            return Ok(Gf2Poly(v));
        }
        let mut bits = 0u64;
        for tok in s.split(',') {
            let tok = tok.trim();
            let e: u32 = tok.parse().map_err(|_| PolyParseError::BadExponent(tok.to_string()))?;
            if e > 63 {
                return Err(PolyParseError::ExponentTooLarge(e));
            }
            if bits >> e & 1 == 1 {
                return Err(PolyParseError::DuplicateExponent(e));
            }
            bits |= 1 << e;
        }
        Ok(Gf2Poly(bits))
    }
}
