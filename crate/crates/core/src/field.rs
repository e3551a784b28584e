//! Arithmetic in GF(2^n) realized as GF(2)[x] modulo a fixed irreducible
//! polynomial.
//!
//! Elements are coefficient words with bit `i` holding the coefficient of
//! `X^i`, where `X` is the class of `x`. Every element carries the
//! [`FieldSpec`] it belongs to; mixing elements of different fields panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

use serde::Serialize;
use thiserror::Error;

use crate::poly::{self, Gf2Poly, Irreducibility};

/// Largest supported extension degree. Products of two elements must fit in
/// a `u32` before reduction.
pub const MAX_DEGREE: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} has degree outside 2..={MAX_DEGREE}")]
    UnsupportedDegree(Gf2Poly),
    #[error("modulus {0} has zero constant term")]
    NoConstantTerm(Gf2Poly),
    #[error("modulus {modulus} is reducible (divisible by {factor})")]
    Reducible { modulus: Gf2Poly, factor: Gf2Poly },
    #[error("0^0 is undefined")]
    ZeroToZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient word {bits:#x} does not fit in degree {degree}")]
    OutOfRange { bits: u32, degree: u32 },
    #[error("binary string must have exactly {expected} characters, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("non-binary character {ch:?} at position {position}")]
    BadCharacter { ch: char, position: usize },
    #[error("X repeats at exponent {0} before reaching the full multiplicative order")]
    NotPrimitive(u32),
}

/// Degree and modulus of a binary extension field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    degree: u32,
    modulus: Gf2Poly,
}

impl FieldSpec {
    /// `x^11 + x^2 + 1`.
    pub const PAPER_MODULUS: Gf2Poly = Gf2Poly((1 << 11) | (1 << 2) | 1);

    /// Validates degree, constant term and irreducibility.
    pub fn new(modulus: Gf2Poly) -> Result<FieldSpec, FieldError> {
        let degree = match modulus.degree() {
            Some(d) if (2..=MAX_DEGREE).contains(&d) => d,
            _ => return Err(FieldError::UnsupportedDegree(modulus)),
        };
        if modulus.0 & 1 == 0 {
            return Err(FieldError::NoConstantTerm(modulus));
        }
        if let Irreducibility::Factor(factor) = poly::irreducibility_witness(modulus) {
            return Err(FieldError::Reducible { modulus, factor });
        }
        Ok(FieldSpec { degree, modulus })
    }

    /// GF(2^11) with modulus `x^11 + x^2 + 1`.
    pub fn paper() -> FieldSpec {
        FieldSpec { degree: 11, modulus: Self::PAPER_MODULUS }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> Gf2Poly {
        self.modulus
    }

    /// `2^n - 1`.
    pub fn multiplicative_order(&self) -> u32 {
        (1u32 << self.degree) - 1
    }

    /// Number of field elements, `2^n`.
    pub fn size(&self) -> u32 {
        1u32 << self.degree
    }

    fn mask(&self) -> u32 {
        self.multiplicative_order()
    }

    pub fn element(&self, bits: u32) -> Result<FieldElement, FieldError> {
        if bits & !self.mask() != 0 {
            return Err(FieldError::OutOfRange { bits, degree: self.degree });
        }
        Ok(FieldElement { coeffs: bits, spec: *self })
    }

    /// Reduces an arbitrary GF(2) polynomial into the field.
    pub fn reduce(&self, p: Gf2Poly) -> FieldElement {
        FieldElement { coeffs: p.rem(self.modulus).0 as u32, spec: *self }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: 0, spec: *self }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { coeffs: 1, spec: *self }
    }

    /// The class of `x`.
    pub fn x(&self) -> FieldElement {
        FieldElement { coeffs: 2, spec: *self }
    }

    /// `X^k`.
    pub fn x_pow(&self, k: u64) -> FieldElement {
        self.x().pow(k).expect("X is nonzero")
    }

    /// All `2^n` elements in coefficient-word order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(|b| FieldElement { coeffs: b, spec: *self })
    }

    /// Parses an MSB-first string of exactly `n` binary digits.
    pub fn parse_binary_string(&self, text: &str) -> Result<FieldElement, FieldError> {
        let n = self.degree as usize;
        let count = text.chars().count();
        if count != n {
            return Err(FieldError::BadLength { expected: n, got: count });
        }
        let mut bits = 0u32;
        for (position, ch) in text.chars().enumerate() {
            bits <<= 1;
            match ch {
                '0' => {}
                '1' => bits |= 1,
                _ => return Err(FieldError::BadCharacter { ch, position }),
            }
        }
        Ok(FieldElement { coeffs: bits, spec: *self })
    }

    /// True iff `X^(ord/p) != 1` for every prime `p` dividing the
    /// multiplicative order; for `2^11 - 1 = 23 * 89` that is exactly the two
    /// checks `X^89 != 1` and `X^23 != 1`.
    pub fn verify_primitive(&self) -> bool {
        let ord = u64::from(self.multiplicative_order());
        prime_factors(ord).into_iter().all(|p| !self.x_pow(ord / p).is_one())
    }

    /// Builds the discrete-log table of `X`.
    pub fn build_log_table(&self) -> Result<LogTable, FieldError> {
        LogTable::new(*self)
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::paper()
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {}", self.degree, self.modulus)
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of GF(2^n).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: u32,
    spec: FieldSpec,
}

impl FieldElement {
    pub fn bits(&self) -> u32 {
        self.coeffs
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == 0
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == 1
    }

    fn same_field(&self, other: &FieldElement) {
        assert!(self.spec == other.spec, "field mismatch: {:?} vs {:?}", self.spec, other.spec);
    }

    /// Bitwise XOR of the coefficient words.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: FieldElement) -> FieldElement {
        self.same_field(&other);
        FieldElement { coeffs: self.coeffs ^ other.coeffs, spec: self.spec }
    }

    /// Carryless product folded back below degree `n` by the modulus.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: FieldElement) -> FieldElement {
        self.same_field(&other);
        let n = self.spec.degree;
        let mut prod = 0u32;
        let mut b = other.coeffs;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                prod ^= self.coeffs << shift;
            }
            b >>= 1;
            shift += 1;
        }
        let modulus = self.spec.modulus.0 as u32;
        for bit in (n..2 * n - 1).rev() {
            if prod >> bit & 1 == 1 {
                prod ^= modulus << (bit - n);
            }
        }
        FieldElement { coeffs: prod, spec: self.spec }
    }

    pub fn square(self) -> FieldElement {
        self.mul(self)
    }

    /// Square-and-multiply. Exponents of nonzero elements are reduced modulo
    /// the multiplicative order first.
    pub fn pow(self, k: u64) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return if k == 0 { Err(FieldError::ZeroToZero) } else { Ok(self) };
        }
        let mut e = k % u64::from(self.spec.multiplicative_order());
        let mut base = self;
        let mut acc = self.spec.one();
        while e != 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.square();
            e >>= 1;
        }
        Ok(acc)
    }

    /// `a^(2^n - 2)`.
    pub fn inv(self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        self.pow(u64::from(self.spec.multiplicative_order()) - 1)
    }

    /// MSB-first, exactly `n` characters.
    pub fn to_binary_string(&self) -> String {
        Gf2Poly(u64::from(self.coeffs)).to_binary_string(self.spec.degree as usize)
    }

    /// Polynomial in `X` written highest power first, e.g. `X^8+X^6+X`.
    pub fn to_expression(&self) -> String {
        crate::subgroup::sum_expression(self.coeffs, |i| match i {
            0 => "1".to_string(),
            1 => "X".to_string(),
            _ => format!("X^{i}"),
        })
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_binary_string())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expression())
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = FieldElement::add(*self, rhs);
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = FieldElement::mul(*self, rhs);
    }
}

/// Discrete logarithms to base `X`. Built once, read-only afterwards.
#[derive(Clone)]
pub struct LogTable {
    spec: FieldSpec,
    exp_to_element: Vec<u32>,
    // index 0 (the zero element) holds u32::MAX
    element_to_exp: Vec<u32>,
}

impl LogTable {
    fn new(spec: FieldSpec) -> Result<LogTable, FieldError> {
        let ord = spec.multiplicative_order();
        let mut exp_to_element = Vec::with_capacity(ord as usize);
        let mut element_to_exp = vec![u32::MAX; spec.size() as usize];
        let x = spec.x();
        let mut cur = spec.one();
        for k in 0..ord {
            let slot = &mut element_to_exp[cur.bits() as usize];
            if *slot != u32::MAX {
                return Err(FieldError::NotPrimitive(k));
            }
            *slot = k;
            exp_to_element.push(cur.bits());
            cur *= x;
        }
        Ok(LogTable { spec, exp_to_element, element_to_exp })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    /// `X^k` for `k` reduced modulo the multiplicative order.
    pub fn exp(&self, k: u64) -> FieldElement {
        let k = (k % self.exp_to_element.len() as u64) as usize;
        FieldElement { coeffs: self.exp_to_element[k], spec: self.spec }
    }

    /// The `k` in `0..2^n-1` with `X^k = a`, or `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        assert_eq!(a.spec, self.spec, "field mismatch");
        match self.element_to_exp[a.bits() as usize] {
            u32::MAX => None,
            k => Some(k),
        }
    }

    pub fn len(&self) -> usize {
        self.exp_to_element.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exp_to_element.is_empty()
    }
}
