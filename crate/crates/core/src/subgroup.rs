//! The 23-element multiplicative subgroup `C = <alpha>` of GF(2^11), with
//! `alpha = X^alpha_exp` and a second generator `beta = alpha^beta_exp`.
//!
//! Points of `C` are labelled by [`CExponent`] values `1..=23`, where 23
//! stands for the identity. The ordered bases `A = (1, alpha, ..., alpha^10)`
//! and `chi = (1, X, ..., X^10)` give coordinates to field elements.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};
use crate::matrix::{BitMatrix, EchelonBasis};

/// Order of `C`.
pub const C_ORDER: u32 = 23;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgroupError {
    #[error("X^{0} does not have multiplicative order 23")]
    NotOrder23(u64),
    #[error("beta exponent {0} is not coprime to 23")]
    BetaNotGenerator(i64),
    #[error("basis has {got} elements, field degree is {expected}")]
    WrongBasisSize { expected: usize, got: usize },
    #[error("basis elements are linearly dependent over GF(2)")]
    Dependent,
}

/// Exponent of a generator of `C`, normalized into `1..=23`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CExponent(u8);

impl CExponent {
    pub const IDENTITY: CExponent = CExponent(23);

    /// Reduces any integer modulo 23, mapping the zero class to 23.
    pub fn new(k: i64) -> CExponent {
        match k.rem_euclid(i64::from(C_ORDER)) {
            0 => CExponent(23),
            r => CExponent(r as u8),
        }
    }

    pub fn value(self) -> u32 {
        u32::from(self.0)
    }

    pub fn scale(self, k: i64) -> CExponent {
        CExponent::new(i64::from(self.0) * k)
    }

    pub fn offset(self, k: i64) -> CExponent {
        CExponent::new(i64::from(self.0) + k)
    }

    /// Exponent doubling, the action of the Frobenius map `x -> x^2` on `C`.
    pub fn frobenius(self) -> CExponent {
        self.scale(2)
    }

    /// Residue in `0..23` (the identity maps to 0).
    pub fn residue(self) -> u32 {
        self.value() % C_ORDER
    }

    pub fn all() -> impl Iterator<Item = CExponent> {
        (1..=23).map(CExponent)
    }
}

impl fmt::Debug for CExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for CExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Orbit of `k` under doubling modulo 23, in the order visited.
pub fn doubling_orbit(k: u32) -> Vec<u32> {
    let start = CExponent::new(i64::from(k));
    let mut out = vec![start.value()];
    let mut cur = start.frobenius();
    while cur != start {
        out.push(cur.value());
        cur = cur.frobenius();
    }
    out
}

/// Smallest member of the doubling orbit of `k`.
pub fn doubling_orbit_label(k: u32) -> u32 {
    doubling_orbit(k).into_iter().min().expect("orbit is nonempty")
}

fn mod_inverse_23(k: i64) -> Option<i64> {
    let k = k.rem_euclid(23);
    (1..23).find(|&x| (k * x) % 23 == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubgroupSpec {
    pub alpha_exp: u64,
    pub beta_exp: i64,
    pub subgroup_order: u32,
}

impl SubgroupSpec {
    pub fn paper() -> SubgroupSpec {
        SubgroupSpec { alpha_exp: 89, beta_exp: 5, subgroup_order: C_ORDER }
    }
}

impl Default for SubgroupSpec {
    fn default() -> Self {
        SubgroupSpec::paper()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum BasisLabel {
    A,
    Chi,
    Custom,
}

/// Eleven (in general `n`) linearly independent field elements.
#[derive(Clone)]
pub struct OrderedBasis {
    label: BasisLabel,
    elements: Vec<FieldElement>,
    // column j = coefficient word of element j
    to_field: BitMatrix,
    // inverse of `to_field`
    to_coords: BitMatrix,
}

impl OrderedBasis {
    pub fn new(label: BasisLabel, elements: Vec<FieldElement>) -> Result<OrderedBasis, SubgroupError> {
        let n = elements
            .first()
            .map(|e| e.spec().degree() as usize)
            .ok_or(SubgroupError::WrongBasisSize { expected: 0, got: 0 })?;
        if elements.len() != n {
            return Err(SubgroupError::WrongBasisSize { expected: n, got: elements.len() });
        }
        let cols: Vec<u16> = elements.iter().map(|e| e.bits() as u16).collect();
        let to_field = BitMatrix::from_columns(&cols).expect("degree <= 16");
        let to_coords = to_field.inverse().map_err(|_| SubgroupError::Dependent)?;
        Ok(OrderedBasis { label, elements, to_field, to_coords })
    }

    /// `(1, X, ..., X^(n-1))`.
    pub fn monomial(field: FieldSpec) -> OrderedBasis {
        let elements = (0..field.degree()).map(|i| field.x_pow(u64::from(i))).collect();
        OrderedBasis::new(BasisLabel::Chi, elements).expect("monomials are independent")
    }

    pub fn label(&self) -> &BasisLabel {
        &self.label
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn field(&self) -> FieldSpec {
        self.elements[0].spec()
    }

    /// The unique coordinates of `a` in this basis.
    pub fn express(&self, a: FieldElement) -> CoordVector {
        assert_eq!(a.spec(), self.field(), "field mismatch");
        CoordVector { bits: self.to_coords.mul_vec(a.bits() as u16), basis: self.label.clone() }
    }

    pub fn coords(&self, a: FieldElement) -> u16 {
        self.to_coords.mul_vec(a.bits() as u16)
    }

    /// Sum of the basis elements selected by `coords`.
    pub fn reconstruct(&self, coords: u16) -> FieldElement {
        self.field().element(u32::from(self.to_field.mul_vec(coords))).expect("basis matrix preserves width")
    }

    /// Matrix taking coordinates in `self` to coordinates in `to`.
    pub fn change_of_basis(&self, to: &OrderedBasis) -> BitMatrix {
        to.to_coords.mul(&self.to_field)
    }
}

/// True iff the elements have full GF(2) rank in their field.
pub fn check_independence(elements: &[FieldElement]) -> bool {
    let Some(first) = elements.first() else {
        return false;
    };
    let n = first.spec().degree() as usize;
    let mut eb = EchelonBasis::default();
    elements.len() == n && elements.iter().all(|e| eb.insert(e.bits() as u16))
}

/// Coordinates relative to a named basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoordVector {
    pub bits: u16,
    pub basis: BasisLabel,
}

impl CoordVector {
    /// `a9+a7+a6+1` for basis A, `X^2+1` style for chi.
    pub fn to_expression(&self) -> String {
        match self.basis {
            BasisLabel::A => a_expression(self.bits),
            BasisLabel::Chi => sum_expression(u32::from(self.bits), |i| match i {
                0 => "1".into(),
                1 => "X".into(),
                _ => format!("X^{i}"),
            }),
            BasisLabel::Custom => sum_expression(u32::from(self.bits), |i| format!("e{i}")),
        }
    }

    /// MSB-first string of `width` coordinates.
    pub fn to_coord_string(&self, width: usize) -> String {
        (0..width).rev().map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' }).collect()
    }
}

/// Sum of basis-A terms, highest power first: `a10+a5+a3+a2+a`.
pub fn a_expression(bits: u16) -> String {
    sum_expression(u32::from(bits), |i| match i {
        0 => "1".into(),
        1 => "a".into(),
        _ => format!("a{i}"),
    })
}

pub(crate) fn sum_expression(bits: u32, term: impl Fn(u32) -> String) -> String {
    if bits == 0 {
        return "0".into();
    }
    (0..32).rev().filter(|&i| bits >> i & 1 == 1).map(term).collect::<Vec<_>>().join("+")
}

/// Inverse of [`sum_expression`]: parses `t1+t2+...` where each term is
/// decoded by `term`. Repeated terms cancel, as they would in GF(2).
pub fn parse_sum_expression(text: &str, term: impl Fn(&str) -> Option<u32>) -> Option<u32> {
    let text = text.trim();
    if text == "0" {
        return Some(0);
    }
    let mut bits = 0u32;
    for tok in text.split('+') {
        let e = term(tok.trim())?;
        if e >= 32 {
            return None;
        }
        bits ^= 1 << e;
    }
    Some(bits)
}

/// Parses an expression over basis A as written by [`a_expression`].
pub fn parse_a_expression(text: &str) -> Option<u16> {
    parse_sum_expression(text, |t| match t {
        "1" => Some(0),
        "a" => Some(1),
        _ => t.strip_prefix('a')?.parse().ok(),
    })
    .and_then(|b| u16::try_from(b).ok())
}

/// Parses a polynomial in `X` as written by `FieldElement::to_expression`.
pub fn parse_x_expression(field: FieldSpec, text: &str) -> Option<FieldElement> {
    let bits = parse_sum_expression(text, |t| match t {
        "1" => Some(0),
        "X" => Some(1),
        _ => t.strip_prefix("X^")?.parse().ok(),
    })?;
    field.element(bits).ok()
}

/// `C` inside a concrete field, with its bases and exponent bookkeeping.
#[derive(Clone)]
pub struct CSubgroup {
    field: FieldSpec,
    spec: SubgroupSpec,
    beta_inverse: i64,
    // alpha_powers[k] = alpha^k for k in 0..23
    alpha_powers: Vec<FieldElement>,
    basis_a: OrderedBasis,
    basis_chi: OrderedBasis,
    // coords in A of alpha^k
    alpha_coords: Vec<u16>,
}

impl CSubgroup {
    pub fn new(field: FieldSpec, spec: SubgroupSpec) -> Result<CSubgroup, SubgroupError> {
        let alpha = field.x_pow(spec.alpha_exp);
        if alpha.is_one() || !alpha.pow(u64::from(C_ORDER)).expect("nonzero").is_one() {
            return Err(SubgroupError::NotOrder23(spec.alpha_exp));
        }
        let beta_inverse = mod_inverse_23(spec.beta_exp).ok_or(SubgroupError::BetaNotGenerator(spec.beta_exp))?;
        let alpha_powers: Vec<FieldElement> = (0..C_ORDER).map(|k| alpha.pow(u64::from(k)).expect("nonzero")).collect();
        let n = field.degree() as usize;
        let basis_a = OrderedBasis::new(BasisLabel::A, alpha_powers[..n].to_vec())?;
        let basis_chi = OrderedBasis::monomial(field);
        let alpha_coords = alpha_powers.iter().map(|&e| basis_a.coords(e)).collect();
        Ok(CSubgroup { field, spec, beta_inverse, alpha_powers, basis_a, basis_chi, alpha_coords })
    }

    /// GF(2^11) mod `x^11+x^2+1`, `alpha = X^89`, `beta = alpha^5`.
    pub fn paper() -> CSubgroup {
        CSubgroup::new(FieldSpec::paper(), SubgroupSpec::paper()).expect("paper parameters are valid")
    }

    /// Same field and `alpha`, different `beta`.
    pub fn with_beta_exp(&self, beta_exp: i64) -> Result<CSubgroup, SubgroupError> {
        let beta_inverse = mod_inverse_23(beta_exp).ok_or(SubgroupError::BetaNotGenerator(beta_exp))?;
        let mut out = self.clone();
        out.spec.beta_exp = beta_exp;
        out.beta_inverse = beta_inverse;
        Ok(out)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn spec(&self) -> SubgroupSpec {
        self.spec
    }

    pub fn beta_exp(&self) -> i64 {
        self.spec.beta_exp
    }

    /// `alpha^k`, `k` taken modulo 23.
    pub fn alpha_power(&self, k: i64) -> FieldElement {
        self.alpha_powers[k.rem_euclid(23) as usize]
    }

    pub fn beta_power(&self, j: CExponent) -> FieldElement {
        self.alpha_power(self.beta_to_alpha(j).residue() as i64)
    }

    pub fn beta(&self) -> FieldElement {
        self.beta_power(CExponent::new(1))
    }

    /// `beta^j = alpha^(beta_exp * j)`.
    pub fn beta_to_alpha(&self, j: CExponent) -> CExponent {
        j.scale(self.spec.beta_exp)
    }

    /// `alpha^k = beta^(k / beta_exp)`.
    pub fn alpha_to_beta(&self, k: CExponent) -> CExponent {
        k.scale(self.beta_inverse)
    }

    /// The `alpha`-exponent of `a` if `a` lies in `C`.
    pub fn alpha_log(&self, a: FieldElement) -> Option<CExponent> {
        self.alpha_powers.iter().position(|&p| p == a).map(|k| CExponent::new(k as i64))
    }

    pub fn beta_log(&self, a: FieldElement) -> Option<CExponent> {
        self.alpha_log(a).map(|k| self.alpha_to_beta(k))
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        self.alpha_log(a).is_some()
    }

    pub fn basis_a(&self) -> &OrderedBasis {
        &self.basis_a
    }

    pub fn basis_chi(&self) -> &OrderedBasis {
        &self.basis_chi
    }

    /// Coordinates in A of `alpha^k`.
    pub fn alpha_coords(&self, k: CExponent) -> u16 {
        self.alpha_coords[k.residue() as usize]
    }

    pub fn beta_coords(&self, j: CExponent) -> u16 {
        self.alpha_coords(self.beta_to_alpha(j))
    }

    /// Coordinates in A of all 23 elements of `C`, indexed by `alpha`-exponent
    /// residue.
    pub fn c_coords(&self) -> &[u16] {
        &self.alpha_coords
    }

    /// `P` with `P * coords_A(a) = coords_chi(a)`.
    pub fn a_to_chi(&self) -> BitMatrix {
        self.basis_a.change_of_basis(&self.basis_chi)
    }

    pub fn chi_to_a(&self) -> BitMatrix {
        self.basis_chi.change_of_basis(&self.basis_a)
    }
}
