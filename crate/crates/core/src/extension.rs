//! Extending a permutation of `C` to an additive (GF(2)-linear) map of the
//! whole field.
//!
//! A permutation `sigma` of `1..=23` acts on `C` through the labelling
//! `beta^j <-> j`. Because `A = (1, alpha, ..., alpha^10)` is a basis, the
//! images of those eleven elements fix the only possible linear extension;
//! the remaining twelve elements `alpha^11 .. alpha^22` decide whether it
//! actually agrees with `sigma`.

use serde::Serialize;
use thiserror::Error;

use crate::field::FieldElement;
use crate::matrix::{BitMatrix, EchelonBasis};
use crate::perm::Permutation;
use crate::subgroup::{doubling_orbit, doubling_orbit_label, CExponent, CSubgroup, SubgroupError, C_ORDER};

/// Cycle notation of the order-5 generator.
pub const G_CYCLES: &str = "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)";

/// Involution used for the M24 experiment.
pub const H_CYCLES: &str = "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)";

/// The order-23 generator `f = (1,2,...,23)`.
pub fn generator_f() -> Permutation {
    Permutation::full_cycle(C_ORDER as usize)
}

/// The order-5 generator `g`.
pub fn generator_g() -> Permutation {
    Permutation::parse_cycles(G_CYCLES, C_ORDER as usize).expect("valid literal")
}

pub fn generator_h() -> Permutation {
    Permutation::parse_cycles(H_CYCLES, 24).expect("valid literal")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("permutation has degree {0}, expected {1}")]
    WrongDegree(usize, usize),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error("multiplier is zero")]
    ZeroMultiplier,
    #[error("usable points span only a rank-{0} subspace")]
    NoIndependentSet(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionCandidate {
    pub sigma: Permutation,
    pub beta_exp: i64,
}

impl ExtensionCandidate {
    pub fn new(sigma: Permutation, beta_exp: i64) -> Result<ExtensionCandidate, ExtensionError> {
        if sigma.degree() != C_ORDER as usize {
            return Err(ExtensionError::WrongDegree(sigma.degree(), C_ORDER as usize));
        }
        if beta_exp.rem_euclid(23) == 0 {
            return Err(SubgroupError::BetaNotGenerator(beta_exp).into());
        }
        Ok(ExtensionCandidate { sigma, beta_exp })
    }
}

/// The first element of `C` on which the forced linear map disagrees with
/// `sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    /// `alpha`-exponent of the offending input, in `11..=22`.
    pub alpha_exp: u32,
    /// `beta`-exponent of the same input.
    pub beta_exp: CExponent,
    /// `sigma` applied to `beta_exp`.
    pub expected: CExponent,
    #[serde(serialize_with = "ser_element")]
    pub computed: FieldElement,
    /// Coordinates of `computed` in basis A, as an `a9+a7+...` sum.
    pub computed_in_a: String,
    pub computed_in_c: bool,
    /// `beta`-exponent of `computed` when it lies in `C`.
    pub computed_beta_exp: Option<CExponent>,
}

fn ser_element<S: serde::Serializer>(e: &FieldElement, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_binary_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionReport {
    /// Matrix of the extension in basis A.
    Extended(BitMatrix),
    Failed(FailureWitness),
}

impl ExtensionReport {
    pub fn success(&self) -> bool {
        matches!(self, ExtensionReport::Extended(_))
    }

    pub fn matrix(&self) -> Option<&BitMatrix> {
        match self {
            ExtensionReport::Extended(m) => Some(m),
            ExtensionReport::Failed(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&FailureWitness> {
        match self {
            ExtensionReport::Extended(_) => None,
            ExtensionReport::Failed(w) => Some(w),
        }
    }

    /// `{"success", "matrix_a" | "witness"}` record.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            ExtensionReport::Extended(m) => serde_json::json!({
                "success": true,
                "matrix_a": m.row_strings(),
            }),
            ExtensionReport::Failed(w) => serde_json::json!({
                "success": false,
                "witness": w,
            }),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            ExtensionReport::Extended(m) => format!("extension: success\n{m}"),
            ExtensionReport::Failed(w) => {
                let membership = match w.computed_beta_exp {
                    Some(j) => format!("in C (b^{j})"),
                    None => "not in C".to_string(),
                };
                format!(
                    "extension: failure\nwitness: a^{} = b^{}, expected b^{}, computed {} = {} ({})\n",
                    w.alpha_exp,
                    w.beta_exp,
                    w.expected,
                    w.computed_in_a,
                    w.computed.to_binary_string(),
                    membership
                )
            }
        }
    }
}

/// Runs the extension procedure for `candidate`.
///
/// Column `i` of the candidate matrix is the A-coordinate vector of
/// `beta^sigma(j)` where `alpha^i = beta^j`; the twelve remaining elements of
/// `C` are then checked in increasing `alpha`-exponent order.
pub fn extend(c: &CSubgroup, candidate: &ExtensionCandidate) -> Result<ExtensionReport, ExtensionError> {
    let c = c.with_beta_exp(candidate.beta_exp)?;
    let sigma = &candidate.sigma;
    let n = c.field().degree() as usize;
    let image_coords = |k: u32| -> (CExponent, CExponent, u16) {
        let j = c.alpha_to_beta(CExponent::new(i64::from(k)));
        let target = CExponent::new(sigma.apply(j.value() as usize) as i64);
        (j, target, c.beta_coords(target))
    };
    let cols: Vec<u16> = (0..n as u32).map(|i| image_coords(i).2).collect();
    let m = BitMatrix::from_columns(&cols).expect("dimension fits");
    for k in n as u32..C_ORDER {
        let (j, target, want) = image_coords(k);
        let got = m.mul_vec(c.alpha_coords(CExponent::new(i64::from(k))));
        if got != want {
            let computed = c.basis_a().reconstruct(got);
            let computed_beta_exp = c.beta_log(computed);
            return Ok(ExtensionReport::Failed(FailureWitness {
                alpha_exp: k,
                beta_exp: j,
                expected: target,
                computed,
                computed_in_a: crate::subgroup::a_expression(got),
                computed_in_c: computed_beta_exp.is_some(),
                computed_beta_exp,
            }));
        }
    }
    Ok(ExtensionReport::Extended(m))
}

/// Linear map (in basis A) sending each `inputs[i]` to `outputs[i]`, where
/// the inputs form a basis of the field. `None` if they do not.
pub fn linear_map_from_images(c: &CSubgroup, inputs: &[FieldElement], outputs: &[FieldElement]) -> Option<BitMatrix> {
    assert_eq!(inputs.len(), outputs.len());
    let a = c.basis_a();
    let src: Vec<u16> = inputs.iter().map(|&x| a.coords(x)).collect();
    let dst: Vec<u16> = outputs.iter().map(|&y| a.coords(y)).collect();
    let src = BitMatrix::from_columns(&src).ok()?;
    let dst = BitMatrix::from_columns(&dst).ok()?;
    if src.dim() != c.field().degree() as usize {
        return None;
    }
    Some(dst.mul(&src.inverse().ok()?))
}

/// Builds the linear map from `sigma` on the given `beta`-exponents (which
/// must index a basis) instead of on A.
pub fn extend_on_points(
    c: &CSubgroup,
    candidate: &ExtensionCandidate,
    points: &[CExponent],
) -> Result<Option<BitMatrix>, ExtensionError> {
    let c = c.with_beta_exp(candidate.beta_exp)?;
    let inputs: Vec<FieldElement> = points.iter().map(|&j| c.beta_power(j)).collect();
    let outputs: Vec<FieldElement> = points
        .iter()
        .map(|&j| c.beta_power(CExponent::new(candidate.sigma.apply(j.value() as usize) as i64)))
        .collect();
    Ok(linear_map_from_images(&c, &inputs, &outputs))
}

/// Matrix of `x -> m*x` in `basis`.
pub fn multiplication_matrix(
    m: FieldElement,
    basis: &crate::subgroup::OrderedBasis,
) -> Result<BitMatrix, ExtensionError> {
    if m.is_zero() {
        return Err(ExtensionError::ZeroMultiplier);
    }
    let cols: Vec<u16> = basis.elements().iter().map(|&b| basis.coords(m * b)).collect();
    Ok(BitMatrix::from_columns(&cols).expect("dimension fits"))
}

/// Conjugates a basis-A matrix into basis chi: `P * M * P^-1`.
pub fn matrix_in_chi(c: &CSubgroup, matrix_a: &BitMatrix) -> BitMatrix {
    c.a_to_chi().mul(matrix_a).mul(&c.chi_to_a())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaVerdict {
    pub beta_exp: u32,
    pub success: bool,
    /// Smallest member of the doubling orbit of `beta_exp` mod 23.
    pub orbit_label: u32,
    /// `alpha`-exponent of the first failing element, if any.
    pub first_failure: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitVerdict {
    pub orbit_label: u32,
    pub members: Vec<u32>,
    pub successes: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaSearch {
    pub verdicts: Vec<BetaVerdict>,
    pub success_set: Vec<u32>,
    pub orbits: Vec<OrbitVerdict>,
}

impl BetaSearch {
    /// Whether the successes are a union of whole doubling orbits.
    pub fn is_union_of_orbits(&self) -> bool {
        self.orbits.iter().all(|o| o.successes.is_empty() || o.successes.len() == o.members.len())
    }

    pub fn verdict(&self, beta_exp: u32) -> Option<&BetaVerdict> {
        self.verdicts.iter().find(|v| v.beta_exp == beta_exp)
    }
}

/// Runs [`extend`] for every `beta_exp` in `1..=22`.
pub fn search_beta(c: &CSubgroup, sigma: &Permutation) -> Result<BetaSearch, ExtensionError> {
    let mut verdicts = Vec::with_capacity(22);
    for k in 1..C_ORDER {
        let cand = ExtensionCandidate::new(sigma.clone(), i64::from(k))?;
        let report = extend(c, &cand)?;
        verdicts.push(BetaVerdict {
            beta_exp: k,
            success: report.success(),
            orbit_label: doubling_orbit_label(k),
            first_failure: report.witness().map(|w| w.alpha_exp),
        });
    }
    let success_set: Vec<u32> = verdicts.iter().filter(|v| v.success).map(|v| v.beta_exp).collect();
    let mut labels: Vec<u32> = verdicts.iter().map(|v| v.orbit_label).collect();
    labels.sort_unstable();
    labels.dedup();
    let orbits = labels
        .into_iter()
        .map(|label| {
            let mut members = doubling_orbit(label);
            members.sort_unstable();
            let successes = members.iter().copied().filter(|k| success_set.contains(k)).collect();
            OrbitVerdict { orbit_label: label, members, successes }
        })
        .collect();
    Ok(BetaSearch { verdicts, success_set, orbits })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct M24Violation {
    /// Point whose image disagrees with the linear map.
    pub point: u32,
    pub expected: CExponent,
    #[serde(serialize_with = "ser_element")]
    pub computed: FieldElement,
    /// `computed + beta^expected`, the nonzero element the relation would
    /// force to vanish.
    #[serde(serialize_with = "ser_element")]
    pub discrepancy: FieldElement,
    /// The violated relation written in `beta`-exponents:
    /// the input as a sum over the defining points.
    pub relation: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct M24Verdict {
    pub beta_exp: i64,
    /// Points (as `beta`-exponents) on which the linear map was defined.
    pub defining_points: Vec<u32>,
    pub checked_points: Vec<u32>,
    pub consistent: bool,
    pub violation: Option<M24Violation>,
}

/// Tests whether a permutation `h` of `1..=24` can act additively on `C`.
///
/// Points `1..=23` are `beta^j`; point 24 has no field element. Only points
/// `j <= 23` with `h(j) <= 23` are used. Eleven independent ones (greedy, in
/// increasing order) define a linear map, and every other usable point is
/// checked against it.
pub fn m24_test(c: &CSubgroup, h: &Permutation, beta_exp: i64) -> Result<M24Verdict, ExtensionError> {
    if h.degree() != 24 {
        return Err(ExtensionError::WrongDegree(h.degree(), 24));
    }
    let c = c.with_beta_exp(beta_exp)?;
    let n = c.field().degree() as usize;
    let usable: Vec<u32> = (1..=C_ORDER).filter(|&j| h.apply(j as usize) <= C_ORDER as usize).collect();
    let mut eb = EchelonBasis::default();
    let mut defining = Vec::new();
    let mut checked = Vec::new();
    for &j in &usable {
        if defining.len() < n && eb.insert(c.beta_coords(CExponent::new(i64::from(j)))) {
            defining.push(j);
        } else {
            checked.push(j);
        }
    }
    if defining.len() < n {
        return Err(ExtensionError::NoIndependentSet(defining.len()));
    }
    let image = |j: u32| CExponent::new(h.apply(j as usize) as i64);
    let inputs: Vec<FieldElement> = defining.iter().map(|&j| c.beta_power(CExponent::new(i64::from(j)))).collect();
    let outputs: Vec<FieldElement> = defining.iter().map(|&j| c.beta_power(image(j))).collect();
    let m = linear_map_from_images(&c, &inputs, &outputs).expect("defining points are independent");

    // coordinates of each checked input relative to the defining points
    let src = BitMatrix::from_columns(&inputs.iter().map(|&x| c.basis_a().coords(x)).collect::<Vec<_>>())
        .expect("dimension fits")
        .inverse()
        .expect("independent");

    let mut violation = None;
    for &j in &checked {
        let x = c.beta_coords(CExponent::new(i64::from(j)));
        let got = c.basis_a().reconstruct(m.mul_vec(x));
        let expected = image(j);
        let want = c.beta_power(expected);
        if got != want {
            let rel = src.mul_vec(x);
            violation = Some(M24Violation {
                point: j,
                expected,
                computed: got,
                discrepancy: got + want,
                relation: (0..n).filter(|&i| rel >> i & 1 == 1).map(|i| defining[i]).collect(),
            });
            break;
        }
    }
    Ok(M24Verdict {
        beta_exp,
        defining_points: defining,
        checked_points: checked,
        consistent: violation.is_none(),
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn c() -> CSubgroup {
        CSubgroup::paper()
    }

    fn restriction_ok(c: &CSubgroup, m: &BitMatrix, sigma: &Permutation, beta_exp: i64) -> bool {
        let c = c.with_beta_exp(beta_exp).unwrap();
        CExponent::all().all(|j| {
            let target = CExponent::new(sigma.apply(j.value() as usize) as i64);
            m.mul_vec(c.beta_coords(j)) == c.beta_coords(target)
        })
    }

    #[test]
    fn g_extends_with_beta_5() {
        let c = c();
        let g = generator_g();
        let report = extend(&c, &ExtensionCandidate::new(g.clone(), 5).unwrap()).unwrap();
        let m = report.matrix().expect("g extends");
        assert!(restriction_ok(&c, m, &g, 5));
        assert!(m.is_invertible());
        // g(beta^16) = beta^15 and g(beta^12) = beta^23 through the matrix
        assert_eq!(m.mul_vec(c.beta_coords(CExponent::new(16))), c.beta_coords(CExponent::new(15)));
        assert_eq!(m.mul_vec(c.beta_coords(CExponent::new(12))), c.beta_coords(CExponent::new(23)));
    }

    #[test]
    fn f_is_multiplication_by_beta() {
        let c = c();
        let report = extend(&c, &ExtensionCandidate::new(generator_f(), 5).unwrap()).unwrap();
        let mb = multiplication_matrix(c.beta(), c.basis_a()).unwrap();
        assert_eq!(report.matrix(), Some(&mb));
        // f(1) = beta = alpha^5
        assert_eq!(mb.column(0), 1 << 5);
    }

    #[test]
    fn transposition_fails_at_alpha_11() {
        let c = c();
        let t = Permutation::parse_cycles("(1,2)", 23).unwrap();
        let report = extend(&c, &ExtensionCandidate::new(t, 1).unwrap()).unwrap();
        let w = report.witness().expect("must fail");
        assert_eq!(w.alpha_exp, 11);
        assert_eq!(w.computed_in_a, "a9+a7+a6+a5+a2+1");
        assert!(!w.computed_in_c);
    }

    #[test]
    fn g_fails_with_beta_1() {
        let c = c();
        let report = extend(&c, &ExtensionCandidate::new(generator_g(), 1).unwrap()).unwrap();
        assert!(!report.success());
    }

    #[test]
    fn multiplication_matrix_cases() {
        let c = c();
        let one = FieldSpec::paper().one();
        assert!(multiplication_matrix(one, c.basis_a()).unwrap().is_identity());
        assert_eq!(multiplication_matrix(FieldSpec::paper().zero(), c.basis_a()), Err(ExtensionError::ZeroMultiplier));
        let mb = multiplication_matrix(c.beta(), c.basis_a()).unwrap();
        assert!(mb.pow(23).is_identity());
        assert!((1..23).all(|k| !mb.pow(k).is_identity()));
    }

    #[test]
    fn chi_conjugation() {
        let c = c();
        assert!(matrix_in_chi(&c, &BitMatrix::identity(11)).is_identity());
        let m = extend(&c, &ExtensionCandidate::new(generator_g(), 5).unwrap()).unwrap().matrix().copied().unwrap();
        let p = c.a_to_chi();
        assert_eq!(matrix_in_chi(&c, &m).mul(&p), p.mul(&m));
    }

    #[test]
    fn candidate_validation() {
        assert!(matches!(
            ExtensionCandidate::new(Permutation::identity(24), 5),
            Err(ExtensionError::WrongDegree(24, 23))
        ));
        assert!(ExtensionCandidate::new(Permutation::identity(23), 23).is_err());
    }

    #[test]
    fn m24_identity_is_consistent() {
        let c = c();
        let v = m24_test(&c, &Permutation::identity(24), 5).unwrap();
        assert!(v.consistent);
        assert_eq!(v.defining_points.len(), 11);
        assert_eq!(v.checked_points.len(), 12);
    }

    #[test]
    fn m24_rejects_wrong_degree() {
        assert!(matches!(m24_test(&c(), &Permutation::identity(23), 5), Err(ExtensionError::WrongDegree(23, 24))));
    }
}
