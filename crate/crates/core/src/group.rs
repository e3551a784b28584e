//! Group-level checks on GF(2) matrix groups: element orders, exhaustive
//! closure, preservation of `C`, and irreducibility by spinning.

use rustc_hash::FxHashSet;
use serde::Serialize;
use thiserror::Error;

use crate::matrix::{BitMatrix, EchelonBasis};
use crate::perm::Permutation;
use crate::subgroup::{CExponent, CSubgroup};

/// Default memory guard for [`bfs_closure`].
pub const DEFAULT_CLOSURE_CAP: u64 = 12_000_000;

/// Order of M23.
pub const M23_ORDER: u128 = 10_200_960;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("matrix is singular")]
    Singular,
    #[error("no generators given")]
    NoGenerators,
    #[error("generators have mixed dimensions")]
    DimensionMismatch,
    #[error("closure keys need dimension <= 11, got {0}")]
    DimensionTooLarge(usize),
    #[error("spin needs a nonzero start vector")]
    ZeroVector,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ElementOrder {
    Exact(u64),
    CapExceeded,
}

/// Least `k >= 1` with `M^k = I`, searching up to `cap`.
pub fn element_order(m: &BitMatrix, cap: u64) -> Result<ElementOrder, GroupError> {
    if !m.is_invertible() {
        return Err(GroupError::Singular);
    }
    let mut acc = *m;
    for k in 1..=cap {
        if acc.is_identity() {
            return Ok(ElementOrder::Exact(k));
        }
        acc = acc.mul(m);
    }
    Ok(ElementOrder::CapExceeded)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    pub element_count: u64,
    pub frontier_generations: u32,
    pub cap_hit: bool,
}

/// Breadth-first closure of `<generators>` from the identity under right
/// multiplication, deduplicated by 121-bit matrix keys.
///
/// `progress` is called after every generation with the generation index and
/// the running element count. If the count would exceed `cap`, the search
/// stops and `cap_hit` is set; the count is then a lower bound only.
pub fn bfs_closure(
    generators: &[BitMatrix],
    cap: u64,
    mut progress: impl FnMut(u32, u64),
) -> Result<ClosureResult, GroupError> {
    let dim = generators.first().ok_or(GroupError::NoGenerators)?.dim();
    if generators.iter().any(|g| g.dim() != dim) {
        return Err(GroupError::DimensionMismatch);
    }
    if dim > 11 {
        return Err(GroupError::DimensionTooLarge(dim));
    }
    if generators.iter().any(|g| !g.is_invertible()) {
        return Err(GroupError::Singular);
    }
    let id = BitMatrix::identity(dim);
    let mut seen: FxHashSet<u128> = FxHashSet::default();
    seen.insert(id.key());
    let mut frontier = vec![id.key()];
    let mut generations = 0u32;
    let mut cap_hit = false;
    'bfs: while !frontier.is_empty() {
        let mut next = Vec::new();
        for &k in &frontier {
            let m = BitMatrix::from_key(k, dim);
            for g in generators {
                let key = m.mul(g).key();
                if seen.insert(key) {
                    if seen.len() as u64 > cap {
                        cap_hit = true;
                        break 'bfs;
                    }
                    next.push(key);
                }
            }
        }
        generations += 1;
        progress(generations, seen.len() as u64);
        frontier = next;
    }
    let element_count = if cap_hit { cap } else { seen.len() as u64 };
    Ok(ClosureResult { element_count, frontier_generations: generations, cap_hit })
}

/// Whether `M` (in basis A) maps every element of `C` into `C`.
pub fn preserves_c(c: &CSubgroup, m: &BitMatrix) -> bool {
    let coords = c.c_coords();
    coords.iter().all(|&v| coords.contains(&m.mul_vec(v)))
}

/// The permutation of `1..=23` induced on `C` (labelled `beta^j <-> j`), or
/// `None` if `M` does not preserve `C`.
pub fn restriction_to_c(c: &CSubgroup, m: &BitMatrix) -> Option<Permutation> {
    let images = CExponent::all()
        .map(|j| {
            let img = m.mul_vec(c.beta_coords(j));
            CExponent::all().find(|&t| c.beta_coords(t) == img).map(|t| t.value() as usize)
        })
        .collect::<Option<Vec<_>>>()?;
    Permutation::from_images(images).ok()
}

/// Dimension of the smallest subspace containing `v` and invariant under
/// every generator.
pub fn spin(v: u16, generators: &[BitMatrix]) -> Result<usize, GroupError> {
    if v == 0 {
        return Err(GroupError::ZeroVector);
    }
    let mut span = EchelonBasis::default();
    span.insert(v);
    let mut work = vec![v];
    while let Some(w) = work.pop() {
        for g in generators {
            let img = g.mul_vec(w);
            if span.insert(img) {
                work.push(img);
            }
        }
    }
    Ok(span.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpinSummary {
    pub vectors_checked: u32,
    pub min_dimension: usize,
    /// First vector (as a coordinate word) that spins to a proper subspace.
    pub first_proper: Option<u16>,
    pub irreducible: bool,
}

/// Spins every nonzero vector of GF(2)^dim.
pub fn spin_all(generators: &[BitMatrix]) -> Result<SpinSummary, GroupError> {
    let dim = generators.first().ok_or(GroupError::NoGenerators)?.dim();
    let mut min_dimension = dim;
    let mut first_proper = None;
    let top = if dim == 16 { u16::MAX } else { (1u16 << dim) - 1 };
    for v in 1..=top {
        let d = spin(v, generators)?;
        if d < dim && first_proper.is_none() {
            first_proper = Some(v);
        }
        min_dimension = min_dimension.min(d);
    }
    Ok(SpinSummary {
        vectors_checked: u32::from(top),
        min_dimension,
        first_proper,
        irreducible: first_proper.is_none(),
    })
}

/// Least `i >= 1` with `2^i = 1 (mod p)`: the smallest GF(2)-dimension in
/// which an element of order `p` can act.
pub fn min_faithful_dimension(p: u64) -> Result<u32, GroupError> {
    let is_prime = p > 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if !is_prime {
        return Err(GroupError::NotOddPrime(p));
    }
    let mut x = 2 % p;
    let mut i = 1;
    while x != 1 {
        x = x * 2 % p;
        i += 1;
    }
    Ok(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::{extend, generator_f, generator_g, ExtensionCandidate};

    fn gens() -> (CSubgroup, BitMatrix, BitMatrix) {
        let c = CSubgroup::paper();
        let f = *extend(&c, &ExtensionCandidate::new(generator_f(), 5).unwrap()).unwrap().matrix().unwrap();
        let g = *extend(&c, &ExtensionCandidate::new(generator_g(), 5).unwrap()).unwrap().matrix().unwrap();
        (c, f, g)
    }

    #[test]
    fn orders() {
        let (_, f, g) = gens();
        assert_eq!(element_order(&BitMatrix::identity(11), 10), Ok(ElementOrder::Exact(1)));
        assert_eq!(element_order(&f, 100), Ok(ElementOrder::Exact(23)));
        assert_eq!(element_order(&g, 100), Ok(ElementOrder::Exact(5)));
        assert_eq!(element_order(&f, 10), Ok(ElementOrder::CapExceeded));
        assert_eq!(element_order(&BitMatrix::zero(11), 10), Err(GroupError::Singular));
    }

    #[test]
    fn small_closures() {
        let (_, f, g) = gens();
        let id = BitMatrix::identity(11);
        assert_eq!(bfs_closure(&[id], 100, |_, _| {}).unwrap().element_count, 1);
        assert_eq!(bfs_closure(&[f], 100, |_, _| {}).unwrap().element_count, 23);
        assert_eq!(bfs_closure(&[g], 100, |_, _| {}).unwrap().element_count, 5);
        let capped = bfs_closure(&[f, g], 1000, |_, _| {}).unwrap();
        assert!(capped.cap_hit);
        assert_eq!(bfs_closure(&[], 10, |_, _| {}), Err(GroupError::NoGenerators));
    }

    #[test]
    fn c_preservation_and_restriction() {
        let (c, f, g) = gens();
        assert!(preserves_c(&c, &f));
        assert!(preserves_c(&c, &g));
        assert_eq!(restriction_to_c(&c, &f).unwrap().to_string(), generator_f().to_string());
        assert_eq!(restriction_to_c(&c, &g).unwrap(), generator_g());
    }

    #[test]
    fn spins() {
        let (_, f, g) = gens();
        assert_eq!(spin(0b101, &[BitMatrix::identity(11)]), Ok(1));
        assert_eq!(spin(1, &[f, g]), Ok(11));
        assert_eq!(spin(0, &[f]), Err(GroupError::ZeroVector));
        let s = spin_all(&[f, g]).unwrap();
        assert!(s.irreducible);
        assert_eq!(s.vectors_checked, 2047);
        assert_eq!(s.min_dimension, 11);
    }

    #[test]
    fn min_dims() {
        assert_eq!(min_faithful_dimension(23), Ok(11));
        assert_eq!(min_faithful_dimension(7), Ok(3));
        assert_eq!(min_faithful_dimension(3), Ok(2));
        assert_eq!(min_faithful_dimension(9), Err(GroupError::NotOddPrime(9)));
        assert_eq!(min_faithful_dimension(2), Err(GroupError::NotOddPrime(2)));
    }
}
