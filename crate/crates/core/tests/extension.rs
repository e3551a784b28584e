use m23_core::extension::{
    extend, extend_on_points, generator_f, generator_g, generator_h, m24_test, matrix_in_chi, multiplication_matrix,
    search_beta, ExtensionCandidate,
};
use m23_core::matrix::rank_of;
use m23_core::subgroup::{check_independence, doubling_orbit};
use m23_core::{BitMatrix, CExponent, CSubgroup, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c() -> CSubgroup {
    CSubgroup::paper()
}

fn ext(c: &CSubgroup, sigma: &Permutation, beta: i64) -> Option<BitMatrix> {
    let cand = ExtensionCandidate::new(sigma.clone(), beta).unwrap();
    extend(c, &cand).unwrap().matrix().copied()
}

/// Applies a basis-A matrix to a field element.
fn act(c: &CSubgroup, m: &BitMatrix, x: m23_core::FieldElement) -> m23_core::FieldElement {
    c.basis_a().reconstruct(m.mul_vec(c.basis_a().coords(x)))
}

fn random_word(rng: &mut impl Rng, len: usize) -> Permutation {
    let gens = [generator_f(), generator_g()];
    (0..len).fold(Permutation::identity(23), |acc, _| acc.compose(&gens[rng.gen_range(0..2)]))
}

#[test]
fn generators_are_additive_and_restrict_to_sigma() {
    let c = c();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for sigma in [generator_f(), generator_g()] {
        let m = ext(&c, &sigma, 5).unwrap();
        for _ in 0..10_000 {
            let x = c.field().element(rng.gen_range(0..2048)).unwrap();
            let y = c.field().element(rng.gen_range(0..2048)).unwrap();
            assert_eq!(act(&c, &m, x + y), act(&c, &m, x) + act(&c, &m, y));
        }
        for j in CExponent::all() {
            let image = act(&c, &m, c.beta_power(j));
            assert_eq!(c.beta_log(image).unwrap().value() as usize, sigma.apply(j.value() as usize));
        }
    }
}

#[test]
fn extension_is_unique() {
    let c = c();
    for sigma in [generator_f(), generator_g()] {
        let m = ext(&c, &sigma, 5).unwrap();
        // an independent set taken from the top of the labelling instead of A
        let mut pts: Vec<CExponent> = Vec::new();
        for j in (1..=23).rev() {
            let mut trial: Vec<u16> = pts.iter().map(|&p| c.beta_power(p).bits() as u16).collect();
            trial.push(c.beta_power(CExponent::new(j)).bits() as u16);
            if rank_of(&trial) == trial.len() {
                pts.push(CExponent::new(j));
            }
        }
        assert_eq!(pts.len(), 11);
        assert!(check_independence(&pts.iter().map(|&p| c.beta_power(p)).collect::<Vec<_>>()));
        assert_ne!(pts, (0..11).map(|i| c.alpha_to_beta(CExponent::new(i))).collect::<Vec<_>>());
        let cand = ExtensionCandidate::new(sigma, 5).unwrap();
        assert_eq!(extend_on_points(&c, &cand, &pts).unwrap(), Some(m));
    }
}

#[test]
fn extension_is_a_homomorphism() {
    let c = c();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let (l1, l2) = (rng.gen_range(0..12), rng.gen_range(0..12));
        let s1 = random_word(&mut rng, l1);
        let s2 = random_word(&mut rng, l2);
        let (m1, m2) = (ext(&c, &s1, 5).unwrap(), ext(&c, &s2, 5).unwrap());
        assert_eq!(ext(&c, &s1.compose(&s2), 5).unwrap(), m1.mul(&m2));
    }
    assert!(ext(&c, &Permutation::identity(23), 5).unwrap().is_identity());
}

#[test]
fn f_is_multiplication_by_beta_in_both_bases() {
    let c = c();
    let f = ext(&c, &generator_f(), 5).unwrap();
    assert_eq!(f, multiplication_matrix(c.beta(), c.basis_a()).unwrap());
    assert_eq!(matrix_in_chi(&c, &f), multiplication_matrix(c.beta(), c.basis_chi()).unwrap());
}

#[test]
fn conjugation_identity() {
    let c = c();
    let p = c.a_to_chi();
    assert!(matrix_in_chi(&c, &BitMatrix::identity(11)).is_identity());
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let m = ext(&c, &random_word(&mut rng, 20), 5).unwrap();
        assert_eq!(p.mul(&m), matrix_in_chi(&c, &m).mul(&p));
    }
}

#[test]
fn transposition_fails_at_alpha_11() {
    let c = c();
    let sigma = Permutation::parse_cycles("(1,2)", 23).unwrap();
    let cand = ExtensionCandidate::new(sigma, 1).unwrap();
    let report = extend(&c, &cand).unwrap();
    let w = report.witness().unwrap();
    assert_eq!(w.alpha_exp, 11);
    assert_eq!(w.computed_in_a, "a9+a7+a6+a5+a2+1");
    assert!(!w.computed_in_c);
    let expected = [9, 7, 6, 5, 2, 0].iter().fold(c.field().zero(), |acc, &k| acc + c.alpha_power(k));
    assert_eq!(w.computed, expected);
}

#[test]
fn beta_search_success_set_is_frobenius_stable() {
    let c = c();
    let s = search_beta(&c, &generator_g()).unwrap();
    assert_eq!(s.verdicts.len(), 22);
    assert!(s.verdict(5).unwrap().success);
    assert!(!s.verdict(1).unwrap().success);
    assert!(s.is_union_of_orbits());
    for &k in &s.success_set {
        assert!(s.success_set.contains(&(k * 2 % 23)));
    }
    let mut orbit = doubling_orbit(5);
    orbit.sort_unstable();
    assert_eq!(s.success_set, orbit);
}

#[test]
fn m24_candidate_is_never_additive_on_the_orbit_of_5() {
    let c = c();
    let h = generator_h();
    for b in doubling_orbit(5) {
        let v = m24_test(&c, &h, i64::from(b)).unwrap();
        assert!(!v.consistent, "beta = alpha^{b}");
        let x = v.violation.unwrap();
        // the relation forces beta to vanish
        assert_eq!(x.discrepancy, c.alpha_power(i64::from(b)), "beta = alpha^{b}");
    }
}

#[test]
fn bad_candidates_are_rejected() {
    assert!(ExtensionCandidate::new(Permutation::identity(5), 5).is_err());
    assert!(ExtensionCandidate::new(generator_f(), 23).is_err());
    assert!(ExtensionCandidate::new(generator_f(), 0).is_err());
}
