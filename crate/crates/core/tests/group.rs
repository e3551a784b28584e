use m23_core::extension::{extend, generator_f, generator_g, ExtensionCandidate};
use m23_core::group::{bfs_closure, element_order, preserves_c, restriction_to_c, spin, ElementOrder};
use m23_core::perm::group_order;
use m23_core::{BitMatrix, CSubgroup, Permutation};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn generators() -> (CSubgroup, BitMatrix, BitMatrix) {
    let c = CSubgroup::paper();
    let m = |s| *extend(&c, &ExtensionCandidate::new(s, 5).unwrap()).unwrap().matrix().unwrap();
    let (f, g) = (m(generator_f()), m(generator_g()));
    (c, f, g)
}

fn invertible() -> impl Strategy<Value = BitMatrix> {
    any::<u64>().prop_map(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let rows: Vec<u16> = (0..11).map(|_| rng.gen_range(0..2048)).collect();
            let m = BitMatrix::from_rows(&rows).unwrap();
            if m.is_invertible() {
                return m;
            }
        }
    })
}

/// Matrix sending basis vector `i` to basis vector `p(i)`.
fn permutation_matrix(p: &Permutation) -> BitMatrix {
    let cols: Vec<u16> = (1..=p.degree()).map(|i| 1 << (p.apply(i) - 1)).collect();
    BitMatrix::from_columns(&cols).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn mat_mul_laws(a in invertible(), b in invertible(), c in invertible()) {
        let id = BitMatrix::identity(11);
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&id), a);
        prop_assert_eq!(id.mul(&a), a);
        prop_assert_eq!(a.mul(&b).mul_vec(0b101_1001_0011), a.mul_vec(b.mul_vec(0b101_1001_0011)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn inverse_is_two_sided(a in invertible()) {
        let inv = a.inverse().unwrap();
        prop_assert!(a.mul(&inv).is_identity());
        prop_assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn key_round_trip(a in invertible()) {
        prop_assert_eq!(BitMatrix::from_key(a.key(), 11), a);
    }
}

#[test]
fn closure_of_permutation_matrices_matches_schreier_sims() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..60 {
        let n = rng.gen_range(2..=7);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let mut v: Vec<usize> = (1..=n).collect();
                v.shuffle(&mut rng);
                Permutation::from_images(v).unwrap()
            })
            .collect();
        let mats: Vec<BitMatrix> = gens.iter().map(permutation_matrix).collect();
        let res = bfs_closure(&mats, 1 << 20, |_, _| {}).unwrap();
        assert!(!res.cap_hit);
        assert_eq!(u128::from(res.element_count), group_order(&gens).unwrap(), "{gens:?}");
    }
}

#[test]
fn generator_orders_and_restrictions() {
    let (c, f, g) = generators();
    assert_eq!(element_order(&f, 1000).unwrap(), ElementOrder::Exact(23));
    assert_eq!(element_order(&g, 1000).unwrap(), ElementOrder::Exact(5));
    assert_eq!(
        restriction_to_c(&c, &f).unwrap().to_string(),
        "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)"
    );
    assert_eq!(
        restriction_to_c(&c, &g).unwrap().to_string(),
        "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"
    );
}

#[test]
fn sampled_closure_elements_preserve_c() {
    let (c, f, g) = generators();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..10_000 {
        let len = rng.gen_range(1..80);
        let m = (0..len).fold(BitMatrix::identity(11), |acc, _| acc.mul(if rng.gen() { &f } else { &g }));
        assert!(preserves_c(&c, &m));
        assert!(restriction_to_c(&c, &m).is_some());
    }
}

#[test]
fn spin_is_monotone_in_generators() {
    let (_, f, g) = generators();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..500 {
        let v = rng.gen_range(1u16..2048);
        let alone = spin(v, &[g]).unwrap();
        let both = spin(v, &[g, f]).unwrap();
        assert!(alone <= both);
        assert!(spin(v, &[f]).unwrap() <= both);
        assert_eq!(both, 11);
    }
    // g has order 5, so a single orbit spans at most 5 dimensions
    assert!((1u16..2048).all(|v| spin(v, &[g]).unwrap() <= 5));
}
