use m23_core::poly::{irreducibility_witness, Gf2Poly, Irreducibility};
use m23_core::tables::{paper_rows, TableId};
use m23_core::{FieldElement, FieldSpec};
use proptest::prelude::*;

fn f() -> FieldSpec {
    FieldSpec::paper()
}

fn elem() -> impl Strategy<Value = FieldElement> {
    (0u32..2048).prop_map(|b| f().element(b).unwrap())
}

/// Schoolbook product on coefficient vectors, reduced by long division.
fn oracle_mul(a: u32, b: u32) -> u32 {
    let mut prod = [0u8; 21];
    for i in 0..11 {
        for j in 0..11 {
            prod[i + j] ^= (((a >> i) & 1) & ((b >> j) & 1)) as u8;
        }
    }
    // x^11 = x^2 + 1
    for d in (11..21).rev() {
        if prod[d] == 1 {
            prod[d] = 0;
            prod[d - 9] ^= 1;
            prod[d - 11] ^= 1;
        }
    }
    prod[..11].iter().enumerate().map(|(i, &c)| u32::from(c) << i).sum()
}

/// Remainder of `num` by `den` over GF(2), coefficients low degree first.
fn long_division_rem(num: &[u8], den: &[u8]) -> Vec<u8> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    for top in (dd..r.len()).rev() {
        if r[top] == 1 {
            for (k, &c) in den.iter().enumerate() {
                r[top - dd + k] ^= c;
            }
        }
    }
    r.truncate(dd);
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn additive_laws(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert!((a + a).is_zero());
        prop_assert_eq!(a + f().zero(), a);
    }

    #[test]
    fn multiplicative_laws(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * f().one(), a);
    }

    #[test]
    fn mul_matches_schoolbook(a in 0u32..2048, b in 0u32..2048) {
        let got = (f().element(a).unwrap() * f().element(b).unwrap()).bits();
        prop_assert_eq!(got, oracle_mul(a, b));
    }

    #[test]
    fn binary_string_round_trip(a in elem()) {
        prop_assert_eq!(f().parse_binary_string(&a.to_binary_string()).unwrap(), a);
    }
}

#[test]
fn doubling_is_zero_everywhere() {
    assert!(f().elements().all(|a| (a + a).is_zero()));
    assert_eq!(f().elements().count(), 2048);
}

#[test]
fn inverses_exhaustive() {
    for a in f().elements().filter(|a| !a.is_zero()) {
        assert!((a * a.inv().unwrap()).is_one(), "{a:?}");
    }
    assert!(f().zero().inv().is_err());
}

#[test]
fn fermat_exhaustive() {
    for a in f().elements().filter(|a| !a.is_zero()) {
        assert_eq!(a.pow(2047).unwrap(), f().one());
        assert_eq!(a * a.pow(2046).unwrap(), f().one());
        assert_eq!(a.pow(2048).unwrap(), a);
    }
}

#[test]
fn log_table_is_a_bijection() {
    let t = f().build_log_table().unwrap();
    assert_eq!(t.len(), 2047);
    let mut seen = std::collections::HashSet::new();
    for k in 0..2047 {
        let e = t.exp(k);
        assert!(seen.insert(e.bits()));
        assert_eq!(t.log(e), Some(k as u32));
    }
    for a in f().elements().filter(|a| !a.is_zero()) {
        assert_eq!(t.exp(u64::from(t.log(a).unwrap())), a);
    }
    assert_eq!(t.log(f().zero()), None);
}

#[test]
fn x_powers_match_published_table_by_repeated_multiplication() {
    let rows = paper_rows(TableId::XPowers);
    assert_eq!(rows.len(), 90);
    let mut cur = f().one();
    for _ in 0..11 {
        cur *= f().x();
    }
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row[0], format!("X^{}", i + 11));
        assert_eq!(cur.to_binary_string(), row[2], "X^{}", i + 11);
        assert_eq!(f().x_pow(i as u64 + 11), cur);
        cur *= f().x();
    }
}

#[test]
fn reducible_trinomial_factor_checked_by_long_division() {
    let p = Gf2Poly::from_exponents(&[11, 1, 0]);
    let Irreducibility::Factor(q) = irreducibility_witness(p) else {
        panic!("x^11+x+1 reported irreducible");
    };
    assert_eq!(q.to_string(), "x^2+x+1");
    let num: Vec<u8> = (0..12).map(|i| ((p.0 >> i) & 1) as u8).collect();
    assert_eq!(long_division_rem(&num, &[1, 1, 1]), vec![0, 0]);
    // and the modulus leaves a remainder for every quadratic and cubic
    let m: Vec<u8> = (0..12).map(|i| ((FieldSpec::PAPER_MODULUS.0 >> i) & 1) as u8).collect();
    for d in 4u8..16 {
        let den: Vec<u8> = (0..=(7 - d.leading_zeros() as usize)).map(|i| (d >> i) & 1).collect();
        assert!(long_division_rem(&m, &den).contains(&1), "divisible by {d:b}");
    }
    assert_eq!(irreducibility_witness(FieldSpec::PAPER_MODULUS), Irreducibility::Irreducible);
}

#[test]
fn primitive_element() {
    assert!(f().verify_primitive());
    assert!(!f().x_pow(23).is_one());
    assert!(!f().x_pow(89).is_one());
}
