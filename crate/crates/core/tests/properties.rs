use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use qrgp_core::cycint::CycInt;
use qrgp_core::gf::FieldCtx;
use qrgp_core::poly::Poly;

fn cyc(ell: u64, coeffs: &[i64]) -> CycInt {
    CycInt::from_coeffs(ell, coeffs.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
}

fn cyc_strategy(ell: u64) -> impl Strategy<Value = CycInt> {
    prop::collection::vec(-20i64..20, (ell - 1) as usize).prop_map(move |c| cyc(ell, &c))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn cycint_ring_axioms(a in cyc_strategy(7), b in cyc_strategy(7), c in cyc_strategy(7)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn cycint_norm_is_multiplicative(a in cyc_strategy(5), b in cyc_strategy(5)) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn cycint_exact_division_round_trip(a in cyc_strategy(5), b in cyc_strategy(5)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn poly_divmod(a in prop::collection::vec(0i64..5, 0..12), b in prop::collection::vec(0i64..5, 1..6)) {
        let k = Arc::new(FieldCtx::prime(5).unwrap());
        let a = Poly::from_ints(&k, &a);
        let b = Poly::from_ints(&k, &b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn extension_field_axioms(x in 0u64..81, y in 0u64..81, z in 0u64..81) {
        let k = FieldCtx::build(3, 4).unwrap();
        let (x, y, z) = (k.from_index(x).unwrap(), k.from_index(y).unwrap(), k.from_index(z).unwrap());
        prop_assert_eq!(k.mul(x, k.add(y, z)), k.add(k.mul(x, y), k.mul(x, z)));
        prop_assert_eq!(k.mul(k.mul(x, y), z), k.mul(x, k.mul(y, z)));
        prop_assert_eq!(k.trace(k.add(x, y)), k.add(k.trace(x), k.trace(y)));
        if !x.is_zero() {
            prop_assert_eq!(k.mul(x, k.inv(x).unwrap()), k.one());
        }
    }
}
