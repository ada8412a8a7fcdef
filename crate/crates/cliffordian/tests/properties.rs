//! Randomized algebraic invariants of the exact layer.

use num_traits::{One, Zero};
use proptest::prelude::*;

use cliffordian::algebra::{AlgebraConfig, Blade, Multivector, Paravector};
use cliffordian::polycalc::MvPolynomial;
use cliffordian::Scalar;

fn rational() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Scalar::new(n.into(), d.into()))
}

fn multivector(m: u32) -> impl Strategy<Value = Multivector> {
    let config = AlgebraConfig::new(m).unwrap();
    let blade_count = config.blade_count() as u32;
    prop::collection::vec((0..blade_count, rational()), 0..4).prop_map(move |terms| {
        let mut mv = Multivector::zero(config);
        for (mask, c) in terms {
            let gens: Vec<u32> = (0..config.generator_count())
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| b + 1)
                .collect();
            let blade = Blade::from_generators(&config, &gens).unwrap();
            mv = &mv + &Multivector::from_blade(config, blade, c);
        }
        mv
    })
}

fn paravector(m: u32) -> impl Strategy<Value = Paravector> {
    let config = AlgebraConfig::new(m).unwrap();
    prop::collection::vec(rational(), config.coord_count())
        .prop_map(move |coords| Paravector::new(config, coords).unwrap())
}

proptest! {
    #[test]
    fn product_is_associative(a in multivector(1), b in multivector(1), c in multivector(1)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_is_associative_m2(a in multivector(2), b in multivector(2), c in multivector(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_distributes(a in multivector(1), b in multivector(1), c in multivector(1)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn conjugation_realizes_the_norm(x in paravector(1)) {
        let norm = Multivector::scalar(x.config(), x.norm_sq());
        let xm = x.to_multivector();
        let conj = x.conjugate().to_multivector();
        prop_assert_eq!(&xm * &conj, norm.clone());
        prop_assert_eq!(&conj * &xm, norm);
    }

    #[test]
    fn paravector_products_stay_low_grade(x in paravector(1), z in paravector(1)) {
        let prod = &x.to_multivector() * &z.to_multivector();
        prop_assert!(prod.grades().iter().all(|&g| g <= 2));
    }

    #[test]
    fn inverse_multiplies_to_one(x in paravector(1)) {
        prop_assume!(!x.is_zero());
        let inv = x.inverse().unwrap();
        let one = Multivector::scalar(x.config(), Scalar::one());
        prop_assert_eq!(&x.to_multivector() * &inv.to_multivector(), one);
    }

    #[test]
    fn multivector_json_round_trip(mv in multivector(1)) {
        let back = Multivector::from_json(mv.config(), &mv.to_json()).unwrap();
        prop_assert_eq!(mv, back);
    }

    #[test]
    fn paravector_json_round_trip(x in paravector(2)) {
        let back = Paravector::from_json(x.config(), &x.to_json()).unwrap();
        prop_assert_eq!(x, back);
    }

    #[test]
    fn norm_positive_definite(x in paravector(1)) {
        let n = x.norm_sq();
        prop_assert!(n >= Scalar::zero());
        prop_assert_eq!(n.is_zero(), x.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_partials_commute(
        terms in prop::collection::vec(
            (prop::collection::vec(0u16..3, 4), 0u32..8, rational()),
            1..5,
        )
    ) {
        let config = AlgebraConfig::new(1).unwrap();
        let mut p = MvPolynomial::zero(config);
        for (exps, mask, c) in terms {
            let gens: Vec<u32> = (0..config.generator_count())
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| b + 1)
                .collect();
            let blade = Blade::from_generators(&config, &gens).unwrap();
            let mono = MvPolynomial::monomial(config, exps, Multivector::from_blade(config, blade, c));
            p = &p + &mono;
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                let a = p.partial(i).unwrap().partial(j).unwrap();
                let b = p.partial(j).unwrap().partial(i).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }
}
