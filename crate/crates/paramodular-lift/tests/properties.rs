//! Property tests for the symbolic character algebra and the serialized
//! forms of the core types.

use num::rational::Ratio;
use proptest::prelude::*;

use paramodular_lift::local_reps::{
    char_ratio_nu_exponent, conductor_gl2, FiniteLabel, GL2LocalRep, Nu, OrderHint,
    PadicCharacter,
};
use paramodular_lift::theta_resolver::Level;

fn nu_strategy() -> impl Strategy<Value = Nu> {
    (-8i64..=8, 1i64..=4).prop_map(|(n, d)| Ratio::new(n, d))
}

fn char_strategy() -> impl Strategy<Value = PadicCharacter> {
    let prime = prop_oneof![Just(2u64), Just(3), Just(5), Just(7)];
    (prime, nu_strategy(), 0u32..=3, 0usize..6).prop_map(|(p, s, a, kind)| {
        let (cond, label, order) = match kind {
            0 => (0, FiniteLabel::Trivial, OrderHint::Trivial),
            1 => (0, FiniteLabel::UnramQuad, OrderHint::Quadratic),
            2 => (
                a.max(1),
                FiniteLabel::Opaque { name: "eta".into(), inverted: false },
                OrderHint::Quadratic,
            ),
            3 => (
                a.max(1),
                FiniteLabel::Opaque { name: "theta".into(), inverted: false },
                OrderHint::Quadratic,
            ),
            4 => (a, FiniteLabel::Opaque { name: "alpha".into(), inverted: false }, OrderHint::Unknown),
            _ => (a, FiniteLabel::Opaque { name: "beta".into(), inverted: true }, OrderHint::Unknown),
        };
        PadicCharacter::new(p, s, cond, label, order).unwrap()
    })
}

proptest! {
    #[test]
    fn inverse_is_involutive(chi in char_strategy()) {
        prop_assert_eq!(chi.inverse().inverse(), chi);
    }

    #[test]
    fn inverse_negates_the_exponent_and_keeps_the_conductor(chi in char_strategy()) {
        let inv = chi.inverse();
        prop_assert_eq!(inv.nu_exp(), -chi.nu_exp());
        prop_assert_eq!(inv.conductor_exp(), chi.conductor_exp());
    }

    #[test]
    fn ratio_is_antisymmetric(a in char_strategy(), b in char_strategy()) {
        match (char_ratio_nu_exponent(&a, &b), char_ratio_nu_exponent(&b, &a)) {
            (Some(s), Some(t)) => prop_assert_eq!(s, -t),
            (None, None) => {}
            (x, y) => prop_assert!(false, "asymmetric decidability: {:?} vs {:?}", x, y),
        }
    }

    #[test]
    fn ratio_with_self_is_zero(chi in char_strategy()) {
        prop_assert_eq!(char_ratio_nu_exponent(&chi, &chi), Some(Ratio::new(0, 1)));
    }

    #[test]
    fn multiplying_by_the_trivial_character_is_the_identity(chi in char_strategy()) {
        let one = PadicCharacter::trivial(chi.prime());
        prop_assert_eq!(chi.mul(&one).unwrap(), chi.clone());
        prop_assert_eq!(one.mul(&chi).unwrap(), chi);
    }

    #[test]
    fn a_character_times_its_inverse_is_provably_trivial(chi in char_strategy()) {
        prop_assert!(chi.product_is_trivial(&chi.inverse()));
        let prod = chi.mul(&chi.inverse()).unwrap();
        prop_assert_eq!(prod.conductor_exp(), 0);
        prop_assert_eq!(prod.nu_exp(), Ratio::new(0, 1));
    }

    #[test]
    fn principal_series_conductor_is_the_sum(chi in char_strategy()) {
        let rep = GL2LocalRep::principal_series_embedded(chi.clone(), chi.inverse()).unwrap();
        // Reducible induced data has no newform conductor; skip it.
        prop_assume!(rep.borel_inducing_ratio_degenerate() != Some(true));
        prop_assert_eq!(conductor_gl2(&rep).unwrap(), 2 * chi.conductor_exp());
    }

    #[test]
    fn rep_serialization_round_trips(chi in char_strategy()) {
        let rep = GL2LocalRep::principal_series_embedded(chi.clone(), chi.inverse()).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: GL2LocalRep = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(paramodular_lift::local_reps::revalidate(&back).unwrap(), rep);
    }

    #[test]
    fn level_serialization_round_trips(n in 0u32..=12, kind in 0usize..3) {
        let level = match kind {
            0 => Level::Exact(n),
            1 => Level::LowerBound(n),
            _ => Level::NotParamodular,
        };
        let json = serde_json::to_string(&level).unwrap();
        let back: Level = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, level);
    }
}
