use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use matlis_core::cech::equivariance_check;
use matlis_core::independence::{delta, independence_certificate, make_d, shift_equiv_window, verify_witness};
use matlis_core::sample::random_element;
use matlis_core::suite::{
    all_shapes, associativity_check, bilinearity_check, random_coefficients, run_suite, Suite,
};
use matlis_core::{
    linear_combine, ring_act, serialize_element, Element, Field, ModuleShape, ShiftOutcome, TruncationBox,
};

fn shape_strategy() -> impl Strategy<Value = ModuleShape> {
    (1usize..=3).prop_flat_map(|n| {
        let shapes = all_shapes(n);
        (0..shapes.len()).prop_map(move |k| shapes[k].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_action_is_associative_and_unital(seed in any::<u64>(), shape in shape_strategy()) {
        let r = associativity_check(seed, &shape, 5);
        prop_assert!(r.passed, "{:?}", r.first_failure);
    }

    #[test]
    fn ring_action_is_bilinear(seed in any::<u64>(), shape in shape_strategy()) {
        let r = bilinearity_check(seed, &shape, 5);
        prop_assert!(r.passed, "{:?}", r.first_failure);
    }

    #[test]
    fn shift_relation_is_symmetric(n1 in 1u32..=3, n2 in 1u32..=3, s1 in 0u64..4, s2 in 0u64..4, bound in 0u64..=5) {
        let seq = |n: u32, s: u64| delta(&make_d(n, 14, None, Field::Rational).unwrap(), s, 14).unwrap();
        let (a, b) = (seq(n1, s1), seq(n2, s2));
        match shift_equiv_window(&a, &b, bound) {
            ShiftOutcome::Witness(w) => {
                prop_assert!(verify_witness(&a, &b, w));
                prop_assert!(verify_witness(&b, &a, w.reversed()));
            }
            ShiftOutcome::NoWitness => prop_assert_eq!(shift_equiv_window(&b, &a, bound), ShiftOutcome::NoWitness),
            ShiftOutcome::Inconclusive => {}
        }
        prop_assert!(matches!(shift_equiv_window(&a, &a, bound), ShiftOutcome::Witness(_)));
    }

    /// Multiplying every coefficient by a nonzero `s` keeps the certificate:
    /// `s * sum r_j d_j` is again a nonzero combination.
    #[test]
    fn certificates_survive_common_multipliers(seed in any::<u64>(), sx in 0i64..=1, sy in 0i64..=1) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r_list = random_coefficients(&mut rng, 3);
        let Ok(base) = independence_certificate(&r_list, 30) else { return Ok(()) };
        prop_assume!(base.m0 >= 2);
        let f = Field::Rational;
        let s = Element::monomial(f, ModuleShape::ring(2), TruncationBox::uniform(2, 1),
            matlis_core::Exponent(vec![sx, sy]), f.one()).unwrap();
        let scaled: Vec<Element> = r_list
            .iter()
            .map(|r| ring_act(&s, &r.rebox(TruncationBox::uniform(2, 4)).unwrap()).unwrap())
            .collect();
        let c = match independence_certificate(&scaled, 30) {
            Ok(c) => c,
            Err(matlis_core::IndependenceError::Inconclusive { required_lmax: Some(_), .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert!(c.sum_nonzero);
        prop_assert_eq!((c.a, c.b), (base.a + sx as u64, base.b + sy as u64));
    }

    #[test]
    fn linear_combination_of_element_with_itself(seed in any::<u64>(), shape in shape_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Field::Rational;
        let b = TruncationBox::uniform(shape.arity(), 3);
        let e = random_element(&mut rng, f, &shape, &b, 6);
        let z = linear_combine(&[(f.one(), &e), (-&f.one(), &e)]).unwrap();
        prop_assert!(z.is_zero());
        prop_assert_eq!(serialize_element(&z), "0");
    }
}

#[test]
fn equivariance_up_to_four_variables() {
    for n in 1..=4 {
        for i in 1..=n {
            let r = equivariance_check(n, i, 4).unwrap();
            assert!(r.passed(), "n = {n}, i = {i}: {:?}", r.mismatches.first());
        }
    }
}

#[test]
fn duality_and_cech_suites_pass() {
    for suite in [Suite::Cech, Suite::Duality, Suite::Independence] {
        let r = run_suite(suite, 1);
        assert!(r.passed, "{suite}: {:?}", r.invariants.iter().find(|i| !i.passed));
    }
}
