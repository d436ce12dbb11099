use proptest::prelude::*;
use teich0::braid::BraidWord;
use teich0::freegroup::{artin_act, artin_images, FreeWord};

fn word(rank: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1..=rank, prop_oneof![Just(1i64), Just(-1i64)]), 0..12)
        .prop_map(move |l| FreeWord::reduce(rank, &l).unwrap())
}

fn braid(n: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, prop_oneof![Just(1i64), Just(-1i64)]), 0..10).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn product_of_generators(n: usize) -> FreeWord {
    FreeWord::reduce(n, &(1..=n).map(|i| (i, 1)).collect::<Vec<_>>()).unwrap()
}

#[test]
fn free_reduction() {
    let w = FreeWord::reduce(2, &[(1, 1), (2, 1), (2, -1), (1, 1)]).unwrap();
    assert_eq!(w, FreeWord::gen(2, 1).unwrap().pow(2));
    assert!(FreeWord::reduce(2, &[(3, 1)]).is_err());
    assert!(FreeWord::reduce(2, &[(1, 1), (1, -1)]).unwrap().is_identity());
}

#[test]
fn json_round_trip() {
    let w = FreeWord::from_runs(2, &[(1, 2), (2, -1)]).unwrap();
    let v = serde_json::to_value(&w).unwrap();
    assert_eq!(serde_json::from_value::<FreeWord>(v).unwrap(), w);
}

#[test]
fn artin_generator_images() {
    let s1 = BraidWord::sigma(2, 1, 1).unwrap();
    let img = artin_images(&s1);
    assert_eq!(img[0], FreeWord::reduce(2, &[(1, 1), (2, 1), (1, -1)]).unwrap());
    assert_eq!(img[1], FreeWord::gen(2, 1).unwrap());
}

proptest! {
    #[test]
    fn group_laws(a in word(3), b in word(3), c in word(3)) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert!(a.mul(&a.inv()).unwrap().is_identity());
        prop_assert_eq!(a.inv().inv(), a.clone());
        prop_assert_eq!(a.exponent_sums().len(), 3);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in word(2), b in word(2), x in word(3), y in word(3)) {
        let images = [x, y];
        let lhs = a.mul(&b).unwrap().substitute(&images).unwrap();
        let rhs = a.substitute(&images).unwrap().mul(&b.substitute(&images).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn artin_action_fixes_the_boundary_word(b in braid(4)) {
        let w = product_of_generators(4);
        prop_assert_eq!(artin_act(&b, &w).unwrap(), w);
    }

    #[test]
    fn artin_action_of_a_product(a in braid(3), b in braid(3), w in word(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(artin_act(&ab, &w).unwrap(), artin_act(&b, &artin_act(&a, &w).unwrap()).unwrap());
        prop_assert_eq!(artin_act(&a.inv(), &artin_act(&a, &w).unwrap()).unwrap(), w);
    }
}
