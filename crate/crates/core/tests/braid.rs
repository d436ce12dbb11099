use proptest::prelude::*;
use teich0::braid::{
    braid_eq, eq_mod_center, full_twist, half_twist, positive_lift, pure_gen, rho, special, sphere_relator, star_involution, BraidWord, SpecialKind,
};
use teich0::perm::Perm;

fn braid(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, prop_oneof![Just(1i64), Just(-1i64)]), 0..max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn s(n: usize, l: &[(usize, i64)]) -> BraidWord {
    BraidWord::new(n, l.to_vec()).unwrap()
}

#[test]
fn braid_relations() {
    assert!(braid_eq(&s(3, &[(1, 1), (2, 1), (1, 1)]), &s(3, &[(2, 1), (1, 1), (2, 1)])).unwrap());
    assert!(braid_eq(&s(4, &[(1, 1), (3, 1)]), &s(4, &[(3, 1), (1, 1)])).unwrap());
    assert!(!braid_eq(&s(3, &[(1, 1), (2, 1)]), &s(3, &[(2, 1), (1, 1)])).unwrap());
    assert!(!braid_eq(&s(2, &[(1, 1), (1, 1)]), &BraidWord::identity(2)).unwrap());
}

#[test]
fn invalid_words_are_rejected() {
    assert!(BraidWord::new(3, vec![(3, 1)]).is_err());
    assert!(BraidWord::new(3, vec![(0, 1)]).is_err());
    assert!(BraidWord::new(3, vec![(1, 2)]).is_err());
    assert!(braid_eq(&BraidWord::identity(2), &BraidWord::identity(3)).is_err());
}

#[test]
fn distinguished_braids() {
    for n in 2..=6 {
        assert!(braid_eq(&half_twist(n).pow(2), &full_twist(n)).unwrap());
        assert!(braid_eq(&rho(n).pow(n as i64), &full_twist(n)).unwrap());
        assert!(eq_mod_center(&full_twist(n), &BraidWord::identity(n)).unwrap());
        assert!(half_twist(n).perm().images().iter().rev().copied().eq(0..n));
    }
    // the sphere relator is pure and its image generates with z_n the kernel of B_n -> Gamma_{0,n}
    for n in 3..=5 {
        assert!(sphere_relator(n).perm().is_identity());
        assert!(!braid_eq(&sphere_relator(n), &BraidWord::identity(n)).unwrap());
    }
    assert!(pure_gen(4, 1, 3).unwrap().perm().is_identity());
    assert!(pure_gen(4, 3, 3).is_err());
    let ft = special(SpecialKind::parse("full_twist", &[]).unwrap(), 4).unwrap();
    assert!(braid_eq(&ft, &full_twist(4)).unwrap());
    assert!(SpecialKind::parse("no_such", &[]).is_err());
}

#[test]
fn positive_lift_realizes_permutations() {
    for p in Perm::all(4) {
        let b = positive_lift(&p);
        assert_eq!(b.perm(), p);
        assert!(b.letters().iter().all(|l| l.1 == 1));
    }
}

#[test]
fn json_round_trip() {
    let b = s(3, &[(1, 1), (2, -1)]);
    let v = serde_json::to_value(&b).unwrap();
    assert_eq!(v, serde_json::json!({"strands": 3, "letters": [[1, 1], [2, -1]]}));
    assert_eq!(serde_json::from_value::<BraidWord>(v).unwrap(), b);
}

proptest! {
    #[test]
    fn group_laws(a in braid(4, 8), b in braid(4, 8), c in braid(4, 8)) {
        prop_assert!(braid_eq(&a.mul(&a.inv()).unwrap(), &BraidWord::identity(4)).unwrap());
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert!(braid_eq(&l, &r).unwrap());
    }

    #[test]
    fn equal_braids_have_equal_permutations(a in braid(4, 10)) {
        let conj = a.mul(&s(4, &[(1, 1), (2, 1), (1, 1)])).unwrap().mul(&s(4, &[(2, -1), (1, -1), (2, -1)])).unwrap();
        prop_assert!(braid_eq(&a, &conj).unwrap());
        prop_assert_eq!(a.perm(), conj.perm());
    }

    #[test]
    fn permutation_is_multiplicative(a in braid(5, 8), b in braid(5, 8)) {
        let ab = a.mul(&b).unwrap().perm();
        prop_assert_eq!(ab, a.perm().compose(&b.perm()));
    }

    #[test]
    fn full_twist_is_central(a in braid(4, 10)) {
        let z = full_twist(4);
        prop_assert!(braid_eq(&z.mul(&a).unwrap(), &a.mul(&z).unwrap()).unwrap());
        prop_assert!(eq_mod_center(&a.mul(&z).unwrap(), &a).unwrap());
    }

    #[test]
    fn star_is_an_involutive_automorphism(a in braid(5, 8), b in braid(5, 8)) {
        prop_assert_eq!(star_involution(&star_involution(&a)), a.clone());
        let lhs = star_involution(&a.mul(&b).unwrap());
        let rhs = star_involution(&a).mul(&star_involution(&b)).unwrap();
        prop_assert!(braid_eq(&lhs, &rhs).unwrap());
        // conjugation by the half twist
        let h = half_twist(5);
        prop_assert!(braid_eq(&h.mul(&a).unwrap().mul(&h.inv()).unwrap(), &star_involution(&a)).unwrap());
    }
}
