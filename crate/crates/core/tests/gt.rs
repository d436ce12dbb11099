use proptest::prelude::*;
use teich0::assoc::solve_associator;
use teich0::braid::BraidWord;
use teich0::exactalg::{q, qq, Rational};
use teich0::freegroup::FreeWord;
use teich0::gt::{
    check_grt, check_gt_relations, grt_act_on_associator, grt_inv, grt_mul, gt_act_on_associator, gt_mul, i_endofunctor, i_phi, solve_gt, GrtElement,
    GtElement,
};
use teich0::univcat::{letters, umor_eq, ParenTree, UMorphism, UObject};

fn unit(l: i64) -> GtElement {
    GtElement::discrete(l, FreeWord::identity(2)).unwrap()
}

fn pab(n: usize) -> impl Strategy<Value = UMorphism> {
    let trees = ParenTree::all(n).len();
    let letters_ = prop::collection::vec((1..n, prop_oneof![Just(1i64), Just(-1i64)]), 0..8);
    (0..trees, 0..trees, letters_).prop_map(move |(i, j, l)| {
        let all = ParenTree::all(n);
        let b = BraidWord::new(n, l).unwrap();
        let seq = letters(n);
        UMorphism::new(UObject::PaB { tree: all[i].clone(), seq: seq.clone() }, UObject::PaB { tree: all[j].clone(), seq: b.perm().act_vec(&seq) }, b)
            .unwrap()
    })
}

#[test]
fn discrete_relations() {
    assert!(check_gt_relations(&unit(1)).unwrap().all());
    assert!(check_gt_relations(&unit(-1)).unwrap().all());
    let r = check_gt_relations(&unit(3)).unwrap();
    assert!(!r.hexagon);
    assert!(!r.all());
    assert!(check_gt_relations(&unit(2)).is_err());
    assert!(GtElement::discrete(1, FreeWord::identity(3)).is_err());
}

#[test]
fn solved_pro_elements() {
    for (lambda, seed) in [(q(3), 0), (qq(-1, 2), 1), (q(1), 2)] {
        let e = solve_gt(&lambda, 3, seed).unwrap();
        assert_eq!(e.lambda(), lambda);
        assert!(check_gt_relations(&e).unwrap().all());
        let back = GtElement::from_json(&e.to_json(), 3).unwrap();
        assert_eq!(back, e);
    }
    assert!(solve_gt(&q(0), 3, 0).is_err());
}

#[test]
fn semigroup_law() {
    let es: Vec<_> = [(q(3), 5), (qq(1, 2), 6), (q(-1), 7)].iter().map(|(l, s)| solve_gt(l, 3, *s).unwrap()).collect();
    let id = GtElement::identity_pro(3);
    for e in &es {
        assert_eq!(gt_mul(e, &id).unwrap(), *e);
        assert_eq!(gt_mul(&id, e).unwrap(), *e);
    }
    let l = gt_mul(&gt_mul(&es[0], &es[1]).unwrap(), &es[2]).unwrap();
    let r = gt_mul(&es[0], &gt_mul(&es[1], &es[2]).unwrap()).unwrap();
    assert_eq!(l, r);
    assert_eq!(gt_mul(&es[0], &es[1]).unwrap().lambda(), qq(3, 2));
}

#[test]
fn action_on_associators_and_grt() {
    let a = solve_associator(3, &q(1)).unwrap();
    let e = solve_gt(&q(3), 3, 9).unwrap();
    let b = gt_act_on_associator(&e, &a).unwrap();
    assert!(b.is_valid().unwrap());
    assert_eq!(b.mu, q(3));
    let h = i_phi(&e, &a).unwrap();
    assert!(check_grt(&h).unwrap().all());
    assert_eq!(h.c, q(3));
    assert_eq!(grt_act_on_associator(&a, &h).unwrap(), b);
    let hi = grt_inv(&h).unwrap();
    assert!(grt_mul(&h, &hi).unwrap().is_identity());
    assert!(grt_mul(&hi, &h).unwrap().is_identity());
    assert_eq!(grt_mul(&h, &GrtElement::identity(3)).unwrap(), h);
    assert_eq!(GrtElement::from_json(&h.to_json(), 3).unwrap(), h);
}

#[test]
fn grt_relations_reject_a_perturbation() {
    let a = solve_associator(3, &q(1)).unwrap();
    let h = i_phi(&solve_gt(&q(3), 3, 4).unwrap(), &a).unwrap();
    let mut log = h.log_g.clone();
    let k = log.len() - 1;
    log[k] += &Rational::one();
    let bad = GrtElement::new(3, log, h.c.clone()).unwrap();
    assert!(!check_grt(&bad).unwrap().all());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn discrete_action_is_an_anti_homomorphism(m in pab(4), l1 in prop_oneof![Just(1i64), Just(-1i64)], l2 in prop_oneof![Just(1i64), Just(-1i64)]) {
        let (e1, e2) = (unit(l1), unit(l2));
        let lhs = i_endofunctor(&e2, &i_endofunctor(&e1, &m).unwrap()).unwrap();
        let rhs = i_endofunctor(&gt_mul(&e1, &e2).unwrap(), &m).unwrap();
        prop_assert!(umor_eq(&lhs, &rhs, 3).unwrap());
    }

    #[test]
    fn identity_element_acts_trivially(m in pab(4)) {
        prop_assert!(umor_eq(&i_endofunctor(&unit(1), &m).unwrap(), &m, 3).unwrap());
    }
}
