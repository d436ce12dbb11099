use std::sync::Arc;

use proptest::prelude::*;
use teich0::exactalg::{q, qq, Rational};
use teich0::liealg::{algebra, bch, element_from_json, element_to_json, free2, p_alg, project_tp, t_alg, t_gen, t_total, AlgKind, GroupLike, LieAlgebra, LieElement};
use teich0::perm::Perm;

fn element(alg: &Arc<LieAlgebra>) -> impl Strategy<Value = LieElement> {
    let alg = alg.clone();
    prop::collection::vec(-3i64..4, alg.dim()).prop_map(move |c| LieElement::from_coords(&alg, c.into_iter().map(q).collect()).unwrap())
}

/// Elements without a degree-1 part, so that BCH series terminate early and stay small.
fn small(alg: &Arc<LieAlgebra>) -> impl Strategy<Value = LieElement> {
    element(alg)
}

#[test]
fn free_lie_algebra_dimensions() {
    // Witt's formula for two generators
    assert_eq!(free2(7).dims(), vec![2, 1, 2, 3, 6, 9, 18]);
    assert_eq!(algebra(AlgKind::Free(3), 4).dims(), vec![3, 3, 8, 18]);
}

#[test]
fn drinfeld_kohno_dimensions() {
    for n in 2..=6 {
        assert_eq!(t_alg(n, 1).dims(), vec![n * (n - 1) / 2]);
    }
    for n in 3..=6 {
        assert_eq!(p_alg(n, 1).dims(), vec![n * (n - 3) / 2]);
    }
    // t_3 is f_2 plus a central line, p_4 is f_2
    assert_eq!(t_alg(3, 5).dims(), vec![3, 1, 2, 3, 6]);
    assert_eq!(p_alg(4, 5).dims(), free2(5).dims());
    assert_eq!(p_alg(3, 5).dims(), vec![0; 5]);
}

#[test]
fn infinitesimal_braid_relations() {
    let alg = t_alg(4, 3);
    let t = |i, j| t_gen(&alg, 4, i, j);
    assert!(t(1, 2).bracket(&t(3, 4)).unwrap().is_zero());
    assert!(t(1, 2).bracket(&t(1, 3).add(&t(2, 3)).unwrap()).unwrap().is_zero());
    assert!(!t(1, 2).bracket(&t(1, 3)).unwrap().is_zero());
    assert_eq!(t(2, 1), t(1, 2));
    for i in 0..alg.dim() {
        assert!(t_total(&alg, 4).bracket(&LieElement::basis(&alg, i)).unwrap().is_zero());
    }
}

#[test]
fn projection_kills_the_vertex_sums() {
    let alg = t_alg(4, 2);
    let mut s = LieElement::zero(&alg);
    for j in 2..=4 {
        s = s.add(&t_gen(&alg, 4, 1, j)).unwrap();
    }
    assert!(project_tp(&s, 4).unwrap().is_zero());
    assert!(!project_tp(&t_gen(&alg, 4, 1, 2), 4).unwrap().is_zero());
}

#[test]
fn bch_low_degree_terms() {
    let f = free2(3);
    let (a, b) = (LieElement::gen(&f, 0), LieElement::gen(&f, 1));
    let z = LieElement { alg: f.clone(), coords: bch(&f, &a.coords, &b.coords) };
    let ab = a.bracket(&b).unwrap();
    let want = a
        .add(&b)
        .unwrap()
        .add(&ab.scale(&qq(1, 2)))
        .unwrap()
        .add(&a.bracket(&ab).unwrap().scale(&qq(1, 12)))
        .unwrap()
        .sub(&b.bracket(&ab).unwrap().scale(&qq(1, 12)))
        .unwrap();
    assert_eq!(z, want);
}

#[test]
fn group_like_elements() {
    let alg = t_alg(3, 3);
    let x = GroupLike::exp(&t_gen(&alg, 3, 1, 2), AlgKind::T(3));
    let s = GroupLike::from_perm(AlgKind::T(3), 3, Perm::simple(3, 1));
    let y = s.mul(&x).unwrap().mul(&s.inv()).unwrap();
    assert_eq!(y, x);
    let z = GroupLike::exp(&t_gen(&alg, 3, 1, 3), AlgKind::T(3));
    let w = GroupLike::from_perm(AlgKind::T(3), 3, Perm::simple(3, 2));
    let conj = w.mul(&x).unwrap().mul(&w.inv()).unwrap();
    assert_eq!(conj, z);
    assert!(x.pow(&q(2)).unwrap().mul(&x.pow(&q(-2)).unwrap()).unwrap().is_identity());
    assert_eq!(x.pow(&qq(1, 2)).unwrap().pow(&q(2)).unwrap(), x);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_antisymmetric_and_satisfies_jacobi(x in element(&t_alg(4, 3)), y in element(&t_alg(4, 3)), z in element(&t_alg(4, 3))) {
        prop_assert_eq!(x.bracket(&y).unwrap(), y.bracket(&x).unwrap().neg());
        let j = x.bracket(&y.bracket(&z).unwrap()).unwrap()
            .add(&y.bracket(&z.bracket(&x).unwrap()).unwrap()).unwrap()
            .add(&z.bracket(&x.bracket(&y).unwrap()).unwrap()).unwrap();
        prop_assert!(j.is_zero());
    }

    #[test]
    fn element_json_round_trip(x in element(&p_alg(5, 3))) {
        let v = element_to_json(AlgKind::P(5), &x);
        let (kind, y) = element_from_json(&v).unwrap();
        prop_assert_eq!(kind, AlgKind::P(5));
        prop_assert_eq!(y, x);
    }

    #[test]
    fn bch_is_a_group_law(x in small(&free2(4)), y in small(&free2(4)), z in small(&free2(4))) {
        let f = free2(4);
        let l = bch(&f, &bch(&f, &x.coords, &y.coords), &z.coords);
        let r = bch(&f, &x.coords, &bch(&f, &y.coords, &z.coords));
        prop_assert_eq!(l, r);
        let neg: Vec<Rational> = x.coords.iter().map(|c| -c).collect();
        prop_assert!(bch(&f, &x.coords, &neg).iter().all(Rational::is_zero));
    }

    #[test]
    fn group_like_multiplication(x in element(&t_alg(3, 3)), y in element(&t_alg(3, 3)), i in 0usize..6, j in 0usize..6) {
        let ps = Perm::all(3);
        let g = GroupLike::new(AlgKind::T(3), &t_alg(3, 3), x.coords, ps[i].clone()).unwrap();
        let h = GroupLike::new(AlgKind::T(3), &t_alg(3, 3), y.coords, ps[j].clone()).unwrap();
        prop_assert!(g.mul(&g.inv()).unwrap().is_identity());
        let gh = g.mul(&h).unwrap();
        prop_assert_eq!(gh.inv(), h.inv().mul(&g.inv()).unwrap());
        prop_assert_eq!(gh.project().unwrap(), g.project().unwrap().mul(&h.project().unwrap()).unwrap());
    }
}
