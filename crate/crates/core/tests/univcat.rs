use proptest::prelude::*;
use teich0::braid::BraidWord;
use teich0::univcat::{
    axioms, canonicalize, contract, contract_object, contraction_checks, hbal_lemma_checks, hom, is_identity, letters, teich_objects, umor_eq,
    BraidStructure, CatKind, ParenTree, PlanarTree, UMorphism, UObject,
};

fn catalan(n: usize) -> usize {
    (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn braid(n: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, prop_oneof![Just(1i64), Just(-1i64)]), 0..8).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn pab(n: usize) -> impl Strategy<Value = UMorphism> {
    let trees = ParenTree::all(n).len();
    (0..trees, 0..trees, braid(n)).prop_map(move |(i, j, b)| {
        let all = ParenTree::all(n);
        let seq = letters(n);
        UMorphism::new(UObject::PaB { tree: all[i].clone(), seq: seq.clone() }, UObject::PaB { tree: all[j].clone(), seq: b.perm().act_vec(&seq) }, b)
            .unwrap()
    })
}

#[test]
fn tree_counts_and_notation() {
    for n in 1..=6 {
        assert_eq!(ParenTree::all(n).len(), catalan(n - 1));
    }
    let t = ParenTree::parse_dots("(..).").unwrap();
    assert_eq!(t, ParenTree::left_comb(3));
    assert_eq!(ParenTree::from_json(&t.to_json()).unwrap(), t);
    assert_eq!(ParenTree::parse_dots(".(..)").unwrap(), ParenTree::right_comb(3));
    assert!(ParenTree::parse_dots("(..").is_err());
}

#[test]
fn planar_tree_counts() {
    // binary planar trees with n cyclically ordered leaves are triangulations of an n-gon
    for n in 3..=6 {
        let binary = PlanarTree::all(n).into_iter().filter(|t| t.splits().len() == n - 3).count();
        assert_eq!(binary, catalan(n - 2));
    }
}

#[test]
fn teichmuller_object_counts() {
    for n in 3..=5 {
        let s = letters(n);
        assert_eq!(teich_objects(&s, true).unwrap().len(), factorial(n - 1) / 2 * catalan(n - 2));
        assert_eq!(teich_objects(&s, false).unwrap().len(), factorial(n - 1) * catalan(n - 2));
    }
}

#[test]
fn braid_structure_axioms() {
    assert!(axioms::check_all(&BraidStructure, 4, true).unwrap().is_empty());
}

#[test]
fn contraction_identities() {
    for (name, pass) in contraction_checks(4, 3).into_iter().chain(hbal_lemma_checks(2, 3)) {
        assert!(pass, "{name}");
    }
}

#[test]
fn object_validation() {
    assert!(UObject::pab(ParenTree::left_comb(2), &["a", "b", "c"]).is_err());
    let v = serde_json::json!({"kind": "PaB", "tree": "(..).", "seq": ["a", "b", "c"]});
    let x: UObject = serde_json::from_value(v).unwrap();
    assert_eq!(x.kind(), CatKind::PaB);
    assert!(serde_json::from_value::<UObject>(serde_json::json!({"kind": "PaB", "tree": "(..)", "seq": ["a", "b", "c"]})).is_err());
}

#[test]
fn hom_sets() {
    let x = UObject::pab(ParenTree::left_comb(3), &["a", "b", "c"]).unwrap();
    let y = UObject::pab(ParenTree::right_comb(3), &["c", "a", "b"]).unwrap();
    let h = hom(CatKind::PaB, &x, &y).unwrap();
    assert!(!h.empty);
    assert_eq!(h.permutations, vec![vec![2, 3, 1]]);
    let r = h.representative.unwrap();
    assert_eq!(r.source, x);
    assert_eq!(r.target, y);
    let z = UObject::pab(ParenTree::right_comb(3), &["c", "a", "d"]).unwrap();
    assert!(hom(CatKind::PaB, &x, &z).unwrap().empty);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn canonicalization_is_idempotent(m in pab(4), target in prop_oneof![Just(CatKind::Cyc), Just(CatKind::Dih), Just(CatKind::PaCyc), Just(CatKind::PaDih)]) {
        let (x, _) = contract_object(target, &m.target).unwrap();
        let (c, path) = canonicalize(&x).unwrap();
        prop_assert_eq!(canonicalize(&c).unwrap().0, c.clone());
        prop_assert_eq!(path.strands(), 4);
    }

    #[test]
    fn contraction_is_a_functor(f in pab(4), b in braid(4), target in prop_oneof![Just(CatKind::Cyc), Just(CatKind::Dih), Just(CatKind::PaCyc), Just(CatKind::PaDih)]) {
        let seq = f.target.seq().to_vec();
        let tree = f.target.paren_tree().unwrap().clone();
        let g = UMorphism::new(f.target.clone(), UObject::PaB { tree, seq: b.perm().act_vec(&seq) }, b).unwrap();
        let gf = g.after(&f).unwrap();
        let lhs = contract(target, &gf).unwrap();
        let rhs = contract(target, &g).unwrap().after(&contract(target, &f).unwrap()).unwrap();
        prop_assert!(umor_eq(&lhs, &rhs, 3).unwrap());
        let id = UMorphism::identity(&f.source).unwrap();
        prop_assert!(is_identity(&contract(target, &id).unwrap(), 3).unwrap());
    }

    #[test]
    fn morphisms_have_inverses(f in pab(4)) {
        prop_assert!(is_identity(&f.inverse().after(&f).unwrap(), 3).unwrap());
    }
}
