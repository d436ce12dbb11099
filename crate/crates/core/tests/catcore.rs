use proptest::prelude::*;
use teich0::assoc::dih_groupoid;
use teich0::braid::BraidWord;
use teich0::catcore::{check_category_laws, cyc_groupoid, CatMorphism, Groupoid, SmallCategory};
use teich0::univcat::letters;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn braid(n: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, prop_oneof![Just(1i64), Just(-1i64)]), 0..8).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn morphism(src: &[String], b: BraidWord) -> CatMorphism<Vec<String>, BraidWord> {
    CatMorphism::new(src.to_vec(), b.perm().act_vec(src), b)
}

#[test]
fn orbit_counts() {
    for n in 3..=5 {
        assert_eq!(cyc_groupoid(letters(n)).unwrap().objects().len(), factorial(n - 1), "Cyc_{n}");
        assert_eq!(dih_groupoid(letters(n), 2).unwrap().objects().len(), factorial(n - 1) / 2, "Dih_{n}");
    }
}

#[test]
fn objects_are_canonical_and_orbits_have_group_size() {
    let q = cyc_groupoid(letters(4)).unwrap();
    for x in q.objects() {
        assert!(q.is_canonical(&x));
        assert_eq!(q.orbit(&x).len(), 4);
        assert!(q.stabilizer(&x).len() == 1);
    }
    let d = dih_groupoid(letters(4), 2).unwrap();
    for x in d.objects() {
        assert_eq!(d.orbit(&x).len(), 8);
    }
}

#[test]
fn repeated_letters_are_rejected() {
    assert!(cyc_groupoid(vec!["a".into(), "a".into(), "b".into()]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn projection_lands_in_the_quotient(b in braid(4), k in 0usize..24) {
        let q = cyc_groupoid(letters(4)).unwrap();
        let all = teich0::perm::Perm::all(4);
        let src = all[k].act_vec(&letters(4));
        let m = q.project(&morphism(&src, b)).unwrap();
        prop_assert!(q.is_morphism(&m).unwrap());
        prop_assert!(q.is_canonical(&m.source) && q.is_canonical(&m.target));
        prop_assert!(q.mor_eq(&q.project(&m).unwrap(), &m).unwrap());
    }

    #[test]
    fn quotient_category_laws(a in braid(3), b in braid(3), c in braid(3)) {
        let q = cyc_groupoid(letters(3)).unwrap();
        let x = q.objects()[0].clone();
        let f = q.project(&morphism(&x, a)).unwrap();
        let g = q.project(&morphism(&f.target, b)).unwrap();
        let h = q.project(&morphism(&g.target, c)).unwrap();
        prop_assert_eq!(check_category_laws(&q, &[f.clone(), g.clone(), h.clone()]).unwrap(), None);
        let hg_f = q.compose(&q.compose(&h, &g).unwrap(), &f).unwrap();
        let h_gf = q.compose(&h, &q.compose(&g, &f).unwrap()).unwrap();
        prop_assert!(q.mor_eq(&hg_f, &h_gf).unwrap());
        let inv = q.inverse(&f).unwrap();
        prop_assert!(q.mor_eq(&q.compose(&inv, &f).unwrap(), &q.identity(&f.source)).unwrap());
    }
}
