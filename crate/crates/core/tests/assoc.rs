use teich0::assoc::{
    associator_residuals, gamma_rep, i_phi_between, i_t_phi, k_phi_between, per_degree, solve_associator, swap_ab, Associator,
};
use teich0::braid::{full_twist, half_twist, sphere_relator, BraidWord};
use teich0::exactalg::{q, qq, Rational};
use teich0::liealg::{free2, t_alg, t_total, AlgKind, GroupLike};
use teich0::univcat::ParenTree;

fn coefficient_of_ab(a: &Associator) -> Rational {
    per_degree(&free2(a.degree), &a.log_phi)[1][0].clone()
}

#[test]
fn solver_meets_all_equations() {
    for (degree, mu) in [(3, q(1)), (4, q(1)), (4, q(-2)), (5, qq(1, 3))] {
        let a = solve_associator(degree, &mu).unwrap();
        assert!(a.is_valid().unwrap(), "N={degree} mu={mu}");
        assert_eq!(coefficient_of_ab(&a), &(&mu * &mu) / &q(24));
        assert!(a.residuals().unwrap().iter().all(|(_, r)| r.iter().all(Rational::is_zero)));
    }
}

#[test]
fn perturbed_associator_fails() {
    let a = solve_associator(3, &q(1)).unwrap();
    let mut log = a.log_phi.clone();
    let f = free2(3);
    log[f.degree_range(2).start] += &q(1);
    let bad = associator_residuals(3, &q(1), &log).unwrap();
    assert!(bad.iter().any(|(_, r)| r.iter().any(|c| !c.is_zero())));
    assert!(!Associator::new(3, q(1), log).unwrap().is_valid().unwrap());
}

#[test]
fn duality_swaps_the_generators() {
    let a = solve_associator(4, &q(1)).unwrap();
    let f = free2(4);
    let swapped = swap_ab(&f, &a.log_phi);
    let sum: Vec<Rational> = teich0::liealg::bch(&f, &a.log_phi, &swapped);
    assert!(sum.iter().all(Rational::is_zero));
}

#[test]
fn json_round_trip() {
    let a = solve_associator(3, &q(2)).unwrap();
    let back = Associator::from_json(&a.to_json()).unwrap();
    assert_eq!(back.log_phi, a.log_phi);
    assert_eq!(back.mu, a.mu);
    assert!(Associator::from_json(&serde_json::json!({"mu": "1", "N": 2, "logphi": [["0"]]})).is_err());
}

#[test]
fn graded_representation_of_distinguished_braids() {
    let a = solve_associator(4, &q(1)).unwrap();
    for n in 3..=5 {
        let alg = t_alg(n, 4);
        let want = GroupLike::exp(&t_total(&alg, n), AlgKind::T(n));
        for t in ParenTree::all(n) {
            assert_eq!(i_t_phi(&t, &a, &full_twist(n)).unwrap(), want);
            assert!(gamma_rep(&t, &a, &sphere_relator(n)).unwrap().is_identity());
            assert!(gamma_rep(&t, &a, &full_twist(n)).unwrap().is_identity());
        }
    }
}

#[test]
fn representation_is_functorial() {
    let a = solve_associator(3, &q(1)).unwrap();
    let (l, r) = (ParenTree::left_comb(4), ParenTree::right_comb(4));
    let b1 = BraidWord::new(4, vec![(1, 1), (3, -1), (2, 1)]).unwrap();
    let b2 = half_twist(4);
    let m = ParenTree::all(4)[2].clone();
    let composite = i_phi_between(&l, &r, &a, &b1.mul(&b2).unwrap()).unwrap();
    // b1.mul(b2) runs b2 first
    let first = i_phi_between(&l, &m, &a, &b2).unwrap();
    let second = i_phi_between(&m, &r, &a, &b1).unwrap();
    assert_eq!(composite, second.mul(&first).unwrap());
    let projected = k_phi_between(&l, &r, &a, &b1.mul(&b2).unwrap()).unwrap();
    assert_eq!(projected, composite.project().unwrap());
}
