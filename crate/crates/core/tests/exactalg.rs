use proptest::prelude::*;
use teich0::exactalg::{mat_kernel, mat_solve, q, qq, RatMatrix, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| qq(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(prop::collection::vec(-4i64..5, cols), rows)
        .prop_map(|rows| RatMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect()).unwrap())
}

#[test]
fn reduced_form_and_display() {
    assert_eq!(qq(6, -4), qq(-3, 2));
    assert_eq!(qq(6, -4).to_string(), "-3/2");
    assert_eq!(q(7).to_string(), "7");
    assert!(Rational::new(1, 0).is_err());
    assert!(Rational::zero().inv().is_err());
    assert_eq!("-10/4".parse::<Rational>().unwrap(), qq(-5, 2));
    assert!("1/0".parse::<Rational>().is_err());
    assert!("x".parse::<Rational>().is_err());
}

#[test]
fn serde_uses_strings() {
    let v = serde_json::to_value(qq(1, 24)).unwrap();
    assert_eq!(v, serde_json::json!("1/24"));
    let back: Rational = serde_json::from_value(v).unwrap();
    assert_eq!(back, qq(1, 24));
}

#[test]
fn kernel_of_known_matrix() {
    let m = RatMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]).unwrap();
    assert_eq!(m.rank(), 1);
    let k = mat_kernel(&m);
    assert_eq!(k.len(), 2);
    for v in &k {
        assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
    }
}

#[test]
fn inconsistent_system_is_rejected() {
    let m = RatMatrix::from_i64(&[&[1, 1], &[1, 1]]).unwrap();
    assert!(mat_solve(&m, &[q(1), q(2)]).is_err());
    assert_eq!(mat_solve(&m, &[q(3), q(3)]).map(|x| &x[0] + &x[1]).unwrap(), q(3));
}

proptest! {
    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Rational::one());
        }
    }

    #[test]
    fn display_parse_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn rank_nullity(m in matrix(4, 6)) {
        let k = mat_kernel(&m);
        prop_assert_eq!(m.rank() + k.len(), 6);
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn solve_recovers_a_consistent_right_hand_side(m in matrix(5, 4), x in prop::collection::vec(-5i64..6, 4)) {
        let x: Vec<Rational> = x.into_iter().map(q).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = mat_solve(&m, &b).unwrap();
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }
}
