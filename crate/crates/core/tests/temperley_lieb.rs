use hecke_grading::arith::Scalar;
use hecke_grading::temperley_lieb::{
    element_from_json, element_to_json, enumerate_matchings, jw_at_zero, jw_generic, jw_two_step, y_idempotent_check,
    Matching, Point, TLElement,
};

#[test]
fn catalan_counts() {
    let counts: Vec<usize> = (0..8).map(|n| enumerate_matchings(n, n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429]);
}

#[test]
fn jw3_at_zero() {
    // JW_3 = 1 − e1e2 − e2e1 when δ = 0
    let z = Scalar::zero(0);
    let e1 = TLElement::generator(3, 1, z.clone());
    let e2 = TLElement::generator(3, 2, z.clone());
    let want = TLElement::identity(3, z)
        .sub(&e1.multiply(&e2).unwrap())
        .unwrap()
        .sub(&e2.multiply(&e1).unwrap())
        .unwrap();
    assert_eq!(jw_at_zero(3, 0).unwrap(), want);
}

#[test]
fn projectors_are_idempotent() {
    for n in [3, 5] {
        let x = jw_at_zero(n, 0).unwrap();
        assert_eq!(x.multiply(&x).unwrap(), x);
    }
    let g = jw_generic(4).unwrap();
    assert_eq!(g.multiply(&g).unwrap(), g);
}

#[test]
fn two_step_agrees_in_small_cases() {
    for n in [1, 3, 5, 7] {
        assert_eq!(jw_two_step(n).unwrap(), jw_at_zero(n, 0).unwrap());
    }
}

#[test]
fn json_round_trip() {
    let x = jw_at_zero(5, 3).unwrap();
    assert_eq!(element_from_json(&element_to_json(&x)).unwrap(), x);
}

#[test]
fn rotation_of_a_cap() {
    use Point::{Bottom as B, Top as T};
    let e1 = Matching::generator(2, 1);
    assert_eq!(e1.rotate_ccw().unwrap(), Matching::new(2, 2, &[(B(1), T(1)), (B(2), T(2))]).unwrap());
}

#[test]
fn corner_algebra_is_dual_numbers() {
    assert!(y_idempotent_check(5).unwrap().is_dual_numbers());
}
