use num_bigint::BigInt;
use num_rational::BigRational;

use hecke_grading::arith::{
    parse_rational, quantum_binom, quantum_int, reduce_rational_mod_p, DeltaPoly, DeltaRational, Fp, Scalar,
};

#[test]
fn quantum_integers_are_chebyshev() {
    // [n+1] = δ[n] − [n−1]
    for n in 1..15 {
        let lhs = quantum_int(n + 1);
        let rhs = DeltaPoly::delta().mul(&quantum_int(n)).sub(&quantum_int(n - 1));
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn binomials_are_polynomials() {
    assert_eq!(quantum_binom(4, 2).unwrap(), DeltaPoly::from_i64s(&[2, 0, -3, 0, 1]));
    assert_eq!(quantum_binom(6, 0).unwrap(), DeltaPoly::one());
}

#[test]
fn rational_functions_evaluate_at_zero() {
    let r = DeltaRational::new(quantum_int(6), quantum_int(2)).unwrap();
    assert_eq!(r.eval_zero().unwrap(), BigRational::from_integer(BigInt::from(3)));
    assert!(DeltaRational::new(DeltaPoly::one(), quantum_int(2)).unwrap().eval_zero().is_err());
}

#[test]
fn scalars_in_both_characteristics() {
    let half = Scalar::rational(1, 2);
    assert_eq!(half.try_add(&half).unwrap(), Scalar::one(0));
    let two = Scalar::from_int(2, 5);
    assert_eq!(two.try_inv().unwrap(), Scalar::from_int(3, 5));
    assert!(Scalar::from_int(5, 5).try_inv().is_err());
    assert_eq!(reduce_rational_mod_p(&parse_rational("3/4").unwrap(), 5).unwrap(), Fp::new(2, 5));
    assert!(reduce_rational_mod_p(&parse_rational("1/5").unwrap(), 5).is_err());
}
