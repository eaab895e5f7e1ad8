use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use super::{ArithError, DeltaPoly, DeltaRational};

/// [n] with [0] = 0, [1] = 1 and [n+1] = δ[n] − [n−1].
pub fn quantum_int(n: usize) -> DeltaPoly {
    let mut prev = DeltaPoly::zero();
    let mut cur = DeltaPoly::one();
    if n == 0 {
        return prev;
    }
    let delta = DeltaPoly::delta();
    for _ in 1..n {
        let next = delta.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// [n] at δ = 0: 0 for even n, (−1)^a for n = 2a+1.
pub fn quantum_int_at_zero(n: usize) -> i64 {
    if n % 2 == 0 {
        0
    } else if (n / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Quantum binomial, computed as a quotient in ℚ(δ) and checked to be a
/// polynomial.
pub fn quantum_binom(n: usize, k: usize) -> Result<DeltaPoly, ArithError> {
    assert!(k <= n, "quantum_binom needs k ≤ n");
    let mut num = DeltaPoly::one();
    let mut den = DeltaPoly::one();
    for i in 0..k {
        num = num.mul(&quantum_int(n - i));
        den = den.mul(&quantum_int(k - i));
    }
    let q = DeltaRational::new(num, den)?;
    q.as_poly()
        .ok_or_else(|| ArithError::NonPolynomialQuotient(format!("[{n} choose {k}] = {q}")))
}

/// The four-case value of [n choose k] at δ = 0.
pub fn binom_at_zero_formula(n: usize, k: usize) -> BigInt {
    let (a, b) = (n / 2, k / 2);
    let c = || binomial(BigInt::from(a), BigInt::from(b));
    let sign = |e: usize| if e % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    match (n % 2, k % 2) {
        (0, 0) => c(),
        (1, 0) => sign(b) * c(),
        (0, 1) => BigInt::from(0),
        _ => sign(a + b) * c(),
    }
}

/// Row n holds [n choose k] at δ = 0 for k = 0..=n.
pub fn binom_spec_table(max_n: usize) -> Result<Vec<Vec<BigInt>>, ArithError> {
    (0..=max_n)
        .map(|n| (0..=n).map(|k| quantum_binom(n, k).map(|p| p.eval_zero())).collect())
        .collect()
}
