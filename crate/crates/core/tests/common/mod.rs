//! Reference computations that share no code with the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

use hecke_grading::temperley_lieb::{Matching, Point};

/// Gaussian integer a + bi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gauss(pub BigInt, pub BigInt);

impl Gauss {
    pub fn zero() -> Self {
        Gauss(BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> Self {
        Gauss(BigInt::one(), BigInt::zero())
    }

    pub fn add(&self, o: &Gauss) -> Gauss {
        Gauss(&self.0 + &o.0, &self.1 + &o.1)
    }

    pub fn mul(&self, o: &Gauss) -> Gauss {
        Gauss(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }

    /// i^e for any integer e.
    pub fn i_pow(e: i64) -> Gauss {
        match e.rem_euclid(4) {
            0 => Gauss(BigInt::one(), BigInt::zero()),
            1 => Gauss(BigInt::zero(), BigInt::one()),
            2 => Gauss(-BigInt::one(), BigInt::zero()),
            _ => Gauss(BigInt::zero(), -BigInt::one()),
        }
    }
}

/// Gaussian binomial in t = q² evaluated at t = −1, by the q-Pascal rule
/// G(n,k) = G(n−1,k−1) + t^k G(n−1,k).
fn gaussian_table_at_minus_one(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let left = if k >= 1 { prev[k - 1].clone() } else { BigInt::zero() };
                let right = if k < n { prev[k].clone() } else { BigInt::zero() };
                let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                left + sign * right
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Symmetric quantum binomials at q = i: [n,k] = q^{−k(n−k)} G_{q²}(n,k).
/// Panics if a value is not real, which would mean the oracle is wrong.
pub fn binom_at_i_table(max_n: usize) -> Vec<Vec<BigInt>> {
    gaussian_table_at_minus_one(max_n)
        .into_iter()
        .enumerate()
        .map(|(n, row)| {
            row.into_iter()
                .enumerate()
                .map(|(k, g)| {
                    let v = Gauss::i_pow(-((k * (n - k)) as i64)).mul(&Gauss(g, BigInt::zero()));
                    assert!(v.1.is_zero(), "[{n},{k}] at q = i is not real");
                    v.0
                })
                .collect()
        })
        .collect()
}

/// [n] at q = i, from (qⁿ − q⁻ⁿ)/(q − q⁻¹) with q − q⁻¹ = 2i.
pub fn quantum_int_at_i(n: i64) -> i64 {
    let d = Gauss::i_pow(n).add(&Gauss::i_pow(-n).mul(&Gauss(-BigInt::one(), BigInt::zero())));
    // d = 2i·[n]; [n] is real so d is purely imaginary
    assert!(d.0.is_zero());
    let two_n: i64 = (&d.1).try_into().expect("small");
    two_n / 2
}

/// Degree of a diagram for free f_s, g_s, f_t, g_t, read straight off its
/// arcs: caps are bottom–bottom arcs, cups top–top, parity from the left end.
/// Coordinates are in the basis (f_s, g_s, f_t, g_t).
pub fn arc_degree(d: &Matching) -> [i64; 4] {
    let (mut even_caps, mut odd_caps, mut even_cups, mut odd_cups) = (0i64, 0i64, 0i64, 0i64);
    for (p, q) in d.arcs() {
        match (p, q) {
            (Point::Bottom(i), Point::Bottom(j)) => {
                if i.min(j) % 2 == 0 {
                    even_caps += 1
                } else {
                    odd_caps += 1
                }
            }
            (Point::Top(i), Point::Top(j)) => {
                if i.min(j) % 2 == 0 {
                    even_cups += 1
                } else {
                    odd_cups += 1
                }
            }
            _ => {}
        }
    }
    let a = even_caps - odd_cups;
    let b = odd_caps - even_cups;
    // a(g_s − f_t) + b(g_t − f_s)
    [-b, a, -a, b]
}

pub fn negate(x: [i64; 4]) -> [i64; 4] {
    x.map(|c| -c)
}
