//! Two-step recursion for Jones–Wenzl projectors in TL(0), characteristic 0:
//!
//!   JW_{n+2} = E_0 − E_1 − E_2 − (1/p₂⁽ⁿ⁾) E_3,   E_i = P·M_i·P,  P = JW_n ⊗ id₂,
//!
//! where M_1, M_2, M_3 are fixed cup/cap diagrams on the last strands and
//! the E_3 term is absent for n = 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::Scalar;

use super::{check_size, jw_at_zero, Matching, Point, TLElement, TlError};

use Point::{Bottom as B, Top as T};

/// One stage n → n + 2 of the recursion.
#[derive(Clone, Debug)]
pub struct TwoStep {
    pub n: usize,
    /// E_0, E_1, E_2, E_3 (E_3 is zero when n = 1).
    pub e: [TLElement<Scalar>; 4],
    pub p2: Option<Scalar>,
    pub jw_next: TLElement<Scalar>,
}

/// Middle diagram of E_i in TL_{n+2}.
fn middle(n: usize, i: usize) -> Matching {
    let size = n + 2;
    let mut arcs: Vec<(Point, Point)> = Vec::new();
    match i {
        0 => return Matching::identity(size),
        1 | 2 => {
            arcs.extend((1..n).map(|k| (B(k), T(k))));
            arcs.push((B(n), T(n + 2)));
            arcs.push((B(n + 1), B(n + 2)));
            arcs.push((T(n), T(n + 1)));
        }
        3 => {
            arcs.extend((1..n - 1).map(|k| (B(k), T(k))));
            arcs.push((B(n - 1), B(n + 2)));
            arcs.push((B(n), B(n + 1)));
            arcs.push((T(n - 1), T(n + 2)));
            arcs.push((T(n), T(n + 1)));
        }
        _ => unreachable!(),
    }
    let m = Matching::new(size, size, &arcs).expect("fixed planar diagram");
    if i == 2 {
        m.flip()
    } else {
        m
    }
}

fn check_odd(n: usize) -> Result<(), TlError> {
    if n % 2 == 0 {
        return Err(TlError::ProjectorMissing(format!("JW_{n} does not exist at δ = 0 in characteristic 0")));
    }
    Ok(())
}

/// E_i⁽ⁿ⁾ built from a given JW_n.
fn e_from(jw: &TLElement<Scalar>, i: usize) -> Result<TLElement<Scalar>, TlError> {
    let n = jw.n_bottom();
    if i == 3 && n < 3 {
        return Err(TlError::ProjectorMissing("E_3 needs n ≥ 3".into()));
    }
    let p = jw.tensor_id(2);
    if i == 0 {
        return Ok(p);
    }
    // clear denominators so the quadratic product runs over ℤ
    let l = jw.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(rational(c).denom()));
    let p_int = p.map_coeffs(BigInt::zero(), |c| (rational(c) * &l).to_integer());
    let m = TLElement::from_matching(middle(n, i), BigInt::one(), BigInt::zero());
    let x = p_int.multiply(&m)?.multiply(&p_int)?;
    let l2 = &l * &l;
    Ok(x.map_coeffs(Scalar::zero(0), |c| Scalar::Rational(BigRational::new(c.clone(), l2.clone()))))
}

fn rational(c: &Scalar) -> &BigRational {
    c.as_rational().expect("characteristic 0")
}

/// Identity coefficient after closing the last strand of `x`.
fn ptr1(x: &TLElement<Scalar>) -> Result<Scalar, TlError> {
    Ok(x.close_last()?.identity_coeff())
}

/// Identity coefficient after closing the last two strands of `x`.
fn ptr2(x: &TLElement<Scalar>) -> Result<Scalar, TlError> {
    Ok(x.close_last()?.close_last()?.identity_coeff())
}

fn step(n: usize, jw: &TLElement<Scalar>) -> Result<TwoStep, TlError> {
    let e0 = e_from(jw, 0)?;
    let e1 = e_from(jw, 1)?;
    let e2 = e_from(jw, 2)?;
    let mut next = e0.sub(&e1)?.sub(&e2)?;
    let (e3, p2) = if n >= 3 {
        let p2 = ptr2(jw)?;
        let e3 = e_from(jw, 3)?;
        next = next.sub(&e3.scale(&p2.try_inv()?))?;
        (e3, Some(p2))
    } else {
        (TLElement::zero(n + 2, n + 2, Scalar::zero(0)), None)
    };
    Ok(TwoStep { n, e: [e0, e1, e2, e3], p2, jw_next: next })
}

/// Every stage of the recursion from JW_1 up to JW_{target}.
pub fn two_step_stages(target: usize) -> Result<Vec<TwoStep>, TlError> {
    check_size(target)?;
    check_odd(target)?;
    let mut jw = TLElement::identity(1, Scalar::zero(0));
    let mut out = Vec::new();
    let mut n = 1;
    while n + 2 <= target {
        let s = step(n, &jw)?;
        jw = s.jw_next.clone();
        out.push(s);
        n += 2;
    }
    Ok(out)
}

/// JW_m for odd m, computed only from the two-step recursion.
pub fn jw_two_step(m: usize) -> Result<TLElement<Scalar>, TlError> {
    if m == 1 {
        return Ok(TLElement::identity(1, Scalar::zero(0)));
    }
    let stages = two_step_stages(m)?;
    Ok(stages.into_iter().last().expect("m ≥ 3").jw_next)
}

/// E_i⁽ⁿ⁾ in TL_{n+2}(0), with JW_n taken from the two-step recursion.
pub fn build_e(n: usize, i: usize) -> Result<TLElement<Scalar>, TlError> {
    if i > 3 {
        return Err(TlError::ConfigurationAbsent);
    }
    check_size(n + 2)?;
    check_odd(n)?;
    e_from(&jw_two_step(n)?, i)
}

/// (p₁⁽ⁿ⁾, p₂⁽ⁿ⁾): identity coefficients of the one- and two-strand partial
/// traces of JW_n. p₂ is undefined for n = 1.
pub fn partial_trace_scalars(n: usize) -> Result<(Scalar, Option<Scalar>), TlError> {
    let jw = jw_at_zero(n, 0).map_err(|e| match e {
        TlError::PoleAtZero => TlError::ProjectorMissing(format!("JW_{n} has a pole at δ = 0")),
        other => other,
    })?;
    let p1 = ptr1(&jw)?;
    let p2 = if n >= 2 { Some(ptr2(&jw)?) } else { None };
    Ok((p1, p2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Coefficient;

    #[test]
    fn jw3_from_two_step() {
        let j = jw_two_step(3).unwrap();
        assert_eq!(j, jw_at_zero(3, 0).unwrap());
        let e0 = build_e(1, 0).unwrap();
        let e1 = build_e(1, 1).unwrap();
        let e2 = build_e(1, 2).unwrap();
        assert_eq!(e0, TLElement::identity(3, Scalar::zero(0)));
        assert_eq!(e1.len(), 1);
        assert_eq!(e2.len(), 1);
        assert!(build_e(1, 3).is_err());
        assert!(build_e(2, 0).is_err());
    }

    #[test]
    fn matches_oracle_small() {
        for m in [5, 7, 9] {
            assert_eq!(jw_two_step(m).unwrap(), jw_at_zero(m, 0).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn partial_traces() {
        let (p1, p2) = partial_trace_scalars(3).unwrap();
        assert!(p1.vanishes());
        assert_eq!(p2, Some(Scalar::from_int(-2, 0)));
        let (_, p2) = partial_trace_scalars(5).unwrap();
        assert_eq!(p2, Some(Scalar::rational(-3, 2)));
        assert!(matches!(partial_trace_scalars(4), Err(TlError::ProjectorMissing(_))));
    }
}
