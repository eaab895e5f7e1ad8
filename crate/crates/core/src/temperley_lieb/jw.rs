//! Jones–Wenzl projectors via the single-clasp recursion
//!
//!   p_n = (p_{n−1} ⊗ 1) · Σ_{j=1}^{n} c_j E_j,  E_j = e_{n−1} e_{n−2} ⋯ e_j,
//!
//! with c_n = 1 and c_j = (−1)^{n−j} [j]/[n]. Clearing denominators, the
//! coefficients of p_n are N_D / Q_n with Q_n = [2][3]⋯[n] and N_D ∈ ℤ[δ]
//! computed without division.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{quantum_int, ArithError, Coefficient, DeltaPoly, DeltaRational, Scalar};
use crate::par::{self, ExecMode};

use super::element::{merge_maps, merge_term};
use super::trunc::Trunc;
use super::{check_size, Matching, TLElement, TlError};

/// Coefficient rings the numerator recursion can run in.
pub trait NumeratorRing: Coefficient {
    fn embed(p: &DeltaPoly, like: &Self) -> Self;
    fn times_delta_pow(&self, e: usize) -> Self;
}

impl NumeratorRing for DeltaPoly {
    fn embed(p: &DeltaPoly, _: &Self) -> Self {
        p.clone()
    }
    fn times_delta_pow(&self, e: usize) -> Self {
        self.shift(e)
    }
}

impl NumeratorRing for Trunc {
    fn embed(p: &DeltaPoly, like: &Self) -> Self {
        Trunc::from_poly(p, like.order())
    }
    fn times_delta_pow(&self, e: usize) -> Self {
        self.shift(e)
    }
}

/// Numerators N_D together with the common denominator Q_n.
#[derive(Clone, Debug)]
pub struct JwNumerator<C> {
    pub n: usize,
    pub terms: HashMap<Matching, C>,
    pub denominator: DeltaPoly,
}

/// The diagram of e_{n−1} e_{n−2} ⋯ e_j (j = n gives the identity).
fn clasp_diagram(n: usize, j: usize) -> Matching {
    let mut m = Matching::identity(n);
    for i in (j..n).rev() {
        m = m.compose(&Matching::generator(n, i)).expect("same size").0;
    }
    m
}

/// Runs the recursion up to n with coefficients in `one`'s ring.
pub fn jw_numerator<C: NumeratorRing>(n: usize, one: C, mode: ExecMode) -> Result<JwNumerator<C>, TlError> {
    check_size(n)?;
    if n == 0 {
        return Err(TlError::ProjectorMissing("no strands".into()));
    }
    let mut terms: HashMap<Matching, C> = HashMap::new();
    terms.insert(Matching::identity(1), one.clone());
    let mut q = DeltaPoly::one();
    for k in 2..=n {
        let clasps: Vec<(Matching, C)> = (1..=k)
            .map(|j| {
                let s = quantum_int(j);
                let s = if j < k && (k - j) % 2 == 1 { s.neg() } else { s };
                (clasp_diagram(k, j), C::embed(&s, &one))
            })
            .collect();
        let prev: Vec<(Matching, C)> = terms.into_iter().map(|(m, c)| (m.tensor_id(1), c)).collect();
        let acc = par::map_reduce(
            mode,
            &prev,
            HashMap::new,
            |mut acc, (d, c)| {
                for (e, s) in &clasps {
                    let (m, loops) = d.compose(e).expect("same size");
                    let v = c.times(s).times_delta_pow(loops);
                    if !v.vanishes() {
                        merge_term(&mut acc, m, v);
                    }
                }
                acc
            },
            merge_maps,
        );
        terms = acc.into_iter().filter(|(_, c)| !c.vanishes()).collect();
        q = q.mul(&quantum_int(k));
    }
    Ok(JwNumerator { n, terms, denominator: q })
}

/// JW_n over ℚ(δ).
pub fn jw_generic(n: usize) -> Result<TLElement<DeltaRational>, TlError> {
    let num = jw_numerator(n, DeltaPoly::one(), ExecMode::default())?;
    let q = num.denominator;
    let terms = num
        .terms
        .into_iter()
        .map(|(m, c)| Ok((m, DeltaRational::new(c, q.clone())?)))
        .collect::<Result<Vec<_>, TlError>>()?;
    TLElement::from_terms(n, n, DeltaRational::delta(), terms)
}

pub fn jw_at_zero(n: usize, characteristic: u64) -> Result<TLElement<Scalar>, TlError> {
    jw_at_zero_with(n, characteristic, ExecMode::default())
}

/// JW_n specialised at δ = 0 and reduced to characteristic `characteristic`.
/// The projector is absent if any coefficient has a pole at δ = 0 or, for
/// p > 0, a denominator divisible by p.
pub fn jw_at_zero_with(n: usize, characteristic: u64, mode: ExecMode) -> Result<TLElement<Scalar>, TlError> {
    check_size(n)?;
    let q = (2..=n).fold(DeltaPoly::one(), |acc, k| acc.mul(&quantum_int(k)));
    let v = q.valuation().expect("Q_n is nonzero");
    let num = jw_numerator(n, Trunc::constant(1, v + 1), mode)?;
    let q_low: BigInt = q.coeff(v);
    let mut out = TLElement::zero(n, n, Scalar::zero(characteristic));
    let mut sorted: Vec<_> = num.terms.into_iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    for (m, c) in sorted {
        match c.valuation() {
            Some(val) if val < v => return Err(TlError::PoleAtZero),
            None => continue,
            _ => {}
        }
        let value = BigRational::new(BigInt::from(c.coeff(v)), q_low.clone());
        let s = Scalar::from_rational(&value, characteristic).map_err(|e| match e {
            ArithError::NonIntegralAtP { p } => TlError::NonIntegralAtP { p },
            other => TlError::Arith(other),
        })?;
        out.add_term(m, s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn killed<C: Coefficient>(x: &TLElement<C>) -> bool {
        let n = x.n_bottom();
        (1..n).all(|i| {
            let e = TLElement::generator(n, i, x.delta().clone());
            e.multiply(x).unwrap().is_empty() && x.multiply(&e).unwrap().is_empty()
        })
    }

    #[test]
    fn small_generic_projectors() {
        let j1 = jw_generic(1).unwrap();
        assert_eq!(j1, TLElement::identity(1, DeltaRational::delta()));
        let j2 = jw_generic(2).unwrap();
        let d = DeltaRational::delta();
        let e1 = TLElement::generator(2, 1, d.clone());
        let expected = TLElement::identity(2, d.clone()).sub(&e1.scale(&d.recip().unwrap())).unwrap();
        assert_eq!(j2, expected);
    }

    #[test]
    fn generic_projectors_are_killed_and_idempotent() {
        for n in 1..=6 {
            let j = jw_generic(n).unwrap();
            assert!(killed(&j), "n = {n}");
            assert_eq!(j.multiply(&j).unwrap(), j);
            assert_eq!(j.identity_coeff(), DeltaRational::from_int(1));
        }
    }

    #[test]
    fn specialisation_matches_generic() {
        for n in [3, 5, 7] {
            let g = jw_generic(n).unwrap();
            let z = jw_at_zero(n, 0).unwrap();
            let spec = g.try_map_coeffs(Scalar::zero(0), |c| c.eval_zero().map(Scalar::Rational)).unwrap();
            assert_eq!(spec, z);
            assert!(killed(&z));
        }
    }

    #[test]
    fn existence_at_zero() {
        let j3 = jw_at_zero(3, 0).unwrap();
        assert_eq!(j3.len(), 3);
        let minus_one = Scalar::from_int(-1, 0);
        assert_eq!(j3.iter().filter(|(_, c)| **c == minus_one).count(), 2);
        assert_eq!(jw_at_zero(4, 0), Err(TlError::PoleAtZero));
        assert!(jw_at_zero(5, 3).is_ok());
        // exists in characteristic 5 but is not rotation-invariant
        let j55 = jw_at_zero(5, 5).unwrap();
        assert_ne!(j55.rotate_ccw().unwrap(), j55);
        assert_eq!(jw_at_zero(7, 3), Err(TlError::NonIntegralAtP { p: 3 }));
        assert!(matches!(jw_at_zero(14, 0), Err(TlError::SizeLimit { .. })));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = jw_at_zero_with(7, 0, ExecMode::Sequential).unwrap();
        let b = jw_at_zero_with(7, 0, ExecMode::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
