use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{quantum_binom, ArithError, Coefficient, DeltaRational, Scalar};
use crate::grading::GroupElement;
use crate::par::{self, ExecMode};

use super::{
    degree, enumerate_matchings, jw_at_zero, jw_generic, rainbow_form, Matching, TLElement, TlError,
    TwoColorDegreeData,
};

fn projector(n: usize, characteristic: u64) -> Result<TLElement<Scalar>, TlError> {
    jw_at_zero(n, characteristic).map_err(|e| match e {
        TlError::PoleAtZero | TlError::NonIntegralAtP { .. } => {
            TlError::ProjectorMissing(format!("JW_{n} in characteristic {characteristic}: {e}"))
        }
        other => other,
    })
}

#[derive(Clone, Debug)]
pub struct HomogeneityReport {
    pub n: usize,
    pub characteristic: u64,
    pub diagrams: usize,
    /// Diagrams with nonzero coefficient and nonzero degree.
    pub violators: Vec<(Matching, Scalar, GroupElement)>,
}

impl HomogeneityReport {
    pub fn homogeneous(&self) -> bool {
        self.violators.is_empty()
    }
}

/// Checks that every diagram of JW_n (δ = 0, given characteristic) has degree 0.
pub fn check_jw_homogeneity(
    n: usize,
    characteristic: u64,
    data: &TwoColorDegreeData,
) -> Result<HomogeneityReport, TlError> {
    let jw = projector(n, characteristic)?;
    let terms: Vec<(Matching, Scalar)> = jw.terms().into_iter().map(|(m, c)| (m.clone(), c.clone())).collect();
    let degrees = par::map(ExecMode::default(), &terms, |(m, _)| degree(m, data));
    let violators = terms
        .into_iter()
        .zip(degrees)
        .filter(|(_, d)| !d.is_zero())
        .map(|((m, c), d)| (m, c, d))
        .collect();
    Ok(HomogeneityReport { n, characteristic, diagrams: jw.len(), violators })
}

#[derive(Clone, Debug, Default)]
pub struct RatioReport {
    pub n: usize,
    pub generic_pairs: usize,
    pub generic_failures: Vec<(Matching, usize, usize)>,
    /// Generic pairs where the unsigned ratio [x+y, x] fails (xy odd).
    pub unsigned_generic_mismatches: usize,
    pub zero_pairs: usize,
    pub zero_failures: Vec<(Matching, usize, usize)>,
    /// Pairs with x, y both odd; the coefficient at δ = 0 must vanish.
    pub both_odd_vanishing: usize,
}

impl RatioReport {
    pub fn passed(&self) -> bool {
        self.generic_failures.is_empty() && self.zero_failures.is_empty()
    }
}

/// Every pair (D, D') related by moving a nested cap to the left end, on
/// the bottom and (by reflection) on the top.
fn move_pairs(n: usize) -> Result<Vec<(Matching, usize, usize, Matching)>, TlError> {
    let mut out = Vec::new();
    for d in enumerate_matchings(n, n)? {
        for (x, y, e) in rainbow_form(&d) {
            out.push((d.clone(), x, y, e));
        }
        for (x, y, e) in rainbow_form(&d.flip()) {
            out.push((d.clone(), x, y, e.flip()));
        }
    }
    Ok(out)
}

/// Checks coeff(D) = (−1)^{xy} [x+y, x] coeff(D′) over ℚ(δ) and, for odd n,
/// coeff(D) = [x+y, x]|_{δ=0} coeff(D′) at δ = 0. The sign comes from the
/// loop value being δ = [2].
pub fn coeff_ratio_check(n: usize) -> Result<RatioReport, TlError> {
    let generic = jw_generic(n)?;
    let at_zero = if n % 2 == 1 { Some(jw_at_zero(n, 0)?) } else { None };
    let pairs = move_pairs(n)?;
    let mut report = RatioReport { n, ..Default::default() };
    for (d, x, y, e) in pairs {
        let b = quantum_binom(x + y, x)?;
        let bg = DeltaRational::from_poly(b.clone());
        let signed = if (x * y) % 2 == 1 { bg.negated() } else { bg.clone() };
        report.generic_pairs += 1;
        let (cd, ce) = (generic.coeff(&d), generic.coeff(&e));
        if cd != signed.times(&ce) {
            report.generic_failures.push((d.clone(), x, y));
        }
        if cd != bg.times(&ce) {
            report.unsigned_generic_mismatches += 1;
        }
        if let Some(z) = &at_zero {
            report.zero_pairs += 1;
            let b0 = Scalar::Rational(BigRational::from_integer(b.eval_zero()));
            let (zd, ze) = (z.coeff(&d), z.coeff(&e));
            if zd != b0.times(&ze) {
                report.zero_failures.push((d.clone(), x, y));
            }
            if x % 2 == 1 && y % 2 == 1 && zd.vanishes() {
                report.both_odd_vanishing += 1;
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct CornerReport {
    pub n: usize,
    pub dimension: usize,
    /// y acts as the identity on the corner algebra.
    pub identity_is_y: bool,
    /// A nonzero element x with x² = 0, independent of y.
    pub nilpotent: Option<TLElement<Scalar>>,
}

impl CornerReport {
    /// The corner algebra is 𝕜[x]/(x²).
    pub fn is_dual_numbers(&self) -> bool {
        self.dimension == 2 && self.identity_is_y && self.nilpotent.is_some()
    }
}

/// Incremental row reduction over ℚ on sparse vectors.
struct Echelon {
    index: HashMap<Matching, usize>,
    rows: Vec<(usize, Vec<BigRational>)>,
    kept: Vec<TLElement<Scalar>>,
}

impl Echelon {
    fn dense(&mut self, x: &TLElement<Scalar>) -> Vec<BigRational> {
        for (m, _) in x.terms() {
            let k = self.index.len();
            self.index.entry(m.clone()).or_insert(k);
        }
        let mut v = vec![BigRational::zero(); self.index.len()];
        for (m, c) in x.iter() {
            v[self.index[m]] = c.as_rational().expect("characteristic 0").clone();
        }
        v
    }

    /// Adds x if it is independent of the rows so far.
    fn insert(&mut self, x: &TLElement<Scalar>) -> bool {
        let mut v = self.dense(x);
        for (pivot, row) in &self.rows {
            if *pivot < v.len() && !v[*pivot].is_zero() {
                let f = v[*pivot].clone() / &row[*pivot];
                for (i, r) in row.iter().enumerate() {
                    v[i] -= &f * r;
                }
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            Some(p) => {
                for (_, row) in self.rows.iter_mut() {
                    row.resize(v.len(), BigRational::zero());
                }
                self.rows.push((p, v));
                self.kept.push(x.clone());
                true
            }
            None => false,
        }
    }
}

/// The corner algebra y·TL_{n+1}(0)·y for y = JW_n ⊗ id₁.
pub fn y_idempotent_check(n: usize) -> Result<CornerReport, TlError> {
    let jw = projector(n, 0)?;
    let y = jw.tensor_id(1);
    let mut ech = Echelon { index: HashMap::new(), rows: Vec::new(), kept: Vec::new() };
    ech.insert(&y);
    for d in enumerate_matchings(n + 1, n + 1)? {
        let dm = TLElement::from_matching(d, Scalar::one(0), Scalar::zero(0));
        let z = y.multiply(&dm)?.multiply(&y)?;
        if !z.is_empty() {
            ech.insert(&z);
        }
    }
    let basis = ech.kept;
    let identity_is_y = basis.iter().all(|b| y.multiply(b).ok().as_ref() == Some(b) && b.multiply(&y).ok().as_ref() == Some(b));
    let mut nilpotent = None;
    if basis.len() == 2 {
        // z² = a z + b y; with discriminant zero, x = z − (a/2) y squares to 0
        let z = &basis[1];
        let z2 = z.multiply(z)?;
        let (a, _b) = solve_in_span(&z2, z, &y)?;
        let half = a.try_div(&Scalar::from_int(2, 0))?;
        let x = z.sub(&y.scale(&half))?;
        if x.multiply(&x)?.is_empty() && !x.is_empty() {
            nilpotent = Some(x);
        }
    }
    Ok(CornerReport { n, dimension: basis.len(), identity_is_y, nilpotent })
}

/// Coordinates (a, b) with w = a z + b y, assuming w lies in the span.
fn solve_in_span(
    w: &TLElement<Scalar>,
    z: &TLElement<Scalar>,
    y: &TLElement<Scalar>,
) -> Result<(Scalar, Scalar), TlError> {
    // z was reduced against y, so some diagram carries z but not a multiple of y
    for (m, zc) in z.terms() {
        for (m2, yc) in y.terms() {
            let det = zc.times(&y.coeff(m2)).minus(&z.coeff(m2).times(&y.coeff(m)));
            if det.vanishes() {
                continue;
            }
            // Cramer's rule on the 2×2 system at diagrams m, m2
            let (w1, w2) = (w.coeff(m), w.coeff(m2));
            let a = w1.times(yc).minus(&w2.times(&y.coeff(m))).try_div(&det)?;
            let b = zc.times(&w2).minus(&z.coeff(m2).times(&w1)).try_div(&det)?;
            return Ok((a, b));
        }
    }
    Err(TlError::Arith(ArithError::DivisionByZero))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneity_small_cases() {
        let data = TwoColorDegreeData::symbolic();
        for (n, p) in [(3, 2), (5, 3), (7, 0)] {
            assert!(check_jw_homogeneity(n, p, &data).unwrap().homogeneous(), "({n},{p})");
        }
        assert!(matches!(check_jw_homogeneity(4, 0, &data), Err(TlError::ProjectorMissing(_))));
    }

    #[test]
    fn ratios_small() {
        let r = coeff_ratio_check(5).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.generic_pairs > 0 && r.zero_pairs == r.generic_pairs);
        assert!(r.unsigned_generic_mismatches > 0);
        let r = coeff_ratio_check(4).unwrap();
        assert!(r.passed() && r.zero_pairs == 0);
    }

    #[test]
    fn corner_algebras() {
        for n in [1, 3] {
            let r = y_idempotent_check(n).unwrap();
            assert!(r.is_dual_numbers(), "n = {n}: {r:?}");
        }
    }
}
