use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Coefficient;

/// Polynomial in δ with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DeltaPoly {
    coeffs: Vec<BigInt>,
}

impl DeltaPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DeltaPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        DeltaPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        DeltaPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        DeltaPoly::new(vec![c])
    }

    pub fn one() -> Self {
        DeltaPoly::constant(BigInt::one())
    }

    /// The indeterminate δ.
    pub fn delta() -> Self {
        DeltaPoly::from_i64s(&[0, 1])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut v = vec![BigInt::zero(); degree + 1];
        v[degree] = c;
        DeltaPoly::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Order of vanishing at δ = 0; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval_zero(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn add(&self, o: &DeltaPoly) -> DeltaPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = o.coeffs.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        DeltaPoly::new(v)
    }

    pub fn neg(&self) -> DeltaPoly {
        DeltaPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &DeltaPoly) -> DeltaPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &DeltaPoly) -> DeltaPoly {
        if self.is_zero() || o.is_zero() {
            return DeltaPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        DeltaPoly::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> DeltaPoly {
        DeltaPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by δ^k.
    pub fn shift(&self, k: usize) -> DeltaPoly {
        if self.is_zero() {
            return DeltaPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        DeltaPoly { coeffs: v }
    }

    /// Drops every term of degree ≥ k.
    pub fn truncate(&self, k: usize) -> DeltaPoly {
        DeltaPoly::new(self.coeffs.iter().take(k).cloned().collect())
    }

    pub fn pow(&self, e: usize) -> DeltaPoly {
        let mut acc = DeltaPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `c`, which must divide each of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> DeltaPoly {
        DeltaPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> DeltaPoly {
        if self.is_zero() {
            return DeltaPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Exact division in ℤ[δ]; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &DeltaPoly) -> Option<DeltaPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(DeltaPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let ld = d.leading();
        let n = self.coeffs.len();
        if n < dd + 1 {
            return None;
        }
        let mut q = vec![BigInt::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, r) = top.div_rem(&ld);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(DeltaPoly::new(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder: lc(d)^{deg a − deg d + 1}·a mod d.
    fn pseudo_rem(&self, d: &DeltaPoly) -> DeltaPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let mut r = self.clone();
        let ld = d.leading();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading();
            let t = DeltaPoly::monomial(lr, dr - dd);
            r = r.scale(&ld).sub(&t.mul(d));
        }
        r
    }

    /// gcd in ℚ[δ], returned primitive with positive leading coefficient.
    pub fn gcd(&self, o: &DeltaPoly) -> DeltaPoly {
        let mut a = self.primitive_part();
        let mut b = o.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.is_zero() {
            return a;
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            a = b;
            b = r.primitive_part();
        }
    }
}

impl Coefficient for DeltaPoly {
    fn vanishes(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn zero_like(&self) -> Self {
        DeltaPoly::zero()
    }
    fn one_like(&self) -> Self {
        DeltaPoly::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one() && i > 0;
            if !unit {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "δ")?,
                _ => write!(f, "δ^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> DeltaPoly {
        DeltaPoly::from_i64s(cs)
    }

    #[test]
    fn trims_and_prints() {
        assert_eq!(p(&[1, 0, 0]).coeffs().len(), 1);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[-1, 0, 1]).to_string(), "δ^2 - 1");
        assert_eq!(p(&[0, -2]).to_string(), "-2δ");
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[1, 1]);
        let g = p(&[-2, 0, 3]);
        let h = p(&[5, -1, 1]);
        let a = f.mul(&g).scale(&BigInt::from(6));
        let b = f.mul(&h).scale(&BigInt::from(-4));
        assert_eq!(a.gcd(&b), f);
        assert_eq!(a.gcd(&DeltaPoly::zero()), a.primitive_part());
    }

    #[test]
    fn valuation_and_eval() {
        let a = p(&[0, 0, 3, 1]);
        assert_eq!(a.valuation(), Some(2));
        assert_eq!(a.eval(&BigInt::from(2)), BigInt::from(20));
        assert_eq!(a.truncate(3), p(&[0, 0, 3]));
    }
}
