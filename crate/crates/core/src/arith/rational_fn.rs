use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Coefficient, DeltaPoly};

/// Element of ℚ(δ) stored as a reduced quotient of integer polynomials.
///
/// Canonical form: gcd(num, den) = 1 in ℚ[δ], the integer content of the
/// pair is 1 and the leading coefficient of `den` is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaRational {
    num: DeltaPoly,
    den: DeltaPoly,
}

impl DeltaRational {
    pub fn new(num: DeltaPoly, den: DeltaPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: DeltaPoly, den: DeltaPoly) -> Self {
        if num.is_zero() {
            return DeltaRational { num, den: DeltaPoly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        DeltaRational { num, den }
    }

    pub fn from_poly(p: DeltaPoly) -> Self {
        DeltaRational { num: p, den: DeltaPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(DeltaPoly::constant(BigInt::from(c)))
    }

    pub fn delta() -> Self {
        Self::from_poly(DeltaPoly::delta())
    }

    pub fn numer(&self) -> &DeltaPoly {
        &self.num
    }

    pub fn denom(&self) -> &DeltaPoly {
        &self.den
    }

    /// The polynomial this equals, if the denominator is a unit.
    pub fn as_poly(&self) -> Option<DeltaPoly> {
        if self.den.degree() == Some(0) {
            let d = self.den.leading();
            if d.is_one() {
                return Some(self.num.clone());
            }
            if (-&d).is_one() {
                return Some(self.num.neg());
            }
        }
        None
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        DeltaRational::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self, ArithError> {
        Ok(self.times(&o.recip()?))
    }

    /// Value at δ = 0.
    pub fn eval_zero(&self) -> Result<BigRational, ArithError> {
        let d = self.den.eval_zero();
        if d.is_zero() {
            return Err(ArithError::PoleAtZero);
        }
        Ok(BigRational::new(self.num.eval_zero(), d))
    }
}

impl Coefficient for DeltaRational {
    fn vanishes(&self) -> bool {
        self.num.is_zero()
    }
    fn zero_like(&self) -> Self {
        Self::from_poly(DeltaPoly::zero())
    }
    fn one_like(&self) -> Self {
        Self::from_poly(DeltaPoly::one())
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        Self::normalize(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn negated(&self) -> Self {
        DeltaRational { num: self.num.neg(), den: self.den.clone() }
    }
}

impl fmt::Display for DeltaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl DeltaPoly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.leading().is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> DeltaPoly {
        DeltaPoly::from_i64s(cs)
    }

    #[test]
    fn canonical_form() {
        let a = DeltaRational::new(p(&[-2, 0, 2]), p(&[-2, -2])).unwrap();
        assert_eq!(a.numer(), &p(&[1, -1]));
        assert_eq!(a.denom(), &p(&[1]));
        let b = DeltaRational::new(p(&[3]), p(&[0, -6])).unwrap();
        assert_eq!(b.numer(), &p(&[-1]));
        assert_eq!(b.denom(), &p(&[0, 2]));
        assert!(DeltaRational::new(p(&[1]), DeltaPoly::zero()).is_err());
    }

    #[test]
    fn field_operations() {
        let d = DeltaRational::delta();
        let inv = d.recip().unwrap();
        assert_eq!(d.times(&inv), d.one_like());
        let x = DeltaRational::new(p(&[1, 1]), p(&[0, 0, 1])).unwrap();
        assert_eq!(x.plus(&d).minus(&d), x);
        assert_eq!(x.eval_zero(), Err(ArithError::PoleAtZero));
        assert_eq!(
            DeltaRational::new(p(&[3, 1]), p(&[2, 1])).unwrap().eval_zero().unwrap(),
            BigRational::new(3.into(), 2.into())
        );
    }
}
