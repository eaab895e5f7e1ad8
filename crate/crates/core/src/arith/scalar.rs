use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{ArithError, Coefficient, DeltaPoly};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        let v = value.rem_euclid(p as i64) as u64;
        Fp { value: v, p }
    }

    pub fn from_bigint(x: &BigInt, p: u64) -> Self {
        let r = x.mod_floor(&BigInt::from(p));
        Fp { value: r.to_u64().unwrap(), p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: ((self.value as u128 + o.value as u128) % self.p as u128) as u64, p: self.p }
    }

    pub fn neg(self) -> Fp {
        Fp { value: (self.p - self.value) % self.p, p: self.p }
    }

    pub fn sub(self, o: Fp) -> Fp {
        self.add(o.neg())
    }

    pub fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: ((self.value as u128 * o.value as u128) % self.p as u128) as u64, p: self.p }
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp { value: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A field element: an exact rational or an element of a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime(Fp),
}

impl Scalar {
    pub fn zero(characteristic: u64) -> Scalar {
        Scalar::from_int(0, characteristic)
    }

    pub fn one(characteristic: u64) -> Scalar {
        Scalar::from_int(1, characteristic)
    }

    pub fn from_int(v: i64, characteristic: u64) -> Scalar {
        if characteristic == 0 {
            Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            Scalar::Prime(Fp::new(v, characteristic))
        }
    }

    pub fn rational(num: i64, den: i64) -> Scalar {
        Scalar::Rational(BigRational::new(num.into(), den.into()))
    }

    /// Image of a rational number in the field of the given characteristic.
    pub fn from_rational(q: &BigRational, characteristic: u64) -> Result<Scalar, ArithError> {
        if characteristic == 0 {
            Ok(Scalar::Rational(q.clone()))
        } else {
            reduce_rational_mod_p(q, characteristic).map(Scalar::Prime)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Scalar::Rational(_) => 0,
            Scalar::Prime(x) => x.modulus(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Prime(_) => None,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), ArithError> {
        let (a, b) = (self.characteristic(), other.characteristic());
        if a == b {
            Ok(())
        } else {
            Err(ArithError::CharacteristicMismatch { left: a, right: b })
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(a.add(*b)),
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.try_add(&other.negated())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(a.mul(*b)),
            _ => unreachable!(),
        })
    }

    pub fn try_inv(&self) -> Result<Scalar, ArithError> {
        if self.vanishes() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime(a) => Scalar::Prime(a.inv().unwrap()),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.try_mul(&other.try_inv()?)
    }
}

impl Coefficient for Scalar {
    fn vanishes(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_zero(),
            Scalar::Prime(a) => a.is_zero(),
        }
    }

    fn zero_like(&self) -> Self {
        Scalar::zero(self.characteristic())
    }

    fn one_like(&self) -> Self {
        Scalar::one(self.characteristic())
    }

    /// Panics on mixed characteristics; use `try_add` for checked arithmetic.
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("scalar characteristic mismatch")
    }

    fn minus(&self, other: &Self) -> Self {
        self.try_sub(other).expect("scalar characteristic mismatch")
    }

    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("scalar characteristic mismatch")
    }

    fn negated(&self) -> Self {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime(a) => Scalar::Prime(a.neg()),
        }
    }
}

impl Coefficient for BigInt {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Coefficient for BigRational {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", format_rational(q)),
            Scalar::Prime(x) => write!(f, "{x}"),
        }
    }
}

/// "p" for integers, "p/q" otherwise.
pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses "p" or "p/q" (optional sign on p).
pub fn parse_rational(s: &str) -> Result<BigRational, ArithError> {
    let t = s.trim();
    let err = || ArithError::Parse(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

pub fn reduce_rational_mod_p(q: &BigRational, p: u64) -> Result<Fp, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    let pb = BigInt::from(p);
    if q.denom().mod_floor(&pb).is_zero() {
        return Err(ArithError::NonIntegralAtP { p });
    }
    let n = Fp::from_bigint(q.numer(), p);
    let d = Fp::from_bigint(q.denom(), p);
    Ok(n.mul(d.inv().unwrap()))
}

/// Coefficientwise reduction; trailing zeros trimmed.
pub fn reduce_poly_mod_p(x: &DeltaPoly, p: u64) -> Result<Vec<Fp>, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    let mut out: Vec<Fp> = x.coeffs().iter().map(|c| Fp::from_bigint(c, p)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        let six = BigRational::from_integer(6.into());
        assert_eq!(reduce_rational_mod_p(&six, 3).unwrap().value(), 0);
        let q = BigRational::new((-3).into(), 2.into());
        let r = reduce_rational_mod_p(&q, 5).unwrap();
        assert_eq!(r.value(), 1);
        assert_eq!(Fp::new(2, 5).mul(r), Fp::new(-3, 5));
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(reduce_rational_mod_p(&third, 3), Err(ArithError::NonIntegralAtP { p: 3 }));
    }

    #[test]
    fn mixing_characteristics_is_an_error() {
        let a = Scalar::one(3);
        let b = Scalar::one(5);
        assert!(a.try_add(&b).is_err());
        assert!(a.try_mul(&Scalar::one(0)).is_err());
    }

    #[test]
    fn parse_and_format() {
        let q = parse_rational("-6/4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&parse_rational("7").unwrap()), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn prime_field_inverse() {
        for v in 1..7 {
            let x = Fp::new(v, 7);
            assert_eq!(x.mul(x.inv().unwrap()), Fp::new(1, 7));
        }
    }
}
