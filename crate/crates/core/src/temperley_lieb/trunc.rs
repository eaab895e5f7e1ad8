use std::fmt;

use crate::arith::{Coefficient, DeltaPoly};

/// Length of the truncated coefficient vector; enough for ⌊13/2⌋ + 1.
pub const TRUNC_LEN: usize = 7;

/// Element of ℤ[δ]/(δ^k) for a fixed k ≤ [`TRUNC_LEN`], with overflow-checked
/// 128-bit coefficients. Used to compute projector numerators near δ = 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Trunc {
    c: [i128; TRUNC_LEN],
    k: u8,
}

impl Trunc {
    pub fn zero(k: usize) -> Self {
        assert!(k >= 1 && k <= TRUNC_LEN, "truncation order out of range");
        Trunc { c: [0; TRUNC_LEN], k: k as u8 }
    }

    pub fn constant(v: i128, k: usize) -> Self {
        let mut t = Trunc::zero(k);
        t.c[0] = v;
        t
    }

    pub fn from_poly(p: &DeltaPoly, k: usize) -> Self {
        let mut t = Trunc::zero(k);
        for (i, x) in p.coeffs().iter().take(k).enumerate() {
            t.c[i] = i128::try_from(x).expect("coefficient exceeds 128 bits");
        }
        t
    }

    pub fn order(&self) -> usize {
        self.k as usize
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.c[i]
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        (0..self.order()).find(|&i| self.c[i] != 0)
    }

    /// Multiplication by δ^e.
    pub fn shift(&self, e: usize) -> Self {
        let mut t = Trunc::zero(self.order());
        for i in e..self.order() {
            t.c[i] = self.c[i - e];
        }
        t
    }
}

impl Coefficient for Trunc {
    fn vanishes(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    fn zero_like(&self) -> Self {
        Trunc::zero(self.order())
    }

    fn one_like(&self) -> Self {
        Trunc::constant(1, self.order())
    }

    fn plus(&self, o: &Self) -> Self {
        let mut t = *self;
        for i in 0..self.order() {
            t.c[i] = t.c[i].checked_add(o.c[i]).expect("truncated coefficient overflow");
        }
        t
    }

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    fn times(&self, o: &Self) -> Self {
        let k = self.order();
        let mut t = Trunc::zero(k);
        for i in 0..k {
            if self.c[i] == 0 {
                continue;
            }
            for j in 0..k - i {
                let p = self.c[i].checked_mul(o.c[j]).expect("truncated coefficient overflow");
                t.c[i + j] = t.c[i + j].checked_add(p).expect("truncated coefficient overflow");
            }
        }
        t
    }

    fn negated(&self) -> Self {
        let mut t = *self;
        for x in t.c.iter_mut() {
            *x = -*x;
        }
        t
    }
}

impl fmt::Debug for Trunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Trunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = DeltaPoly::new(self.c[..self.order()].iter().map(|&x| x.into()).collect());
        write!(f, "{p} + O(δ^{})", self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_products() {
        let a = Trunc::from_poly(&DeltaPoly::from_i64s(&[1, 2, 3]), 3);
        let b = Trunc::from_poly(&DeltaPoly::from_i64s(&[0, 1]), 3);
        let p = a.times(&b);
        assert_eq!((p.coeff(0), p.coeff(1), p.coeff(2)), (0, 1, 2));
        assert_eq!(a.shift(2).coeff(2), 1);
        assert_eq!(p.valuation(), Some(1));
        assert!(b.shift(2).vanishes());
    }
}
