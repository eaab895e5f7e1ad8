use std::fmt::{Debug, Display};

/// Ring operations needed by diagram algebras. Zero and one are produced
/// from an existing value because prime-field values carry their modulus.
pub trait Coefficient: Clone + PartialEq + Debug + Display + Send + Sync {
    fn vanishes(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn pow(&self, e: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }
}
