use std::collections::HashMap;
use std::fmt;

use crate::arith::Coefficient;
use crate::par::{self, ExecMode};

use super::{Matching, TlError};

/// Linear combination of crossingless matchings with a fixed profile.
#[derive(Clone, PartialEq)]
pub struct TLElement<C: Coefficient> {
    n_bottom: usize,
    n_top: usize,
    delta: C,
    terms: HashMap<Matching, C>,
}

impl<C: Coefficient> TLElement<C> {
    pub fn zero(n_bottom: usize, n_top: usize, delta: C) -> Self {
        TLElement { n_bottom, n_top, delta, terms: HashMap::new() }
    }

    pub fn from_matching(m: Matching, coeff: C, delta: C) -> Self {
        let mut x = TLElement::zero(m.n_bottom(), m.n_top(), delta);
        x.add_term(m, coeff);
        x
    }

    pub fn identity(n: usize, delta: C) -> Self {
        let one = delta.one_like();
        TLElement::from_matching(Matching::identity(n), one, delta)
    }

    /// e_i in TL_n.
    pub fn generator(n: usize, i: usize, delta: C) -> Self {
        let one = delta.one_like();
        TLElement::from_matching(Matching::generator(n, i), one, delta)
    }

    pub fn from_terms(
        n_bottom: usize,
        n_top: usize,
        delta: C,
        terms: impl IntoIterator<Item = (Matching, C)>,
    ) -> Result<Self, TlError> {
        let mut x = TLElement::zero(n_bottom, n_top, delta);
        for (m, c) in terms {
            if m.n_bottom() != n_bottom || m.n_top() != n_top {
                return Err(TlError::ProfileMismatch);
            }
            x.add_term(m, c);
        }
        Ok(x)
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn delta(&self) -> &C {
        &self.delta
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Matching) -> C {
        self.terms.get(m).cloned().unwrap_or_else(|| self.delta.zero_like())
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<(&Matching, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Matching, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Matching, c: C) {
        if c.vanishes() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = x.plus(&c);
                if x.vanishes() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_same(&self, o: &Self) -> Result<(), TlError> {
        if self.n_bottom != o.n_bottom || self.n_top != o.n_top || self.delta != o.delta {
            return Err(TlError::ProfileMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, TlError> {
        self.check_same(o)?;
        let mut x = self.clone();
        for (m, c) in &o.terms {
            x.add_term(m.clone(), c.clone());
        }
        Ok(x)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, TlError> {
        self.add(&o.scale(&self.delta.one_like().negated()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut x = TLElement::zero(self.n_bottom, self.n_top, self.delta.clone());
        for (m, a) in &self.terms {
            x.add_term(m.clone(), a.times(c));
        }
        x
    }

    pub fn multiply(&self, y: &Self) -> Result<Self, TlError> {
        self.multiply_with(y, ExecMode::default())
    }

    /// Stacks `y` on top of `self`; each closed loop contributes δ.
    pub fn multiply_with(&self, y: &Self, mode: ExecMode) -> Result<Self, TlError> {
        if self.n_top != y.n_bottom || self.delta != y.delta {
            return Err(TlError::ProfileMismatch);
        }
        let left: Vec<(&Matching, &C)> = self.terms.iter().collect();
        let right: Vec<(&Matching, &C)> = y.terms.iter().collect();
        let delta = &self.delta;
        let delta_zero = delta.vanishes();
        let acc = par::map_reduce(
            mode,
            &left,
            HashMap::<Matching, C>::new,
            |mut acc, (a, ca)| {
                for (b, cb) in &right {
                    let (m, loops) = a.compose(b).expect("profiles checked");
                    if loops > 0 && delta_zero {
                        continue;
                    }
                    let mut c = ca.times(cb);
                    if loops > 0 {
                        c = c.times(&delta.pow(loops));
                    }
                    merge_term(&mut acc, m, c);
                }
                acc
            },
            merge_maps,
        );
        let mut out = TLElement::zero(self.n_bottom, y.n_top, self.delta.clone());
        out.terms = acc.into_iter().filter(|(_, c)| !c.vanishes()).collect();
        Ok(out)
    }

    pub fn tensor_id(&self, k: usize) -> Self {
        let mut x = TLElement::zero(self.n_bottom + k, self.n_top + k, self.delta.clone());
        for (m, c) in &self.terms {
            x.add_term(m.tensor_id(k), c.clone());
        }
        x
    }

    pub fn flip(&self) -> Self {
        let mut x = TLElement::zero(self.n_top, self.n_bottom, self.delta.clone());
        for (m, c) in &self.terms {
            x.add_term(m.flip(), c.clone());
        }
        x
    }

    pub fn rotate_ccw(&self) -> Result<Self, TlError> {
        let mut x = TLElement::zero(self.n_bottom, self.n_top, self.delta.clone());
        for (m, c) in &self.terms {
            x.add_term(m.rotate_ccw()?, c.clone());
        }
        Ok(x)
    }

    /// Closes off the last strand.
    pub fn close_last(&self) -> Result<Self, TlError> {
        if self.n_bottom != self.n_top || self.n_bottom == 0 {
            return Err(TlError::NotSquareProfile);
        }
        let n = self.n_bottom - 1;
        let mut x = TLElement::zero(n, n, self.delta.clone());
        for (m, c) in &self.terms {
            let (r, loops) = m.close_last()?;
            x.add_term(r, c.times(&self.delta.pow(loops)));
        }
        Ok(x)
    }

    /// Coefficient of the identity diagram.
    pub fn identity_coeff(&self) -> C {
        if self.n_bottom != self.n_top {
            return self.delta.zero_like();
        }
        self.coeff(&Matching::identity(self.n_bottom))
    }

    pub fn map_coeffs<D: Coefficient>(&self, delta: D, f: impl Fn(&C) -> D) -> TLElement<D> {
        let mut x = TLElement::zero(self.n_bottom, self.n_top, delta);
        for (m, c) in &self.terms {
            x.add_term(m.clone(), f(c));
        }
        x
    }

    pub fn try_map_coeffs<D: Coefficient, E>(
        &self,
        delta: D,
        f: impl Fn(&C) -> Result<D, E>,
    ) -> Result<TLElement<D>, E> {
        let mut x = TLElement::zero(self.n_bottom, self.n_top, delta);
        for (m, c) in self.terms() {
            x.add_term(m.clone(), f(c)?);
        }
        Ok(x)
    }
}

pub(crate) fn merge_term<C: Coefficient>(acc: &mut HashMap<Matching, C>, m: Matching, c: C) {
    match acc.get_mut(&m) {
        Some(x) => *x = x.plus(&c),
        None => {
            acc.insert(m, c);
        }
    }
}

pub(crate) fn merge_maps<C: Coefficient>(mut a: HashMap<Matching, C>, b: HashMap<Matching, C>) -> HashMap<Matching, C> {
    if a.len() < b.len() {
        return merge_maps(b, a);
    }
    for (m, c) in b {
        merge_term(&mut a, m, c);
    }
    a
}

impl<C: Coefficient> fmt::Debug for TLElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coefficient> fmt::Display for TLElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().iter().map(|(m, c)| format!("({c}){m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
