use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::grading::{BarInvolution, GradingGroup, GroupElement};

/// Element of ℤ[A]: a finite sum of c·v^a with a ∈ A.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    group: GradingGroup,
    terms: BTreeMap<GroupElement, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(group: &GradingGroup) -> Self {
        GroupAlgebraElement { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn one(group: &GradingGroup) -> Self {
        Self::monomial(&group.zero())
    }

    /// v^a.
    pub fn monomial(a: &GroupElement) -> Self {
        Self::term(a, BigInt::one())
    }

    /// c·v^a.
    pub fn term(a: &GroupElement, c: BigInt) -> Self {
        let mut x = Self::zero(a.group());
        x.add_term(a.clone(), c);
        x
    }

    pub fn constant(group: &GradingGroup, c: i64) -> Self {
        Self::term(&group.zero(), BigInt::from(c))
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &GroupElement) -> BigInt {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    /// The single term if there is exactly one.
    pub fn as_monomial(&self) -> Option<(&GroupElement, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, a: GroupElement, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(a) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for (a, c) in &o.terms {
            x.add_term(a.clone(), c.clone());
        }
        x
    }

    pub fn neg(&self) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut x = Self::zero(&self.group);
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                x.add_term(a.add(b), c * d);
            }
        }
        x
    }

    /// Multiplication by v^a.
    pub fn shift(&self, a: &GroupElement) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(b, c)| (b.add(a), c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut x = Self::zero(&self.group);
        for (a, c) in &self.terms {
            x.add_term(a.clone(), c * k);
        }
        x
    }

    /// Pushes exponents through a group homomorphism.
    pub fn map_exponents(&self, target: &GradingGroup, f: impl Fn(&GroupElement) -> GroupElement) -> Self {
        let mut x = Self::zero(target);
        for (a, c) in &self.terms {
            x.add_term(f(a), c.clone());
        }
        x
    }

    /// v^a ↦ v^{bar(a)}.
    pub fn bar(&self, bar: &BarInvolution) -> Self {
        self.map_exponents(&self.group.clone(), |a| bar.apply(a))
    }

    /// Sum of the integer coefficients, i.e. the value at v = 1.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Formats with one name per group generator, e.g. "v1^2*v2^-1".
    pub fn format_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (a, c) in self.terms.iter().rev() {
            let rep = a.representative();
            let mono: Vec<String> = rep
                .iter()
                .zip(names)
                .filter(|(e, _)| **e != 0)
                .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
                .collect();
            let mono = mono.join("*");
            let text = match (mono.is_empty(), c) {
                (true, c) => c.to_string(),
                (false, c) if c.is_one() => mono,
                (false, c) if *c == -BigInt::one() => format!("-{mono}"),
                (false, c) => format!("{c}*{mono}"),
            };
            parts.push(text);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.group.rank()).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.format_with(&refs))
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
