use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::coxeter::{all_subexpressions, defect_uneq, unequal_classes, CoxeterSystem, Element};
use crate::grading::{BarInvolution, GradingGroup, GroupElement};
use crate::par::{self, ExecMode};

use super::{GroupAlgebraElement, HeckeError};

/// v_s = v^{L(s)}, constant on classes of the relation generated by odd m_st.
#[derive(Clone, Debug)]
pub struct ParameterMap {
    group: GradingGroup,
    exponents: Vec<GroupElement>,
}

impl ParameterMap {
    pub fn new(system: &CoxeterSystem, exponents: Vec<GroupElement>) -> Result<Self, HeckeError> {
        if exponents.len() != system.rank() {
            return Err(HeckeError::ParameterMismatch(format!(
                "{} parameters for {} generators",
                exponents.len(),
                system.rank()
            )));
        }
        let group = match exponents.first() {
            Some(e) => e.group().clone(),
            None => GradingGroup::free(0),
        };
        let (_, idx) = unequal_classes(system);
        for s in 0..system.rank() {
            for t in 0..system.rank() {
                if idx[s] == idx[t] && exponents[s] != exponents[t] {
                    return Err(HeckeError::ParameterMismatch(format!(
                        "s{} and s{} are conjugate but have different parameters",
                        s + 1,
                        t + 1
                    )));
                }
            }
        }
        Ok(ParameterMap { group, exponents })
    }

    /// The universal choice: A = ℤ^{classes}, v_s = v^{e_[s]}.
    pub fn generic(system: &CoxeterSystem) -> Self {
        let (classes, idx) = unequal_classes(system);
        let group = GradingGroup::free(classes.len());
        let exponents = (0..system.rank()).map(|s| group.generator(idx[s])).collect();
        ParameterMap { group, exponents }
    }

    /// Every v_s equal to one variable v.
    pub fn equal(system: &CoxeterSystem) -> Self {
        let group = GradingGroup::free(1);
        ParameterMap { exponents: vec![group.generator(0); system.rank()], group }
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn exponent(&self, s: usize) -> &GroupElement {
        &self.exponents[s]
    }

    pub fn v(&self, s: usize) -> GroupAlgebraElement {
        GroupAlgebraElement::monomial(&self.exponents[s])
    }

    pub fn v_inv(&self, s: usize) -> GroupAlgebraElement {
        GroupAlgebraElement::monomial(&self.exponents[s].neg())
    }
}

/// Σ c_w δ_w with c_w ∈ ℤ[A].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    group: GradingGroup,
    terms: BTreeMap<Element, GroupAlgebraElement>,
}

impl HeckeElement {
    pub fn zero(group: &GradingGroup) -> Self {
        HeckeElement { group: group.clone(), terms: BTreeMap::new() }
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

    /// Terms in the order of the canonical forms.
    pub fn terms(&self) -> impl Iterator<Item = (&Element, &GroupAlgebraElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Element) -> GroupAlgebraElement {
        self.terms.get(w).cloned().unwrap_or_else(|| GroupAlgebraElement::zero(&self.group))
    }

    pub fn add_term(&mut self, w: Element, c: GroupAlgebraElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for (w, c) in &o.terms {
            x.add_term(w.clone(), c.clone());
        }
        x
    }

    pub fn neg(&self) -> Self {
        HeckeElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Left multiplication by a scalar of ℤ[A].
    pub fn scale(&self, c: &GroupAlgebraElement) -> Self {
        let mut x = HeckeElement::zero(&self.group);
        for (w, d) in &self.terms {
            x.add_term(w.clone(), c.mul(d));
        }
        x
    }

    pub fn map_coeffs(&self, group: &GradingGroup, f: impl Fn(&GroupAlgebraElement) -> GroupAlgebraElement) -> Self {
        let mut x = HeckeElement::zero(group);
        for (w, c) in &self.terms {
            x.add_term(w.clone(), f(c));
        }
        x
    }
}

/// The Hecke algebra of a Coxeter system with the given parameters:
/// δ_s² = (v_s⁻¹ − v_s) δ_s + 1.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    pub system: CoxeterSystem,
    pub params: ParameterMap,
}

impl HeckeAlgebra {
    pub fn new(system: CoxeterSystem, params: ParameterMap) -> Self {
        HeckeAlgebra { system, params }
    }

    pub fn group(&self) -> &GradingGroup {
        self.params.group()
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement::zero(self.group())
    }

    pub fn delta(&self, w: &Element) -> HeckeElement {
        let mut x = self.zero();
        x.add_term(w.clone(), GroupAlgebraElement::one(self.group()));
        x
    }

    pub fn one(&self) -> HeckeElement {
        self.delta(&self.system.identity())
    }

    /// b_s = δ_s + v_s.
    pub fn b(&self, s: usize) -> Result<HeckeElement, HeckeError> {
        self.mult_b_s(&self.one(), s)
    }

    fn quadratic(&self, s: usize) -> GroupAlgebraElement {
        self.params.v_inv(s).sub(&self.params.v(s))
    }

    /// h·δ_s.
    pub fn mult_delta_s(&self, h: &HeckeElement, s: usize) -> Result<HeckeElement, HeckeError> {
        let mut x = self.zero();
        let q = self.quadratic(s);
        for (w, c) in h.terms() {
            let ws = self.system.mul_gen(w, s)?;
            if self.system.length(&ws) < self.system.length(w) {
                x.add_term(w.clone(), c.mul(&q));
            }
            x.add_term(ws, c.clone());
        }
        Ok(x)
    }

    /// δ_s·h.
    pub fn left_mult_delta_s(&self, s: usize, h: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        let mut x = self.zero();
        let q = self.quadratic(s);
        for (w, c) in h.terms() {
            let sw = self.system.left_mul_gen(s, w)?;
            if self.system.length(&sw) < self.system.length(w) {
                x.add_term(w.clone(), c.mul(&q));
            }
            x.add_term(sw, c.clone());
        }
        Ok(x)
    }

    /// h·b_s: δ_w b_s = δ_{ws} + v_s δ_w if ws > w, δ_{ws} + v_s⁻¹ δ_w otherwise.
    pub fn mult_b_s(&self, h: &HeckeElement, s: usize) -> Result<HeckeElement, HeckeError> {
        let mut x = self.zero();
        let (v, vi) = (self.params.v(s), self.params.v_inv(s));
        for (w, c) in h.terms() {
            let ws = self.system.mul_gen(w, s)?;
            let up = self.system.length(&ws) > self.system.length(w);
            x.add_term(w.clone(), c.mul(if up { &v } else { &vi }));
            x.add_term(ws, c.clone());
        }
        Ok(x)
    }

    /// b_s·h.
    pub fn left_mult_b_s(&self, s: usize, h: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        Ok(self.left_mult_delta_s(s, h)?.add(&h.scale(&self.params.v(s))))
    }

    pub fn multiply(&self, x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        let mut out = self.zero();
        for (w, c) in y.terms() {
            let mut part = x.clone();
            for s in self.system.reduced_word(w) {
                part = self.mult_delta_s(&part, s)?;
            }
            out = out.add(&part.map_coeffs(self.group(), |d| d.mul(c)));
        }
        Ok(out)
    }

    /// b_{s₁} ⋯ b_{s_d} by iterated right multiplication.
    pub fn bott_samelson(&self, word: &[usize]) -> Result<HeckeElement, HeckeError> {
        crate::coxeter::check_expression_len(word)?;
        word.iter().try_fold(self.one(), |acc, &s| self.mult_b_s(&acc, s))
    }

    pub fn deodhar_expand(&self, word: &[usize]) -> Result<HeckeElement, HeckeError> {
        self.deodhar_expand_with(word, ExecMode::default())
    }

    /// Σ over subexpressions e of v^{defect(e)} δ_{endpoint(e)}.
    pub fn deodhar_expand_with(&self, word: &[usize], mode: ExecMode) -> Result<HeckeElement, HeckeError> {
        let labelings = all_subexpressions(&self.system, word)?;
        let (classes, _) = unequal_classes(&self.system);
        // exponent of 1_c for each class c
        let class_exp: Vec<GroupElement> = classes.iter().map(|c| self.params.exponent(c[0]).clone()).collect();
        let group = self.group().clone();
        let out = par::map_reduce(
            mode,
            &labelings,
            || HeckeElement::zero(&group),
            |mut acc, l| {
                let d = defect_uneq(l);
                let e = d.iter().zip(&class_exp).fold(group.zero(), |a, (k, x)| a.add(&x.scale(*k)));
                acc.add_term(l.endpoint.clone(), GroupAlgebraElement::monomial(&e));
                acc
            },
            |a, b| a.add(&b),
        );
        Ok(out)
    }

    /// Kazhdan–Lusztig bar involution: v^a ↦ v^{bar a}, δ_s ↦ δ_s + (v_s − v_s⁻¹).
    /// Needs bar(v_s) = v_s⁻¹.
    pub fn bar(&self, h: &HeckeElement, bar: &BarInvolution) -> Result<HeckeElement, HeckeError> {
        for s in 0..self.system.rank() {
            let e = self.params.exponent(s);
            if bar.apply(e) != e.neg() {
                return Err(HeckeError::BarIncompatible(format!("bar does not invert v_s{}", s + 1)));
            }
        }
        let mut out = self.zero();
        for (w, c) in h.terms() {
            let mut img = self.one();
            for s in self.system.reduced_word(w) {
                let shifted = img.scale(&self.params.v(s).sub(&self.params.v_inv(s)));
                img = self.mult_delta_s(&img, s)?.add(&shifted);
            }
            out = out.add(&img.scale(&c.bar(bar)));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dinf() -> HeckeAlgebra {
        let sys = CoxeterSystem::Dihedral(None);
        HeckeAlgebra::new(sys, ParameterMap::generic(&sys))
    }

    #[test]
    fn quadratic_relation_and_b_products() {
        let h = dinf();
        let s = h.system.generator(0).unwrap();
        let ds = h.delta(&s);
        let sq = h.mult_delta_s(&ds, 0).unwrap();
        let expected = ds.scale(&h.params.v_inv(0).sub(&h.params.v(0))).add(&h.one());
        assert_eq!(sq, expected);
        let b = h.b(0).unwrap();
        assert_eq!(h.mult_b_s(&ds, 0).unwrap(), h.one().add(&ds.scale(&h.params.v_inv(0))));
        let bb = h.multiply(&b, &b).unwrap();
        let v = h.params.v(0);
        let vi = h.params.v_inv(0);
        let g = h.group().clone();
        let expected = ds.scale(&v.add(&vi)).add(&h.one().scale(&GroupAlgebraElement::one(&g).add(&v.mul(&v))));
        assert_eq!(bb, expected);
        assert_eq!(h.mult_b_s(&b, 0).unwrap(), bb);
    }

    #[test]
    fn left_and_right_agree_with_general_product() {
        let h = dinf();
        let x = h.bott_samelson(&[0, 1, 0]).unwrap();
        for s in 0..2 {
            let b = h.b(s).unwrap();
            assert_eq!(h.left_mult_b_s(s, &x).unwrap(), h.multiply(&b, &x).unwrap());
            assert_eq!(h.mult_b_s(&x, s).unwrap(), h.multiply(&x, &b).unwrap());
        }
    }

    #[test]
    fn deodhar_small() {
        let h = dinf();
        for w in [vec![], vec![0], vec![0, 0], vec![0, 1], vec![1, 0, 1, 1, 0]] {
            assert_eq!(h.deodhar_expand(&w).unwrap(), h.bott_samelson(&w).unwrap(), "{w:?}");
        }
        let bs = h.bott_samelson(&[0, 1]).unwrap();
        assert_eq!(bs.len(), 4);
    }

    #[test]
    fn bar_fixes_b_s_and_is_involutive() {
        let h = dinf();
        let bar = BarInvolution::negation(h.group());
        for s in 0..2 {
            let b = h.b(s).unwrap();
            assert_eq!(h.bar(&b, &bar).unwrap(), b);
        }
        let x = h.bott_samelson(&[0, 1, 1, 0]).unwrap().add(&h.delta(&h.system.alternating(1, 3).unwrap()));
        assert_eq!(h.bar(&h.bar(&x, &bar).unwrap(), &bar).unwrap(), x);
        assert_eq!(h.bar(&h.one(), &bar).unwrap(), h.one());
    }

    #[test]
    fn parameters_respect_conjugacy() {
        let a2 = CoxeterSystem::Dihedral(Some(3));
        let g = GradingGroup::free(2);
        assert!(ParameterMap::new(&a2, vec![g.elem(&[1, 0]), g.elem(&[0, 1])]).is_err());
        let b2 = CoxeterSystem::Dihedral(Some(4));
        assert!(ParameterMap::new(&b2, vec![g.elem(&[1, 0]), g.elem(&[0, 1])]).is_ok());
    }
}
