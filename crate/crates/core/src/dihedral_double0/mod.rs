//! The double-0 canonical basis of the infinite dihedral Hecke algebra with
//! parameters v₁ = v^{(1,0)}, v₂ = v^{(0,1)}: construction by recursion,
//! comparison with the closed Γ formulas, product identities and a windowed
//! cell computation.

mod cells;
mod checks;
mod emit;

pub use cells::{compute_cells, compute_cells_with, expected_cells, summand_check, CellReport, SummandReport};
pub use checks::{
    bar_invariance, check_invariants, structure_constant_check, structure_constant_check_with, verify_closed_form,
    verify_closed_form_with, ClosedFormReport, IdentityCheck, InvariantReport, Mismatch, StructureReport,
};
pub use emit::{basis_to_csv, basis_to_json};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coxeter::{CoxeterSystem, Element};
use crate::grading::{GradingGroup, GroupElement};
use crate::hecke::{GroupAlgebraElement, HeckeAlgebra, HeckeElement, HeckeError, ParameterMap};

/// Longest truncation accepted by [`compute_basis`].
pub const MAX_LENGTH: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Double0Error {
    #[error("truncation length must be between {min} and {MAX_LENGTH}, got {got}")]
    InvalidLength { got: u64, min: u64 },
    #[error("{0} is not an element of the infinite dihedral group")]
    NotDihedral(String),
    #[error("{0} lies outside the computed window")]
    OutsideWindow(String),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}

/// D_∞ over ℤ[v₁^{±1}, v₂^{±1}].
pub fn double0_algebra() -> HeckeAlgebra {
    let sys = CoxeterSystem::Dihedral(None);
    let g = GradingGroup::free(2);
    let params = ParameterMap::new(&sys, vec![g.elem(&[1, 0]), g.elem(&[0, 1])]).expect("no odd edges in D_∞");
    HeckeAlgebra::new(sys, params)
}

/// The structure constant v₁v₂⁻¹ + v₁⁻¹v₂.
pub fn mixed_constant(group: &GradingGroup) -> GroupAlgebraElement {
    GroupAlgebraElement::monomial(&group.elem(&[1, -1])).add(&GroupAlgebraElement::monomial(&group.elem(&[-1, 1])))
}

fn dihedral_parts(w: &Element) -> Result<(usize, u64), Double0Error> {
    match w {
        Element::Dihedral { first, len } => Ok((*first as usize, *len)),
        other => Err(Double0Error::NotDihedral(other.to_string())),
    }
}

/// l_w = (1,0) + (0,1) + … alternating from the first letter of w.
pub fn length_vector(w: &Element) -> Result<[i64; 2], Double0Error> {
    let (first, len) = dihedral_parts(w)?;
    let mut l = [0; 2];
    l[first] = len.div_ceil(2) as i64;
    l[1 - first] = (len / 2) as i64;
    Ok(l)
}

/// Γ_w = Σ_{y ≤ w} v^{l_w − l_y} δ_y.
pub fn gamma(algebra: &HeckeAlgebra, w: &Element) -> Result<HeckeElement, Double0Error> {
    let g = algebra.group();
    let lw = length_vector(w)?;
    let (_, len) = dihedral_parts(w)?;
    let mut out = algebra.zero();
    for y in algebra.system.elements_up_to(len) {
        if algebra.system.bruhat_leq(&y, w).map_err(HeckeError::from)? {
            let ly = length_vector(&y)?;
            out.add_term(y, GroupAlgebraElement::monomial(&g.elem(&[lw[0] - ly[0], lw[1] - ly[1]])));
        }
    }
    Ok(out)
}

/// The closed formula for b_w: Γ_w at even length or length 1, and
/// Γ_w + v^{±(−1,1)} Γ_{w′} at odd length ≥ 3, where w′ drops two letters.
pub fn closed_form(algebra: &HeckeAlgebra, w: &Element) -> Result<HeckeElement, Double0Error> {
    let (first, len) = dihedral_parts(w)?;
    let top = gamma(algebra, w)?;
    if len % 2 == 0 || len == 1 {
        return Ok(top);
    }
    let shorter = algebra.system.alternating(first, len - 2).map_err(HeckeError::from)?;
    let e = if first == 0 { [-1, 1] } else { [1, -1] };
    let shift = GroupAlgebraElement::monomial(&algebra.group().elem(&e));
    Ok(top.add(&gamma(algebra, &shorter)?.scale(&shift)))
}

/// b_{1_k}, b_{2_k} for k ≤ N together with b_e = δ_e.
#[derive(Clone, Debug)]
pub struct Double0Basis {
    algebra: HeckeAlgebra,
    max_length: u64,
    order: Vec<Element>,
    elements: BTreeMap<Element, HeckeElement>,
}

impl Double0Basis {
    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.algebra
    }

    pub fn max_length(&self) -> u64 {
        self.max_length
    }

    pub fn get(&self, w: &Element) -> Option<&HeckeElement> {
        self.elements.get(w)
    }

    /// b_{c_k} for colour c ∈ {0, 1}.
    pub fn b(&self, colour: usize, k: u64) -> &HeckeElement {
        let w = self.algebra.system.alternating(colour, k).expect("colour is 0 or 1");
        &self.elements[&w]
    }

    /// Elements by length, then colour.
    pub fn iter(&self) -> impl Iterator<Item = (&Element, &HeckeElement)> {
        self.order.iter().map(|w| (w, &self.elements[w]))
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Coefficients of h in the basis, peeling off a longest term each step.
    pub fn express(&self, h: &HeckeElement) -> Result<BTreeMap<Element, GroupAlgebraElement>, Double0Error> {
        let sys = &self.algebra.system;
        let mut rest = h.clone();
        let mut out = BTreeMap::new();
        while let Some((w, c)) = rest.terms().max_by_key(|(w, _)| (sys.length(w), (*w).clone())) {
            let (w, c) = (w.clone(), c.clone());
            let b = self.elements.get(&w).ok_or_else(|| Double0Error::OutsideWindow(sys.word_string(&w)))?;
            rest = rest.sub(&b.scale(&c));
            out.insert(w, c);
        }
        Ok(out)
    }
}

/// One step of the recursion for colour `a`: b_{a_len} from shorter elements.
fn next_element(
    algebra: &HeckeAlgebra,
    elems: &BTreeMap<Element, HeckeElement>,
    a: usize,
    len: u64,
) -> Result<HeckeElement, Double0Error> {
    let sys = &algebra.system;
    let at = |k: u64| -> &HeckeElement { &elems[&sys.alternating(a, k).expect("valid colour")] };
    let (s, t) = (a, 1 - a);
    let c = mixed_constant(algebra.group());
    Ok(match len {
        1 => algebra.b(s)?,
        2 => algebra.mult_b_s(at(1), t)?,
        3 => algebra.mult_b_s(at(2), s)?,
        4 => algebra.mult_b_s(at(3), t)?.sub(&at(2).scale(&c)),
        k if k % 2 == 1 => algebra.mult_b_s(at(k - 1), s)?,
        k => algebra.mult_b_s(at(k - 1), t)?.sub(&at(k - 2).scale(&c)).sub(at(k - 4)),
    })
}

/// Solves the product recursions for all lengths ≤ `n`, each colour on its own.
pub fn compute_basis(n: u64) -> Result<Double0Basis, Double0Error> {
    if !(1..=MAX_LENGTH).contains(&n) {
        return Err(Double0Error::InvalidLength { got: n, min: 1 });
    }
    let algebra = double0_algebra();
    let mut elements = BTreeMap::new();
    elements.insert(algebra.system.identity(), algebra.one());
    for a in 0..2 {
        for len in 1..=n {
            let x = next_element(&algebra, &elements, a, len)?;
            elements.insert(algebra.system.alternating(a, len).map_err(HeckeError::from)?, x);
        }
    }
    let order = algebra.system.elements_up_to(n);
    Ok(Double0Basis { algebra, max_length: n, order, elements })
}

/// s₁ ↔ s₂ together with v₁ ↔ v₂.
pub fn colour_swap(algebra: &HeckeAlgebra, h: &HeckeElement) -> HeckeElement {
    let sys = &algebra.system;
    let g = algebra.group().clone();
    let swap_exp = |a: &GroupElement| {
        let r = a.representative();
        g.elem(&[r[1], r[0]])
    };
    let mut out = algebra.zero();
    for (w, c) in h.terms() {
        let w = match w {
            Element::Dihedral { first, len } if *len > 0 => sys.alternating(1 - *first as usize, *len).expect("dihedral"),
            other => other.clone(),
        };
        out.add_term(w, c.map_exponents(&g, swap_exp));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_small() {
        let h = double0_algebra();
        let g = h.group().clone();
        let e = h.system.identity();
        assert_eq!(gamma(&h, &e).unwrap(), h.one());
        let s1 = h.system.alternating(0, 1).unwrap();
        assert_eq!(gamma(&h, &s1).unwrap(), h.b(0).unwrap());
        let w = h.system.alternating(0, 2).unwrap();
        let s2 = h.system.alternating(1, 1).unwrap();
        let mono = |a: [i64; 2]| GroupAlgebraElement::monomial(&g.elem(&a));
        let mut expected = h.delta(&w);
        expected.add_term(s1, mono([0, 1]));
        expected.add_term(s2, mono([1, 0]));
        expected.add_term(e, mono([1, 1]));
        assert_eq!(gamma(&h, &w).unwrap(), expected);
    }

    #[test]
    fn length_vectors_sum_to_length() {
        for first in 0..2u8 {
            for len in 0..9 {
                let l = length_vector(&Element::Dihedral { first, len }).unwrap();
                assert_eq!((l[0] + l[1]) as u64, len);
            }
        }
        assert_eq!(length_vector(&Element::Dihedral { first: 1, len: 3 }).unwrap(), [1, 2]);
        assert!(length_vector(&Element::Perm(vec![0, 1])).is_err());
    }

    #[test]
    fn seeds_and_swap() {
        let basis = compute_basis(6).unwrap();
        let h = basis.algebra();
        assert_eq!(*basis.b(0, 2), h.bott_samelson(&[0, 1]).unwrap());
        assert_eq!(*basis.b(0, 3), h.bott_samelson(&[0, 1, 0]).unwrap());
        let c = mixed_constant(h.group());
        let b4 = h.bott_samelson(&[0, 1, 0, 1]).unwrap().sub(&basis.b(0, 2).scale(&c));
        assert_eq!(*basis.b(0, 4), b4);
        assert_eq!(*basis.b(0, 5), h.mult_b_s(basis.b(0, 4), 0).unwrap());
        for k in 1..=6 {
            assert_eq!(colour_swap(h, basis.b(0, k)), *basis.b(1, k));
        }
        assert_eq!(basis.len(), 13);
        assert!(compute_basis(0).is_err());
    }

    #[test]
    fn express_round_trip() {
        let basis = compute_basis(5).unwrap();
        let h = basis.algebra();
        let x = h.bott_samelson(&[1, 0, 1, 0]).unwrap();
        let coeffs = basis.express(&x).unwrap();
        let mut back = h.zero();
        for (w, c) in &coeffs {
            back = back.add(&basis.get(w).unwrap().scale(c));
        }
        assert_eq!(back, x);
        assert_eq!(coeffs[&h.system.alternating(1, 2).unwrap()], mixed_constant(h.group()));
        let long = h.bott_samelson(&[0, 1, 0, 1, 0, 1]).unwrap();
        assert!(matches!(basis.express(&long), Err(Double0Error::OutsideWindow(_))));
    }
}
