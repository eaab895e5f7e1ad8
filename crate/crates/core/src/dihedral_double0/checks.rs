use crate::coxeter::{CoxeterSystem, Element};
use crate::grading::{BarInvolution, GradingGroup};
use crate::hecke::{GroupAlgebraElement, HeckeAlgebra, HeckeElement, ParameterMap};
use crate::par::{self, ExecMode};

use super::{closed_form, gamma, mixed_constant, Double0Basis, Double0Error};

/// A standard-basis coefficient where two elements disagree.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub element: Element,
    pub at: Element,
    pub expected: GroupAlgebraElement,
    pub found: GroupAlgebraElement,
}

#[derive(Clone, Debug)]
pub struct ClosedFormReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The longest standard-basis term where the two differ.
fn first_difference(element: &Element, expected: &HeckeElement, found: &HeckeElement) -> Option<Mismatch> {
    let diff = expected.sub(found);
    let (at, _) = diff.terms().max_by_key(|(w, _)| match w {
        Element::Dihedral { len, first } => (*len, *first),
        Element::Perm(_) => (0, 0),
    })?;
    Some(Mismatch { element: element.clone(), at: at.clone(), expected: expected.coeff(at), found: found.coeff(at) })
}

/// Compares every computed element with its closed formula.
pub fn verify_closed_form(basis: &Double0Basis) -> Result<ClosedFormReport, Double0Error> {
    verify_closed_form_with(basis, ExecMode::default())
}

pub fn verify_closed_form_with(basis: &Double0Basis, mode: ExecMode) -> Result<ClosedFormReport, Double0Error> {
    let items: Vec<(&Element, &HeckeElement)> = basis.iter().collect();
    let results = par::map(mode, &items, |(w, b)| {
        closed_form(basis.algebra(), w).map(|cf| first_difference(w, &cf, b))
    });
    let mut mismatches = Vec::new();
    for r in results {
        mismatches.extend(r?);
    }
    Ok(ClosedFormReport { checked: items.len(), mismatches })
}

/// Shape of the computed elements.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    /// Top term δ_w with coefficient 1, every other term shorter.
    pub unitriangular: bool,
    /// Every coefficient has nonnegative integer coefficients.
    pub nonnegative: bool,
    /// Coefficients that are not a single v₁^a v₂^b with a, b ≥ 0 and coefficient 1.
    pub non_monomial: Vec<(Element, Element, GroupAlgebraElement)>,
    /// Every δ_w in the window is a combination of basis elements.
    pub spans_window: bool,
}

impl InvariantReport {
    /// Only the odd lengths ≥ 3 carry non-monomial coefficients.
    pub fn non_monomial_only_at_odd_length(&self, system: &CoxeterSystem) -> bool {
        self.non_monomial.iter().all(|(w, _, _)| {
            let l = system.length(w);
            l % 2 == 1 && l >= 3
        })
    }
}

pub fn check_invariants(basis: &Double0Basis) -> Result<InvariantReport, Double0Error> {
    let h = basis.algebra();
    let sys = &h.system;
    let mut unitriangular = true;
    let mut nonnegative = true;
    let mut non_monomial = Vec::new();
    for (w, b) in basis.iter() {
        let top_ok = b.coeff(w) == GroupAlgebraElement::one(h.group());
        let rest_ok = b.terms().all(|(y, _)| y == w || sys.length(y) < sys.length(w));
        unitriangular &= top_ok && rest_ok;
        for (y, c) in b.terms() {
            nonnegative &= c.terms().all(|(_, k)| k.sign() != num_bigint::Sign::Minus);
            let single = match c.as_monomial() {
                Some((a, k)) => k == &1.into() && a.representative().iter().all(|&x| x >= 0),
                None => false,
            };
            if !single {
                non_monomial.push((w.clone(), y.clone(), c.clone()));
            }
        }
    }
    let mut spans_window = true;
    for (w, _) in basis.iter() {
        let delta = h.delta(w);
        let coeffs = basis.express(&delta)?;
        let mut back = h.zero();
        for (x, c) in &coeffs {
            back = back.add(&basis.get(x).expect("expressed in basis").scale(c));
        }
        spans_window &= back == delta;
    }
    Ok(InvariantReport { unitriangular, nonnegative, non_monomial, spans_window })
}

/// Exploratory: whether each basis element is fixed by the bar involution
/// v₁ ↦ v₁⁻¹, v₂ ↦ v₂⁻¹, δ_w ↦ δ_{w⁻¹}⁻¹. Nothing here is asserted.
pub fn bar_invariance(basis: &Double0Basis) -> Result<Vec<(Element, bool)>, Double0Error> {
    let h = basis.algebra();
    let bar = BarInvolution::negation(h.group());
    basis.iter().map(|(w, b)| Ok((w.clone(), &h.bar(b, &bar)? == b))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    /// Highest k used in the k ≥ 2 identities.
    pub max_k: u64,
    pub checks: Vec<IdentityCheck>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn label(colour: usize, k: u64) -> String {
    format!("b_{}_{k}", colour + 1)
}

/// The product identities for one colour, on a family `at(k)` of elements.
fn product_identities(
    h: &HeckeAlgebra,
    colour: usize,
    max_k: u64,
    source: &str,
    at: &(dyn Fn(u64) -> HeckeElement + Sync),
    mode: ExecMode,
) -> Result<Vec<IdentityCheck>, Double0Error> {
    let (s, t) = (colour, 1 - colour);
    let (ns, nt) = (s + 1, t + 1);
    let c = mixed_constant(h.group());
    let bs = at(1);
    let bt = h.system.alternating(t, 1).map_err(crate::hecke::HeckeError::from)?;
    let bt = if source == "recursion" { h.b(t)? } else { closed_form(h, &bt)? };
    let mut out = Vec::new();
    let st = h.multiply(&bs, &bt)?;
    let sts = h.multiply(&st, &bs)?;
    let stst = h.multiply(&sts, &bt)?;
    out.push(IdentityCheck { name: format!("b{ns}b{nt} = {} [{source}]", label(colour, 2)), holds: st == at(2) });
    out.push(IdentityCheck { name: format!("b{ns}b{nt}b{ns} = {} [{source}]", label(colour, 3)), holds: sts == at(3) });
    out.push(IdentityCheck {
        name: format!("b{ns}b{nt}b{ns}b{nt} = {} + c {} [{source}]", label(colour, 4), label(colour, 2)),
        holds: stst == at(4).add(&at(2).scale(&c)),
    });
    let ks: Vec<u64> = (2..=max_k).collect();
    let per_k = par::map(mode, &ks, |&k| -> Result<Vec<IdentityCheck>, Double0Error> {
        let even = at(2 * k);
        let odd = h.multiply(&even, &bs)?;
        let up = h.multiply(&odd, &bt)?;
        let rhs = at(2 * k + 2).add(&even.scale(&c)).add(&at(2 * k - 2));
        Ok(vec![
            IdentityCheck {
                name: format!("{}b{ns} = {} [{source}]", label(colour, 2 * k), label(colour, 2 * k + 1)),
                holds: odd == at(2 * k + 1),
            },
            IdentityCheck {
                name: format!(
                    "{}b{ns}b{nt} = {} + c {} + {} [{source}]",
                    label(colour, 2 * k),
                    label(colour, 2 * k + 2),
                    label(colour, 2 * k),
                    label(colour, 2 * k - 2)
                ),
                holds: up == rhs,
            },
        ])
    });
    for r in per_k {
        out.extend(r?);
    }
    Ok(out)
}

/// Γ_{1_{2k}} b₁ = Γ_{1_{2k+1}} + v₁⁻¹v₂ Γ_{1_{2k−1}} and
/// Γ_{1_{2k+1}} b₂ = Γ_{1_{2k+2}} + v₁v₂⁻¹ Γ_{1_{2k}}, with the colour swap.
fn gamma_identities(h: &HeckeAlgebra, max_k: u64) -> Result<Vec<IdentityCheck>, Double0Error> {
    let mut out = Vec::new();
    for colour in 0..2 {
        let (s, t) = (colour, 1 - colour);
        let g = |k: u64| -> Result<HeckeElement, Double0Error> {
            gamma(h, &h.system.alternating(colour, k).map_err(crate::hecke::HeckeError::from)?)
        };
        let e = if colour == 0 { [-1, 1] } else { [1, -1] };
        let down = GroupAlgebraElement::monomial(&h.group().elem(&e));
        let up = GroupAlgebraElement::monomial(&h.group().elem(&[-e[0], -e[1]]));
        for k in 1..=max_k {
            let lhs = h.mult_b_s(&g(2 * k)?, s)?;
            out.push(IdentityCheck {
                name: format!("G_{0}_{1}b{2} = G_{0}_{3} + shift G_{0}_{4}", colour + 1, 2 * k, s + 1, 2 * k + 1, 2 * k - 1),
                holds: lhs == g(2 * k + 1)?.add(&g(2 * k - 1)?.scale(&down)),
            });
            let lhs = h.mult_b_s(&g(2 * k + 1)?, t)?;
            out.push(IdentityCheck {
                name: format!("G_{0}_{1}b{2} = G_{0}_{3} + shift G_{0}_{4}", colour + 1, 2 * k + 1, t + 1, 2 * k + 2, 2 * k),
                holds: lhs == g(2 * k + 2)?.add(&g(2 * k)?.scale(&up)),
            });
        }
    }
    Ok(out)
}

/// Collapses ℤ² → ℤ, (a, b) ↦ a + b, so that v₁ = v₂ = v.
fn specialize(h: &HeckeElement, target: &GradingGroup) -> HeckeElement {
    h.map_coeffs(target, |c| {
        c.map_exponents(target, |a| {
            let r = a.representative();
            target.elem(&[r[0] + r[1]])
        })
    })
}

/// Σ_{y ≤ w} v^{ℓ(w) − ℓ(y)} δ_y in the equal-parameter algebra.
fn kl_element(e: &HeckeAlgebra, w: &Element) -> HeckeElement {
    let len = e.system.length(w);
    let mut out = e.zero();
    for y in e.system.elements_up_to(len) {
        if e.system.length(&y) < len || &y == w {
            let d = (len - e.system.length(&y)) as i64;
            out.add_term(y, GroupAlgebraElement::monomial(&e.group().elem(&[d])));
        }
    }
    out
}

fn equal_parameter_checks(basis: &Double0Basis) -> Result<Vec<IdentityCheck>, Double0Error> {
    let sys = CoxeterSystem::Dihedral(None);
    let e = HeckeAlgebra::new(sys, ParameterMap::equal(&sys));
    let z = e.group().clone();
    let c = mixed_constant(basis.algebra().group()).map_exponents(&z, |a| {
        let r = a.representative();
        z.elem(&[r[0] + r[1]])
    });
    let mut out = vec![IdentityCheck { name: "c at v1 = v2 is 2".into(), holds: c == GroupAlgebraElement::constant(&z, 2) }];
    let kl = |colour: usize, k: u64| kl_element(&e, &sys.alternating(colour, k).expect("dihedral"));
    let two = GroupAlgebraElement::constant(&z, 2);
    let bs4 = e.bott_samelson(&[0, 1, 0, 1])?;
    out.push(IdentityCheck { name: "b1b2b1b2 = KL_1_4 + 2 KL_1_2 at v1 = v2".into(), holds: bs4 == kl(0, 4).add(&kl(0, 2).scale(&two)) });
    for colour in 0..2 {
        for k in 1..=basis.max_length() {
            let b = specialize(basis.b(colour, k), &z);
            if k % 2 == 0 || k == 1 {
                out.push(IdentityCheck { name: format!("{} = KL at v1 = v2", label(colour, k)), holds: b == kl(colour, k) });
            } else {
                out.push(IdentityCheck {
                    name: format!("{} = KL_{}_{k} + KL_{}_{} at v1 = v2", label(colour, k), colour + 1, colour + 1, k - 2),
                    holds: b == kl(colour, k).add(&kl(colour, k - 2)),
                });
            }
        }
    }
    Ok(out)
}

/// Checks the product identities on the recursion output and, independently,
/// on the closed formulas; the Γ step identities; the same identities with
/// b_{c_{2k}}·(b_s b_t) associated the other way; and the specialization
/// v₁ = v₂.
pub fn structure_constant_check(basis: &Double0Basis, max_k: u64) -> Result<StructureReport, Double0Error> {
    structure_constant_check_with(basis, max_k, ExecMode::default())
}

pub fn structure_constant_check_with(
    basis: &Double0Basis,
    max_k: u64,
    mode: ExecMode,
) -> Result<StructureReport, Double0Error> {
    let n = basis.max_length();
    if n < 8 {
        return Err(Double0Error::InvalidLength { got: n, min: 8 });
    }
    let max_k = max_k.min((n - 2) / 2);
    let h = basis.algebra();
    let mut checks = Vec::new();
    for colour in 0..2 {
        let from_basis = |k: u64| basis.b(colour, k).clone();
        checks.extend(product_identities(h, colour, max_k, "recursion", &from_basis, mode)?);
        let from_formula =
            |k: u64| closed_form(h, &h.system.alternating(colour, k).expect("dihedral")).expect("dihedral element");
        checks.extend(product_identities(h, colour, max_k, "closed form", &from_formula, mode)?);
        // b_{c_{2k}}·(b_s b_t) as one product instead of two steps
        let st = h.multiply(&h.b(colour)?, &h.b(1 - colour)?)?;
        let c = mixed_constant(h.group());
        for k in 2..=max_k {
            let lhs = h.multiply(basis.b(colour, 2 * k), &st)?;
            let rhs = basis.b(colour, 2 * k + 2).add(&basis.b(colour, 2 * k).scale(&c)).add(basis.b(colour, 2 * k - 2));
            checks.push(IdentityCheck {
                name: format!("{}(b{}b{}) reassociated", label(colour, 2 * k), colour + 1, 2 - colour),
                holds: lhs == rhs,
            });
        }
    }
    checks.extend(gamma_identities(h, max_k)?);
    checks.extend(equal_parameter_checks(basis)?);
    Ok(StructureReport { max_k, checks })
}
