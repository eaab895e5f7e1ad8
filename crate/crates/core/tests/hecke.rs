use hecke_grading::coxeter::CoxeterSystem;
use hecke_grading::grading::BarInvolution;
use hecke_grading::hecke::{hecke_from_json, hecke_to_json, GroupAlgebraElement, HeckeAlgebra, ParameterMap};

fn algebra(sys: CoxeterSystem) -> HeckeAlgebra {
    HeckeAlgebra::new(sys, ParameterMap::generic(&sys))
}

#[test]
fn quadratic_relation() {
    let h = algebra(CoxeterSystem::Dihedral(None));
    for s in 0..2 {
        let delta = h.delta(&h.system.generator(s).unwrap());
        let sq = h.multiply(&delta, &delta).unwrap();
        let want = delta.scale(&h.params.v_inv(s).sub(&h.params.v(s))).add(&h.one());
        assert_eq!(sq, want);
        // b_s² = (v_s + v_s⁻¹) b_s
        let b = h.b(s).unwrap();
        let c = h.params.v(s).add(&h.params.v_inv(s));
        assert_eq!(h.multiply(&b, &b).unwrap(), b.scale(&c));
    }
}

#[test]
fn braid_relation_in_finite_dihedral_groups() {
    for m in 2..7u64 {
        let h = algebra(CoxeterSystem::dihedral(Some(m)).unwrap());
        let (s, t) = (h.delta(&h.system.generator(0).unwrap()), h.delta(&h.system.generator(1).unwrap()));
        let mut left = h.one();
        let mut right = h.one();
        for i in 0..m {
            left = h.multiply(&left, if i % 2 == 0 { &s } else { &t }).unwrap();
            right = h.multiply(&right, if i % 2 == 0 { &t } else { &s }).unwrap();
        }
        assert_eq!(left, right, "m = {m}");
    }
}

#[test]
fn bott_samelson_elements_are_bar_invariant() {
    let sys = CoxeterSystem::Symmetric(4);
    let h = algebra(sys);
    let bar = BarInvolution::negation(h.group());
    for word in [vec![0], vec![0, 1, 0], vec![2, 1, 0, 1]] {
        let b = h.bott_samelson(&word).unwrap();
        assert_eq!(h.bar(&b, &bar).unwrap(), b);
    }
}

#[test]
fn leading_term_and_json() {
    let sys = CoxeterSystem::dihedral(Some(5)).unwrap();
    let h = algebra(sys);
    let word = [0, 1, 0, 1];
    let b = h.deodhar_expand(&word).unwrap();
    assert_eq!(b.coeff(&sys.product(&word).unwrap()), GroupAlgebraElement::one(h.group()));
    assert_eq!(hecke_from_json(&sys, h.group(), &hecke_to_json(&sys, &b)).unwrap(), b);
}

#[test]
fn equal_parameters_collapse_the_grading() {
    let sys = CoxeterSystem::Dihedral(None);
    let h = HeckeAlgebra::new(sys, ParameterMap::equal(&sys));
    assert_eq!(h.group().rank(), 1);
    let b = h.bott_samelson(&[0, 1]).unwrap();
    assert_eq!(b.len(), 4);
}
