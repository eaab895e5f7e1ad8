use hecke_grading::arith::Scalar;
use hecke_grading::grading::{
    build_bigrading, build_p_adapted, validate, CartanSpec, Clause, CoxeterMatrix, GradingGroup, Status,
};

#[test]
fn bigrading_passes_on_a_valid_realization() {
    let m = CoxeterMatrix::dihedral(Some(3));
    let q = |k| Scalar::from_int(k, 0);
    let cartan = CartanSpec::new(vec![vec![q(2), q(-1)], vec![q(-1), q(2)]], 0).unwrap();
    let report = validate(&build_bigrading(2), &m, &cartan);
    assert!(report.passed(), "{:?}", report.first_failure());
}

#[test]
fn p_adapted_splits_commuting_blocks() {
    // m = 4 = 2·2 in characteristic 2: the two colours get independent gradings
    let m = CoxeterMatrix::dihedral(Some(4));
    let (cartan, spec) = build_p_adapted(&m, 2).unwrap();
    assert!(!cartan.linked(0, 1));
    assert_ne!(spec.f[0], spec.f[1]);
    assert!(validate(&spec, &m, &cartan).passed());
}

#[test]
fn zero_pairings_are_not_a_realization_in_char_zero() {
    let m = CoxeterMatrix::dihedral(Some(4));
    let report = validate(&build_bigrading(2), &m, &CartanSpec::from_links(2, 0, |_, _| false));
    let first = report.first_failure().unwrap();
    assert_eq!(first.clause, Clause::Realization);
    assert!(matches!(first.status, Status::Fail(_)));
}

#[test]
fn torsion_groups() {
    let g = GradingGroup::new(2, vec![vec![2, 0]]).unwrap();
    assert_eq!(g.torsion(), vec![2]);
    assert_eq!(g.free_rank(), 1);
    assert_eq!(g.elem(&[3, 1]), g.elem(&[1, 1]));
}
