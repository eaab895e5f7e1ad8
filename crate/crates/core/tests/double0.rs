use hecke_grading::dihedral_double0::{
    basis_to_csv, check_invariants, compute_basis, verify_closed_form, Double0Error,
};

#[test]
fn closed_forms_up_to_thirty() {
    let basis = compute_basis(30).unwrap();
    let report = verify_closed_form(&basis).unwrap();
    assert!(report.passed());
    assert_eq!(report.checked, 61);
}

#[test]
fn coefficients_are_nonnegative() {
    let basis = compute_basis(16).unwrap();
    let inv = check_invariants(&basis).unwrap();
    assert!(inv.unitriangular && inv.nonnegative && inv.spans_window);
    // coefficients with several monomials only occur at odd length
    assert!(!inv.non_monomial.is_empty());
    assert!(inv.non_monomial_only_at_odd_length(&basis.algebra().system));
}

#[test]
fn csv_header_and_length_guard() {
    let basis = compute_basis(3).unwrap();
    assert!(basis_to_csv(&basis).starts_with("basis,standard,coefficient\n"));
    assert!(matches!(compute_basis(0), Err(Double0Error::InvalidLength { .. })));
}

#[test]
fn bar_invariance_is_reported_for_every_element() {
    let basis = compute_basis(8).unwrap();
    let report = hecke_grading::dihedral_double0::bar_invariance(&basis).unwrap();
    assert_eq!(report.len(), basis.len());
    let fixed: Vec<String> =
        report.iter().filter(|(_, f)| *f).map(|(w, _)| basis.algebra().system.word_string(w)).collect();
    println!("bar-invariant up to length 8: {fixed:?}");
}
