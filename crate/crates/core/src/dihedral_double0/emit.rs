use serde_json::{json, Value};

use crate::hecke::hecke_to_json;

use super::Double0Basis;

/// Long-form table `basis,standard,coefficient`, one row per nonzero
/// standard-basis coefficient, e.g. `s1.s2,s1.s2,1`.
pub fn basis_to_csv(basis: &Double0Basis) -> String {
    let sys = &basis.algebra().system;
    let mut out = String::from("basis,standard,coefficient\n");
    for (w, b) in basis.iter() {
        let name = sys.word_string(w);
        let mut terms: Vec<_> = b.terms().collect();
        terms.sort_by_key(|(y, _)| std::cmp::Reverse((sys.length(y), (*y).clone())));
        for (y, c) in terms {
            out.push_str(&format!("{name},{},{c}\n", sys.word_string(y)));
        }
    }
    out
}

pub fn basis_to_json(basis: &Double0Basis) -> Value {
    let sys = &basis.algebra().system;
    let elements: Vec<Value> = basis
        .iter()
        .map(|(w, b)| json!({ "element": sys.word_string(w), "expansion": hecke_to_json(sys, b) }))
        .collect();
    json!({
        "max_length": basis.max_length(),
        "parameters": { "v1": [1, 0], "v2": [0, 1] },
        "basis": elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral_double0::compute_basis;
    use crate::hecke::hecke_from_json;

    #[test]
    fn csv_rows() {
        let basis = compute_basis(2).unwrap();
        let csv = basis_to_csv(&basis);
        assert!(csv.contains("\ns1.s2,s1.s2,1\n"));
        assert!(csv.contains("\ns1.s2,e,v1*v2\n"));
        assert_eq!(csv.lines().count(), 1 + 1 + 2 * 2 + 2 * 4);
    }

    #[test]
    fn json_round_trip() {
        let basis = compute_basis(4).unwrap();
        let v = basis_to_json(&basis);
        let h = basis.algebra();
        for (i, (_, b)) in basis.iter().enumerate() {
            let back = hecke_from_json(&h.system, h.group(), &v["basis"][i]["expansion"]).unwrap();
            assert_eq!(&back, b);
        }
    }
}
