use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coxeter::CoxeterSystem;
use crate::grading::GradingGroup;

use super::{GroupAlgebraElement, HeckeElement, HeckeError};

#[derive(Serialize, Deserialize)]
struct Monomial {
    exponent: Vec<i64>,
    coefficient: String,
}

#[derive(Serialize, Deserialize)]
struct Term {
    word: String,
    coefficients: Vec<Monomial>,
}

/// `[{"word": "s1.s2", "coefficients": [{"exponent": [1, 0], "coefficient": "2"}]}]`
pub fn hecke_to_json(system: &CoxeterSystem, h: &HeckeElement) -> Value {
    let terms: Vec<Term> = h
        .terms()
        .map(|(w, c)| Term {
            word: system.word_string(w),
            coefficients: c
                .terms()
                .map(|(a, k)| Monomial { exponent: a.representative(), coefficient: k.to_string() })
                .collect(),
        })
        .collect();
    serde_json::to_value(terms).expect("plain data")
}

pub fn hecke_from_json(system: &CoxeterSystem, group: &GradingGroup, v: &Value) -> Result<HeckeElement, HeckeError> {
    let terms: Vec<Term> = serde_json::from_value(v.clone()).map_err(|e| HeckeError::Parse(e.to_string()))?;
    let mut out = HeckeElement::zero(group);
    for t in terms {
        let w = system.parse_element(&t.word)?;
        let mut c = GroupAlgebraElement::zero(group);
        for m in t.coefficients {
            let a = group.element(&m.exponent)?;
            let k: BigInt = m.coefficient.parse().map_err(|_| HeckeError::Parse(format!("bad integer {:?}", m.coefficient)))?;
            c.add_term(a, k);
        }
        out.add_term(w, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{HeckeAlgebra, ParameterMap};

    #[test]
    fn round_trip() {
        let sys = CoxeterSystem::Dihedral(None);
        let h = HeckeAlgebra::new(sys, ParameterMap::generic(&sys));
        let x = h.bott_samelson(&[0, 1, 0, 0]).unwrap();
        let v = hecke_to_json(&sys, &x);
        assert_eq!(hecke_from_json(&sys, h.group(), &v).unwrap(), x);
        assert!(hecke_from_json(&sys, h.group(), &serde_json::json!([{"word": "s1.s1", "coefficients": []}])).is_err());
        assert!(hecke_from_json(&sys, h.group(), &serde_json::json!({"x": 1})).is_err());
    }
}
