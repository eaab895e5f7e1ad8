//! JSON form of TL elements: arc lists with coefficient strings.

use serde::{Deserialize, Serialize};

use crate::arith::{parse_rational, Scalar};

use super::{Matching, Point, TLElement, TlError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerialTerm {
    pub arcs: Vec<[String; 2]>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct SerialElement {
    n_bottom: usize,
    n_top: usize,
    characteristic: u64,
    delta: String,
    terms: Vec<SerialTerm>,
}

fn scalar(s: &str, characteristic: u64) -> Result<Scalar, TlError> {
    Ok(Scalar::from_rational(&parse_rational(s)?, characteristic)?)
}

pub fn element_to_json(x: &TLElement<Scalar>) -> serde_json::Value {
    let terms = x
        .terms()
        .into_iter()
        .map(|(m, c)| SerialTerm {
            arcs: m.arcs().into_iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
            coefficient: c.to_string(),
        })
        .collect();
    let e = SerialElement {
        n_bottom: x.n_bottom(),
        n_top: x.n_top(),
        characteristic: x.delta().characteristic(),
        delta: x.delta().to_string(),
        terms,
    };
    serde_json::to_value(e).expect("plain data serializes")
}

pub fn element_from_json(v: &serde_json::Value) -> Result<TLElement<Scalar>, TlError> {
    let e: SerialElement =
        serde_json::from_value(v.clone()).map_err(|err| TlError::InvalidMatching(err.to_string()))?;
    let p = e.characteristic;
    let mut terms = Vec::with_capacity(e.terms.len());
    for t in &e.terms {
        let arcs = t
            .arcs
            .iter()
            .map(|[a, b]| Ok((Point::parse(a)?, Point::parse(b)?)))
            .collect::<Result<Vec<_>, TlError>>()?;
        terms.push((Matching::new(e.n_bottom, e.n_top, &arcs)?, scalar(&t.coefficient, p)?));
    }
    TLElement::from_terms(e.n_bottom, e.n_top, scalar(&e.delta, p)?, terms)
}
