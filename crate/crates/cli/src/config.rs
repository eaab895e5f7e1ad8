//! JSON realization/grading configuration.
//!
//! ```json
//! {
//!   "coxeter_matrix": [[1, "inf"], ["inf", 1]],
//!   "characteristic": 0,
//!   "cartan": [["2", "0"], ["0", "2"]],
//!   "grading": {
//!     "rank": 2,
//!     "relations": [],
//!     "f": [[1, 0], [1, 0]],
//!     "g": [[0, 1], [0, 1]],
//!     "root_degrees": [[1, 1], [1, 1]],
//!     "bar": [[0, -1], [-1, 0]],
//!     "for": [1, 1],
//!     "pos": [1, 1]
//!   }
//! }
//! ```
//!
//! `grading` may instead be `{"preset": "bigrading"}` or
//! `{"preset": "p-adapted"}`; the latter also supplies the Cartan matrix,
//! so `cartan` may be omitted.

use hecke_grading::arith::{is_prime, parse_rational, Scalar};
use hecke_grading::grading::{
    build_bigrading, build_p_adapted, BarInvolution, CartanSpec, CoxeterMatrix, GradingGroup, GradingSpec,
};
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(untagged)]
enum Order {
    Finite(u64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RationalEntry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    coxeter_matrix: Vec<Vec<Order>>,
    characteristic: u64,
    #[serde(default)]
    cartan: Option<Vec<Vec<RationalEntry>>>,
    grading: RawGrading,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawGrading {
    Preset {
        preset: String,
    },
    Explicit {
        rank: usize,
        #[serde(default)]
        relations: Vec<Vec<i64>>,
        f: Vec<Vec<i64>>,
        g: Vec<Vec<i64>>,
        root_degrees: Vec<Vec<i64>>,
        #[serde(default)]
        extra_v_degrees: Vec<Vec<i64>>,
        #[serde(default)]
        bar: Option<Vec<Vec<i64>>>,
        #[serde(default, rename = "for")]
        for_map: Option<Vec<i64>>,
        #[serde(default)]
        pos: Option<Vec<i64>>,
    },
}

/// A fully validated configuration.
pub struct RealizationConfig {
    pub matrix: CoxeterMatrix,
    pub cartan: CartanSpec,
    pub grading: GradingSpec,
}

fn parse_matrix(raw: &[Vec<Order>]) -> Result<CoxeterMatrix, String> {
    let rows = raw
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| match e {
                    Order::Finite(m) => Ok(Some(*m)),
                    Order::Text(t) if t == "inf" => Ok(None),
                    Order::Text(t) => Err(format!("Coxeter matrix entry {t:?} is neither an integer nor \"inf\"")),
                })
                .collect::<Result<Vec<_>, String>>()
        })
        .collect::<Result<Vec<_>, String>>()?;
    CoxeterMatrix::new(rows).map_err(|e| e.to_string())
}

fn parse_cartan(raw: &[Vec<RationalEntry>], p: u64) -> Result<CartanSpec, String> {
    let rows = raw
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    let q = match e {
                        RationalEntry::Int(k) => parse_rational(&k.to_string()),
                        RationalEntry::Text(t) => parse_rational(t),
                    }
                    .map_err(|e| e.to_string())?;
                    Scalar::from_rational(&q, p).map_err(|e| format!("Cartan entry: {e}"))
                })
                .collect::<Result<Vec<_>, String>>()
        })
        .collect::<Result<Vec<_>, String>>()?;
    CartanSpec::new(rows, p).map_err(|e| e.to_string())
}

fn vectors(group: &GradingGroup, name: &str, rows: &[Vec<i64>], n: usize) -> Result<Vec<hecke_grading::grading::GroupElement>, String> {
    if rows.len() != n {
        return Err(format!("{name}: expected {n} vectors, found {}", rows.len()));
    }
    rows.iter().map(|r| group.element(r).map_err(|e| format!("{name}: {e}"))).collect()
}

fn optional_row(name: &str, row: Option<Vec<i64>>, rank: usize) -> Result<Option<Vec<i64>>, String> {
    match row {
        Some(r) if r.len() != rank => Err(format!("{name}: expected {rank} entries, found {}", r.len())),
        other => Ok(other),
    }
}

/// Parses and validates a configuration document; every error is a schema error.
pub fn load(text: &str) -> Result<RealizationConfig, String> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| format!("invalid configuration: {e}"))?;
    let matrix = parse_matrix(&raw.coxeter_matrix)?;
    let n = matrix.size();
    let p = raw.characteristic;
    if p != 0 && !is_prime(p) {
        return Err(format!("characteristic {p} is neither 0 nor prime"));
    }
    let given_cartan = raw.cartan.as_deref().map(|c| parse_cartan(c, p)).transpose()?;
    let (cartan, grading) = match raw.grading {
        RawGrading::Preset { preset } => match preset.as_str() {
            "bigrading" => {
                let cartan = given_cartan.ok_or("the bigrading preset needs a cartan matrix")?;
                (cartan, build_bigrading(n))
            }
            "p-adapted" => {
                let (built, spec) = build_p_adapted(&matrix, p).map_err(|e| e.to_string())?;
                (given_cartan.unwrap_or(built), spec)
            }
            other => return Err(format!("unknown grading preset {other:?}")),
        },
        RawGrading::Explicit { rank, relations, f, g, root_degrees, extra_v_degrees, bar, for_map, pos } => {
            let cartan = given_cartan.ok_or("an explicit grading needs a cartan matrix")?;
            let group = GradingGroup::new(rank, relations).map_err(|e| e.to_string())?;
            let bar = bar.map(|b| BarInvolution::new(&group, b)).transpose().map_err(|e| e.to_string())?;
            let spec = GradingSpec {
                f: vectors(&group, "f", &f, n)?,
                g: vectors(&group, "g", &g, n)?,
                root_degrees: vectors(&group, "root_degrees", &root_degrees, n)?,
                extra_v_degrees: vectors(&group, "extra_v_degrees", &extra_v_degrees, extra_v_degrees.len())?,
                for_map: optional_row("for", for_map, rank)?,
                pos: optional_row("pos", pos, rank)?,
                bar,
                group,
            };
            (cartan, spec)
        }
    };
    if cartan.size() != n {
        return Err(format!("cartan matrix has size {}, Coxeter matrix has size {n}", cartan.size()));
    }
    Ok(RealizationConfig { matrix, cartan, grading })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_presets_and_explicit() {
        let c = load(r#"{"coxeter_matrix": [[1, 4], [4, 1]], "characteristic": 2, "grading": {"preset": "p-adapted"}}"#)
            .unwrap();
        assert_eq!(c.matrix.get(0, 1), Some(4));
        let c = load(
            r#"{"coxeter_matrix": [[1, "inf"], ["inf", 1]], "characteristic": 0, "cartan": [["2", "-2"], ["-2", 2]],
                "grading": {"rank": 1, "f": [[1], [1]], "g": [[1], [1]], "root_degrees": [[2], [2]]}}"#,
        )
        .unwrap();
        assert_eq!(c.matrix.get(0, 1), None);
        assert!(c.grading.bar.is_none());
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(load("{").is_err());
        assert!(load(r#"{"coxeter_matrix": [[1, "x"], ["x", 1]], "characteristic": 0, "grading": {"preset": "p-adapted"}}"#).is_err());
        assert!(load(r#"{"coxeter_matrix": [[1, 3], [3, 1]], "characteristic": 4, "grading": {"preset": "p-adapted"}}"#).is_err());
        assert!(load(r#"{"coxeter_matrix": [[1, 3], [3, 1]], "characteristic": 0, "grading": {"preset": "bigrading"}}"#).is_err());
        assert!(load(
            r#"{"coxeter_matrix": [[1, 3], [3, 1]], "characteristic": 0, "cartan": [["2", "-1"], ["-1", "2"]],
                "grading": {"rank": 2, "f": [[1, 0]], "g": [[0, 1], [0, 1]], "root_degrees": [[1, 1], [1, 1]]}}"#
        )
        .is_err());
    }
}
