use std::fmt;

use crate::grading::{class_index, equivalence_relation, EquivalenceKind, GradingSpec, GroupElement};

use super::{CoxeterError, CoxeterSystem, Element, Expression};

/// Longest expression accepted by subexpression enumeration.
pub const MAX_EXPRESSION: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    U0,
    U1,
    D0,
    D1,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::U0 => "U0",
            Label::U1 => "U1",
            Label::D0 => "D0",
            Label::D1 => "D1",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubexpressionLabeling {
    pub system: CoxeterSystem,
    pub expression: Expression,
    pub bits: Vec<bool>,
    pub labels: Vec<Label>,
    pub endpoint: Element,
}

/// Rejects expressions longer than [`MAX_EXPRESSION`].
pub fn check_len(word: &[usize]) -> Result<(), CoxeterError> {
    if word.len() > MAX_EXPRESSION {
        Err(CoxeterError::SizeLimit { len: word.len() })
    } else {
        Ok(())
    }
}

/// All 2^len subexpressions, bits in lexicographic order (0 before 1).
/// Index i is labelled U iff x·s_i > x for the product x of the letters
/// chosen before i.
pub fn all_subexpressions(
    system: &CoxeterSystem,
    word: &[usize],
) -> Result<Vec<SubexpressionLabeling>, CoxeterError> {
    check_len(word)?;
    system.check_expression(word)?;
    let mut out = Vec::with_capacity(1 << word.len());
    let mut bits = Vec::with_capacity(word.len());
    let mut labels = Vec::with_capacity(word.len());
    walk(system, word, &system.identity(), &mut bits, &mut labels, &mut out);
    Ok(out)
}

fn walk(
    system: &CoxeterSystem,
    word: &[usize],
    x: &Element,
    bits: &mut Vec<bool>,
    labels: &mut Vec<Label>,
    out: &mut Vec<SubexpressionLabeling>,
) {
    let i = bits.len();
    if i == word.len() {
        out.push(SubexpressionLabeling {
            system: *system,
            expression: word.to_vec(),
            bits: bits.clone(),
            labels: labels.clone(),
            endpoint: x.clone(),
        });
        return;
    }
    let s = word[i];
    let xs = system.mul_gen(x, s).expect("checked generator");
    let up = system.length(&xs) > system.length(x);
    for (bit, next) in [(false, x), (true, &xs)] {
        bits.push(bit);
        labels.push(match (up, bit) {
            (true, false) => Label::U0,
            (true, true) => Label::U1,
            (false, false) => Label::D0,
            (false, true) => Label::D1,
        });
        walk(system, word, next, bits, labels, out);
        bits.pop();
        labels.pop();
    }
}

/// U1 ↦ 0, U0 ↦ f_s, D0 ↦ −g_s, D1 ↦ f_s − g_s, summed over indices.
pub fn defect_a(labeling: &SubexpressionLabeling, spec: &GradingSpec) -> GroupElement {
    let mut acc = spec.group.zero();
    for (&s, label) in labeling.expression.iter().zip(&labeling.labels) {
        acc = match label {
            Label::U1 => acc,
            Label::U0 => acc.add(&spec.f[s]),
            Label::D0 => acc.sub(&spec.g[s]),
            Label::D1 => acc.add(&spec.f[s]).sub(&spec.g[s]),
        };
    }
    acc
}

/// Classes of S under the relation generated by odd m_st, and the class of
/// each generator.
pub fn unequal_classes(system: &CoxeterSystem) -> (Vec<Vec<usize>>, Vec<usize>) {
    let classes = equivalence_relation(&system.coxeter_matrix(), None, EquivalenceKind::Unequal)
        .expect("no Cartan data needed");
    let idx = class_index(&classes, system.rank());
    (classes, idx)
}

/// U0 ↦ 1_s, D0 ↦ −1_s, U1, D1 ↦ 0, as a vector over the classes.
pub fn defect_uneq(labeling: &SubexpressionLabeling) -> Vec<i64> {
    let (classes, idx) = unequal_classes(&labeling.system);
    let mut v = vec![0; classes.len()];
    for (&s, label) in labeling.expression.iter().zip(&labeling.labels) {
        match label {
            Label::U0 => v[idx[s]] += 1,
            Label::D0 => v[idx[s]] -= 1,
            Label::U1 | Label::D1 => {}
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::build_lambda;

    fn find<'a>(all: &'a [SubexpressionLabeling], bits: &[bool]) -> &'a SubexpressionLabeling {
        all.iter().find(|l| l.bits == bits).unwrap()
    }

    #[test]
    fn labels_of_short_expressions() {
        let d = CoxeterSystem::Dihedral(None);
        let one = all_subexpressions(&d, &[0]).unwrap();
        assert_eq!(find(&one, &[true]).labels, vec![Label::U1]);
        assert_eq!(find(&one, &[true]).endpoint, d.generator(0).unwrap());
        let two = all_subexpressions(&d, &[0, 0]).unwrap();
        assert_eq!(two.len(), 4);
        let l11 = find(&two, &[true, true]);
        assert_eq!(l11.labels, vec![Label::U1, Label::D1]);
        assert_eq!(l11.endpoint, d.identity());
        assert_eq!(find(&two, &[false, false]).labels, vec![Label::U0, Label::U0]);
        assert!(all_subexpressions(&d, &[0; 23]).is_err());
    }

    #[test]
    fn defects() {
        let d = CoxeterSystem::Dihedral(None);
        let spec = build_lambda(&[vec![0], vec![1]], 2);
        let two = all_subexpressions(&d, &[0, 0]).unwrap();
        assert_eq!(defect_a(find(&two, &[true, false]), &spec), spec.g[0].neg());
        assert_eq!(defect_a(find(&two, &[false, true]), &spec), spec.f[0]);
        assert_eq!(defect_uneq(find(&two, &[true, true])), vec![0, 0]);
        assert_eq!(defect_uneq(find(&two, &[false, false])), vec![2, 0]);
        for l in all_subexpressions(&d, &[0, 1, 0, 1]).unwrap() {
            if l.bits.iter().all(|&b| b) {
                assert!(defect_a(&l, &spec).is_zero());
                assert_eq!(defect_uneq(&l), vec![0, 0]);
            }
        }
    }

    #[test]
    fn unequal_classes_follow_odd_entries() {
        assert_eq!(unequal_classes(&CoxeterSystem::Dihedral(Some(4))).0.len(), 2);
        assert_eq!(unequal_classes(&CoxeterSystem::Dihedral(Some(3))).0.len(), 1);
        assert_eq!(unequal_classes(&CoxeterSystem::Symmetric(4)).0.len(), 1);
    }
}
