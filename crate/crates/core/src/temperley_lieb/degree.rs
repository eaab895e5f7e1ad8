use crate::grading::{GradingGroup, GroupElement};

use super::Matching;

/// Degrees of the start and end dots of two colours. The leftmost bottom
/// region is coloured s.
#[derive(Clone, Debug)]
pub struct TwoColorDegreeData {
    pub group: GradingGroup,
    pub f_s: GroupElement,
    pub g_s: GroupElement,
    pub f_t: GroupElement,
    pub g_t: GroupElement,
}

impl TwoColorDegreeData {
    pub fn new(f_s: GroupElement, g_s: GroupElement, f_t: GroupElement, g_t: GroupElement) -> Self {
        TwoColorDegreeData { group: f_s.group().clone(), f_s, g_s, f_t, g_t }
    }

    /// Free group ℤ⁴ with f_s, g_s, f_t, g_t the standard generators.
    pub fn symbolic() -> Self {
        let g = GradingGroup::free(4);
        TwoColorDegreeData::new(g.generator(0), g.generator(1), g.generator(2), g.generator(3))
    }

    /// ℤ⁴ modulo f_s + g_s = f_t + g_t.
    pub fn symbolic_balanced() -> Self {
        let g = GradingGroup::new(4, vec![vec![1, 1, -1, -1]]).unwrap();
        TwoColorDegreeData::new(g.generator(0), g.generator(1), g.generator(2), g.generator(3))
    }

    /// Bigrading: f = (1,0), g = (0,1) for both colours.
    pub fn bigrading() -> Self {
        let g = GradingGroup::free(2);
        TwoColorDegreeData::new(g.elem(&[1, 0]), g.elem(&[0, 1]), g.elem(&[1, 0]), g.elem(&[0, 1]))
    }

    pub fn balanced(&self) -> bool {
        self.f_s.add(&self.g_s) == self.f_t.add(&self.g_t)
    }
}

/// (#even caps − #odd cups)(g_s − f_t) + (#odd caps − #even cups)(g_t − f_s).
pub fn degree(d: &Matching, data: &TwoColorDegreeData) -> GroupElement {
    let c = d.classify();
    let a = c.even_caps as i64 - c.odd_cups as i64;
    let b = c.odd_caps as i64 - c.even_cups as i64;
    data.g_s.sub(&data.f_t).scale(a).add(&data.g_t.sub(&data.f_s).scale(b))
}

/// (#even caps − #odd cups)((f_s + g_s) − (f_t + g_t)).
pub fn degree_single_difference(d: &Matching, data: &TwoColorDegreeData) -> GroupElement {
    let c = d.classify();
    let a = c.even_caps as i64 - c.odd_cups as i64;
    data.f_s.add(&data.g_s).sub(&data.f_t.add(&data.g_t)).scale(a)
}
