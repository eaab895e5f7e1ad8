use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::smith::{mat_vec, smith, Matrix, Smith};
use super::GradingError;

#[derive(Debug)]
struct GroupData {
    rank: usize,
    /// Each entry is one relation, a vector of length `rank`.
    relations: Vec<Vec<i64>>,
    snf: Smith,
}

/// Finitely generated abelian group ⟨e₁,…,e_g | relations⟩.
///
/// Elements are stored in Smith coordinates y = U·x: coordinates with
/// invariant factor 1 are zero, torsion coordinates are reduced residues,
/// free coordinates are arbitrary. This form is unique per element.
#[derive(Clone, Debug)]
pub struct GradingGroup(Arc<GroupData>);

impl GradingGroup {
    pub fn new(rank: usize, relations: Vec<Vec<i64>>) -> Result<Self, GradingError> {
        if let Some(bad) = relations.iter().find(|r| r.len() != rank) {
            return Err(GradingError::DimensionMismatch { expected: rank, found: bad.len() });
        }
        // columns of the relation matrix are the relations
        let m: Matrix = (0..rank).map(|i| relations.iter().map(|r| r[i]).collect()).collect();
        let snf = smith(&m, rank, relations.len());
        Ok(GradingGroup(Arc::new(GroupData { rank, relations, snf })))
    }

    pub fn free(rank: usize) -> Self {
        GradingGroup::new(rank, Vec::new()).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn relations(&self) -> &[Vec<i64>] {
        &self.0.relations
    }

    /// Invariant factors > 1.
    pub fn torsion(&self) -> Vec<i64> {
        self.0.snf.diag.iter().copied().filter(|&d| d > 1).collect()
    }

    pub fn free_rank(&self) -> usize {
        self.0.snf.diag.iter().filter(|&&d| d == 0).count()
    }

    fn reduce(&self, mut y: Vec<i64>) -> Vec<i64> {
        for (yi, &d) in y.iter_mut().zip(&self.0.snf.diag) {
            match d {
                0 => {}
                1 => *yi = 0,
                d => *yi = yi.rem_euclid(d),
            }
        }
        y
    }

    /// Element with the given generator coordinates.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement, GradingError> {
        if coords.len() != self.rank() {
            return Err(GradingError::DimensionMismatch { expected: self.rank(), found: coords.len() });
        }
        let y = self.reduce(mat_vec(&self.0.snf.u, coords));
        Ok(GroupElement { group: self.clone(), y })
    }

    pub fn elem(&self, coords: &[i64]) -> GroupElement {
        self.element(coords).expect("coordinate length must equal group rank")
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { group: self.clone(), y: vec![0; self.rank()] }
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        self.elem(&c)
    }

    /// True iff the row vector `h` vanishes on every relation.
    pub fn kills_relations(&self, h: &[i64]) -> bool {
        h.len() == self.rank()
            && self.0.relations.iter().all(|r| r.iter().zip(h).map(|(a, b)| a * b).sum::<i64>() == 0)
    }

    /// Evaluates the homomorphism given by the row vector `h` on generators.
    pub fn evaluate(&self, h: &[i64], x: &GroupElement) -> Result<i64, GradingError> {
        if !self.kills_relations(h) {
            return Err(GradingError::NotAHomomorphism);
        }
        Ok(x.representative().iter().zip(h).map(|(a, b)| a * b).sum())
    }

    pub fn same(&self, other: &GradingGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.rank == other.0.rank && self.0.relations == other.0.relations)
    }
}

impl PartialEq for GradingGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for GradingGroup {}

#[derive(Clone)]
pub struct GroupElement {
    group: GradingGroup,
    y: Vec<i64>,
}

impl GroupElement {
    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    /// Canonical Smith coordinates.
    pub fn normal_form(&self) -> &[i64] {
        &self.y
    }

    /// Generator coordinates of a fixed representative.
    pub fn representative(&self) -> Vec<i64> {
        mat_vec(&self.group.0.snf.u_inv, &self.y)
    }

    pub fn is_zero(&self) -> bool {
        self.y.iter().all(|&c| c == 0)
    }

    fn combine(&self, o: &GroupElement, f: impl Fn(i64, i64) -> i64) -> GroupElement {
        assert!(self.group.same(&o.group), "group elements from different groups");
        let y = self.y.iter().zip(&o.y).map(|(&a, &b)| f(a, b)).collect();
        GroupElement { group: self.group.clone(), y: self.group.reduce(y) }
    }

    pub fn add(&self, o: &GroupElement) -> GroupElement {
        self.combine(o, |a, b| a.checked_add(b).unwrap())
    }

    pub fn sub(&self, o: &GroupElement) -> GroupElement {
        self.combine(o, |a, b| a.checked_sub(b).unwrap())
    }

    pub fn neg(&self) -> GroupElement {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> GroupElement {
        let y = self.y.iter().map(|a| a.checked_mul(k).unwrap()).collect();
        GroupElement { group: self.group.clone(), y: self.group.reduce(y) }
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.y == other.y && self.group.same(&other.group)
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.y.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.y.cmp(&other.y)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.representative();
        let parts: Vec<String> = r.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_and_free_parts() {
        let g = GradingGroup::new(2, vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(g.torsion(), vec![6]);
        assert_eq!(g.free_rank(), 0);
        let x = g.generator(0).scale(2);
        assert!(x.is_zero());
        assert!(!g.generator(0).add(&g.generator(1)).is_zero());
        assert!(g.generator(0).add(&g.generator(1)).scale(6).is_zero());
    }

    #[test]
    fn one_relation_collapses_rank() {
        // ⟨γ, f, g | f + g − 2γ⟩ ≅ ℤ²
        let g = GradingGroup::new(3, vec![vec![-2, 1, 1]]).unwrap();
        assert!(g.torsion().is_empty());
        assert_eq!(g.free_rank(), 2);
        let lhs = g.elem(&[0, 1, 1]);
        let rhs = g.elem(&[2, 0, 0]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn representative_round_trip() {
        let g = GradingGroup::new(3, vec![vec![4, 6, 0], vec![0, 2, 2]]).unwrap();
        for c in [[1, 2, 3], [-5, 0, 7], [0, 0, 0], [4, 6, 0]] {
            let x = g.elem(&c);
            assert_eq!(g.elem(&x.representative()), x);
        }
    }

    #[test]
    fn homomorphism_evaluation() {
        let g = GradingGroup::free(2);
        let x = g.elem(&[3, 4]);
        assert_eq!(g.evaluate(&[1, 1], &x).unwrap(), 7);
        let h = GradingGroup::new(2, vec![vec![1, 1]]).unwrap();
        assert!(h.evaluate(&[1, 1], &h.zero()).is_err());
        assert_eq!(h.evaluate(&[1, -1], &h.elem(&[2, 0])).unwrap(), 2);
    }
}
