use crate::arith::{is_prime, Coefficient, Scalar};

use super::GradingError;

/// Symmetric Coxeter matrix; `None` encodes m = ∞.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    m: Vec<Vec<Option<u64>>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<Option<u64>>>) -> Result<Self, GradingError> {
        let n = m.len();
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(GradingError::InvalidCoxeterMatrix(format!("row {i} has length {}", row.len())));
            }
            if row[i] != Some(1) {
                return Err(GradingError::InvalidCoxeterMatrix(format!("diagonal entry {i} is not 1")));
            }
            for j in 0..n {
                if m[i][j] != m[j][i] {
                    return Err(GradingError::InvalidCoxeterMatrix(format!("not symmetric at ({i},{j})")));
                }
                if i != j && matches!(m[i][j], Some(x) if x < 2) {
                    return Err(GradingError::InvalidCoxeterMatrix(format!("entry ({i},{j}) below 2")));
                }
            }
        }
        Ok(CoxeterMatrix { m })
    }

    /// I₂(m); `None` gives the infinite dihedral group.
    pub fn dihedral(m: Option<u64>) -> Self {
        CoxeterMatrix::new(vec![vec![Some(1), m], vec![m, Some(1)]]).unwrap()
    }

    /// Type A_{n}: n generators in a chain.
    pub fn type_a(n: usize) -> Self {
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => Some(1),
                        1 => Some(3),
                        _ => Some(2),
                    })
                    .collect()
            })
            .collect();
        CoxeterMatrix { m }
    }

    pub fn size(&self) -> usize {
        self.m.len()
    }

    pub fn get(&self, s: usize, t: usize) -> Option<u64> {
        self.m[s][t]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.size();
        (0..n).flat_map(move |s| (s + 1..n).map(move |t| (s, t)))
    }
}

/// True iff m = 2p^k for some k ≥ 0.
pub fn is_two_prime_power(m: u64, p: u64) -> bool {
    if p < 2 || m % 2 != 0 {
        return false;
    }
    let mut x = m / 2;
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

/// Off-diagonal Cartan pairings ⟨α_s^∨, α_t⟩ and the base characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSpec {
    pairings: Vec<Vec<Scalar>>,
    characteristic: u64,
}

impl CartanSpec {
    pub fn new(pairings: Vec<Vec<Scalar>>, characteristic: u64) -> Result<Self, GradingError> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(GradingError::BadCharacteristic(characteristic));
        }
        let n = pairings.len();
        for row in &pairings {
            if row.len() != n {
                return Err(GradingError::DimensionMismatch { expected: n, found: row.len() });
            }
            if row.iter().any(|x| x.characteristic() != characteristic) {
                return Err(GradingError::BadCharacteristic(characteristic));
            }
        }
        Ok(CartanSpec { pairings, characteristic })
    }

    /// Pairings given by a predicate: −1 where `linked(s, t)`, else 0.
    pub fn from_links(n: usize, characteristic: u64, linked: impl Fn(usize, usize) -> bool) -> Self {
        let pairings = (0..n)
            .map(|s| {
                (0..n)
                    .map(|t| match (s == t, linked(s, t)) {
                        (true, _) => Scalar::from_int(2, characteristic),
                        (false, true) => Scalar::from_int(-1, characteristic),
                        (false, false) => Scalar::zero(characteristic),
                    })
                    .collect()
            })
            .collect();
        CartanSpec { pairings, characteristic }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn size(&self) -> usize {
        self.pairings.len()
    }

    pub fn pairing(&self, s: usize, t: usize) -> &Scalar {
        &self.pairings[s][t]
    }

    /// Either of the two pairings between s and t is nonzero.
    pub fn linked(&self, s: usize, t: usize) -> bool {
        !self.pairings[s][t].vanishes() || !self.pairings[t][s].vanishes()
    }

    /// Checks the zero-pairing condition for every pair.
    pub fn check_realization(&self, matrix: &CoxeterMatrix) -> Result<(), GradingError> {
        if matrix.size() != self.size() {
            return Err(GradingError::DimensionMismatch { expected: matrix.size(), found: self.size() });
        }
        for (s, t) in matrix.pairs() {
            let m = matrix.get(s, t);
            if self.linked(s, t) {
                if m == Some(2) {
                    return Err(GradingError::InvalidRealization {
                        s,
                        t,
                        reason: "commuting generators need zero pairings".into(),
                    });
                }
                continue;
            }
            let ok = match m {
                None | Some(2) => true,
                Some(m) => self.characteristic > 0 && is_two_prime_power(m, self.characteristic),
            };
            if !ok {
                return Err(GradingError::InvalidRealization {
                    s,
                    t,
                    reason: format!(
                        "both pairings vanish but m = {} is not admissible in characteristic {}",
                        m.unwrap(),
                        self.characteristic
                    ),
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivalenceKind {
    /// generated by m_st ≠ 2
    Component,
    /// generated by a nonzero pairing
    Cartan,
    /// generated by m_st finite and not of the form 2p^k (p = 0: m ∉ {2, ∞})
    CharP(u64),
    /// generated by odd m_st
    Unequal,
}

/// Equivalence classes on S, each sorted, ordered by smallest member.
pub fn equivalence_relation(
    matrix: &CoxeterMatrix,
    cartan: Option<&CartanSpec>,
    kind: EquivalenceKind,
) -> Result<Vec<Vec<usize>>, GradingError> {
    let n = matrix.size();
    if kind == EquivalenceKind::Cartan && cartan.is_none() {
        return Err(GradingError::MissingCartan);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for (s, t) in matrix.pairs() {
        let m = matrix.get(s, t);
        let joined = match kind {
            EquivalenceKind::Component => m != Some(2),
            EquivalenceKind::Cartan => cartan.unwrap().linked(s, t),
            EquivalenceKind::CharP(0) => !matches!(m, None | Some(2)),
            EquivalenceKind::CharP(p) => matches!(m, Some(m) if !is_two_prime_power(m, p)),
            EquivalenceKind::Unequal => matches!(m, Some(m) if m % 2 == 1),
        };
        if joined {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for s in 0..n {
        let r = find(&mut parent, s);
        if index[r] == usize::MAX {
            index[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[index[r]].push(s);
    }
    Ok(classes)
}

/// Index of the class containing each generator.
pub fn class_index(classes: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut idx = vec![0; n];
    for (c, class) in classes.iter().enumerate() {
        for &s in class {
            idx[s] = c;
        }
    }
    idx
}
