use super::realization::{class_index, equivalence_relation, CartanSpec, CoxeterMatrix, EquivalenceKind};
use super::smith::mat_vec;
use super::{GradingError, GradingGroup, GroupElement};

/// Integer matrix acting on generator coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarInvolution {
    matrix: Vec<Vec<i64>>,
}

impl BarInvolution {
    /// Checks that `matrix` descends to an involution of `group`.
    pub fn new(group: &GradingGroup, matrix: Vec<Vec<i64>>) -> Result<Self, GradingError> {
        let g = group.rank();
        if matrix.len() != g || matrix.iter().any(|r| r.len() != g) {
            return Err(GradingError::InvalidBar("matrix must be rank × rank".into()));
        }
        let bar = BarInvolution { matrix };
        for r in group.relations() {
            if !group.elem(&mat_vec(&bar.matrix, r)).is_zero() {
                return Err(GradingError::InvalidBar(format!("relation {r:?} is not preserved")));
            }
        }
        for i in 0..g {
            let e = group.generator(i);
            if bar.apply(&bar.apply(&e)) != e {
                return Err(GradingError::InvalidBar(format!("bar∘bar moves generator {i}")));
            }
        }
        Ok(bar)
    }

    /// x ↦ −x.
    pub fn negation(group: &GradingGroup) -> Self {
        let g = group.rank();
        let matrix = (0..g).map(|i| (0..g).map(|j| if i == j { -1 } else { 0 }).collect()).collect();
        BarInvolution { matrix }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        x.group().elem(&mat_vec(&self.matrix, &x.representative()))
    }
}

/// Degrees of the generating morphisms together with the declared degrees
/// of homogeneous generators of V.
#[derive(Clone, Debug)]
pub struct GradingSpec {
    pub group: GradingGroup,
    pub f: Vec<GroupElement>,
    pub g: Vec<GroupElement>,
    pub root_degrees: Vec<GroupElement>,
    pub extra_v_degrees: Vec<GroupElement>,
    pub for_map: Option<Vec<i64>>,
    pub pos: Option<Vec<i64>>,
    pub bar: Option<BarInvolution>,
}

impl GradingSpec {
    pub fn size(&self) -> usize {
        self.f.len()
    }

    /// Root degrees followed by the extra declared degrees.
    pub fn v_degrees(&self) -> impl Iterator<Item = &GroupElement> {
        self.root_degrees.iter().chain(&self.extra_v_degrees)
    }

    pub fn vertex_degree(&self, matrix: &CoxeterMatrix, s: usize, t: usize) -> Result<GroupElement, GradingError> {
        match matrix.get(s, t) {
            None => Err(GradingError::InfiniteOrder { s, t }),
            Some(m) if m % 2 == 0 => Ok(self.group.zero()),
            Some(_) => Ok(self.g[s].sub(&self.g[t])),
        }
    }

    /// Σ n_s f_s + k_s (f_s + g_s).
    pub fn inner_degree(&self, n: &[i64], k: &[i64]) -> GroupElement {
        let mut acc = self.group.zero();
        for s in 0..self.size() {
            let fg = self.f[s].add(&self.g[s]);
            acc = acc.add(&self.f[s].scale(n[s])).add(&fg.scale(k[s]));
        }
        acc
    }

    /// True iff `candidate` is positive on every declared V-degree.
    pub fn verify_pos(&self, candidate: &[i64]) -> Result<bool, GradingError> {
        if !self.group.kills_relations(candidate) {
            return Err(GradingError::NotAHomomorphism);
        }
        for d in self.v_degrees() {
            if self.group.evaluate(candidate, d)? <= 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exhaustive search over integer vectors with entries in [−bound, bound].
    pub fn search_pos(&self, bound: i64) -> Result<Option<Vec<i64>>, GradingError> {
        let g = self.group.rank();
        if g > 4 || bound > 10 {
            return Err(GradingError::SearchTooLarge);
        }
        let width = (2 * bound + 1) as usize;
        let total = width.pow(g as u32);
        for idx in 0..total {
            let mut c = Vec::with_capacity(g);
            let mut r = idx;
            for _ in 0..g {
                c.push((r % width) as i64 - bound);
                r /= width;
            }
            if self.group.kills_relations(&c) && self.verify_pos(&c)? {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }
}

/// ℤ² with f = (1,0), g = (0,1) for every generator.
pub fn build_bigrading(n: usize) -> GradingSpec {
    let group = GradingGroup::free(2);
    let f = group.elem(&[1, 0]);
    let g = group.elem(&[0, 1]);
    let root = group.elem(&[1, 1]);
    let bar = BarInvolution::new(&group, vec![vec![0, -1], vec![-1, 0]]).unwrap();
    GradingSpec {
        f: vec![f; n],
        g: vec![g; n],
        root_degrees: vec![root; n],
        extra_v_degrees: Vec::new(),
        for_map: Some(vec![1, 1]),
        pos: Some(vec![1, 1]),
        bar: Some(bar),
        group,
    }
}

/// (ℤ²)^S modulo (1,1)_s = (1,1)_t for s, t in a common class.
pub fn build_lambda(classes: &[Vec<usize>], n: usize) -> GradingSpec {
    let mut relations = Vec::new();
    for class in classes {
        for w in class.windows(2) {
            let mut r = vec![0; 2 * n];
            r[2 * w[0]] += 1;
            r[2 * w[0] + 1] += 1;
            r[2 * w[1]] -= 1;
            r[2 * w[1] + 1] -= 1;
            relations.push(r);
        }
    }
    let group = GradingGroup::new(2 * n, relations).unwrap();
    let f: Vec<_> = (0..n).map(|s| group.generator(2 * s)).collect();
    let g: Vec<_> = (0..n).map(|s| group.generator(2 * s + 1)).collect();
    let root = (0..n).map(|s| f[s].add(&g[s])).collect();
    let mut bar = vec![vec![0; 2 * n]; 2 * n];
    for s in 0..n {
        bar[2 * s][2 * s + 1] = -1;
        bar[2 * s + 1][2 * s] = -1;
    }
    let bar = BarInvolution::new(&group, bar).unwrap();
    GradingSpec {
        f,
        g,
        root_degrees: root,
        extra_v_degrees: Vec::new(),
        for_map: Some(vec![1; 2 * n]),
        pos: Some(vec![1; 2 * n]),
        bar: Some(bar),
        group,
    }
}

/// (Γ × free⟨f_s, g_s⟩) / ⟨f_s+g_s − f_t−g_t (linked pairs), f_s+g_s − deg α_s⟩.
pub fn build_universal_grading(
    matrix: &CoxeterMatrix,
    cartan: &CartanSpec,
    gamma: &GradingGroup,
    root_degrees: &[GroupElement],
) -> Result<GradingSpec, GradingError> {
    cartan.check_realization(matrix)?;
    let n = matrix.size();
    if root_degrees.len() != n {
        return Err(GradingError::DimensionMismatch { expected: n, found: root_degrees.len() });
    }
    let gr = gamma.rank();
    let total = gr + 2 * n;
    let fi = |s: usize| gr + 2 * s;
    let gi = |s: usize| gr + 2 * s + 1;
    let mut relations: Vec<Vec<i64>> = Vec::new();
    for r in gamma.relations() {
        let mut v = vec![0; total];
        v[..gr].copy_from_slice(r);
        relations.push(v);
    }
    for (s, t) in matrix.pairs() {
        if cartan.linked(s, t) {
            let mut v = vec![0; total];
            v[fi(s)] += 1;
            v[gi(s)] += 1;
            v[fi(t)] -= 1;
            v[gi(t)] -= 1;
            relations.push(v);
        }
    }
    for (s, d) in root_degrees.iter().enumerate() {
        let mut v = vec![0; total];
        for (k, c) in d.representative().iter().enumerate() {
            v[k] = -c;
        }
        v[fi(s)] += 1;
        v[gi(s)] += 1;
        relations.push(v);
    }
    let group = GradingGroup::new(total, relations)?;
    let embed = |x: &GroupElement| {
        let mut v = vec![0; total];
        v[..gr].copy_from_slice(&x.representative());
        group.elem(&v)
    };
    Ok(GradingSpec {
        f: (0..n).map(|s| group.generator(fi(s))).collect(),
        g: (0..n).map(|s| group.generator(gi(s))).collect(),
        root_degrees: root_degrees.iter().map(embed).collect(),
        extra_v_degrees: Vec::new(),
        for_map: None,
        pos: None,
        bar: None,
        group,
    })
}

/// Blockwise realization on the classes of the characteristic-p relation
/// together with the grading ℤ^{classes}, f_s = g_s = e_[s].
pub fn build_p_adapted(matrix: &CoxeterMatrix, p: u64) -> Result<(CartanSpec, GradingSpec), GradingError> {
    let n = matrix.size();
    let classes = equivalence_relation(matrix, None, EquivalenceKind::CharP(p))?;
    let idx = class_index(&classes, n);
    let cartan = CartanSpec::from_links(n, p, |s, t| idx[s] == idx[t] && matrix.get(s, t) != Some(2));
    cartan.check_realization(matrix)?;
    let group = GradingGroup::free(classes.len());
    let f: Vec<_> = (0..n).map(|s| group.generator(idx[s])).collect();
    Ok((
        cartan,
        GradingSpec {
            g: f.clone(),
            root_degrees: f.iter().map(|x| x.scale(2)).collect(),
            f,
            extra_v_degrees: Vec::new(),
            for_map: Some(vec![1; classes.len()]),
            pos: Some(vec![1; classes.len()]),
            bar: Some(BarInvolution::negation(&group)),
            group,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigrading_basics() {
        let spec = build_bigrading(3);
        assert_eq!(spec.f[1].representative(), vec![1, 0]);
        assert_eq!(spec.group.evaluate(spec.for_map.as_ref().unwrap(), &spec.f[0]).unwrap(), 1);
        let bar = spec.bar.as_ref().unwrap();
        assert_eq!(bar.apply(&spec.f[0]), spec.g[0].neg());
        assert_eq!(spec.verify_pos(&[1, 1]), Ok(true));
        assert_eq!(spec.verify_pos(&[1, -1]), Ok(false));
    }

    #[test]
    fn universal_one_color() {
        let matrix = CoxeterMatrix::new(vec![vec![Some(1)]]).unwrap();
        let cartan = CartanSpec::from_links(1, 0, |_, _| false);
        let gamma = GradingGroup::free(1);
        let spec = build_universal_grading(&matrix, &cartan, &gamma, &[gamma.elem(&[2])]).unwrap();
        assert_eq!(spec.group.free_rank(), 2);
        assert!(spec.group.torsion().is_empty());
        assert_eq!(spec.f[0].add(&spec.g[0]), spec.root_degrees[0]);
    }

    #[test]
    fn universal_commuting_colors_stay_independent() {
        let matrix = CoxeterMatrix::dihedral(Some(2));
        let cartan = CartanSpec::from_links(2, 0, |_, _| false);
        let gamma = GradingGroup::free(2);
        let roots = [gamma.elem(&[1, 0]), gamma.elem(&[0, 1])];
        let spec = build_universal_grading(&matrix, &cartan, &gamma, &roots).unwrap();
        assert_ne!(spec.f[0].add(&spec.g[0]), spec.f[1].add(&spec.g[1]));
    }

    #[test]
    fn universal_maps_onto_bigrading() {
        let matrix = CoxeterMatrix::type_a(3);
        let cartan = CartanSpec::from_links(3, 0, |s, t| s.abs_diff(t) == 1);
        let gamma = GradingGroup::free(1);
        let roots = vec![gamma.elem(&[1]); 3];
        let spec = build_universal_grading(&matrix, &cartan, &gamma, &roots).unwrap();
        // γ ↦ (1,1), f_s ↦ (1,0), g_s ↦ (0,1)
        let mut image: Vec<[i64; 2]> = vec![[1, 1]];
        for _ in 0..3 {
            image.push([1, 0]);
            image.push([0, 1]);
        }
        for r in spec.group.relations() {
            let mut v = [0i64; 2];
            for (c, im) in r.iter().zip(&image) {
                v[0] += c * im[0];
                v[1] += c * im[1];
            }
            assert_eq!(v, [0, 0]);
        }
    }

    #[test]
    fn degrees_of_vertices_and_inner_diagrams() {
        let spec = build_bigrading(2);
        let m3 = CoxeterMatrix::dihedral(Some(3));
        assert!(spec.vertex_degree(&m3, 0, 1).unwrap().is_zero());
        assert!(spec.vertex_degree(&CoxeterMatrix::dihedral(None), 0, 1).is_err());
        let mut spec2 = build_bigrading(2);
        spec2.g = vec![spec2.group.elem(&[0, 1]), spec2.group.elem(&[0, 2])];
        assert_eq!(spec2.vertex_degree(&m3, 0, 1).unwrap(), spec2.group.elem(&[0, -1]));
        assert!(spec2.vertex_degree(&CoxeterMatrix::dihedral(Some(4)), 0, 1).unwrap().is_zero());
        assert!(spec.inner_degree(&[0, 0], &[0, 0]).is_zero());
        assert_eq!(spec.inner_degree(&[1, 0], &[0, 0]), spec.f[0]);
        assert_eq!(spec.inner_degree(&[-1, 0], &[1, 0]), spec.g[0]);
    }

    #[test]
    fn p_adapted_and_pos_search() {
        let (cartan, spec) = build_p_adapted(&CoxeterMatrix::dihedral(Some(4)), 2).unwrap();
        assert!(!cartan.linked(0, 1));
        assert_eq!(spec.group.rank(), 2);
        assert_eq!(spec.verify_pos(&[1, 1]), Ok(true));
        let found = build_bigrading(2).search_pos(2).unwrap().unwrap();
        assert!(build_bigrading(2).verify_pos(&found).unwrap());
    }

    #[test]
    fn bar_must_preserve_relations() {
        let g = GradingGroup::new(2, vec![vec![2, 0]]).unwrap();
        assert!(BarInvolution::new(&g, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(BarInvolution::new(&g, vec![vec![-1, 0], vec![0, -1]]).is_ok());
        assert!(BarInvolution::new(&GradingGroup::free(1), vec![vec![2]]).is_err());
    }
}
