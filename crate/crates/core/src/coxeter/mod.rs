//! Coxeter groups with concrete backends: dihedral groups I₂(m) including
//! m = ∞, and symmetric groups. Expressions, labelled subexpressions and
//! their defects.

mod subexpr;

pub use subexpr::{
    all_subexpressions, check_len as check_expression_len, defect_a, defect_uneq, unequal_classes, Label, SubexpressionLabeling, MAX_EXPRESSION,
};

use std::fmt;

use thiserror::Error;

use crate::grading::CoxeterMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("expression of length {len} exceeds the limit of {MAX_EXPRESSION}")]
    SizeLimit { len: usize },
    #[error("operation not supported by the symmetric backend")]
    UnsupportedBackend,
    #[error("no generator {0}")]
    InvalidGenerator(usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("dihedral order must be at least 2")]
    InvalidOrder,
}

/// Backend choice. Generators are numbered from 0 and printed from s1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterSystem {
    /// I₂(m); `None` is the infinite dihedral group.
    Dihedral(Option<u64>),
    /// S_n with n − 1 simple transpositions.
    Symmetric(usize),
}

/// Canonical group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Alternating word of the given length starting with `first`. The
    /// identity has length 0 and first 0; the longest element of a finite
    /// dihedral group has first 0.
    Dihedral { first: u8, len: u64 },
    /// One-line notation w(1) … w(n), values from 0.
    Perm(Vec<u8>),
}

pub type Expression = Vec<usize>;

impl CoxeterSystem {
    pub fn dihedral(m: Option<u64>) -> Result<Self, CoxeterError> {
        match m {
            Some(m) if m < 2 => Err(CoxeterError::InvalidOrder),
            _ => Ok(CoxeterSystem::Dihedral(m)),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            CoxeterSystem::Dihedral(_) => 2,
            CoxeterSystem::Symmetric(n) => n.saturating_sub(1),
        }
    }

    pub fn m(&self, s: usize, t: usize) -> Option<u64> {
        if s == t {
            return Some(1);
        }
        match self {
            CoxeterSystem::Dihedral(m) => *m,
            CoxeterSystem::Symmetric(_) => Some(if s.abs_diff(t) == 1 { 3 } else { 2 }),
        }
    }

    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        let n = self.rank();
        CoxeterMatrix::new((0..n).map(|s| (0..n).map(|t| self.m(s, t)).collect()).collect())
            .expect("backends give valid Coxeter matrices")
    }

    pub fn identity(&self) -> Element {
        match self {
            CoxeterSystem::Dihedral(_) => Element::Dihedral { first: 0, len: 0 },
            CoxeterSystem::Symmetric(n) => Element::Perm((0..*n as u8).collect()),
        }
    }

    fn check_gen(&self, s: usize) -> Result<(), CoxeterError> {
        if s < self.rank() {
            Ok(())
        } else {
            Err(CoxeterError::InvalidGenerator(s))
        }
    }

    pub fn check_expression(&self, word: &[usize]) -> Result<(), CoxeterError> {
        word.iter().try_for_each(|&s| self.check_gen(s))
    }

    pub fn generator(&self, s: usize) -> Result<Element, CoxeterError> {
        self.check_gen(s)?;
        self.mul_gen(&self.identity(), s)
    }

    /// Dihedral element with the given start letter and length, put in
    /// canonical form.
    pub fn alternating(&self, first: usize, len: u64) -> Result<Element, CoxeterError> {
        let CoxeterSystem::Dihedral(m) = self else {
            return Err(CoxeterError::UnsupportedBackend);
        };
        self.check_gen(first)?;
        if let Some(m) = m {
            if len > *m {
                return Err(CoxeterError::Parse(format!("length {len} exceeds m = {m}")));
            }
        }
        Ok(dihedral_canonical(*m, first as u8, len))
    }

    pub fn length(&self, w: &Element) -> u64 {
        match w {
            Element::Dihedral { len, .. } => *len,
            Element::Perm(p) => {
                let mut inv = 0;
                for i in 0..p.len() {
                    for j in i + 1..p.len() {
                        if p[i] > p[j] {
                            inv += 1;
                        }
                    }
                }
                inv
            }
        }
    }

    /// w·s.
    pub fn mul_gen(&self, w: &Element, s: usize) -> Result<Element, CoxeterError> {
        self.check_gen(s)?;
        Ok(match (self, w) {
            (CoxeterSystem::Dihedral(m), Element::Dihedral { first, len }) => {
                let s = s as u8;
                let (first, len) = (*first, *len);
                if len == 0 {
                    dihedral_canonical(*m, s, 1)
                } else if Some(len) == *m {
                    // write w0 as the alternating word ending in s
                    let start = if len % 2 == 1 { s } else { 1 - s };
                    dihedral_canonical(*m, start, len - 1)
                } else {
                    let last = if len % 2 == 1 { first } else { 1 - first };
                    if last == s {
                        dihedral_canonical(*m, first, len - 1)
                    } else {
                        dihedral_canonical(*m, first, len + 1)
                    }
                }
            }
            (CoxeterSystem::Symmetric(_), Element::Perm(p)) => {
                let mut q = p.clone();
                q.swap(s, s + 1);
                Element::Perm(q)
            }
            _ => panic!("element from another backend"),
        })
    }

    /// s·w.
    pub fn left_mul_gen(&self, s: usize, w: &Element) -> Result<Element, CoxeterError> {
        self.check_gen(s)?;
        Ok(match (self, w) {
            (CoxeterSystem::Dihedral(m), Element::Dihedral { first, len }) => {
                let s = s as u8;
                let (first, len) = (*first, *len);
                if len == 0 {
                    dihedral_canonical(*m, s, 1)
                } else if Some(len) == *m {
                    dihedral_canonical(*m, 1 - s, len - 1)
                } else if first == s {
                    dihedral_canonical(*m, 1 - s, len - 1)
                } else {
                    dihedral_canonical(*m, s, len + 1)
                }
            }
            (CoxeterSystem::Symmetric(_), Element::Perm(p)) => {
                let q = p
                    .iter()
                    .map(|&v| match v as usize {
                        v if v == s => (s + 1) as u8,
                        v if v == s + 1 => s as u8,
                        v => v as u8,
                    })
                    .collect();
                Element::Perm(q)
            }
            _ => panic!("element from another backend"),
        })
    }

    /// True iff ws < w.
    pub fn right_descent(&self, w: &Element, s: usize) -> Result<bool, CoxeterError> {
        Ok(self.length(&self.mul_gen(w, s)?) < self.length(w))
    }

    pub fn reduced_word(&self, w: &Element) -> Expression {
        match w {
            Element::Dihedral { first, len } => (0..*len).map(|i| ((*first as u64 + i) % 2) as usize).collect(),
            Element::Perm(_) => {
                // strip right descents until the identity
                let mut word = Vec::new();
                let mut x = w.clone();
                while let Some(s) = (0..self.rank()).find(|&s| self.right_descent(&x, s).unwrap()) {
                    word.push(s);
                    x = self.mul_gen(&x, s).unwrap();
                }
                word.reverse();
                word
            }
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        self.reduced_word(y).into_iter().fold(x.clone(), |acc, s| self.mul_gen(&acc, s).unwrap())
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.product(&word).unwrap()
    }

    pub fn product(&self, word: &[usize]) -> Result<Element, CoxeterError> {
        word.iter().try_fold(self.identity(), |acc, &s| self.mul_gen(&acc, s))
    }

    /// Dihedral Bruhat order: x ≤ w iff ℓ(x) < ℓ(w) or x = w.
    pub fn bruhat_leq(&self, x: &Element, w: &Element) -> Result<bool, CoxeterError> {
        match self {
            CoxeterSystem::Dihedral(_) => Ok(self.length(x) < self.length(w) || x == w),
            CoxeterSystem::Symmetric(_) => Err(CoxeterError::UnsupportedBackend),
        }
    }

    /// All elements of length ≤ `max_len`, ordered by length then canonical form.
    pub fn elements_up_to(&self, max_len: u64) -> Vec<Element> {
        let mut out = vec![self.identity()];
        let mut frontier = vec![self.identity()];
        for _ in 0..max_len {
            let mut next: Vec<Element> = Vec::new();
            for w in &frontier {
                for s in 0..self.rank() {
                    let x = self.mul_gen(w, s).unwrap();
                    if self.length(&x) > self.length(w) && !next.contains(&x) {
                        next.push(x);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// "s1.s2.s1" for a reduced word of w, "e" for the identity.
    pub fn word_string(&self, w: &Element) -> String {
        expression_string(&self.reduced_word(w))
    }

    /// Parses "s1,s2,…" or "s1.s2.…"; "" and "e" are the empty expression.
    pub fn parse_expression(&self, text: &str) -> Result<Expression, CoxeterError> {
        let t = text.trim();
        if t.is_empty() || t == "e" {
            return Ok(Vec::new());
        }
        let word = t
            .split([',', '.'])
            .map(|tok| {
                let tok = tok.trim();
                let idx: usize = tok
                    .strip_prefix('s')
                    .and_then(|r| r.parse().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| CoxeterError::Parse(tok.to_string()))?;
                Ok(idx - 1)
            })
            .collect::<Result<Vec<_>, CoxeterError>>()?;
        self.check_expression(&word)?;
        Ok(word)
    }

    pub fn parse_element(&self, text: &str) -> Result<Element, CoxeterError> {
        let word = self.parse_expression(text)?;
        let w = self.product(&word)?;
        if self.length(&w) != word.len() as u64 {
            return Err(CoxeterError::Parse(format!("{text} is not reduced")));
        }
        Ok(w)
    }
}

fn dihedral_canonical(m: Option<u64>, first: u8, len: u64) -> Element {
    if len == 0 || Some(len) == m {
        Element::Dihedral { first: 0, len }
    } else {
        Element::Dihedral { first, len }
    }
}

pub fn expression_string(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|s| format!("s{}", s + 1)).collect::<Vec<_>>().join(".")
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Dihedral { len: 0, .. } => write!(f, "e"),
            Element::Dihedral { first, len } => {
                let word: Vec<usize> = (0..*len).map(|i| ((*first as u64 + i) % 2) as usize).collect();
                write!(f, "{}", expression_string(&word))
            }
            Element::Perm(p) => {
                let vals: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, "[{}]", vals.join(","))
            }
        }
    }
}
