use crate::arith::{Coefficient, Scalar};
use crate::grading::{GradingGroup, GroupElement};

use super::{degree, TLElement, TlError, TwoColorDegreeData};

/// A character of a presented abelian group, given by its values on the
/// generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    group: GradingGroup,
    images: Vec<Scalar>,
}

impl Character {
    /// Fails unless every image is nonzero and every relation maps to 1.
    pub fn new(group: &GradingGroup, images: Vec<Scalar>) -> Result<Self, TlError> {
        if images.len() != group.rank() {
            return Err(TlError::ChiNotHomomorphism(format!(
                "{} images for {} generators",
                images.len(),
                group.rank()
            )));
        }
        if let Some(i) = images.iter().position(|c| c.vanishes()) {
            return Err(TlError::ChiNotHomomorphism(format!("generator {i} maps to 0")));
        }
        let chi = Character { group: group.clone(), images };
        for r in group.relations() {
            let v = chi.on_coords(r)?;
            if v != v.one_like() {
                return Err(TlError::ChiNotHomomorphism(format!("relation {r:?} maps to {v}")));
            }
        }
        Ok(chi)
    }

    pub fn trivial(group: &GradingGroup, characteristic: u64) -> Self {
        Character { group: group.clone(), images: vec![Scalar::one(characteristic); group.rank()] }
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn images(&self) -> &[Scalar] {
        &self.images
    }

    fn on_coords(&self, coords: &[i64]) -> Result<Scalar, TlError> {
        let mut acc = self.images[0].one_like();
        for (c, &k) in self.images.iter().zip(coords) {
            let base = if k < 0 { c.try_inv()? } else { c.clone() };
            acc = acc.times(&base.pow(k.unsigned_abs() as usize));
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &GroupElement) -> Result<Scalar, TlError> {
        self.on_coords(&x.representative())
    }

    /// The pointwise inverse character.
    pub fn inverse(&self) -> Result<Self, TlError> {
        let images = self.images.iter().map(|c| c.try_inv()).collect::<Result<_, _>>()?;
        Ok(Character { group: self.group.clone(), images })
    }
}

/// The character on the bigrading ℤ² with (1,0) ↦ q⁻¹ and (0,1) ↦ 1.
pub fn frobenius_character(q: &Scalar) -> Result<Character, TlError> {
    let group = TwoColorDegreeData::bigrading().group;
    Character::new(&group, vec![q.try_inv()?, q.one_like()])
}

/// Multiplies the coefficient of every diagram D by χ(deg D). This is an
/// algebra map on TL_n(0), where closed loops vanish.
pub fn theta_rescale(
    x: &TLElement<Scalar>,
    data: &TwoColorDegreeData,
    chi: &Character,
) -> Result<TLElement<Scalar>, TlError> {
    if chi.group() != &data.group {
        return Err(TlError::ChiNotHomomorphism("character lives on a different group".into()));
    }
    let mut out = TLElement::zero(x.n_bottom(), x.n_top(), x.delta().clone());
    for (m, c) in x.iter() {
        let s = chi.eval(&degree(m, data))?;
        out.add_term(m.clone(), c.try_mul(&s)?);
    }
    Ok(out)
}
