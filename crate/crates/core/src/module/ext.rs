use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::rep::{Morphism, Representation};

use super::envelope::projective_cover;
use super::hom::{hom_basis, HomBasis};
use super::ops::{factor_through_epi, hcat, image_subspaces, kernel, pushout};

/// `0 -> A -> B -> C -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub mono: Morphism,
    pub epi: Morphism,
}

impl ShortExactSequence {
    pub fn new(mono: Morphism, epi: Morphism) -> Result<Self> {
        if mono.target() != epi.source() {
            return Err(crate::error::shape("middle terms differ"));
        }
        if !mono.is_mono() {
            return Err(Error::NotMono);
        }
        if !epi.is_epi() {
            return Err(Error::NotEpi);
        }
        let exact = image_subspaces(&mono).iter().zip(epi.maps()).all(|(im, e)| *im == e.kernel());
        if !exact {
            return Err(Error::InvalidMorphism { reason: "sequence is not exact in the middle".into() });
        }
        Ok(ShortExactSequence { mono, epi })
    }

    pub fn middle(&self) -> &Representation {
        self.mono.target()
    }
}

/// `Ext¹(y, t)` computed from the projective cover `0 -> K -> P -> y -> 0` as
/// `Hom(K, t)` modulo the restrictions of maps `P -> t`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub cover: Morphism,
    pub syzygy: Morphism,
    pub cocycles: HomBasis,
    pub coboundaries: Subspace,
    /// Coset representatives, one per dimension of `Ext¹`.
    pub classes: Vec<Morphism>,
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    /// Whether a cocycle `K -> t` represents the zero class.
    pub fn is_coboundary(&self, c: &Morphism) -> bool {
        self.coboundaries.contains(&c.coords())
    }
}

pub fn ext1(y: &Representation, t: &Representation) -> Result<Ext1> {
    y.check_same_algebra(t)?;
    let cover = projective_cover(y).map;
    let syzygy = kernel(&cover);
    let cocycles = hom_basis(syzygy.source(), t)?;
    let from_cover = hom_basis(cover.source(), t)?;
    let k = y.field();
    let ambient = Morphism::ambient_len(syzygy.source(), t);
    let restricted: Vec<Vec<u32>> = from_cover.basis().iter().map(|h| h.after_unchecked(&syzygy).coords()).collect();
    let coboundaries = Subspace::from_spanning(k, ambient, &restricted);
    let mut span = coboundaries.clone();
    let mut classes = Vec::new();
    for c in cocycles.basis() {
        let v = c.coords();
        if !span.contains(&v) {
            span = span.sum(&Subspace::from_spanning(k, ambient, &[v]));
            classes.push(c.clone());
        }
    }
    Ok(Ext1 { cover, syzygy, cocycles, coboundaries, classes })
}

/// The extension `0 -> t -> X -> y -> 0` obtained by pushing the cover
/// sequence of `y` out along the cocycle `c: K -> t`.
pub fn extension_from_cocycle(ext: &Ext1, c: &Morphism) -> Result<ShortExactSequence> {
    if c.source() != ext.syzygy.source() || c.target() != ext.cocycles.target() {
        return Err(crate::error::shape("cocycle must map the syzygy to the second argument"));
    }
    let po = pushout(&ext.syzygy, c)?;
    // [π, 0]: P ⊕ t -> y vanishes on the image of [κ; −c].
    let y = ext.cover.target();
    let zero = Morphism::zero(c.target(), y);
    let (sum, onto_y) = hcat(y, &[ext.cover.clone(), zero])?;
    let (_, legs) = hcat(&po.corner, &[po.first.clone(), po.second.clone()])?;
    debug_assert_eq!(legs.source(), &sum.object);
    let epi = factor_through_epi(&legs, &onto_y)?.ok_or(Error::InvalidMorphism {
        reason: "cover does not factor through the pushout".into(),
    })?;
    ShortExactSequence::new(po.second, epi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::module::split::section;
    use crate::quiver::{PathAlgebra, Quiver};
    use crate::standard::{projective, simple};
    use alloc::sync::Arc;

    fn a2() -> Arc<PathAlgebra> {
        Arc::new(PathAlgebra::new(Quiver::linear(2), &[], Field::f2()).unwrap())
    }

    #[test]
    fn ext_between_simples_of_a2() {
        let alg = a2();
        let e = ext1(&simple(&alg, 0), &simple(&alg, 1)).unwrap();
        assert_eq!(e.dim(), 1);
        let ses = extension_from_cocycle(&e, &e.classes[0]).unwrap();
        assert_eq!(ses.middle(), &projective(&alg, 0));
        assert!(section(&ses.epi).unwrap().is_none());
    }

    #[test]
    fn zero_cocycle_gives_split_sequence() {
        let alg = a2();
        let e = ext1(&simple(&alg, 0), &simple(&alg, 1)).unwrap();
        let c = Morphism::zero(e.syzygy.source(), e.cocycles.target());
        assert!(e.is_coboundary(&c));
        let ses = extension_from_cocycle(&e, &c).unwrap();
        assert_eq!(ses.middle().dims(), &[1, 1]);
        assert!(section(&ses.epi).unwrap().is_some());
    }

    #[test]
    fn projective_and_zero_have_no_extensions() {
        let alg = a2();
        assert_eq!(ext1(&projective(&alg, 0), &simple(&alg, 1)).unwrap().dim(), 0);
        assert_eq!(ext1(&simple(&alg, 0), &Representation::zero(&alg)).unwrap().dim(), 0);
    }
}
