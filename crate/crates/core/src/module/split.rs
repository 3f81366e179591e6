use crate::error::Result;
use crate::rep::Morphism;

use super::hom::hom_basis;
use super::solve_in_span;

#[derive(Clone, Debug)]
pub struct Splitness {
    /// `r` with `r ∘ f = id`.
    pub retraction: Option<Morphism>,
    /// `s` with `f ∘ s = id`.
    pub section: Option<Morphism>,
}

impl Splitness {
    pub fn is_split_mono(&self) -> bool {
        self.retraction.is_some()
    }
    pub fn is_split_epi(&self) -> bool {
        self.section.is_some()
    }
}

pub fn section(f: &Morphism) -> Result<Option<Morphism>> {
    if !f.is_epi() {
        return Ok(None);
    }
    let h = hom_basis(f.target(), f.source())?;
    let vectors: alloc::vec::Vec<_> = h.basis().iter().map(|s| f.after_unchecked(s).coords()).collect();
    let id = Morphism::identity(f.target()).coords();
    Ok(solve_in_span(f.field(), id.len(), &vectors, &id).map(|c| h.combine(&c)))
}

pub fn retraction(f: &Morphism) -> Result<Option<Morphism>> {
    if !f.is_mono() {
        return Ok(None);
    }
    let h = hom_basis(f.target(), f.source())?;
    let vectors: alloc::vec::Vec<_> = h.basis().iter().map(|r| r.after_unchecked(f).coords()).collect();
    let id = Morphism::identity(f.source()).coords();
    Ok(solve_in_span(f.field(), id.len(), &vectors, &id).map(|c| h.combine(&c)))
}

pub fn splitness(f: &Morphism) -> Result<Splitness> {
    Ok(Splitness { retraction: retraction(f)?, section: section(f)? })
}
