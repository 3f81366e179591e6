use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::module::{hcat, hom_basis, projective_cover, quotient, section, submodule, vcat};
use crate::quiver::PathAlgebra;
use crate::rep::{Morphism, Representation};

/// A full subcategory `T` that is functorially finite: every object has a
/// canonical right and left approximation. The stable category `A/<T>`
/// quotients by morphisms that factor through an object of `T`.
pub trait Subcategory {
    fn algebra(&self) -> &Arc<PathAlgebra>;

    /// Short human-readable description for reports.
    fn describe(&self) -> String;

    /// Canonical right approximation `T_Y -> Y`.
    fn precover(&self, y: &Representation) -> Result<Morphism>;

    /// Canonical left approximation `X -> T^X`.
    fn preenvelope(&self, x: &Representation) -> Result<Morphism>;

    /// The ideal of `T`-factoring morphisms as a subspace of the ambient
    /// coordinates of `Hom(x, y)`: everything of the form `p_Y ∘ h`.
    fn ideal(&self, x: &Representation, y: &Representation) -> Result<Subspace> {
        let p = self.precover(y)?;
        let h = hom_basis(x, p.source())?;
        let vectors: Vec<Vec<u32>> = h.basis().iter().map(|b| p.after_unchecked(b).coords()).collect();
        Ok(Subspace::from_spanning(x.field(), Morphism::ambient_len(x, y), &vectors))
    }

    /// Whether every object of `T` is projective; enables the cross-check
    /// routes that only hold under that hypothesis.
    fn projective_objects(&self) -> bool {
        false
    }

    /// Objects `t` of the subcategory for which `Ext¹(y, t)` is searched
    /// when looking for extension counterexamples.
    fn ext_targets(&self) -> Vec<Representation> {
        Vec::new()
    }

    fn check_algebra(&self, m: &Representation) -> Result<()> {
        if m.algebra().as_ref() == self.algebra().as_ref() {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

/// `T = add(generators)`.
#[derive(Clone, Debug)]
pub struct StableContext {
    algebra: Arc<PathAlgebra>,
    generators: Vec<Representation>,
    projective: Vec<bool>,
}

impl StableContext {
    pub fn new(algebra: &Arc<PathAlgebra>, generators: Vec<Representation>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptySubcategory);
        }
        let zero = Representation::zero(algebra);
        let mut projective = Vec::with_capacity(generators.len());
        for g in &generators {
            g.check_same_algebra(&zero)?;
            projective.push(section(&projective_cover(g).map)?.is_some());
        }
        Ok(StableContext { algebra: algebra.clone(), generators, projective })
    }

    pub fn generators(&self) -> &[Representation] {
        &self.generators
    }

    /// Projectivity of each generator: its projective cover is a split epi.
    pub fn projectivity(&self) -> &[bool] {
        &self.projective
    }

    /// Fails with the first non-projective generator.
    pub fn require_projective(&self) -> Result<()> {
        match self.projective.iter().position(|p| !p) {
            Some(index) => Err(Error::NotProjectiveGenerator { index }),
            None => Ok(()),
        }
    }

    /// Precover with the generator index of every summand.
    pub fn precover_summands(&self, y: &Representation) -> Result<(Morphism, Vec<usize>)> {
        self.check_algebra(y)?;
        let mut parts = Vec::new();
        let mut summands = Vec::new();
        for (i, t) in self.generators.iter().enumerate() {
            for b in hom_basis(t, y)?.basis() {
                parts.push(b.clone());
                summands.push(i);
            }
        }
        Ok((hcat(y, &parts)?.1, summands))
    }

    pub fn preenvelope_summands(&self, x: &Representation) -> Result<(Morphism, Vec<usize>)> {
        self.check_algebra(x)?;
        let mut parts = Vec::new();
        let mut summands = Vec::new();
        for (i, t) in self.generators.iter().enumerate() {
            for b in hom_basis(x, t)?.basis() {
                parts.push(b.clone());
                summands.push(i);
            }
        }
        Ok((vcat(x, &parts)?.1, summands))
    }
}

impl Subcategory for StableContext {
    fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    fn describe(&self) -> String {
        alloc::format!("add of {} generator(s)", self.generators.len())
    }

    fn precover(&self, y: &Representation) -> Result<Morphism> {
        Ok(self.precover_summands(y)?.0)
    }

    fn preenvelope(&self, x: &Representation) -> Result<Morphism> {
        Ok(self.preenvelope_summands(x)?.0)
    }

    /// Span of all composites `g ∘ h` with `h: x -> T_i`, `g: T_i -> y`.
    fn ideal(&self, x: &Representation, y: &Representation) -> Result<Subspace> {
        self.check_algebra(x)?;
        self.check_algebra(y)?;
        let mut vectors = Vec::new();
        for t in &self.generators {
            let hs = hom_basis(x, t)?;
            if hs.dim() == 0 {
                continue;
            }
            for g in hom_basis(t, y)?.basis() {
                for h in hs.basis() {
                    vectors.push(g.after_unchecked(h).coords());
                }
            }
        }
        Ok(Subspace::from_spanning(x.field(), Morphism::ambient_len(x, y), &vectors))
    }

    fn projective_objects(&self) -> bool {
        self.projective.iter().all(|&p| p)
    }

    fn ext_targets(&self) -> Vec<Representation> {
        self.generators.clone()
    }
}

/// The Serre class of modules whose composition factors are simples at the
/// given support vertices; membership is vanishing of the dimension vector
/// off the support.
#[derive(Clone, Debug)]
pub struct SerreClass {
    algebra: Arc<PathAlgebra>,
    support: Vec<bool>,
}

impl SerreClass {
    pub fn new(algebra: &Arc<PathAlgebra>, support: &[usize]) -> Result<Self> {
        let n = algebra.vertex_count();
        if n == 0 {
            return Err(Error::EmptySubcategory);
        }
        let mut mask = alloc::vec![false; n];
        for &v in support {
            if v >= n {
                return Err(Error::UnknownVertex(alloc::format!("#{v}")));
            }
            mask[v] = true;
        }
        Ok(SerreClass { algebra: algebra.clone(), support: mask })
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.support.len()).filter(|&v| self.support[v]).collect()
    }

    pub fn contains(&self, m: &Representation) -> bool {
        m.dims().iter().zip(&self.support).all(|(&d, &s)| s || d == 0)
    }

    /// Subspaces of the torsion part `t(x)`: the largest submodule supported
    /// on the class, found by shrinking the supported part of `x` until it
    /// is closed under the arrows.
    pub fn torsion_subspaces(&self, x: &Representation) -> Vec<Subspace> {
        let k = x.field();
        let q = self.algebra.quiver();
        let mut subs: Vec<Subspace> = (0..q.vertex_count())
            .map(|v| if self.support[v] { Subspace::full(k, x.dim_at(v)) } else { Subspace::zero(k, x.dim_at(v)) })
            .collect();
        loop {
            let mut changed = false;
            for (ai, a) in q.arrows().iter().enumerate() {
                // Keep only vectors at the source whose image stays inside.
                let m = x.map(ai);
                let target = &subs[a.target];
                let source = &subs[a.source];
                if source.basis().iter().all(|b| target.contains(&m.apply(b))) {
                    continue;
                }
                let basis = source.basis_columns();
                let image = m.mul(&basis);
                let comp = target.complement_indices();
                let reduced = crate::linalg::Matrix::from_fn(k, comp.len(), basis.cols(), |r, c| {
                    target.reduce(&image.column(c))[comp[r]]
                });
                let coeffs = reduced.kernel();
                let vectors: Vec<Vec<u32>> = coeffs.basis().iter().map(|c| basis.apply(c)).collect();
                subs[a.source] = Subspace::from_spanning(k, x.dim_at(a.source), &vectors);
                changed = true;
            }
            if !changed {
                return subs;
            }
        }
    }

    /// Inclusion `t(x) -> x`.
    pub fn torsion(&self, x: &Representation) -> Result<Morphism> {
        self.check_algebra(x)?;
        submodule(x, &self.torsion_subspaces(x))
    }

    /// Subspaces of the smallest submodule `K` with `x/K` in the class.
    pub fn cotorsion_subspaces(&self, x: &Representation) -> Result<Vec<Subspace>> {
        let generators: Vec<(usize, Vec<u32>)> = (0..self.support.len())
            .filter(|&v| !self.support[v])
            .flat_map(|v| (0..x.dim_at(v)).map(move |i| (v, crate::linalg::Matrix::identity(x.field(), x.dim_at(v)).column(i))))
            .collect();
        crate::module::generated_subspaces(x, &generators)
    }
}

impl Subcategory for SerreClass {
    fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    fn describe(&self) -> String {
        let labels: Vec<&str> = self.support().iter().map(|&v| self.algebra.quiver().vertex_label(v)).collect();
        alloc::format!("Serre class supported on {{{}}}", labels.join(", "))
    }

    fn precover(&self, y: &Representation) -> Result<Morphism> {
        self.torsion(y)
    }

    fn preenvelope(&self, x: &Representation) -> Result<Morphism> {
        self.check_algebra(x)?;
        quotient(x, &self.cotorsion_subspaces(x)?)
    }

    fn ext_targets(&self) -> Vec<Representation> {
        self.support().into_iter().map(|v| crate::standard::simple(&self.algebra, v)).collect()
    }
}
