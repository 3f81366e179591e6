//! Representations of a bound quiver and the morphisms between them.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{Path, PathAlgebra};

/// A finite-dimensional module over a path algebra: a vector space per
/// vertex and, for each arrow `a: i -> j`, a `dims[j] × dims[i]` matrix.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<PathAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dims == other.dims && self.maps == other.maps
    }
}
impl Eq for Representation {}

impl Representation {
    /// Validates shapes, field and relations.
    pub fn new(algebra: Arc<PathAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::InvalidRepresentation { reason: "one dimension per vertex expected".into() });
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation { reason: "one matrix per arrow expected".into() });
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch { expected: algebra.field().prime(), found: m.field().prime() });
            }
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidRepresentation {
                    reason: format!(
                        "arrow {} needs a {}x{} matrix, got {}x{}",
                        a.name, dims[a.target], dims[a.source], m.rows(), m.cols()
                    ),
                });
            }
        }
        let rep = Representation { algebra, dims, maps };
        for r in rep.algebra.relations() {
            let first = rep.algebra.quiver().arrow(r[0]).source;
            let p = Path { source: first, target: rep.algebra.quiver().arrow(*r.last().unwrap()).target, arrows: r.clone() };
            if !rep.path_action(&p).is_zero() {
                let name: Vec<&str> = r.iter().map(|&a| rep.algebra.quiver().arrow(a).name.as_str()).collect();
                return Err(Error::InvalidRepresentation {
                    reason: format!("relation {} does not act as zero", name.concat()),
                });
            }
        }
        Ok(rep)
    }

    pub fn zero(algebra: &Arc<PathAlgebra>) -> Self {
        let n = algebra.vertex_count();
        let k = algebra.field();
        let maps = algebra.quiver().arrows().iter().map(|_| Matrix::zeros(k, 0, 0)).collect();
        Representation { algebra: algebra.clone(), dims: alloc::vec![0; n], maps }
    }

    /// Builds without validating relations. Callers guarantee them.
    pub(crate) fn new_unchecked(algebra: Arc<PathAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        debug_assert!(Representation::new(algebra.clone(), dims.clone(), maps.clone()).is_ok());
        Representation { algebra, dims, maps }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }
    pub fn field(&self) -> Field {
        self.algebra.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }
    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    pub(crate) fn check_same_algebra(&self, other: &Representation) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// The linear map by which a path acts, `dims[target] × dims[source]`.
    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Re-reads all matrices over another field; used by field overrides.
    pub fn reinterpret(&self, algebra: &Arc<PathAlgebra>) -> Result<Representation> {
        let k = algebra.field();
        let maps = self
            .maps
            .iter()
            .map(|m| Matrix::from_fn(k, m.rows(), m.cols(), |r, c| m.get(r, c)))
            .collect();
        Representation::new(algebra.clone(), self.dims.clone(), maps)
    }
}

/// A morphism of representations: one matrix per vertex intertwining the
/// arrow actions, `target.map(a) * maps[i] == maps[j] * source.map(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl Morphism {
    pub fn new(source: Representation, target: Representation, maps: Vec<Matrix>) -> Result<Self> {
        source.check_same_algebra(&target)?;
        let alg = source.algebra().clone();
        if maps.len() != alg.vertex_count() {
            return Err(Error::InvalidMorphism { reason: "one matrix per vertex expected".into() });
        }
        for (v, m) in maps.iter().enumerate() {
            if m.field() != alg.field() {
                return Err(Error::FieldMismatch { expected: alg.field().prime(), found: m.field().prime() });
            }
            if m.shape() != (target.dims[v], source.dims[v]) {
                return Err(Error::InvalidMorphism {
                    reason: format!("vertex {} needs a {}x{} matrix", alg.quiver().vertex_label(v), target.dims[v], source.dims[v]),
                });
            }
        }
        for (ai, a) in alg.quiver().arrows().iter().enumerate() {
            let lhs = maps[a.target].mul(source.map(ai));
            let rhs = target.map(ai).mul(&maps[a.source]);
            if lhs != rhs {
                return Err(Error::InvalidMorphism { reason: format!("does not commute with arrow {}", a.name) });
            }
        }
        Ok(Morphism { source, target, maps })
    }

    pub(crate) fn new_unchecked(source: Representation, target: Representation, maps: Vec<Matrix>) -> Self {
        debug_assert!(Morphism::new(source.clone(), target.clone(), maps.clone()).is_ok());
        Morphism { source, target, maps }
    }

    pub fn identity(m: &Representation) -> Self {
        let k = m.field();
        let maps = m.dims.iter().map(|&d| Matrix::identity(k, d)).collect();
        Morphism { source: m.clone(), target: m.clone(), maps }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let k = source.field();
        let maps = source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(k, t, s)).collect();
        Morphism { source: source.clone(), target: target.clone(), maps }
    }

    /// Builds the morphism whose concatenated row-major vertex entries are `coords`.
    pub fn from_coords(source: &Representation, target: &Representation, coords: &[u32]) -> Self {
        let k = source.field();
        let mut maps = Vec::with_capacity(source.dims.len());
        let mut off = 0;
        for (&s, &t) in source.dims.iter().zip(&target.dims) {
            maps.push(Matrix::from_fn(k, t, s, |r, c| coords[off + r * s + c]));
            off += s * t;
        }
        assert_eq!(off, coords.len(), "coordinate vector length");
        Morphism::new_unchecked(source.clone(), target.clone(), maps)
    }

    /// Length of the ambient coordinate vector for morphisms `source -> target`.
    pub fn ambient_len(source: &Representation, target: &Representation) -> usize {
        source.dims.iter().zip(&target.dims).map(|(s, t)| s * t).sum()
    }

    pub fn coords(&self) -> Vec<u32> {
        self.maps.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }
    pub fn target(&self) -> &Representation {
        &self.target
    }
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }
    pub fn map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }
    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        self.source.algebra()
    }
    pub fn field(&self) -> Field {
        self.source.field()
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Result<Morphism> {
        if first.target != self.source {
            return Err(Error::ShapeMismatch { context: "composition: target of first is not source of second".into() });
        }
        let maps = self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect();
        Ok(Morphism { source: first.source.clone(), target: self.target.clone(), maps })
    }

    /// Composition when the middle objects agree up to representation equality
    /// already checked by the caller.
    pub(crate) fn after_unchecked(&self, first: &Morphism) -> Morphism {
        debug_assert_eq!(first.target.dims, self.source.dims);
        let maps = self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect();
        Morphism { source: first.source.clone(), target: self.target.clone(), maps }
    }

    fn check_parallel(&self, other: &Morphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ShapeMismatch { context: "morphisms are not parallel".into() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        self.check_parallel(other)?;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        Ok(Morphism { source: self.source.clone(), target: self.target.clone(), maps })
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism> {
        self.check_parallel(other)?;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect();
        Ok(Morphism { source: self.source.clone(), target: self.target.clone(), maps })
    }

    pub fn scale(&self, s: u32) -> Morphism {
        let maps = self.maps.iter().map(|a| a.scale(s)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// Injective at every vertex.
    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    /// Surjective at every vertex.
    pub fn is_epi(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.maps.iter().all(Matrix::is_identity)
    }

    /// Replaces source and target by equal-dimensional representations with
    /// the same structure; used after reconstructing objects independently.
    pub fn retarget(&self, source: &Representation, target: &Representation) -> Result<Morphism> {
        Morphism::new(source.clone(), target.clone(), self.maps.clone())
    }
}
