//! Indecomposable projectives, injectives and simples, and transport of
//! representations to the opposite algebra.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{Path, PathAlgebra};
use crate::rep::{Morphism, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Projective,
    Injective,
    Simple,
}

pub fn standard_module(alg: &Arc<PathAlgebra>, kind: StandardKind, v: usize) -> Representation {
    match kind {
        StandardKind::Projective => projective(alg, v),
        StandardKind::Injective => injective(alg, v),
        StandardKind::Simple => simple(alg, v),
    }
}

/// `P(v)`: at `w`, the span of nonzero paths `v -> w`; arrows act by
/// appending.
pub fn projective(alg: &Arc<PathAlgebra>, v: usize) -> Representation {
    let k = alg.field();
    let q = alg.quiver();
    let per_vertex: Vec<Vec<&Path>> = (0..q.vertex_count()).map(|w| alg.paths_between(v, w)).collect();
    let dims: Vec<usize> = per_vertex.iter().map(Vec::len).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(k, dims[a.target], dims[a.source]);
            for (c, p) in per_vertex[a.source].iter().enumerate() {
                let step = Path { source: a.source, target: a.target, arrows: alloc::vec![ai] };
                if let Some(r) = alg.concat(p, &step) {
                    let row = per_vertex[a.target].iter().position(|x| **x == r).expect("path listed");
                    m.set(row, c, 1);
                }
            }
            m
        })
        .collect();
    Representation::new_unchecked(alg.clone(), dims, maps)
}

/// `I(v)`: at `w`, the dual of the span of nonzero paths `w -> v`; an arrow
/// `a` sends the functional at `source(a)` to `q ↦ φ(a q)`.
pub fn injective(alg: &Arc<PathAlgebra>, v: usize) -> Representation {
    let k = alg.field();
    let q = alg.quiver();
    let per_vertex: Vec<Vec<&Path>> = (0..q.vertex_count()).map(|w| alg.paths_between(w, v)).collect();
    let dims: Vec<usize> = per_vertex.iter().map(Vec::len).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(k, dims[a.target], dims[a.source]);
            let step = Path { source: a.source, target: a.target, arrows: alloc::vec![ai] };
            for (r, tail) in per_vertex[a.target].iter().enumerate() {
                if let Some(p) = alg.concat(&step, tail) {
                    let c = per_vertex[a.source].iter().position(|x| **x == p).expect("path listed");
                    m.set(r, c, 1);
                }
            }
            m
        })
        .collect();
    Representation::new_unchecked(alg.clone(), dims, maps)
}

pub fn simple(alg: &Arc<PathAlgebra>, v: usize) -> Representation {
    let k = alg.field();
    let q = alg.quiver();
    let dims: Vec<usize> = (0..q.vertex_count()).map(|w| usize::from(w == v)).collect();
    let maps = q.arrows().iter().map(|a| Matrix::zeros(k, dims[a.target], dims[a.source])).collect();
    Representation::new_unchecked(alg.clone(), dims, maps)
}

/// The regular module `A = ⊕_v P(v)`.
pub fn regular(alg: &Arc<PathAlgebra>) -> Representation {
    let ps: Vec<Representation> = (0..alg.vertex_count()).map(|v| projective(alg, v)).collect();
    crate::module::direct_sum(alg, &ps).expect("same algebra").object
}

/// Morphism `P(v) -> m` sending the trivial path `e_v` to `element ∈ m_v`.
pub fn from_projective(alg: &Arc<PathAlgebra>, v: usize, m: &Representation, element: &[u32]) -> Result<Morphism> {
    m.check_same_algebra(&projective(alg, v))?;
    if element.len() != m.dim_at(v) {
        return Err(crate::error::shape("element length"));
    }
    let p = projective(alg, v);
    let k = alg.field();
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let paths = alg.paths_between(v, w);
            let cols: Vec<Vec<u32>> = paths.iter().map(|path| m.path_action(path).apply(element)).collect();
            Matrix::from_columns(k, m.dim_at(w), &cols).expect("column lengths")
        })
        .collect();
    Morphism::new(p, m.clone(), maps)
}

/// Morphism `m -> I(v)` determined by a functional `λ` on `m_v`: an element
/// `x ∈ m_w` goes to `q ↦ λ(q x)` for paths `q: w -> v`.
pub fn to_injective(alg: &Arc<PathAlgebra>, v: usize, m: &Representation, functional: &[u32]) -> Result<Morphism> {
    let i = injective(alg, v);
    m.check_same_algebra(&i)?;
    if functional.len() != m.dim_at(v) {
        return Err(crate::error::shape("functional length"));
    }
    let k = alg.field();
    let row = Matrix::from_rows(k, m.dim_at(v), &[functional.to_vec()]).expect("row length");
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let rows: Vec<Vec<u32>> =
                alg.paths_between(w, v).iter().map(|q| row.mul(&m.path_action(q)).row(0).to_vec()).collect();
            Matrix::from_rows(k, m.dim_at(w), &rows).expect("row lengths")
        })
        .collect();
    Morphism::new(m.clone(), i, maps)
}

/// Coordinates in `P(v)_w` of a nonzero path `v -> w`.
pub fn path_element(alg: &PathAlgebra, path: &Path) -> Result<Vec<u32>> {
    let paths = alg.paths_between(path.source, path.target);
    let i = paths
        .iter()
        .position(|p| *p == path)
        .ok_or_else(|| Error::InvalidRepresentation { reason: "path is zero in the algebra".into() })?;
    let mut v = alloc::vec![0; paths.len()];
    v[i] = 1;
    Ok(v)
}

/// Transports a representation to the opposite algebra by transposing every
/// arrow matrix.
pub fn transport_representation(m: &Representation, op: &Arc<PathAlgebra>) -> Result<Representation> {
    if !op.is_opposite_of(m.algebra()) {
        return Err(Error::NotOpposite);
    }
    let maps = m.maps().iter().map(Matrix::transpose).collect();
    Ok(Representation::new_unchecked(op.clone(), m.dims().to_vec(), maps))
}

/// Transports a morphism `f: X -> Y` to `f^T: Y^op -> X^op`.
pub fn transport_morphism(f: &Morphism, op: &Arc<PathAlgebra>) -> Result<Morphism> {
    let x = transport_representation(f.source(), op)?;
    let y = transport_representation(f.target(), op)?;
    let maps = f.maps().iter().map(Matrix::transpose).collect();
    Ok(Morphism::new_unchecked(y, x, maps))
}
