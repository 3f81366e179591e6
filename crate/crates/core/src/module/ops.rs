use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::quiver::PathAlgebra;
use crate::rep::{Morphism, Representation};

/// Kernel, coimage, image and cokernel of a morphism `f: X -> Y`, with
/// `f = image ∘ coimage`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub kernel: Morphism,
    pub coimage: Morphism,
    pub image: Morphism,
    pub cokernel: Morphism,
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub object: Representation,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

/// A pullback `corner -> X`, `corner -> W` or a pushout `X -> corner`,
/// `W -> corner`; `first` is the leg on the side of the first argument.
#[derive(Clone, Debug)]
pub struct Square {
    pub corner: Representation,
    pub first: Morphism,
    pub second: Morphism,
}

fn check_subspaces(m: &Representation, subs: &[Subspace]) -> Result<()> {
    if subs.len() != m.dims().len() {
        return Err(crate::error::shape("one subspace per vertex expected"));
    }
    for (v, s) in subs.iter().enumerate() {
        if s.ambient_dim() != m.dim_at(v) || s.field() != m.field() {
            return Err(crate::error::shape(format!("subspace at vertex {v} has the wrong ambient space")));
        }
    }
    for (ai, a) in m.algebra().quiver().arrows().iter().enumerate() {
        let ma = m.map(ai);
        if subs[a.source].basis().iter().any(|b| !subs[a.target].contains(&ma.apply(b))) {
            return Err(Error::InvalidRepresentation {
                reason: format!("subspace is not closed under arrow {}", a.name),
            });
        }
    }
    Ok(())
}

/// Inclusion of the submodule given by one arrow-stable subspace per vertex,
/// in the echelon basis of each subspace.
pub fn submodule(m: &Representation, subs: &[Subspace]) -> Result<Morphism> {
    check_subspaces(m, subs)?;
    let k = m.field();
    let dims: Vec<usize> = subs.iter().map(Subspace::dim).collect();
    let maps = m
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let cols: Vec<Vec<u32>> = subs[a.source]
                .basis()
                .iter()
                .map(|b| subs[a.target].coordinates(&m.map(ai).apply(b)).expect("stable subspace"))
                .collect();
            Matrix::from_columns(k, dims[a.target], &cols).expect("coordinate lengths")
        })
        .collect();
    let s = Representation::new_unchecked(m.algebra().clone(), dims, maps);
    let incl = subs.iter().map(Subspace::basis_columns).collect();
    Ok(Morphism::new_unchecked(s, m.clone(), incl))
}

/// Projection onto `m / subs`, in canonical complement coordinates.
pub fn quotient(m: &Representation, subs: &[Subspace]) -> Result<Morphism> {
    check_subspaces(m, subs)?;
    let qs: Vec<Matrix> = subs.iter().map(Subspace::quotient_map).collect();
    let ss: Vec<Matrix> = subs.iter().map(Subspace::quotient_section).collect();
    let dims: Vec<usize> = qs.iter().map(Matrix::rows).collect();
    let maps = m
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| qs[a.target].mul(&m.map(ai).mul(&ss[a.source])))
        .collect();
    let q = Representation::new_unchecked(m.algebra().clone(), dims, maps);
    Ok(Morphism::new_unchecked(m.clone(), q, qs))
}

/// The submodule generated by the given elements `(vertex, vector)`.
pub fn generated_subspaces(m: &Representation, generators: &[(usize, Vec<u32>)]) -> Result<Vec<Subspace>> {
    let alg = m.algebra();
    let k = m.field();
    let mut spans: Vec<Vec<Vec<u32>>> = alloc::vec![Vec::new(); alg.vertex_count()];
    for (v, x) in generators {
        if *v >= alg.vertex_count() || x.len() != m.dim_at(*v) {
            return Err(crate::error::shape("generator does not fit the module"));
        }
        for p in alg.basis().iter().filter(|p| p.source == *v) {
            spans[p.target].push(m.path_action(p).apply(x));
        }
    }
    Ok(spans
        .iter()
        .enumerate()
        .map(|(w, vs)| Subspace::from_spanning(k, m.dim_at(w), vs))
        .collect())
}

pub fn generated_submodule(m: &Representation, generators: &[(usize, Vec<u32>)]) -> Result<Morphism> {
    submodule(m, &generated_subspaces(m, generators)?)
}

/// Vertexwise image subspaces of `f`.
pub fn image_subspaces(f: &Morphism) -> Vec<Subspace> {
    f.maps().iter().map(Matrix::column_space).collect()
}

pub fn kernel(f: &Morphism) -> Morphism {
    let subs: Vec<Subspace> = f.maps().iter().map(Matrix::kernel).collect();
    submodule(f.source(), &subs).expect("kernels are submodules")
}

pub fn image(f: &Morphism) -> Morphism {
    submodule(f.target(), &image_subspaces(f)).expect("images are submodules")
}

pub fn cokernel(f: &Morphism) -> Morphism {
    quotient(f.target(), &image_subspaces(f)).expect("images are submodules")
}

pub fn factorize(f: &Morphism) -> Factorization {
    let image = image(f);
    let coimage = lift_through_mono(&image, f).expect("monomorphism").expect("f lands in its image");
    Factorization { kernel: kernel(f), coimage, image, cokernel: cokernel(f) }
}

/// `g` with `g ∘ pi = f`, for an epimorphism `pi`.
pub fn factor_through_epi(pi: &Morphism, f: &Morphism) -> Result<Option<Morphism>> {
    if pi.source() != f.source() {
        return Err(Error::SourceMismatch);
    }
    if !pi.is_epi() {
        return Err(Error::NotEpi);
    }
    let mut maps = Vec::with_capacity(pi.maps().len());
    for (p, fv) in pi.maps().iter().zip(f.maps()) {
        match p.transpose().solve_matrix(&fv.transpose())? {
            Some(g) => maps.push(g.transpose()),
            None => return Ok(None),
        }
    }
    Morphism::new(pi.target().clone(), f.target().clone(), maps).map(Some)
}

/// `g` with `iota ∘ g = f`, for a monomorphism `iota`.
pub fn lift_through_mono(iota: &Morphism, f: &Morphism) -> Result<Option<Morphism>> {
    if iota.target() != f.target() {
        return Err(Error::TargetMismatch);
    }
    if !iota.is_mono() {
        return Err(Error::NotMono);
    }
    let mut maps = Vec::with_capacity(iota.maps().len());
    for (i, fv) in iota.maps().iter().zip(f.maps()) {
        match i.solve_matrix(fv)? {
            Some(g) => maps.push(g),
            None => return Ok(None),
        }
    }
    Morphism::new(f.source().clone(), iota.source().clone(), maps).map(Some)
}

pub fn direct_sum(alg: &Arc<PathAlgebra>, ms: &[Representation]) -> Result<DirectSum> {
    let zero = Representation::zero(alg);
    for m in ms {
        m.check_same_algebra(&zero)?;
    }
    let k = alg.field();
    let nv = alg.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|v| ms.iter().map(|m| m.dim_at(v)).sum()).collect();
    let maps = (0..alg.arrow_count())
        .map(|ai| {
            let blocks: Vec<&Matrix> = ms.iter().map(|m| m.map(ai)).collect();
            Matrix::block_diag(k, &blocks)
        })
        .collect();
    let object = Representation::new_unchecked(alg.clone(), dims.clone(), maps);
    let mut injections = Vec::with_capacity(ms.len());
    let mut projections = Vec::with_capacity(ms.len());
    let mut offsets = alloc::vec![0usize; nv];
    for m in ms {
        let mut inj = Vec::with_capacity(nv);
        let mut proj = Vec::with_capacity(nv);
        for v in 0..nv {
            let d = m.dim_at(v);
            let mut i = Matrix::zeros(k, dims[v], d);
            i.write_block(offsets[v], 0, &Matrix::identity(k, d));
            proj.push(i.transpose());
            inj.push(i);
            offsets[v] += d;
        }
        injections.push(Morphism::new_unchecked(m.clone(), object.clone(), inj));
        projections.push(Morphism::new_unchecked(object.clone(), m.clone(), proj));
    }
    Ok(DirectSum { object, injections, projections })
}

/// `[f_1, …, f_n]: X_1 ⊕ … ⊕ X_n -> target`.
pub fn hcat(target: &Representation, fs: &[Morphism]) -> Result<(DirectSum, Morphism)> {
    if fs.iter().any(|f| f.target() != target) {
        return Err(Error::TargetMismatch);
    }
    let sources: Vec<Representation> = fs.iter().map(|f| f.source().clone()).collect();
    let sum = direct_sum(target.algebra(), &sources)?;
    let k = target.field();
    let maps = (0..target.dims().len())
        .map(|v| {
            let mut m = Matrix::zeros(k, target.dim_at(v), sum.object.dim_at(v));
            let mut c = 0;
            for f in fs {
                m.write_block(0, c, f.map(v));
                c += f.map(v).cols();
            }
            m
        })
        .collect();
    let f = Morphism::new_unchecked(sum.object.clone(), target.clone(), maps);
    Ok((sum, f))
}

/// `[f_1; …; f_n]: source -> Y_1 ⊕ … ⊕ Y_n`.
pub fn vcat(source: &Representation, fs: &[Morphism]) -> Result<(DirectSum, Morphism)> {
    if fs.iter().any(|f| f.source() != source) {
        return Err(Error::SourceMismatch);
    }
    let targets: Vec<Representation> = fs.iter().map(|f| f.target().clone()).collect();
    let sum = direct_sum(source.algebra(), &targets)?;
    let k = source.field();
    let maps = (0..source.dims().len())
        .map(|v| {
            let mut m = Matrix::zeros(k, sum.object.dim_at(v), source.dim_at(v));
            let mut r = 0;
            for f in fs {
                m.write_block(r, 0, f.map(v));
                r += f.map(v).rows();
            }
            m
        })
        .collect();
    let f = Morphism::new_unchecked(source.clone(), sum.object.clone(), maps);
    Ok((sum, f))
}

/// `f ⊕ g: X ⊕ W -> Y ⊕ Z`.
pub fn direct_sum_morphism(fs: &[Morphism]) -> Result<Morphism> {
    let Some(first) = fs.first() else {
        return Err(crate::error::shape("empty list of morphisms"));
    };
    let alg = first.algebra();
    let s = direct_sum(alg, &fs.iter().map(|f| f.source().clone()).collect::<Vec<_>>())?;
    let t = direct_sum(alg, &fs.iter().map(|f| f.target().clone()).collect::<Vec<_>>())?;
    let k = alg.field();
    let maps = (0..alg.vertex_count())
        .map(|v| {
            let blocks: Vec<&Matrix> = fs.iter().map(|f| f.map(v)).collect();
            Matrix::block_diag(k, &blocks)
        })
        .collect();
    Ok(Morphism::new_unchecked(s.object, t.object, maps))
}

/// Pullback of `f: X -> Y` and `g: W -> Y`, as the kernel of `[f, -g]`.
pub fn pullback(f: &Morphism, g: &Morphism) -> Result<Square> {
    if f.target() != g.target() {
        return Err(Error::TargetMismatch);
    }
    let k = f.field();
    let neg = g.scale(k.neg(1));
    let (sum, h) = hcat(f.target(), &[f.clone(), neg])?;
    let ker = kernel(&h);
    Ok(Square {
        corner: ker.source().clone(),
        first: sum.projections[0].after_unchecked(&ker),
        second: sum.projections[1].after_unchecked(&ker),
    })
}

/// Pushout of `f: Y -> X` and `g: Y -> W`, as the cokernel of `[f; -g]`.
pub fn pushout(f: &Morphism, g: &Morphism) -> Result<Square> {
    if f.source() != g.source() {
        return Err(Error::SourceMismatch);
    }
    let k = f.field();
    let neg = g.scale(k.neg(1));
    let (sum, h) = vcat(f.source(), &[f.clone(), neg])?;
    let coker = cokernel(&h);
    Ok(Square {
        corner: coker.target().clone(),
        first: coker.after_unchecked(&sum.injections[0]),
        second: coker.after_unchecked(&sum.injections[1]),
    })
}

/// Radical and socle inclusions and the projection onto the top.
#[derive(Clone, Debug)]
pub struct Layers {
    pub radical: Morphism,
    pub socle: Morphism,
    pub top: Morphism,
}

pub fn radical_subspaces(m: &Representation) -> Vec<Subspace> {
    let k = m.field();
    let q = m.algebra().quiver();
    (0..q.vertex_count())
        .map(|v| {
            let mut span: Vec<Vec<u32>> = Vec::new();
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.target == v {
                    span.extend(m.map(ai).column_space().basis().iter().cloned());
                }
            }
            Subspace::from_spanning(k, m.dim_at(v), &span)
        })
        .collect()
}

pub fn socle_subspaces(m: &Representation) -> Vec<Subspace> {
    let k = m.field();
    let q = m.algebra().quiver();
    (0..q.vertex_count())
        .map(|v| {
            let mut s = Subspace::full(k, m.dim_at(v));
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.source == v {
                    s = s.intersection(&m.map(ai).kernel());
                }
            }
            s
        })
        .collect()
}

pub fn radical_socle_top(m: &Representation) -> Layers {
    let rad = radical_subspaces(m);
    Layers {
        radical: submodule(m, &rad).expect("radical is a submodule"),
        socle: submodule(m, &socle_subspaces(m)).expect("socle is a submodule"),
        top: quotient(m, &rad).expect("radical is a submodule"),
    }
}
