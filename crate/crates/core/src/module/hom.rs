use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::linalg::{Matrix, Subspace};
use crate::rep::{Morphism, Representation};

/// A basis of `Hom(source, target)`, found as the solution space of the
/// intertwining equations in the concatenated row-major coordinates of the
/// vertex maps.
#[derive(Clone, Debug)]
pub struct HomBasis {
    source: Representation,
    target: Representation,
    space: Subspace,
    basis: Vec<Morphism>,
}

impl HomBasis {
    pub fn source(&self) -> &Representation {
        &self.source
    }
    pub fn target(&self) -> &Representation {
        &self.target
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }
    /// The Hom space as a subspace of the ambient coordinate space.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Coefficients of `f` in [`Self::basis`].
    pub fn coordinates(&self, f: &Morphism) -> Option<Vec<u32>> {
        self.space.coordinates(&f.coords())
    }

    pub fn combine(&self, coeffs: &[u32]) -> Morphism {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count");
        let k = self.source.field();
        let mut v = vec![0u32; self.space.ambient_dim()];
        for (c, b) in coeffs.iter().zip(self.space.basis()) {
            if *c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = k.add(*x, k.mul(*c, y));
                }
            }
        }
        Morphism::from_coords(&self.source, &self.target, &v)
    }
}

/// Computes a basis of `Hom(m, n)`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<HomBasis> {
    m.check_same_algebra(n)?;
    let alg = m.algebra();
    let k = m.field();
    let nv = alg.vertex_count();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += m.dim_at(v) * n.dim_at(v);
    }
    let eq_count: usize = alg.quiver().arrows().iter().map(|a| n.dim_at(a.target) * m.dim_at(a.source)).sum();
    let mut sys = Matrix::zeros(k, eq_count, total);
    let mut row = 0;
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (si, sj, ti) = (m.dim_at(i), m.dim_at(j), n.dim_at(i));
        let (ma, na) = (m.map(ai), n.map(ai));
        // (φ_j M_a − N_a φ_i)[r][c] = 0
        for r in 0..n.dim_at(j) {
            for c in 0..si {
                for kk in 0..sj {
                    let e = ma.get(kk, c);
                    if e != 0 {
                        let col = offsets[j] + r * sj + kk;
                        sys.set(row, col, k.add(sys.get(row, col), e));
                    }
                }
                for kk in 0..ti {
                    let e = na.get(r, kk);
                    if e != 0 {
                        let col = offsets[i] + kk * si + c;
                        sys.set(row, col, k.sub(sys.get(row, col), e));
                    }
                }
                row += 1;
            }
        }
    }
    let space = sys.kernel();
    let basis = space.basis().iter().map(|v| Morphism::from_coords(m, n, v)).collect();
    Ok(HomBasis { source: m.clone(), target: n.clone(), space, basis })
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_basis(m, n)?.dim())
}
