use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use super::matrix::Matrix;

/// A subspace of `F_p^n` held as a reduced row-echelon basis.
///
/// Two subspaces are equal iff their bases are equal, since the reduced
/// echelon basis is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Self::from_spanning(field, ambient, &Matrix::identity(field, ambient).row_vecs())
    }

    pub fn from_spanning(field: Field, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, vectors).expect("spanning vectors of ambient length");
        let e = m.rref();
        let rank = e.rank();
        let basis = (0..rank).map(|r| e.reduced.row(r).to_vec()).collect();
        Subspace { field, ambient, basis, pivots: e.pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Reduces `v` modulo the subspace; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let k = self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = w[pc];
            if c != 0 {
                for (wi, &ri) in w.iter_mut().zip(row) {
                    *wi = k.sub(*wi, k.mul(c, ri));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&e| e == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.field, self.ambient, &vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        // Solve sum a_i u_i - sum b_j w_j = 0.
        let k = self.field;
        let (n, m) = (self.dim(), other.dim());
        let sys = Matrix::from_fn(k, self.ambient, n + m, |r, c| {
            if c < n {
                self.basis[c][r]
            } else {
                k.neg(other.basis[c - n][r])
            }
        });
        let ker = sys.kernel();
        let vecs: Vec<Vec<u32>> = ker
            .basis()
            .iter()
            .map(|coef| {
                let mut v = vec![0u32; self.ambient];
                for (i, row) in self.basis.iter().enumerate() {
                    for (vj, &rj) in v.iter_mut().zip(row) {
                        *vj = k.add(*vj, k.mul(coef[i], rj));
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(k, self.ambient, &vecs)
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_columns(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.basis).expect("basis lengths")
    }

    /// Indices of the standard basis vectors spanning the canonical complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Matrix of the projection `F_p^n -> F_p^n / self`, using the
    /// canonical complement coordinates.
    pub fn quotient_map(&self) -> Matrix {
        let comp = self.complement_indices();
        let k = self.field;
        let mut q = Matrix::zeros(k, comp.len(), self.ambient);
        for c in 0..self.ambient {
            let image = self.reduce(&unit(self.ambient, c));
            for (i, &cc) in comp.iter().enumerate() {
                q.set(i, c, image[cc]);
            }
        }
        q
    }

    /// Section of [`Self::quotient_map`]: complement vectors as columns.
    pub fn quotient_section(&self) -> Matrix {
        let comp = self.complement_indices();
        Matrix::from_fn(self.field, self.ambient, comp.len(), |r, c| u32::from(comp[c] == r))
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let k = Field::f2();
        let s = Subspace::from_spanning(k, 2, &[vec![1, 0]]);
        assert!(s.contains(&[0, 0]));
        assert!(!s.contains(&[0, 1]));
        let t = Subspace::from_spanning(k, 2, &[vec![1, 1]]);
        assert!(t.contains(&[1, 1]));
        assert!(!t.contains(&[1, 0]));
    }

    #[test]
    fn quotient_map_kills_subspace() {
        let k = Field::new(5).unwrap();
        let s = Subspace::from_spanning(k, 3, &[vec![1, 2, 3]]);
        let q = s.quotient_map();
        assert_eq!(q.shape(), (2, 3));
        assert!(q.apply(&[1, 2, 3]).iter().all(|&x| x == 0));
        assert!(q.mul(&s.quotient_section()).is_identity());
        assert_eq!(q.rank(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let k = Field::new(3).unwrap();
        let a = Subspace::from_spanning(k, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::from_spanning(k, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.intersection(&b);
        assert_eq!(i.basis(), &[vec![0, 1, 0]]);
        assert!(a.sum(&b).is_full());
    }

    #[test]
    fn coordinates_in_basis() {
        let k = Field::new(7).unwrap();
        let s = Subspace::from_spanning(k, 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let c = s.coordinates(&[2, 5, 3]).unwrap();
        let mut v = vec![0u32; 3];
        for (ci, b) in c.iter().zip(s.basis()) {
            for (vj, &bj) in v.iter_mut().zip(b) {
                *vj = k.add(*vj, k.mul(*ci, bj));
            }
        }
        assert_eq!(v, vec![2, 5, 3]);
        assert!(s.coordinates(&[1, 0, 0]).is_none());
    }
}
