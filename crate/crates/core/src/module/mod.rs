//! The abelian category of finite-dimensional representations.

mod envelope;
mod enumerate;
mod ext;
mod hom;
mod ops;
mod split;

use alloc::vec::Vec;

use crate::linalg::{Field, Matrix};

pub use envelope::{injective_envelope, projective_cover, Envelope};
pub use enumerate::{all_subspaces, enumerate_submodules, SubmoduleLimits};
pub use ext::{ext1, extension_from_cocycle, Ext1, ShortExactSequence};
pub use hom::{hom_basis, hom_dim, HomBasis};
pub use ops::{
    cokernel, direct_sum, direct_sum_morphism, factor_through_epi, factorize, generated_submodule,
    generated_subspaces, hcat, image, image_subspaces, kernel, lift_through_mono, pullback, pushout, quotient,
    radical_socle_top, radical_subspaces, socle_subspaces, submodule, vcat, DirectSum, Factorization, Layers,
    Square,
};
pub use split::{retraction, section, splitness, Splitness};

/// Coefficients `c` with `Σ c_i vectors[i] = target`, if any.
pub(crate) fn solve_in_span(field: Field, ambient: usize, vectors: &[Vec<u32>], target: &[u32]) -> Option<Vec<u32>> {
    if vectors.is_empty() {
        return target.iter().all(|&x| x == 0).then(Vec::new);
    }
    let a = Matrix::from_columns(field, ambient, vectors).expect("vector lengths");
    a.solve_affine(target).expect("target length").map(|s| s.particular)
}
