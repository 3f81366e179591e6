//! The stable category `A/<T>` and its decision procedures.

mod decide;
mod subcategory;
mod verdict;

pub use decide::{
    approximation, decide, epi_representative, ideal_basis, is_in_add, is_stable_epi, is_stable_iso, is_stable_mono,
    is_stable_strong_epi, is_stable_strong_mono, is_stable_zero, kernel_image_splits, loop_object,
    preenvelope_coincides_on_kernel, pullback_leg_vanishes, stable_hom_dim, strong_mono_representative,
    suspension_object, verify, ApproximationSide,
};
pub use subcategory::{SerreClass, StableContext, Subcategory};
pub use verdict::{Certificate, Decision, Side, StableVerdict};

#[cfg(test)]
mod tests;
