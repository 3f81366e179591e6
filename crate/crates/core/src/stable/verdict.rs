use alloc::boxed::Box;

use crate::module::Square;
use crate::rep::Morphism;

/// The decision procedures of the stable category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    StableZero,
    InAdd,
    Mono,
    Epi,
    StrongMono,
    StrongEpi,
    Iso,
}

impl Decision {
    pub const ALL: [Decision; 7] = [
        Decision::StableZero,
        Decision::InAdd,
        Decision::Mono,
        Decision::Epi,
        Decision::StrongMono,
        Decision::StrongEpi,
        Decision::Iso,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Decision::StableZero => "is-stable-zero",
            Decision::InAdd => "in-add",
            Decision::Mono => "is-stable-mono",
            Decision::Epi => "is-stable-epi",
            Decision::StrongMono => "is-strong-mono",
            Decision::StrongEpi => "is-strong-epi",
            Decision::Iso => "is-iso",
        }
    }

    pub fn from_name(s: &str) -> Option<Decision> {
        Decision::ALL.into_iter().find(|d| d.name() == s)
    }
}

/// Which side of a two-sided inverse could not be found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Evidence backing a [`StableVerdict`]. Positive evidence is a set of
/// explicit morphisms that recompose exactly; negative evidence records the
/// object whose recomputation refutes the claim.
#[derive(Clone, Debug)]
pub enum Certificate {
    /// `f = second ∘ first`, where `first.target()` lies in `add(T)`.
    Factorization { first: Morphism, second: Morphism },
    /// `f` is outside the ideal, which has the recorded dimension.
    NoFactorization { hom_dim: usize, ideal_dim: usize },
    /// `precover ∘ section = id`.
    Section { precover: Morphism, section: Morphism },
    /// The canonical precover has no section.
    NoSection { precover: Morphism },
    /// A pullback against the precover of the target or a pushout against
    /// the preenvelope of the source, and the verdict on the relevant leg or
    /// corner.
    Square { approximation: Morphism, square: Square, inner: Box<StableVerdict> },
    /// `left ∘ f ≡ id` and `f ∘ right ≡ id` modulo the ideal.
    Inverse { left: Morphism, right: Morphism, left_defect: Box<StableVerdict>, right_defect: Box<StableVerdict> },
    NoInverse { side: Side },
}

#[derive(Clone, Debug)]
pub struct StableVerdict {
    pub decision: Decision,
    pub answer: bool,
    pub route: &'static str,
    /// A second, independent route that was run and agreed.
    pub cross_check: Option<&'static str>,
    pub certificate: Certificate,
}
