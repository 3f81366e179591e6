use alloc::vec::Vec;

use crate::linalg::Matrix;
use crate::rep::{Morphism, Representation};
use crate::standard::{from_projective, to_injective};

use super::ops::{hcat, radical_subspaces, socle_subspaces, vcat};

/// An injective envelope `m -> E` or projective cover `P -> m`, with the
/// vertex of each indecomposable summand in order.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub object: Representation,
    pub map: Morphism,
    pub summands: Vec<usize>,
}

/// `m ↪ ⊕ I(v)^{s_v}` where `s_v` is the multiplicity of the simple at `v`
/// in the socle of `m`. The functionals are chosen dual to the echelon basis
/// of the socle, so the map is injective on the socle and hence a mono.
pub fn injective_envelope(m: &Representation) -> Envelope {
    let alg = m.algebra();
    let k = m.field();
    let mut parts = Vec::new();
    let mut summands = Vec::new();
    for (v, soc) in socle_subspaces(m).iter().enumerate() {
        if soc.is_zero() {
            continue;
        }
        let s = soc.basis_columns();
        let dual = s
            .transpose()
            .solve_matrix(&Matrix::identity(k, soc.dim()))
            .expect("shapes agree")
            .expect("basis vectors are independent");
        for i in 0..soc.dim() {
            parts.push(to_injective(alg, v, m, &dual.column(i)).expect("valid functional"));
            summands.push(v);
        }
    }
    let (sum, map) = vcat(m, &parts).expect("common source");
    assert!(map.is_mono(), "envelope map must be injective");
    Envelope { object: sum.object, map, summands }
}

/// `⊕ P(v)^{t_v} ↠ m`, lifting the canonical complement basis of the radical.
pub fn projective_cover(m: &Representation) -> Envelope {
    let alg = m.algebra();
    let mut parts = Vec::new();
    let mut summands = Vec::new();
    for (v, rad) in radical_subspaces(m).iter().enumerate() {
        let sec = rad.quotient_section();
        for c in 0..sec.cols() {
            parts.push(from_projective(alg, v, m, &sec.column(c)).expect("valid element"));
            summands.push(v);
        }
    }
    let (sum, map) = hcat(m, &parts).expect("common target");
    assert!(map.is_epi(), "cover map must be surjective");
    Envelope { object: sum.object, map, summands }
}
