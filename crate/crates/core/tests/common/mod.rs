#![allow(dead_code)]

pub mod oracle;

use std::sync::Arc;

use stabcat_core::module::direct_sum;
use stabcat_core::{Field, Matrix, PathAlgebra, Quiver, Representation};

/// Every matrix over `F_p` of the given shape, row-major counting order.
pub fn all_matrices(field: Field, rows: usize, cols: usize) -> Vec<Matrix> {
    let p = field.prime() as usize;
    let n = rows * cols;
    let count = p.pow(n as u32);
    (0..count)
        .map(|mut code| {
            Matrix::from_fn(field, rows, cols, |_, _| {
                let e = (code % p) as u32;
                code /= p;
                e
            })
        })
        .collect()
}

/// Every representation of `1 -> 2` over `F_2` with dimension vector at
/// most `(d1, d2)`.
pub fn a2_corpus(alg: &Arc<PathAlgebra>, d1: usize, d2: usize) -> Vec<(String, Representation)> {
    let mut out = Vec::new();
    for i in 0..=d1 {
        for j in 0..=d2 {
            for (k, m) in all_matrices(alg.field(), j, i).into_iter().enumerate() {
                let r = Representation::new(alg.clone(), vec![i, j], vec![m]).unwrap();
                out.push((format!("M({i},{j})#{k}"), r));
            }
        }
    }
    out
}

/// Every representation of the two-vertex quiver without arrows, up to the
/// given dimensions.
pub fn discrete_corpus(alg: &Arc<PathAlgebra>, d: usize) -> Vec<(String, Representation)> {
    let mut out = Vec::new();
    for i in 0..=d {
        for j in 0..=d {
            out.push((format!("D({i},{j})"), Representation::new(alg.clone(), vec![i, j], vec![]).unwrap()));
        }
    }
    out
}

/// The given modules plus every pairwise direct sum of total dimension at
/// most `max_dim`.
pub fn with_pair_sums(
    alg: &Arc<PathAlgebra>,
    modules: &[(String, Representation)],
    max_dim: usize,
) -> Vec<(String, Representation)> {
    let mut out = modules.to_vec();
    for (i, (a, x)) in modules.iter().enumerate() {
        for (b, y) in &modules[i..] {
            if x.total_dim() + y.total_dim() <= max_dim && !x.is_zero() && !y.is_zero() {
                out.push((format!("{a}+{b}"), direct_sum(alg, &[x.clone(), y.clone()]).unwrap().object));
            }
        }
    }
    out
}

pub fn linear(n: usize, field: Field) -> Arc<PathAlgebra> {
    Arc::new(PathAlgebra::new(Quiver::linear(n), &[], field).unwrap())
}

pub fn discrete(field: Field) -> Arc<PathAlgebra> {
    let q = Quiver::from_strs(&["1", "2"], &[]).unwrap();
    Arc::new(PathAlgebra::new(q, &[], field).unwrap())
}
