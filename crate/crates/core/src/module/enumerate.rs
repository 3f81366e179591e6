use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Field, Subspace};
use crate::rep::{Morphism, Representation};

use super::ops::submodule;

/// Bounds for exhaustive submodule enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubmoduleLimits {
    pub max_total_dim: usize,
    /// Enumerate over fields other than F_2 (the count grows like p^(d²/4)).
    pub allow_any_field: bool,
}

impl Default for SubmoduleLimits {
    fn default() -> Self {
        SubmoduleLimits { max_total_dim: 6, allow_any_field: false }
    }
}

impl SubmoduleLimits {
    pub fn check(&self, m: &Representation) -> Result<()> {
        if m.total_dim() > self.max_total_dim {
            return Err(Error::BudgetExceeded {
                what: "submodule enumeration total dimension".to_string(),
                limit: self.max_total_dim,
            });
        }
        if m.field().prime() != 2 && !self.allow_any_field {
            return Err(Error::BudgetExceeded { what: "submodule enumeration field size".to_string(), limit: 2 });
        }
        Ok(())
    }
}

/// Every subspace of `F_p^n`, enumerated by pivot set and then by the free
/// entries of the reduced echelon basis.
pub fn all_subspaces(field: Field, n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask & (1 << c) != 0).collect();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let p = field.prime() as usize;
        let count = p.pow(free.len() as u32);
        for mut code in 0..count {
            let mut rows: Vec<Vec<u32>> = pivots
                .iter()
                .map(|&pc| {
                    let mut row = vec![0u32; n];
                    row[pc] = 1;
                    row
                })
                .collect();
            for &(r, c) in &free {
                rows[r][c] = (code % p) as u32;
                code /= p;
            }
            out.push(Subspace::from_spanning(field, n, &rows));
        }
    }
    out
}

/// All submodules of `m`, as inclusions, in a deterministic order.
pub fn enumerate_submodules(m: &Representation, limits: &SubmoduleLimits) -> Result<Vec<Morphism>> {
    limits.check(m)?;
    let k = m.field();
    let nv = m.dims().len();
    let candidates: Vec<Vec<Subspace>> = (0..nv).map(|v| all_subspaces(k, m.dim_at(v))).collect();
    let mut chosen: Vec<Subspace> = Vec::with_capacity(nv);
    let mut out = Vec::new();
    descend(m, &candidates, &mut chosen, &mut out);
    Ok(out)
}

fn descend(m: &Representation, candidates: &[Vec<Subspace>], chosen: &mut Vec<Subspace>, out: &mut Vec<Morphism>) {
    let v = chosen.len();
    if v == candidates.len() {
        out.push(submodule(m, chosen).expect("stability checked during descent"));
        return;
    }
    let arrows = m.algebra().quiver().arrows();
    for s in &candidates[v] {
        chosen.push(s.clone());
        let ok = arrows.iter().enumerate().all(|(ai, a)| {
            let (i, j) = (a.source, a.target);
            if i > v || j > v || (i != v && j != v) {
                return true;
            }
            chosen[i].basis().iter().all(|b| chosen[j].contains(&m.map(ai).apply(b)))
        });
        if ok {
            descend(m, candidates, chosen, out);
        }
        chosen.pop();
    }
}
