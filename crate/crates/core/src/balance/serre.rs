use alloc::format;
use alloc::string::String;

use crate::error::Result;
use crate::module::{hom_basis, kernel, cokernel, quotient, section, ShortExactSequence};
use crate::rep::{Morphism, Representation};
use crate::stable::{is_stable_epi, is_stable_mono, SerreClass};

use super::report::{BalanceReport, SearchMode, Verdict, Witness};

/// The canonical sequence `0 -> t(x) -> x -> x/t(x) -> 0`.
pub fn serre_torsion(x: &Representation, s: &SerreClass) -> Result<ShortExactSequence> {
    let inclusion = s.torsion(x)?;
    let projection = quotient(x, &s.torsion_subspaces(x))?;
    ShortExactSequence::new(inclusion, projection)
}

/// Both sides of `f mono ⇔ ker f ∈ T` and `f epi ⇔ coker f ∈ T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SerreProp {
    pub mono: bool,
    pub kernel_supported: bool,
    pub epi: bool,
    pub cokernel_supported: bool,
}

impl SerreProp {
    pub fn holds(&self) -> bool {
        self.mono == self.kernel_supported && self.epi == self.cokernel_supported
    }
}

pub fn check_serre_prop(f: &Morphism, s: &SerreClass) -> Result<SerreProp> {
    Ok(SerreProp {
        mono: is_stable_mono(s, f)?.answer,
        kernel_supported: s.contains(kernel(f).source()),
        epi: is_stable_epi(s, f)?.answer,
        cokernel_supported: s.contains(cokernel(f).target()),
    })
}

/// Checks that every test module decomposes as its torsion part plus a
/// torsion-free part with no maps back. A failure yields a certified
/// mono+epi that is not an iso.
pub fn check_serre_balance(s: &SerreClass, test_modules: &[(String, Representation)]) -> Result<BalanceReport> {
    let mut log = alloc::vec::Vec::new();
    let mut inconclusive = false;
    for (name, x) in test_modules {
        let seq = serre_torsion(x, s)?;
        if section(&seq.epi)?.is_none() {
            let origin = format!("canonical projection {name} -> {name}/t({name})");
            let w = Witness::certify(s, seq.epi.clone(), origin)?;
            if w.violates(SearchMode::Balance) {
                let mut r = BalanceReport::new(Verdict::NotBalanced, "non-split torsion sequence of a Serre class");
                log.push(format!("{name}: torsion sequence does not split"));
                r.witness = Some(w);
                r.log = log;
                return Ok(r);
            }
            log.push(format!("{name}: torsion sequence does not split but its projection is not a witness"));
            inconclusive = true;
            continue;
        }
        let back = hom_basis(seq.epi.target(), seq.mono.source())?;
        if let Some(h) = back.basis().first() {
            let origin = format!("kernel of a nonzero map {name}/t({name}) -> t({name})");
            let w = Witness::certify(s, kernel(h), origin)?;
            if w.violates(SearchMode::Balance) {
                let mut r =
                    BalanceReport::new(Verdict::NotBalanced, "kernel of a map from the torsion-free part to the torsion part");
                log.push(format!("{name}: Hom({name}/t({name}), t({name})) has dimension {}", back.dim()));
                r.witness = Some(w);
                r.log = log;
                return Ok(r);
            }
            log.push(format!("{name}: maps back into the torsion part exist but give no witness"));
            inconclusive = true;
            continue;
        }
        log.push(format!("{name}: splits as t({name}) plus a torsion-free part"));
    }
    let mut r = if inconclusive {
        BalanceReport::new(Verdict::Undetermined, "torsion sequences on the corpus")
    } else {
        BalanceReport::new(Verdict::BalancedEvidence, "every torsion sequence on the corpus splits with no maps back")
    };
    r.log = log;
    Ok(r)
}
