use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rep::Morphism;
use crate::stable::{decide, verify, Decision, StableVerdict, Subcategory};

/// Outcome of a balance check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Proved by a theorem whose hypotheses were certified.
    Balanced,
    /// Every check on the supplied corpus passed; not a proof.
    BalancedEvidence,
    /// A certified mono+epi that is not an iso.
    NotBalanced,
    /// A certified strong mono + strong epi that is not an iso.
    NotWeaklyBalanced,
    Undetermined,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Balanced => "balanced",
            Verdict::BalancedEvidence => "balanced-evidence",
            Verdict::NotBalanced => "not_balanced",
            Verdict::NotWeaklyBalanced => "not_weakly_balanced",
            Verdict::Undetermined => "undetermined",
        }
    }
}

/// Which defining property a counterexample must violate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Mono and epi but not iso.
    Balance,
    /// Strong mono and strong epi but not iso.
    WeakBalance,
}

impl SearchMode {
    pub fn name(self) -> &'static str {
        match self {
            SearchMode::Balance => "balance",
            SearchMode::WeakBalance => "weak_balance",
        }
    }

    pub fn failure(self) -> Verdict {
        match self {
            SearchMode::Balance => Verdict::NotBalanced,
            SearchMode::WeakBalance => Verdict::NotWeaklyBalanced,
        }
    }

    fn pattern(self) -> [(Decision, bool); 3] {
        match self {
            SearchMode::Balance => [(Decision::Mono, true), (Decision::Epi, true), (Decision::Iso, false)],
            SearchMode::WeakBalance => {
                [(Decision::StrongMono, true), (Decision::StrongEpi, true), (Decision::Iso, false)]
            }
        }
    }
}

/// The decisions recorded for every witness.
pub const WITNESS_DECISIONS: [Decision; 5] =
    [Decision::Mono, Decision::Epi, Decision::StrongMono, Decision::StrongEpi, Decision::Iso];

/// A morphism with a full set of certified stable verdicts.
#[derive(Clone, Debug)]
pub struct Witness {
    pub morphism: Morphism,
    pub origin: String,
    pub verdicts: Vec<StableVerdict>,
}

impl Witness {
    /// Runs every decision in [`WITNESS_DECISIONS`] and checks each
    /// certificate.
    pub fn certify<S: Subcategory + ?Sized>(sub: &S, morphism: Morphism, origin: String) -> Result<Witness> {
        let mut verdicts = Vec::with_capacity(WITNESS_DECISIONS.len());
        for d in WITNESS_DECISIONS {
            let v = decide(sub, d, &morphism)?;
            if !verify(sub, &morphism, &v)? {
                return Err(Error::RouteDisagreement { op: d.name() });
            }
            verdicts.push(v);
        }
        Ok(Witness { morphism, origin, verdicts })
    }

    pub fn answer(&self, d: Decision) -> Option<bool> {
        self.verdicts.iter().find(|v| v.decision == d).map(|v| v.answer)
    }

    pub fn violates(&self, mode: SearchMode) -> bool {
        mode.pattern().iter().all(|&(d, want)| self.answer(d) == Some(want))
    }

    /// Recomputes every verdict from scratch and checks that the answers and
    /// certificates still agree with the recorded ones.
    pub fn reverify<S: Subcategory + ?Sized>(&self, sub: &S) -> Result<bool> {
        for v in &self.verdicts {
            if !verify(sub, &self.morphism, v)? {
                return Ok(false);
            }
            if decide(sub, v.decision, &self.morphism)?.answer != v.answer {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Counts of the candidates a search evaluated, by origin.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub evaluated: usize,
    pub hom_basis: usize,
    pub projections: usize,
    pub extensions: usize,
    pub combinations: usize,
    pub budget: usize,
    /// Candidate generation stopped at the budget.
    pub budget_exhausted: bool,
}

#[derive(Clone, Debug)]
pub struct BalanceReport {
    pub verdict: Verdict,
    pub route: &'static str,
    pub witness: Option<Witness>,
    pub stats: Option<SearchStats>,
    pub log: Vec<String>,
}

impl BalanceReport {
    pub(crate) fn new(verdict: Verdict, route: &'static str) -> Self {
        BalanceReport { verdict, route, witness: None, stats: None, log: Vec::new() }
    }
}
