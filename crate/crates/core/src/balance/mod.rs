//! Balance and weak balance of stable categories: theorem-level checkers
//! and a certified counterexample search.

mod hereditary;
mod report;
mod search;
mod serre;
mod theorems;

pub use hereditary::{check_hereditary, HereditaryConclusion, HereditaryReport, HypothesisCheck, PerpCheck};
pub use report::{BalanceReport, SearchMode, SearchStats, Verdict, Witness, WITNESS_DECISIONS};
pub use search::{
    apply_projective_injective, check_balance, evaluate_candidate, generate_candidates, projective_injective,
    search_counterexample, search_report, search_stats, Candidate, CandidateKind, SearchOptions,
};
pub use serre::{check_serre_balance, check_serre_prop, serre_torsion, SerreProp};
pub use theorems::{
    check_thm46_cond3, check_thm54_cond5, check_weak_balance_sufficient, Cond3Outcome, Cond3Target, Cond5,
    GeneratorCheck, SummandCheck, WeakBalanceReport,
};
pub use crate::stable::SerreClass;

#[cfg(test)]
mod tests;
