//! Counterexample search with candidates evaluated on the rayon pool. The
//! reported hit is the one with the smallest candidate index, so results
//! match the sequential search exactly.

use rayon::prelude::*;

use stabcat_core::balance::{
    apply_projective_injective, evaluate_candidate, generate_candidates, search_report, BalanceReport, SearchMode,
    SearchOptions,
};
use stabcat_core::stable::{StableContext, Subcategory};
use stabcat_core::{Representation, Result};

pub fn parallel_search<S: Subcategory + Sync + ?Sized>(
    sub: &S,
    corpus: &[(String, Representation)],
    options: &SearchOptions,
) -> Result<BalanceReport> {
    let mut notes = Vec::new();
    let (candidates, truncated) = generate_candidates(sub, corpus, options, &mut notes)?;
    let first = candidates
        .par_iter()
        .map(|c| evaluate_candidate(sub, c, options.mode).map(|w| w.map(|w| (c.index, w))))
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    let hit = match first {
        Some(r) => r?,
        None => None,
    };
    Ok(search_report(options.mode, &candidates, hit, options.budget, truncated, notes))
}

/// The parallel counterpart of `check_balance`; in weak mode the
/// projective-injective upgrade is skipped.
pub fn parallel_check_balance(
    ctx: &StableContext,
    corpus: &[(String, Representation)],
    options: &SearchOptions,
) -> Result<BalanceReport> {
    let report = parallel_search(ctx, corpus, options)?;
    match options.mode {
        SearchMode::Balance => apply_projective_injective(ctx, report),
        SearchMode::WeakBalance => Ok(report),
    }
}
