use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::module::{enumerate_submodules, ext1, extension_from_cocycle, hom_basis, injective_envelope, quotient,
    image_subspaces, SubmoduleLimits};
use crate::rep::{Morphism, Representation};
use crate::stable::{is_in_add, is_stable_epi, is_stable_iso, is_stable_mono, is_stable_strong_epi,
    is_stable_strong_mono, StableContext, Subcategory};

use super::report::{BalanceReport, SearchMode, SearchStats, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CandidateKind {
    HomBasis,
    CanonicalProjection,
    Extension,
    Combination,
}

impl CandidateKind {
    pub fn name(self) -> &'static str {
        match self {
            CandidateKind::HomBasis => "hom-basis",
            CandidateKind::CanonicalProjection => "canonical-projection",
            CandidateKind::Extension => "extension",
            CandidateKind::Combination => "combination",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub index: usize,
    pub kind: CandidateKind,
    pub morphism: Morphism,
    pub origin: String,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Maximum number of candidates generated and evaluated.
    pub budget: usize,
    pub seed: u64,
    /// Random coefficient combinations per pair with `dim Hom ≥ 2`.
    pub combinations: usize,
    pub limits: SubmoduleLimits,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: SearchMode::Balance,
            budget: 10_000,
            seed: 0,
            combinations: 2,
            limits: SubmoduleLimits::default(),
        }
    }
}

struct Sink {
    out: Vec<Candidate>,
    budget: usize,
    truncated: bool,
}

impl Sink {
    fn push(&mut self, kind: CandidateKind, morphism: Morphism, origin: String) -> bool {
        if self.out.len() >= self.budget {
            self.truncated = true;
            return false;
        }
        let index = self.out.len();
        self.out.push(Candidate { index, kind, morphism, origin });
        true
    }

    fn full(&self) -> bool {
        self.truncated
    }
}

/// Candidate morphisms in evaluation order: hom-basis elements between
/// corpus pairs, canonical projections `X -> X/S` with `S` in the
/// subcategory, extension epis from `Ext¹` classes, then seeded random
/// combinations of hom bases. Stops at the budget; the flag reports
/// whether it was hit. Corpus entries the submodule enumeration refuses
/// are skipped and noted in `notes`.
pub fn generate_candidates<S: Subcategory + ?Sized>(
    sub: &S,
    corpus: &[(String, Representation)],
    options: &SearchOptions,
    notes: &mut Vec<String>,
) -> Result<(Vec<Candidate>, bool)> {
    let mut sink = Sink { out: Vec::new(), budget: options.budget, truncated: false };
    let mut bases = Vec::new();
    'pairs: for (xn, x) in corpus {
        for (yn, y) in corpus {
            let h = hom_basis(x, y)?;
            for (i, b) in h.basis().iter().enumerate() {
                if !sink.push(CandidateKind::HomBasis, b.clone(), format!("hom basis element {i} of Hom({xn}, {yn})")) {
                    break 'pairs;
                }
            }
            if h.dim() >= 2 {
                bases.push((xn, yn, h));
            }
        }
    }

    if !sink.full() {
        'projections: for (xn, x) in corpus {
            let subs = match enumerate_submodules(x, &options.limits) {
                Ok(s) => s,
                Err(Error::BudgetExceeded { what, limit }) => {
                    notes.push(format!("skipped submodules of {xn}: {what} over {limit}"));
                    continue;
                }
                Err(e) => return Err(e),
            };
            for (si, s) in subs.iter().enumerate() {
                let sm = s.source();
                if sm.is_zero() || sm.total_dim() == x.total_dim() || !is_in_add(sub, sm)?.answer {
                    continue;
                }
                let q = quotient(x, &image_subspaces(s))?;
                if !sink.push(CandidateKind::CanonicalProjection, q, format!("projection of {xn} onto its quotient by submodule {si}")) {
                    break 'projections;
                }
            }
        }
    }

    if !sink.full() {
        let targets = sub.ext_targets();
        'extensions: for (yn, y) in corpus {
            for (ti, t) in targets.iter().enumerate() {
                let e = ext1(y, t)?;
                for (ci, c) in e.classes.iter().enumerate() {
                    let ses = extension_from_cocycle(&e, c)?;
                    let origin = format!("extension epi of class {ci} in Ext1({yn}, T{ti})");
                    if !sink.push(CandidateKind::Extension, ses.epi, origin) {
                        break 'extensions;
                    }
                }
            }
        }
    }

    if !sink.full() && options.combinations > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        'combos: for (xn, yn, h) in &bases {
            let p = h.source().field().prime();
            for r in 0..options.combinations {
                let coeffs: Vec<u32> = (0..h.dim()).map(|_| rng.next_u32() % p).collect();
                let m = h.combine(&coeffs);
                if !sink.push(CandidateKind::Combination, m, format!("random combination {r} in Hom({xn}, {yn})")) {
                    break 'combos;
                }
            }
        }
    }
    Ok((sink.out, sink.truncated))
}

/// Tests one candidate cheaply, short-circuiting on the first failed
/// property, and certifies it fully on a hit.
pub fn evaluate_candidate<S: Subcategory + ?Sized>(
    sub: &S,
    candidate: &Candidate,
    mode: SearchMode,
) -> Result<Option<Witness>> {
    let f = &candidate.morphism;
    let hit = match mode {
        SearchMode::Balance => {
            is_stable_mono(sub, f)?.answer && is_stable_epi(sub, f)?.answer && !is_stable_iso(sub, f)?.answer
        }
        SearchMode::WeakBalance => {
            is_stable_strong_mono(sub, f)?.answer
                && is_stable_strong_epi(sub, f)?.answer
                && !is_stable_iso(sub, f)?.answer
        }
    };
    if !hit {
        return Ok(None);
    }
    let w = Witness::certify(sub, f.clone(), candidate.origin.clone())?;
    if !w.violates(mode) {
        return Err(Error::RouteDisagreement { op: "counterexample certification" });
    }
    Ok(Some(w))
}

/// Statistics for the first `evaluated` candidates.
pub fn search_stats(candidates: &[Candidate], evaluated: usize, budget: usize, truncated: bool) -> SearchStats {
    let mut s = SearchStats { evaluated, budget, budget_exhausted: truncated, ..SearchStats::default() };
    for c in &candidates[..evaluated] {
        match c.kind {
            CandidateKind::HomBasis => s.hom_basis += 1,
            CandidateKind::CanonicalProjection => s.projections += 1,
            CandidateKind::Extension => s.extensions += 1,
            CandidateKind::Combination => s.combinations += 1,
        }
    }
    s
}

/// Assembles the report for a search whose first hit (by candidate index)
/// is `hit`.
pub fn search_report(
    mode: SearchMode,
    candidates: &[Candidate],
    hit: Option<(usize, Witness)>,
    budget: usize,
    truncated: bool,
    notes: Vec<String>,
) -> BalanceReport {
    let mut log = notes;
    match hit {
        Some((index, w)) => {
            let mut r = BalanceReport::new(mode.failure(), "certified counterexample from the candidate search");
            log.push(format!("candidate {index} ({}) is a counterexample", candidates[index].kind.name()));
            r.stats = Some(search_stats(candidates, index + 1, budget, false));
            r.witness = Some(w);
            r.log = log;
            r
        }
        None => {
            let mut r = BalanceReport::new(Verdict::Undetermined, "exhausted candidate search");
            let stats = search_stats(candidates, candidates.len(), budget, truncated);
            log.push(format!("no counterexample among {} candidates", stats.evaluated));
            r.stats = Some(stats);
            r.log = log;
            r
        }
    }
}

/// Looks for a morphism violating the chosen balance property among
/// candidates built from the corpus. A hit is fully certified; otherwise
/// the verdict is undetermined.
pub fn search_counterexample<S: Subcategory + ?Sized>(
    sub: &S,
    corpus: &[(String, Representation)],
    options: &SearchOptions,
) -> Result<BalanceReport> {
    let mut notes = Vec::new();
    let (candidates, truncated) = generate_candidates(sub, corpus, options, &mut notes)?;
    let mut hit = None;
    for c in &candidates {
        if let Some(w) = evaluate_candidate(sub, c, options.mode)? {
            hit = Some((c.index, w));
            break;
        }
    }
    Ok(search_report(options.mode, &candidates, hit, options.budget, truncated, notes))
}

/// Whether each generator is both projective and injective.
pub fn projective_injective(ctx: &StableContext) -> Vec<bool> {
    ctx.generators()
        .iter()
        .zip(ctx.projectivity())
        .map(|(g, &p)| p && injective_envelope(g).map.is_iso())
        .collect()
}

/// Upgrades an undetermined search to `Balanced` when every generator is
/// projective-injective; a counterexample in that situation is reported as
/// a route disagreement.
pub fn apply_projective_injective(ctx: &StableContext, report: BalanceReport) -> Result<BalanceReport> {
    if !projective_injective(ctx).iter().all(|&b| b) {
        return Ok(report);
    }
    match report.verdict {
        Verdict::NotBalanced => Err(Error::RouteDisagreement { op: "balance" }),
        _ => {
            let mut r = report;
            r.verdict = Verdict::Balanced;
            r.route = "every object of T is projective-injective";
            r.log.push("all generators are projective-injective".into());
            Ok(r)
        }
    }
}

/// Balance check for `add(T)`: the candidate search, upgraded to a proof
/// when the generators are projective-injective.
pub fn check_balance(
    ctx: &StableContext,
    corpus: &[(String, Representation)],
    options: &SearchOptions,
) -> Result<BalanceReport> {
    let opts = SearchOptions { mode: SearchMode::Balance, ..options.clone() };
    let report = search_counterexample(ctx, corpus, &opts)?;
    apply_projective_injective(ctx, report)
}
