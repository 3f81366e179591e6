use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::module::{enumerate_submodules, hom_dim, projective_cover, section, SubmoduleLimits};
use crate::rep::{Morphism, Representation};
use crate::stable::StableContext;

/// Submodules of one generator and the first that is not projective.
#[derive(Clone, Debug)]
pub struct HypothesisCheck {
    pub generator: usize,
    pub submodules: usize,
    pub non_projective: Option<Morphism>,
}

/// Closure of the left perpendicular class `{X : Hom(X, T) = 0}` at one
/// test module.
#[derive(Clone, Debug)]
pub struct PerpCheck {
    pub module: String,
    pub in_perp: bool,
    pub submodules: usize,
    /// Inclusion of a submodule with a nonzero map into `T`.
    pub escape: Option<Morphism>,
}

#[derive(Clone, Debug)]
pub enum HereditaryConclusion {
    /// Some submodule of a generator is not projective.
    HypothesisFailed { generator: usize },
    /// A perpendicular module has a submodule that maps nonzero into `T`.
    NotBalanced { module: String, submodule: Morphism },
    /// Closure held on every test module.
    ClosureHoldsOnCorpus,
}

#[derive(Clone, Debug)]
pub struct HereditaryReport {
    pub hypothesis: Vec<HypothesisCheck>,
    pub closure: Vec<PerpCheck>,
    pub conclusion: HereditaryConclusion,
}

fn is_projective(m: &Representation) -> Result<bool> {
    Ok(section(&projective_cover(m).map)?.is_some())
}

fn in_left_perp(ctx: &StableContext, x: &Representation) -> Result<bool> {
    for t in ctx.generators() {
        if hom_dim(x, t)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Audits that submodules of the generators are projective, then checks
/// that `{X : Hom(X, T) = 0}` is closed under submodules on the test
/// modules. Under the audited hypothesis the stable category is balanced
/// exactly when that closure holds.
pub fn check_hereditary(
    ctx: &StableContext,
    test_modules: &[(String, Representation)],
    limits: &SubmoduleLimits,
) -> Result<HereditaryReport> {
    let mut hypothesis = Vec::new();
    let mut failed_generator = None;
    for (generator, t) in ctx.generators().iter().enumerate() {
        let subs = enumerate_submodules(t, limits)?;
        let mut non_projective = None;
        for s in &subs {
            if !is_projective(s.source())? {
                non_projective = Some(s.clone());
                break;
            }
        }
        if non_projective.is_some() && failed_generator.is_none() {
            failed_generator = Some(generator);
        }
        hypothesis.push(HypothesisCheck { generator, submodules: subs.len(), non_projective });
    }

    let mut closure = Vec::new();
    let mut failure = None;
    for (name, x) in test_modules {
        if !in_left_perp(ctx, x)? {
            closure.push(PerpCheck { module: name.clone(), in_perp: false, submodules: 0, escape: None });
            continue;
        }
        let subs = enumerate_submodules(x, limits)?;
        let mut escape = None;
        for s in &subs {
            if !in_left_perp(ctx, s.source())? {
                escape = Some(s.clone());
                break;
            }
        }
        if let (Some(e), None) = (&escape, &failure) {
            failure = Some((name.clone(), e.clone()));
        }
        closure.push(PerpCheck { module: name.clone(), in_perp: true, submodules: subs.len(), escape });
    }

    let conclusion = match (failed_generator, failure) {
        (Some(generator), _) => HereditaryConclusion::HypothesisFailed { generator },
        (None, Some((module, submodule))) => HereditaryConclusion::NotBalanced { module, submodule },
        (None, None) => HereditaryConclusion::ClosureHoldsOnCorpus,
    };
    Ok(HereditaryReport { hypothesis, closure, conclusion })
}
