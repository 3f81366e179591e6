use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::catalog::builtin;
use crate::error::Error;
use crate::linalg::Field;
use crate::module::{direct_sum, hom_basis, SubmoduleLimits};
use crate::quiver::{PathAlgebra, Quiver};
use crate::rep::{Morphism, Representation};
use crate::standard::{injective, projective, simple};
use crate::stable::{Decision, StableContext};

fn named(ms: &[(&str, Representation)]) -> Vec<(String, Representation)> {
    ms.iter().map(|(n, m)| (n.to_string(), m.clone())).collect()
}

fn a2(k: Field) -> Arc<PathAlgebra> {
    Arc::new(PathAlgebra::new(Quiver::linear(2), &[], k).unwrap())
}

#[test]
fn serre_torsion_is_idempotent() {
    let alg = a2(Field::f2());
    let s = SerreClass::new(&alg, &[1]).unwrap();
    let seq = serre_torsion(&projective(&alg, 0), &s).unwrap();
    assert_eq!(seq.mono.source(), &simple(&alg, 1));
    let again = serre_torsion(seq.epi.target(), &s).unwrap();
    assert!(again.mono.source().is_zero());
}

#[test]
fn serre_prop_on_projection() {
    let alg = a2(Field::f2());
    let s = SerreClass::new(&alg, &[1]).unwrap();
    let f = hom_basis(&projective(&alg, 0), &simple(&alg, 0)).unwrap().basis()[0].clone();
    let r = check_serre_prop(&f, &s).unwrap();
    assert!(r.mono && r.kernel_supported && r.epi && r.cokernel_supported);
    let z = Morphism::zero(&simple(&alg, 0), &projective(&alg, 0));
    let r = check_serre_prop(&z, &s).unwrap();
    assert!(r.holds() && !r.mono);
}

#[test]
fn serre_balance_examples() {
    let alg = a2(Field::f2());
    let s = SerreClass::new(&alg, &[1]).unwrap();
    let r = check_serre_balance(&s, &named(&[("P1", projective(&alg, 0))])).unwrap();
    assert_eq!(r.verdict, Verdict::NotBalanced);
    let w = r.witness.unwrap();
    assert_eq!(w.morphism.target(), &simple(&alg, 0));
    assert!(w.reverify(&s).unwrap());

    let all = SerreClass::new(&alg, &[0, 1]).unwrap();
    let corpus = named(&[("P1", projective(&alg, 0)), ("S1", simple(&alg, 0)), ("S2", simple(&alg, 1))]);
    assert_eq!(check_serre_balance(&all, &corpus).unwrap().verdict, Verdict::BalancedEvidence);

    let q = Quiver::from_strs(&["1", "2"], &[]).unwrap();
    let disc = Arc::new(PathAlgebra::new(q, &[], Field::f2()).unwrap());
    let s2 = SerreClass::new(&disc, &[1]).unwrap();
    let both = direct_sum(&disc, &[simple(&disc, 0), simple(&disc, 1)]).unwrap().object;
    let corpus = named(&[("S1", simple(&disc, 0)), ("S2", simple(&disc, 1)), ("S1+S2", both)]);
    let r = check_serre_balance(&s2, &corpus).unwrap();
    assert_eq!(r.verdict, Verdict::BalancedEvidence);
    let opts = SearchOptions::default();
    assert_eq!(search_counterexample(&s2, &corpus, &opts).unwrap().verdict, Verdict::Undetermined);
}

#[test]
fn six_vertex_weak_balance_and_witness() {
    let sc = builtin("six_vertex", Field::f2()).unwrap();
    let ctx = sc.context("T").unwrap();
    let r = check_weak_balance_sufficient(&ctx).unwrap();
    assert_eq!(r.weakly_balanced, Some(true));
    for g in &r.generators {
        assert!(g.passes());
        let s = &g.summands[0];
        assert_eq!(s.envelope_projective, [0, 1, 2, 5].contains(&s.vertex), "vertex {}", s.vertex);
    }
    let corpus: Vec<_> = sc.modules.iter().filter(|(n, _)| n != "N").cloned().collect();
    let rep = search_counterexample(&ctx, &corpus, &SearchOptions::default()).unwrap();
    assert_eq!(rep.verdict, Verdict::NotBalanced);
    let w = rep.witness.unwrap();
    assert!(w.reverify(&ctx).unwrap());
    assert_eq!(w.answer(Decision::StrongMono), Some(true));
    assert_eq!(w.answer(Decision::StrongEpi), Some(false));
    assert_eq!(w.morphism.source(), sc.module("E").unwrap());
    assert_eq!(w.morphism.target(), sc.module("Q").unwrap());

    let weak = SearchOptions { mode: SearchMode::WeakBalance, ..SearchOptions::default() };
    assert_eq!(search_counterexample(&ctx, &corpus, &weak).unwrap().verdict, Verdict::Undetermined);
}

#[test]
fn six_vertex_condition_three_is_exhausted() {
    let sc = builtin("six_vertex", Field::f2()).unwrap();
    let ctx = sc.context("T").unwrap();
    let i = sc.morphism("i").unwrap();
    match check_thm46_cond3(&ctx, i, 1000).unwrap() {
        Cond3Outcome::Exhausted { preenvelope_checked, .. } => assert!(preenvelope_checked),
        other => panic!("{other:?}"),
    }
}

#[test]
fn condition_three_witness_for_radical_inclusion() {
    let k = Field::f2();
    let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
    let alg = Arc::new(PathAlgebra::new(q, &[], k).unwrap());
    let (p1, p2) = (projective(&alg, 0), projective(&alg, 1));
    let ctx = StableContext::new(&alg, vec![p1.clone(), p2.clone()]).unwrap();
    let mu = hom_basis(&p2, &p1).unwrap().basis()[0].clone();
    assert!(matches!(check_thm46_cond3(&ctx, &mu, 100).unwrap(), Cond3Outcome::Witness { .. }));

    let only_p1 = StableContext::new(&alg, vec![p1.clone()]).unwrap();
    let split = direct_sum(&alg, &[p1.clone(), simple(&alg, 1)]).unwrap().injections[0].clone();
    assert!(matches!(check_thm46_cond3(&only_p1, &split, 100), Err(Error::NotApplicable { .. })));
    assert_eq!(check_thm46_cond3(&only_p1, &mu, 10).unwrap_err(), Error::SourceNotInSubcategory);
}

#[test]
fn condition_five_examples() {
    let alg = a2(Field::f2());
    let (p1, s2) = (projective(&alg, 0), simple(&alg, 1));
    let ctx = StableContext::new(&alg, vec![s2.clone()]).unwrap();
    let j = hom_basis(&s2, &p1).unwrap().basis()[0].clone();
    assert!(!check_thm54_cond5(&ctx, &j).unwrap().holds);
    assert!(check_thm54_cond5(&ctx, &Morphism::identity(&s2)).unwrap().holds);
    let f = hom_basis(&p1, &simple(&alg, 0)).unwrap().basis()[0].clone();
    assert_eq!(check_thm54_cond5(&ctx, &f).unwrap_err(), Error::NotMono);

    // The same subcategory fails the restriction test and is not weakly balanced.
    let r = check_weak_balance_sufficient(&ctx).unwrap();
    assert_eq!(r.weakly_balanced, Some(false));
    assert!(r.witness.unwrap().reverify(&ctx).unwrap());
}

#[test]
fn projective_injective_generators_give_balance() {
    for k in [Field::f2(), Field::default()] {
        let sc = builtin("a3", k).unwrap();
        let ctx = sc.context("T").unwrap();
        assert_eq!(projective_injective(&ctx), vec![true]);
        let r = search_counterexample(&ctx, &sc.modules, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Undetermined);
        let b = check_balance(&ctx, &sc.modules, &SearchOptions::default()).unwrap();
        assert_eq!(b.verdict, Verdict::Balanced);
    }
}

#[test]
fn search_is_deterministic_and_respects_budget() {
    let sc = builtin("a3", Field::default()).unwrap();
    let ctx = sc.context("T").unwrap();
    let opts = SearchOptions { budget: 5, seed: 7, ..SearchOptions::default() };
    let a = search_counterexample(&ctx, &sc.modules, &opts).unwrap();
    let b = search_counterexample(&ctx, &sc.modules, &opts).unwrap();
    assert_eq!(a.stats, b.stats);
    let stats = a.stats.unwrap();
    assert!(stats.budget_exhausted);
    assert_eq!(stats.evaluated, 5);
}

#[test]
fn hereditary_examples() {
    let sc = builtin("a3", Field::f2()).unwrap();
    let r = check_hereditary(&sc.context("T").unwrap(), &sc.modules, &SubmoduleLimits::default()).unwrap();
    assert!(r.hypothesis.iter().all(|h| h.non_projective.is_none()));
    assert!(matches!(r.conclusion, HereditaryConclusion::ClosureHoldsOnCorpus));

    let alg = a2(Field::f2());
    let ctx = StableContext::new(&alg, vec![simple(&alg, 1)]).unwrap();
    let corpus = named(&[("P1", projective(&alg, 0))]);
    let r = check_hereditary(&ctx, &corpus, &SubmoduleLimits::default()).unwrap();
    match r.conclusion {
        HereditaryConclusion::NotBalanced { module, submodule } => {
            assert_eq!(module, "P1");
            assert_eq!(submodule.source(), &simple(&alg, 1));
        }
        other => panic!("{other:?}"),
    }

    let q = Quiver::from_strs(&["1", "2"], &[]).unwrap();
    let ss = Arc::new(PathAlgebra::new(q, &[], Field::f2()).unwrap());
    let ctx = StableContext::new(&ss, vec![projective(&ss, 0), projective(&ss, 1)]).unwrap();
    let corpus = named(&[("S1", simple(&ss, 0)), ("I2", injective(&ss, 1))]);
    let r = check_hereditary(&ctx, &corpus, &SubmoduleLimits::default()).unwrap();
    assert!(matches!(r.conclusion, HereditaryConclusion::ClosureHoldsOnCorpus));

    let big = builtin("a3", Field::default()).unwrap();
    assert!(matches!(
        check_hereditary(&big.context("T").unwrap(), &big.modules, &SubmoduleLimits::default()),
        Err(Error::BudgetExceeded { .. })
    ));
}
