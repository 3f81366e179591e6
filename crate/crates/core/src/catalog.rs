//! Built-in scenarios: small bound quiver algebras with named modules,
//! morphisms, subcategories and the facts they are known to satisfy.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::balance::{
    check_balance, check_hereditary, check_serre_balance, check_weak_balance_sufficient, serre_torsion,
    HereditaryConclusion, SearchOptions, Verdict,
};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::module::{direct_sum, generated_submodule, hom_basis, hom_dim, image_subspaces, quotient, SubmoduleLimits};
use crate::quiver::{PathAlgebra, Quiver};
use crate::rep::{Morphism, Representation};
use crate::standard::{injective, path_element, projective, regular, simple};
use crate::stable::{decide, is_in_add, loop_object, stable_hom_dim, Decision, SerreClass, StableContext};

/// A checkable statement about a scenario. Names refer to the scenario's
/// modules, morphisms, subcategories and Serre supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactCheck {
    HomDim { from: String, to: String, dim: usize },
    /// `dim Hom(from, A)` for the regular module `A`.
    HomToRegular { from: String, dim: usize },
    StableHomDim { sub: String, from: String, to: String, dim: usize },
    Decide { sub: String, decision: Decision, morphism: String, answer: bool },
    InAdd { sub: String, module: String, answer: bool },
    LoopIsZero { sub: String, module: String, answer: bool },
    WeakBalance { sub: String, passes: bool },
    /// Search over all scenario modules, upgraded by the projective-injective
    /// route when it applies.
    Balance { sub: String, verdict: Verdict },
    SerreBalance { serre: String, verdict: Verdict },
    SerreTorsion { serre: String, module: String, dims: Vec<usize> },
    /// Closure of the left perpendicular class on all scenario modules.
    HereditaryClosure { sub: String, holds: bool },
}

#[derive(Clone, Debug)]
pub struct Fact {
    pub description: String,
    pub check: FactCheck,
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub algebra: Arc<PathAlgebra>,
    pub modules: Vec<(String, Representation)>,
    pub morphisms: Vec<(String, Morphism)>,
    pub subcategories: Vec<(String, Vec<String>)>,
    pub serre: Vec<(String, Vec<usize>)>,
    pub facts: Vec<Fact>,
    /// How the vertex numbering relates to the usual pictures.
    pub notes: Vec<String>,
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 4] = ["a3", "six_vertex", "tn(n)", "a2_serre"];

pub fn builtin(name: &str, field: Field) -> Result<Scenario> {
    match name {
        "a3" => a3(field),
        "six_vertex" => six_vertex(field),
        "a2_serre" => a2_serre(field),
        _ => match parse_tn(name) {
            Some(n) if n >= 1 => tn(n, field),
            _ => Err(Error::UnknownScenario(name.to_string())),
        },
    }
}

fn parse_tn(name: &str) -> Option<usize> {
    let rest = name.strip_prefix("tn")?;
    let digits = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    digits.parse().ok()
}

fn s(x: &str) -> String {
    x.to_string()
}

fn fact(description: &str, check: FactCheck) -> Fact {
    Fact { description: description.to_string(), check }
}

fn only(x: &Representation, y: &Representation) -> Result<Morphism> {
    let h = hom_basis(x, y)?;
    match h.basis() {
        [b] => Ok(b.clone()),
        _ => Err(Error::InvalidMorphism { reason: format!("expected a one-dimensional Hom space, found {}", h.dim()) }),
    }
}

impl Scenario {
    pub fn module(&self, name: &str) -> Result<&Representation> {
        self.modules
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::InvalidRepresentation { reason: format!("unknown module {name}") })
    }

    pub fn morphism(&self, name: &str) -> Result<&Morphism> {
        self.morphisms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::InvalidMorphism { reason: format!("unknown morphism {name}") })
    }

    pub fn context(&self, name: &str) -> Result<StableContext> {
        let (_, gens) = self
            .subcategories
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| Error::InvalidRepresentation { reason: format!("unknown subcategory {name}") })?;
        let ms = gens.iter().map(|g| self.module(g).cloned()).collect::<Result<Vec<_>>>()?;
        StableContext::new(&self.algebra, ms)
    }

    pub fn serre_class(&self, name: &str) -> Result<SerreClass> {
        let (_, support) = self
            .serre
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| Error::InvalidRepresentation { reason: format!("unknown Serre class {name}") })?;
        SerreClass::new(&self.algebra, support)
    }

    /// Evaluates one fact; `Ok(true)` when it holds.
    pub fn check(&self, c: &FactCheck) -> Result<bool> {
        Ok(match c {
            FactCheck::HomDim { from, to, dim } => hom_dim(self.module(from)?, self.module(to)?)? == *dim,
            FactCheck::HomToRegular { from, dim } => hom_dim(self.module(from)?, &regular(&self.algebra))? == *dim,
            FactCheck::StableHomDim { sub, from, to, dim } => {
                stable_hom_dim(&self.context(sub)?, self.module(from)?, self.module(to)?)? == *dim
            }
            FactCheck::Decide { sub, decision, morphism, answer } => {
                decide(&self.context(sub)?, *decision, self.morphism(morphism)?)?.answer == *answer
            }
            FactCheck::InAdd { sub, module, answer } => {
                is_in_add(&self.context(sub)?, self.module(module)?)?.answer == *answer
            }
            FactCheck::LoopIsZero { sub, module, answer } => {
                loop_object(&self.context(sub)?, self.module(module)?)?.is_zero() == *answer
            }
            FactCheck::WeakBalance { sub, passes } => {
                let r = check_weak_balance_sufficient(&self.context(sub)?)?;
                r.generators.iter().all(|g| g.passes()) == *passes
            }
            FactCheck::Balance { sub, verdict } => {
                check_balance(&self.context(sub)?, &self.modules, &SearchOptions::default())?.verdict == *verdict
            }
            FactCheck::SerreBalance { serre, verdict } => {
                check_serre_balance(&self.serre_class(serre)?, &self.modules)?.verdict == *verdict
            }
            FactCheck::SerreTorsion { serre, module, dims } => {
                serre_torsion(self.module(module)?, &self.serre_class(serre)?)?.mono.source().dims() == dims.as_slice()
            }
            FactCheck::HereditaryClosure { sub, holds } => {
                let limits = SubmoduleLimits { allow_any_field: true, ..SubmoduleLimits::default() };
                let r = check_hereditary(&self.context(sub)?, &self.modules, &limits)?;
                matches!(r.conclusion, HereditaryConclusion::ClosureHoldsOnCorpus) == *holds
            }
        })
    }

    /// Every fact with its outcome.
    pub fn evaluate(&self) -> Result<Vec<(&Fact, bool)>> {
        self.facts.iter().map(|f| Ok((f, self.check(&f.check)?))).collect()
    }
}

/// `kA₃` with arrows `a: 1 -> 2`, `b: 2 -> 3` and `T = add(P1)`, where `P1`
/// is projective-injective.
fn a3(field: Field) -> Result<Scenario> {
    let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")])?;
    let alg = Arc::new(PathAlgebra::new(q, &[], field)?);
    let modules = vec![
        (s("P1"), projective(&alg, 0)),
        (s("P2"), projective(&alg, 1)),
        (s("P3"), projective(&alg, 2)),
        (s("S1"), simple(&alg, 0)),
        (s("S2"), simple(&alg, 1)),
        (s("S3"), simple(&alg, 2)),
        (s("I2"), injective(&alg, 1)),
    ];
    let f = only(&modules[1].1, &modules[4].1)?;
    let j = only(&modules[4].1, &modules[6].1)?;
    let p = only(&modules[6].1, &modules[3].1)?;
    let jf = j.after(&f)?;
    let morphisms = vec![(s("f"), f), (s("j"), j), (s("p"), p), (s("jf"), jf)];
    let t = s("T");
    let facts = vec![
        fact("P2 -> S2 is not a stable epi", FactCheck::Decide { sub: t.clone(), decision: Decision::Epi, morphism: s("f"), answer: false }),
        fact("S2 -> I2 after P2 -> S2 is stably zero", FactCheck::Decide { sub: t.clone(), decision: Decision::StableZero, morphism: s("jf"), answer: true }),
        fact("I2 -> S1 is not stably zero", FactCheck::Decide { sub: t.clone(), decision: Decision::StableZero, morphism: s("p"), answer: false }),
        fact("the loop object of S2 is zero", FactCheck::LoopIsZero { sub: t.clone(), module: s("S2"), answer: true }),
        fact("S2 has a one-dimensional stable endomorphism space", FactCheck::StableHomDim { sub: t.clone(), from: s("S2"), to: s("S2"), dim: 1 }),
        fact("stable Hom(P2, S2) is one-dimensional", FactCheck::StableHomDim { sub: t.clone(), from: s("P2"), to: s("S2"), dim: 1 }),
        fact("P1 lies in T", FactCheck::InAdd { sub: t.clone(), module: s("P1"), answer: true }),
        fact("T consists of projective-injectives, so the stable category is balanced", FactCheck::Balance { sub: t.clone(), verdict: Verdict::Balanced }),
        fact("the left perpendicular class of T is closed under submodules", FactCheck::HereditaryClosure { sub: t.clone(), holds: true }),
    ];
    Ok(Scenario {
        name: s("a3"),
        algebra: alg,
        modules,
        morphisms,
        subcategories: vec![(t, vec![s("P1")])],
        serre: vec![],
        facts,
        notes: vec![s(
            "arrows compose left to right, so vertex i here is vertex 4-i in pictures drawn with arrows 3 -> 2 -> 1; P1 is the projective-injective",
        )],
    })
}

/// The six-vertex algebra with relations `yx, xβ, βγ, γδα, δαβ`, the module
/// `E = (P4 ⊕ P5)/N` with `N` generated by `(-δα, x)`, and `T = add(A)`.
fn six_vertex(field: Field) -> Result<Scenario> {
    let q = Quiver::from_strs(
        &["1", "2", "3", "4", "5", "6"],
        &[
            ("alpha", "1", "2"),
            ("delta", "4", "1"),
            ("gamma", "3", "4"),
            ("beta", "2", "3"),
            ("x", "5", "2"),
            ("y", "6", "5"),
        ],
    )?;
    let rel = |r: &[&str]| r.iter().map(|a| a.to_string()).collect::<Vec<_>>();
    let relations = vec![
        rel(&["y", "x"]),
        rel(&["x", "beta"]),
        rel(&["beta", "gamma"]),
        rel(&["gamma", "delta", "alpha"]),
        rel(&["delta", "alpha", "beta"]),
    ];
    let alg = Arc::new(PathAlgebra::new(q, &relations, field)?);
    let ps: Vec<Representation> = (0..6).map(|v| projective(&alg, v)).collect();
    let sum = direct_sum(&alg, &[ps[3].clone(), ps[4].clone()])?;
    let da = path_element(&alg, &alg.path_from_names(3, &["delta", "alpha"])?)?;
    let x = path_element(&alg, &alg.path_from_names(4, &["x"])?)?;
    let mut gen: Vec<u32> = da.iter().map(|&c| field.neg(c)).collect();
    gen.extend(x);
    let n_incl = generated_submodule(&sum.object, &[(1, gen)])?;
    let to_e = quotient(&sum.object, &image_subspaces(&n_incl))?;
    let e = to_e.target().clone();
    let i = to_e.after(&sum.injections[0])?;
    let j = to_e.after(&sum.injections[1])?;
    let f = only(&e, &ps[2])?;
    let g = only(&e, &ps[5])?;
    let qmap = quotient(&e, &image_subspaces(&i))?;
    let qmod = qmap.target().clone();

    let mut modules: Vec<(String, Representation)> =
        ps.iter().enumerate().map(|(v, p)| (format!("P{}", v + 1), p.clone())).collect();
    modules.push((s("N"), n_incl.source().clone()));
    modules.push((s("E"), e));
    modules.push((s("Q"), qmod));
    let morphisms = vec![(s("i"), i), (s("j"), j), (s("f"), f), (s("g"), g), (s("q"), qmap)];
    let t = s("T");
    let d = |decision, answer, what: &str| {
        fact(what, FactCheck::Decide { sub: t.clone(), decision, morphism: s("q"), answer })
    };
    let facts = vec![
        fact("Hom(E, A) is two-dimensional", FactCheck::HomToRegular { from: s("E"), dim: 2 }),
        fact("every generator passes the weak balance restriction test", FactCheck::WeakBalance { sub: t.clone(), passes: true }),
        fact("the stable category is not balanced", FactCheck::Balance { sub: t.clone(), verdict: Verdict::NotBalanced }),
        d(Decision::Mono, true, "E -> E/i(P4) is a stable mono"),
        d(Decision::Epi, true, "E -> E/i(P4) is a stable epi"),
        d(Decision::StrongMono, true, "E -> E/i(P4) is a strong mono"),
        d(Decision::StrongEpi, false, "E -> E/i(P4) is not a strong epi"),
        d(Decision::Iso, false, "E -> E/i(P4) is not a stable iso"),
    ];
    Ok(Scenario {
        name: s("six_vertex"),
        algebra: alg,
        modules,
        morphisms,
        subcategories: vec![(t, (1..=6).map(|v| format!("P{v}")).collect())],
        serre: vec![],
        facts,
        notes: vec![s(
            "arrows are reversed relative to pictures drawn for right modules, so that relations read left to right; vertex numbers are unchanged",
        )],
    })
}

/// `kA_n` (upper triangular matrices) with `T = add(A)`.
fn tn(n: usize, field: Field) -> Result<Scenario> {
    let alg = Arc::new(PathAlgebra::new(Quiver::linear(n), &[], field)?);
    let mut modules = Vec::new();
    for v in 0..n {
        modules.push((format!("P{}", v + 1), projective(&alg, v)));
    }
    for v in 0..n {
        modules.push((format!("S{}", v + 1), simple(&alg, v)));
    }
    for v in 0..n {
        modules.push((format!("I{}", v + 1), injective(&alg, v)));
    }
    let mut seen: Vec<Representation> = Vec::new();
    modules.retain(|(_, m)| {
        let fresh = !seen.contains(m);
        seen.push(m.clone());
        fresh
    });
    let t = s("T");
    let mut facts = vec![fact(
        "the left perpendicular class of T is closed under submodules",
        FactCheck::HereditaryClosure { sub: t.clone(), holds: true },
    )];
    if n == 1 {
        facts.push(fact("the algebra is semisimple, so the stable category is zero", FactCheck::Balance { sub: t.clone(), verdict: Verdict::Balanced }));
        facts.push(fact("the simple module lies in T", FactCheck::InAdd { sub: t.clone(), module: s("P1"), answer: true }));
    } else {
        facts.push(fact("no counterexample to balance among the listed modules", FactCheck::Balance { sub: t.clone(), verdict: Verdict::Undetermined }));
    }
    Ok(Scenario {
        name: format!("tn({n})"),
        algebra: alg,
        modules,
        morphisms: vec![],
        subcategories: vec![(t, (1..=n).map(|v| format!("P{v}")).collect())],
        serre: vec![],
        facts,
        notes: vec![s("the path algebra of 1 -> 2 -> ... -> n is the algebra of upper triangular n x n matrices")],
    })
}

/// `kA₂` with `a: 1 -> 2` and the Serre class supported on the sink.
fn a2_serre(field: Field) -> Result<Scenario> {
    let alg = Arc::new(PathAlgebra::new(Quiver::linear(2), &[], field)?);
    let modules = vec![(s("P1"), projective(&alg, 0)), (s("S1"), simple(&alg, 0)), (s("S2"), simple(&alg, 1))];
    let f = only(&modules[0].1, &modules[1].1)?;
    let sink = s("sink");
    let facts = vec![
        fact("the torsion part of P1 is S2", FactCheck::SerreTorsion { serre: sink.clone(), module: s("P1"), dims: vec![0, 1] }),
        fact("the projection P1 -> S1 witnesses non-balance", FactCheck::SerreBalance { serre: sink.clone(), verdict: Verdict::NotBalanced }),
    ];
    Ok(Scenario {
        name: s("a2_serre"),
        algebra: alg,
        modules,
        morphisms: vec![(s("f"), f)],
        subcategories: vec![],
        serre: vec![(sink, vec![1])],
        facts,
        notes: vec![s("the Serre class consists of modules supported on vertex 2, the sink")],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fact_holds_at_both_primes() {
        for k in [Field::f2(), Field::default()] {
            for name in ["a3", "six_vertex", "a2_serre", "tn(1)", "tn(2)", "tn3"] {
                let sc = builtin(name, k).unwrap();
                for (f, ok) in sc.evaluate().unwrap() {
                    assert!(ok, "{name} over F_{}: {}", k.prime(), f.description);
                }
            }
        }
    }

    #[test]
    fn six_vertex_shapes() {
        let sc = builtin("six_vertex", Field::default()).unwrap();
        assert_eq!(sc.algebra.dim(), 15);
        assert_eq!(sc.module("E").unwrap().dims(), &[1, 1, 0, 1, 1, 0]);
        assert_eq!(sc.module("E").unwrap(), &injective(&sc.algebra, 1));
        assert_eq!(sc.module("Q").unwrap(), &simple(&sc.algebra, 4));
        assert_eq!(sc.module("N").unwrap(), &simple(&sc.algebra, 1));
        assert!(!sc.morphism("f").unwrap().after(sc.morphism("i").unwrap()).unwrap().is_zero());
        assert!(!sc.morphism("g").unwrap().after(sc.morphism("j").unwrap()).unwrap().is_zero());
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(builtin("a4", Field::f2()), Err(Error::UnknownScenario(_))));
        assert!(matches!(builtin("tn(0)", Field::f2()), Err(Error::UnknownScenario(_))));
    }
}
