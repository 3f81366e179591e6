use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::linalg::{Field, Subspace};
use crate::module::{direct_sum, hom_basis, kernel};
use crate::quiver::{PathAlgebra, Quiver};
use crate::rep::{Morphism, Representation};
use crate::standard::{injective, projective, simple};

struct A3 {
    alg: Arc<PathAlgebra>,
    ctx: StableContext,
}

fn a3(k: Field) -> A3 {
    let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
    let alg = Arc::new(PathAlgebra::new(q, &[], k).unwrap());
    let ctx = StableContext::new(&alg, vec![projective(&alg, 0)]).unwrap();
    A3 { alg, ctx }
}

fn only_map(x: &Representation, y: &Representation) -> Morphism {
    let h = hom_basis(x, y).unwrap();
    assert_eq!(h.dim(), 1);
    h.basis()[0].clone()
}

fn precover_ideal<S: Subcategory>(sub: &S, x: &Representation, y: &Representation) -> Subspace {
    let p = sub.precover(y).unwrap();
    let h = hom_basis(x, p.source()).unwrap();
    let vs: Vec<Vec<u32>> = h.basis().iter().map(|b| p.after(b).unwrap().coords()).collect();
    Subspace::from_spanning(x.field(), Morphism::ambient_len(x, y), &vs)
}

#[test]
fn a3_example_facts() {
    for k in [Field::f2(), Field::default()] {
        let A3 { alg, ctx } = a3(k);
        let (p2, s2, i2, s1) = (projective(&alg, 1), simple(&alg, 1), injective(&alg, 1), simple(&alg, 0));
        let f = only_map(&p2, &s2);
        let j = only_map(&s2, &i2);
        let p = only_map(&i2, &s1);
        let jf = j.after(&f).unwrap();

        let epi = is_stable_epi(&ctx, &f).unwrap();
        assert!(!epi.answer);
        assert!(epi.cross_check.is_some());
        let z = is_stable_zero(&ctx, &jf).unwrap();
        assert!(z.answer);
        assert!(verify(&ctx, &jf, &z).unwrap());
        let zp = is_stable_zero(&ctx, &p).unwrap();
        assert!(!zp.answer);
        assert!(verify(&ctx, &p, &zp).unwrap());

        assert!(loop_object(&ctx, &s2).unwrap().is_zero());
        assert!(stable_hom_dim(&ctx, &s2, &s2).unwrap() >= 1);
        assert_eq!(stable_hom_dim(&ctx, &p2, &s2).unwrap(), 1);
        assert!(ideal_basis(&ctx, &p2, &s2).unwrap().is_zero());
        assert_eq!(suspension_object(&ctx, &p2).unwrap().dims(), &[1, 0, 0]);
        let env = approximation(&ctx, &p2, ApproximationSide::Preenvelope).unwrap();
        assert!(env.is_mono() && env.target() == &projective(&alg, 0));
        assert!(approximation(&ctx, &s2, ApproximationSide::Precover).unwrap().source().is_zero());
    }
}

#[test]
fn a3_membership() {
    let A3 { alg, ctx } = a3(Field::f2());
    assert!(is_in_add(&ctx, &projective(&alg, 0)).unwrap().answer);
    assert!(is_in_add(&ctx, &Representation::zero(&alg)).unwrap().answer);
    assert!(!is_in_add(&ctx, &simple(&alg, 2)).unwrap().answer);
    let two = direct_sum(&alg, &[projective(&alg, 0), projective(&alg, 0)]).unwrap().object;
    let v = is_in_add(&ctx, &two).unwrap();
    assert!(v.answer && verify(&ctx, &Morphism::identity(&two), &v).unwrap());
}

#[test]
fn a3_projection_onto_simple_is_neither_mono_nor_epi() {
    let A3 { alg, ctx } = a3(Field::f2());
    let f = only_map(&projective(&alg, 1), &simple(&alg, 1));
    for d in [Decision::Mono, Decision::Epi, Decision::StrongMono, Decision::StrongEpi, Decision::Iso] {
        let v = decide(&ctx, d, &f).unwrap();
        assert!(!v.answer, "{}", d.name());
        assert!(verify(&ctx, &f, &v).unwrap(), "{}", d.name());
    }
}

#[test]
fn identities_pass_everything() {
    let A3 { alg, ctx } = a3(Field::default());
    for m in [projective(&alg, 1), simple(&alg, 0), injective(&alg, 1)] {
        let id = Morphism::identity(&m);
        for d in [Decision::Mono, Decision::Epi, Decision::StrongMono, Decision::StrongEpi, Decision::Iso] {
            let v = decide(&ctx, d, &id).unwrap();
            assert!(v.answer, "{}", d.name());
            assert!(verify(&ctx, &id, &v).unwrap());
        }
    }
}

#[test]
fn biproduct_projection_with_generator_is_iso() {
    let A3 { alg, ctx } = a3(Field::default());
    let x = simple(&alg, 1);
    let s = direct_sum(&alg, &[x.clone(), projective(&alg, 0)]).unwrap();
    let v = is_stable_iso(&ctx, &s.projections[0]).unwrap();
    assert!(v.answer && v.cross_check.is_some());
    assert!(verify(&ctx, &s.projections[0], &v).unwrap());
}

#[test]
fn product_ideal_matches_precover_ideal() {
    let A3 { alg, ctx } = a3(Field::f2());
    let ms = [projective(&alg, 0), projective(&alg, 1), simple(&alg, 1), injective(&alg, 1), simple(&alg, 2)];
    for x in &ms {
        for y in &ms {
            assert_eq!(ctx.ideal(x, y).unwrap(), precover_ideal(&ctx, x, y));
        }
    }
}

#[test]
fn precover_factors_generator_maps() {
    let A3 { alg, ctx } = a3(Field::default());
    let y = injective(&alg, 1);
    let p = ctx.precover(&y).unwrap();
    for b in hom_basis(&ctx.generators()[0], &y).unwrap().basis() {
        let z = is_stable_zero(&ctx, b).unwrap();
        assert!(z.answer);
        let Certificate::Factorization { first, second } = z.certificate else { panic!() };
        assert_eq!(second, p);
        assert_eq!(second.after(&first).unwrap(), *b);
    }
}

#[test]
fn representatives() {
    let A3 { alg, ctx } = a3(Field::default());
    // 0 -> P1 is stably epi since P1 is stably zero.
    let z = Morphism::zero(&Representation::zero(&alg), &projective(&alg, 0));
    let e = epi_representative(&ctx, &z).unwrap();
    assert!(e.is_epi());
    let f = only_map(&projective(&alg, 1), &simple(&alg, 1));
    assert_eq!(epi_representative(&ctx, &f).unwrap_err(), crate::error::Error::NotStableEpi);
    let id = Morphism::identity(&simple(&alg, 1));
    let g = strong_mono_representative(&ctx, &id).unwrap();
    assert!(is_in_add(&ctx, kernel(&g).source()).unwrap().answer);
    assert_eq!(strong_mono_representative(&ctx, &f).unwrap_err(), crate::error::Error::NotStrongMono);
}

#[test]
fn non_projective_generators_are_detected() {
    let A3 { alg, .. } = a3(Field::f2());
    let ctx = StableContext::new(&alg, vec![projective(&alg, 0), simple(&alg, 1)]).unwrap();
    assert_eq!(ctx.projectivity(), &[true, false]);
    assert!(ctx.require_projective().is_err());
    assert!(StableContext::new(&alg, vec![]).is_err());
}

#[test]
fn serre_torsion_and_approximations() {
    let alg = Arc::new(PathAlgebra::new(Quiver::linear(2), &[], Field::f2()).unwrap());
    let s = SerreClass::new(&alg, &[1]).unwrap();
    let p1 = projective(&alg, 0);
    let t = s.torsion(&p1).unwrap();
    assert_eq!(t.source(), &simple(&alg, 1));
    let e = s.preenvelope(&p1).unwrap();
    assert!(e.target().is_zero());
    let all = SerreClass::new(&alg, &[0, 1]).unwrap();
    assert!(all.torsion(&p1).unwrap().is_iso());
    assert!(is_in_add(&s, &simple(&alg, 1)).unwrap().answer);
    assert!(!is_in_add(&s, &p1).unwrap().answer);
    // P1 -> S1: kernel S2 is supported, cokernel zero.
    let f = only_map(&p1, &simple(&alg, 0));
    assert!(is_stable_mono(&s, &f).unwrap().answer);
    assert!(is_stable_epi(&s, &f).unwrap().answer);
    assert!(!is_stable_iso(&s, &f).unwrap().answer);
}
