use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::module::{
    cokernel, factorize, hcat, hom_basis, hom_dim, kernel, pullback, pushout, retraction, section, solve_in_span,
    Square,
};
use crate::rep::{Morphism, Representation};

use super::subcategory::{StableContext, Subcategory};
use super::verdict::{Certificate, Decision, Side, StableVerdict};

const ROUTE_ZERO: &str = "ideal membership, factored through the canonical precover";
const ROUTE_IN_ADD: &str = "section of the canonical precover";
const ROUTE_MONO: &str = "pullback leg through the canonical precover";
const ROUTE_EPI: &str = "pushout leg through the canonical preenvelope";
const ROUTE_STRONG_MONO: &str = "pullback corner against the canonical precover";
const ROUTE_STRONG_EPI: &str = "pushout corner against the canonical preenvelope";
const ROUTE_ISO: &str = "two-sided inverse modulo the ideal";

const CROSS_MONO: &str = "kernel inclusion factors through T";
const CROSS_EPI: &str = "preenvelope coincides on the kernel with a map onto its image";
const CROSS_STRONG_MONO: &str = "kernel lies in add(T)";
const CROSS_STRONG_EPI: &str = "image of the kernel under the preenvelope is a summand";
const CROSS_ISO: &str = "split epimorphism with kernel in add(T)";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproximationSide {
    Precover,
    Preenvelope,
}

pub fn approximation<S: Subcategory + ?Sized>(sub: &S, m: &Representation, side: ApproximationSide) -> Result<Morphism> {
    match side {
        ApproximationSide::Precover => sub.precover(m),
        ApproximationSide::Preenvelope => sub.preenvelope(m),
    }
}

pub fn ideal_basis<S: Subcategory + ?Sized>(sub: &S, x: &Representation, y: &Representation) -> Result<Subspace> {
    sub.ideal(x, y)
}

/// `dim Hom(x, y) − dim ideal(x, y)`.
pub fn stable_hom_dim<S: Subcategory + ?Sized>(sub: &S, x: &Representation, y: &Representation) -> Result<usize> {
    Ok(hom_dim(x, y)? - sub.ideal(x, y)?.dim())
}

/// `Ω(m)`: the kernel of the canonical precover.
pub fn loop_object<S: Subcategory + ?Sized>(sub: &S, m: &Representation) -> Result<Representation> {
    Ok(kernel(&sub.precover(m)?).source().clone())
}

/// `Σ(m)`: the cokernel of the canonical preenvelope.
pub fn suspension_object<S: Subcategory + ?Sized>(sub: &S, m: &Representation) -> Result<Representation> {
    Ok(cokernel(&sub.preenvelope(m)?).target().clone())
}

fn check<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<()> {
    sub.check_algebra(f.source())
}

/// `h` with `p ∘ h = f`, solved over a basis of `Hom(f.source(), p.source())`.
fn factor_through<S: Subcategory + ?Sized>(_: &S, p: &Morphism, f: &Morphism) -> Result<Option<Morphism>> {
    let h = hom_basis(f.source(), p.source())?;
    let vectors: Vec<Vec<u32>> = h.basis().iter().map(|b| p.after_unchecked(b).coords()).collect();
    let target = f.coords();
    Ok(solve_in_span(f.field(), target.len(), &vectors, &target).map(|c| h.combine(&c)))
}

pub fn is_stable_zero<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<StableVerdict> {
    check(sub, f)?;
    let ideal = sub.ideal(f.source(), f.target())?;
    let answer = ideal.contains(&f.coords());
    let certificate = if answer {
        let p = sub.precover(f.target())?;
        let h = factor_through(sub, &p, f)?.ok_or(Error::RouteDisagreement { op: "is-stable-zero" })?;
        Certificate::Factorization { first: h, second: p }
    } else {
        Certificate::NoFactorization { hom_dim: hom_dim(f.source(), f.target())?, ideal_dim: ideal.dim() }
    };
    Ok(StableVerdict { decision: Decision::StableZero, answer, route: ROUTE_ZERO, cross_check: None, certificate })
}

pub fn is_in_add<S: Subcategory + ?Sized>(sub: &S, m: &Representation) -> Result<StableVerdict> {
    sub.check_algebra(m)?;
    let precover = sub.precover(m)?;
    let (answer, certificate) = match section(&precover)? {
        Some(s) => (true, Certificate::Section { precover, section: s }),
        None => (false, Certificate::NoSection { precover }),
    };
    Ok(StableVerdict { decision: Decision::InAdd, answer, route: ROUTE_IN_ADD, cross_check: None, certificate })
}

fn cross_checkable<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> bool {
    sub.projective_objects() && f.is_epi()
}

fn agree(primary: bool, alt: bool, op: &'static str) -> Result<()> {
    if primary == alt {
        Ok(())
    } else {
        Err(Error::RouteDisagreement { op })
    }
}

pub fn is_stable_mono<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<StableVerdict> {
    check(sub, f)?;
    let p = sub.precover(f.target())?;
    let square = pullback(f, &p)?;
    let inner = is_stable_zero(sub, &square.first)?;
    let answer = inner.answer;
    let mut cross_check = None;
    if cross_checkable(sub, f) {
        agree(answer, is_stable_zero(sub, &kernel(f))?.answer, "is-stable-mono")?;
        cross_check = Some(CROSS_MONO);
    }
    let certificate = Certificate::Square { approximation: p, square, inner: Box::new(inner) };
    Ok(StableVerdict { decision: Decision::Mono, answer, route: ROUTE_MONO, cross_check, certificate })
}

/// For an epimorphism `f`: some `μ̃: X -> μ(ker f)` agrees with the
/// preenvelope `μ` on `ker f`.
pub fn preenvelope_coincides_on_kernel<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<bool> {
    let mu = sub.preenvelope(f.source())?;
    let kappa = kernel(f);
    let fac = factorize(&mu.after_unchecked(&kappa));
    let h = hom_basis(f.source(), fac.image.source())?;
    let vectors: Vec<Vec<u32>> = h.basis().iter().map(|b| b.after_unchecked(&kappa).coords()).collect();
    let target = fac.coimage.coords();
    Ok(solve_in_span(f.field(), target.len(), &vectors, &target).is_some())
}

pub fn is_stable_epi<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<StableVerdict> {
    check(sub, f)?;
    let mu = sub.preenvelope(f.source())?;
    let square = pushout(f, &mu)?;
    let inner = is_stable_zero(sub, &square.first)?;
    let answer = inner.answer;
    let mut cross_check = None;
    if cross_checkable(sub, f) {
        agree(answer, preenvelope_coincides_on_kernel(sub, f)?, "is-stable-epi")?;
        cross_check = Some(CROSS_EPI);
    }
    let certificate = Certificate::Square { approximation: mu, square, inner: Box::new(inner) };
    Ok(StableVerdict { decision: Decision::Epi, answer, route: ROUTE_EPI, cross_check, certificate })
}

pub fn is_stable_strong_mono<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<StableVerdict> {
    check(sub, f)?;
    let p = sub.precover(f.target())?;
    let square = pullback(f, &p)?;
    let inner = is_in_add(sub, &square.corner)?;
    let answer = inner.answer;
    let mut cross_check = None;
    if cross_checkable(sub, f) {
        agree(answer, is_in_add(sub, kernel(f).source())?.answer, "is-strong-mono")?;
        cross_check = Some(CROSS_STRONG_MONO);
    }
    let certificate = Certificate::Square { approximation: p, square, inner: Box::new(inner) };
    Ok(StableVerdict { decision: Decision::StrongMono, answer, route: ROUTE_STRONG_MONO, cross_check, certificate })
}

/// For an epimorphism `f`: the inclusion `μ(ker f) -> T^X` is a split mono.
pub fn kernel_image_splits<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<bool> {
    let mu = sub.preenvelope(f.source())?;
    let fac = factorize(&mu.after_unchecked(&kernel(f)));
    Ok(retraction(&fac.image)?.is_some())
}

pub fn is_stable_strong_epi<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<StableVerdict> {
    check(sub, f)?;
    let mu = sub.preenvelope(f.source())?;
    let square = pushout(f, &mu)?;
    let inner = is_in_add(sub, &square.corner)?;
    let answer = inner.answer;
    let mut cross_check = None;
    if cross_checkable(sub, f) {
        agree(answer, kernel_image_splits(sub, f)?, "is-strong-epi")?;
        cross_check = Some(CROSS_STRONG_EPI);
    }
    let certificate = Certificate::Square { approximation: mu, square, inner: Box::new(inner) };
    Ok(StableVerdict { decision: Decision::StrongEpi, answer, route: ROUTE_STRONG_EPI, cross_check, certificate })
}

/// `g: Y -> X` with `g ∘ f ≡ id_X` (left) or `f ∘ g ≡ id_Y` (right) modulo
/// the ideal.
fn one_sided_inverse<S: Subcategory + ?Sized>(sub: &S, f: &Morphism, side: Side) -> Result<Option<Morphism>> {
    let (x, y) = (f.source(), f.target());
    let h = hom_basis(y, x)?;
    let (id, ideal) = match side {
        Side::Left => (Morphism::identity(x), sub.ideal(x, x)?),
        Side::Right => (Morphism::identity(y), sub.ideal(y, y)?),
    };
    let mut vectors: Vec<Vec<u32>> = h
        .basis()
        .iter()
        .map(|g| match side {
            Side::Left => g.after_unchecked(f).coords(),
            Side::Right => f.after_unchecked(g).coords(),
        })
        .collect();
    vectors.extend(ideal.basis().iter().cloned());
    let target = id.coords();
    Ok(solve_in_span(f.field(), target.len(), &vectors, &target).map(|c| h.combine(&c[..h.dim()])))
}

pub fn is_stable_iso<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<StableVerdict> {
    check(sub, f)?;
    let left = one_sided_inverse(sub, f, Side::Left)?;
    let right = if left.is_some() { one_sided_inverse(sub, f, Side::Right)? } else { None };
    let (answer, certificate) = match (left, right) {
        (Some(l), Some(r)) => {
            let (x, y) = (f.source(), f.target());
            if !sub.ideal(y, x)?.contains(&l.sub(&r)?.coords()) {
                return Err(Error::RouteDisagreement { op: "is-iso" });
            }
            let dl = Morphism::identity(x).sub(&l.after_unchecked(f))?;
            let dr = Morphism::identity(y).sub(&f.after_unchecked(&r))?;
            let left_defect = Box::new(is_stable_zero(sub, &dl)?);
            let right_defect = Box::new(is_stable_zero(sub, &dr)?);
            (true, Certificate::Inverse { left: l, right: r, left_defect, right_defect })
        }
        (None, _) => (false, Certificate::NoInverse { side: Side::Left }),
        (Some(_), None) => (false, Certificate::NoInverse { side: Side::Right }),
    };
    let mut cross_check = None;
    if cross_checkable(sub, f) {
        let alt = section(f)?.is_some() && is_in_add(sub, kernel(f).source())?.answer;
        agree(answer, alt, "is-iso")?;
        cross_check = Some(CROSS_ISO);
    }
    Ok(StableVerdict { decision: Decision::Iso, answer, route: ROUTE_ISO, cross_check, certificate })
}

/// Runs a decision on a morphism; `InAdd` is decided for the source.
pub fn decide<S: Subcategory + ?Sized>(sub: &S, decision: Decision, f: &Morphism) -> Result<StableVerdict> {
    match decision {
        Decision::StableZero => is_stable_zero(sub, f),
        Decision::InAdd => is_in_add(sub, f.source()),
        Decision::Mono => is_stable_mono(sub, f),
        Decision::Epi => is_stable_epi(sub, f),
        Decision::StrongMono => is_stable_strong_mono(sub, f),
        Decision::StrongEpi => is_stable_strong_epi(sub, f),
        Decision::Iso => is_stable_iso(sub, f),
    }
}

/// Condition of the mono criterion for one map `p: T -> Y` with `T` in the
/// subcategory: the leg of the pullback of `f` and `p` parallel to `p` is
/// stably zero.
pub fn pullback_leg_vanishes<S: Subcategory + ?Sized>(sub: &S, f: &Morphism, p: &Morphism) -> Result<bool> {
    Ok(is_stable_zero(sub, &pullback(f, p)?.first)?.answer)
}

/// `f' = [f, g]: X ⊕ T -> Y`, an epimorphism with the same stable class as
/// `f`, where `coker f = p ∘ h` through `T` and `g` lifts `p` along the
/// cokernel projection.
pub fn epi_representative(ctx: &StableContext, f: &Morphism) -> Result<Morphism> {
    ctx.require_projective()?;
    if !is_stable_epi(ctx, f)?.answer {
        return Err(Error::NotStableEpi);
    }
    let c = cokernel(f);
    let Certificate::Factorization { second: p, .. } = is_stable_zero(ctx, &c)?.certificate else {
        return Err(Error::RouteDisagreement { op: "epi-representative" });
    };
    let g = factor_through_lift(&c, &p)?.ok_or(Error::RouteDisagreement { op: "epi-representative" })?;
    let (_, f2) = hcat(f.target(), &[f.clone(), g])?;
    if !f2.is_epi() {
        return Err(Error::RouteDisagreement { op: "epi-representative" });
    }
    Ok(f2)
}

/// `g: T -> Y` with `c ∘ g = p`.
fn factor_through_lift(c: &Morphism, p: &Morphism) -> Result<Option<Morphism>> {
    let h = hom_basis(p.source(), c.source())?;
    let vectors: Vec<Vec<u32>> = h.basis().iter().map(|g| c.after_unchecked(g).coords()).collect();
    let target = p.coords();
    Ok(solve_in_span(p.field(), target.len(), &vectors, &target).map(|x| h.combine(&x)))
}

/// `g = [f, p_Y]: X ⊕ T_Y -> Y`, whose kernel lies in `add(T)`.
pub fn strong_mono_representative<S: Subcategory + ?Sized>(sub: &S, f: &Morphism) -> Result<Morphism> {
    if !is_stable_strong_mono(sub, f)?.answer {
        return Err(Error::NotStrongMono);
    }
    let p = sub.precover(f.target())?;
    let (_, g) = hcat(f.target(), &[f.clone(), p])?;
    if !is_in_add(sub, kernel(&g).source())?.answer {
        return Err(Error::RouteDisagreement { op: "strong-mono-representative" });
    }
    Ok(g)
}

fn same_square(a: &Square, b: &Square) -> bool {
    a.corner == b.corner && a.first == b.first && a.second == b.second
}

/// Re-checks a verdict about `f` from scratch. For `InAdd`, pass the
/// identity of the object.
pub fn verify<S: Subcategory + ?Sized>(sub: &S, f: &Morphism, v: &StableVerdict) -> Result<bool> {
    let (x, y) = (f.source(), f.target());
    Ok(match (v.decision, &v.certificate) {
        (Decision::StableZero, Certificate::Factorization { first, second }) => {
            v.answer
                && first.source() == x
                && second.target() == y
                && second.after(first).map(|c| c == *f).unwrap_or(false)
                && is_in_add(sub, first.target())?.answer
        }
        (Decision::StableZero, Certificate::NoFactorization { ideal_dim, .. }) => {
            let ideal = sub.ideal(x, y)?;
            !v.answer && ideal.dim() == *ideal_dim && !ideal.contains(&f.coords())
        }
        (Decision::InAdd, Certificate::Section { precover, section }) => {
            v.answer
                && *precover == sub.precover(x)?
                && precover.after(section).map(|c| c.is_identity()).unwrap_or(false)
        }
        (Decision::InAdd, Certificate::NoSection { precover }) => {
            !v.answer && *precover == sub.precover(x)? && section(precover)?.is_none()
        }
        (d @ (Decision::Mono | Decision::StrongMono), Certificate::Square { approximation, square, inner }) => {
            *approximation == sub.precover(y)?
                && same_square(square, &pullback(f, approximation)?)
                && inner.answer == v.answer
                && verify_inner(sub, d, square, inner)?
        }
        (d @ (Decision::Epi | Decision::StrongEpi), Certificate::Square { approximation, square, inner }) => {
            *approximation == sub.preenvelope(x)?
                && same_square(square, &pushout(f, approximation)?)
                && inner.answer == v.answer
                && verify_inner(sub, d, square, inner)?
        }
        (Decision::Iso, Certificate::Inverse { left, right, left_defect, right_defect }) => {
            let dl = Morphism::identity(x).sub(&left.after(f)?)?;
            let dr = Morphism::identity(y).sub(&f.after(right)?)?;
            v.answer
                && left_defect.decision == Decision::StableZero
                && right_defect.decision == Decision::StableZero
                && verify(sub, &dl, left_defect)?
                && verify(sub, &dr, right_defect)?
                && left_defect.answer
                && right_defect.answer
        }
        (Decision::Iso, Certificate::NoInverse { side }) => {
            !v.answer && one_sided_inverse(sub, f, *side)?.is_none()
        }
        _ => false,
    })
}

fn verify_inner<S: Subcategory + ?Sized>(sub: &S, d: Decision, square: &Square, inner: &StableVerdict) -> Result<bool> {
    match d {
        Decision::Mono | Decision::Epi => {
            Ok(inner.decision == Decision::StableZero && verify(sub, &square.first, inner)?)
        }
        _ => Ok(inner.decision == Decision::InAdd && verify(sub, &Morphism::identity(&square.corner), inner)?),
    }
}
