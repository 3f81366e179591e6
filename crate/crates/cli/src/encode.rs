//! JSON forms of morphisms, certificates, verdicts and witnesses as they
//! appear in reports, and their inverses for re-verification.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use stabcat_core::balance::Witness;
use stabcat_core::module::Square;
use stabcat_core::stable::{Certificate, Decision, Side, StableVerdict};
use stabcat_core::{Morphism, PathAlgebra, Representation};

use crate::error::{CliError, Result};
use crate::workspace::{maps_doc, module_doc, module_from_doc, morphism_from_maps, ModuleDoc, Rows};

/// Route recorded on verdicts rebuilt from a report.
pub const IMPORTED_ROUTE: &str = "imported from a report";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub from: ModuleDoc,
    pub to: ModuleDoc,
    pub maps: IndexMap<String, Rows>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CertificateJson {
    Factorization { first: MorphismJson, second: MorphismJson },
    NoFactorization { hom_dim: usize, ideal_dim: usize },
    Section { precover: MorphismJson, section: MorphismJson },
    NoSection { precover: MorphismJson },
    Square { approximation: MorphismJson, corner: ModuleDoc, first: MorphismJson, second: MorphismJson, inner: Box<VerdictJson> },
    Inverse { left: MorphismJson, right: MorphismJson, left_defect: Box<VerdictJson>, right_defect: Box<VerdictJson> },
    NoInverse { side: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictJson {
    pub decision: String,
    pub answer: bool,
    pub route: String,
    pub cross_check: Option<String>,
    pub certificate: CertificateJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    pub morphism: MorphismJson,
    pub origin: String,
    pub verdicts: Vec<VerdictJson>,
}

pub fn encode_morphism(f: &Morphism) -> MorphismJson {
    MorphismJson { from: module_doc(f.source()), to: module_doc(f.target()), maps: maps_doc(f) }
}

pub fn decode_module(alg: &Arc<PathAlgebra>, doc: &ModuleDoc) -> Result<Representation> {
    module_from_doc(alg, doc, "embedded module")
}

pub fn decode_morphism(alg: &Arc<PathAlgebra>, f: &MorphismJson) -> Result<Morphism> {
    let x = decode_module(alg, &f.from)?;
    let y = decode_module(alg, &f.to)?;
    morphism_from_maps(&x, &y, &f.maps, "embedded morphism")
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

pub fn encode_certificate(c: &Certificate) -> CertificateJson {
    match c {
        Certificate::Factorization { first, second } => {
            CertificateJson::Factorization { first: encode_morphism(first), second: encode_morphism(second) }
        }
        Certificate::NoFactorization { hom_dim, ideal_dim } => {
            CertificateJson::NoFactorization { hom_dim: *hom_dim, ideal_dim: *ideal_dim }
        }
        Certificate::Section { precover, section } => {
            CertificateJson::Section { precover: encode_morphism(precover), section: encode_morphism(section) }
        }
        Certificate::NoSection { precover } => CertificateJson::NoSection { precover: encode_morphism(precover) },
        Certificate::Square { approximation, square, inner } => CertificateJson::Square {
            approximation: encode_morphism(approximation),
            corner: module_doc(&square.corner),
            first: encode_morphism(&square.first),
            second: encode_morphism(&square.second),
            inner: Box::new(encode_verdict(inner)),
        },
        Certificate::Inverse { left, right, left_defect, right_defect } => CertificateJson::Inverse {
            left: encode_morphism(left),
            right: encode_morphism(right),
            left_defect: Box::new(encode_verdict(left_defect)),
            right_defect: Box::new(encode_verdict(right_defect)),
        },
        Certificate::NoInverse { side } => CertificateJson::NoInverse { side: side_name(*side).to_string() },
    }
}

pub fn decode_certificate(alg: &Arc<PathAlgebra>, c: &CertificateJson) -> Result<Certificate> {
    let m = |f: &MorphismJson| decode_morphism(alg, f);
    Ok(match c {
        CertificateJson::Factorization { first, second } => Certificate::Factorization { first: m(first)?, second: m(second)? },
        CertificateJson::NoFactorization { hom_dim, ideal_dim } => {
            Certificate::NoFactorization { hom_dim: *hom_dim, ideal_dim: *ideal_dim }
        }
        CertificateJson::Section { precover, section } => Certificate::Section { precover: m(precover)?, section: m(section)? },
        CertificateJson::NoSection { precover } => Certificate::NoSection { precover: m(precover)? },
        CertificateJson::Square { approximation, corner, first, second, inner } => Certificate::Square {
            approximation: m(approximation)?,
            square: Square { corner: decode_module(alg, corner)?, first: m(first)?, second: m(second)? },
            inner: Box::new(decode_verdict(alg, inner)?),
        },
        CertificateJson::Inverse { left, right, left_defect, right_defect } => Certificate::Inverse {
            left: m(left)?,
            right: m(right)?,
            left_defect: Box::new(decode_verdict(alg, left_defect)?),
            right_defect: Box::new(decode_verdict(alg, right_defect)?),
        },
        CertificateJson::NoInverse { side } => Certificate::NoInverse {
            side: match side.as_str() {
                "left" => Side::Left,
                "right" => Side::Right,
                other => return Err(CliError::validation("certificate", format!("unknown side `{other}`"))),
            },
        },
    })
}

pub fn encode_verdict(v: &StableVerdict) -> VerdictJson {
    VerdictJson {
        decision: v.decision.name().to_string(),
        answer: v.answer,
        route: v.route.to_string(),
        cross_check: v.cross_check.map(str::to_string),
        certificate: encode_certificate(&v.certificate),
    }
}

/// Rebuilds a verdict. The route is not needed for verification and is
/// replaced by [`IMPORTED_ROUTE`].
pub fn decode_verdict(alg: &Arc<PathAlgebra>, v: &VerdictJson) -> Result<StableVerdict> {
    let decision = Decision::from_name(&v.decision)
        .ok_or_else(|| CliError::validation("verdict", format!("unknown decision `{}`", v.decision)))?;
    Ok(StableVerdict {
        decision,
        answer: v.answer,
        route: IMPORTED_ROUTE,
        cross_check: None,
        certificate: decode_certificate(alg, &v.certificate)?,
    })
}

pub fn encode_witness(w: &Witness) -> WitnessJson {
    WitnessJson {
        morphism: encode_morphism(&w.morphism),
        origin: w.origin.clone(),
        verdicts: w.verdicts.iter().map(encode_verdict).collect(),
    }
}

pub fn decode_witness(alg: &Arc<PathAlgebra>, w: &WitnessJson) -> Result<Witness> {
    Ok(Witness {
        morphism: decode_morphism(alg, &w.morphism)?,
        origin: w.origin.clone(),
        verdicts: w.verdicts.iter().map(|v| decode_verdict(alg, v)).collect::<Result<_>>()?,
    })
}
