//! Certificate files and their independent re-verification.
//!
//! A certificate embeds the model it was computed from, so it can be
//! checked without any other input. Verification rebuilds the model,
//! recomputes every edge weight without memoization, checks that each
//! recorded witness really certifies its edge, and recomputes the bound.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bound_engine::{BoundCertificate, EdgeRecord, NegligibilityWitness};
use crate::field_model::{CurveModel, DivisorIndex, ModelError};
use crate::lattice::{path_directions, EdgeWeights, Rule};
use crate::t_bound_engine::{horizon_hypothesis, m_t_formula, TBoundCertificate};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Multipoint(BoundCertificate),
    Unit(TBoundCertificate),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificate does not parse: {0}")]
    Parse(String),
    #[error("embedded model is invalid: {0}")]
    Model(#[from] ModelError),
    #[error("model fingerprint mismatch: certificate says {recorded}, model hashes to {actual}")]
    FingerprintMismatch { recorded: String, actual: String },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("mismatch at edge {edge}: {detail}")]
    MismatchAt { edge: usize, detail: String },
    #[error("horizon: {0}")]
    Horizon(String),
    #[error("totals: {0}")]
    Totals(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verified {
    pub edges_checked: usize,
    pub weight: i64,
    pub bound: i64,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("certificate serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Certificate, CertificateError> {
        serde_json::from_str(text).map_err(|e| CertificateError::Parse(e.to_string()))
    }

    /// The number the certificate proves: `N(F) <= bound` for the
    /// multi-point rule, the total `#Q + excluded` for the unit rule.
    pub fn headline_bound(&self) -> i64 {
        match self {
            Certificate::Multipoint(c) => c.bound,
            Certificate::Unit(t) => t.total_bound,
        }
    }

    pub fn verify(&self) -> Result<Verified, CertificateError> {
        match self {
            Certificate::Multipoint(cert) => {
                if cert.rule != Rule::Multipoint {
                    return Err(CertificateError::Totals("rule must be multipoint".into()));
                }
                let model = rebuild(cert)?;
                let weights = EdgeWeights::multipoint(&model);
                check_path(&weights, cert)
            }
            Certificate::Unit(t) => verify_unit(t),
        }
    }
}

fn rebuild(cert: &BoundCertificate) -> Result<CurveModel, CertificateError> {
    let model = CurveModel::new(cert.model.clone())?;
    let actual = model.fingerprint();
    if actual != cert.model_sha256 {
        return Err(CertificateError::FingerprintMismatch {
            recorded: cert.model_sha256.clone(),
            actual,
        });
    }
    let names: Vec<&str> = (0..model.n()).map(|j| model.distinguished_name(j)).collect();
    if names != cert.places.iter().map(String::as_str).collect::<Vec<_>>() {
        return Err(CertificateError::Totals(format!(
            "places {:?} differ from the model's distinguished places {names:?}",
            cert.places
        )));
    }
    Ok(model)
}

fn verify_unit(t: &TBoundCertificate) -> Result<Verified, CertificateError> {
    let cert = &t.certificate;
    if cert.rule != Rule::Unit {
        return Err(CertificateError::Totals("rule must be unit".into()));
    }
    let model = rebuild(cert)?;
    let mut ready = Vec::with_capacity(model.n());
    for j in 0..model.n() {
        let report = horizon_hypothesis(&model, j).map_err(|e| CertificateError::Totals(e.to_string()))?;
        let recorded = t.hypothesis_report.get(j);
        if recorded.map(|r| r.covers_semigroup) != Some(report.covers_semigroup) {
            return Err(CertificateError::Totals(format!(
                "hypothesis report for {} does not match recomputation",
                report.place
            )));
        }
        ready.push(report.covers_semigroup);
    }
    let weights = EdgeWeights::new(&model, Rule::Unit, ready);
    let verified = check_path(&weights, cert)?;
    let expect = |what: &str, recorded: i64, actual: i64| {
        if recorded == actual {
            Ok(())
        } else {
            Err(CertificateError::Totals(format!("{what} is {recorded}, recomputed {actual}")))
        }
    };
    expect("q_bound", t.q_bound, verified.weight)?;
    expect("total_bound", t.total_bound, verified.weight + t.excluded_count)?;
    expect("lambda_total", t.lambda_total, verified.weight + 2 * model.genus())?;
    expect("m_t", t.m_t, m_t_formula(model.q(), model.genus(), verified.weight))?;
    if t.excluded_count < 0 {
        return Err(CertificateError::Totals("negative excluded count".into()));
    }
    Ok(Verified {
        bound: t.total_bound,
        ..verified
    })
}

fn check_path(weights: &EdgeWeights<'_>, cert: &BoundCertificate) -> Result<Verified, CertificateError> {
    let model = weights.model();
    let directions =
        path_directions(&cert.path, model.n()).map_err(|e| CertificateError::InvalidPath(e.to_string()))?;
    if directions.len() != cert.edges.len() {
        return Err(CertificateError::InvalidPath(format!(
            "{} steps but {} edge records",
            directions.len(),
            cert.edges.len()
        )));
    }
    for (k, ((from, &direction), edge)) in cert.path.iter().zip(&directions).zip(&cert.edges).enumerate() {
        if edge.direction != direction {
            return Err(CertificateError::MismatchAt {
                edge: k,
                detail: format!("recorded direction {} but the path steps in {direction}", edge.direction),
            });
        }
        let fresh = weights.compute(from, direction).map_err(|e| CertificateError::MismatchAt {
            edge: k,
            detail: e.to_string(),
        })?;
        if fresh.delta != edge.delta {
            return Err(CertificateError::MismatchAt {
                edge: k,
                detail: format!("recorded delta {} but recomputed {}", edge.delta, fresh.delta),
            });
        }
        if !witness_holds(weights, from, edge).map_err(|e| CertificateError::MismatchAt {
            edge: k,
            detail: e.to_string(),
        })? {
            return Err(CertificateError::MismatchAt {
                edge: k,
                detail: format!("witness {:?} does not certify the edge", edge.witness),
            });
        }
    }

    let last = cert.path.last().expect("path_directions rejects empty paths");
    let ext = cert.extension_direction;
    let horizon = (ext < model.n())
        .then(|| weights.horizon(ext))
        .flatten()
        .ok_or_else(|| CertificateError::Horizon(format!("no horizon available in direction {ext}")))?;
    if horizon != cert.horizon {
        return Err(CertificateError::Horizon(format!(
            "recorded horizon {} but direction {ext} has horizon {horizon}",
            cert.horizon
        )));
    }
    if last.degree() < horizon {
        return Err(CertificateError::Horizon(format!(
            "path ends at degree {} below the horizon {horizon}",
            last.degree()
        )));
    }

    let weight: i64 = cert.edges.iter().map(|e| e.delta as i64).sum();
    if weight != cert.weight {
        return Err(CertificateError::Totals(format!(
            "weight is {}, edges sum to {weight}",
            cert.weight
        )));
    }
    let bound = match cert.rule {
        Rule::Multipoint => model.n() as i64 + weight,
        Rule::Unit => weight,
    };
    if bound != cert.bound {
        return Err(CertificateError::Totals(format!(
            "bound is {}, recomputed {bound}",
            cert.bound
        )));
    }
    Ok(Verified {
        edges_checked: cert.edges.len(),
        weight,
        bound,
    })
}

/// Checks the recorded witness on its own terms, so hand-written
/// certificates may use any valid decomposition.
fn witness_holds(
    weights: &EdgeWeights<'_>,
    from: &DivisorIndex,
    edge: &EdgeRecord,
) -> Result<bool, ModelError> {
    let model = weights.model();
    let rule = weights.rule();
    let j = edge.direction;
    Ok(match &edge.witness {
        NegligibilityWitness::NonNegligible => edge.delta == 1,
        NegligibilityWitness::SpaceEquality => {
            edge.delta == 0 && !model.realizes_pole_increment(from, j)?
        }
        NegligibilityWitness::HorizonRule { threshold } => {
            edge.delta == 0
                && weights.horizon(j) == Some(*threshold)
                && from.degree() >= *threshold
        }
        NegligibilityWitness::Decomposition {
            lambda,
            mu,
            witness_monomial,
            pole_monomial,
        } => {
            let factor = rule.multiplier(model.q());
            let pole_ok = match rule {
                Rule::Multipoint => true,
                Rule::Unit => pole_monomial
                    .as_ref()
                    .is_some_and(|f| model.exact_pole_certified(j, *lambda, f)),
            };
            edge.delta == 0
                && *lambda > 0
                && model.place_semigroup(j).contains(*lambda)
                && mu + factor * lambda == from.0[j] + 1
                && model.witness_certifies(from, j, *mu, witness_monomial)
                && pole_ok
        }
    })
}
