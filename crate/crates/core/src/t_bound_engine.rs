//! Bounds on `#Q`, where Q is the set of rational places at which every
//! coordinate function is defined and nonzero.
//!
//! δ_T replaces `q` by `q - 1` in the decomposition and additionally asks
//! for a function with pole divisor exactly `lambda P_j` that takes values
//! in T = F_q^* on Q. A monomial in the coordinate functions is such a
//! function automatically, so the pole monomial doubles as that witness.

use serde::{Deserialize, Serialize};

use crate::bound_engine::{self, certify_path, BoundCertificate, BoundError, NegligibilityWitness};
use crate::field_model::{CurveModel, DivisorIndex, ExponentVector};
use crate::lattice::{self, EdgeWeights, Rule, DEFAULT_NODE_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleWitness {
    pub lambda: i64,
    pub monomial: Option<ExponentVector>,
}

/// Which elements of `H(P_j)` up to `up_to` have an exact-pole monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub place: String,
    pub up_to: i64,
    pub verified: bool,
    /// True when `verified` extends to all of `H(P_j)`: every minimal
    /// generator is covered and products of witnesses stay feasible.
    pub covers_semigroup: bool,
    pub witnesses: Vec<PoleWitness>,
}

pub fn verify_t_hypothesis(
    model: &CurveModel,
    j: usize,
    up_to: i64,
) -> Result<HypothesisReport, BoundError> {
    let semigroup = model.place_semigroup(j);
    let mut witnesses = Vec::new();
    for lambda in semigroup.elements_up_to(up_to) {
        let monomial = model.monomial_with_exact_pole(j, lambda)?;
        witnesses.push(PoleWitness { lambda, monomial });
    }
    let verified = witnesses.iter().all(|w| w.monomial.is_some());
    // exponent bounds of 0 (or none) are preserved under products
    let closed = model
        .spec()
        .exponent_lower_bounds
        .iter()
        .all(|b| matches!(b, None | Some(0)));
    let generators_covered = semigroup
        .minimal_generators()
        .last()
        .is_some_and(|&g| g <= up_to);
    Ok(HypothesisReport {
        place: model.distinguished_name(j).to_string(),
        up_to,
        verified,
        covers_semigroup: verified && closed && generators_covered,
        witnesses,
    })
}

/// Hypothesis check wide enough to enable the δ_T horizon at `P_j`.
pub fn horizon_hypothesis(model: &CurveModel, j: usize) -> Result<HypothesisReport, BoundError> {
    let semigroup = model.place_semigroup(j);
    let up_to = (semigroup.conductor() + semigroup.multiplicity())
        .max(lattice::rule_horizon(model, Rule::Unit, j));
    verify_t_hypothesis(model, j, up_to)
}

/// `(q - 1) lambda_j + 2g - 1`.
pub fn t_horizon(model: &CurveModel, j: usize) -> i64 {
    lattice::rule_horizon(model, Rule::Unit, j)
}

/// δ_T(i, i + e_j), checking the unit hypothesis at `P_j` first.
pub fn t_delta(
    model: &CurveModel,
    i: &DivisorIndex,
    j: usize,
) -> Result<(u8, NegligibilityWitness), BoundError> {
    let ready = horizon_hypothesis(model, j)?.covers_semigroup;
    t_delta_with(model, i, j, ready)
}

pub(crate) fn t_delta_with(
    model: &CurveModel,
    i: &DivisorIndex,
    j: usize,
    horizon_ready: bool,
) -> Result<(u8, NegligibilityWitness), BoundError> {
    bound_engine::negligibility(model, i, j, Rule::Unit, horizon_ready)
}

/// `(q - 1)(#Q + 2g) + 2g - 1`. Depends on the quantity being bounded, so
/// it is only ever reported, never searched to.
pub fn m_t_formula(q: i64, g: i64, q_size: i64) -> i64 {
    (q - 1) * (q_size + 2 * g) + 2 * g - 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathOrSearch {
    Path(Vec<DivisorIndex>),
    Search { max_width: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TBoundCertificate {
    pub certificate: BoundCertificate,
    pub hypothesis_report: Vec<HypothesisReport>,
    /// Rational places outside Q, supplied by the caller.
    pub excluded_count: i64,
    pub q_bound: i64,
    pub total_bound: i64,
    /// `#Q + 2g` evaluated at `q_bound`.
    pub lambda_total: i64,
    /// `m_t_formula` evaluated at `q_bound`.
    pub m_t: i64,
}

pub fn t_path_bound(
    model: &CurveModel,
    mode: &PathOrSearch,
    excluded_count: i64,
) -> Result<TBoundCertificate, BoundError> {
    if excluded_count < 0 {
        return Err(BoundError::InvalidPath(format!(
            "excluded count {excluded_count} is negative"
        )));
    }
    let reports = (0..model.n())
        .map(|j| horizon_hypothesis(model, j))
        .collect::<Result<Vec<_>, _>>()?;
    let ready: Vec<bool> = reports.iter().map(|r| r.covers_semigroup).collect();
    if !ready.iter().any(|&r| r) {
        return Err(BoundError::HypothesisUnverified(reports[0].place.clone()));
    }
    let mut weights = EdgeWeights::new(model, Rule::Unit, ready);
    let certificate = match mode {
        PathOrSearch::Path(path) => certify_path(&mut weights, path)?,
        PathOrSearch::Search { max_width } => {
            let found = lattice::widening_search(&mut weights, *max_width, DEFAULT_NODE_BUDGET)?;
            certify_path(&mut weights, &found.path)?
        }
    };
    let q_bound = certificate.weight;
    Ok(TBoundCertificate {
        hypothesis_report: reports,
        excluded_count,
        q_bound,
        total_bound: q_bound + excluded_count,
        lambda_total: q_bound + 2 * model.genus(),
        m_t: m_t_formula(model.q(), model.genus(), q_bound),
        certificate,
    })
}
