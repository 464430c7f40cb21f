//! The multi-point bound `N(F) <= n + sum of δ` along a lattice path.
//!
//! An edge `(i, i + e_j)` is negligible (δ = 0) when `L(i) = L(i + e_j)`,
//! when `i_j + 1 = mu + q lambda` with `lambda` a nonzero element of
//! `H(P_j)` and `mu` in `H_i(P_j)`, or when `deg(i) >= q lambda_j + 2g - 1`.
//! The last case is a theorem about the function field itself and is
//! applied even where the monomial model finds no decomposition.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field_model::{CurveModel, DivisorIndex, ExponentVector, ModelError, ModelSpec};
use crate::lattice::{
    self, extension_direction, path_directions, EdgeWeights, Rule, Window, DEFAULT_NODE_BUDGET,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("lattice window has {nodes} nodes, above the budget of {budget}")]
    CapExceeded { nodes: u128, budget: u128 },
    #[error("unit hypothesis not verified at place {0}; its horizon cannot be used")]
    HypothesisUnverified(String),
    #[error("{0}")]
    NoPath(String),
}

impl BoundError {
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            BoundError::CapExceeded { .. } | BoundError::Model(ModelError::CapExceeded { .. })
        )
    }
}

/// Why an edge has the weight it has.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NegligibilityWitness {
    /// No monomial has pole order `i_j + 1` at `P_j`, so `L(i) = L(i + e_j)`.
    SpaceEquality,
    /// `mu + c lambda = i_j + 1` with `c = q` (or `q - 1` for δ_T);
    /// `witness_monomial` lies in some `L(i + k e_j)` and has pole order `mu`
    /// at `P_j`. For δ_T, `pole_monomial` is the function of pole divisor
    /// `lambda P_j` that is a unit on Q.
    Decomposition {
        lambda: i64,
        mu: i64,
        witness_monomial: ExponentVector,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pole_monomial: Option<ExponentVector>,
    },
    HorizonRule { threshold: i64 },
    NonNegligible,
}

impl NegligibilityWitness {
    pub fn label(&self) -> String {
        match self {
            NegligibilityWitness::SpaceEquality => "L(i) = L(i+e_j)".into(),
            NegligibilityWitness::Decomposition { lambda, mu, .. } => {
                format!("lambda={lambda} mu={mu}")
            }
            NegligibilityWitness::HorizonRule { threshold } => format!("deg >= {threshold}"),
            NegligibilityWitness::NonNegligible => "non-negligible".into(),
        }
    }
}

/// δ(i, i + e_j) for the `j`-th distinguished place, with its witness.
pub fn delta(
    model: &CurveModel,
    i: &DivisorIndex,
    j: usize,
) -> Result<(u8, NegligibilityWitness), BoundError> {
    negligibility(model, i, j, Rule::Multipoint, true)
}

/// Shared by δ and δ_T; `horizon_ready` gates the horizon rule.
pub(crate) fn negligibility(
    model: &CurveModel,
    i: &DivisorIndex,
    j: usize,
    rule: Rule,
    horizon_ready: bool,
) -> Result<(u8, NegligibilityWitness), BoundError> {
    if model.pole_increment_witness(i, j)?.is_none() {
        return Ok((0, NegligibilityWitness::SpaceEquality));
    }
    let factor = rule.multiplier(model.q());
    let target = i.0[j] + 1;
    let cutoff = model.h_set_lower_cutoff(i, j);
    let semigroup = model.place_semigroup(j);
    let mut lambda = semigroup.multiplicity();
    while target - factor * lambda >= cutoff {
        if semigroup.contains(lambda) {
            let pole_monomial = match rule {
                Rule::Multipoint => None,
                Rule::Unit => match model.monomial_with_exact_pole(j, lambda)? {
                    Some(f) => Some(f),
                    None => {
                        lambda += 1;
                        continue;
                    }
                },
            };
            let mu = target - factor * lambda;
            if let Some(witness_monomial) = model.h_set_witness(i, j, mu)? {
                return Ok((
                    0,
                    NegligibilityWitness::Decomposition {
                        lambda,
                        mu,
                        witness_monomial,
                        pole_monomial,
                    },
                ));
            }
        }
        lambda += 1;
    }
    let threshold = lattice::rule_horizon(model, rule, j);
    if i.degree() >= threshold {
        if !horizon_ready {
            return Err(BoundError::HypothesisUnverified(
                model.distinguished_name(j).to_string(),
            ));
        }
        return Ok((0, NegligibilityWitness::HorizonRule { threshold }));
    }
    Ok((1, NegligibilityWitness::NonNegligible))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HorizonMode {
    /// `q lambda_j + 2g - 1`
    Corollary,
    /// `(q + 2)(g + 1) - 3`, independent of the place.
    Proposition,
}

pub fn horizon(model: &CurveModel, j: usize, mode: HorizonMode) -> i64 {
    match mode {
        HorizonMode::Corollary => lattice::rule_horizon(model, Rule::Multipoint, j),
        HorizonMode::Proposition => (model.q() + 2) * (model.genus() + 1) - 3,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    /// Index of the distinguished place stepped in.
    pub direction: usize,
    pub delta: u8,
    pub witness: NegligibilityWitness,
}

/// A checked lattice path with the weight of every edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub rule: Rule,
    pub model_name: String,
    pub model_sha256: String,
    pub model: ModelSpec,
    pub places: Vec<String>,
    pub path: Vec<DivisorIndex>,
    pub edges: Vec<EdgeRecord>,
    /// Direction in which the path is continued past its end with δ = 0.
    pub extension_direction: usize,
    pub horizon: i64,
    pub weight: i64,
    /// `n + weight` for the multi-point rule; equal to `weight` for δ_T.
    pub bound: i64,
}

impl BoundCertificate {
    /// Indices `k` of the edges `i^(k-1) -> i^(k)` with δ = 1.
    pub fn non_negligible_steps(&self) -> Vec<i64> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.delta == 1)
            .map(|(k, _)| k as i64)
            .collect()
    }

    pub fn n(&self) -> usize {
        self.places.len()
    }
}

/// Weighs an explicit path.
pub fn evaluate_path(model: &CurveModel, path: &[DivisorIndex]) -> Result<BoundCertificate, BoundError> {
    let mut weights = EdgeWeights::multipoint(model);
    certify_path(&mut weights, path)
}

pub(crate) fn certify_path(
    weights: &mut EdgeWeights<'_>,
    path: &[DivisorIndex],
) -> Result<BoundCertificate, BoundError> {
    let model = weights.model();
    let directions = path_directions(path, model.n())?;
    let last = path.last().expect("nonempty");
    let (extension, horizon) = extension_direction(weights, last, directions.last().copied())
        .ok_or_else(|| {
            BoundError::InvalidPath(format!(
                "path ends at degree {} below every available horizon",
                last.degree()
            ))
        })?;
    let mut edges = Vec::with_capacity(directions.len());
    for (from, &direction) in path.iter().zip(&directions) {
        let w = weights.weight(from, direction)?;
        edges.push(EdgeRecord {
            direction,
            delta: w.delta,
            witness: w.witness.clone(),
        });
    }
    let weight: i64 = edges.iter().map(|e| e.delta as i64).sum();
    let bound = match weights.rule() {
        Rule::Multipoint => model.n() as i64 + weight,
        Rule::Unit => weight,
    };
    Ok(BoundCertificate {
        rule: weights.rule(),
        model_name: model.name().to_string(),
        model_sha256: model.fingerprint(),
        model: model.spec().clone(),
        places: (0..model.n()).map(|j| model.distinguished_name(j).to_string()).collect(),
        path: path.to_vec(),
        edges,
        extension_direction: extension,
        horizon,
        weight,
        bound,
    })
}

/// Minimum-weight path over strip windows of growing width, at most
/// `max_width` in the non-primary coordinates.
pub fn min_weight_path(model: &CurveModel, max_width: i64) -> Result<BoundCertificate, BoundError> {
    min_weight_path_with_budget(model, max_width, DEFAULT_NODE_BUDGET)
}

pub fn min_weight_path_with_budget(
    model: &CurveModel,
    max_width: i64,
    node_budget: u128,
) -> Result<BoundCertificate, BoundError> {
    let mut weights = EdgeWeights::multipoint(model);
    let found = lattice::widening_search(&mut weights, max_width, node_budget)?;
    certify_path(&mut weights, &found.path)
}

/// Minimum-weight path inside a fixed window, from its degree -1 nodes to
/// the smallest horizon.
pub fn min_weight_path_in_window(
    model: &CurveModel,
    window: &Window,
) -> Result<BoundCertificate, BoundError> {
    let mut weights = EdgeWeights::multipoint(model);
    let target = weights.target_degree().expect("multipoint horizons always exist");
    let found = lattice::dijkstra(&mut weights, window, target, DEFAULT_NODE_BUDGET)?
        .ok_or_else(|| BoundError::NoPath(format!("window reaches no node of degree {target}")))?;
    certify_path(&mut weights, &found.path)
}

/// `n + ` the weight of the best path, widening up to the full lattice.
pub fn multipoint_bound(model: &CurveModel) -> Result<i64, BoundError> {
    Ok(min_weight_path(model, default_width(model))?.bound)
}

/// Widest window the default policy will try.
pub fn default_width(model: &CurveModel) -> i64 {
    (0..model.n())
        .map(|j| horizon(model, j, HorizonMode::Corollary))
        .min()
        .unwrap_or(0)
        + 1
}
