//! Slow reference implementations.
//!
//! Nothing here shares code with the engines beyond the domain types and
//! the edge-weight definition itself: semigroup membership is recomputed
//! by a coin-change table, shifted sums by a double loop, and minimum
//! paths by a dynamic program over every node of a window.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::bound_engine::{self, BoundError};
use crate::field_model::{CurveModel, DivisorIndex};
use crate::lattice::Window;
use crate::t_bound_engine;

pub const MAX_DP_NODES: u128 = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("cap {cap} is below the required {needed}")]
    CapTooSmall { cap: i64, needed: i64 },
    #[error("generators must be positive with gcd 1")]
    BadGenerators,
    #[error("window has {nodes} nodes, exhaustive search allows {limit}")]
    WindowTooLarge { nodes: u128, limit: u128 },
    #[error("no path in the window reaches degree {0}")]
    NoPath(i64),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

/// `member[x]` for `0 <= x <= cap`.
fn membership(gens: &[i64], cap: i64) -> Vec<bool> {
    let mut member = vec![false; cap as usize + 1];
    member[0] = true;
    for x in 1..=cap as usize {
        member[x] = gens.iter().any(|&g| g as usize <= x && member[x - g as usize]);
    }
    member
}

/// Least positive element and conductor, read off a membership table.
fn lambda1_and_conductor(gens: &[i64]) -> Result<(i64, i64), OracleError> {
    if gens.is_empty() || gens.iter().any(|&g| g <= 0) {
        return Err(OracleError::BadGenerators);
    }
    let lambda1 = *gens.iter().min().expect("nonempty");
    let max = *gens.iter().max().expect("nonempty");
    // Frobenius number is below max^2 when the gcd is 1
    let horizon = max * max + max;
    let member = membership(gens, horizon);
    let last_gap = (0..=horizon).rev().find(|&x| !member[x as usize]);
    match last_gap {
        Some(f) if f + lambda1 >= horizon => Err(OracleError::BadGenerators),
        Some(f) => Ok((lambda1, f + 1)),
        None => Ok((lambda1, 0)),
    }
}

/// `H \ (eH* + H)` by listing every `e*lambda + lambda'` up to `cap`.
pub fn brute_shifted_complement(gens: &[i64], e: i64, cap: i64) -> Result<BTreeSet<i64>, OracleError> {
    let (lambda1, conductor) = lambda1_and_conductor(gens)?;
    let needed = e * lambda1 + conductor;
    if e <= 0 || cap < needed {
        return Err(OracleError::CapTooSmall { cap, needed });
    }
    let member = membership(gens, cap);
    let elements: Vec<i64> = (0..=cap).filter(|&x| member[x as usize]).collect();
    let mut shifted = vec![false; cap as usize + 1];
    for &lambda in elements.iter().filter(|&&x| x > 0) {
        for &rest in &elements {
            let s = e * lambda + rest;
            if s > cap {
                break;
            }
            shifted[s as usize] = true;
        }
    }
    Ok(elements.into_iter().filter(|&x| !shifted[x as usize]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyRow {
    pub e: i64,
    pub in_semigroup: bool,
    pub cardinality: i64,
    pub e_times_lambda1: i64,
}

impl AperyRow {
    pub fn equal(&self) -> bool {
        self.cardinality == self.e_times_lambda1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyReport {
    pub rows: Vec<AperyRow>,
}

impl AperyReport {
    /// Rows with `e` in H where the cardinality differs from `e * lambda1`.
    pub fn failures(&self) -> Vec<&AperyRow> {
        self.rows.iter().filter(|r| r.in_semigroup && !r.equal()).collect()
    }

    pub fn holds(&self) -> bool {
        self.failures().is_empty()
    }

    /// Rows with `e` outside H where equality happens anyway.
    pub fn coincidences(&self) -> Vec<&AperyRow> {
        self.rows.iter().filter(|r| !r.in_semigroup && r.equal()).collect()
    }
}

/// `#(H \ (eH* + H))` against `e * lambda1` for every `0 < e <= e_max`.
pub fn check_apery_proposition(gens: &[i64], e_max: i64) -> Result<AperyReport, OracleError> {
    let (lambda1, conductor) = lambda1_and_conductor(gens)?;
    let member = membership(gens, e_max.max(0));
    let mut rows = Vec::new();
    for e in 1..=e_max {
        let set = brute_shifted_complement(gens, e, e * lambda1 + conductor)?;
        rows.push(AperyRow {
            e,
            in_semigroup: member[e as usize],
            cardinality: set.len() as i64,
            e_times_lambda1: e * lambda1,
        });
    }
    Ok(AperyReport { rows })
}

fn window_nodes(window: &Window) -> Result<Vec<DivisorIndex>, OracleError> {
    let nodes = window.node_count();
    if nodes > MAX_DP_NODES {
        return Err(OracleError::WindowTooLarge {
            nodes,
            limit: MAX_DP_NODES,
        });
    }
    let mut all = vec![Vec::new()];
    for (&lo, &hi) in window.lo.iter().zip(&window.hi) {
        all = all
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (lo..=hi).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    Ok(all.into_iter().map(DivisorIndex).collect())
}

/// Minimum over all unit-step paths inside `window` from degree -1 to
/// `target`, by a layer-by-layer dynamic program.
fn layered_min(
    window: &Window,
    target: i64,
    n: usize,
    mut delta: impl FnMut(&DivisorIndex, usize) -> Result<u8, OracleError>,
) -> Result<(i64, Vec<DivisorIndex>), OracleError> {
    let nodes = window_nodes(window)?;
    let mut layers: Vec<Vec<DivisorIndex>> = Vec::new();
    for d in -1..=target {
        layers.push(nodes.iter().filter(|x| x.degree() == d).cloned().collect());
    }
    // best[node] = (weight, predecessor)
    let mut best: std::collections::HashMap<DivisorIndex, (i64, Option<DivisorIndex>)> =
        layers[0].iter().map(|x| (x.clone(), (0, None))).collect();
    for layer in &layers[..layers.len() - 1] {
        for node in layer {
            let Some(&(w, _)) = best.get(node) else { continue };
            for j in 0..n {
                let mut next = node.0.clone();
                next[j] += 1;
                let next = DivisorIndex(next);
                if !window.contains(&next) {
                    continue;
                }
                let cand = w + delta(node, j)? as i64;
                match best.get(&next) {
                    Some(&(old, _)) if old <= cand => {}
                    _ => {
                        best.insert(next, (cand, Some(node.clone())));
                    }
                }
            }
        }
    }
    let end = layers
        .last()
        .expect("at least one layer")
        .iter()
        .filter_map(|x| best.get(x).map(|b| (b.0, x.clone())))
        .min()
        .ok_or(OracleError::NoPath(target))?;
    let mut path = vec![end.1.clone()];
    while let Some((_, Some(prev))) = best.get(path.last().expect("nonempty")) {
        path.push(prev.clone());
    }
    path.reverse();
    Ok((end.0, path))
}

/// Exhaustive minimum path weight under δ, ending at the smallest
/// corollary horizon.
pub fn brute_min_path(model: &CurveModel, window: &Window) -> Result<(i64, Vec<DivisorIndex>), OracleError> {
    let target = (0..model.n())
        .map(|j| model.q() * model.place_semigroup(j).multiplicity() + 2 * model.genus() - 1)
        .min()
        .expect("at least one place");
    layered_min(window, target, model.n(), |i, j| {
        Ok(bound_engine::delta(model, i, j)?.0)
    })
}

/// As [`brute_min_path`] under δ_T, ending at the smallest unit horizon
/// among places whose hypothesis covers the semigroup.
pub fn brute_min_t_path(model: &CurveModel, window: &Window) -> Result<(i64, Vec<DivisorIndex>), OracleError> {
    let mut ready = Vec::new();
    for j in 0..model.n() {
        ready.push(t_bound_engine::horizon_hypothesis(model, j)?.covers_semigroup);
    }
    let target = (0..model.n())
        .filter(|&j| ready[j])
        .map(|j| (model.q() - 1) * model.place_semigroup(j).multiplicity() + 2 * model.genus() - 1)
        .min()
        .ok_or_else(|| BoundError::HypothesisUnverified(model.distinguished_name(0).into()))?;
    layered_min(window, target, model.n(), |i, j| {
        Ok(t_bound_engine::t_delta_with(model, i, j, ready[j])?.0)
    })
}
