//! The δ-weighted lattice of divisor indices and the path search over it.
//!
//! Nodes are [`DivisorIndex`] tuples, edges go from `i` to `i + e_j`, and
//! the weight of an edge is δ (or δ_T). Paths start at degree -1 and stop at
//! the smallest horizon the rule allows; everything past a horizon is
//! negligible in that direction.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use serde::{Deserialize, Serialize};

use crate::bound_engine::{self, BoundError, NegligibilityWitness};
use crate::field_model::{CurveModel, DivisorIndex};
use crate::t_bound_engine;

/// Default number of lattice nodes a single search may touch.
pub const DEFAULT_NODE_BUDGET: u128 = 1_000_000;

/// Which notion of negligibility weighs the edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// δ, with decompositions `mu + q lambda = i_j + 1`.
    Multipoint,
    /// δ_T, with decompositions `mu + (q-1) lambda = i_j + 1` and a pole
    /// monomial that is a unit on Q.
    Unit,
}

impl Rule {
    pub fn multiplier(self, q: i64) -> i64 {
        match self {
            Rule::Multipoint => q,
            Rule::Unit => q - 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWeight {
    pub delta: u8,
    pub witness: NegligibilityWitness,
}

/// Edge weights of one model under one rule, memoized by `(i, j)`.
///
/// `horizon_ready[j]` says whether the horizon rule may be used in
/// direction `j`; for δ_T it records whether the unit hypothesis was
/// verified at `P_j`.
pub struct EdgeWeights<'a> {
    model: &'a CurveModel,
    rule: Rule,
    horizon_ready: Vec<bool>,
    cache: HashMap<(DivisorIndex, usize), EdgeWeight>,
}

impl<'a> EdgeWeights<'a> {
    pub fn new(model: &'a CurveModel, rule: Rule, horizon_ready: Vec<bool>) -> Self {
        assert_eq!(horizon_ready.len(), model.n());
        EdgeWeights {
            model,
            rule,
            horizon_ready,
            cache: HashMap::new(),
        }
    }

    pub fn multipoint(model: &'a CurveModel) -> Self {
        Self::new(model, Rule::Multipoint, vec![true; model.n()])
    }

    pub fn model(&self) -> &'a CurveModel {
        self.model
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    /// Degree from which every edge in direction `j` is negligible, when
    /// the rule makes one available.
    pub fn horizon(&self, j: usize) -> Option<i64> {
        self.horizon_ready[j].then(|| rule_horizon(self.model, self.rule, j))
    }

    /// Smallest available horizon.
    pub fn target_degree(&self) -> Option<i64> {
        (0..self.model.n()).filter_map(|j| self.horizon(j)).min()
    }

    /// Uncached evaluation.
    pub fn compute(&self, i: &DivisorIndex, j: usize) -> Result<EdgeWeight, BoundError> {
        let (delta, witness) = match self.rule {
            Rule::Multipoint => bound_engine::delta(self.model, i, j)?,
            Rule::Unit => t_bound_engine::t_delta_with(self.model, i, j, self.horizon_ready[j])?,
        };
        Ok(EdgeWeight { delta, witness })
    }

    pub fn weight(&mut self, i: &DivisorIndex, j: usize) -> Result<&EdgeWeight, BoundError> {
        let key = (i.clone(), j);
        if !self.cache.contains_key(&key) {
            let computed = self.compute(i, j)?;
            self.cache.insert(key.clone(), computed);
        }
        Ok(&self.cache[&key])
    }

    pub fn cached_edges(&self) -> usize {
        self.cache.len()
    }
}

pub(crate) fn rule_horizon(model: &CurveModel, rule: Rule, j: usize) -> i64 {
    rule.multiplier(model.q()) * model.multiplicity(j) + 2 * model.genus() - 1
}

/// Axis-aligned box of divisor indices, inclusive on both ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len());
        Window { lo, hi }
    }

    /// Coordinate `primary` in `[-1, top]`, every other one in `[0, width]`.
    pub fn strip(n: usize, primary: usize, top: i64, width: i64) -> Self {
        let mut lo = vec![0; n];
        let mut hi = vec![width; n];
        lo[primary] = -1;
        hi[primary] = top;
        Window { lo, hi }
    }

    pub fn contains(&self, i: &DivisorIndex) -> bool {
        i.0.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    pub fn node_count(&self) -> u128 {
        self.lo
            .iter()
            .zip(&self.hi)
            .fold(1u128, |acc, (lo, hi)| {
                acc.saturating_mul((hi - lo + 1).max(0) as u128)
            })
    }

    /// Window nodes of the given degree, in lexicographic order.
    pub fn nodes_of_degree(&self, degree: i64) -> Vec<DivisorIndex> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.lo.len());
        self.collect_degree(degree, &mut current, &mut out);
        out
    }

    fn collect_degree(&self, remaining: i64, current: &mut Vec<i64>, out: &mut Vec<DivisorIndex>) {
        let k = current.len();
        if k == self.lo.len() {
            if remaining == 0 {
                out.push(DivisorIndex(current.clone()));
            }
            return;
        }
        let rest_lo: i64 = self.lo[k + 1..].iter().sum();
        let rest_hi: i64 = self.hi[k + 1..].iter().sum();
        let from = self.lo[k].max(remaining - rest_hi);
        let to = self.hi[k].min(remaining - rest_lo);
        for v in from..=to {
            current.push(v);
            self.collect_degree(remaining - v, current, out);
            current.pop();
        }
    }
}

/// A minimum-weight path found by [`dijkstra`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundPath {
    pub weight: i64,
    pub path: Vec<DivisorIndex>,
}

/// Dijkstra from every degree -1 node of `window` to the first node of
/// degree `target` that is popped. Equal-weight frontier nodes are popped
/// in lexicographic order of their indices, so results are reproducible.
pub fn dijkstra(
    weights: &mut EdgeWeights<'_>,
    window: &Window,
    target: i64,
    node_budget: u128,
) -> Result<Option<FoundPath>, BoundError> {
    let nodes = window.node_count();
    if nodes > node_budget {
        return Err(BoundError::CapExceeded {
            nodes,
            budget: node_budget,
        });
    }
    let n = weights.model().n();
    let mut best: HashMap<DivisorIndex, i64> = HashMap::new();
    let mut parent: HashMap<DivisorIndex, DivisorIndex> = HashMap::new();
    let mut heap = BinaryHeap::new();
    for source in window.nodes_of_degree(-1) {
        best.insert(source.clone(), 0);
        heap.push(Reverse((0i64, source)));
    }
    while let Some(Reverse((dist, node))) = heap.pop() {
        if best.get(&node).is_some_and(|&d| d < dist) {
            continue;
        }
        if node.degree() == target {
            let mut path = vec![node.clone()];
            let mut cursor = node;
            while let Some(prev) = parent.get(&cursor) {
                path.push(prev.clone());
                cursor = prev.clone();
            }
            path.reverse();
            return Ok(Some(FoundPath { weight: dist, path }));
        }
        for j in 0..n {
            let next = node.step(j);
            if !window.contains(&next) {
                continue;
            }
            let nd = dist + weights.weight(&node, j)?.delta as i64;
            let improves = best.get(&next).is_none_or(|&d| nd < d);
            if improves {
                best.insert(next.clone(), nd);
                parent.insert(next.clone(), node.clone());
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(None)
}

/// Progressive widening: for widths `0, 1, ..., max_width` run
/// [`dijkstra`] from every start `-e_p` on the strip windows and keep the
/// lightest path. Widening stops early only when the next window would
/// exceed the node budget; the best path so far is returned then.
pub fn widening_search(
    weights: &mut EdgeWeights<'_>,
    max_width: i64,
    node_budget: u128,
) -> Result<FoundPath, BoundError> {
    let model = weights.model();
    let target = weights
        .target_degree()
        .ok_or_else(|| BoundError::HypothesisUnverified(model.distinguished_name(0).into()))?;
    let n = model.n();
    let widest = if n == 1 { 0 } else { max_width.clamp(0, target + 1) };
    let mut best: Option<FoundPath> = None;
    for width in 0..=widest {
        let mut round: Option<FoundPath> = None;
        for start in 0..n {
            let window = Window::strip(n, start, target, width);
            let found = match dijkstra(weights, &window, target, node_budget) {
                Err(e) if e.is_cap() && best.is_some() => return Ok(best.expect("checked")),
                other => other?,
            };
            if let Some(found) = found {
                if round.as_ref().is_none_or(|r| found.weight < r.weight) {
                    round = Some(found);
                }
            }
        }
        if let Some(round) = round {
            if best.as_ref().is_none_or(|b| round.weight < b.weight) {
                best = Some(round);
            }
        }
    }
    best.ok_or_else(|| BoundError::NoPath(format!("no path reaches degree {target}")))
}

/// Checks the shape of a path and returns the direction of every step.
pub fn path_directions(path: &[DivisorIndex], n: usize) -> Result<Vec<usize>, BoundError> {
    let first = path
        .first()
        .ok_or_else(|| BoundError::InvalidPath("empty path".into()))?;
    if let Some(bad) = path.iter().find(|i| i.len() != n) {
        return Err(BoundError::InvalidPath(format!(
            "{bad} has {} coordinates, expected {n}",
            bad.len()
        )));
    }
    if first.degree() != -1 {
        return Err(BoundError::InvalidPath(format!(
            "path starts at {first} of degree {}, expected -1",
            first.degree()
        )));
    }
    path.windows(2)
        .enumerate()
        .map(|(k, pair)| {
            pair[0].unit_step_to(&pair[1]).ok_or_else(|| {
                BoundError::InvalidPath(format!(
                    "step {k} from {} to {} is not a unit step",
                    pair[0], pair[1]
                ))
            })
        })
        .collect()
}

/// Direction in which a path ending at `last` is extended past its end:
/// the last step direction when its horizon is reached, otherwise the
/// first direction whose horizon is reached.
pub fn extension_direction(
    weights: &EdgeWeights<'_>,
    last: &DivisorIndex,
    last_step: Option<usize>,
) -> Option<(usize, i64)> {
    let reached = |j: usize| weights.horizon(j).filter(|&h| last.degree() >= h).map(|h| (j, h));
    last_step
        .and_then(reached)
        .or_else(|| (0..weights.model().n()).find_map(reached))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strip_windows() {
        let w = Window::strip(2, 0, 29, 4);
        assert_eq!(w.node_count(), 31 * 5);
        assert_eq!(w.nodes_of_degree(-1), vec![DivisorIndex::new(vec![-1, 0])]);
        let ends = w.nodes_of_degree(29);
        assert_eq!(ends.len(), 5);
        assert_eq!(ends[0], DivisorIndex::new(vec![25, 4]));
        assert!(w.contains(&DivisorIndex::new(vec![24, 2])));
        assert!(!w.contains(&DivisorIndex::new(vec![24, 5])));
    }

    #[test]
    fn path_shape_checks() {
        let p = |v: &[[i64; 2]]| v.iter().map(|x| DivisorIndex::new(x.to_vec())).collect::<Vec<_>>();
        assert_eq!(path_directions(&p(&[[-1, 0], [0, 0], [0, 1]]), 2).unwrap(), vec![0, 1]);
        assert!(matches!(
            path_directions(&p(&[[0, 0], [1, 0]]), 2),
            Err(BoundError::InvalidPath(_))
        ));
        assert!(matches!(
            path_directions(&p(&[[-1, 0], [0, 1]]), 2),
            Err(BoundError::InvalidPath(_))
        ));
        assert!(matches!(path_directions(&[], 2), Err(BoundError::InvalidPath(_))));
    }
}
