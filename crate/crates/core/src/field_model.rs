//! Monomial Riemann-Roch models.
//!
//! A model lists coordinate functions `x_1..x_m` and, for a handful of
//! rational places, the valuation of each coordinate function there. The
//! space `L(i_1 P_1 + ... + i_n P_n)` is taken to be spanned by the monomials
//! `x^e` with `v_P(x^e) >= -i_P` at every listed place (auxiliary places get
//! `i_P = 0`) and `e_k >= b_k` for the declared exponent lower bounds.
//!
//! Every query below reduces to finding integer points of a bounded
//! polyhedron, see [`crate::polytope`].

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::polytope::{LinearSystem, PolytopeError, DEFAULT_BOX_CAP};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("model syntax error: {0}")]
    Syntax(String),
    #[error("model validation failed [{invariant}]: {detail}")]
    Validation { invariant: String, detail: String },
    #[error("unknown place {0:?}")]
    UnknownPlace(String),
    #[error("distinguished place index {index} out of range (model has {count})")]
    PlaceIndex { index: usize, count: usize },
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("constraint region is unbounded (model is not pointed)")]
    UnboundedRegion,
    #[error("search box holds {volume} points, above the cap of {cap}")]
    CapExceeded { volume: u128, cap: u128 },
    #[error("place {place}: derived semigroup does not have {expected} gaps ({detail})")]
    GapCountMismatch {
        place: String,
        expected: i64,
        detail: String,
    },
}

impl From<PolytopeError> for ModelError {
    fn from(err: PolytopeError) -> Self {
        match err {
            PolytopeError::Unbounded(_) => ModelError::UnboundedRegion,
            PolytopeError::CapExceeded { volume, cap } => ModelError::CapExceeded { volume, cap },
            PolytopeError::DimensionMismatch { expected, found } => {
                ModelError::DimensionMismatch { expected, found }
            }
        }
    }
}

/// Exponents of a monomial `x_1^{e_1} ... x_m^{e_m}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(m: usize) -> Self {
        ExponentVector(vec![0; m])
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// The tuple `i` indexing `L(i_1 P_1 + ... + i_n P_n)`, one entry per
/// distinguished place. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorIndex(pub Vec<i64>);

impl DivisorIndex {
    pub fn new(values: impl Into<Vec<i64>>) -> Self {
        DivisorIndex(values.into())
    }

    pub fn zero(n: usize) -> Self {
        DivisorIndex(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `self + e_j`
    pub fn step(&self, j: usize) -> DivisorIndex {
        let mut next = self.0.clone();
        next[j] += 1;
        DivisorIndex(next)
    }

    /// The `j` with `other == self + e_j`, if any.
    pub fn unit_step_to(&self, other: &DivisorIndex) -> Option<usize> {
        if self.len() != other.len() {
            return None;
        }
        let mut dir = None;
        for (j, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            match b - a {
                0 => {}
                1 if dir.is_none() => dir = Some(j),
                _ => return None,
            }
        }
        dir
    }
}

impl fmt::Display for DivisorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, ")")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceSpec {
    pub name: String,
    /// `v_P` of each coordinate function, in declaration order.
    pub valuations: Vec<i64>,
    pub distinguished: bool,
}

/// The model as written in a model file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub q: i64,
    pub genus: i64,
    pub functions: Vec<String>,
    pub places: Vec<PlaceSpec>,
    pub exponent_lower_bounds: Vec<Option<i64>>,
}

/// Valuation condition imposed at one listed place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaceConstraint {
    Free,
    Exactly(i64),
    AtLeast(i64),
}

impl ModelSpec {
    /// Parses a model file and checks its shape (not its invariants).
    pub fn from_yaml(text: &str) -> Result<ModelSpec, ModelError> {
        let spec: ModelSpec =
            serde_yaml::from_str(text).map_err(|e| ModelError::Syntax(e.to_string()))?;
        spec.check_shape()?;
        Ok(spec)
    }

    pub fn to_yaml(&self) -> String {
        serde_yaml::to_string(self).expect("model serializes")
    }

    fn check_shape(&self) -> Result<(), ModelError> {
        let m = self.functions.len();
        if m == 0 {
            return Err(ModelError::Syntax("no coordinate functions".into()));
        }
        if self.places.is_empty() {
            return Err(ModelError::Syntax("no places".into()));
        }
        if self.exponent_lower_bounds.len() != m {
            return Err(ModelError::Syntax(format!(
                "exponent_lower_bounds has {} entries for {m} functions",
                self.exponent_lower_bounds.len()
            )));
        }
        for place in &self.places {
            if place.valuations.len() != m {
                return Err(ModelError::Syntax(format!(
                    "place {} has {} valuations for {m} functions",
                    place.name,
                    place.valuations.len()
                )));
            }
            if place.valuations.iter().any(|v| v.abs() > 1 << 20) {
                return Err(ModelError::Syntax(format!(
                    "place {} has a valuation beyond 2^20",
                    place.name
                )));
            }
        }
        for (k, place) in self.places.iter().enumerate() {
            if self.places[..k].iter().any(|p| p.name == place.name) {
                return Err(ModelError::Syntax(format!("duplicate place {}", place.name)));
            }
        }
        if self.q < 2 || self.q > 1 << 20 {
            return Err(ModelError::Syntax(format!("q = {} out of range", self.q)));
        }
        if self.genus < 0 || self.genus > 1 << 16 {
            return Err(ModelError::Syntax(format!("genus = {} out of range", self.genus)));
        }
        Ok(())
    }

    pub fn place_position(&self, name: &str) -> Result<usize, ModelError> {
        self.places
            .iter()
            .position(|p| p.name == name)
            .ok_or_else(|| ModelError::UnknownPlace(name.to_string()))
    }

    fn valuation_at(&self, e: &[i64], place: usize) -> i64 {
        self.places[place].valuations.iter().zip(e).map(|(a, b)| a * b).sum()
    }

    /// Linear system for monomials meeting one condition per listed place,
    /// plus the exponent lower bounds.
    fn system(&self, constraints: &[PlaceConstraint]) -> Result<LinearSystem, ModelError> {
        if constraints.len() != self.places.len() {
            return Err(ModelError::DimensionMismatch {
                expected: self.places.len(),
                found: constraints.len(),
            });
        }
        let mut sys = LinearSystem::new(self.functions.len());
        for (place, constraint) in self.places.iter().zip(constraints) {
            match *constraint {
                PlaceConstraint::Free => {}
                PlaceConstraint::Exactly(v) => {
                    sys.equal_to(&place.valuations, v)?;
                }
                PlaceConstraint::AtLeast(v) => {
                    sys.at_least(&place.valuations, v)?;
                }
            }
        }
        for (k, bound) in self.exponent_lower_bounds.iter().enumerate() {
            if let Some(b) = *bound {
                sys.variable_at_least(k, b);
            }
        }
        Ok(sys)
    }

    fn first_feasible(
        &self,
        constraints: &[PlaceConstraint],
        cap: u128,
    ) -> Result<Option<ExponentVector>, ModelError> {
        Ok(self.system(constraints)?.first_point(cap)?.map(ExponentVector))
    }

    fn exact_pole(
        &self,
        place: usize,
        order: i64,
        cap: u128,
    ) -> Result<Option<ExponentVector>, ModelError> {
        let constraints: Vec<PlaceConstraint> = (0..self.places.len())
            .map(|p| {
                if p == place {
                    PlaceConstraint::Exactly(-order)
                } else {
                    PlaceConstraint::AtLeast(0)
                }
            })
            .collect();
        self.first_feasible(&constraints, cap)
    }

    /// Semigroup of pole orders at `place` of monomials regular elsewhere.
    /// Elements up to `2g + m` are searched, which covers every minimal
    /// generator; the result is certified by its gap count.
    pub(crate) fn derive_place_semigroup(
        &self,
        place: usize,
        cap: u128,
    ) -> Result<NumericalSemigroup, ModelError> {
        let g = self.genus;
        let name = &self.places[place].name;
        let mut multiplicity = None;
        for order in 1..=g + 1 {
            if self.exact_pole(place, order, cap)?.is_some() {
                multiplicity = Some(order);
                break;
            }
        }
        let Some(m) = multiplicity else {
            return Err(ModelError::GapCountMismatch {
                place: name.clone(),
                expected: g,
                detail: format!("no pole order in 1..={} is realized", g + 1),
            });
        };
        let mut elements = vec![m];
        for order in m + 1..=2 * g + m {
            if self.exact_pole(place, order, cap)?.is_some() {
                elements.push(order);
            }
        }
        let semigroup = NumericalSemigroup::from_generators(&elements).map_err(|err| {
            let detail = match err {
                SemigroupError::NonCoprimeGenerators(d) => {
                    format!("realized pole orders share the factor {d}")
                }
                other => other.to_string(),
            };
            ModelError::GapCountMismatch {
                place: name.clone(),
                expected: g,
                detail,
            }
        })?;
        if semigroup.genus() != g {
            return Err(ModelError::GapCountMismatch {
                place: name.clone(),
                expected: g,
                detail: format!("{semigroup} has {} gaps", semigroup.genus()),
            });
        }
        Ok(semigroup)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceReport {
    pub place: String,
    pub semigroup: Result<NumericalSemigroup, String>,
}

/// Outcome of every model invariant, plus the derived semigroup of each
/// distinguished place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<InvariantCheck>,
    pub places: Vec<PlaceReport>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&InvariantCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&InvariantCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.passed { "pass" } else { "FAIL" };
            writeln!(f, "{status:4}  {:<20} {}", check.name, check.detail)?;
        }
        for place in &self.places {
            match &place.semigroup {
                Ok(h) => writeln!(
                    f,
                    "place {}: H = {h}, gaps {:?} ({} gaps)",
                    place.place,
                    h.gaps(),
                    h.genus()
                )?,
                Err(msg) => writeln!(f, "place {}: {msg}", place.place)?,
            }
        }
        Ok(())
    }
}

/// Checks every model invariant and reports each one.
pub fn validate(spec: &ModelSpec) -> ValidationReport {
    validate_with_cap(spec, DEFAULT_BOX_CAP)
}

fn validate_with_cap(spec: &ModelSpec, cap: u128) -> ValidationReport {
    let mut checks = Vec::new();
    let distinguished: Vec<usize> = (0..spec.places.len())
        .filter(|&p| spec.places[p].distinguished)
        .collect();
    checks.push(InvariantCheck {
        name: "distinguished",
        passed: !distinguished.is_empty(),
        detail: format!("{} distinguished place(s)", distinguished.len()),
    });

    let bad_bounds: Vec<&str> = spec
        .exponent_lower_bounds
        .iter()
        .zip(&spec.functions)
        .filter(|(b, _)| matches!(b, Some(v) if *v > 0))
        .map(|(_, f)| f.as_str())
        .collect();
    checks.push(InvariantCheck {
        name: "lower-bounds",
        passed: bad_bounds.is_empty(),
        detail: if bad_bounds.is_empty() {
            "every exponent lower bound admits the constant function".into()
        } else {
            format!("positive lower bound on {}", bad_bounds.join(", "))
        },
    });

    let mut cone = LinearSystem::new(spec.functions.len());
    for place in &spec.places {
        cone.at_least(&place.valuations, 0).expect("shape checked");
    }
    for (k, bound) in spec.exponent_lower_bounds.iter().enumerate() {
        if bound.is_some() {
            cone.variable_at_least(k, 0);
        }
    }
    let pointed = cone.is_bounded();
    checks.push(InvariantCheck {
        name: "pointedness",
        passed: pointed,
        detail: if pointed {
            "only the zero exponent vector is regular at every listed place".into()
        } else {
            "a nonzero exponent direction is regular at every listed place".into()
        },
    });

    let mut degree_problems = Vec::new();
    for (k, function) in spec.functions.iter().enumerate() {
        let total: i64 = spec.places.iter().map(|p| p.valuations[k]).sum();
        let ok = total == 0 || (total < 0 && spec.exponent_lower_bounds[k] == Some(0));
        if !ok {
            degree_problems.push(format!("{function} (listed valuations sum to {total})"));
        }
    }
    checks.push(InvariantCheck {
        name: "degree",
        passed: degree_problems.is_empty(),
        detail: if degree_problems.is_empty() {
            "every divisor is fully listed or has its zeros absorbed by a zero lower bound".into()
        } else {
            degree_problems.join("; ")
        },
    });

    let mut places = Vec::new();
    if pointed {
        for &p in &distinguished {
            let semigroup = spec
                .derive_place_semigroup(p, cap)
                .map_err(|e| e.to_string());
            places.push(PlaceReport {
                place: spec.places[p].name.clone(),
                semigroup,
            });
        }
    }
    let gap_failures: Vec<String> = places
        .iter()
        .filter_map(|r| r.semigroup.as_ref().err().cloned())
        .collect();
    checks.push(InvariantCheck {
        name: "gap-count",
        passed: pointed && gap_failures.is_empty(),
        detail: if !pointed {
            "skipped: model is not pointed".into()
        } else if gap_failures.is_empty() {
            format!("every distinguished semigroup has {} gaps", spec.genus)
        } else {
            gap_failures.join("; ")
        },
    });

    ValidationReport { checks, places }
}

/// A validated model together with the semigroups of its distinguished places.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveModel {
    spec: ModelSpec,
    distinguished: Vec<usize>,
    semigroups: Vec<NumericalSemigroup>,
    box_cap: u128,
}

/// Parses and validates a model file.
pub fn parse_model(text: &str) -> Result<CurveModel, ModelError> {
    CurveModel::new(ModelSpec::from_yaml(text)?)
}

impl CurveModel {
    pub fn new(spec: ModelSpec) -> Result<CurveModel, ModelError> {
        Self::with_box_cap(spec, DEFAULT_BOX_CAP)
    }

    pub fn with_box_cap(spec: ModelSpec, box_cap: u128) -> Result<CurveModel, ModelError> {
        spec.check_shape()?;
        let report = validate_with_cap(&spec, box_cap);
        if let Some(failure) = report.first_failure() {
            return Err(ModelError::Validation {
                invariant: failure.name.to_string(),
                detail: failure.detail.clone(),
            });
        }
        let distinguished = (0..spec.places.len())
            .filter(|&p| spec.places[p].distinguished)
            .collect();
        let semigroups = report
            .places
            .into_iter()
            .map(|r| r.semigroup.expect("validated"))
            .collect();
        Ok(CurveModel {
            spec,
            distinguished,
            semigroups,
            box_cap,
        })
    }

    /// Same curve data with a different set of distinguished places.
    pub fn with_distinguished(&self, names: &[&str]) -> Result<CurveModel, ModelError> {
        let mut spec = self.spec.clone();
        for name in names {
            spec.place_position(name)?;
        }
        for place in &mut spec.places {
            place.distinguished = names.contains(&place.name.as_str());
        }
        Self::with_box_cap(spec, self.box_cap)
    }

    pub fn spec(&self) -> &ModelSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        self.spec.name.as_deref().unwrap_or("unnamed")
    }

    pub fn q(&self) -> i64 {
        self.spec.q
    }

    pub fn genus(&self) -> i64 {
        self.spec.genus
    }

    /// Number of distinguished places.
    pub fn n(&self) -> usize {
        self.distinguished.len()
    }

    pub fn function_count(&self) -> usize {
        self.spec.functions.len()
    }

    pub fn distinguished_name(&self, j: usize) -> &str {
        &self.spec.places[self.distinguished[j]].name
    }

    /// Index among the distinguished places of the place called `name`.
    pub fn distinguished_index(&self, name: &str) -> Result<usize, ModelError> {
        let pos = self.spec.place_position(name)?;
        self.distinguished
            .iter()
            .position(|&p| p == pos)
            .ok_or_else(|| ModelError::UnknownPlace(format!("{name} (not distinguished)")))
    }

    /// SHA-256 of the canonical JSON form of the model.
    pub fn fingerprint(&self) -> String {
        let canonical = serde_json::to_vec(&self.spec).expect("model serializes");
        hex::encode(Sha256::digest(canonical))
    }

    fn check_j(&self, j: usize) -> Result<(), ModelError> {
        if j >= self.n() {
            return Err(ModelError::PlaceIndex {
                index: j,
                count: self.n(),
            });
        }
        Ok(())
    }

    fn check_index(&self, i: &DivisorIndex) -> Result<(), ModelError> {
        if i.len() != self.n() {
            return Err(ModelError::DimensionMismatch {
                expected: self.n(),
                found: i.len(),
            });
        }
        Ok(())
    }

    /// `v_P(x^e)` for the listed place `place`.
    pub fn valuation(&self, e: &ExponentVector, place: &str) -> Result<i64, ModelError> {
        if e.0.len() != self.function_count() {
            return Err(ModelError::DimensionMismatch {
                expected: self.function_count(),
                found: e.0.len(),
            });
        }
        let pos = self.spec.place_position(place)?;
        Ok(self.spec.valuation_at(&e.0, pos))
    }

    /// `v_{P_j}(x^e)` for the `j`-th distinguished place.
    pub fn distinguished_valuation(&self, e: &ExponentVector, j: usize) -> i64 {
        self.spec.valuation_at(&e.0, self.distinguished[j])
    }

    /// `H(P_j)`, derived and certified during validation.
    pub fn place_semigroup(&self, j: usize) -> &NumericalSemigroup {
        &self.semigroups[j]
    }

    /// Smallest nonzero element of `H(P_j)`.
    pub fn multiplicity(&self, j: usize) -> i64 {
        self.semigroups[j].multiplicity()
    }

    /// All feasible monomials under one condition per listed place (in
    /// declaration order), exponent bounds included.
    pub fn enumerate_feasible(
        &self,
        constraints: &[PlaceConstraint],
    ) -> Result<Vec<ExponentVector>, ModelError> {
        Ok(self
            .spec
            .system(constraints)?
            .points(self.box_cap)?
            .into_iter()
            .map(ExponentVector)
            .collect())
    }

    /// Conditions of `L(i + k e_j)` over all `k`, with the pole order at
    /// `P_j` pinned to `order`.
    fn level_constraints(&self, i: &DivisorIndex, j: usize, order: i64) -> Vec<PlaceConstraint> {
        let mut constraints = vec![PlaceConstraint::AtLeast(0); self.spec.places.len()];
        for (k, &pos) in self.distinguished.iter().enumerate() {
            constraints[pos] = if k == j {
                PlaceConstraint::Exactly(-order)
            } else {
                PlaceConstraint::AtLeast(-i.0[k])
            };
        }
        constraints
    }

    /// A monomial in `L(i + k e_j)` for some `k` with pole order exactly
    /// `mu` at `P_j`, which witnesses `mu` in `H_i(P_j)`.
    pub fn h_set_witness(
        &self,
        i: &DivisorIndex,
        j: usize,
        mu: i64,
    ) -> Result<Option<ExponentVector>, ModelError> {
        self.check_j(j)?;
        self.check_index(i)?;
        // sum of listed valuations of any feasible monomial is <= 0, so the
        // pole order at P_j is at least -(deg(i) - i_j)
        if mu < self.h_set_lower_cutoff(i, j) {
            return Ok(None);
        }
        self.spec
            .first_feasible(&self.level_constraints(i, j, mu), self.box_cap)
    }

    pub fn h_set_contains(&self, i: &DivisorIndex, j: usize, mu: i64) -> Result<bool, ModelError> {
        Ok(self.h_set_witness(i, j, mu)?.is_some())
    }

    /// Every element of `H_i(P_j)` is at least this value.
    pub fn h_set_lower_cutoff(&self, i: &DivisorIndex, j: usize) -> i64 {
        -(i.degree() - i.0[j])
    }

    /// A monomial in `L(i + e_j) \ L(i)`. `None` certifies `L(i) = L(i + e_j)`.
    pub fn pole_increment_witness(
        &self,
        i: &DivisorIndex,
        j: usize,
    ) -> Result<Option<ExponentVector>, ModelError> {
        self.h_set_witness(i, j, i.0[j] + 1)
    }

    pub fn realizes_pole_increment(&self, i: &DivisorIndex, j: usize) -> Result<bool, ModelError> {
        Ok(self.pole_increment_witness(i, j)?.is_some())
    }

    /// A monomial in `L(lambda P_j) \ L((lambda - 1) P_j)`.
    pub fn monomial_with_exact_pole(
        &self,
        j: usize,
        lambda: i64,
    ) -> Result<Option<ExponentVector>, ModelError> {
        self.check_j(j)?;
        if lambda < 0 {
            return Ok(None);
        }
        self.spec.exact_pole(self.distinguished[j], lambda, self.box_cap)
    }

    /// Re-checks a witness monomial against the constraints of `H_i(P_j)`.
    pub fn witness_certifies(&self, i: &DivisorIndex, j: usize, mu: i64, e: &ExponentVector) -> bool {
        e.0.len() == self.function_count()
            && self
                .spec
                .system(&self.level_constraints(i, j, mu))
                .map(|sys| sys.is_satisfied(&e.0))
                .unwrap_or(false)
    }

    /// Re-checks that `e` has pole order exactly `lambda` at `P_j` and is
    /// regular at every other listed place.
    pub fn exact_pole_certified(&self, j: usize, lambda: i64, e: &ExponentVector) -> bool {
        if e.0.len() != self.function_count() || j >= self.n() {
            return false;
        }
        let target = self.distinguished[j];
        let bounds_ok = self
            .spec
            .exponent_lower_bounds
            .iter()
            .zip(&e.0)
            .all(|(b, &x)| b.is_none_or(|b| x >= b));
        bounds_ok
            && (0..self.spec.places.len()).all(|p| {
                let v = self.spec.valuation_at(&e.0, p);
                if p == target {
                    v == -lambda
                } else {
                    v >= 0
                }
            })
    }
}
