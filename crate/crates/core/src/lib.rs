//! Upper bounds on the number of rational places of a function field over
//! a finite field, computed from (generalized) Weierstrass semigroup data.
//!
//! * [`semigroup`]: numerical semigroups, Apéry sets and the single-point
//!   bounds (Geil-Matsumoto, Lewittes, Hasse-Weil and the unit-valued
//!   variant).
//! * [`field_model`]: monomial models of Riemann-Roch spaces and the
//!   valuation queries the bounds need.
//! * [`bound_engine`]: the multi-point bound, obtained from a minimum-weight
//!   path in a lattice of divisors.
//! * [`t_bound_engine`]: the refinement counting places where the
//!   coordinate functions are units.
//! * [`oracle`]: slow reference implementations used to cross-check.
//! * [`cli`]: the `wsbound` command line.

pub mod bound_engine;
pub mod certificate;
pub mod cli;
pub mod field_model;
pub mod lattice;
pub mod oracle;
pub mod polytope;
pub mod semigroup;
pub mod t_bound_engine;

pub use bound_engine::{BoundCertificate, BoundError, NegligibilityWitness};
pub use field_model::{parse_model, CurveModel, DivisorIndex, ExponentVector, ModelError, ModelSpec};
pub use semigroup::{hasse_weil_bound, AperySet, NumericalSemigroup, SemigroupError};
pub use t_bound_engine::TBoundCertificate;

/// The bundled model files.
pub mod bundled {
    pub const KLEIN_QUARTIC: &str = include_str!("../../../models/klein_quartic.model");
    pub const GENUS6_NEWTON: &str = include_str!("../../../models/genus6_newton.model");
}
