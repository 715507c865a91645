//! Canonical models, gonality and scroll invariants of rational monomial curves.
//!
//! * [`semigroup`]: numerical semigroups, canonical ideals, `eta` and `mu`.
//! * [`curve`]: monomial curves, their canonical exponents, classification and pencils.
//! * [`scrollfit`]: arithmetic-progression partitions, gonality, determinantal layouts.
//! * [`scrollcalc`]: Chow ring of a rational normal scroll and the complete-intersection formulas.
//! * [`catalog`]: semigroup enumeration by genus, curve reports, table fixtures.

pub mod catalog;
pub mod curve;
pub mod error;
pub mod intset;
pub mod scrollcalc;
pub mod scrollfit;
pub mod semigroup;

pub use curve::{CanonicalExponents, Classification, DegreeOracle, MonomialCurve};
pub use error::{Error, Result};
pub use intset::IntSet;
pub use scrollfit::{best_fit, fit_with_difference, APFit, BestFit};
pub use semigroup::{NumericalSemigroup, Shift};
