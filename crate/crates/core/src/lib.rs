//! Numerical semigroup invariants, canonical trace ideals and residues.
//!
//! The crate provides:
//! - [`semigroup`]: membership, Apéry sets, gaps, Frobenius and
//!   pseudo-Frobenius numbers, symmetry predicates;
//! - [`ideal`]: relative-ideal arithmetic, the canonical trace ideal,
//!   the residue and the classification predicates built on it;
//! - [`threegen`]: the structure-matrix fast path for non-symmetric
//!   3-generated semigroups;
//! - [`families`]: certified constructors for parametrized families;
//! - [`shifted`]: shifted-family scans with periodicity verdicts.

pub mod arith;
pub mod error;
pub mod families;
pub mod ideal;
pub mod semigroup;
pub mod shifted;
pub mod threegen;

pub use error::{Error, Result};
pub use ideal::{BoundsReport, RelativeIdeal, TraceData, TracePosition};
pub use semigroup::NumericalSemigroup;
pub use shifted::{ShiftParams, ShiftScanReport};
pub use threegen::StructureMatrix;
