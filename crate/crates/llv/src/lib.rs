//! Exact-rational computations around orthogonal Lie algebras acting on
//! hyper-Kähler-style cohomology: nilpotent monodromy operators and their
//! weight filtrations, Clifford algebras and spin modules, highest-weight
//! combinatorics for types B and D, and the consistency enumeration that
//! pins down the three reduction types.
//!
//! Everything is computed over the rationals with arbitrary precision;
//! there is no floating point anywhere in the crate.

pub mod clifford;
pub mod frobenius;
pub mod io;
pub mod matrix;
pub mod nilpotent;
pub mod par;
pub mod predict;
pub mod quad;
pub mod reduction;
pub mod weights;

pub use matrix::{induced_sym_power, induced_wedge_power, format_rat, parse_rat, rat, rat_frac, Rat, RationalMatrix};
pub use nilpotent::{NilpotentOperator, ReductionType, WeightFiltration};
pub use quad::{MukaiCompletion, QuadraticSpace};
pub use weights::{Family, HighestWeight, RootSystem};

use thiserror::Error as ThisError;

/// Crate-wide error type.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("operator is not skew for the given form")]
    NotSkew,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
