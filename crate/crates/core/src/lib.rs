//! Exact verification toolkit for the spin^c 2-Dirac complex on the
//! Grassmannian of oriented 2-planes.
//!
//! The crate builds concrete, exactly represented models of
//!
//! * the complex spinor module of `Cl(n)` ([`clifford`]),
//! * `Spin(n)`, `Spin^c(n)` and their covering and projection maps
//!   ([`spin_groups`]),
//! * the contact grading of `so(2, n+2)` ([`graded_algebra`]),
//! * the contact geometry of the Stiefel variety `V_2(R^{n+2})`
//!   ([`stiefel_contact`]),
//! * the symbol sequence of the descended 2-Dirac complex
//!   ([`symbol_complex`]) and the flat 2-Dirac operator ([`flat_dirac`]),
//!
//! and checks the algebraic identities between them with rational
//! arithmetic. [`report`] runs the checks as named suites and serializes the
//! results.

pub mod clifford;
pub mod error;
pub mod flat_dirac;
pub mod graded_algebra;
pub mod matrix;
pub mod rank;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod spin_groups;
pub mod stiefel_contact;
pub mod symbol_complex;

pub use error::{Error, Result};
