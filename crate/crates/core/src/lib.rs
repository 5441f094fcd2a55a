//! Zeros of Jacobi, Meixner-Pollaczek and Pseudo-Jacobi polynomials, the two
//! extra points that complete the interlacing of a degree-`n` polynomial with
//! its degree-`n + 1`, parameter-shifted partner, and a verdict engine that
//! classifies and confirms the resulting interlacing configurations.
//!
//! The crate is organised bottom-up:
//!
//! * [`recurrence`] evaluates monic three-term recurrences and finds their
//!   zeros through the symmetric tridiagonal (Jacobi matrix) eigenproblem.
//! * [`hyper`] expands the terminating hypergeometric definitions of each
//!   family into monomial coefficients. It is an independent cross-check for
//!   the recurrence tables.
//! * [`families`] builds recurrence tables, extra points, admissibility
//!   windows and mixed-recurrence residuals for each family.
//! * [`interlace`] holds the interlacing predicates, point placement and the
//!   verdict engine.
//! * [`scan`] runs parameter sweeps and conjecture scans; [`tables`] reproduces
//!   the published reference tables.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod families;
pub mod hyper;
pub mod interlace;
pub mod recurrence;
pub mod scan;
pub mod tables;

pub use error::{Error, Result};
pub use families::{ExtraPoints, FamilyKind, FamilySpec};
pub use interlace::{InterlaceReport, Placement, TheoremVariant, Verdict};
pub use recurrence::{RecurrenceTable, ZeroSet};
