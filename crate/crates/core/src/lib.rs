//! Exact construction of non-symmetric, symmetric and anti-symmetric Jack
//! polynomials over the rational-function field Q(α), together with the
//! closed-form evaluations and norms they satisfy and independent brute-force
//! oracles that cross-check them.

pub mod check;
pub mod combinatorics;
pub mod error;
pub mod field;
pub mod jack;
pub mod linalg;
pub mod oracle;
pub mod parallel;
pub mod polyalg;
pub mod scalars;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, Rational};
pub use scalars::AlphaRational;
