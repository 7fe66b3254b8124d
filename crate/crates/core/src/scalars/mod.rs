//! The coefficient field Q(α) and the scalar constants built from diagram
//! statistics.

mod alpha;
mod constants;
mod intpoly;

pub use alpha::AlphaRational;
pub use constants::*;
pub use intpoly::IntPoly;
