//! Fast solvers, one module per variant family.

pub mod br;
pub mod constant;
pub mod mc;
pub mod sigma;
