//! Exact rational scalars and dense matrices.

mod matrix;
mod rat;

pub use matrix::RatMatrix;
pub use rat::Rat;
