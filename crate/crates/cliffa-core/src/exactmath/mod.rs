//! Exact rational scalars, square-class arithmetic and dense exact linear
//! algebra. Base field is ℚ throughout; arbitrary-precision integers keep
//! the rewriting engine safe from coefficient blowup.

mod matrix;
mod poly;
mod rational;

pub use matrix::QMatrix;
pub use poly::{invariant_factors, is_similar, minimal_polynomial, DependencyTracker, QPoly};
pub use rational::{
    q, q_int, square_class, square_class_bounded, Rational, SquareClass, DEFAULT_TRIAL_BOUND,
};
