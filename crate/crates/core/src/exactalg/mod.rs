//! Exact rational arithmetic and dense linear algebra.

mod matrix;
mod rational;

pub use matrix::{free_columns, mat_kernel, mat_solve, mat_solve_with, RatMatrix};
pub use rational::Rational;

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Rational {
    Rational::int(n)
}

/// Shorthand for `n/d`; panics if `d == 0`.
pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}
