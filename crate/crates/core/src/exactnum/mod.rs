//! Exact scalars, polynomials and rational functions.

mod cyclo;
mod linalg;
mod matrix;
mod poly;
mod rational;
mod series;

pub use cyclo::{cyclo_arith, cyclotomic_polynomial, euler_phi, ArithOp, CycloField, CycloNum};
pub use linalg::{nullspace_primitive, solve_rational};
pub use matrix::IntMatrix;
pub use poly::IntPoly;
pub use rational::{int, rat, rational_to_integer, Rational};
pub use series::{series_expand, RationalSeries};
