//! Exact arithmetic kernel.
//!
//! Integers and rationals are arbitrary precision. [`MPoly`] is a sparse
//! polynomial over a fixed, ordered alphabet of ten variables with rational
//! coefficients, kept in canonical form (no zero coefficients) so that
//! structural equality is mathematical equality. [`RatFunc`] is an
//! unreduced quotient of two polynomials compared by cross-multiplication.

mod poly;
mod ratfunc;
mod rational;

pub use poly::{
    binom_int, binom_poly, factorial, factorial_ratio, pochhammer_poly, pochhammer_rat, rat, ratio, render_rational,
    AlgError, Degree, MPoly, Monomial, RingElem, Var, NUM_VARS,
};
pub use ratfunc::{ratfunc_eq, RatFunc};
pub use rational::{Integer, Rational};
