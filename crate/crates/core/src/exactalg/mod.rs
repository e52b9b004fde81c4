//! Exact arithmetic substrate: rationals, polynomials, truncated rings and
//! dense linear algebra. Nothing in the crate uses floating point.

pub mod bipoly;
pub mod echelon;
pub mod matrix;
pub mod multipoly;
pub mod rational;
pub mod truncated;

pub use bipoly::{binomial, factorial, taylor_at_one, BiPoly, Coeff, IntBiPoly, RatBiPoly};
pub use echelon::{sparse_from_dense, SparseEchelon};
pub use matrix::{RationalMatrix, Rref};
pub use multipoly::{bigraded_names, monomials_of_bidegree, monomials_of_degree, Monomial, MultiPoly};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use truncated::TruncatedRing;
