//! Exact symbolic arithmetic: rationals, dense rational matrices, sparse
//! multivariate polynomials and rational functions, vector fields and
//! differential forms.
//!
//! All values are immutable after construction and `Send + Sync`.

pub mod error;
pub mod field;
pub mod form;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ratfun;
pub mod rational;

pub use error::{ParseError, SymbolicError};
pub use field::VectorField;
pub use form::DiffForm;
pub use matrix::MatrixQ;
pub use parse::{parse_poly, parse_ratfun};
pub use poly::{gcd, Chart, Monomial, Polynomial};
pub use ratfun::{RatFun, DEFAULT_DEGREE_BOUND};
pub use rational::{format_rational, parse_rational, q, qf, Rational};
