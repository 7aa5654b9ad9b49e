//! Graded nilpotent Lie algebras of rank-2 distributions of Monge equations
//! `y^(m) = F(x, y, …, y^(m-1), z, …, z^(n))`: Tanaka prolongation, graded
//! Chevalley–Eilenberg cohomology, central extensions and their realization as
//! ODE systems, and the jet-space geometry the algebras come from.

pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod fingerprint;
pub mod geometry;
pub mod gnla;
pub mod relations;
pub mod reproduce;
pub mod tanaka;
pub mod univariate;

pub use error::{CoreError, Result};
pub use gnla::{check_gnla, check_homomorphism, Gnla, GradeProfile};
