//! Exact arithmetic for slice regular quaternionic polynomials in one and two
//! variables, their Ore fraction field, Dieudonné determinants over it, and
//! regular resultants of two-variable polynomials.
//!
//! All coefficients are rational quaternions; nothing is approximated.

pub mod cli;
pub mod dieudonne;
pub mod error;
pub mod exprio;
pub mod orefield;
pub mod polyone;
pub mod polytwo;
pub mod quaternion;
pub mod resultant;

pub use dieudonne::{DetClass, SkewMatrix};
pub use error::{Error, Result};
pub use orefield::OreFrac;
pub use polyone::{Poly1, RealPoly, SphereRoot};
pub use polytwo::{Poly2, Var};
pub use quaternion::{Quaternion, Rational};
pub use resultant::{BezoutCertificate, ResultantReport};
