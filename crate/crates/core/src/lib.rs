//! Exact calculus for the rational complex cobordism ring in Chern-number
//! coordinates.
//!
//! A class of complex dimension `n` is the vector of its Chern numbers over
//! the partitions of `n`; functionals are dual vectors. On top of that ring
//! this crate builds multiplicative genera (`χ_y`, Todd, L, Euler,
//! Pontryagin), Chern numbers of projectivized bundles over surfaces, and a
//! verifier that assembles ideals from generator monomials and compares
//! their annihilators with the expected invariant spans.

pub mod bundles;
pub mod cli;
pub mod cobordism;
pub mod error;
pub mod genus;
pub mod json;
pub mod linalg;
pub mod rational;
pub mod symfun;
pub mod verifier;

pub use cobordism::{CobordismClass, Functional};
pub use error::{Error, Result};
pub use rational::Rational;
pub use symfun::Partition;
