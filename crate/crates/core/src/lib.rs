//! Exact-rational computations for weighted artinian complete intersections.
//!
//! Build a [`quotient::QuotientRing`] from generators and relations, read off
//! its Poincaré duality pairings and Eisenbud–Levine degree, classify the
//! middle intersection form over `Q` with [`qform`], and decide smoothability
//! in formal dimension at most 11 with [`smooth`].

pub mod arith;
pub mod cli;
pub mod error;
pub mod families;
pub mod matrix;
pub mod poly;
pub mod qform;
pub mod quotient;
pub mod smooth;

pub use error::{Error, Result};
