//! Exact computation of the number of lines on generic complex
//! hypersurfaces and complete intersections.
//!
//! The sequence C_n counts the lines on a generic hypersurface of
//! degree 2n-3 in projective n-space: 1, 27, 2875, 698005, and so on.
//! This crate evaluates it through several independent routes and
//! cross-validates them bit for bit:
//!
//! - four published closed forms ([`classical`]),
//! - a Schubert-calculus formula in Catalan numbers and elementary
//!   symmetric polynomials, with the linear recursion and generating
//!   function it induces ([`schubert`]),
//! - a combinatorial expansion over set compositions and z-block
//!   labelings ([`zblock`]),
//! - a symbolic determinant and Bombieri-norm pipeline from random
//!   algebraic geometry, exact for small n ([`bllp`]),
//! - the generalization to complete intersections
//!   ([`complete_intersections`]).
//!
//! Everything is computed over arbitrary-precision integers and
//! reduced rationals; no floating point enters any value-producing
//! path. The [`verify`] module bundles the cross-checks behind the
//! `fano verify` command.

// Loop indices here are degrees, matrix columns and cycle sizes;
// spelling them out reads better than iterator adapter chains.
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod bllp;
pub mod classical;
pub mod complete_intersections;
pub mod schubert;
pub mod verify;
pub mod zblock;

mod error;

pub use error::{Error, Result};
