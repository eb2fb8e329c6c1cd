//! Root monoids on affine toric varieties and automorphism groups of root
//! and reductive monoids, computed in exact integer and rational arithmetic.
//!
//! Cones, lattices and Hilbert bases live in [`cones`] and [`lattice`];
//! Demazure roots and their derivations in [`demazure`]; the monoid structure
//! given by a compatible collection in [`root_monoid`]; its automorphisms in
//! [`automorphisms`]; reductive monoids given by a root datum and a cone in
//! [`reductive`].

#![allow(clippy::needless_range_loop)]

pub mod automorphisms;
pub mod cli;
pub mod cones;
pub mod demazure;
pub mod error;
pub mod laurent;
pub mod lattice;
pub mod matrix_group;
mod linalg;
pub mod rational;
pub mod reductive;
pub mod root_monoid;

pub use error::{Error, Result};
