//! Exact-arithmetic library for the numerology of rank-drop curves over
//! the scroll P^1 x P^{d-2}: Chern-class invariants, Hilbert polynomials
//! from free resolutions, fiber stratifications, the local deformation
//! system with its finite-field oracle, and a randomized degeneracy-locus
//! certification of the generic fiber length.

pub mod chern;
pub mod cli;
pub mod degloc;
pub mod error;
pub mod exactalg;
pub mod fiberstrat;
pub mod localdefs;
pub mod resolution;

pub use error::{Error, Result};
