//! Intrinsic hyperplane arrangements attached to irreducible representations
//! of the symmetric group, computed in exact rational arithmetic.

pub mod arrangement;
pub mod combinatorics;
pub mod coordinate;
pub mod error;
pub mod hook;
pub mod linalg;
pub mod partition_lattice;
pub mod representation;
pub mod specht;
pub mod verify;

pub use error::{Error, ParseError, Result};
