//! Exact engine for anchored foam evaluation.
//!
//! Everything here is pure and allocation-only; IO, file formats and the
//! command line live in the companion `foam` crate.

#![no_std]

extern crate alloc;

mod error;
pub mod exactalg;
pub mod surfaces_sl2;
pub mod foams_sl3;
pub mod statespace;
pub mod annular;
pub mod skein;

pub use error::{Error, Result};
pub use exactalg::{Poly, RingSpec};
