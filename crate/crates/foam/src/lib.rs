//! File formats, parallel runners and the acceptance suite on top of
//! `foam-core`. The `foam` binary is a thin layer over this crate.

pub mod acceptance;
mod error;
pub mod formats;
pub mod runner;

pub use error::{FoamError, Result};
