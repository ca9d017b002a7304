//! Exact combinatorics of l-reflexive lattice polygons and their toric log
//! del Pezzo surfaces.

pub mod classify;
pub mod cones;
pub mod covering;
pub mod error;
pub mod lattice;
pub mod polygon;
pub mod toric;

pub use error::{Error, Result};
