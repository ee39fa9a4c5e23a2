//! Equivariant degree computations over `O(2) x K` for a finite group `K`.

pub mod bessel;
pub mod burnside;
pub mod degree;
pub mod elliptic;
pub mod error;
pub mod group;
pub mod io;
pub mod lattice;
pub mod o2;
pub mod representations;
pub mod spectrum;

pub use error::{Error, Result};
