//! Insertion/deletion correcting codes over `Z2` and `Z4`.
//!
//! Binary and q-ary Varshamov-Tenengolts codes, generalized Helberg codes,
//! the 24 symbol bijections between `Z4` and `Z2^2` (nine of them named
//! `phi1`..`phi9`), exhaustive deletion spheres, and verification campaigns
//! that relate codes to their binary images.

pub mod alphabet;
pub mod cli;
pub mod error;
pub mod helberg;
pub mod space;
pub mod sphere;
pub mod verify;
pub mod vt;

pub use alphabet::{naisargik, symbol_map, SymbolMap, Word};
pub use error::{Error, Result};
pub use space::{Codebook, Limits};
