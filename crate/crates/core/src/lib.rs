//! Generic initial ideals, Eliahou-Kervaire Betti tables and the tailing
//! Betti numbers of 3-regular projective schemes.

pub mod binomial;
pub mod borel;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod gin;
pub mod groebner;
pub mod hilbert;
pub mod invariants;
pub mod parse;
pub mod report;
pub mod ring;
pub mod seeds;
pub mod tailing;

pub use error::{Error, Result};
