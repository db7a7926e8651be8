//! Small quantum cohomology algebras of Fano varieties, their quantum spectra,
//! and numerology checks for Lefschetz exceptional collections.

pub mod algebra;
pub mod bwb;
pub mod chevalley;
pub mod error;
pub mod exactlin;
pub mod lefschetz;
pub mod schur;
pub mod spectrum;

pub use error::{Error, Result};
