//! Exact computations around special tensors on compact complex surfaces: the
//! tensor/endomorphism correspondence, blow-up pullbacks, sections on Hirzebruch
//! surfaces, elliptic-fibration degree arithmetic and the bidisk uniformization test.

pub mod blowup;
pub mod classify;
pub mod cli;
pub mod elliptic;
pub mod error;
pub mod polyalg;
pub mod sample;
pub mod surfaces;
pub mod tensor;

pub use error::{Error, Result};
