//! Matrix summability of Fourier series: A-transforms of partial sums,
//! row-sequence condition checkers, moduli of continuity, and numerical
//! verification of kernel and approximation-rate bounds.

pub mod cli_io;
pub mod conditions;
pub mod error;
pub mod experiments;
pub mod fourier;
pub mod moduli;
pub mod quadrature;
pub mod summability;

pub use error::{Error, Result};
