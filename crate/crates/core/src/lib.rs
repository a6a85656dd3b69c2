//! Landau levels on generalized Bargmann spaces: special functions, exact
//! multiplier coefficients, reproducing kernels, coherent states and the
//! Berezin transform on sampled grids.

pub mod cli;
pub mod coherent;
pub mod error;
pub mod hankel;
pub mod kernel;
pub mod quadrature;
pub mod rational;
pub mod specfun;
pub mod symbols;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
