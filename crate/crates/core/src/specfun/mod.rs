//! Classical special functions: Laguerre, Jacobi and disk polynomials, Bessel
//! `J`, Pochhammer symbols and binomials, and terminating hypergeometric
//! series. All functions are pure.

mod bessel;
mod combinatorics;
mod hypergeometric;
mod orthopoly;

pub use bessel::bessel_j;
pub use combinatorics::{
    binomial_general, binomial_rational, binomial_u64, dimension_hpq, factorial,
    factorial_rational, pochhammer, pochhammer_f64,
};
pub use hypergeometric::{hyp1f1_terminating, hyp3f2_terminating};
pub use orthopoly::{
    disk_polynomial, jacobi_normalized, laguerre, laguerre_exact, script_laguerre,
};

pub(crate) use orthopoly::{
    disk_polynomial_unchecked, laguerre_unchecked,
    script_laguerre_unchecked,
};
