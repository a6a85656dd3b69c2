//! Two Hankel-type integrals that turn the radial Fourier transform of the
//! kernel into Laguerre polynomials, evaluated by quadrature and in closed form.
//!
//! Both integrands are `e^{-x^2}` times an entire function of `x^2`, so the
//! substitution `u = x^2` leaves `e^{-u}` times an entire function of `u`,
//! which Gauss–Laguerre integrates spectrally.

use crate::error::Result;
use crate::quadrature::GaussLaguerre;
use crate::specfun::{bessel_j, factorial, laguerre, laguerre_unchecked};
use crate::rational::to_f64;

/// Default radial rule size for the Hankel integrals.
pub const DEFAULT_NODES: usize = 100;

fn factorial_f64(s: u32) -> f64 {
    to_f64(&crate::rational::from_bigint(factorial(u64::from(s))))
}

/// `∫_0^∞ x^{2s+ν+1} e^{-x^2} J_ν(2x√z) dx` by quadrature.
pub fn monomial_bessel_integral(rule: &GaussLaguerre, s: u32, nu: u32, z: f64) -> f64 {
    let two_sqrt_z = 2.0 * z.sqrt();
    let half_nu = 0.5 * f64::from(nu);
    0.5 * rule.integrate(|u| {
        u.powi(s as i32) * u.powf(half_nu) * bessel_j(nu, two_sqrt_z * u.sqrt())
    })
}

/// `(s!/2) e^{-z} z^{ν/2} L_s^{(ν)}(z)`.
pub fn monomial_bessel_closed_form(s: u32, nu: u32, z: f64) -> Result<f64> {
    Ok(0.5 * factorial_f64(s) * (-z).exp() * z.powf(0.5 * f64::from(nu)) * laguerre(s, f64::from(nu), z)?)
}

/// `∫_0^∞ e^{-x^2} x^{ν+1} L_s^{(ν)}(x^2) J_ν(x u) dx` by quadrature.
pub fn laguerre_bessel_integral(rule: &GaussLaguerre, s: u32, nu: u32, u: f64) -> f64 {
    let alpha = f64::from(nu);
    0.5 * rule.integrate(|t| {
        t.powf(0.5 * alpha) * laguerre_unchecked(s, alpha, t) * bessel_j(nu, u * t.sqrt())
    })
}

/// `(1/(2 s!)) (u/2)^{2s+ν} e^{-u^2/4}`.
pub fn laguerre_bessel_closed_form(s: u32, nu: u32, u: f64) -> f64 {
    (0.5 * u).powi((2 * s + nu) as i32) * (-0.25 * u * u).exp() / (2.0 * factorial_f64(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_identity_at_laguerre_root() {
        // s = 1, ν = 0, z = 1: L_1(1) = 0
        let rule = GaussLaguerre::new(DEFAULT_NODES).unwrap();
        assert!(monomial_bessel_integral(&rule, 1, 0, 1.0).abs() < 1e-12);
    }

    #[test]
    fn both_identities_on_the_test_lattice() {
        let rule = GaussLaguerre::new(DEFAULT_NODES).unwrap();
        for s in 0..=3 {
            for nu in 0..=2 {
                for &z in &[0.5, 1.0, 2.0] {
                    let lhs = monomial_bessel_integral(&rule, s, nu, z);
                    let rhs = monomial_bessel_closed_form(s, nu, z).unwrap();
                    assert!((lhs - rhs).abs() < 1e-10, "s={s} ν={nu} z={z}: {lhs} vs {rhs}");
                    let u = 2.0 * z.sqrt();
                    let lhs = laguerre_bessel_integral(&rule, s, nu, u);
                    let rhs = laguerre_bessel_closed_form(s, nu, u);
                    assert!((lhs - rhs).abs() < 1e-10, "s={s} ν={nu} u={u}: {lhs} vs {rhs}");
                }
            }
        }
    }

    #[test]
    fn gaussian_hankel_transform() {
        // s = ν = 0: ∫ x e^{-x^2} J_0(xu) dx = e^{-u^2/4}/2
        for &u in &[0.0, 1.0, 3.0] {
            assert!((laguerre_bessel_closed_form(0, 0, u) - 0.5 * (-0.25 * u * u).exp()).abs() < 1e-16);
        }
    }
}
