//! The Berezin transform on planar grids: direct convolution, Fourier
//! multiplier, and the finite-difference Landau operator.

mod delta;
mod direct;
mod grid;
mod spectral;

use std::f64::consts::PI;

pub use delta::tilde_delta_apply;
pub use direct::{berezin_direct, berezin_direct_with, DirectOptions, DEFAULT_MARGIN};
pub use grid::{fmt_float, metadata_path, GridFunction2D, GridMetadata, Interpolation, MIN_NODES};
pub use spectral::{apply_multiplier, berezin_spectral, DECAY_THRESHOLD, PAD_FACTOR};

use crate::error::Result;
use crate::kernel::{check_dim, CPoint};
use crate::rational::to_f64;
use crate::specfun::laguerre_unchecked;
use crate::symbols::SpaceParams;

/// `h_m(z) = m!/((n)_m π^n) e^{-|z|^2} L_m^{(n-1)}(|z|^2)^2`.
pub fn h_kernel(params: SpaceParams, z: &CPoint) -> Result<f64> {
    check_dim(params, &[z])?;
    let u = z.norm_sq();
    let l = laguerre_unchecked(params.m(), f64::from(params.n()) - 1.0, u);
    Ok(to_f64(&params.mass_factor()) * PI.powi(-(params.n() as i32)) * (-u).exp() * l * l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::GaussLaguerre;
    use crate::specfun::binomial_u64;
    use num_complex::Complex64;

    #[test]
    fn kernel_examples() {
        let params = SpaceParams::new(1, 0).unwrap();
        let z = CPoint::planar(Complex64::new(0.5, 1.0));
        assert!((h_kernel(params, &z).unwrap() - (-1.25f64).exp() / PI).abs() < 1e-16);
        for (n, m) in [(1u32, 2u32), (2, 3), (3, 1)] {
            let params = SpaceParams::new(n, m).unwrap();
            let d = to_f64(&crate::rational::from_bigint(binomial_u64((m + n - 1).into(), m.into())));
            let expected = to_f64(&params.mass_factor()) * PI.powi(-(n as i32)) * d * d;
            let v = h_kernel(params, &CPoint::origin(n as usize)).unwrap();
            assert!((v - expected).abs() < 1e-14 * expected);
        }
    }

    #[test]
    fn planar_kernel_has_unit_mass() {
        // 2π ∫ h_m(ρ) ρ dρ = π ∫ h_m(√u) du
        let rule = GaussLaguerre::new(64).unwrap();
        for m in 0..=4 {
            let params = SpaceParams::new(1, m).unwrap();
            let mass = PI * rule.integrate(|u| {
                h_kernel(params, &CPoint::planar(Complex64::new(u.sqrt(), 0.0))).unwrap() * u.exp()
            });
            assert!((mass - 1.0).abs() < 1e-10, "m={m}: {mass}");
        }
    }
}
