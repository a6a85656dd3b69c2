//! The Berezin transform as a direct convolution with the kernel `h_m`,
//! one polar quadrature per evaluation point.

use num_complex::Complex64;

use super::grid::{GridFunction2D, Interpolation};
use crate::error::{domain, Error, Result};
use crate::kernel::CPoint;
use crate::quadrature::PolarRule;
use crate::specfun::laguerre_unchecked;

/// Minimal distance from an evaluation point to the grid edge.
pub const DEFAULT_MARGIN: f64 = 6.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DirectOptions {
    pub radial_nodes: usize,
    pub angular_nodes: usize,
    pub margin: f64,
    pub interpolation: Interpolation,
}

impl Default for DirectOptions {
    fn default() -> Self {
        Self {
            radial_nodes: 64,
            angular_nodes: 128,
            margin: DEFAULT_MARGIN,
            interpolation: Interpolation::Cubic,
        }
    }
}

/// `B_m[φ](z) = (1/π) ∫ e^{-|z-w|^2} L_m(|z-w|^2)^2 φ(w) dμ(w)` at each point.
pub fn berezin_direct(phi: &GridFunction2D, m: u32, eval_points: &[CPoint]) -> Result<Vec<Complex64>> {
    berezin_direct_with(phi, m, eval_points, &DirectOptions::default())
}

pub fn berezin_direct_with(
    phi: &GridFunction2D,
    m: u32,
    eval_points: &[CPoint],
    options: &DirectOptions,
) -> Result<Vec<Complex64>> {
    let centers = eval_points
        .iter()
        .map(|p| {
            if p.dim() != 1 {
                return Err(domain(
                    "berezin_direct",
                    format!("grid transforms are planar, got a point of C^{}", p.dim()),
                ));
            }
            let z = p.coords()[0];
            let distance = phi.distance_to_boundary(z);
            if !(distance >= options.margin) {
                return Err(Error::BoundaryMargin {
                    x: z.re,
                    y: z.im,
                    distance,
                    margin: options.margin,
                });
            }
            Ok(z)
        })
        .collect::<Result<Vec<_>>>()?;
    let rule = PolarRule::new(options.radial_nodes, options.angular_nodes)?;
    Ok(centers
        .into_iter()
        .map(|z| direct_value(&rule, phi, m, z, options.interpolation))
        .collect())
}

pub(crate) fn direct_value(
    rule: &PolarRule,
    phi: &GridFunction2D,
    m: u32,
    z: Complex64,
    interpolation: Interpolation,
) -> Complex64 {
    rule.gaussian_average(
        |u| {
            let l = laguerre_unchecked(m, 0.0, u);
            l * l
        },
        |v| phi.interpolate(z + v, interpolation),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn constant_grid() -> GridFunction2D {
        GridFunction2D::from_fn(128, 128, (-8.0, 8.0), (-8.0, 8.0), |_| c(1.0, 0.0)).unwrap()
    }

    #[test]
    fn constants_are_fixed() {
        let g = constant_grid();
        let points: Vec<CPoint> = [c(0.0, 0.0), c(0.5, -0.7), c(-1.0, 0.3)]
            .into_iter()
            .map(CPoint::planar)
            .collect();
        for m in 0..=4 {
            for v in berezin_direct(&g, m, &points).unwrap() {
                assert!((v - 1.0).norm() < 1e-8, "m={m}: {v}");
            }
        }
    }

    #[test]
    fn plane_waves_are_eigenfunctions() {
        let xi = [2.0f64.sqrt(), 2.0f64.sqrt()];
        let wave = move |w: Complex64| Complex64::from_polar(1.0, xi[0] * w.re + xi[1] * w.im);
        let g = GridFunction2D::from_fn(256, 256, (-8.0, 8.0), (-8.0, 8.0), wave).unwrap();
        let z = c(0.3, -0.4);
        let out0 = berezin_direct(&g, 0, &[CPoint::planar(z)]).unwrap()[0];
        assert!((out0 - wave(z) * (-1.0f64).exp()).norm() < 1e-5);
        let out1 = berezin_direct(&g, 1, &[CPoint::planar(z)]).unwrap()[0];
        assert!(out1.norm() < 1e-5);
    }

    #[test]
    fn nonnegative_fields_stay_nonnegative() {
        let g = GridFunction2D::from_fn(96, 96, (-8.0, 8.0), (-8.0, 8.0), |w| {
            c((-0.5 * (w - c(0.5, 0.0)).norm_sqr()).exp(), 0.0)
        })
        .unwrap();
        for m in 0..=3 {
            let v = berezin_direct(&g, m, &[CPoint::planar(c(0.2, 0.9))]).unwrap()[0];
            assert!(v.re > 0.0 && v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn margin_is_enforced() {
        let g = constant_grid();
        let err = berezin_direct(&g, 1, &[CPoint::planar(c(3.0, 0.0))]).unwrap_err();
        assert!(matches!(err, Error::BoundaryMargin { margin, .. } if margin == DEFAULT_MARGIN));
        assert!(err.to_string().contains('6'));
        assert!(berezin_direct(&g, 1, &[CPoint::origin(2)]).is_err());
    }
}
