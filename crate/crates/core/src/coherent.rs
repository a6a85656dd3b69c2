//! Coherent states attached to a Landau level: normalization, overlaps,
//! the resolution of the identity, and lower symbols by quadrature.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::kernel::{check_dim, CPoint};
use crate::quadrature::PolarRule;
use crate::rational::{from_bigint, to_f64};
use crate::specfun::{binomial_u64, laguerre_unchecked};
use crate::symbols::SpaceParams;

/// Default polar rule sizes for coherent-state quadrature.
pub const RADIAL_NODES: usize = 64;
pub const ANGULAR_NODES: usize = 128;

/// Default radius beyond which quadrature nodes are dropped in
/// [`resolution_check`].
pub const DEFAULT_QUAD_RADIUS: f64 = 8.0;

/// Largest admitted bound on the neglected Gaussian tail.
pub const TAIL_TOLERANCE: f64 = 1e-12;

pub fn default_rule() -> Result<PolarRule> {
    PolarRule::new(RADIAL_NODES, ANGULAR_NODES)
}

/// `C(n+m-1, m) = (n)_m / m!`.
fn level_dimension_factor(params: SpaceParams) -> f64 {
    let (n, m) = (u64::from(params.n()), u64::from(params.m()));
    to_f64(&from_bigint(binomial_u64(n + m - 1, m)))
}

/// `N(z) = π^{-n} C(n+m-1, m) e^{|z|^2}`.
pub fn normalization_factor(params: SpaceParams, z: &CPoint) -> Result<f64> {
    check_dim(params, &[z])?;
    Ok(PI.powi(-(params.n() as i32)) * level_dimension_factor(params) * z.norm_sq().exp())
}

/// `<z,m|w,m> = (N(z) N(w))^{-1/2} π^{-n} e^{<z,w>} L_m^{(n-1)}(|z-w|^2)`,
/// evaluated with the Gaussian factors combined so that large `|z|`, `|w|`
/// do not overflow.
pub fn overlap(params: SpaceParams, z: &CPoint, w: &CPoint) -> Result<Complex64> {
    check_dim(params, &[z, w])?;
    let exponent = z.hermitian_inner(w) - 0.5 * (z.norm_sq() + w.norm_sq());
    let lag = laguerre_unchecked(params.m(), f64::from(params.n()) - 1.0, z.distance_sq(w));
    Ok(exponent.exp() * (lag / level_dimension_factor(params)))
}

/// Upper bound on `∫_{R^2}^∞ e^{-u} (1+u)^{2m} du = e^{-R^2} Σ_{i<=2m} (2m)!/i! (1+R^2)^i`,
/// which dominates the dropped part of `∫ e^{-u} L_m(u)^2 du`.
pub fn gaussian_tail_bound(m: u32, radius: f64) -> f64 {
    let a = radius * radius;
    let k = 2 * m;
    let mut term = 1.0; // (2m)!/i! (1+a)^i at i = 2m
    let mut sum = 0.0;
    for i in (0..=k).rev() {
        if i < k {
            term *= f64::from(i + 1) / (1.0 + a);
        }
        sum += term;
    }
    // sum holds Σ (2m)!/i! (1+a)^{i-2m}
    (-a).exp() * (1.0 + a).powi(k as i32) * sum
}

fn planar_coordinate(z: &CPoint, function: &'static str) -> Result<Complex64> {
    if z.dim() != 1 {
        return Err(domain(function, format!("defined for n = 1, got a point of C^{}", z.dim())));
    }
    Ok(z.coords()[0])
}

/// `∫ |<z,m|w,m>|^2 N(w) e^{-|w|^2} dμ(w)`, which equals 1 when the coherent
/// states resolve the identity. Polar quadrature around `z`, dropping nodes
/// with `|w - z| > quad_radius`.
pub fn resolution_check(m: u32, z: &CPoint, quad_radius: f64) -> Result<f64> {
    resolution_check_with(&default_rule()?, m, z, quad_radius)
}

pub fn resolution_check_with(rule: &PolarRule, m: u32, z: &CPoint, quad_radius: f64) -> Result<f64> {
    let center = planar_coordinate(z, "resolution_check")?;
    let tail = gaussian_tail_bound(m, quad_radius);
    if !(tail <= TAIL_TOLERANCE) {
        return Err(Error::QuadratureNotConverged(format!(
            "quadrature radius {quad_radius} leaves a Gaussian tail up to {tail:e} (> {TAIL_TOLERANCE:e})"
        )));
    }
    let params = SpaceParams::new(1, m)?;
    let cutoff = quad_radius * quad_radius;
    // ∫ F dμ = π · (1/π) ∫ e^{-|v|^2} [e^{|v|^2} F(z+v)] dμ(v)
    let value = rule.gaussian_average(
        |u| if u > cutoff { 0.0 } else { u.exp() },
        |v| {
            let w = CPoint::planar(center + v);
            let ov = overlap(params, z, &w).expect("planar points");
            let weight = normalization_factor(params, &w).expect("planar point") * (-w.norm_sq()).exp();
            Complex64::new(ov.norm_sqr() * weight, 0.0)
        },
    );
    let result = PI * value.re;
    if !result.is_finite() {
        return Err(Error::QuadratureNotConverged(
            "resolution-of-identity quadrature produced a non-finite value".into(),
        ));
    }
    Ok(result)
}

/// The lower symbol `<z,m| A_φ |z,m>`, i.e. the Berezin transform `B_m[φ](z)`
/// in the plane, by polar quadrature centered at `z`.
pub fn expectation_quadrature<F>(m: u32, phi: F, z: &CPoint) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    expectation_quadrature_with(&default_rule()?, m, phi, z)
}

pub fn expectation_quadrature_with<F>(rule: &PolarRule, m: u32, phi: F, z: &CPoint) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    let center = planar_coordinate(z, "expectation_quadrature")?;
    Ok(rule.gaussian_average(
        |u| {
            let l = laguerre_unchecked(m, 0.0, u);
            l * l
        },
        |v| phi(center + v),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::reproducing_kernel;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(n: u32, m: u32) -> SpaceParams {
        SpaceParams::new(n, m).unwrap()
    }

    fn random_point(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> CPoint {
        let reals: Vec<f64> = (0..2 * n).map(|_| rng.gen_range(-radius..radius)).collect();
        CPoint::from_reals(&reals).unwrap()
    }

    #[test]
    fn normalization_examples() {
        let z = CPoint::planar(Complex64::new(0.3, -1.1));
        for m in 0..4 {
            let v = normalization_factor(p(1, m), &z).unwrap();
            assert!((v - z.norm_sq().exp() / PI).abs() < 1e-15 * v);
        }
        // N(0) = π^{-3} C(4, 2) for n = 3, m = 2
        let v = normalization_factor(p(3, 2), &CPoint::origin(3)).unwrap();
        assert!((v - 6.0 / PI.powi(3)).abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (n, m) in [(1, 2), (2, 1), (3, 3)] {
            let z = random_point(&mut rng, n, 1.2);
            let k = reproducing_kernel(p(n as u32, m), &z, &z).unwrap();
            let nz = normalization_factor(p(n as u32, m), &z).unwrap();
            assert!((k.re - nz).abs() < 1e-13 * nz);
        }
    }

    #[test]
    fn overlap_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (n, m) in [(1, 0), (1, 3), (2, 2)] {
            let params = p(n as u32, m);
            for _ in 0..100 {
                let z = random_point(&mut rng, n, 2.0);
                let w = random_point(&mut rng, n, 2.0);
                let zw = overlap(params, &z, &w).unwrap();
                assert!(zw.norm() <= 1.0 + 1e-12);
                assert!((zw - overlap(params, &w, &z).unwrap().conj()).norm() < 1e-14);
                // |<z|w>|^2 N(z) N(w) = π^{-2n} e^{2 Re<z,w>} L^2
                let lhs = zw.norm_sqr()
                    * normalization_factor(params, &z).unwrap()
                    * normalization_factor(params, &w).unwrap();
                let lag = laguerre_unchecked(m, n as f64 - 1.0, z.distance_sq(&w));
                let rhs = PI.powi(-2 * n as i32) * (2.0 * z.hermitian_inner(&w).re).exp() * lag * lag;
                assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-300));
            }
            let z = random_point(&mut rng, n, 2.0);
            assert!((overlap(params, &z, &z).unwrap() - 1.0).norm() < 1e-14);
        }
        // L_1^{(0)} vanishes at 1
        let z = CPoint::planar(Complex64::new(0.2, 0.1));
        let w = CPoint::planar(Complex64::new(0.2 + 0.6, 0.1 + 0.8));
        assert!(overlap(p(1, 1), &z, &w).unwrap().norm() < 1e-15);
    }

    #[test]
    fn tail_bound_is_small_far_out() {
        assert!(gaussian_tail_bound(0, 6.0) < 1e-15);
        assert!(gaussian_tail_bound(3, DEFAULT_QUAD_RADIUS) < TAIL_TOLERANCE);
        assert!(gaussian_tail_bound(3, 3.0) > TAIL_TOLERANCE);
        // m = 0: the bound is exact
        assert!((gaussian_tail_bound(0, 2.0) - (-4.0f64).exp()).abs() < 1e-18);
    }

    #[test]
    fn resolution_examples() {
        let origin = CPoint::origin(1);
        assert!((resolution_check(0, &origin, DEFAULT_QUAD_RADIUS).unwrap() - 1.0).abs() < 1e-8);
        assert!((resolution_check(1, &origin, DEFAULT_QUAD_RADIUS).unwrap() - 1.0).abs() < 1e-6);
        let z = CPoint::planar(Complex64::from_polar(1.0, 0.7));
        assert!((resolution_check(2, &z, DEFAULT_QUAD_RADIUS).unwrap() - 1.0).abs() < 1e-6);
        assert!(matches!(
            resolution_check(2, &z, 2.0),
            Err(Error::QuadratureNotConverged(_))
        ));
        assert!(resolution_check(0, &CPoint::origin(2), 8.0).is_err());
    }

    #[test]
    fn expectation_examples() {
        let rule = default_rule().unwrap();
        let z = CPoint::planar(Complex64::new(0.4, -0.9));
        for m in 0..4 {
            let one = expectation_quadrature_with(&rule, m, |_| Complex64::new(1.0, 0.0), &z).unwrap();
            assert!((one - 1.0).norm() < 1e-10);
        }
        let xi = [1.2, 1.6];
        let wave = |w: Complex64| Complex64::from_polar(1.0, xi[0] * w.re + xi[1] * w.im);
        assert!(expectation_quadrature_with(&rule, 1, wave, &z).unwrap().norm() < 1e-7);
        let m0 = expectation_quadrature_with(&rule, 0, wave, &z).unwrap();
        assert!((m0 - wave(z.coords()[0]) * (-1.0f64).exp()).norm() < 1e-10);
        let moment =
            expectation_quadrature_with(&rule, 0, |w| Complex64::new(w.norm_sqr(), 0.0), &z).unwrap();
        assert!((moment.re - (z.norm_sq() + 1.0)).abs() < 1e-8);
    }
}
