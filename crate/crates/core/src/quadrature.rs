//! Gauss–Laguerre rules and the polar product rule built on them.
//!
//! Integrals over the plane of the form `∫ e^{-|v|^2} f(v) dμ(v)` become
//! `(1/2) ∫_0^∞ e^{-u} ∫_0^{2π} f(√u e^{iθ}) dθ du` in the squared radius
//! `u`; the radial part takes Gauss–Laguerre nodes and the angular part the
//! periodic trapezoid rule.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Nodes and weights of the `n`-point Gauss–Laguerre rule for `∫_0^∞ e^{-u} f(u) du`.
#[derive(Clone, Debug)]
pub struct GaussLaguerre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLaguerre {
    /// Newton iteration on `L_n` from asymptotic starting guesses.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "Gauss-Laguerre rule needs at least one node".into(),
            ));
        }
        let nf = n as f64;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let mut z = 0.0;
        for i in 0..n {
            z = match i {
                0 => 3.0 / (1.0 + 2.4 * nf),
                1 => z + 15.0 / (1.0 + 2.5 * nf),
                _ => {
                    let ai = (i - 1) as f64;
                    z + (1.0 + 2.55 * ai) / (1.9 * ai) * (z - nodes[i - 2])
                }
            };
            let mut converged = false;
            let mut previous = f64::INFINITY;
            for _ in 0..100 {
                let (p1, p2) = laguerre_pair(n, z);
                let step = p1 * z / (nf * (p1 - p2));
                // once the step stops shrinking it is rounding noise
                if step.abs() >= previous && step.abs() < 1e-9 * z {
                    converged = true;
                    break;
                }
                z -= step;
                previous = step.abs();
                if step.abs() <= 4.0 * f64::EPSILON * z {
                    converged = true;
                    break;
                }
            }
            if !converged || !z.is_finite() || (i > 0 && z <= nodes[i - 1]) {
                return Err(Error::QuadratureNotConverged(format!(
                    "Gauss-Laguerre node {i} of {n} failed to converge"
                )));
            }
            nodes[i] = z;
            // w = z / ((n+1)^2 L_{n+1}(z)^2)
            let (next, _) = laguerre_pair(n + 1, z);
            let scaled = (nf + 1.0) * next;
            let w = z / scaled / scaled;
            weights[i] = if w.is_finite() { w } else { 0.0 };
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&u, &w)| if w == 0.0 { 0.0 } else { w * f(u) })
            .sum()
    }
}

/// `(L_n(z), L_{n-1}(z))` by the three-term recurrence.
fn laguerre_pair(n: usize, z: f64) -> (f64, f64) {
    let mut p1 = 1.0;
    let mut p2 = 0.0;
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = ((2.0 * jf + 1.0 - z) * p2 - jf * p3) / (jf + 1.0);
    }
    (p1, p2)
}

/// Product rule in polar coordinates around a center: Gauss–Laguerre in the
/// squared radius, trapezoid in the angle.
#[derive(Clone, Debug)]
pub struct PolarRule {
    radial: GaussLaguerre,
    angular: usize,
    directions: Vec<Complex64>,
}

impl PolarRule {
    pub fn new(radial_nodes: usize, angular_nodes: usize) -> Result<Self> {
        if angular_nodes == 0 {
            return Err(Error::InvalidParameter(
                "polar rule needs at least one angular node".into(),
            ));
        }
        let directions = (0..angular_nodes)
            .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / angular_nodes as f64))
            .collect();
        Ok(Self {
            radial: GaussLaguerre::new(radial_nodes)?,
            angular: angular_nodes,
            directions,
        })
    }

    pub fn radial(&self) -> &GaussLaguerre {
        &self.radial
    }

    pub fn angular_nodes(&self) -> usize {
        self.angular
    }

    /// `(1/π) ∫_{R^2} e^{-|v|^2} g(|v|^2) f(v) dμ(v)` where `g` is radial and
    /// `f` is sampled around the circle; `v` is passed as a complex number.
    ///
    /// The normalization makes the result exactly 1 for `g = f = 1`.
    pub fn gaussian_average<G, F>(&self, mut radial_weight: G, mut f: F) -> Complex64
    where
        G: FnMut(f64) -> f64,
        F: FnMut(Complex64) -> Complex64,
    {
        let inv = 1.0 / self.angular as f64;
        let mut total = Complex64::new(0.0, 0.0);
        for (&u, &w) in self.radial.nodes.iter().zip(&self.radial.weights) {
            if w == 0.0 {
                continue;
            }
            let g = radial_weight(u);
            if g == 0.0 {
                continue;
            }
            let r = u.sqrt();
            let ring: Complex64 = self.directions.iter().map(|d| f(d * r)).sum();
            total += ring * (w * g * inv);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_rule_is_exact() {
        let rule = GaussLaguerre::new(2).unwrap();
        let s = 2f64.sqrt();
        assert!((rule.nodes[0] - (2.0 - s)).abs() < 1e-15);
        assert!((rule.nodes[1] - (2.0 + s)).abs() < 1e-14);
        assert!((rule.weights[0] - (2.0 + s) / 4.0).abs() < 1e-15);
    }

    #[test]
    fn moments_are_factorials() {
        for &n in &[16usize, 64, 128, 200] {
            let rule = GaussLaguerre::new(n).unwrap();
            let mut factorial = 1.0;
            for k in 0..20 {
                if k > 0 {
                    factorial *= k as f64;
                }
                let moment = rule.integrate(|u| u.powi(k));
                // the smallest nodes limit f64 accuracy to about 1e-12
                assert!(
                    ((moment - factorial) / factorial).abs() < 1e-11,
                    "n={n} k={k}: {moment} vs {factorial}"
                );
            }
        }
    }

    #[test]
    fn exponential_moment() {
        // ∫ e^{-u} e^{-u/3} du = 3/4
        let rule = GaussLaguerre::new(64).unwrap();
        assert!((rule.integrate(|u| (-u / 3.0).exp()) - 0.75).abs() < 1e-12);
    }

    #[test]
    fn polar_average_of_moments() {
        let rule = PolarRule::new(64, 128).unwrap();
        let one = rule.gaussian_average(|_| 1.0, |_| Complex64::new(1.0, 0.0));
        assert!((one.re - 1.0).abs() < 1e-12 && one.im.abs() < 1e-15);
        // (1/π) ∫ e^{-|v|^2} |v|^4 dμ = 2
        let fourth = rule.gaussian_average(|u| u * u, |_| Complex64::new(1.0, 0.0));
        assert!((fourth.re - 2.0).abs() < 1e-12);
        // odd angular harmonics integrate to zero
        let odd = rule.gaussian_average(|_| 1.0, |v| v * v.norm_sqr());
        assert!(odd.norm() < 1e-14);
    }
}
