//! Reproducing kernels of the Landau-level eigenspaces and their series
//! expansion over disk polynomials.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::rational::{int, to_f64, Rational};
use crate::specfun::{
    binomial_general, dimension_hpq, disk_polynomial_unchecked, factorial_rational,
    laguerre_unchecked, pochhammer, script_laguerre_unchecked,
};
use crate::symbols::SpaceParams;

/// A point of `C^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CPoint {
    coords: Vec<Complex64>,
}

impl CPoint {
    pub fn new(coords: Vec<Complex64>) -> Self {
        Self { coords }
    }

    /// From `2n` reals `re_1, im_1, ..., re_n, im_n`.
    pub fn from_reals(reals: &[f64]) -> Result<Self> {
        if reals.is_empty() || reals.len() % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "a point of C^n needs an even, nonzero number of real coordinates, got {}",
                reals.len()
            )));
        }
        Ok(Self::new(
            reals
                .chunks_exact(2)
                .map(|c| Complex64::new(c[0], c[1]))
                .collect(),
        ))
    }

    pub fn origin(n: usize) -> Self {
        Self::new(vec![Complex64::zero(); n])
    }

    /// A point of the plane.
    pub fn planar(z: Complex64) -> Self {
        Self::new(vec![z])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    /// `Σ_j z_j conj(w_j)`.
    pub fn hermitian_inner(&self, other: &CPoint) -> Complex64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(z, w)| z * w.conj())
            .sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// `|z - w|^2`.
    pub fn distance_sq(&self, other: &CPoint) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(z, w)| (z - w).norm_sqr())
            .sum()
    }
}

impl fmt::Display for CPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| format!("{c}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub(crate) fn check_dim(params: SpaceParams, points: &[&CPoint]) -> Result<()> {
    let n = params.n() as usize;
    for p in points {
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.dim(),
            });
        }
    }
    Ok(())
}

/// `K_m(z, w) = π^{-n} e^{<z,w>} L_m^{(n-1)}(|z-w|^2)`.
pub fn reproducing_kernel(params: SpaceParams, z: &CPoint, w: &CPoint) -> Result<Complex64> {
    check_dim(params, &[z, w])?;
    let n = f64::from(params.n());
    let lag = laguerre_unchecked(params.m(), n - 1.0, z.distance_sq(w));
    Ok(z.hermitian_inner(w).exp() * (lag * PI.powf(-n)))
}

/// `σ/(σ+p+q) C(m,q) (σ+m+1)_p / (p! (σ+q)_p (σ+p)_q)` in exact arithmetic,
/// one column `q` at a time for `p = 0..=p_max`.
fn series_coefficients(sigma: i64, m: u32, p_max: u32) -> Vec<Vec<Rational>> {
    let sig = int(sigma);
    (0..=m)
        .map(|q| {
            let q64 = i64::from(q);
            let binom = binomial_general(i64::from(m), q64);
            // (σ+m+1)_p / (p! (σ+q)_p), advanced one p at a time
            let mut ratio = Rational::one();
            (0..=p_max)
                .map(|p| {
                    let p64 = i64::from(p);
                    if p > 0 {
                        ratio *= int(sigma + i64::from(m) + p64) / (int(p64) * int(sigma + q64 + p64 - 1));
                    }
                    &sig / int(sigma + p64 + q64) * &binom * &ratio
                        / pochhammer(&int(sigma + p64), u64::from(q))
                })
                .collect()
        })
        .collect()
}

/// Largest rounding excess of `|<z/|z|, w/|w|>|` over 1 that is silently clamped.
pub const UNIT_CLAMP: f64 = 1e-14;

fn unit_inner(z: &CPoint, w: &CPoint) -> Result<Complex64> {
    let xi = z.hermitian_inner(w) / (z.norm() * w.norm());
    let r = xi.norm();
    if r > 1.0 + UNIT_CLAMP {
        return Err(domain(
            "kernel_series",
            format!("normalized inner product has modulus {r} > 1"),
        ));
    }
    Ok(if r > 1.0 { xi / r } else { xi })
}

/// The kernel as a truncated double series over disk polynomials,
/// `p = 0..=p_max`, `q = 0..=m`. Converges to [`reproducing_kernel`].
pub fn kernel_series(params: SpaceParams, z: &CPoint, w: &CPoint, p_max: u32) -> Result<Complex64> {
    check_dim(params, &[z, w])?;
    if params.n() < 2 {
        return Err(domain(
            "kernel_series",
            "n >= 2 is required: the disk-polynomial parameter n-2 must exceed -1",
        ));
    }
    if z.norm_sq() == 0.0 || w.norm_sq() == 0.0 {
        return Err(domain(
            "kernel_series",
            "z and w must be nonzero: the series uses z/|z| and w/|w|",
        ));
    }
    let n = i64::from(params.n());
    let m = params.m();
    let sigma = n - 1;
    let xi = unit_inner(z, w)?;
    let (x, y) = (z.norm(), w.norm());
    let coeffs = series_coefficients(sigma, m, p_max);
    let mut sum = Complex64::zero();
    for p in 0..=p_max {
        for q in 0..=m {
            let order = p + q;
            let alpha = (sigma + i64::from(order)) as f64;
            let radial = x.powi(order as i32)
                * script_laguerre_unchecked(m - q, alpha, x * x)
                * y.powi(order as i32)
                * script_laguerre_unchecked(m - q, alpha, y * y);
            let angular = disk_polynomial_unchecked(p, q, (sigma - 1) as f64, xi);
            sum += angular * (to_f64(&coeffs[q as usize][p as usize]) * radial);
        }
    }
    // Γ(n+m) / (π^n m! (n-1)!) e^{(|z|^2 + |w|^2)/2}
    let lead = to_f64(
        &(factorial_rational((n + i64::from(m) - 1) as u64)
            / (factorial_rational(u64::from(m)) * factorial_rational((n - 1) as u64))),
    );
    Ok(sum * (lead * PI.powf(-(n as f64)) * (0.5 * (x * x + y * y)).exp()))
}

/// `|LHS - RHS_{k_max}|` for the Laguerre addition formula
/// `e^{i x y r sin ψ} 𝓛_s^{(σ)}(x^2 + y^2 - 2 x y r cos ψ)
///   = Σ_k Σ_{l<=s} σ/(σ+k+l) C(s,l) (σ+s+1)_k / (k! (σ+l)_k (σ+k)_l)
///     x^{k+l} 𝓛_{s-l}^{(σ+k+l)}(x^2) y^{k+l} 𝓛_{s-l}^{(σ+k+l)}(y^2) R_{k,l}^{σ-1}(r e^{iψ})`.
pub fn addition_formula_residual(
    sigma: f64,
    s: u32,
    x: f64,
    y: f64,
    r: f64,
    psi: f64,
    k_max: u32,
) -> Result<f64> {
    let checks = [
        (sigma > 0.0, "sigma > 0"),
        (x >= 0.0, "x >= 0"),
        (y >= 0.0, "y >= 0"),
        ((0.0..=1.0).contains(&r), "0 <= r <= 1"),
        ((0.0..2.0 * PI).contains(&psi), "0 <= psi < 2π"),
        (x.is_finite() && y.is_finite(), "finite x, y"),
    ];
    if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(domain("addition_formula_residual", format!("requires {what}")));
    }
    let arg = (x * x + y * y - 2.0 * x * y * r * psi.cos()).max(0.0);
    let lhs = Complex64::from_polar(1.0, x * y * r * psi.sin()) * script_laguerre_unchecked(s, sigma, arg);

    let xi = Complex64::from_polar(r, psi);
    let mut rhs = Complex64::zero();
    for l in 0..=s {
        let binom = to_f64(&binomial_general(i64::from(s), i64::from(l)));
        let lf = f64::from(l);
        // (σ+s+1)_k / (k! (σ+l)_k), advanced one k at a time
        let mut ratio = 1.0;
        for k in 0..=k_max {
            let kf = f64::from(k);
            if k > 0 {
                ratio *= (sigma + f64::from(s) + kf) / (kf * (sigma + lf + kf - 1.0));
            }
            let poch: f64 = (0..l).map(|i| sigma + kf + f64::from(i)).product();
            let coeff = sigma / (sigma + kf + lf) * binom * ratio / poch;
            let order = (k + l) as i32;
            let alpha = sigma + kf + lf;
            let radial = x.powi(order)
                * script_laguerre_unchecked(s - l, alpha, x * x)
                * y.powi(order)
                * script_laguerre_unchecked(s - l, alpha, y * y);
            rhs += disk_polynomial_unchecked(k, l, sigma - 1.0, xi) * (coeff * radial);
        }
    }
    Ok((lhs - rhs).norm())
}

/// Both sides of the rewriting of the series coefficient:
/// `Γ(n) d(n,p,q) Γ(m+n+p) / ((m-q)! Γ(n+p+q)^2)` against
/// `1/(n-2)! · Γ(n+m)/(m! (n-1)) · σ/(σ+p+q) C(m,q) (σ+m+1)_p / (p! (σ+q)_p (σ+p)_q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffIdentity {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

pub fn coeff_identity_c(params: SpaceParams, p: u32, q: u32) -> Result<CoeffIdentity> {
    let (n, m) = (u64::from(params.n()), u64::from(params.m()));
    let (p, q) = (u64::from(p), u64::from(q));
    if q > m {
        return Err(Error::InvalidParameter(format!("q = {q} must not exceed m = {m}")));
    }
    let d = crate::rational::from_bigint(dimension_hpq(n, p, q)?);
    let gamma = |k: u64| factorial_rational(k - 1);
    let lhs = gamma(n) * d * gamma(m + n + p) / (factorial_rational(m - q) * gamma(n + p + q).pow(2));

    let sigma = int(n as i64 - 1);
    let rhs = gamma(n + m) / (factorial_rational(m) * &sigma) / factorial_rational(n - 2)
        * &sigma
        / (&sigma + int((p + q) as i64))
        * binomial_general(m as i64, q as i64)
        * pochhammer(&(&sigma + int(m as i64 + 1)), p)
        / (factorial_rational(p)
            * pochhammer(&(&sigma + int(q as i64)), p)
            * pochhammer(&(&sigma + int(p as i64)), q));
    let equal = lhs == rhs;
    Ok(CoeffIdentity { lhs, rhs, equal })
}

/// `[K_m(z_i, z_j)]`.
pub fn gram_matrix(params: SpaceParams, points: &[CPoint]) -> Result<Vec<Vec<Complex64>>> {
    points
        .iter()
        .map(|z| points.iter().map(|w| reproducing_kernel(params, z, w)).collect())
        .collect()
}

/// Whether a Hermitian matrix has no eigenvalue below `-rel_tol · trace`,
/// decided by a Cholesky factorization of the shifted matrix.
pub fn is_positive_semidefinite(matrix: &[Vec<Complex64>], rel_tol: f64) -> bool {
    let size = matrix.len();
    let trace: f64 = (0..size).map(|i| matrix[i][i].re).sum();
    let shift = rel_tol * trace.abs();
    let mut l = vec![vec![Complex64::zero(); size]; size];
    for i in 0..size {
        for j in 0..=i {
            let mut acc = matrix[i][j];
            if i == j {
                acc += shift;
            }
            for k in 0..j {
                acc -= l[i][k] * l[j][k].conj();
            }
            if i == j {
                if !(acc.re > 0.0) {
                    return false;
                }
                l[i][i] = Complex64::new(acc.re.sqrt(), 0.0);
            } else {
                l[i][j] = acc / l[j][j].re;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(n: u32, m: u32) -> SpaceParams {
        SpaceParams::new(n, m).unwrap()
    }

    fn random_point(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> CPoint {
        loop {
            let reals: Vec<f64> = (0..2 * n).map(|_| rng.gen_range(-radius..radius)).collect();
            let z = CPoint::from_reals(&reals).unwrap();
            if z.norm() <= radius && z.norm() > 1e-3 {
                return z;
            }
        }
    }

    #[test]
    fn point_algebra() {
        let z = CPoint::from_reals(&[1.0, 2.0, 0.0, -1.0]).unwrap();
        let w = CPoint::from_reals(&[0.5, 0.0, 1.0, 1.0]).unwrap();
        assert_eq!(z.norm_sq(), 6.0);
        assert_eq!(z.hermitian_inner(&z), Complex64::new(6.0, 0.0));
        assert_eq!(z.hermitian_inner(&w), w.hermitian_inner(&z).conj());
        assert!(CPoint::from_reals(&[1.0]).is_err());
    }

    #[test]
    fn kernel_examples() {
        let origin = CPoint::origin(1);
        let k = reproducing_kernel(p(1, 0), &origin, &origin).unwrap();
        assert!((k.re - 1.0 / PI).abs() < 1e-16);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n, m) in [(1, 0), (1, 3), (2, 1), (3, 2)] {
            let z = random_point(&mut rng, n as usize, 1.5);
            let w = random_point(&mut rng, n as usize, 1.5);
            // m = 0 is the Bargmann kernel
            let k0 = reproducing_kernel(p(n, 0), &z, &w).unwrap();
            let bargmann = z.hermitian_inner(&w).exp() * PI.powi(-(n as i32));
            assert!((k0 - bargmann).norm() < 1e-14 * bargmann.norm());
            // Hermitian symmetry
            let kzw = reproducing_kernel(p(n, m), &z, &w).unwrap();
            let kwz = reproducing_kernel(p(n, m), &w, &z).unwrap();
            assert!((kzw - kwz.conj()).norm() < 1e-14 * kzw.norm().max(1.0));
            // diagonal value π^{-n} e^{|z|^2} (n)_m / m!
            let diag = reproducing_kernel(p(n, m), &z, &z).unwrap();
            let expected = to_f64(&(pochhammer(&int(n.into()), m.into()) / factorial_rational(m.into())))
                * PI.powi(-(n as i32))
                * z.norm_sq().exp();
            assert!((diag.re - expected).abs() < 1e-13 * expected && diag.im.abs() < 1e-14);
        }
        let wrong = CPoint::origin(2);
        assert!(matches!(
            reproducing_kernel(p(1, 0), &origin, &wrong),
            Err(Error::DimensionMismatch { expected: 1, got: 2 })
        ));
    }

    #[test]
    fn series_on_the_diagonal_of_the_unit_sphere() {
        let z = CPoint::from_reals(&[0.6, 0.0, 0.0, 0.8]).unwrap();
        let v = kernel_series(p(2, 0), &z, &z, 40).unwrap();
        let expected = std::f64::consts::E / (PI * PI);
        assert!((v.re - expected).abs() < 1e-10 && v.im.abs() < 1e-12);
    }

    #[test]
    fn series_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in 0..=2 {
            for _ in 0..5 {
                let z = random_point(&mut rng, 2, 1.5);
                let w = random_point(&mut rng, 2, 1.5);
                let exact = reproducing_kernel(p(2, m), &z, &w).unwrap();
                let series = kernel_series(p(2, m), &z, &w, 80).unwrap();
                assert!(
                    (series - exact).norm() <= 1e-7 * exact.norm(),
                    "m={m}: {series} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn series_in_three_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let z = random_point(&mut rng, 3, 1.2);
        let w = random_point(&mut rng, 3, 1.2);
        let exact = reproducing_kernel(p(3, 2), &z, &w).unwrap();
        let series = kernel_series(p(3, 2), &z, &w, 80).unwrap();
        assert!((series - exact).norm() <= 1e-9 * exact.norm());
    }

    #[test]
    fn series_truncation_improves() {
        let z = CPoint::from_reals(&[1.0, 0.3, -0.4, 0.2]).unwrap();
        let w = CPoint::from_reals(&[-0.2, 0.9, 0.5, -0.7]).unwrap();
        let exact = reproducing_kernel(p(2, 1), &z, &w).unwrap();
        let r20 = (kernel_series(p(2, 1), &z, &w, 20).unwrap() - exact).norm();
        let r40 = (kernel_series(p(2, 1), &z, &w, 40).unwrap() - exact).norm();
        assert!(r40 <= r20);
    }

    #[test]
    fn series_domain_errors() {
        let z = CPoint::from_reals(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        let zero = CPoint::origin(2);
        assert!(kernel_series(p(2, 1), &z, &zero, 10).is_err());
        let planar = CPoint::from_reals(&[1.0, 0.0]).unwrap();
        let err = kernel_series(p(1, 1), &planar, &planar, 10).unwrap_err();
        assert!(err.to_string().contains("-1"));
    }

    #[test]
    fn addition_formula_examples() {
        assert!(addition_formula_residual(1.5, 0, 0.7, 1.1, 0.4, 2.0, 30).unwrap() <= 1e-10);
        for s in 0..=3 {
            assert!(addition_formula_residual(2.0, s, 0.9, 0.9, 1.0, 0.0, 50).unwrap() <= 1e-9);
        }
        let res = addition_formula_residual(1.0, 2, 1.0, 0.5, 0.5, PI / 3.0, 60).unwrap();
        assert!(res <= 1e-8, "{res}");
        assert!(addition_formula_residual(0.0, 1, 1.0, 1.0, 0.5, 0.0, 10).is_err());
        assert!(addition_formula_residual(1.0, 1, 1.0, 1.0, 1.5, 0.0, 10).is_err());
        assert!(addition_formula_residual(1.0, 1, 1.0, 1.0, 0.5, 7.0, 10).is_err());
    }

    #[test]
    fn coefficient_identity_examples() {
        let one = coeff_identity_c(p(2, 0), 0, 0).unwrap();
        assert_eq!(one.lhs, int(1));
        assert!(one.equal);
        assert!(coeff_identity_c(p(2, 1), 1, 1).unwrap().equal);
        assert!(coeff_identity_c(p(3, 2), 2, 1).unwrap().equal);
        assert!(coeff_identity_c(p(1, 2), 0, 0).is_err());
        assert!(coeff_identity_c(p(2, 1), 0, 2).is_err());
        // n = 2, m = 1, p = 1, q = 0: Γ(2)·2·Γ(4)/(1!·Γ(3)^2) = 3
        assert_eq!(coeff_identity_c(p(2, 1), 1, 0).unwrap().lhs, int(3));
    }

    #[test]
    fn gram_matrix_is_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (n, m) in [(1, 0), (1, 2), (2, 1)] {
            let points: Vec<CPoint> = (0..6).map(|_| random_point(&mut rng, n, 1.5)).collect();
            let g = gram_matrix(p(n as u32, m), &points).unwrap();
            assert!(is_positive_semidefinite(&g, 1e-10));
        }
        let indefinite = vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
            vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)],
        ];
        assert!(!is_positive_semidefinite(&indefinite, 1e-10));
    }
}
