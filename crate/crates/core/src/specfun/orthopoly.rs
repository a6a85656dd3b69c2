//! Laguerre, normalized Jacobi and disk polynomials.

use num_complex::Complex64;
use num_traits::One;

use crate::error::{domain, Result};
use crate::rational::{int, Rational, RationalPoly};

fn check_alpha(function: &'static str, alpha: f64) -> Result<()> {
    if alpha > -1.0 {
        Ok(())
    } else {
        Err(domain(function, format!("alpha must exceed -1, got {alpha}")))
    }
}

/// `L_k^{(alpha)}(x)` by the three-term recurrence in the degree.
pub fn laguerre(k: u32, alpha: f64, x: f64) -> Result<f64> {
    check_alpha("laguerre", alpha)?;
    Ok(laguerre_unchecked(k, alpha, x))
}

pub(crate) fn laguerre_unchecked(k: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for j in 1..k {
        let j = f64::from(j);
        let next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact coefficients of `L_k^{(alpha)}(u)`, from the same recurrence carried
/// out over rational polynomials.
pub fn laguerre_exact(k: u32, alpha: &Rational) -> RationalPoly {
    let mut prev = RationalPoly::one();
    if k == 0 {
        return prev;
    }
    let mut cur = RationalPoly::linear(alpha + Rational::one(), int(-1));
    for j in 1..k {
        let j = int(i64::from(j));
        let a = &j * int(2) + int(1) + alpha;
        let b = &j + alpha;
        let step = &RationalPoly::linear(a, int(-1)) * &cur;
        let next = (&step - &prev.scale(&b)).scale(&(Rational::one() / (j + int(1))));
        prev = cur;
        cur = next;
    }
    cur
}

/// `k! / (alpha+1)_k`, which equals `k! Gamma(alpha+1) / Gamma(k+alpha+1)`.
pub(crate) fn laguerre_zero_reciprocal(k: u32, alpha: f64) -> f64 {
    (1..=k).fold(1.0, |acc, i| {
        let i = f64::from(i);
        acc * i / (alpha + i)
    })
}

/// Rescaled Laguerre function
/// `k! Gamma(alpha+1)/Gamma(k+alpha+1) * exp(-u/2) * L_k^{(alpha)}(u)`,
/// equal to 1 at `u = 0`.
pub fn script_laguerre(k: u32, alpha: f64, u: f64) -> Result<f64> {
    check_alpha("script_laguerre", alpha)?;
    if u < 0.0 {
        return Err(domain("script_laguerre", format!("u must be >= 0, got {u}")));
    }
    Ok(script_laguerre_unchecked(k, alpha, u))
}

pub(crate) fn script_laguerre_unchecked(k: u32, alpha: f64, u: f64) -> f64 {
    if u == 0.0 {
        return 1.0;
    }
    laguerre_zero_reciprocal(k, alpha) * (-0.5 * u).exp() * laguerre_unchecked(k, alpha, u)
}

fn jacobi_unchecked(k: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
    let ab = alpha + beta;
    for n in 2..=k {
        let n = f64::from(n);
        let s = 2.0 * n + ab;
        let a1 = 2.0 * n * (n + ab) * (s - 2.0);
        let a2 = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
        let a3 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * s;
        let next = (a2 * cur - a3 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial normalized to 1 at `x = 1`:
/// `P_k^{(alpha,beta)}(x) / P_k^{(alpha,beta)}(1)`.
pub fn jacobi_normalized(k: u32, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    check_alpha("jacobi_normalized", alpha)?;
    if beta <= -1.0 {
        return Err(domain(
            "jacobi_normalized",
            format!("beta must exceed -1, got {beta}"),
        ));
    }
    Ok(jacobi_normalized_unchecked(k, alpha, beta, x))
}

pub(crate) fn jacobi_normalized_unchecked(k: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    if x == 1.0 {
        return 1.0;
    }
    // P_k(1) = (alpha+1)_k / k!
    let at_one = (1..=k).fold(1.0, |acc, i| {
        let i = f64::from(i);
        acc * (alpha + i) / i
    });
    jacobi_unchecked(k, alpha, beta, x) / at_one
}

/// Disk polynomial
/// `R_{p,q}^gamma(xi) = |xi|^{|p-q|} e^{i(p-q) arg xi} R_{min(p,q)}^{(gamma,|p-q|)}(2|xi|^2 - 1)`
/// on the closed unit disk.
pub fn disk_polynomial(p: u32, q: u32, gamma: f64, xi: Complex64) -> Result<Complex64> {
    check_alpha("disk_polynomial", gamma)?;
    let r = xi.norm();
    if r > 1.0 {
        return Err(domain(
            "disk_polynomial",
            format!("|xi| must not exceed 1, got {r}"),
        ));
    }
    Ok(disk_polynomial_unchecked(p, q, gamma, xi))
}

pub(crate) fn disk_polynomial_unchecked(p: u32, q: u32, gamma: f64, xi: Complex64) -> Complex64 {
    // |xi|^{|p-q|} e^{i(p-q) arg xi} is xi^{p-q} or conj(xi)^{q-p}
    let phase = if p >= q {
        xi.powu(p - q)
    } else {
        xi.conj().powu(q - p)
    };
    let radial = jacobi_normalized_unchecked(
        p.min(q),
        gamma,
        f64::from(p.abs_diff(q)),
        2.0 * xi.norm_sqr() - 1.0,
    );
    phase * radial
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, to_f64};
    use crate::specfun::combinatorics::{binomial_rational, factorial_rational};
    use proptest::prelude::*;

    /// Closed-form coefficients `(-1)^i C(k+alpha, k-i) / i!`, independent of
    /// the recurrence.
    fn laguerre_explicit(k: u32, alpha: &Rational) -> RationalPoly {
        let top = int(i64::from(k)) + alpha;
        RationalPoly::new(
            (0..=k)
                .map(|i| {
                    let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                    sign * binomial_rational(&top, i64::from(k - i))
                        / factorial_rational(u64::from(i))
                })
                .collect(),
        )
    }

    #[test]
    fn laguerre_examples() {
        for &a in &[0.0, 0.5, 3.0] {
            assert_eq!(laguerre(0, a, 1.7).unwrap(), 1.0);
        }
        assert_eq!(laguerre(2, 2.0, 0.0).unwrap(), 6.0);
        assert_eq!(laguerre(1, 0.0, 2.0).unwrap(), -1.0);
        assert!(laguerre(3, -1.0, 0.5).is_err());
    }

    #[test]
    fn laguerre_exact_examples() {
        assert_eq!(laguerre_exact(0, &rat(5, 2)), RationalPoly::one());
        assert_eq!(laguerre_exact(1, &int(0)), RationalPoly::from_integers(&[1, -1]));
        assert_eq!(
            laguerre_exact(2, &int(0)),
            RationalPoly::new(vec![int(1), int(-2), rat(1, 2)])
        );
    }

    #[test]
    fn recurrence_matches_explicit_sum() {
        for alpha in [int(0), int(1), int(2), rat(5, 2), rat(-1, 2)] {
            for k in 0..=12 {
                assert_eq!(laguerre_exact(k, &alpha), laguerre_explicit(k, &alpha));
            }
        }
    }

    #[test]
    fn float_recurrence_matches_exact_polynomial() {
        let points = [
            rat(0, 1),
            rat(1, 3),
            rat(1, 2),
            rat(1, 1),
            rat(7, 4),
            rat(3, 1),
            rat(5, 1),
            rat(10, 1),
            rat(25, 2),
        ];
        for alpha in [int(0), int(1), int(2), rat(5, 2)] {
            for k in 0..=12 {
                let poly = laguerre_exact(k, &alpha);
                for x in &points {
                    let exact = to_f64(&poly.eval(x));
                    let float = laguerre(k, to_f64(&alpha), to_f64(x)).unwrap();
                    let rel = (float - exact).abs() / exact.abs().max(f64::MIN_POSITIVE);
                    assert!(rel <= 1e-12, "k={k} alpha={alpha} x={x}: {float} vs {exact}");
                }
            }
        }
    }

    #[test]
    fn script_laguerre_examples() {
        let u = 1.3;
        assert!((script_laguerre(0, 2.5, u).unwrap() - (-u / 2.0).exp()).abs() < 1e-15);
        for k in 0..8 {
            assert_eq!(script_laguerre(k, 1.5, 0.0).unwrap(), 1.0);
            // the prefactor cancels L_k^{(alpha)}(0) = (alpha+1)_k / k!
            let near_zero = script_laguerre(k, 1.5, 1e-300).unwrap();
            assert!((near_zero - 1.0).abs() < 1e-13);
        }
        assert!((script_laguerre(1, 0.0, 2.0).unwrap() + (-1.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn jacobi_examples() {
        for k in 0..=12 {
            assert_eq!(jacobi_normalized(k, 0.3, 2.0, 1.0).unwrap(), 1.0);
        }
        for &x in &[-0.9, -0.2, 0.0, 0.4, 0.99] {
            assert!((jacobi_normalized(1, 0.0, 0.0, x).unwrap() - x).abs() < 1e-15);
        }
        for &g in &[0.0, 1.0, 2.5] {
            let v = jacobi_normalized(1, g, 0.0, -1.0).unwrap();
            assert!((v + 1.0 / (g + 1.0)).abs() < 1e-15);
        }
        // Legendre P_2(x) = (3x^2 - 1)/2
        let x = 0.3;
        let p2 = jacobi_normalized(2, 0.0, 0.0, x).unwrap();
        assert!((p2 - (3.0 * x * x - 1.0) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn jacobi_sum_at_minus_one() {
        // P_k^{(a,b)}(-1) = (-1)^k (b+1)_k / k!, so R_k(-1) = (-1)^k (b+1)_k / (a+1)_k
        let (a, b) = (0.5, 2.0);
        for k in 0..8u32 {
            let expected = (1..=k).fold(if k % 2 == 0 { 1.0 } else { -1.0 }, |acc, i| {
                let i = f64::from(i);
                acc * (b + i) / (a + i)
            });
            let v = jacobi_normalized(k, a, b, -1.0).unwrap();
            assert!((v - expected).abs() < 1e-12 * expected.abs().max(1.0));
        }
    }

    #[test]
    fn disk_polynomial_examples() {
        let one = Complex64::new(1.0, 0.0);
        for p in 0..5 {
            for q in 0..5 {
                let v = disk_polynomial(p, q, 0.5, one).unwrap();
                assert!((v - one).norm() < 1e-14);
            }
        }
        let xi = Complex64::from_polar(0.7, 1.1);
        for p in 0..6 {
            let v = disk_polynomial(p, 0, 1.0, xi).unwrap();
            assert!((v - xi.powu(p)).norm() < 1e-14);
        }
        let v = disk_polynomial(1, 1, 0.0, xi).unwrap();
        assert!((v.re - (2.0 * 0.49 - 1.0)).abs() < 1e-14 && v.im.abs() < 1e-15);
        assert_eq!(disk_polynomial(2, 1, 0.0, Complex64::new(0.0, 0.0)).unwrap(), Complex64::new(0.0, 0.0));
        assert!(disk_polynomial(1, 0, 0.0, Complex64::new(0.9, 0.5)).is_err());
    }

    proptest! {
        #[test]
        fn disk_polynomial_conjugation_symmetry(
            p in 0u32..7, q in 0u32..7, gamma in -0.9f64..4.0,
            r in 0.0f64..1.0, theta in 0.0f64..std::f64::consts::TAU,
        ) {
            let xi = Complex64::from_polar(r, theta);
            let a = disk_polynomial(p, q, gamma, xi).unwrap();
            let b = disk_polynomial(q, p, gamma, xi).unwrap();
            prop_assert!((a - b.conj()).norm() <= 1e-13);
        }
    }
}
