//! Terminating hypergeometric series.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::rational::{as_integer, int, Rational};

/// `1F1(-k; b; u) = sum_{i=0}^{k} (-k)_i / (b)_i * u^i / i!`.
///
/// The series is undefined when `b` is one of `0, -1, ..., 1-k`.
pub fn hyp1f1_terminating(k: u32, b: f64, u: f64) -> Result<f64> {
    if b <= 0.0 && b.fract() == 0.0 && b >= 1.0 - f64::from(k) {
        return Err(domain(
            "hyp1f1_terminating",
            format!("bottom parameter {b} makes (b)_i vanish before the series terminates"),
        ));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for i in 0..k {
        let i = f64::from(i);
        term *= (i - f64::from(k)) / (b + i) * u / (i + 1.0);
        sum += term;
    }
    Ok(sum)
}

/// The smallest `N` such that some top parameter equals `-N`.
fn termination_index(top: &[&Rational]) -> Option<u64> {
    top.iter()
        .filter_map(|a| as_integer(a))
        .filter(|a| !a.is_positive())
        .filter_map(|a| (-a).to_u64())
        .min()
}

/// Exact `3F2(a1, a2, a3; b1, b2; 1)` for a terminating series.
///
/// Returns [`Error::Pole`] with the index of the first term whose bottom
/// Pochhammer symbol vanishes before termination. No regularization is
/// attempted.
pub fn hyp3f2_terminating(
    a1: &Rational,
    a2: &Rational,
    a3: &Rational,
    b1: &Rational,
    b2: &Rational,
) -> Result<Rational> {
    let top = [a1, a2, a3];
    let bottom = [b1, b2];
    let last = termination_index(&top).ok_or(Error::NotTerminating)?;

    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 1..=last {
        let shift = int((k - 1) as i64);
        let mut denom = int(k as i64);
        for b in bottom {
            let factor = b + &shift;
            if factor.is_zero() {
                return Err(Error::Pole {
                    term_index: k as usize,
                });
            }
            denom *= factor;
        }
        let numer = top
            .iter()
            .fold(Rational::one(), |acc, a| acc * (*a + &shift));
        term = term * numer / denom;
        sum += &term;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::specfun::orthopoly::{laguerre, laguerre_zero_reciprocal};

    #[test]
    fn hyp1f1_examples() {
        assert_eq!(hyp1f1_terminating(0, 2.5, 3.0).unwrap(), 1.0);
        for &(b, u) in &[(2.0, 1.0), (0.5, 3.0), (7.0, -2.0)] {
            let v = hyp1f1_terminating(1, b, u).unwrap();
            assert!((v - (1.0 - u / b)).abs() < 1e-15);
        }
        assert!(hyp1f1_terminating(3, 0.0, 1.0).is_err());
        assert!(hyp1f1_terminating(3, -2.0, 1.0).is_err());
        // (b)_i with b = -3 only vanishes from i = 4 on, beyond k = 3
        assert!(hyp1f1_terminating(3, -3.0, 1.0).is_ok());
    }

    #[test]
    fn confluent_series_is_a_laguerre_polynomial() {
        // 1F1(-k; alpha+1; u) = k! Gamma(alpha+1)/Gamma(alpha+k+1) L_k^{(alpha)}(u)
        for k in 0..=8 {
            for &alpha in &[1.0, 2.0, 3.0] {
                for i in 0..=20 {
                    let u = 0.5 * f64::from(i);
                    let lhs = hyp1f1_terminating(k, alpha + 1.0, u).unwrap();
                    let rhs = laguerre_zero_reciprocal(k, alpha) * laguerre(k, alpha, u).unwrap();
                    assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn bottom_parameter_alpha_does_not_give_laguerre() {
        // with the bottom parameter equal to alpha itself the identity fails:
        // k = 1, alpha = 2, u = 1 gives 1/2 on the left and 2/3 on the right
        let lhs = hyp1f1_terminating(1, 2.0, 1.0).unwrap();
        let rhs = laguerre_zero_reciprocal(1, 2.0) * laguerre(1, 2.0, 1.0).unwrap();
        assert!((lhs - 0.5).abs() < 1e-15);
        assert!((rhs - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn hyp3f2_examples() {
        let any = rat(7, 3);
        assert_eq!(
            hyp3f2_terminating(&int(0), &any, &rat(1, 2), &int(3), &int(5)).unwrap(),
            int(1)
        );
        assert_eq!(
            hyp3f2_terminating(&int(-1), &rat(1, 2), &int(3), &int(2), &int(2)).unwrap(),
            rat(5, 8)
        );
        assert!(matches!(
            hyp3f2_terminating(&int(-2), &int(1), &int(1), &int(0), &int(1)),
            Err(Error::Pole { term_index: 1 })
        ));
        assert!(matches!(
            hyp3f2_terminating(&rat(1, 2), &int(1), &int(1), &int(2), &int(1)),
            Err(Error::NotTerminating)
        ));
    }

    #[test]
    fn pole_beyond_termination_is_harmless() {
        // b = -3 vanishes at term 4, but the series stops after term 2
        let v = hyp3f2_terminating(&int(-2), &int(1), &int(1), &int(-3), &int(1)).unwrap();
        assert_eq!(v, int(1) + rat(2, 3) + rat(1, 3));
    }

    #[test]
    fn saalschutz_identity() {
        // 3F2(-N, a, b; c, 1+a+b-c-N; 1) = (c-a)_N (c-b)_N / ((c)_N (c-a-b)_N)
        use crate::specfun::combinatorics::pochhammer;
        let (a, b, c) = (rat(1, 3), rat(5, 2), rat(7, 4));
        for n in 0..7u64 {
            let big_n = int(n as i64);
            let b2 = int(1) + &a + &b - &c - &big_n;
            let lhs = hyp3f2_terminating(&-big_n.clone(), &a, &b, &c, &b2).unwrap();
            let rhs = pochhammer(&(&c - &a), n) * pochhammer(&(&c - &b), n)
                / (pochhammer(&c, n) * pochhammer(&(&c - &a - &b), n));
            assert_eq!(lhs, rhs);
        }
    }
}
