use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{from_bigint, int, Rational};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn factorial_rational(n: u64) -> Rational {
    from_bigint(factorial(n))
}

/// Rising factorial `a (a+1) ... (a+k-1)`; the empty product is 1.
pub fn pochhammer(a: &Rational, k: u64) -> Rational {
    let mut out = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        out *= &factor;
        factor += Rational::one();
    }
    out
}

/// Floating-point rising factorial.
pub fn pochhammer_f64(a: f64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a + i as f64))
}

/// Binomial coefficient with a rational upper index, `a (a-1) ... (a-k+1) / k!`.
/// Zero for `k < 0`; for a non-negative integer `a` this is zero when `k > a`.
pub fn binomial_rational(a: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut out = Rational::one();
    let mut top = a.clone();
    for i in 1..=k {
        out *= &top;
        out /= int(i);
        top -= Rational::one();
        if out.is_zero() {
            break;
        }
    }
    out
}

/// Binomial coefficient on integers with the finite-sum conventions:
/// 0 when `k < 0`, and 0 when `a >= 0` and `k > a`.
pub fn binomial_general(a: i64, k: i64) -> Rational {
    if k < 0 || (a >= 0 && k > a) {
        return Rational::zero();
    }
    binomial_rational(&int(a), k)
}

/// Exact integer binomial for non-negative arguments.
pub fn binomial_u64(a: u64, k: u64) -> BigInt {
    if k > a {
        return BigInt::zero();
    }
    let k = k.min(a - k);
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * (a - i) / (i + 1);
    }
    out
}

/// Dimension `d(n; p, q)` of the space of spherical harmonics on `S^{2n-1}`
/// of bidegree `(p, q)`:
/// `(p+q+n-1) (p+n-2)! (q+n-2)! / (p! q! (n-1)! (n-2)!)`.
pub fn dimension_hpq(n: u64, p: u64, q: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "dimension d(n;p,q) needs n >= 2 (the formula contains (n-2)!), got n = {n}"
        )));
    }
    let numer = BigInt::from(p + q + n - 1) * factorial(p + n - 2) * factorial(q + n - 2);
    let denom = factorial(p) * factorial(q) * factorial(n - 1) * factorial(n - 2);
    debug_assert!((&numer % &denom).is_zero());
    Ok(numer / denom)
}
