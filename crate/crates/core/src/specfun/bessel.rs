//! Bessel functions of the first kind of integer order.
//!
//! The ascending series `J_nu(x) = (x/2)^nu / nu! * sum_k (-x^2/4)^k nu! / (k! (k+nu)!)`
//! is summed in binary fixed point on big integers. Fixed point keeps the
//! absolute error at about `2^-FRACTION_BITS` regardless of how large the
//! intermediate terms get, so the cancellation that ruins the plain `f64`
//! series past `x ~ 20` does not occur.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

const FRACTION_BITS: i64 = 128;

fn decompose(x: f64) -> (u64, i64) {
    let bits = x.to_bits();
    let exponent = ((bits >> 52) & 0x7ff) as i64;
    let fraction = bits & ((1u64 << 52) - 1);
    if exponent == 0 {
        (fraction, -1074)
    } else {
        (fraction | (1u64 << 52), exponent - 1075)
    }
}

fn shift(value: BigInt, by: i64) -> BigInt {
    if by >= 0 {
        value << by as usize
    } else {
        value >> (-by) as usize
    }
}

/// `J_nu(x)` for integer order `nu`. Negative `x` is handled by parity.
pub fn bessel_j(nu: u32, x: f64) -> f64 {
    if x < 0.0 {
        let v = bessel_j(nu, -x);
        return if nu % 2 == 0 { v } else { -v };
    }
    if x == 0.0 {
        return if nu == 0 { 1.0 } else { 0.0 };
    }

    // quarter_sq = x^2 / 4 in fixed point, exact up to the final truncation
    let (mantissa, exponent) = decompose(x);
    let mantissa = BigInt::from(mantissa);
    let quarter_sq = shift(&mantissa * &mantissa, 2 * exponent - 2 + FRACTION_BITS);

    let one = BigInt::from(1u8) << FRACTION_BITS as usize;
    let mut term = one.clone();
    let mut sum = one;
    let nu_big = u64::from(nu);
    let mut k: u64 = 1;
    loop {
        term = (term * &quarter_sq) >> FRACTION_BITS as usize;
        term = -term / BigInt::from(k * (k + nu_big));
        if term.is_zero() {
            break;
        }
        sum += &term;
        k += 1;
    }

    let series = sum.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(FRACTION_BITS as i32));
    let prefactor = (1..=nu).fold(1.0, |acc, i| acc * 0.5 * x / f64::from(i));
    prefactor * series
}

#[cfg(test)]
mod tests {
    use super::*;

    // reference values from a 25-digit evaluation
    const TABLE: &[(u32, f64, f64)] = &[
        (0, 1.0, 0.765_197_686_557_966_6),
        (1, 1.0, 0.440_050_585_744_933_5),
        (0, 10.0, -0.245_935_764_451_348_34),
        (2, 5.0, 0.046_565_116_277_752_215),
        (0, 50.0, 0.055_812_327_669_251_815),
        (1, 50.0, -0.097_511_828_125_175_14),
        (2, 37.5, -0.077_473_283_458_297),
        (3, 0.01, 2.083_320_312_532_552e-8),
    ];

    #[test]
    fn origin_values() {
        assert_eq!(bessel_j(0, 0.0), 1.0);
        assert_eq!(bessel_j(1, 0.0), 0.0);
        assert_eq!(bessel_j(4, 0.0), 0.0);
    }

    #[test]
    fn matches_reference_table() {
        for &(nu, x, expected) in TABLE {
            let v = bessel_j(nu, x);
            assert!(
                (v - expected).abs() <= 1e-15 + 1e-12 * expected.abs(),
                "J_{nu}({x}) = {v}, expected {expected}"
            );
        }
    }

    #[test]
    fn first_zero_of_j0() {
        assert!(bessel_j(0, 2.404_825_557_695_773).abs() < 1e-15);
    }

    #[test]
    fn three_term_recurrence_holds() {
        // J_{nu-1}(x) + J_{nu+1}(x) = (2 nu / x) J_nu(x)
        for &x in &[0.3, 4.0, 17.0, 33.3, 49.0] {
            for nu in 1..4 {
                let lhs = bessel_j(nu - 1, x) + bessel_j(nu + 1, x);
                let rhs = 2.0 * f64::from(nu) / x * bessel_j(nu, x);
                assert!((lhs - rhs).abs() < 1e-13, "x={x} nu={nu}");
            }
        }
    }
}
