//! Exact rational scalars and univariate polynomials over them.
//!
//! Every coefficient identity in the crate is checked with these types, so
//! equality here is equality of exact values, never a tolerance test.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `numer / denom` as an exact rational. Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn from_bigint(value: BigInt) -> Rational {
    Rational::from_integer(value)
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Returns `Some(k)` when `value` is the integer `k`.
pub fn as_integer(value: &Rational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// Renders integers as `"p"` and everything else as `"p/q"`.
pub fn render(value: &Rational) -> String {
    value.to_string()
}

/// Polynomial with exact rational coefficients, `coeffs[j]` multiplying the
/// `j`-th power of the (abstract) variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * u^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The polynomial `a + b u`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `u^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(c u)`.
    pub fn rescale_variable(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        Self::new(out)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, u: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * u + a)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// Horner evaluation in floating point after rounding each coefficient.
    pub fn eval_f64(&self, u: f64) -> f64 {
        horner(&self.to_f64_coeffs(), u)
    }
}

/// Horner evaluation of a real coefficient list.
pub fn horner(coeffs: &[f64], u: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &a| acc * u + a)
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for RationalPoly {
            type Output = RationalPoly;

            fn $method(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = RationalPoly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(RationalPoly::new(vec![int(0)]).is_zero());
        assert_eq!(RationalPoly::zero().degree(), None);
    }

    #[test]
    fn square_of_one_minus_u() {
        let p = RationalPoly::from_integers(&[1, -1]);
        assert_eq!(&p * &p, RationalPoly::from_integers(&[1, -2, 1]));
    }

    #[test]
    fn render_integers_without_denominator() {
        assert_eq!(render(&int(-2)), "-2");
        assert_eq!(render(&rat(2, 32)), "1/16");
    }

    #[test]
    fn big_rationals_convert_to_f64() {
        let huge = from_bigint(BigInt::from(10).pow(200)) / from_bigint(BigInt::from(3).pow(300));
        let expected = 1e200 / 3f64.powi(300);
        assert!(((to_f64(&huge) - expected) / expected).abs() < 1e-14);
    }

    fn small_poly() -> impl Strategy<Value = RationalPoly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..6).prop_map(|cs| {
            RationalPoly::new(cs.into_iter().map(|(p, q)| rat(p, q)).collect())
        })
    }

    proptest! {
        #[test]
        fn product_degree_is_sum_of_degrees(a in small_poly(), b in small_poly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), p in -7i64..7, q in 1i64..5) {
            let u = rat(p, q);
            prop_assert_eq!((&a * &b).eval(&u), a.eval(&u) * b.eval(&u));
            prop_assert_eq!((&a + &b).eval(&u), a.eval(&u) + b.eval(&u));
        }
    }
}
