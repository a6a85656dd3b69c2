//! The Fourier multiplier of the Landau-level Berezin transform.
//!
//! With `t = |ξ|^2 / 4` the multiplier is `ĥ_m(ξ) = e^{-t} P_{n,m}(t)` for a
//! polynomial `P_{n,m}` of exact degree `2m`. The coefficient families that
//! describe `P_{n,m}` are all computed here by exact polynomial algebra:
//!
//! * `gamma_j`: `(L_m^{(n-1)}(u))^2 = Σ gamma_j u^j / j!` (monomial expansion)
//! * `c_j`: `(L_m^{(n-1)}(u))^2 = Σ c_j L_j^{(n-1)}(u)` (Laguerre linearization)
//! * `kappa_j`: `B_m = e^{Δ/4} Σ kappa_j Δ^j`, with `Δ ↦ -|ξ|^2`
//! * `sigma_j`: the closed-form double sum for the Laguerre-basis coefficients
//!   of `P_{n,m}`, kept exactly as written (see [`convention_report`]).

mod report;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::PolarRule;
use crate::rational::{int, rat, Rational, RationalPoly};
use crate::specfun::{
    binomial_general, binomial_rational, factorial_rational, hyp3f2_terminating, laguerre_exact,
    laguerre_unchecked, pochhammer,
};

pub use report::{
    convention_report, Adjustment, ConventionReport, Family, FamilyReport, ScaleConvention,
    SignConvention, Verdict,
};

/// Complex dimension `n >= 1` and Landau level `m >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceParams {
    n: u32,
    m: u32,
}

impl SpaceParams {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "complex dimension n must be at least 1".into(),
            ));
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Laguerre parameter `n - 1`.
    pub fn alpha(&self) -> Rational {
        int(i64::from(self.n) - 1)
    }

    /// `m! / (n)_m`, the reciprocal of `L_m^{(n-1)}(0)`.
    pub fn mass_factor(&self) -> Rational {
        factorial_rational(u64::from(self.m)) / pochhammer(&int(i64::from(self.n)), u64::from(self.m))
    }

    fn len(&self) -> usize {
        2 * self.m as usize + 1
    }
}

impl fmt::Display for SpaceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={})", self.n, self.m)
    }
}

/// Which closed form builds the multiplier polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolRep {
    /// Monomial expansion of the squared Laguerre polynomial, mapped through
    /// the Hankel transform of `e^{-ρ^2} ρ^{2j}`.
    Oracle,
    /// The Laguerre-basis form with the closed-form `sigma_j`, as written.
    #[serde(rename = "sigma")]
    SigmaForm,
    /// Powers of the Laplacian with coefficients `kappa_j`.
    #[serde(rename = "kappa")]
    KappaForm,
    /// Products `L_{m-k}^{(k)} L_{m-k}^{(n-1+k)}` weighted by `(-Δ/4)^k`.
    #[serde(rename = "factored")]
    FactoredForm,
}

impl SymbolRep {
    pub const ALL: [SymbolRep; 4] = [
        SymbolRep::Oracle,
        SymbolRep::SigmaForm,
        SymbolRep::KappaForm,
        SymbolRep::FactoredForm,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SymbolRep::Oracle => "oracle",
            SymbolRep::SigmaForm => "sigma",
            SymbolRep::KappaForm => "kappa",
            SymbolRep::FactoredForm => "factored",
        }
    }
}

impl fmt::Display for SymbolRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SymbolRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "oracle" => Ok(SymbolRep::Oracle),
            "sigma" | "sigma_form" => Ok(SymbolRep::SigmaForm),
            "kappa" | "kappa_form" => Ok(SymbolRep::KappaForm),
            "factored" | "factored_form" => Ok(SymbolRep::FactoredForm),
            other => Err(Error::InvalidParameter(format!(
                "unknown symbol representation '{other}' (expected oracle, sigma, kappa or factored)"
            ))),
        }
    }
}

fn sign(j: usize) -> Rational {
    if j % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn squared_laguerre(params: SpaceParams) -> RationalPoly {
    let l = laguerre_exact(params.m, &params.alpha());
    &l * &l
}

/// `gamma_j` with `(L_m^{(n-1)}(u))^2 = Σ_j gamma_j u^j / j!`, from exact
/// polynomial multiplication.
pub fn gamma_coeffs(params: SpaceParams) -> Vec<Rational> {
    let sq = squared_laguerre(params);
    (0..params.len())
        .map(|j| sq.coeff(j) * factorial_rational(j as u64))
        .collect()
}

/// `c_j` with `(L_m^{(n-1)}(u))^2 = Σ_j c_j L_j^{(n-1)}(u)`, by back-substitution
/// down the degree-triangular Laguerre basis.
pub fn linearization_coeffs(params: SpaceParams) -> Vec<Rational> {
    let alpha = params.alpha();
    let mut residual = squared_laguerre(params);
    let mut c = vec![Rational::zero(); params.len()];
    for j in (0..params.len()).rev() {
        let basis = laguerre_exact(j as u32, &alpha);
        let lead = basis.leading().expect("Laguerre polynomials are nonzero").clone();
        let cj = residual.coeff(j) / lead;
        residual = &residual - &basis.scale(&cj);
        c[j] = cj;
    }
    debug_assert!(residual.is_zero());
    c
}

/// The closed-form double sum
/// `sigma_j = m!/(n)_m Σ_s C(j,s) C(m+n-1, m-j+s) C(m+n-1, m-s)`, evaluated
/// literally with no sign correction.
pub fn sigma_coeffs_printed(params: SpaceParams) -> Vec<Rational> {
    let mass = params.mass_factor();
    let top = i64::from(params.m) + i64::from(params.n) - 1;
    let m = i64::from(params.m);
    (0..params.len() as i64)
        .map(|j| {
            let sum = (0..=j).fold(Rational::zero(), |acc, s| {
                acc + binomial_general(j, s)
                    * binomial_general(top, m - j + s)
                    * binomial_general(top, m - s)
            });
            &mass * sum
        })
        .collect()
}

/// `kappa_j = (m!/(n)_m) c_j (-1)^j / (j! 4^j)`, so that
/// `e^{-|ξ|^2/4} Σ kappa_j (-|ξ|^2)^j = ĥ_m(ξ)`.
pub fn kappa_coeffs(params: SpaceParams) -> Vec<Rational> {
    let mass = params.mass_factor();
    linearization_coeffs(params)
        .into_iter()
        .enumerate()
        .map(|(j, c)| {
            let denom = factorial_rational(j as u64) * int(4).pow(j as i32);
            &mass * c * sign(j) / denom
        })
        .collect()
}

/// Feldheim coefficient
/// `A_j(k,l,α,β) = (-1)^{k+l+j} Σ_{s=0}^{j} C(j,s) C(k+α, l-j+s) C(l+β, k-s)`.
pub fn feldheim_a(j: u32, k: u32, l: u32, alpha: &Rational, beta: &Rational) -> Rational {
    let (j, k, l) = (i64::from(j), i64::from(k), i64::from(l));
    let k_alpha = int(k) + alpha;
    let l_beta = int(l) + beta;
    let sum = (0..=j).fold(Rational::zero(), |acc, s| {
        acc + binomial_general(j, s)
            * binomial_rational(&k_alpha, l - j + s)
            * binomial_rational(&l_beta, k - s)
    });
    sum * sign((k + l + j) as usize)
}

/// `gamma_j := (-1)^j A_j(m, m, n-1, n-1)` as written.
pub fn gamma_coeffs_printed(params: SpaceParams) -> Vec<Rational> {
    let alpha = params.alpha();
    (0..params.len())
        .map(|j| sign(j) * feldheim_a(j as u32, params.m, params.m, &alpha, &alpha))
        .collect()
}

/// Shared part of the hypergeometric closed forms for `c_j` and `kappa_j`:
/// `3F2(j/2-m, (j+1)/2-m, j+n; j-m+1, j-m+1; 1) / Γ(j-m+1)^2`, or `None` when
/// either the Gamma factor or the series has a pole.
fn regular_hypergeometric_part(params: SpaceParams, j: usize) -> Option<Rational> {
    let (n, m) = (i64::from(params.n), i64::from(params.m));
    let j = j as i64;
    if j < m {
        return None;
    }
    let b = int(j - m + 1);
    let series = hyp3f2_terminating(
        &(rat(j, 2) - int(m)),
        &(rat(j + 1, 2) - int(m)),
        &int(j + n),
        &b,
        &b,
    );
    match series {
        Ok(value) => {
            let gamma = factorial_rational((j - m) as u64);
            Some(value / (&gamma * &gamma))
        }
        Err(_) => None,
    }
}

/// `c_j = 2^{2m-j} (m!)^2 3F2(...) / ((2m-j)! Γ(j-m+1)^2)` as written;
/// `None` marks a pole (every `j < m`).
pub fn linearization_coeffs_printed(params: SpaceParams) -> Vec<Option<Rational>> {
    let m = params.m as usize;
    let m_fact = factorial_rational(m as u64);
    (0..params.len())
        .map(|j| {
            regular_hypergeometric_part(params, j).map(|part| {
                int(2).pow((2 * m - j) as i32) * &m_fact * &m_fact * part
                    / factorial_rational((2 * m - j) as u64)
            })
        })
        .collect()
}

/// `kappa_j = 2^{2m} (m!)^3 (-1)^j 3F2(...) / ((n)_m j! 2^{3j} (2m-j)! Γ(j-m+1)^2)`
/// as written; `None` marks a pole.
pub fn kappa_coeffs_printed(params: SpaceParams) -> Vec<Option<Rational>> {
    let m = params.m as usize;
    let m_fact = factorial_rational(m as u64);
    let poch = pochhammer(&int(i64::from(params.n)), m as u64);
    (0..params.len())
        .map(|j| {
            regular_hypergeometric_part(params, j).map(|part| {
                int(2).pow((2 * m) as i32) * &m_fact * &m_fact * &m_fact * sign(j) * part
                    / (&poch
                        * factorial_rational(j as u64)
                        * int(2).pow((3 * j) as i32)
                        * factorial_rational((2 * m - j) as u64))
            })
        })
        .collect()
}

/// `Σ_j coeffs[j] L_j^{(alpha)}(t)`.
fn laguerre_series(coeffs: &[Rational], alpha: &Rational) -> RationalPoly {
    coeffs
        .iter()
        .enumerate()
        .fold(RationalPoly::zero(), |acc, (j, c)| {
            &acc + &laguerre_exact(j as u32, alpha).scale(c)
        })
}

fn factored_form(params: SpaceParams, power_sign: Rational) -> RationalPoly {
    let (n, m) = (i64::from(params.n), params.m);
    let poch_nm = pochhammer(&int(n), u64::from(m));
    (0..=m).fold(RationalPoly::zero(), |acc, k| {
        let weight = pochhammer(&int(n - 1), u64::from(k)) * factorial_rational(u64::from(m - k))
            / (&poch_nm * factorial_rational(u64::from(k)));
        if weight.is_zero() {
            return acc;
        }
        let kk = i64::from(k);
        let product = &laguerre_exact(m - k, &int(kk)) * &laguerre_exact(m - k, &int(n - 1 + kk));
        let power = RationalPoly::monomial(power_sign.pow(k as i32) * weight, k as usize);
        &acc + &(&power * &product)
    })
}

/// The factored form with `(Δ/4)^k ↦ (-t)^k` taken literally. It disagrees
/// with the multiplier whenever `n >= 2` and `m >= 1`; kept for the
/// convention report.
pub fn factored_form_printed(params: SpaceParams) -> RationalPoly {
    factored_form(params, -Rational::one())
}

/// The exact polynomial `P_{n,m}(t)` with `ĥ_m(ξ) = e^{-t} P_{n,m}(t)`,
/// `t = |ξ|^2/4`, built by the chosen representation.
///
/// `Oracle`, `KappaForm` and `FactoredForm` return identical polynomials;
/// `SigmaForm` uses the double-sum coefficients as written and generally
/// differs.
pub fn symbol_poly(params: SpaceParams, rep: SymbolRep) -> RationalPoly {
    let alpha = params.alpha();
    match rep {
        SymbolRep::Oracle => laguerre_series(&gamma_coeffs(params), &alpha).scale(&params.mass_factor()),
        SymbolRep::SigmaForm => laguerre_series(&sigma_coeffs_printed(params), &alpha),
        SymbolRep::KappaForm => {
            // Δ ↦ -|ξ|^2 = -4t
            let coeffs = kappa_coeffs(params);
            RationalPoly::new(
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, k)| k * int(-4).pow(j as i32))
                    .collect(),
            )
        }
        SymbolRep::FactoredForm => factored_form(params, Rational::one()),
    }
}

/// The multiplier polynomial in floating point, ready for repeated evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct Multiplier {
    coeffs: Vec<f64>,
}

impl Multiplier {
    pub fn new(params: SpaceParams, rep: SymbolRep) -> Self {
        Self::from_poly(&symbol_poly(params, rep))
    }

    pub fn from_poly(poly: &RationalPoly) -> Self {
        Self {
            coeffs: poly.to_f64_coeffs(),
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `e^{-t} P(t)` at `t = xi_norm_sq / 4`.
    pub fn eval(&self, xi_norm_sq: f64) -> f64 {
        let t = 0.25 * xi_norm_sq;
        (-t).exp() * crate::rational::horner(&self.coeffs, t)
    }
}

/// `ĥ_m(ξ)` as a function of `|ξ|^2`, from the oracle polynomial.
pub fn hhat(params: SpaceParams, xi_norm_sq: f64) -> Result<f64> {
    if !(xi_norm_sq >= 0.0) {
        return Err(crate::error::domain(
            "hhat",
            format!("|xi|^2 must be >= 0, got {xi_norm_sq}"),
        ));
    }
    Ok(Multiplier::new(params, SymbolRep::Oracle).eval(xi_norm_sq))
}

/// Largest `|ξ|` for which the quadrature oracle is trusted.
pub const QUADRATURE_ORACLE_MAX_XI: f64 = 10.0;

/// Default rule for the Fourier quadrature oracle: 200 radial, 256 angular nodes.
pub fn oracle_rule() -> Result<PolarRule> {
    PolarRule::new(200, 256)
}

/// `∫ e^{-i<ξ,z>} h_m(z) dμ(z)` over the plane (`n = 1`), by direct polar
/// quadrature of the kernel.
pub fn hhat_quadrature_oracle(m: u32, xi: [f64; 2]) -> Result<f64> {
    hhat_quadrature_oracle_with(&oracle_rule()?, m, xi)
}

pub fn hhat_quadrature_oracle_with(rule: &PolarRule, m: u32, xi: [f64; 2]) -> Result<f64> {
    let norm = xi[0].hypot(xi[1]);
    if norm > QUADRATURE_ORACLE_MAX_XI {
        return Err(Error::AccuracyRange(format!(
            "|xi| = {norm} exceeds {QUADRATURE_ORACLE_MAX_XI}, where the quadrature oracle is validated"
        )));
    }
    let value = rule.gaussian_average(
        |u| {
            let l = laguerre_unchecked(m, 0.0, u);
            l * l
        },
        |v| num_complex::Complex64::from_polar(1.0, -(xi[0] * v.re + xi[1] * v.im)),
    );
    Ok(value.re)
}

/// The four coefficient families for one `(n, m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable {
    pub params: SpaceParams,
    pub gamma: Vec<Rational>,
    pub sigma: Vec<Rational>,
    pub c: Vec<Rational>,
    pub kappa: Vec<Rational>,
}

impl CoeffTable {
    pub fn new(params: SpaceParams) -> Self {
        Self {
            params,
            gamma: gamma_coeffs(params),
            sigma: sigma_coeffs_printed(params),
            c: linearization_coeffs(params),
            kappa: kappa_coeffs(params),
        }
    }

    /// `Σ_j gamma_j C(n-1+j, j)`, which must equal `(n)_m / m!` (unit mass of `h_m`).
    pub fn mass_sum(&self) -> Rational {
        let n = i64::from(self.params.n);
        self.gamma
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, g)| {
                acc + g * binomial_general(n - 1 + j as i64, j as i64)
            })
    }

    pub fn mass_identity_holds(&self) -> bool {
        self.mass_sum() * self.params.mass_factor() == Rational::one()
    }

    /// The constant terms of the monomial and Laguerre expansions agree:
    /// `Σ_j c_j L_j^{(n-1)}(0) = gamma_0`.
    pub fn constant_terms_agree(&self) -> bool {
        let alpha = self.params.alpha();
        let at_zero = self
            .c
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, c)| {
                acc + c * laguerre_exact(j as u32, &alpha).coeff(0)
            });
        at_zero == self.gamma[0]
    }
}
