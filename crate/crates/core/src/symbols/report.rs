//! Comparison of closed-form coefficient formulas against the exact oracle.
//!
//! Each family is checked entry by entry: a printed value either equals the
//! oracle, equals it after one of a small set of sign or scale adjustments,
//! differs, or cannot be evaluated because of a pole.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{
    factored_form_printed, gamma_coeffs, gamma_coeffs_printed, kappa_coeffs, kappa_coeffs_printed,
    linearization_coeffs, linearization_coeffs_printed, sigma_coeffs_printed, symbol_poly,
    SpaceParams, SymbolRep,
};
use crate::rational::{render, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gamma,
    Sigma,
    C,
    Kappa,
    /// Monomial coefficients of the literal factored form.
    Factored,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Gamma,
        Family::Sigma,
        Family::C,
        Family::Kappa,
        Family::Factored,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Gamma => "gamma",
            Family::Sigma => "sigma",
            Family::C => "c",
            Family::Kappa => "kappa",
            Family::Factored => "factored",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    ExactMatch,
    MatchUpToConvention,
    Mismatch,
    PoleUndefined,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::ExactMatch => "EXACT_MATCH",
            Verdict::MatchUpToConvention => "MATCH_UP_TO_CONVENTION",
            Verdict::Mismatch => "MISMATCH",
            Verdict::PoleUndefined => "POLE_UNDEFINED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignConvention {
    Identity,
    /// Multiply entry `j` by `(-1)^j`.
    Alternating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScaleConvention {
    One,
    /// Multiply by `m!/(n)_m`.
    MassFactor,
}

/// `printed_j = sign_j * scale * oracle_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Adjustment {
    pub sign: SignConvention,
    pub scale: ScaleConvention,
}

impl Adjustment {
    pub const IDENTITY: Adjustment = Adjustment {
        sign: SignConvention::Identity,
        scale: ScaleConvention::One,
    };

    pub const CANDIDATES: [Adjustment; 4] = [
        Adjustment::IDENTITY,
        Adjustment {
            sign: SignConvention::Alternating,
            scale: ScaleConvention::One,
        },
        Adjustment {
            sign: SignConvention::Identity,
            scale: ScaleConvention::MassFactor,
        },
        Adjustment {
            sign: SignConvention::Alternating,
            scale: ScaleConvention::MassFactor,
        },
    ];

    pub fn is_identity(&self) -> bool {
        *self == Adjustment::IDENTITY
    }

    pub fn apply(&self, params: SpaceParams, j: usize, value: &Rational) -> Rational {
        let mut out = value.clone();
        if self.sign == SignConvention::Alternating && j % 2 == 1 {
            out = -out;
        }
        if self.scale == ScaleConvention::MassFactor {
            out *= params.mass_factor();
        }
        out
    }

    fn fits(&self, params: SpaceParams, oracle: &[Rational], printed: &[Option<Rational>]) -> bool {
        oracle
            .iter()
            .zip(printed)
            .enumerate()
            .all(|(j, (o, p))| p.as_ref().map_or(true, |p| *p == self.apply(params, j, o)))
    }
}

impl fmt::Display for Adjustment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match (self.sign, self.scale) {
            (SignConvention::Identity, ScaleConvention::One) => "identity",
            (SignConvention::Alternating, ScaleConvention::One) => "(-1)^j",
            (SignConvention::Identity, ScaleConvention::MassFactor) => "m!/(n)_m",
            (SignConvention::Alternating, ScaleConvention::MassFactor) => "(-1)^j*m!/(n)_m",
        };
        f.write_str(text)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyReport {
    pub params: SpaceParams,
    pub family: Family,
    pub oracle: Vec<Rational>,
    /// `None` where the printed formula has a pole.
    pub printed: Vec<Option<Rational>>,
    /// The adjustment mapping oracle to printed on every pole-free entry.
    pub adjustment: Option<Adjustment>,
    pub verdict: Verdict,
    pub entry_verdicts: Vec<Verdict>,
}

impl FamilyReport {
    fn new(
        params: SpaceParams,
        family: Family,
        oracle: Vec<Rational>,
        printed: Vec<Option<Rational>>,
    ) -> Self {
        let len = oracle.len().max(printed.len());
        let pad = |v: Vec<Option<Rational>>| {
            let mut v = v;
            v.resize(len, Some(Rational::zero()));
            v
        };
        let oracle: Vec<Rational> = pad(oracle.into_iter().map(Some).collect())
            .into_iter()
            .map(|x| x.expect("oracle entries are defined"))
            .collect();
        let printed = pad(printed);

        let adjustment = Adjustment::CANDIDATES
            .into_iter()
            .find(|a| a.fits(params, &oracle, &printed));
        let has_pole = printed.iter().any(Option::is_none);
        let verdict = match adjustment {
            None => Verdict::Mismatch,
            Some(_) if has_pole => Verdict::PoleUndefined,
            Some(a) if a.is_identity() => Verdict::ExactMatch,
            Some(_) => Verdict::MatchUpToConvention,
        };

        let entry_verdicts = oracle
            .iter()
            .zip(&printed)
            .enumerate()
            .map(|(j, (o, p))| match p {
                None => Verdict::PoleUndefined,
                Some(p) if p == o => Verdict::ExactMatch,
                Some(p) => {
                    let family_fit = adjustment.map_or(false, |a| a.apply(params, j, o) == *p);
                    let any_fit = Adjustment::CANDIDATES
                        .iter()
                        .any(|a| a.apply(params, j, o) == *p);
                    if family_fit || any_fit {
                        Verdict::MatchUpToConvention
                    } else {
                        Verdict::Mismatch
                    }
                }
            })
            .collect();

        Self {
            params,
            family,
            oracle,
            printed,
            adjustment,
            verdict,
            entry_verdicts,
        }
    }

    pub fn pole_flags(&self) -> Vec<bool> {
        self.printed.iter().map(Option::is_none).collect()
    }

    /// `{params, family, oracle, printed, adjustment, verdict, pole_flags}` with
    /// rationals rendered as `"p/q"` strings and poles as `null`.
    pub fn to_json(&self) -> Value {
        json!({
            "params": { "n": self.params.n(), "m": self.params.m() },
            "family": self.family.as_str(),
            "oracle": self.oracle.iter().map(render).collect::<Vec<_>>(),
            "printed": self
                .printed
                .iter()
                .map(|p| p.as_ref().map(render))
                .collect::<Vec<_>>(),
            "adjustment": self.adjustment.map(|a| a.to_string()),
            "verdict": self.verdict.as_str(),
            "pole_flags": self.pole_flags(),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConventionReport {
    pub params: SpaceParams,
    pub families: Vec<FamilyReport>,
}

impl ConventionReport {
    pub fn family(&self, family: Family) -> &FamilyReport {
        self.families
            .iter()
            .find(|r| r.family == family)
            .expect("every family is reported")
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.families.iter().map(FamilyReport::to_json).collect())
    }
}

/// Compare every printed coefficient formula with the exact oracle.
///
/// * `gamma`: printed `(-1)^j A_j(m,m,n-1,n-1)` against the monomial expansion
/// * `sigma`: printed double sum against `m!/(n)_m gamma_j`, the Laguerre-basis
///   coefficients of the multiplier polynomial
/// * `c`, `kappa`: hypergeometric closed forms against exact linearization
/// * `factored`: monomial coefficients of the literal factored form against
///   the multiplier polynomial
pub fn convention_report(params: SpaceParams) -> ConventionReport {
    let mass = params.mass_factor();
    let gamma = gamma_coeffs(params);
    let sigma_oracle = gamma.iter().map(|x| x * &mass).collect();
    let defined = |v: Vec<Rational>| v.into_iter().map(Some).collect::<Vec<_>>();
    let oracle_poly = symbol_poly(params, SymbolRep::Oracle);
    let literal_poly = factored_form_printed(params);
    let len = 2 * params.m() as usize + 1;
    let poly_coeffs = |p: &crate::rational::RationalPoly| (0..len).map(|j| p.coeff(j)).collect::<Vec<_>>();

    let families = vec![
        FamilyReport::new(
            params,
            Family::Gamma,
            gamma,
            defined(gamma_coeffs_printed(params)),
        ),
        FamilyReport::new(
            params,
            Family::Sigma,
            sigma_oracle,
            defined(sigma_coeffs_printed(params)),
        ),
        FamilyReport::new(
            params,
            Family::C,
            linearization_coeffs(params),
            linearization_coeffs_printed(params),
        ),
        FamilyReport::new(
            params,
            Family::Kappa,
            kappa_coeffs(params),
            kappa_coeffs_printed(params),
        ),
        FamilyReport::new(
            params,
            Family::Factored,
            poly_coeffs(&oracle_poly),
            defined(poly_coeffs(&literal_poly)),
        ),
    ];
    debug_assert!(families.iter().all(|f| f.oracle.len() == len));
    ConventionReport { params, families }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn report(n: u32, m: u32) -> ConventionReport {
        convention_report(SpaceParams::new(n, m).unwrap())
    }

    #[test]
    fn level_zero_is_exact() {
        for n in 1..4 {
            let r = report(n, 0);
            for f in [Family::Gamma, Family::Sigma, Family::C, Family::Kappa, Family::Factored] {
                assert_eq!(r.family(f).verdict, Verdict::ExactMatch, "n={n} {f}");
            }
        }
    }

    #[test]
    fn gamma_differs_by_alternating_sign() {
        for n in 1..4 {
            for m in 1..5 {
                let g = report(n, m).family(Family::Gamma).clone();
                assert_eq!(g.verdict, Verdict::MatchUpToConvention);
                assert_eq!(
                    g.adjustment.unwrap().sign,
                    SignConvention::Alternating,
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn sigma_differs_by_alternating_sign() {
        let s = report(1, 1).family(Family::Sigma).clone();
        assert_eq!(s.oracle, vec![int(1), int(-2), int(2)]);
        assert_eq!(s.printed, vec![Some(int(1)), Some(int(2)), Some(int(2))]);
        assert_eq!(s.adjustment.unwrap().to_string(), "(-1)^j");
        assert_eq!(s.verdict, Verdict::MatchUpToConvention);
    }

    #[test]
    fn hypergeometric_forms_plane_first_level() {
        let r = report(1, 1);
        let c = r.family(Family::C);
        assert_eq!(c.entry_verdicts[0], Verdict::PoleUndefined);
        assert_eq!(c.printed[2], Some(int(1)));
        assert_eq!(c.oracle[2], int(2));
        assert_eq!(c.entry_verdicts[2], Verdict::Mismatch);
        assert_eq!(c.pole_flags(), vec![true, false, false]);
        let kappa = r.family(Family::Kappa);
        assert_eq!(kappa.entry_verdicts[0], Verdict::PoleUndefined);
        assert_eq!(kappa.oracle[2], rat(1, 16));
    }

    #[test]
    fn literal_factored_form_verdicts() {
        assert_eq!(report(1, 3).family(Family::Factored).verdict, Verdict::ExactMatch);
        assert_eq!(report(2, 1).family(Family::Factored).verdict, Verdict::Mismatch);
    }

    #[test]
    fn json_shape() {
        let v = report(1, 1).family(Family::C).to_json();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = vec![
            "adjustment", "family", "oracle", "params", "pole_flags", "printed", "verdict",
        ];
        expected.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, expected);
        assert!(v["printed"][0].is_null());
        assert_eq!(v["oracle"][2], "2");
        assert_eq!(v["params"]["m"], 1);
    }
}
