//! Homogeneous fixed points of a fuzzified rule.
//!
//! The diagonal map `x -> g(x, x, x)` fixes exactly the zeros of
//! `d(x) = g(x,x,x) - x`. Roots in the unit interval are isolated with
//! Sturm counts, refined by bisection, and classified by the magnitude of
//! the diagonal-map derivative at the root.

use serde::Serialize;

use crate::algebra::{
    count_real_roots_over_reals, rational_to_string, unit_interval_roots, Polynomial,
};
use crate::error::Result;
use crate::logic::LogicSystem;
use crate::rules::{symbolic_local, LocalRule};

/// |g_diag'(root)| against 1, with a tight neutral band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Attracting,
    Repelling,
    Neutral,
}

const NEUTRAL_BAND: f64 = 1e-9;
const ROOT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Serialize)]
pub struct FixedPoint {
    pub value: f64,
    /// Exact value when bisection landed on a rational root.
    pub exact: Option<String>,
    pub stability: Stability,
    /// |g_diag'(value)|.
    pub derivative_magnitude: f64,
    /// |d(value)|.
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedPointReport {
    pub rule: u8,
    pub logic: String,
    /// d(x) = g(x,x,x) - x, coefficients by ascending degree.
    pub diagonal_polynomial: Polynomial,
    /// Distinct real roots of d over the whole real line.
    pub total_real_roots: usize,
    pub roots_in_unit_interval: Vec<FixedPoint>,
    /// True for exceptional rules, where d vanishes identically and every
    /// point of `[0,1]` is fixed.
    pub identically_zero: bool,
}

/// Fixed-point analysis of `g(x,x,x)` for the polynomial families.
pub fn diagonal_fixed_points(rule: &LocalRule, logic: LogicSystem) -> Result<FixedPointReport> {
    let g_diag = symbolic_local(rule, logic)?.diagonal();
    let d = &g_diag - &Polynomial::x();

    if d.is_zero() {
        return Ok(FixedPointReport {
            rule: rule.number(),
            logic: logic.to_string(),
            diagonal_polynomial: d,
            total_real_roots: 0,
            roots_in_unit_interval: Vec::new(),
            identically_zero: true,
        });
    }

    let total_real_roots = count_real_roots_over_reals(&d)?;
    let derivative = g_diag.derivative();
    let roots_in_unit_interval = unit_interval_roots(&d, ROOT_TOL)?
        .into_iter()
        .map(|root| {
            let magnitude = derivative.eval_f64(root.value).abs();
            let stability = classify(magnitude, NEUTRAL_BAND);
            FixedPoint {
                value: root.value,
                exact: root.exact.as_ref().map(rational_to_string),
                stability,
                derivative_magnitude: magnitude,
                residual: d.eval_f64(root.value).abs(),
            }
        })
        .collect();

    Ok(FixedPointReport {
        rule: rule.number(),
        logic: logic.to_string(),
        diagonal_polynomial: d,
        total_real_roots,
        roots_in_unit_interval,
        identically_zero: false,
    })
}

pub(crate) fn classify(derivative_magnitude: f64, band: f64) -> Stability {
    if (derivative_magnitude - 1.0).abs() <= band {
        Stability::Neutral
    } else if derivative_magnitude < 1.0 {
        Stability::Attracting
    } else {
        Stability::Repelling
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule110_under_sum_logic() {
        let report =
            diagonal_fixed_points(&LocalRule::from_number(110), LogicSystem::Cfms).unwrap();
        // d(x) = x - x^2 - x^3
        assert_eq!(
            report.diagonal_polynomial,
            Polynomial::from_integers(&[0, 1, -1, -1])
        );
        assert_eq!(report.total_real_roots, 3);
        let roots = &report.roots_in_unit_interval;
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].value, 0.0);
        assert_eq!(roots[0].stability, Stability::Repelling);
        assert!((roots[1].value - 0.618_033_988_749_894_8).abs() < 1e-10);
        assert_eq!(roots[1].stability, Stability::Attracting);
        // the conjugate root -(1+sqrt(5))/2 lies outside [0,1]
        for r in roots {
            assert!(r.residual <= 1e-10);
        }
    }

    #[test]
    fn constant_one_rule() {
        let report =
            diagonal_fixed_points(&LocalRule::from_number(255), LogicSystem::Cfms).unwrap();
        // d(x) = 1 - x, single fixed point at 1
        assert_eq!(
            report.diagonal_polynomial,
            Polynomial::from_integers(&[1, -1])
        );
        assert_eq!(report.roots_in_unit_interval.len(), 1);
        assert_eq!(report.roots_in_unit_interval[0].value, 1.0);
        assert_eq!(
            report.roots_in_unit_interval[0].stability,
            Stability::Attracting
        );
    }

    #[test]
    fn exceptional_rule_reports_identity() {
        let report =
            diagonal_fixed_points(&LocalRule::from_number(184), LogicSystem::Cfms).unwrap();
        assert!(report.identically_zero);
        assert!(report.roots_in_unit_interval.is_empty());
    }

    #[test]
    fn classification_is_stable_under_tighter_band() {
        let report =
            diagonal_fixed_points(&LocalRule::from_number(110), LogicSystem::Probabilistic)
                .unwrap();
        for root in &report.roots_in_unit_interval {
            assert_eq!(
                root.stability,
                classify(root.derivative_magnitude, NEUTRAL_BAND / 10.0)
            );
        }
    }

    #[test]
    fn unsupported_families_error() {
        assert!(diagonal_fixed_points(&LocalRule::from_number(110), LogicSystem::Zadeh).is_err());
    }
}
