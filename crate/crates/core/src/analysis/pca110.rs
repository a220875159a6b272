//! The first solvable diagonal limit of probabilistic rule 110.
//!
//! Restricting the probabilistic form of rule 110 to the first diagonal
//! equation `L = g(0, a, L)` and clearing the factor `a` leaves the cubic
//! `(a^2 - a) L^3 + (2a - a^2) L^2 - 2L + 1 = 0`. For every seed in
//! `(0, 1)` it has exactly one root in the unit interval; the Sturm count
//! certifies that before bisection refines it.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use num_traits::One;
use serde::Serialize;

use crate::algebra::{count_real_roots, rat, rational_to_f64, refine_root, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::logic::LogicSystem;
use crate::rules::{symbolic_local, LocalRule};

const REFINE_TOL: f64 = 1e-12;

/// A certified root of the limit cubic.
#[derive(Debug, Clone, Serialize)]
pub struct CubicCertificate {
    pub seed: f64,
    pub root: f64,
    /// Sturm count of roots in (0, 1); always 1 on success.
    pub count_in_unit_interval: usize,
    /// Final bisection bracket.
    pub bracket: (f64, f64),
    /// p(0) * p(1), reported negative as the existence witness.
    pub endpoint_sign_product: f64,
    /// |p(root)|.
    pub residual: f64,
}

/// `(a^2 - a) L^3 + (2a - a^2) L^2 - 2L + 1` with exact coefficients.
pub fn limit_cubic_poly(a: &Rational) -> Polynomial {
    let a2 = a * a;
    Polynomial::from_coeffs(vec![
        Rational::one(),
        rat(-2, 1),
        rat(2, 1) * a - &a2,
        a2 - a,
    ])
}

/// Certifies uniqueness in (0,1) by Sturm count, then bisects the root.
pub fn limit_cubic(a: &Rational) -> Result<CubicCertificate> {
    if *a <= rat(0, 1) || *a >= rat(1, 1) {
        return Err(Error::domain(format!("seed {a} outside (0,1)")));
    }
    let p = limit_cubic_poly(a);
    let at_zero = p.eval(&rat(0, 1));
    let at_one = p.eval(&rat(1, 1));
    let sign_product = rational_to_f64(&(&at_zero * &at_one));
    if sign_product >= 0.0 {
        return Err(Error::solver(format!(
            "existence witness failed: p(0) p(1) = {sign_product} is not negative"
        )));
    }
    let count = count_real_roots(&p, &rat(0, 1), &rat(1, 1))?;
    if count != 1 {
        return Err(Error::solver(format!(
            "uniqueness violated: {count} roots in (0,1) for seed {a}"
        )));
    }
    let refined = refine_root(&p, &rat(0, 1), &rat(1, 1), REFINE_TOL)?;
    Ok(CubicCertificate {
        seed: rational_to_f64(a),
        root: refined.value,
        count_in_unit_interval: count,
        bracket: (
            rational_to_f64(&refined.bracket.0),
            rational_to_f64(&refined.bracket.1),
        ),
        endpoint_sign_product: sign_product,
        residual: refined.residual,
    })
}

/// Certified roots for the equispaced seeds `k / (count + 1)`,
/// `k = 1..=count`.
pub fn limit_cubic_sweep(count: usize) -> Result<Vec<CubicCertificate>> {
    #[cfg(feature = "parallel")]
    {
        (1..=count as i64)
            .into_par_iter()
            .map(|k| limit_cubic(&Rational::new(k.into(), (count as i64 + 1).into())))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    limit_cubic_sweep_seq(count)
}

/// Sequential sibling of [`limit_cubic_sweep`].
pub fn limit_cubic_sweep_seq(count: usize) -> Result<Vec<CubicCertificate>> {
    (1..=count as i64)
        .map(|k| limit_cubic(&Rational::new(k.into(), (count as i64 + 1).into())))
        .collect()
}

/// The cubic rederived from the expanded probabilistic form: substitute
/// `x1 = 0`, `x2 = a`, subtract `L`, and divide out the seed factor.
/// Used as an independent cross-check of the hand-entered coefficients.
pub fn limit_cubic_from_expansion(a: &Rational) -> Result<Polynomial> {
    let g = symbolic_local(&LocalRule::from_number(110), LogicSystem::Probabilistic)?;
    let restricted = g.substitute_first_two(&rat(0, 1), a);
    let equation = &restricted - &Polynomial::x();
    equation.exact_div(&Polynomial::constant(a.clone()))
}
