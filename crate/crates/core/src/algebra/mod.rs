//! Exact rational arithmetic and polynomial machinery.
//!
//! Univariate and trivariate polynomials over arbitrary-precision
//! rationals, Sturm chains with certified real-root counting, and
//! bisection-based root refinement. Everything here is exact except the
//! final conversion of refined roots to `f64`.

mod multipoly;
mod poly;
mod roots;
mod sturm;

pub use multipoly::MultiPoly;
pub use poly::Polynomial;
pub use roots::{refine_isolated, refine_root, unit_interval_roots, RefinedRoot};
pub use sturm::{
    count_real_roots, count_real_roots_over_reals, isolate_real_roots, IsolatedRoot, SturmChain,
};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (zero is `0/1`).
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exact rational value of a finite `f64`.
pub fn rational_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::domain(format!("{x} is not a finite number")))
}

/// Rational-to-float conversion that stays accurate for numerators and
/// denominators far beyond the `f64` range (deep exact evolutions produce
/// denominators with hundreds of thousands of bits).
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    if r.is_zero() {
        return 0.0;
    }
    let numer = r.numer().abs();
    let denom = r.denom().clone();
    let shift = denom.bits() as i64 - numer.bits() as i64 + 64;
    let quotient = if shift >= 0 {
        (numer << shift as usize) / denom
    } else {
        numer / (denom << (-shift) as usize)
    };
    let mut v = quotient.to_f64().unwrap_or(f64::INFINITY);
    let exp = (-shift).clamp(-1_000_000, 1_000_000);
    // apply 2^exp in two powi steps so the intermediate cannot overflow
    v *= 2f64.powi(exp.clamp(-1000, 1000) as i32);
    v *= 2f64.powi((exp - exp.clamp(-1000, 1000)).clamp(-1000, 1000) as i32);
    if r.is_negative() {
        -v
    } else {
        v
    }
}

/// Renders a rational as `numerator/denominator`.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `n`, `n/d`, or a plain decimal such as `0.426` (read exactly,
/// so `0.426` becomes `213/500`).
pub fn rational_from_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::domain(format!("cannot parse '{s}' as a rational"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int = if int.is_empty() || int == "-" {
            format!("{int}0")
        } else {
            int.to_string()
        };
        let int_part: BigInt = int.parse().map_err(|_| bad())?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let numer = int_part.abs() * &scale + frac_part;
        let numer = if s.starts_with('-') { -numer } else { numer };
        return Ok(Rational::new(numer, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from(n))
}

/// Decimal truncation toward zero at `k` digits, computed exactly.
pub fn truncate_decimals(r: &Rational, k: usize) -> String {
    let scale = BigInt::from(10u32).pow(k as u32);
    let scaled = (r.abs() * Rational::from(scale.clone())).trunc();
    let units = scaled.numer() / &scale;
    let frac = scaled.numer() - &units * &scale;
    let sign = if r.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if k == 0 {
        format!("{sign}{units}")
    } else {
        format!("{sign}{units}.{frac:0>width$}", width = k)
    }
}

/// Decimal truncation of an `f64`, exact with respect to the stored value.
pub fn truncate_decimals_f64(v: f64, k: usize) -> String {
    match Rational::from_float(v) {
        Some(r) => truncate_decimals(&r, k),
        None => format!("{v}"),
    }
}

/// Integer power of a rational by repeated multiplication.
pub(crate) fn rational_pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}
