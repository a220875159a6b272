//! Numeric backends for cell values.
//!
//! Connectives and evolution are generic over [`CellValue`], instantiated
//! at `f64` (fast, default) and [`Rational`] (exact, for table-grade
//! verification). Exact values have no real p-th roots, so the
//! Łukasiewicz family is floating-only.

use std::ops::{Add, Div, Mul, Sub};

use num_traits::{One, Zero};

use crate::algebra::{rational_from_f64, rational_to_f64, Rational};

pub trait CellValue:
    Clone
    + PartialOrd
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Send
    + Sync
{
    /// Whether arithmetic in this backend is exact.
    const EXACT: bool;

    /// Minimum cells per work unit when a row is stepped in parallel.
    /// Cheap float cells batch; exact cells carry big-integer work and
    /// split individually.
    const PAR_CHUNK: usize;

    fn from_rational(r: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact rational image of the value.
    fn to_rational(&self) -> Rational;

    /// `self` raised to a real power, or `None` when the backend cannot
    /// represent the result.
    fn powf(&self, exp: f64) -> Option<Self>;

    /// Clamps to `[0, 1]`. A no-op for exact values, which cannot stray;
    /// for floats it removes rounding dust on provably-bounded results.
    fn clamp_unit(self) -> Self;

    /// Shortest faithful rendering for output files.
    fn render(&self) -> String;
}

impl CellValue for f64 {
    const EXACT: bool = false;
    const PAR_CHUNK: usize = 512;

    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_rational(&self) -> Rational {
        rational_from_f64(*self).expect("cell values are finite")
    }

    fn powf(&self, exp: f64) -> Option<Self> {
        Some(f64::powf(*self, exp))
    }

    fn clamp_unit(self) -> Self {
        self.clamp(0.0, 1.0)
    }

    fn render(&self) -> String {
        format!("{self}")
    }
}

impl CellValue for Rational {
    const EXACT: bool = true;
    const PAR_CHUNK: usize = 1;

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }

    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn powf(&self, _exp: f64) -> Option<Self> {
        None
    }

    fn clamp_unit(self) -> Self {
        self
    }

    fn render(&self) -> String {
        crate::algebra::rational_to_string(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn backends_agree_on_conversions() {
        let r = rat(3, 4);
        assert_eq!(f64::from_rational(&r), 0.75);
        assert_eq!(0.75f64.to_rational(), r);
        assert_eq!(Rational::from_rational(&r), r);
    }

    #[test]
    fn exact_backend_has_no_real_powers() {
        assert!(CellValue::powf(&rat(1, 2), 2.0).is_none());
        assert_eq!(CellValue::powf(&0.25f64, 0.5), Some(0.5));
    }
}
