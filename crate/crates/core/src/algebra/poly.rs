//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rational_from_str, rational_to_string, Rational};
use crate::error::{Error, Result};

/// Polynomial in one variable, coefficient at index `i` multiplying `x^i`.
/// The zero polynomial stores no coefficients; otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial { coeffs: vec![c] }.trimmed()
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Polynomial { coeffs }.trimmed()
    }

    /// Convenience constructor from integer coefficients, index = degree.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial {
            coeffs: coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Floating Horner evaluation over the coefficient images in `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rational_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Polynomial { coeffs }.trimmed()
    }

    /// Euclidean division, `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if divisor.is_zero() {
            return Err(Error::solver("polynomial division by zero"));
        }
        let dlead = divisor.leading_coeff();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg && !rem.is_empty() {
            let rdeg = rem.len() - 1;
            let factor = rem.last().unwrap() / &dlead;
            if factor.is_zero() {
                rem.pop();
                continue;
            }
            quot[rdeg - ddeg] = factor.clone();
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let idx = rdeg - ddeg + i;
                rem[idx] = &rem[idx] - &(dc * &factor);
            }
            rem.pop();
        }
        Ok((
            Polynomial { coeffs: quot }.trimmed(),
            Polynomial { coeffs: rem }.trimmed(),
        ))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::solver("inexact polynomial division"))
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone().monic();
        let mut b = other.clone().monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    fn monic(self) -> Polynomial {
        if self.is_zero() {
            return self;
        }
        let lead = self.leading_coeff();
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| c / &lead).collect(),
        }
    }

    /// `self / gcd(self, self')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::solver("undefined chain: zero polynomial"));
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            Ok(self.clone())
        } else {
            self.exact_div(&g)
        }
    }

    /// Sign of the exact evaluation at `x`: -1, 0, or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial { coeffs }.trimmed()
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial { coeffs }.trimmed()
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial { coeffs }.trimmed()
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = if first || !c.is_negative() {
                c.clone()
            } else {
                -c
            };
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*x")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(rational_to_string).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| rational_from_str(s).map_err(|e| D::Error::custom(e.to_string())))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn golden_poly() -> Polynomial {
        // x^2 + x - 1
        Polynomial::from_integers(&[-1, 1, 1])
    }

    #[test]
    fn eval_examples() {
        assert_eq!(golden_poly().eval(&rat(0, 1)), rat(-1, 1));
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        assert!(golden_poly().eval_f64(phi).abs() < 1e-12);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            golden_poly().derivative(),
            Polynomial::from_integers(&[1, 2])
        );
        assert_eq!(
            Polynomial::constant(rat(7, 1)).derivative(),
            Polynomial::zero()
        );
        // x - x^2 - x^3 differentiates to 1 - 2x - 3x^2
        let diag = Polynomial::from_integers(&[0, 1, -1, -1]);
        assert_eq!(diag.derivative(), Polynomial::from_integers(&[1, -2, -3]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = Polynomial::from_integers(&[3, -2, 0, 5, 1]);
        let b = Polynomial::from_integers(&[1, 1, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn squarefree_drops_multiplicity() {
        // (x-1)^2 (x+2) -> roots {1, -2}
        let p = &(&Polynomial::from_integers(&[-1, 1]) * &Polynomial::from_integers(&[-1, 1]))
            * &Polynomial::from_integers(&[2, 1]);
        let sf = p.squarefree_part().unwrap();
        assert_eq!(sf.degree(), Some(2));
        assert!(sf.eval(&rat(1, 1)).is_zero());
        assert!(sf.eval(&rat(-2, 1)).is_zero());
    }

    #[test]
    fn serde_round_trip() {
        let p = Polynomial::from_coeffs(vec![rat(-1, 2), rat(3, 7)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["-1/2","3/7"]"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
