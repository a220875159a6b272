//! Trivariate polynomials with exact rational coefficients.
//!
//! These hold expanded local rules such as the cubic form of rule 110 and
//! the degree-15-diagonal expansion of its probabilistic counterpart.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rational_from_str, rational_pow, rational_to_f64, rational_to_string};
use super::{Polynomial, Rational};

/// Polynomial in three variables, stored as a map from exponent triples
/// to nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<[u32; 3], Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0, 0, 0], c);
        }
        MultiPoly { terms }
    }

    /// The bare variable `x1`, `x2` or `x3` (axis 0, 1 or 2).
    pub fn var(axis: usize) -> Self {
        assert!(axis < 3, "variable axis out of range");
        let mut exps = [0u32; 3];
        exps[axis] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Rational::one());
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: [u32; 3]) -> Rational {
        self.terms
            .get(&exps)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e[0] + e[1] + e[2])
            .max()
            .unwrap_or(0)
    }

    fn insert(&mut self, exps: [u32; 3], c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x1: &Rational, x2: &Rational, x3: &Rational) -> Rational {
        let point = [x1, x2, x3];
        let powers: Vec<Vec<Rational>> = (0..3)
            .map(|axis| {
                let max = self.terms.keys().map(|e| e[axis]).max().unwrap_or(0);
                let mut table = Vec::with_capacity(max as usize + 1);
                table.push(Rational::one());
                for k in 1..=max {
                    let prev = table[(k - 1) as usize].clone();
                    table.push(prev * point[axis]);
                }
                table
            })
            .collect();
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            acc += c
                * &powers[0][exps[0] as usize]
                * &powers[1][exps[1] as usize]
                * &powers[2][exps[2] as usize];
        }
        acc
    }

    pub fn eval_f64(&self, x1: f64, x2: f64, x3: f64) -> f64 {
        self.terms
            .iter()
            .map(|(exps, c)| {
                rational_to_f64(c)
                    * x1.powi(exps[0] as i32)
                    * x2.powi(exps[1] as i32)
                    * x3.powi(exps[2] as i32)
            })
            .sum()
    }

    /// Substitutes the same variable for all three axes and collects a
    /// univariate polynomial: the diagonal of the rule.
    pub fn diagonal(&self) -> Polynomial {
        let deg = self.total_degree() as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (exps, c) in &self.terms {
            let d = (exps[0] + exps[1] + exps[2]) as usize;
            coeffs[d] = &coeffs[d] + c;
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Pins `x1` and `x2` to rational constants, leaving a univariate
    /// polynomial in `x3`.
    pub fn substitute_first_two(&self, x1: &Rational, x2: &Rational) -> Polynomial {
        let deg = self.terms.keys().map(|e| e[2]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (exps, c) in &self.terms {
            let factor = rational_pow(x1, exps[0]) * rational_pow(x2, exps[1]);
            let d = exps[2] as usize;
            coeffs[d] = &coeffs[d] + &(c * factor);
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.insert(*exps, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.insert(*exps, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (axis, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", axis + 1)?,
                    _ => write!(f, "*x{}^{e}", axis + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    e1: u32,
    e2: u32,
    e3: u32,
    coeff: String,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(e, c)| TermRecord {
                e1: e[0],
                e2: e[1],
                e3: e[2],
                coeff: rational_to_string(c),
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut out = MultiPoly::zero();
        for r in records {
            let c = rational_from_str(&r.coeff).map_err(|e| D::Error::custom(e.to_string()))?;
            out.insert([r.e1, r.e2, r.e3], c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    /// y + z - yz - xyz, the cubic local form of rule 110.
    fn rule110_form() -> MultiPoly {
        let (x, y, z) = (MultiPoly::var(0), MultiPoly::var(1), MultiPoly::var(2));
        let yz = &y * &z;
        &(&(&y + &z) - &yz) - &(&x * &yz)
    }

    #[test]
    fn diagonal_collects_total_degree() {
        // substituting x for all variables gives 2x - x^2 - x^3
        let d = rule110_form().diagonal();
        assert_eq!(d, Polynomial::from_integers(&[0, 2, -1, -1]));
    }

    #[test]
    fn eval_zero_poly() {
        assert!(MultiPoly::zero()
            .eval(&rat(1, 3), &rat(2, 3), &rat(1, 7))
            .is_zero());
    }

    #[test]
    fn mul_is_eval_homomorphic() {
        let a = rule110_form();
        let b = &(&MultiPoly::one() - &MultiPoly::var(0)) * &MultiPoly::var(2);
        let p = (rat(1, 3), rat(3, 7), rat(5, 11));
        let lhs = (&a * &b).eval(&p.0, &p.1, &p.2);
        let rhs = a.eval(&p.0, &p.1, &p.2) * b.eval(&p.0, &p.1, &p.2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_matches_eval() {
        let a = rule110_form();
        let (c1, c2, z) = (rat(2, 5), rat(1, 7), rat(3, 4));
        let uni = a.substitute_first_two(&c1, &c2);
        assert_eq!(uni.eval(&z), a.eval(&c1, &c2, &z));
    }

    #[test]
    fn serde_round_trip() {
        let a = rule110_form();
        let json = serde_json::to_string(&a).unwrap();
        let back: MultiPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
