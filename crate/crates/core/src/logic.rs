//! The logic systems and their four connectives on `[0, 1]`.
//!
//! Seven families: classical boolean (defined on `{0, 1}` only) plus six
//! multi-valued systems — Łukasiewicz-p, Zadeh, CFMS, Gödel, product and
//! probabilistic. Restricted to `{0, 1}` every family reproduces the
//! classical truth tables; that equivalence is what makes the lookup
//! table of a rule independent of the logic.
//!
//! CFMS and probabilistic connectives also exist as exact polynomial
//! transforms, the basis for all symbolic analysis.

use std::fmt;
use std::str::FromStr;

use crate::algebra::MultiPoly;
use crate::error::{Error, Result};
use crate::value::CellValue;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogicSystem {
    /// Classical two-point logic; connectives are only defined on `{0, 1}`.
    Boolean,
    /// min / max / `1 - x`.
    Zadeh,
    /// Parametric family, `p >= 1`; `p = 1` is the common case.
    Lukasiewicz { p: f64 },
    /// min / max with the discontinuous negation `x = 0 ? 1 : 0`.
    Goedel,
    /// Product t-norm with the Gödel-style negation.
    Product,
    /// Product t-norm with `x + y - x*y` and `1 - x`.
    Probabilistic,
    /// Product conjunction and capped-sum disjunction, `1 - x`.
    Cfms,
}

impl LogicSystem {
    pub fn lukasiewicz(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::domain(format!(
                "lukasiewicz exponent p={p} must be >= 1"
            )));
        }
        Ok(LogicSystem::Lukasiewicz { p })
    }

    /// All six multi-valued families (Łukasiewicz at p = 1).
    pub fn multi_valued() -> [LogicSystem; 6] {
        [
            LogicSystem::Zadeh,
            LogicSystem::Lukasiewicz { p: 1.0 },
            LogicSystem::Goedel,
            LogicSystem::Product,
            LogicSystem::Probabilistic,
            LogicSystem::Cfms,
        ]
    }

    fn check<T: CellValue>(&self, x: &T) -> Result<()> {
        if matches!(self, LogicSystem::Boolean) {
            if !x.is_zero() && !x.is_one() {
                return Err(Error::domain(format!(
                    "boolean connectives are defined on {{0,1}} only, got {}",
                    x.to_f64()
                )));
            }
            return Ok(());
        }
        if *x < T::zero() || *x > T::one() {
            return Err(Error::domain(format!("value {} outside [0,1]", x.to_f64())));
        }
        Ok(())
    }

    pub fn negation<T: CellValue>(&self, x: &T) -> Result<T> {
        self.check(x)?;
        self.negation_unchecked(x)
    }

    pub fn conjunction<T: CellValue>(&self, x: &T, y: &T) -> Result<T> {
        self.check(x)?;
        self.check(y)?;
        self.conjunction_unchecked(x, y)
    }

    pub fn disjunction<T: CellValue>(&self, x: &T, y: &T) -> Result<T> {
        self.check(x)?;
        self.check(y)?;
        self.disjunction_unchecked(x, y)
    }

    pub fn implication<T: CellValue>(&self, x: &T, y: &T) -> Result<T> {
        self.check(x)?;
        self.check(y)?;
        let one = T::one;
        let v = match *self {
            LogicSystem::Boolean | LogicSystem::Probabilistic => {
                // 1 - x + x*y, which is ¬x ∨ y under these connectives
                (one() - x) + &(x.clone() * y)
            }
            LogicSystem::Zadeh => max(one() - x, y.clone()),
            LogicSystem::Lukasiewicz { p } => {
                if x <= y {
                    one()
                } else {
                    let xp = self.real_pow(x, p)?;
                    let yp = self.real_pow(y, p)?;
                    (one() - &xp) + &yp
                }
            }
            LogicSystem::Goedel => {
                if x <= y {
                    one()
                } else {
                    y.clone()
                }
            }
            LogicSystem::Product => {
                if x <= y {
                    one()
                } else {
                    // y/x for x > y; continuous limit 0 as y -> 0
                    y.clone() / x
                }
            }
            LogicSystem::Cfms => min(one(), (one() - x) + y),
        };
        Ok(v.clamp_unit())
    }

    pub(crate) fn negation_unchecked<T: CellValue>(&self, x: &T) -> Result<T> {
        let v = match self {
            LogicSystem::Goedel | LogicSystem::Product => {
                if x.is_zero() {
                    T::one()
                } else {
                    T::zero()
                }
            }
            _ => T::one() - x,
        };
        Ok(v.clamp_unit())
    }

    pub(crate) fn conjunction_unchecked<T: CellValue>(&self, x: &T, y: &T) -> Result<T> {
        let v = match *self {
            LogicSystem::Zadeh | LogicSystem::Goedel => min(x.clone(), y.clone()),
            LogicSystem::Boolean
            | LogicSystem::Cfms
            | LogicSystem::Product
            | LogicSystem::Probabilistic => x.clone() * y,
            LogicSystem::Lukasiewicz { p } => {
                let s = (self.real_pow(x, p)? + &self.real_pow(y, p)?) - &T::one();
                if s <= T::zero() {
                    T::zero()
                } else {
                    self.real_pow(&s, 1.0 / p)?
                }
            }
        };
        Ok(v.clamp_unit())
    }

    pub(crate) fn disjunction_unchecked<T: CellValue>(&self, x: &T, y: &T) -> Result<T> {
        let v = match *self {
            LogicSystem::Zadeh | LogicSystem::Goedel => max(x.clone(), y.clone()),
            LogicSystem::Boolean | LogicSystem::Product | LogicSystem::Probabilistic => {
                (x.clone() + y) - &(x.clone() * y)
            }
            LogicSystem::Cfms => min(T::one(), x.clone() + y),
            LogicSystem::Lukasiewicz { p } => {
                let s = self.real_pow(x, p)? + &self.real_pow(y, p)?;
                min(T::one(), self.real_pow(&s, 1.0 / p)?)
            }
        };
        Ok(v.clamp_unit())
    }

    fn real_pow<T: CellValue>(&self, x: &T, e: f64) -> Result<T> {
        if e == 1.0 {
            return Ok(x.clone());
        }
        x.powf(e).ok_or_else(|| {
            Error::unsupported("lukasiewicz p-th roots have no exact form; use the float backend")
        })
    }

    /// Whether DNF evaluation under this family is an exact polynomial in
    /// the inputs.
    pub fn has_polynomial_form(&self) -> bool {
        matches!(self, LogicSystem::Cfms | LogicSystem::Probabilistic)
    }

    pub fn symbolic_connectives(&self) -> Result<SymbolicConnectives> {
        match self {
            LogicSystem::Cfms => Ok(SymbolicConnectives {
                negation: |a| &MultiPoly::one() - a,
                conjunction: |a, b| a * b,
                // plain sum: safe inside a DNF because the terms of any
                // rule sum to at most the constant-one rule
                disjunction: |a, b| a + b,
            }),
            LogicSystem::Probabilistic => Ok(SymbolicConnectives {
                negation: |a| &MultiPoly::one() - a,
                conjunction: |a, b| a * b,
                disjunction: |a, b| &(a + b) - &(a * b),
            }),
            other => Err(Error::unsupported(format!(
                "no polynomial form for {other} connectives"
            ))),
        }
    }
}

fn min<T: PartialOrd>(a: T, b: T) -> T {
    if b < a {
        b
    } else {
        a
    }
}

fn max<T: PartialOrd>(a: T, b: T) -> T {
    if b > a {
        b
    } else {
        a
    }
}

/// Polynomial images of the connectives, defined for the CFMS and
/// probabilistic families.
#[derive(Clone, Copy)]
pub struct SymbolicConnectives {
    pub negation: fn(&MultiPoly) -> MultiPoly,
    pub conjunction: fn(&MultiPoly, &MultiPoly) -> MultiPoly,
    pub disjunction: fn(&MultiPoly, &MultiPoly) -> MultiPoly,
}

impl fmt::Display for LogicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicSystem::Boolean => write!(f, "boolean"),
            LogicSystem::Zadeh => write!(f, "zadeh"),
            LogicSystem::Lukasiewicz { p } => {
                if *p == 1.0 {
                    write!(f, "lukasiewicz")
                } else {
                    write!(f, "lukasiewicz:{p}")
                }
            }
            LogicSystem::Goedel => write!(f, "goedel"),
            LogicSystem::Product => write!(f, "product"),
            LogicSystem::Probabilistic => write!(f, "probabilistic"),
            LogicSystem::Cfms => write!(f, "cfms"),
        }
    }
}

impl FromStr for LogicSystem {
    type Err = Error;

    /// Accepts `boolean | zadeh | lukasiewicz[:p] | goedel | product |
    /// probabilistic | cfms`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "boolean" => Ok(LogicSystem::Boolean),
            "zadeh" => Ok(LogicSystem::Zadeh),
            "lukasiewicz" => Ok(LogicSystem::Lukasiewicz { p: 1.0 }),
            "goedel" | "godel" => Ok(LogicSystem::Goedel),
            "product" => Ok(LogicSystem::Product),
            "probabilistic" => Ok(LogicSystem::Probabilistic),
            "cfms" => Ok(LogicSystem::Cfms),
            other => {
                if let Some(p) = other.strip_prefix("lukasiewicz:") {
                    let p: f64 = p
                        .parse()
                        .map_err(|_| Error::domain(format!("bad lukasiewicz exponent '{p}'")))?;
                    LogicSystem::lukasiewicz(p)
                } else {
                    Err(Error::domain(format!("unknown logic family '{other}'")))
                }
            }
        }
    }
}
