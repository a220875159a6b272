//! Rule numbering, disjunctive normal forms, and fuzzification.
//!
//! A rule number `n` in `0..=255` encodes the images `r_0..r_7` of the
//! eight neighborhood triples `000..111` (read as left, self, right), with
//! `n = Σ r_i 2^i`. The canonical DNF takes one conjunction per `i` with
//! `r_i = 1`; reinterpreting its connectives under a multi-valued logic
//! extends the rule from `{0,1}^3` to the unit cube.

use crate::algebra::MultiPoly;
use crate::error::{Error, Result};
use crate::logic::LogicSystem;
use crate::value::CellValue;

/// A local rule: its number, bits, and DNF term exponents.
///
/// Term `(d1, d2, d3)` for index `i` holds the binary digits of `i` from
/// left to right; digit 1 keeps the variable, digit 0 negates it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalRule {
    number: u8,
    terms: Vec<[u8; 3]>,
}

impl LocalRule {
    pub fn from_number(number: u8) -> Self {
        let terms = (0..8u8)
            .filter(|i| number >> i & 1 == 1)
            .map(|i| [i >> 2 & 1, i >> 1 & 1, i & 1])
            .collect();
        LocalRule { number, terms }
    }

    pub fn number(&self) -> u8 {
        self.number
    }

    pub fn bit(&self, i: u8) -> bool {
        debug_assert!(i < 8);
        self.number >> i & 1 == 1
    }

    pub fn dnf_terms(&self) -> &[[u8; 3]] {
        &self.terms
    }

    /// True when the all-zero neighborhood maps to zero, so a finite
    /// pattern in a zero background stays finite.
    pub fn is_quiescent(&self) -> bool {
        !self.bit(0)
    }
}

/// The classical rule as a bit lookup.
pub fn boolean_eval(rule: &LocalRule, x1: bool, x2: bool, x3: bool) -> bool {
    let index = (x1 as u8) << 2 | (x2 as u8) << 1 | x3 as u8;
    rule.bit(index)
}

/// DNF evaluation under any logic family. Exponent 0 means negation;
/// the CFMS disjunction inside a DNF is the plain uncapped sum, which
/// the constant-one rule bounds by 1.
pub fn eval_local<T: CellValue>(
    rule: &LocalRule,
    logic: LogicSystem,
    x1: &T,
    x2: &T,
    x3: &T,
) -> Result<T> {
    let inputs = [x1, x2, x3];
    for x in inputs {
        if matches!(logic, LogicSystem::Boolean) {
            if !x.is_zero() && !x.is_one() {
                return Err(Error::domain(format!(
                    "boolean rule evaluation needs inputs in {{0,1}}, got {}",
                    x.to_f64()
                )));
            }
        } else if *x < T::zero() || *x > T::one() {
            return Err(Error::domain(format!("value {} outside [0,1]", x.to_f64())));
        }
    }
    let mut acc: Option<T> = None;
    for term in &rule.terms {
        let mut conj: Option<T> = None;
        for (x, &digit) in inputs.iter().zip(term) {
            let literal = if digit == 1 {
                (*x).clone()
            } else {
                logic.negation_unchecked(*x)?
            };
            conj = Some(match conj {
                None => literal,
                Some(c) => logic.conjunction_unchecked(&c, &literal)?,
            });
        }
        let term_value = conj.expect("terms have three literals");
        acc = Some(match acc {
            None => term_value,
            Some(a) if matches!(logic, LogicSystem::Cfms) => a + &term_value,
            Some(a) => logic.disjunction_unchecked(&a, &term_value)?,
        });
    }
    Ok(acc.unwrap_or_else(T::zero).clamp_unit())
}

/// Images of the eight boolean triples, indexed `000..111`.
#[derive(Debug, Clone, PartialEq)]
pub struct LookupTable {
    pub outputs: [f64; 8],
}

impl LookupTable {
    pub fn get(&self, x1: bool, x2: bool, x3: bool) -> f64 {
        self.outputs[((x1 as usize) << 2) | ((x2 as usize) << 1) | x3 as usize]
    }

    /// The table of the classical rule itself.
    pub fn boolean(rule: &LocalRule) -> Self {
        let mut outputs = [0.0; 8];
        for (i, out) in outputs.iter_mut().enumerate() {
            *out = f64::from(boolean_eval(rule, i & 4 != 0, i & 2 != 0, i & 1 != 0));
        }
        LookupTable { outputs }
    }
}

/// Evaluates the fuzzified rule at the eight boolean triples.
pub fn lookup_table(rule: &LocalRule, logic: LogicSystem) -> LookupTable {
    let mut outputs = [0.0; 8];
    for (i, out) in outputs.iter_mut().enumerate() {
        let x1 = f64::from(i & 4 != 0);
        let x2 = f64::from(i & 2 != 0);
        let x3 = f64::from(i & 1 != 0);
        *out = eval_local(rule, logic, &x1, &x2, &x3)
            .expect("boolean triples are valid inputs for every family");
    }
    LookupTable { outputs }
}

/// Exact polynomial form of the fuzzified rule, for the families whose
/// connectives are polynomial. Disjunctions fold over DNF terms in
/// ascending index order; the probabilistic fold is associative and
/// commutative as a polynomial, so the order cannot matter.
pub fn symbolic_local(rule: &LocalRule, logic: LogicSystem) -> Result<MultiPoly> {
    let sym = logic.symbolic_connectives()?;
    let mut acc: Option<MultiPoly> = None;
    for term in &rule.terms {
        let mut conj: Option<MultiPoly> = None;
        for (axis, &digit) in term.iter().enumerate() {
            let var = MultiPoly::var(axis);
            let literal = if digit == 1 {
                var
            } else {
                (sym.negation)(&var)
            };
            conj = Some(match conj {
                None => literal,
                Some(c) => (sym.conjunction)(&c, &literal),
            });
        }
        let term_poly = conj.expect("terms have three literals");
        acc = Some(match acc {
            None => term_poly,
            Some(a) => (sym.disjunction)(&a, &term_poly),
        });
    }
    Ok(acc.unwrap_or_else(MultiPoly::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};

    #[test]
    fn dnf_term_indices() {
        let set_bits = |n: u8| -> Vec<u8> {
            let rule = LocalRule::from_number(n);
            (0..8).filter(|&i| rule.bit(i)).collect()
        };
        assert_eq!(set_bits(110), vec![1, 2, 3, 5, 6]);
        assert_eq!(set_bits(184), vec![3, 4, 5, 7]);
        assert!(LocalRule::from_number(0).dnf_terms().is_empty());
    }

    #[test]
    fn digit_convention_matches_worked_values() {
        // 3 = 011 and 5 = 101, digits read left to right
        let rule = LocalRule::from_number(0b0010_1000); // bits 3 and 5
        assert_eq!(rule.dnf_terms(), &[[0, 1, 1], [1, 0, 1]]);
    }

    #[test]
    fn number_round_trips_through_bits() {
        for n in 0..=255u8 {
            let rule = LocalRule::from_number(n);
            let rebuilt: u16 = (0..8).map(|i| (rule.bit(i) as u16) << i).sum();
            assert_eq!(rebuilt, n as u16);
            assert_eq!(rule.dnf_terms().len(), n.count_ones() as usize);
        }
    }

    #[test]
    fn boolean_eval_examples() {
        assert!(!boolean_eval(
            &LocalRule::from_number(110),
            true,
            true,
            true
        ));
        assert!(boolean_eval(
            &LocalRule::from_number(18),
            false,
            false,
            true
        ));
        assert!(boolean_eval(
            &LocalRule::from_number(184),
            true,
            false,
            false
        ));
    }

    #[test]
    fn dnf_agrees_with_bit_lookup_everywhere() {
        // pins the left-to-right digit convention for all 256 rules
        for n in 0..=255u8 {
            let rule = LocalRule::from_number(n);
            for i in 0..8usize {
                let bits = (i & 4 != 0, i & 2 != 0, i & 1 != 0);
                let dnf = eval_local(
                    &rule,
                    LogicSystem::Cfms,
                    &f64::from(bits.0),
                    &f64::from(bits.1),
                    &f64::from(bits.2),
                )
                .unwrap();
                assert_eq!(dnf, f64::from(boolean_eval(&rule, bits.0, bits.1, bits.2)));
            }
        }
    }

    #[test]
    fn eval_local_examples() {
        let r110 = LocalRule::from_number(110);
        let v = eval_local(&r110, LogicSystem::Cfms, &0.5, &0.75, &0.5).unwrap();
        assert_eq!(v, 0.6875);
        for logic in LogicSystem::multi_valued() {
            assert_eq!(eval_local(&r110, logic, &0.0, &0.0, &0.0).unwrap(), 0.0);
        }
        // .426 table, row 4: g(.426, .670524, .426) truncates to .689
        let v = eval_local(&r110, LogicSystem::Cfms, &0.426, &0.670524, &0.426).unwrap();
        assert_eq!(crate::algebra::truncate_decimals_f64(v, 3), "0.689");
        let r30 = LocalRule::from_number(30);
        assert_eq!(
            eval_local(&r30, LogicSystem::Cfms, &1.0, &1.0, &1.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn lookup_tables_match_boolean() {
        let r110 = LocalRule::from_number(110);
        let expected = [0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0];
        for logic in [
            LogicSystem::Boolean,
            LogicSystem::Cfms,
            LogicSystem::Probabilistic,
            LogicSystem::Product,
        ] {
            assert_eq!(lookup_table(&r110, logic).outputs, expected, "{logic}");
        }
        let zero = lookup_table(&LocalRule::from_number(0), LogicSystem::Zadeh);
        assert_eq!(zero.outputs, [0.0; 8]);
        let ones = lookup_table(&LocalRule::from_number(255), LogicSystem::Goedel);
        assert_eq!(ones.outputs, [1.0; 8]);
    }

    fn var(axis: usize) -> MultiPoly {
        MultiPoly::var(axis)
    }

    #[test]
    fn symbolic_cfms_forms() {
        let (x, y, z) = (var(0), var(1), var(2));
        let yz = &y * &z;
        let expect110 = &(&(&y + &z) - &yz) - &(&x * &yz);
        assert_eq!(
            symbolic_local(&LocalRule::from_number(110), LogicSystem::Cfms).unwrap(),
            expect110
        );

        // rule 18: (1 - x2)(x1 + x3 - 2 x1 x3)
        let two = MultiPoly::constant(rat(2, 1));
        let inner = &(&x + &z) - &(&two * &(&x * &z));
        let expect18 = &(&MultiPoly::one() - &y) * &inner;
        assert_eq!(
            symbolic_local(&LocalRule::from_number(18), LogicSystem::Cfms).unwrap(),
            expect18
        );

        // rule 184: x1 - x1 x2 + x2 x3
        let expect184 = &(&x - &(&x * &y)) + &(&y * &z);
        assert_eq!(
            symbolic_local(&LocalRule::from_number(184), LogicSystem::Cfms).unwrap(),
            expect184
        );

        assert_eq!(
            symbolic_local(&LocalRule::from_number(255), LogicSystem::Cfms).unwrap(),
            MultiPoly::one()
        );
        assert!(symbolic_local(&LocalRule::from_number(110), LogicSystem::Zadeh).is_err());
    }

    #[test]
    fn probabilistic_fold_order_is_immaterial() {
        // same fold done from the last term outward
        let rule = LocalRule::from_number(110);
        let sym = LogicSystem::Probabilistic.symbolic_connectives().unwrap();
        let mut rev: Option<MultiPoly> = None;
        for term in rule.dnf_terms().iter().rev() {
            let mut conj: Option<MultiPoly> = None;
            for (axis, &digit) in term.iter().enumerate() {
                let v = var(axis);
                let lit = if digit == 1 { v } else { (sym.negation)(&v) };
                conj = Some(match conj {
                    None => lit,
                    Some(c) => (sym.conjunction)(&c, &lit),
                });
            }
            let t = conj.unwrap();
            rev = Some(match rev {
                None => t,
                Some(acc) => (sym.disjunction)(&t, &acc),
            });
        }
        assert_eq!(
            symbolic_local(&rule, LogicSystem::Probabilistic).unwrap(),
            rev.unwrap()
        );
    }

    #[test]
    fn symbolic_matches_numeric_on_rationals() {
        let rule = LocalRule::from_number(110);
        let point = (rat(2, 7), rat(3, 5), rat(1, 3));
        for logic in [LogicSystem::Cfms, LogicSystem::Probabilistic] {
            let sym = symbolic_local(&rule, logic).unwrap();
            let direct: Rational = eval_local(&rule, logic, &point.0, &point.1, &point.2).unwrap();
            assert_eq!(sym.eval(&point.0, &point.1, &point.2), direct, "{logic}");
        }
    }
}
