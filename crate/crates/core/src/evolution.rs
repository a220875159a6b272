//! Space-time diagrams: configurations, stepping, diagonals, thresholding.
//!
//! A configuration is a finite window of cells in an infinite zero
//! background. Stepping widens the window by one cell on each side and
//! trims exactly-zero margins, so single-seed runs grow along their light
//! cone and nothing else is stored. Cells of a row depend only on the
//! previous row, which makes row stepping data-parallel; with the
//! `parallel` feature (default) the per-cell map runs on rayon, without it
//! the same code runs sequentially.

use serde_json::json;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::algebra::rat;
use crate::error::{Error, Result};
use crate::logic::LogicSystem;
use crate::rules::{eval_local, LocalRule};
use crate::value::CellValue;

/// A finite row of cell values; everything outside is exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration<T> {
    cells: Vec<T>,
    leftmost: i64,
}

impl<T: CellValue> Configuration<T> {
    /// Single value at the origin. The seed must lie in `(0, 1]`.
    pub fn single_seed(a: T) -> Result<Self> {
        if a <= T::zero() || a > T::one() {
            return Err(Error::domain(format!("seed {} outside (0,1]", a.to_f64())));
        }
        Ok(Configuration {
            cells: vec![a],
            leftmost: 0,
        })
    }

    /// Finite initial string with its leftmost cell at `leftmost`.
    pub fn from_cells(leftmost: i64, cells: Vec<T>) -> Result<Self> {
        for c in &cells {
            if *c < T::zero() || *c > T::one() {
                return Err(Error::domain(format!(
                    "cell value {} outside [0,1]",
                    c.to_f64()
                )));
            }
        }
        Ok(Configuration { cells, leftmost }.trimmed())
    }

    fn trimmed(mut self) -> Self {
        while self.cells.last().is_some_and(|c| c.is_zero()) {
            self.cells.pop();
        }
        let lead_zeros = self.cells.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.cells.drain(..lead_zeros);
            self.leftmost += lead_zeros as i64;
        }
        if self.cells.is_empty() {
            self.leftmost = 0;
        }
        self
    }

    /// Value at absolute position `i`; background zero outside the window.
    pub fn get(&self, i: i64) -> T {
        if i < self.leftmost {
            return T::zero();
        }
        self.cells
            .get((i - self.leftmost) as usize)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn cells(&self) -> &[T] {
        &self.cells
    }

    pub fn leftmost(&self) -> i64 {
        self.leftmost
    }

    pub fn rightmost(&self) -> i64 {
        self.leftmost + self.cells.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

fn check_quiescent(rule: &LocalRule) -> Result<()> {
    if rule.is_quiescent() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "rule {} maps 000 to 1; a finite window in a zero background cannot represent its evolution",
            rule.number()
        )))
    }
}

/// One synchronous update over the widened window, margins trimmed.
pub fn step<T: CellValue>(
    config: &Configuration<T>,
    rule: &LocalRule,
    logic: LogicSystem,
) -> Result<Configuration<T>> {
    check_quiescent(rule)?;
    if config.is_empty() {
        return Ok(config.clone());
    }
    let lo = config.leftmost() - 1;
    let hi = config.rightmost() + 1;
    #[cfg(feature = "parallel")]
    let cells: Result<Vec<T>> = (0..(hi - lo + 1) as usize)
        .into_par_iter()
        .with_min_len(T::PAR_CHUNK)
        .map(|k| {
            let i = lo + k as i64;
            eval_local(
                rule,
                logic,
                &config.get(i - 1),
                &config.get(i),
                &config.get(i + 1),
            )
        })
        .collect();
    #[cfg(not(feature = "parallel"))]
    let cells: Result<Vec<T>> = (lo..=hi)
        .map(|i| {
            eval_local(
                rule,
                logic,
                &config.get(i - 1),
                &config.get(i),
                &config.get(i + 1),
            )
        })
        .collect();
    Ok(Configuration {
        cells: cells?,
        leftmost: lo,
    }
    .trimmed())
}

/// [`step`] forced onto one thread regardless of the `parallel` feature;
/// the benchmark baseline.
pub fn step_seq<T: CellValue>(
    config: &Configuration<T>,
    rule: &LocalRule,
    logic: LogicSystem,
) -> Result<Configuration<T>> {
    check_quiescent(rule)?;
    if config.is_empty() {
        return Ok(config.clone());
    }
    let lo = config.leftmost() - 1;
    let hi = config.rightmost() + 1;
    let cells: Result<Vec<T>> = (lo..=hi)
        .map(|i| {
            eval_local(
                rule,
                logic,
                &config.get(i - 1),
                &config.get(i),
                &config.get(i + 1),
            )
        })
        .collect();
    Ok(Configuration {
        cells: cells?,
        leftmost: lo,
    }
    .trimmed())
}

/// Rows of an evolution, row `t` holding the configuration at time `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceTimeDiagram<T> {
    rule: LocalRule,
    logic: LogicSystem,
    rows: Vec<Configuration<T>>,
}

impl<T: CellValue> SpaceTimeDiagram<T> {
    pub fn evolve(
        initial: Configuration<T>,
        rule: &LocalRule,
        logic: LogicSystem,
        steps: usize,
    ) -> Result<Self> {
        Self::evolve_with(initial, rule, logic, steps, step)
    }

    /// Sequential sibling of [`SpaceTimeDiagram::evolve`].
    pub fn evolve_seq(
        initial: Configuration<T>,
        rule: &LocalRule,
        logic: LogicSystem,
        steps: usize,
    ) -> Result<Self> {
        Self::evolve_with(initial, rule, logic, steps, step_seq)
    }

    fn evolve_with(
        initial: Configuration<T>,
        rule: &LocalRule,
        logic: LogicSystem,
        steps: usize,
        stepper: fn(&Configuration<T>, &LocalRule, LogicSystem) -> Result<Configuration<T>>,
    ) -> Result<Self> {
        check_quiescent(rule)?;
        let mut rows = Vec::with_capacity(steps + 1);
        rows.push(initial);
        for _ in 0..steps {
            let next = stepper(rows.last().unwrap(), rule, logic)?;
            rows.push(next);
        }
        Ok(SpaceTimeDiagram {
            rule: rule.clone(),
            logic,
            rows,
        })
    }

    pub fn rule(&self) -> &LocalRule {
        &self.rule
    }

    pub fn logic(&self) -> LogicSystem {
        self.logic
    }

    pub fn rows(&self) -> &[Configuration<T>] {
        &self.rows
    }

    pub fn row(&self, t: usize) -> &Configuration<T> {
        &self.rows[t]
    }

    pub fn steps(&self) -> usize {
        self.rows.len() - 1
    }

    /// Bounding window `(leftmost, rightmost)` over all rows.
    pub fn bounds(&self) -> (i64, i64) {
        let lo = self
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(Configuration::leftmost)
            .min()
            .unwrap_or(0);
        let hi = self
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(Configuration::rightmost)
            .max()
            .unwrap_or(0);
        (lo, hi)
    }

    /// Left diagonal `m`: for each row `t >= m`, the cell `m` positions to
    /// the right of the row's leading (leftmost nonzero) cell. Diagonal 0
    /// is the leading edge itself.
    pub fn diagonal(&self, m: usize) -> Result<Vec<T>> {
        if m >= self.rows.len() {
            return Err(Error::domain(format!(
                "diagonal {m} out of range for {} rows",
                self.rows.len()
            )));
        }
        self.rows[m..]
            .iter()
            .map(|row| {
                if row.is_empty() {
                    return Err(Error::domain(
                        "row is identically zero; leading edge undefined",
                    ));
                }
                Ok(row.get(row.leftmost() + m as i64))
            })
            .collect()
    }

    /// Three-way coloring against the 1/2 threshold.
    pub fn threshold(&self) -> BooleanDiagram {
        let half = T::from_rational(&rat(1, 2));
        let rows = self
            .rows
            .iter()
            .map(|row| ShadeRow {
                leftmost: row.leftmost(),
                shades: row
                    .cells()
                    .iter()
                    .map(|c| {
                        if *c > half {
                            CellShade::Black
                        } else if *c < half {
                            CellShade::White
                        } else {
                            CellShade::Undecided
                        }
                    })
                    .collect(),
            })
            .collect();
        BooleanDiagram { rows }
    }
}

/// Thresholded cell color: black above 1/2, white below, undecided at
/// exactly 1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellShade {
    White,
    Black,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct ShadeRow {
    leftmost: i64,
    shades: Vec<CellShade>,
}

/// The thresholded (trit) view of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanDiagram {
    rows: Vec<ShadeRow>,
}

impl BooleanDiagram {
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Shade at row `t`, absolute position `i`; white outside the window.
    pub fn get(&self, t: usize, i: i64) -> CellShade {
        let row = &self.rows[t];
        if i < row.leftmost {
            return CellShade::White;
        }
        row.shades
            .get((i - row.leftmost) as usize)
            .copied()
            .unwrap_or(CellShade::White)
    }

    fn row_span(&self, t: usize) -> (i64, i64) {
        let row = &self.rows[t];
        if row.shades.is_empty() {
            (0, -1)
        } else {
            (row.leftmost, row.leftmost + row.shades.len() as i64 - 1)
        }
    }

    pub fn contains_undecided(&self) -> bool {
        self.rows
            .iter()
            .any(|r| r.shades.contains(&CellShade::Undecided))
    }
}

/// First row at which the thresholded evolution from seed `a` differs
/// from the boolean evolution from seed 1 (an undecided cell counts as a
/// difference), or `None` when they agree through `t_max`.
pub fn agreement_horizon(
    rule: &LocalRule,
    logic: LogicSystem,
    a: f64,
    t_max: usize,
) -> Result<Option<usize>> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::domain(format!("seed {a} outside (0,1)")));
    }
    let fuzzy =
        SpaceTimeDiagram::evolve(Configuration::single_seed(a)?, rule, logic, t_max)?.threshold();
    let boolean = SpaceTimeDiagram::evolve(
        Configuration::single_seed(1.0)?,
        rule,
        LogicSystem::Boolean,
        t_max,
    )?
    .threshold();
    for t in 0..=t_max {
        let (flo, fhi) = fuzzy.row_span(t);
        let (blo, bhi) = boolean.row_span(t);
        let lo = flo.min(blo);
        let hi = fhi.max(bhi);
        for i in lo..=hi {
            let f = fuzzy.get(t, i);
            if f == CellShade::Undecided || f != boolean.get(t, i) {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

/// File renderings of diagrams: CSV, JSON, PGM (grayscale), PBM (bitmap).
pub mod render {
    use super::*;
    use crate::algebra::truncate_decimals;

    /// One CSV line per time step over the bounding window, optional exact
    /// decimal truncation at `trunc` digits.
    pub fn to_csv<T: CellValue>(d: &SpaceTimeDiagram<T>, trunc: Option<usize>) -> String {
        let (lo, hi) = d.bounds();
        let mut out = String::new();
        for row in d.rows() {
            let line: Vec<String> = (lo..=hi)
                .map(|i| {
                    let v = row.get(i);
                    match trunc {
                        Some(k) => truncate_decimals(&v.to_rational(), k),
                        None => v.render(),
                    }
                })
                .collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Structured dump with absolute offsets per row. Exact cells render
    /// as `numerator/denominator` strings, floating cells as numbers.
    pub fn to_json<T: CellValue>(
        d: &SpaceTimeDiagram<T>,
        seed: Option<&str>,
        initial: Option<&str>,
    ) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = d
            .rows()
            .iter()
            .enumerate()
            .map(|(t, row)| {
                let cells: Vec<serde_json::Value> = row
                    .cells()
                    .iter()
                    .map(|c| {
                        if T::EXACT {
                            json!(c.render())
                        } else {
                            json!(c.to_f64())
                        }
                    })
                    .collect();
                json!({ "t": t, "left": row.leftmost(), "cells": cells })
            })
            .collect();
        json!({
            "schema": 1,
            "rule": d.rule().number(),
            "logic": d.logic().to_string(),
            "backend": if T::EXACT { "exact" } else { "float" },
            "steps": d.steps(),
            "seed": seed,
            "initial": initial,
            "rows": rows,
        })
    }

    /// Binary P5 grayscale over the bounding window, pixel = round(255 v).
    pub fn to_pgm<T: CellValue>(d: &SpaceTimeDiagram<T>) -> Vec<u8> {
        let (lo, hi) = d.bounds();
        let width = (hi - lo + 1) as usize;
        let height = d.rows().len();
        let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
        for row in d.rows() {
            for i in lo..=hi {
                let v = row.get(i).to_f64().clamp(0.0, 1.0);
                out.push((v * 255.0).round() as u8);
            }
        }
        out
    }

    /// Plain P1 bitmap of the thresholded diagram; black maps to 1.
    /// Undecided cells also map to 1, and the flag in the result reports
    /// whether any were present so callers can warn.
    pub fn to_pbm(d: &BooleanDiagram) -> (String, bool) {
        let lo = (0..d.num_rows())
            .map(|t| d.row_span(t).0)
            .min()
            .unwrap_or(0);
        let hi = (0..d.num_rows())
            .map(|t| d.row_span(t).1)
            .max()
            .unwrap_or(0);
        let width = (hi - lo + 1).max(1) as usize;
        let mut out = format!("P1\n{width} {}\n", d.num_rows());
        for t in 0..d.num_rows() {
            let bits: Vec<&str> = (lo..=hi)
                .map(|i| match d.get(t, i) {
                    CellShade::White => "0",
                    CellShade::Black | CellShade::Undecided => "1",
                })
                .collect();
            out.push_str(&bits.join(" "));
            out.push('\n');
        }
        (out, d.contains_undecided())
    }

    /// Terminal rendering: `#` black, `.` white, `?` undecided.
    pub fn to_text(d: &BooleanDiagram) -> Vec<String> {
        let lo = (0..d.num_rows())
            .map(|t| d.row_span(t).0)
            .min()
            .unwrap_or(0);
        let hi = (0..d.num_rows())
            .map(|t| d.row_span(t).1)
            .max()
            .unwrap_or(0);
        (0..d.num_rows())
            .map(|t| {
                (lo..=hi)
                    .map(|i| match d.get(t, i) {
                        CellShade::White => '.',
                        CellShade::Black => '#',
                        CellShade::Undecided => '?',
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};

    fn rule110() -> LocalRule {
        LocalRule::from_number(110)
    }

    #[test]
    fn step_from_single_seed() {
        let c = Configuration::single_seed(0.5).unwrap();
        let next = step(&c, &rule110(), LogicSystem::Cfms).unwrap();
        assert_eq!(next.cells(), &[0.5, 0.5]);
        assert_eq!(next.leftmost(), -1);
    }

    #[test]
    fn step_widens_and_computes() {
        let c = Configuration::from_cells(-2, vec![0.5, 0.75, 0.5]).unwrap();
        let next = step(&c, &rule110(), LogicSystem::Cfms).unwrap();
        assert_eq!(next.cells(), &[0.5, 0.875, 0.6875, 0.5]);
    }

    #[test]
    fn zero_configuration_is_fixed() {
        let c = Configuration::from_cells(0, vec![0.0, 0.0]).unwrap();
        assert!(c.is_empty());
        let next = step(&c, &rule110(), LogicSystem::Cfms).unwrap();
        assert!(next.is_empty());
    }

    #[test]
    fn non_quiescent_rules_are_rejected() {
        let odd = LocalRule::from_number(111);
        let c = Configuration::single_seed(0.5).unwrap();
        assert!(matches!(
            step(&c, &odd, LogicSystem::Cfms),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn evolve_matches_exact_table() {
        let seed = Configuration::single_seed(rat(1, 2)).unwrap();
        let d = SpaceTimeDiagram::evolve(seed, &rule110(), LogicSystem::Cfms, 3).unwrap();
        assert_eq!(
            d.row(3).cells(),
            &[rat(1, 2), rat(7, 8), rat(11, 16), rat(1, 2)]
        );
    }

    #[test]
    fn light_cone_for_single_seed() {
        let seed = Configuration::single_seed(0.5).unwrap();
        let d = SpaceTimeDiagram::evolve(seed, &rule110(), LogicSystem::Cfms, 24).unwrap();
        for (t, row) in d.rows().iter().enumerate() {
            assert!(row.len() <= t + 1);
            // no growth to the right of the seed column under rule 110
            assert!(row.rightmost() <= 0);
            assert_eq!(row.leftmost(), -(t as i64));
        }
    }

    #[test]
    fn parallel_and_sequential_steppers_agree() {
        let seed = Configuration::single_seed(0.426).unwrap();
        let a = SpaceTimeDiagram::evolve(seed.clone(), &rule110(), LogicSystem::Cfms, 32).unwrap();
        let b = SpaceTimeDiagram::evolve_seq(seed, &rule110(), LogicSystem::Cfms, 32).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn diagonal_indexing() {
        let seed = Configuration::single_seed(0.5).unwrap();
        let d = SpaceTimeDiagram::evolve(seed, &rule110(), LogicSystem::Cfms, 12).unwrap();
        let d0 = d.diagonal(0).unwrap();
        assert!(d0.iter().all(|v| *v == 0.5));
        let d1 = d.diagonal(1).unwrap();
        // first entries: rows 1, 2, 3 one step inside the leading edge
        assert_eq!(&d1[1..4], &[0.75, 0.875, 0.9375]);
        let d2 = d.diagonal(2).unwrap();
        assert_eq!(d2[1], 0.6875);
        assert!(d.diagonal(13).is_err());
    }

    #[test]
    fn boolean_embedding_matches_bit_rule() {
        // evolving a 0/1 string under any logic equals the boolean rule
        use crate::rules::boolean_eval;
        let rule = LocalRule::from_number(90);
        let string = [1.0, 0.0, 1.0, 1.0, 0.0, 1.0];
        for logic in LogicSystem::multi_valued() {
            let c = Configuration::from_cells(0, string.to_vec()).unwrap();
            let next = step(&c, &rule, logic).unwrap();
            for i in next.leftmost()..=next.rightmost() {
                let expect = boolean_eval(
                    &rule,
                    c.get(i - 1) == 1.0,
                    c.get(i) == 1.0,
                    c.get(i + 1) == 1.0,
                );
                assert_eq!(next.get(i), f64::from(expect), "{logic} at {i}");
            }
        }
    }

    #[test]
    fn threshold_trits() {
        let seed = Configuration::from_cells(0, vec![0.95, 0.5, 0.09]).unwrap();
        let d = SpaceTimeDiagram::evolve(seed, &rule110(), LogicSystem::Cfms, 0).unwrap();
        let b = d.threshold();
        assert_eq!(b.get(0, 0), CellShade::Black);
        assert_eq!(b.get(0, 1), CellShade::Undecided);
        assert_eq!(b.get(0, 2), CellShade::White);
        assert_eq!(b.get(0, 99), CellShade::White);
        assert!(b.contains_undecided());
    }

    #[test]
    fn agreement_horizon_cases() {
        // derived by direct row computation: under the product family the
        // row-2 midpoint is a^2, white for a = 0.6 while the boolean cell
        // is black
        let h = agreement_horizon(&rule110(), LogicSystem::Product, 0.6, 12).unwrap();
        assert_eq!(h, Some(2));
        let h = agreement_horizon(&rule110(), LogicSystem::Cfms, 0.51, 12).unwrap();
        assert_eq!(h, Some(3));
        // a below 1/2 already disagrees at the seed row
        let h = agreement_horizon(&rule110(), LogicSystem::Cfms, 0.3, 12).unwrap();
        assert_eq!(h, Some(0));
        // a = 0.95 agrees with the boolean run through row 7
        let h = agreement_horizon(&rule110(), LogicSystem::Cfms, 0.95, 7).unwrap();
        assert_eq!(h, None);
        assert!(agreement_horizon(&rule110(), LogicSystem::Cfms, 1.0, 3).is_err());
    }

    #[test]
    fn evolve_is_deterministic() {
        let seed = Configuration::single_seed(0.337).unwrap();
        let a = SpaceTimeDiagram::evolve(seed.clone(), &rule110(), LogicSystem::Probabilistic, 40)
            .unwrap();
        let b = SpaceTimeDiagram::evolve(seed, &rule110(), LogicSystem::Probabilistic, 40).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn exact_and_float_backends_agree_shallow() {
        let ef = SpaceTimeDiagram::evolve(
            Configuration::single_seed(0.5f64).unwrap(),
            &rule110(),
            LogicSystem::Cfms,
            12,
        )
        .unwrap();
        let ex = SpaceTimeDiagram::evolve(
            Configuration::single_seed(rat(1, 2)).unwrap(),
            &rule110(),
            LogicSystem::Cfms,
            12,
        )
        .unwrap();
        for t in 0..=12 {
            let (f, x) = (ef.row(t), ex.row(t));
            assert_eq!(f.leftmost(), x.leftmost());
            for i in f.leftmost()..=f.rightmost() {
                assert!((f.get(i) - x.get(i).to_f64()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn renders_are_wellformed() {
        let seed = Configuration::single_seed(0.5).unwrap();
        let d = SpaceTimeDiagram::evolve(seed, &rule110(), LogicSystem::Cfms, 4).unwrap();
        let csv = render::to_csv(&d, Some(4));
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.lines().nth(4).unwrap().contains("0.6601"));
        let j = render::to_json(&d, Some("0.5"), None);
        assert_eq!(j["schema"], 1);
        assert_eq!(j["rows"].as_array().unwrap().len(), 5);
        let pgm = render::to_pgm(&d);
        assert!(pgm.starts_with(b"P5\n5 5\n255\n"));
        assert_eq!(pgm.len(), b"P5\n5 5\n255\n".len() + 25);
        let (pbm, undecided) = render::to_pbm(&d.threshold());
        assert!(pbm.starts_with("P1\n5 5\n"));
        assert!(undecided); // the 0.5 seed thresholds to undecided

        let exact = SpaceTimeDiagram::evolve(
            Configuration::single_seed(rat(1, 2)).unwrap(),
            &rule110(),
            LogicSystem::Cfms,
            3,
        )
        .unwrap();
        let csv = render::to_csv(&exact, None);
        assert!(csv.contains("11/16"));
        let _: Rational = rat(11, 16);
    }
}
