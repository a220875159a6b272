//! Certified root refinement by exact bisection.
//!
//! Bisection on rational midpoints with exact sign evaluation: slower than
//! Newton but the bracket is a proof. Plenty fast at the degrees handled
//! here (≤ 15).

use super::{isolate_real_roots, rat, rational_from_f64, rational_to_f64};
use super::{IsolatedRoot, Polynomial, Rational};
use crate::error::{Error, Result};

/// A refined real root with its certification data.
#[derive(Debug, Clone)]
pub struct RefinedRoot {
    /// Floating image of the root (bracket midpoint, or the exact value).
    pub value: f64,
    /// Final enclosing bracket; collapses to a point for exact roots.
    pub bracket: (Rational, Rational),
    /// The root as an exact rational when bisection landed on one.
    pub exact: Option<Rational>,
    /// |p(value)| in floating arithmetic.
    pub residual: f64,
}

const MAX_BISECTIONS: usize = 4096;

/// Shrinks a sign-changing bracket until its width is at most `tol`.
/// Requires `p(lo) * p(hi) < 0`.
pub fn refine_root(p: &Polynomial, lo: &Rational, hi: &Rational, tol: f64) -> Result<RefinedRoot> {
    if lo >= hi {
        return Err(Error::solver("bracket invalid: lo >= hi"));
    }
    let mut slo = p.sign_at(lo);
    let mut shi = p.sign_at(hi);
    if slo == 0 {
        return Ok(exact_root(p, lo.clone()));
    }
    if shi == 0 {
        return Ok(exact_root(p, hi.clone()));
    }
    if slo == shi {
        return Err(Error::solver("bracket invalid: no sign change"));
    }
    let tol_r = rational_from_f64(tol.max(f64::MIN_POSITIVE))?;
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    for _ in 0..MAX_BISECTIONS {
        if &hi - &lo <= tol_r {
            break;
        }
        let mid = (&lo + &hi) / rat(2, 1);
        let smid = p.sign_at(&mid);
        if smid == 0 {
            return Ok(exact_root(p, mid));
        }
        if smid == slo {
            lo = mid;
            slo = smid;
        } else {
            hi = mid;
            shi = smid;
        }
    }
    let _ = shi;
    let value = rational_to_f64(&((&lo + &hi) / rat(2, 1)));
    Ok(RefinedRoot {
        value,
        residual: p.eval_f64(value).abs(),
        bracket: (lo, hi),
        exact: None,
    })
}

fn exact_root(p: &Polynomial, r: Rational) -> RefinedRoot {
    let value = rational_to_f64(&r);
    RefinedRoot {
        value,
        residual: p.eval_f64(value).abs(),
        bracket: (r.clone(), r.clone()),
        exact: Some(r),
    }
}

/// Refines one isolated root down to `tol`.
pub fn refine_isolated(p: &Polynomial, root: &IsolatedRoot, tol: f64) -> Result<RefinedRoot> {
    match root {
        IsolatedRoot::Exact(r) => Ok(exact_root(p, r.clone())),
        IsolatedRoot::Bracket(lo, hi) => refine_root(p, lo, hi, tol),
    }
}

/// All distinct real roots of `p` in `[0, 1]`, refined to `tol`,
/// in increasing order.
pub fn unit_interval_roots(p: &Polynomial, tol: f64) -> Result<Vec<RefinedRoot>> {
    isolate_real_roots(p, &rat(0, 1), &rat(1, 1))?
        .iter()
        .map(|r| refine_isolated(p, r, tol))
        .collect()
}
