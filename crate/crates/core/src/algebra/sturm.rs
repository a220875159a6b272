//! Sturm chains and certified real-root counting.
//!
//! Chains are computed over exact rationals on the squarefree part of the
//! input, so counts are counts of distinct real roots and no floating
//! sign ambiguity can creep in.

use num_traits::Zero;

use super::{rat, Polynomial, Rational};
use crate::error::{Error, Result};

/// The remainder chain `p0 = squarefree(p)`, `p1 = p0'`,
/// `p_{k+1} = -rem(p_{k-1}, p_k)`, ending at a nonzero constant.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Result<Self> {
        let p0 = p.squarefree_part()?;
        let mut chain = vec![p0.clone()];
        if p0.degree().unwrap_or(0) >= 1 {
            chain.push(p0.derivative());
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
                if r.is_zero() {
                    break;
                }
                chain.push(-&r);
                if chain.last().unwrap().degree() == Some(0) {
                    break;
                }
            }
        }
        Ok(SturmChain { chain })
    }

    /// The squarefree polynomial the chain was built from.
    pub fn squarefree(&self) -> &Polynomial {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.chain
    }

    /// Number of sign variations of the chain evaluated at `x`.
    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_neg_infinity(&self) -> usize {
        variations(self.chain.iter().map(|p| match p.degree() {
            None => 0,
            Some(d) => {
                let s = leading_sign(p);
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }))
    }

    fn variations_at_pos_infinity(&self) -> usize {
        variations(self.chain.iter().map(leading_sign))
    }

    /// Distinct real roots in `(lo, hi]`; both endpoints must be
    /// non-roots of the squarefree part.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        debug_assert!(lo < hi);
        debug_assert!(self.squarefree().sign_at(lo) != 0);
        debug_assert!(self.squarefree().sign_at(hi) != 0);
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Distinct real roots over the whole real line.
    pub fn count_over_reals(&self) -> usize {
        self.variations_at_neg_infinity() - self.variations_at_pos_infinity()
    }
}

fn leading_sign(p: &Polynomial) -> i8 {
    use num_traits::Signed;
    let c = p.leading_coeff();
    if c.is_zero() {
        0
    } else if c.is_negative() {
        -1
    } else {
        1
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Largest `point - 1/2^k` below `point` such that `q` has no root in
/// `[point - 1/2^k, point)`. `q` must not vanish identically.
fn nudge_below(q: &Polynomial, point: &Rational) -> Result<Rational> {
    let deflated = deflate_at(q, point)?;
    let chain = SturmChain::new(&deflated)?;
    let mut delta = rat(1, 2);
    for _ in 0..4096 {
        let candidate = point - &delta;
        if deflated.sign_at(&candidate) != 0 && chain.count_in(&candidate, point) == 0 {
            return Ok(candidate);
        }
        delta /= rat(2, 1);
    }
    Err(Error::solver("endpoint nudge did not converge"))
}

/// Symmetric counterpart of [`nudge_below`], above `point`.
fn nudge_above(q: &Polynomial, point: &Rational) -> Result<Rational> {
    let deflated = deflate_at(q, point)?;
    let chain = SturmChain::new(&deflated)?;
    let mut delta = rat(1, 2);
    for _ in 0..4096 {
        let candidate = point + &delta;
        if deflated.sign_at(&candidate) != 0 && chain.count_in(point, &candidate) == 0 {
            return Ok(candidate);
        }
        delta /= rat(2, 1);
    }
    Err(Error::solver("endpoint nudge did not converge"))
}

/// Divides out `(x - point)` if `point` is a root, leaving a polynomial
/// that does not vanish at `point`.
fn deflate_at(q: &Polynomial, point: &Rational) -> Result<Polynomial> {
    let mut out = q.clone();
    while out.sign_at(point) == 0 {
        if out.is_zero() {
            return Err(Error::solver("undefined chain: zero polynomial"));
        }
        let linear = Polynomial::from_coeffs(vec![-point, Rational::from_integer(1.into())]);
        out = out.exact_div(&linear)?;
    }
    Ok(out)
}

/// Distinct real roots of `p` in `(lo, hi]`. If an endpoint happens to be
/// a root it is nudged outward by an exact dyadic step, so endpoint roots
/// are counted.
pub fn count_real_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::domain(format!("empty interval ({lo}, {hi}]")));
    }
    let chain = SturmChain::new(p)?;
    let q = chain.squarefree();
    let lo = if q.sign_at(lo) == 0 {
        nudge_below(q, lo)?
    } else {
        lo.clone()
    };
    let hi = if q.sign_at(hi) == 0 {
        nudge_above(q, hi)?
    } else {
        hi.clone()
    };
    Ok(chain.count_in(&lo, &hi))
}

/// Distinct real roots of `p` over the whole real line.
pub fn count_real_roots_over_reals(p: &Polynomial) -> Result<usize> {
    Ok(SturmChain::new(p)?.count_over_reals())
}

/// A single real root, either hit exactly on a rational point or
/// enclosed in an open bracket where the squarefree part changes sign.
#[derive(Debug, Clone, PartialEq)]
pub enum IsolatedRoot {
    Exact(Rational),
    Bracket(Rational, Rational),
}

/// Isolates all distinct real roots of `p` in the closed interval
/// `[lo, hi]`, in increasing order.
pub fn isolate_real_roots(
    p: &Polynomial,
    lo: &Rational,
    hi: &Rational,
) -> Result<Vec<IsolatedRoot>> {
    if lo > hi {
        return Err(Error::domain(format!("empty interval [{lo}, {hi}]")));
    }
    let chain = SturmChain::new(p)?;
    let q = chain.squarefree().clone();
    let mut out = Vec::new();

    let lo_is_root = q.sign_at(lo) == 0;
    let hi_is_root = lo != hi && q.sign_at(hi) == 0;
    // interior search range, stepped past any endpoint roots
    let inner_lo = if lo_is_root {
        nudge_above(&q, lo)?
    } else {
        lo.clone()
    };
    let inner_hi = if hi_is_root {
        nudge_below(&q, hi)?
    } else {
        hi.clone()
    };

    if lo_is_root {
        out.push(IsolatedRoot::Exact(lo.clone()));
    }
    if inner_lo < inner_hi {
        isolate_rec(&chain, &q, &inner_lo, &inner_hi, &mut out)?;
    }
    if hi_is_root {
        out.push(IsolatedRoot::Exact(hi.clone()));
    }
    Ok(out)
}

fn isolate_rec(
    chain: &SturmChain,
    q: &Polynomial,
    lo: &Rational,
    hi: &Rational,
    out: &mut Vec<IsolatedRoot>,
) -> Result<()> {
    match chain.count_in(lo, hi) {
        0 => Ok(()),
        1 => {
            out.push(IsolatedRoot::Bracket(lo.clone(), hi.clone()));
            Ok(())
        }
        _ => {
            let mid = (lo + hi) / rat(2, 1);
            if q.sign_at(&mid) == 0 {
                let below = nudge_below(q, &mid)?;
                let above = nudge_above(q, &mid)?;
                isolate_rec(chain, q, lo, &below, out)?;
                out.push(IsolatedRoot::Exact(mid));
                isolate_rec(chain, q, &above, hi, out)
            } else {
                isolate_rec(chain, q, lo, &mid, out)?;
                isolate_rec(chain, q, &mid, hi, out)
            }
        }
    }
}
