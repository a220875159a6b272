//! Exceptional rules: those whose CFMS diagonal fixes every point.
//!
//! A rule is exceptional when `g(x,x,x) - x` vanishes identically as an
//! exact polynomial, i.e. the whole unit interval consists of fixed
//! points. The classification sweeps all 256 rules symbolically.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::algebra::Polynomial;
use crate::logic::LogicSystem;
use crate::rules::{symbolic_local, LocalRule};

fn is_exceptional(n: u8) -> bool {
    let g = symbolic_local(&LocalRule::from_number(n), LogicSystem::Cfms)
        .expect("CFMS always has a polynomial form");
    (&g.diagonal() - &Polynomial::x()).is_zero()
}

/// All rule numbers whose CFMS diagonal function is identically zero.
pub fn classify_exceptional() -> Vec<u8> {
    #[cfg(feature = "parallel")]
    {
        let mut out: Vec<u8> = (0u16..=255)
            .into_par_iter()
            .map(|n| n as u8)
            .filter(|&n| is_exceptional(n))
            .collect();
        out.sort_unstable();
        out
    }
    #[cfg(not(feature = "parallel"))]
    classify_exceptional_seq()
}

/// Sequential sibling of [`classify_exceptional`].
pub fn classify_exceptional_seq() -> Vec<u8> {
    (0u16..=255)
        .map(|n| n as u8)
        .filter(|&n| is_exceptional(n))
        .collect()
}
