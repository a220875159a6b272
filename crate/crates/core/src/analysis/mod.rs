//! Asymptotics of the fuzzified rules: diagonal limits and closed forms,
//! golden-ratio convergence, homogeneous fixed points, exceptional-rule
//! classification, and the probabilistic rule-110 cubic.

mod exceptional;
mod fixed_points;
mod limits;
mod pca110;

pub use exceptional::{classify_exceptional, classify_exceptional_seq};
pub use fixed_points::{diagonal_fixed_points, FixedPoint, FixedPointReport, Stability};
pub use limits::{
    empirical_limit, fibonacci, golden_convergence_check, rule110_closed_form_limit,
    solve_diagonal_limits, DiagonalLimits, EmpiricalLimit, GoldenConvergence, LimitEntry,
    LimitProvenance,
};
pub use pca110::{
    limit_cubic, limit_cubic_from_expansion, limit_cubic_poly, limit_cubic_sweep,
    limit_cubic_sweep_seq, CubicCertificate,
};
