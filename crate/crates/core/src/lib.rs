//! Elementary cellular automata under multi-valued logics.
//!
//! The canonical DNF of any rule in `0..=255`, reinterpreted through a
//! multi-valued logic, extends the rule from the boolean cube to `[0,1]^3`.
//! This crate evolves the resulting space-time diagrams on floating or
//! exact-rational backends, thresholds them against the classical
//! evolution, and analyses their asymptotics: diagonal limits, homogeneous
//! fixed points with attracting/repelling classification, exceptional-rule
//! detection, and Sturm-certified root counts for the polynomial forms.
//!
//! Sweeps and row stepping run data-parallel under the default `parallel`
//! feature; disabling it leaves a dependency-light sequential build with
//! the same API.
//!
//! # Example
//!
//! ```
//! use mvca_core::{Configuration, LocalRule, LogicSystem, SpaceTimeDiagram};
//!
//! let rule = LocalRule::from_number(110);
//! let seed = Configuration::single_seed(0.5f64)?;
//! let diagram = SpaceTimeDiagram::evolve(seed, &rule, LogicSystem::Cfms, 4)?;
//! assert_eq!(diagram.row(3).cells(), &[0.5, 0.875, 0.6875, 0.5]);
//!
//! // the limit along each left diagonal, solved from its fixed-point
//! // equation; diagonal 1 locks to 1 for any seed
//! let limits = mvca_core::analysis::solve_diagonal_limits(&rule, LogicSystem::Cfms, 0.5, 8)?;
//! assert_eq!(limits.entries[1].value, 1.0);
//! assert_eq!(limits.entries[7].value, 0.6);
//! # Ok::<(), mvca_core::Error>(())
//! ```

pub mod algebra;
pub mod analysis;
pub mod error;
pub mod evolution;
pub mod logic;
pub mod rules;
pub mod value;

pub use algebra::{MultiPoly, Polynomial, Rational};
pub use error::{Error, Result};
pub use evolution::{BooleanDiagram, CellShade, Configuration, SpaceTimeDiagram};
pub use logic::LogicSystem;
pub use rules::{LocalRule, LookupTable};
pub use value::CellValue;
