//! Exact solvers for colored graph layout and interval sandwich instances.
//!
//! The library revolves around one fact: a k-colored graph admits a colored
//! layout if and only if it can be extended to a properly colored interval
//! graph by adding edges between differently colored vertices. Everything
//! here either solves one of the two formulations, translates witnesses
//! between them, or cross-checks the translation against brute force.
//!
//! Module map:
//! - [`graph`]: colored graphs, layouts, active sets, and the layout cost
//!   predicates everything else is defined in terms of.
//! - [`layout`]: exact vertex-separation and colored-layout solvers plus
//!   path-decomposition extraction and derived layout-cost metrics.
//! - [`interval`]: interval models, both witness translations, the interval
//!   sandwich solver, and certificate verification.
//! - [`oracle`]: deliberately slow brute-force reference implementations.
//! - [`catalog`]: exhaustive small-order instance catalogs for sweeps.
//! - [`fileio`]: the `.cg` / `.ivm` / layout file formats.
//! - [`generate`]: seeded random and planted-yes instance generators.

pub mod catalog;
pub mod error;
pub mod fileio;
pub mod generate;
pub mod graph;
pub mod interval;
pub mod layout;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{ActiveSet, ColoredGraph, EXACT_N_CAP, Layout};
pub use interval::{IcgCertificate, IntervalModel, VerifyReport};
pub use layout::{CvsResult, DerivedMetrics, NoReason, PathDecomposition};
