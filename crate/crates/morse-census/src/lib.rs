//! Exact counts of equivalence classes of excellent Morse functions on the
//! 2-sphere.
//!
//! Everything here is integer or rational arithmetic over arbitrary-precision
//! numbers; there is no floating point anywhere. Each headline count is
//! computed by several independent routes which the [`verify`] module checks
//! against one another:
//!
//! - [`homology`]: homological classes via a confined lattice-path dynamic
//!   program, a reflection-principle binomial expression, and the Catalan
//!   closed form `C_{m+1} C_m`.
//! - [`profiles`]: planar Morse profiles via the closed form
//!   `binom(3n+1, n) / (n+1)`, a deconstruction recurrence, and Lagrange
//!   inversion of `w (1-w)^2`.
//! - [`geometric`]: geometric classes via a two-parameter integer recurrence,
//!   a rescaled-table recurrence over rationals, and inversion of a power
//!   series defined by an elliptic-type integral.
//! - [`trees`]: concrete labelled Morse trees; brute-force enumeration over
//!   Prüfer sequences serves as the independent oracle for the geometric
//!   counts and for profile extraction.
//! - [`topology`]: the partition move graph whose closed-path counts bound
//!   (and for small orders give) the topological classification, plus
//!   standard-Young-tableau counting three ways.
//!
//! The [`census`] module assembles the summary table exposed by the
//! `morse-census` command-line tool.

pub mod bivariate;
pub mod census;
pub mod combinat;
pub mod geometric;
pub mod homology;
pub mod profiles;
pub mod series;
pub mod topology;
pub mod trees;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
