//! Exact-rational complement calculus for log pairs.
//!
//! This crate mechanizes the coefficient-level arithmetic behind complements
//! of log divisors: minimal complement indices for boundaries on the
//! projective line and on general-position hyperplane arrangements,
//! exceptionality tests and the finite enumeration of exceptional standard
//! collections, the different-coefficient formula and its closure over
//! standard coefficients, resolution dual graphs of surface singularities
//! (negative definiteness, exact discrepancies, ADE recognition, branch
//! determinants), and the piecewise-linear log-canonical-threshold function
//! `sigma(alpha)` with its critical parameter `alpha0`.
//!
//! Everything is computed with arbitrary-precision rational arithmetic;
//! there is no floating point in the crate. All types are immutable after
//! construction and every operation is a pure function, so values can be
//! shared freely across threads.
//!
//! ```
//! use complements::curve::CurvePair;
//!
//! let pair = CurvePair::from_collection(&[2, 3, 5])?;
//! let report = pair.compl(100)?;
//! assert_eq!(report.n, 6);
//! assert!(report.klt);
//! assert!(pair.is_exceptional());
//! # Ok::<(), complements::Error>(())
//! ```
//!
//! # Layout
//!
//! - [`rational`], [`boundary`], [`sets`], [`registry`], [`rounding`] — the
//!   arithmetic substrate: exact scalars, boundaries `D = sum d_i D_i`,
//!   coefficient sets (`Msm`, `M_m^d`, interval unions), the `N_d` registry,
//!   and the n-complement coefficient inequality.
//! - [`curve`] — complements and exceptionality on `P^1`.
//! - [`arrangement`] — complements on hyperplane arrangements in `P^d`.
//! - [`adjunction`] — different coefficients and their closure.
//! - [`dualgraph`] — surface resolution graphs and DuVal classification.
//! - [`lct`] — the threshold function `sigma` and `alpha0`.
//! - [`fixtures`] — named example inputs shipped with the crate.

#![allow(clippy::result_large_err)]

pub mod adjunction;
pub mod arrangement;
pub mod boundary;
pub mod curve;
pub mod dualgraph;
pub mod error;
pub mod fixtures;
pub mod lct;
pub mod rational;
mod recip;
pub mod registry;
pub mod rounding;
pub mod sets;

pub use boundary::{Boundary, BoundaryEntry};
pub use error::{Error, Result};
pub use rational::Rational;
pub use registry::ComplementRegistry;
pub use sets::CoefficientSet;
