//! Partial-wave scattering for compactly supported radial wells.
//!
//! The crate computes regular solutions of the radial Schrödinger equation,
//! phase shifts and their continuous branches, Levinson winding checks,
//! the Wronskian transparency determinant with its zero scans, a numerical
//! non-transparency certificate for a two-well configuration, and the
//! spectral flow of a diagonal-plus-rank-one model operator on `ℓ²`.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod cli;
pub mod error;
pub mod model_l2;
mod ode;
pub mod potentials;
pub mod radial;
pub mod roots;
pub mod scattering;
pub mod specfun;
pub mod transparency;

pub use error::{Error, Result};

/// Version string embedded in every emitted artifact.
pub const TOOL_VERSION: &str = concat!("partialwave ", env!("CARGO_PKG_VERSION"));
