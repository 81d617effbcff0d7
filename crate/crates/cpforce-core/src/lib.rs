//! Boundary-dependent energy shift and Casimir-Polder force of an
//! isotropically polarizable two-level atom near a non-dispersive dielectric
//! half-space, for substrate and environment temperatures that need not
//! coincide.
//!
//! The shift splits into three additive parts: a zero-point part, an
//! equilibrium thermal part weighted by the environment temperature, and an
//! out-of-equilibrium part carried entirely by the evanescent modes and
//! weighted by the difference of the substrate and environment Bose factors.
//! Each part is computed by adaptive quadrature over the half-space response
//! kernels; closed-form asymptotic blocks for the six distance/temperature
//! regimes cross-validate the numerics and a regime classifier decides where
//! each block applies.

pub mod asym;
pub mod constants;
pub mod engine;
pub mod error;
pub mod green;
pub mod kernels;
pub mod model;
pub mod quad;
pub mod validate;

pub use error::CpError;
pub use model::{
    nondimensionalize, AtomSpec, AtomState, DimensionlessParams, Geometry, MediumSpec,
    PartStatus, ShiftBreakdown, ShiftPart, ShiftUnit, ThermalConfig,
};
